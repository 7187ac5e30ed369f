//! Rooted ordered coloured trees and their two graded Hopf structures:
//! concatenation with the pruning coproduct, and the dual pair of grafting
//! with the deconcatenation coproduct.
//!
//! A tree is stored as the ordered list of its root branches, each a colour
//! together with the subtree above it; the trivial tree has no branches. The
//! canonical string encoding writes `(c` on edge descent and `)` on ascent,
//! and trees order length-then-lexicographically on that encoding.

use std::collections::BTreeSet;

use itertools::Itertools;
use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::GradedHopf;
use crate::lincomb::{BasisKey, Coeff, LinComb, Tensor2};

/// Default cap on the size of an enumerated graded component.
pub const DEFAULT_ENUM_CAP: u128 = 200_000;

/// A rooted ordered tree with edges coloured by positive integers.
///
/// JSON form: nested arrays of `[colour, subtree]` pairs, the trivial tree
/// being `[]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u32, RocTree)>")]
#[serde(into = "Vec<(u32, RocTree)>")]
pub struct RocTree {
    children: Vec<(u32, RocTree)>,
}

impl TryFrom<Vec<(u32, RocTree)>> for RocTree {
    type Error = Error;
    fn try_from(children: Vec<(u32, RocTree)>) -> Result<Self> {
        RocTree::new(children)
    }
}

impl From<RocTree> for Vec<(u32, RocTree)> {
    fn from(t: RocTree) -> Self {
        t.children
    }
}

impl RocTree {
    /// The trivial tree: a root and nothing else.
    pub fn trivial() -> Self {
        RocTree { children: vec![] }
    }

    pub fn new(children: Vec<(u32, RocTree)>) -> Result<Self> {
        for (c, _) in &children {
            if *c == 0 {
                return Err(Error::ColourRange {
                    colour: 0,
                    max: u32::MAX,
                });
            }
        }
        Ok(RocTree { children })
    }

    pub fn children(&self) -> &[(u32, RocTree)] {
        &self.children
    }

    pub fn is_trivial(&self) -> bool {
        self.children.is_empty()
    }

    /// Number of edges; the grading weight.
    pub fn weight(&self) -> usize {
        self.children.iter().map(|(_, t)| 1 + t.weight()).sum()
    }

    pub fn max_colour(&self) -> u32 {
        self.children
            .iter()
            .map(|(c, t)| (*c).max(t.max_colour()))
            .max()
            .unwrap_or(0)
    }

    /// Depth-first coloured-parenthesis encoding, e.g. `(2(1))(2)`.
    pub fn encode(&self) -> String {
        let mut s = String::new();
        self.encode_into(&mut s);
        s
    }

    fn encode_into(&self, out: &mut String) {
        for (c, t) in &self.children {
            out.push('(');
            out.push_str(&c.to_string());
            t.encode_into(out);
            out.push(')');
        }
    }

    /// Parses the coloured-parenthesis encoding; the empty string is the
    /// trivial tree.
    pub fn parse(s: &str) -> Result<Self> {
        let bytes = s.trim().as_bytes();
        let (tree, rest) = parse_children(bytes)?;
        if !rest.is_empty() {
            return Err(Error::Parse(format!(
                "trailing input `{}` after tree",
                String::from_utf8_lossy(rest)
            )));
        }
        Ok(tree)
    }
}

fn parse_children(mut s: &[u8]) -> Result<(RocTree, &[u8])> {
    let mut children = Vec::new();
    while let Some(b'(') = s.first() {
        s = &s[1..];
        let mut digits = 0;
        while digits < s.len() && s[digits].is_ascii_digit() {
            digits += 1;
        }
        if digits == 0 {
            return Err(Error::Parse("expected colour after `(`".into()));
        }
        let colour: u32 = std::str::from_utf8(&s[..digits])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse("colour overflows u32".into()))?;
        if colour == 0 {
            return Err(Error::Parse("colour 0 is not allowed".into()));
        }
        s = &s[digits..];
        let (sub, rest) = parse_children(s)?;
        match rest.first() {
            Some(b')') => s = &rest[1..],
            _ => return Err(Error::Parse("missing `)`".into())),
        }
        children.push((colour, sub));
    }
    Ok((RocTree { children }, s))
}

impl Ord for RocTree {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let a = self.encode();
        let b = other.encode();
        a.len().cmp(&b.len()).then_with(|| a.cmp(&b))
    }
}

impl PartialOrd for RocTree {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl BasisKey for RocTree {
    fn encode(&self) -> String {
        RocTree::encode(self)
    }
}

/// Concatenation of trees by identification of their roots.
pub fn concat(t: &RocTree, u: &RocTree) -> RocTree {
    let mut children = t.children.clone();
    children.extend(u.children.iter().cloned());
    RocTree { children }
}

/// Planting `B_i^+`: hangs the whole tree under a new root by one edge of the
/// given colour.
pub fn plant(t: &RocTree, colour: u32) -> RocTree {
    RocTree {
        children: vec![(colour, t.clone())],
    }
}

/// The unique factorization of a tree into planted trees, one per root branch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlantedFactorization {
    pub factors: Vec<RocTree>,
}

pub fn planted_factorization(t: &RocTree) -> PlantedFactorization {
    PlantedFactorization {
        factors: t.children.iter().map(|(c, sub)| plant(sub, *c)).collect(),
    }
}

/// Counit of both tree bialgebras: 1 on the trivial tree, 0 otherwise.
pub fn tree_counit(t: &RocTree) -> Coeff {
    if t.is_trivial() {
        Coeff::one()
    } else {
        Coeff::zero()
    }
}

/// Enumerates all prunings of `t`: pairs `(t_c, t_s)` where `t_s` is an
/// admissible subtree (a rooted subtree sharing the root) and `t_c` is the
/// concatenation of the pruned branches in the depth-first order inherited
/// from `t`. One pair per admissible subtree, duplicates included.
fn prunings(t: &RocTree) -> Vec<(RocTree, RocTree)> {
    // per branch: keep it absent (prune the whole planted branch), or keep the
    // edge and recurse into the subtree's own prunings
    let mut acc: Vec<(RocTree, Vec<(u32, RocTree)>)> = vec![(RocTree::trivial(), Vec::new())];
    for (colour, sub) in &t.children {
        let mut options: Vec<(RocTree, Option<(u32, RocTree)>)> = vec![(plant(sub, *colour), None)];
        for (inner_c, inner_s) in prunings(sub) {
            options.push((inner_c, Some((*colour, inner_s))));
        }
        let mut next = Vec::with_capacity(acc.len() * options.len());
        for (tc, kept) in &acc {
            for (contrib, kept_child) in &options {
                let mut kept2 = kept.clone();
                if let Some(kc) = kept_child {
                    kept2.push(kc.clone());
                }
                next.push((concat(tc, contrib), kept2));
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|(tc, kept)| (tc, RocTree { children: kept }))
        .collect()
}

/// Pruning coproduct: the sum of `t_c ⊗ t_s` over all admissible subtrees of
/// `t`, with multiplicities.
pub fn pruning_coproduct(t: &RocTree) -> Tensor2<RocTree, RocTree> {
    let mut out = Tensor2::zero();
    for pair in prunings(t) {
        out.add_term(pair, Coeff::one());
    }
    out
}

/// Deconcatenation coproduct: with planted factorization `t = t_1…t_m`, the
/// sum of `(t_1…t_i) ⊗ (t_{i+1}…t_m)` over the `m+1` split points.
pub fn deconcat_coproduct(t: &RocTree) -> Tensor2<RocTree, RocTree> {
    let m = t.children.len();
    let mut out = Tensor2::zero();
    for i in 0..=m {
        let left = RocTree {
            children: t.children[..i].to_vec(),
        };
        let right = RocTree {
            children: t.children[i..].to_vec(),
        };
        out.add_term((left, right), Coeff::one());
    }
    out
}

/// Paths (child-index sequences from the root) of every vertex of `t`, in
/// depth-first order.
fn vertex_paths(t: &RocTree) -> Vec<Vec<usize>> {
    fn walk(t: &RocTree, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(path.clone());
        for (i, (_, sub)) in t.children.iter().enumerate() {
            path.push(i);
            walk(sub, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    walk(t, &mut Vec::new(), &mut out);
    out
}

/// Inserts the given planted branches into `host` at the vertex addressed by
/// `path`, occupying the given gaps between the vertex's original children.
/// `inserts` is sorted by gap index; branches sharing a gap keep their order.
fn insert_at(host: &RocTree, path: &[usize], inserts: &[(usize, &RocTree)]) -> RocTree {
    if path.is_empty() {
        let c = host.children.len();
        let mut children = Vec::with_capacity(c + inserts.len());
        let mut it = inserts.iter().peekable();
        for gap in 0..=c {
            while let Some((g, branch)) = it.peek() {
                if *g == gap {
                    children.extend(branch.children.iter().cloned());
                    it.next();
                } else {
                    break;
                }
            }
            if gap < c {
                children.push(host.children[gap].clone());
            }
        }
        return RocTree { children };
    }
    let mut children = host.children.clone();
    let (colour, sub) = &children[path[0]];
    let new_sub = insert_at(sub, &path[1..], inserts);
    children[path[0]] = (*colour, new_sub);
    RocTree { children }
}

/// Grafting product, dual to the pruning coproduct: the sum over trees `v` of
/// `c(v)·v` where `c(v)` counts the prunings of `v` with subtree `u` and
/// complementary tree `t`.
///
/// Candidates are generated by inserting the planted factors of `t` onto the
/// vertices of `u` (the generation may overshoot); each candidate's
/// coefficient is then read off its pruning coproduct, which is the defining
/// characterization and silently discards spurious candidates.
pub fn grafting_product(t: &RocTree, u: &RocTree) -> LinComb<RocTree> {
    let factors = planted_factorization(t).factors;
    let mut candidates: BTreeSet<RocTree> = BTreeSet::new();
    if factors.is_empty() {
        candidates.insert(u.clone());
    } else {
        let paths = vertex_paths(u);
        let assignments = (0..factors.len())
            .map(|_| 0..paths.len())
            .multi_cartesian_product();
        for assignment in assignments {
            // factors grouped per host vertex, keeping factor order
            let mut per_vertex: Vec<Vec<usize>> = vec![Vec::new(); paths.len()];
            for (fi, vi) in assignment.iter().enumerate() {
                per_vertex[*vi].push(fi);
            }
            // per vertex, all weakly increasing gap choices for its factors
            let mut gap_choices: Vec<Vec<Vec<usize>>> = Vec::with_capacity(paths.len());
            for (vi, fs) in per_vertex.iter().enumerate() {
                if fs.is_empty() {
                    gap_choices.push(vec![Vec::new()]);
                    continue;
                }
                let c = child_count_at(u, &paths[vi]);
                let choices: Vec<Vec<usize>> =
                    (0..=c).combinations_with_replacement(fs.len()).collect();
                gap_choices.push(choices);
            }
            for combo in gap_choices
                .iter()
                .map(|v| v.iter())
                .multi_cartesian_product()
            {
                let mut tree = u.clone();
                // insert deepest paths first so shallower insertions cannot
                // shift the addressed vertices (paths address original u)
                let mut order: Vec<usize> = (0..paths.len()).collect();
                order.sort_by_key(|vi| std::cmp::Reverse(paths[*vi].len()));
                for vi in order {
                    if per_vertex[vi].is_empty() {
                        continue;
                    }
                    let gaps = combo[vi];
                    let inserts: Vec<(usize, &RocTree)> = gaps
                        .iter()
                        .zip(per_vertex[vi].iter())
                        .map(|(g, fi)| (*g, &factors[*fi]))
                        .collect();
                    tree = insert_at(&tree, &paths[vi], &inserts);
                }
                candidates.insert(tree);
            }
        }
    }
    let mut out = LinComb::zero();
    let target = (t.clone(), u.clone());
    for v in candidates {
        let c = pruning_coproduct(&v).coeff(&target);
        if !c.is_zero() {
            out.add_term(v, c);
        }
    }
    out
}

fn child_count_at(t: &RocTree, path: &[usize]) -> usize {
    if path.is_empty() {
        t.children.len()
    } else {
        child_count_at(&t.children[path[0]].1, &path[1..])
    }
}

/// `n^k·C_k`, the size of the k-th graded component over n colours.
fn component_size(n: u32, k: usize) -> u128 {
    let mut catalan: u128 = 1;
    for i in 0..k {
        catalan = catalan * 2 * (2 * i as u128 + 1) / (i as u128 + 2);
    }
    catalan * (n as u128).pow(k as u32)
}

/// All rooted ordered trees with `k` edges over `n` colours, in canonical
/// order; the count is `n^k·C_k` with `C_k` the Catalan number.
pub fn enumerate_trees(n: u32, k: usize, cap: u128) -> Result<Vec<RocTree>> {
    let size = component_size(n, k);
    if size > cap {
        return Err(Error::ResourceLimit { size, cap });
    }
    let mut by_weight: Vec<Vec<RocTree>> = vec![vec![RocTree::trivial()]];
    for j in 1..=k {
        let mut grade = Vec::new();
        // split off the first planted factor: f edges for the factor, the
        // rest of the root branches carry j-f edges
        for f in 1..=j {
            for colour in 1..=n {
                for sub in &by_weight[f - 1] {
                    let first = (colour, sub.clone());
                    for rest in &by_weight[j - f] {
                        let mut children = Vec::with_capacity(1 + rest.children.len());
                        children.push(first.clone());
                        children.extend(rest.children.iter().cloned());
                        grade.push(RocTree { children });
                    }
                }
            }
        }
        by_weight.push(grade);
    }
    let mut out = by_weight.pop().expect("k-th grade present");
    out.sort_by_cached_key(|t| {
        let e = t.encode();
        (e.len(), e)
    });
    Ok(out)
}

/// A vertex-coloured ordered tree, the building block of decorated forests.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DecoratedTree {
    pub colour: u32,
    pub children: Vec<DecoratedTree>,
}

/// Image of a rooted ordered coloured tree under root deletion: each vertex
/// inherits the colour of the edge that attached it below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoratedForest {
    pub trees: Vec<DecoratedTree>,
}

pub fn to_decorated_forest(t: &RocTree) -> DecoratedForest {
    fn dec(colour: u32, t: &RocTree) -> DecoratedTree {
        DecoratedTree {
            colour,
            children: t.children.iter().map(|(c, sub)| dec(*c, sub)).collect(),
        }
    }
    DecoratedForest {
        trees: t.children.iter().map(|(c, sub)| dec(*c, sub)).collect(),
    }
}

pub fn from_decorated_forest(f: &DecoratedForest) -> RocTree {
    fn undec(t: &DecoratedTree) -> (u32, RocTree) {
        (
            t.colour,
            RocTree {
                children: t.children.iter().map(undec).collect(),
            },
        )
    }
    RocTree {
        children: f.trees.iter().map(undec).collect(),
    }
}

fn check_colours(t: &RocTree, n: u32) -> Result<()> {
    let m = t.max_colour();
    if m > n {
        return Err(Error::ColourRange { colour: m, max: n });
    }
    Ok(())
}

/// `𝕜T_n` with the concatenation product and pruning coproduct.
#[derive(Clone, Debug)]
pub struct TreeHopf {
    pub n: u32,
    pub cap: u128,
}

impl TreeHopf {
    pub fn new(n: u32) -> Self {
        TreeHopf {
            n,
            cap: DEFAULT_ENUM_CAP,
        }
    }

    /// Concatenation, checked against the ambient colour count.
    pub fn concat(&self, t: &RocTree, u: &RocTree) -> Result<RocTree> {
        check_colours(t, self.n)?;
        check_colours(u, self.n)?;
        Ok(concat(t, u))
    }

    /// Planting `B_i^+` with a colour-range check.
    pub fn plant(&self, t: &RocTree, colour: u32) -> Result<RocTree> {
        if colour == 0 || colour > self.n {
            return Err(Error::ColourRange {
                colour,
                max: self.n,
            });
        }
        check_colours(t, self.n)?;
        Ok(plant(t, colour))
    }

    pub fn enumerate_trees(&self, k: usize) -> Result<Vec<RocTree>> {
        enumerate_trees(self.n, k, self.cap)
    }

    pub fn validate(&self, t: &RocTree) -> Result<()> {
        check_colours(t, self.n)
    }
}

impl GradedHopf for TreeHopf {
    type Key = RocTree;

    fn unit_key(&self) -> RocTree {
        RocTree::trivial()
    }

    fn weight(&self, key: &RocTree) -> usize {
        key.weight()
    }

    fn enumerate(&self, grade: usize) -> Result<Vec<RocTree>> {
        enumerate_trees(self.n, grade, self.cap)
    }

    fn product(&self, a: &RocTree, b: &RocTree) -> LinComb<RocTree> {
        LinComb::single(concat(a, b))
    }

    fn coproduct(&self, key: &RocTree) -> Tensor2<RocTree, RocTree> {
        pruning_coproduct(key)
    }
}

/// The graded dual structure on the same basis: grafting product and
/// deconcatenation coproduct.
#[derive(Clone, Debug)]
pub struct DualTreeHopf {
    pub n: u32,
    pub cap: u128,
}

impl DualTreeHopf {
    pub fn new(n: u32) -> Self {
        DualTreeHopf {
            n,
            cap: DEFAULT_ENUM_CAP,
        }
    }
}

impl GradedHopf for DualTreeHopf {
    type Key = RocTree;

    fn unit_key(&self) -> RocTree {
        RocTree::trivial()
    }

    fn weight(&self, key: &RocTree) -> usize {
        key.weight()
    }

    fn enumerate(&self, grade: usize) -> Result<Vec<RocTree>> {
        enumerate_trees(self.n, grade, self.cap)
    }

    fn product(&self, a: &RocTree, b: &RocTree) -> LinComb<RocTree> {
        grafting_product(a, b)
    }

    fn coproduct(&self, key: &RocTree) -> Tensor2<RocTree, RocTree> {
        deconcat_coproduct(key)
    }
}
