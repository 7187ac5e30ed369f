//! Coloured non-commutative symmetric functions: the basis of bunches of
//! flowers indexed by multisequences, the juxtaposition product, the pruning
//! coproduct computed natively on multisequences, and the embedding into
//! rooted ordered coloured trees.
//!
//! The classical index combinatorics (compositions, partitions, the
//! composition↔subset bijection) live here too.

use std::collections::BTreeSet;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::GradedHopf;
use crate::lincomb::{BasisKey, Coeff, LinComb, Tensor2};
use crate::tree::{concat, plant, RocTree, DEFAULT_ENUM_CAP};

/// A nonempty sequence of colours; one row of a multisequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>")]
#[serde(into = "Vec<u32>")]
pub struct ColourSeq(Vec<u32>);

impl TryFrom<Vec<u32>> for ColourSeq {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        ColourSeq::new(v)
    }
}

impl From<ColourSeq> for Vec<u32> {
    fn from(c: ColourSeq) -> Self {
        c.0
    }
}

impl ColourSeq {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Parse("empty colour sequence".into()));
        }
        if let Some(&c) = entries.iter().find(|&&c| c == 0) {
            return Err(Error::ColourRange {
                colour: c,
                max: u32::MAX,
            });
        }
        Ok(ColourSeq(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// A finite sequence of nonempty colour sequences; indexes both the bunch
/// basis of the symmetric-function side and the monomial basis of its dual.
/// The empty multisequence indexes the unit.
///
/// JSON form: array of arrays of colours, e.g. `[[1,2],[2]]`; string form:
/// rows joined by `;`, entries by `,`, e.g. `1,2;2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<ColourSeq>")]
#[serde(into = "Vec<ColourSeq>")]
pub struct MultiSeq(Vec<ColourSeq>);

impl TryFrom<Vec<ColourSeq>> for MultiSeq {
    type Error = Error;
    fn try_from(v: Vec<ColourSeq>) -> Result<Self> {
        Ok(MultiSeq(v))
    }
}

impl From<MultiSeq> for Vec<ColourSeq> {
    fn from(m: MultiSeq) -> Self {
        m.0
    }
}

impl MultiSeq {
    /// The empty multisequence, indexing the unit.
    pub fn unit() -> Self {
        MultiSeq(Vec::new())
    }

    pub fn new(rows: Vec<ColourSeq>) -> Self {
        MultiSeq(rows)
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        Ok(MultiSeq(
            rows.into_iter()
                .map(ColourSeq::new)
                .collect::<Result<Vec<_>>>()?,
        ))
    }

    pub fn rows(&self) -> &[ColourSeq] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of colour entries; the grading weight.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|r| r.len()).sum()
    }

    pub fn max_colour(&self) -> u32 {
        self.0
            .iter()
            .flat_map(|r| r.entries().iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Canonical string encoding, e.g. `1,2;2`; the unit encodes as ``.
    pub fn encode(&self) -> String {
        self.0
            .iter()
            .map(|r| {
                r.entries()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Parses the string encoding; the empty string is the unit.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(MultiSeq::unit());
        }
        let rows = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|e| {
                        e.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad colour `{e}` in `{s}`")))
                    })
                    .collect::<Result<Vec<u32>>>()
                    .and_then(ColourSeq::new)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MultiSeq(rows))
    }

    /// Juxtaposition of multisequences.
    pub fn juxtapose(&self, other: &Self) -> Self {
        let mut rows = self.0.clone();
        rows.extend(other.0.iter().cloned());
        MultiSeq(rows)
    }

    /// Row lengths, the projection onto classical compositions.
    pub fn row_lengths(&self) -> Composition {
        Composition(self.0.iter().map(|r| r.len()).collect())
    }

    /// The monochromatic multisequence with the given row lengths.
    pub fn from_composition(alpha: &Composition) -> Self {
        MultiSeq(
            alpha
                .parts()
                .iter()
                .map(|&p| ColourSeq(vec![1; p]))
                .collect(),
        )
    }

    /// Reads a bunch of flowers back off a tree, if the tree is one.
    pub fn from_bunch(t: &RocTree) -> Option<Self> {
        let mut rows = Vec::new();
        for (colour, sub) in t.children() {
            let mut row = vec![*colour];
            let mut cur = sub;
            while !cur.is_trivial() {
                if cur.children().len() != 1 {
                    return None;
                }
                let (c, next) = &cur.children()[0];
                row.push(*c);
                cur = next;
            }
            row.reverse();
            rows.push(ColourSeq(row));
        }
        Some(MultiSeq(rows))
    }
}

impl Ord for MultiSeq {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let a = self.encode();
        let b = other.encode();
        a.len().cmp(&b.len()).then_with(|| a.cmp(&b))
    }
}

impl PartialOrd for MultiSeq {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl BasisKey for MultiSeq {
    fn encode(&self) -> String {
        MultiSeq::encode(self)
    }
}

/// Product of basis bunches: `H_I · H_J = H_{I⊔J}`, a single basis element.
pub fn h_product(i: &MultiSeq, j: &MultiSeq) -> MultiSeq {
    i.juxtapose(j)
}

/// Pruning coproduct on bunches: each row splits into prefix ⊗ suffix, the
/// row coproducts multiply componentwise, and empty parts are dropped.
pub fn h_coproduct(i: &MultiSeq) -> Tensor2<MultiSeq, MultiSeq> {
    let mut acc = Tensor2::single((MultiSeq::unit(), MultiSeq::unit()));
    for row in i.rows() {
        let mut next = Tensor2::zero();
        for ((left, right), c) in acc.iter() {
            for p in 0..=row.len() {
                let mut l = left.clone();
                if p > 0 {
                    l.0.push(ColourSeq(row.entries()[..p].to_vec()));
                }
                let mut r = right.clone();
                if p < row.len() {
                    r.0.push(ColourSeq(row.entries()[p..].to_vec()));
                }
                next.add_term((l, r), c.clone());
            }
        }
        acc = next;
    }
    acc
}

/// The bunch of flowers realizing `H_I`: per row `(i_1,…,i_l)` the flower
/// `B^+_{i_l}∘…∘B^+_{i_1}(•)`, concatenated across rows.
pub fn embed_as_bunch(i: &MultiSeq) -> RocTree {
    let mut out = RocTree::trivial();
    for row in i.rows() {
        let mut flower = RocTree::trivial();
        for &colour in row.entries() {
            flower = plant(&flower, colour);
        }
        out = concat(&out, &flower);
    }
    out
}

/// `n^m·2^{m−1}` for `m ≥ 1`, else 1.
fn multiseq_component_size(n: u32, m: usize) -> u128 {
    if m == 0 {
        1
    } else {
        (n as u128).pow(m as u32) << (m - 1)
    }
}

/// All multisequences of weight `m` over `n` colours, canonically ordered.
pub fn enumerate_multiseqs(n: u32, m: usize, cap: u128) -> Result<Vec<MultiSeq>> {
    let size = multiseq_component_size(n, m);
    if size > cap {
        return Err(Error::ResourceLimit { size, cap });
    }
    if m == 0 {
        return Ok(vec![MultiSeq::unit()]);
    }
    let mut out = Vec::with_capacity(size as usize);
    // compositions of m via subsets of the m-1 inner gaps, then colourings
    for mask in 0..(1u32 << (m - 1)) {
        let mut lens = Vec::new();
        let mut run = 1usize;
        for bit in 0..(m - 1) {
            if mask & (1 << bit) != 0 {
                lens.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        lens.push(run);
        let mut colouring = vec![1u32; m];
        loop {
            let mut rows = Vec::with_capacity(lens.len());
            let mut idx = 0;
            for &l in &lens {
                rows.push(ColourSeq(colouring[idx..idx + l].to_vec()));
                idx += l;
            }
            out.push(MultiSeq(rows));
            // advance the colouring odometer
            let mut carried = true;
            for pos in (0..m).rev() {
                if colouring[pos] < n {
                    colouring[pos] += 1;
                    for c in colouring.iter_mut().skip(pos + 1) {
                        *c = 1;
                    }
                    carried = false;
                    break;
                }
            }
            if carried {
                break;
            }
        }
    }
    out.sort_by_cached_key(|ms| {
        let e = ms.encode();
        (e.len(), e)
    });
    Ok(out)
}

/// A composition: a finite sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("composition parts must be positive".into()));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// The partial sums `{α_1, α_1+α_2, …}` without the total; the classical
    /// bijection with subsets of `{1..m−1}`.
    pub fn to_subset(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        let mut acc = 0;
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.insert(acc);
        }
        out
    }

    /// Inverse of [`Composition::to_subset`] for compositions of `m`.
    pub fn from_subset(set: &BTreeSet<usize>, m: usize) -> Result<Self> {
        if m == 0 {
            if set.is_empty() {
                return Ok(Composition(vec![]));
            }
            return Err(Error::Parse("nonempty subset for m = 0".into()));
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &s in set {
            if s == 0 || s >= m || s <= prev {
                return Err(Error::Parse(format!("subset element {s} outside 1..{m}")));
            }
            parts.push(s - prev);
            prev = s;
        }
        parts.push(m - prev);
        Ok(Composition(parts))
    }

    /// Reordering into a weakly decreasing partition.
    pub fn to_partition(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }
}

/// A partition: a weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse("partition parts must weakly decrease".into()));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(vec![])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// All partitions of `m`, in decreasing lexicographic order.
    pub fn all_of(m: usize) -> Vec<Partition> {
        fn gen(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                gen(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        gen(m, m.max(1), &mut Vec::new(), &mut out);
        out
    }
}

/// `NSym_n` on the bunch basis.
#[derive(Clone, Debug)]
pub struct NsymHopf {
    pub n: u32,
    pub cap: u128,
}

impl NsymHopf {
    pub fn new(n: u32) -> Self {
        NsymHopf {
            n,
            cap: DEFAULT_ENUM_CAP,
        }
    }

    /// Embedding into trees, checked against the ambient colour count.
    pub fn embed(&self, i: &MultiSeq) -> Result<RocTree> {
        let m = i.max_colour();
        if m > self.n {
            return Err(Error::ColourRange {
                colour: m,
                max: self.n,
            });
        }
        Ok(embed_as_bunch(i))
    }

    pub fn validate(&self, i: &MultiSeq) -> Result<()> {
        let m = i.max_colour();
        if m > self.n {
            return Err(Error::ColourRange {
                colour: m,
                max: self.n,
            });
        }
        Ok(())
    }
}

impl GradedHopf for NsymHopf {
    type Key = MultiSeq;

    fn unit_key(&self) -> MultiSeq {
        MultiSeq::unit()
    }

    fn weight(&self, key: &MultiSeq) -> usize {
        key.weight()
    }

    fn enumerate(&self, grade: usize) -> Result<Vec<MultiSeq>> {
        enumerate_multiseqs(self.n, grade, self.cap)
    }

    fn product(&self, a: &MultiSeq, b: &MultiSeq) -> LinComb<MultiSeq> {
        LinComb::single(h_product(a, b))
    }

    fn coproduct(&self, key: &MultiSeq) -> Tensor2<MultiSeq, MultiSeq> {
        h_coproduct(key)
    }
}

/// Counit on the bunch/monomial basis: the coefficient at the empty
/// multisequence.
pub fn multiseq_counit(i: &MultiSeq) -> Coeff {
    if i.is_unit() {
        Coeff::one()
    } else {
        Coeff::zero()
    }
}
