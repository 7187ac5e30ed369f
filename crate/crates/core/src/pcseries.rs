//! Truncated polynomial ring in partially commutative variables `x_{a,i}`:
//! two variables commute exactly when their position indices differ. Words
//! normalize by a stable sort on positions, normal forms are position-sorted
//! blocks of colours, and monomial functions expand as sums over strictly
//! increasing position tuples. This ring realizes the quasi-symmetric side
//! concretely and provides independent oracles for its product and coproduct.

use std::collections::BTreeMap;

use itertools::Itertools;
use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lincomb::{BasisKey, Coeff, LinComb, Tensor2};
use crate::nsym::{ColourSeq, MultiSeq};

/// A single variable `x_{colour, position}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PcVar {
    pub colour: u32,
    pub position: usize,
}

impl PcVar {
    pub fn new(colour: u32, position: usize) -> Self {
        PcVar { colour, position }
    }
}

/// Normal form of a word: blocks `(position, colours)` with strictly
/// increasing positions. Repeated colours inside a block are implicit
/// exponents; within a block, the original relative order of letters is kept.
///
/// JSON form: array of `[position, [colours]]` blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<(usize, Vec<u32>)>")]
#[serde(into = "Vec<(usize, Vec<u32>)>")]
pub struct PcMonomial {
    blocks: Vec<(usize, Vec<u32>)>,
}

impl TryFrom<Vec<(usize, Vec<u32>)>> for PcMonomial {
    type Error = Error;
    fn try_from(blocks: Vec<(usize, Vec<u32>)>) -> Result<Self> {
        for w in blocks.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::Parse(
                    "block positions must strictly increase".into(),
                ));
            }
        }
        for (p, colours) in &blocks {
            if *p == 0 {
                return Err(Error::Parse("positions start at 1".into()));
            }
            if colours.is_empty() {
                return Err(Error::Parse("empty block".into()));
            }
            if colours.contains(&0) {
                return Err(Error::Parse("colour 0 is not allowed".into()));
            }
        }
        Ok(PcMonomial { blocks })
    }
}

impl From<PcMonomial> for Vec<(usize, Vec<u32>)> {
    fn from(m: PcMonomial) -> Self {
        m.blocks
    }
}

impl PcMonomial {
    /// The empty word.
    pub fn one() -> Self {
        PcMonomial { blocks: vec![] }
    }

    pub fn blocks(&self) -> &[(usize, Vec<u32>)] {
        &self.blocks
    }

    pub fn degree(&self) -> usize {
        self.blocks.iter().map(|(_, c)| c.len()).sum()
    }

    pub fn max_position(&self) -> usize {
        self.blocks.last().map(|(p, _)| *p).unwrap_or(0)
    }

    /// The multisequence of colour rows, positions forgotten; two normal
    /// forms are similar exactly when these agree.
    pub fn similarity_class(&self) -> MultiSeq {
        MultiSeq::new(
            self.blocks
                .iter()
                .map(|(_, c)| ColourSeq::new(c.clone()).expect("nonempty block"))
                .collect(),
        )
    }

    /// Product of normal forms: concatenate as words and renormalize. Blocks
    /// merge by position; on a shared position the left word's letters keep
    /// precedence, as they do in the concatenated word.
    pub fn mul(&self, other: &Self) -> Self {
        let mut blocks: Vec<(usize, Vec<u32>)> = Vec::new();
        let (mut a, mut b) = (
            self.blocks.iter().peekable(),
            other.blocks.iter().peekable(),
        );
        loop {
            match (a.peek(), b.peek()) {
                (Some((pa, ca)), Some((pb, cb))) => {
                    if pa < pb {
                        blocks.push((*pa, ca.clone()));
                        a.next();
                    } else if pb < pa {
                        blocks.push((*pb, cb.clone()));
                        b.next();
                    } else {
                        let mut c = ca.clone();
                        c.extend(cb.iter().copied());
                        blocks.push((*pa, c));
                        a.next();
                        b.next();
                    }
                }
                (Some((pa, ca)), None) => {
                    blocks.push((*pa, ca.clone()));
                    a.next();
                }
                (None, Some((pb, cb))) => {
                    blocks.push((*pb, cb.clone()));
                    b.next();
                }
                (None, None) => break,
            }
        }
        PcMonomial { blocks }
    }

    pub fn encode(&self) -> String {
        self.blocks
            .iter()
            .map(|(p, c)| {
                format!(
                    "{}:{}",
                    p,
                    c.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl Ord for PcMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let a = self.encode();
        let b = other.encode();
        a.len().cmp(&b.len()).then_with(|| a.cmp(&b))
    }
}

impl PartialOrd for PcMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl BasisKey for PcMonomial {
    fn encode(&self) -> String {
        PcMonomial::encode(self)
    }
}

/// Normal form of a word: stable sort by position, preserving the relative
/// order of letters that share a position. Idempotent by construction.
pub fn normalize(word: &[PcVar]) -> PcMonomial {
    let mut letters = word.to_vec();
    letters.sort_by_key(|v| v.position);
    let mut blocks: Vec<(usize, Vec<u32>)> = Vec::new();
    for v in letters {
        match blocks.last_mut() {
            Some((p, colours)) if *p == v.position => colours.push(v.colour),
            _ => blocks.push((v.position, vec![v.colour])),
        }
    }
    PcMonomial { blocks }
}

/// Similarity: equal block counts and blockwise equal colour rows, positions
/// ignored.
pub fn similar(m1: &PcMonomial, m2: &PcMonomial) -> bool {
    m1.similarity_class() == m2.similarity_class()
}

/// A polynomial with positions truncated to `1..=position_bound`; variables
/// beyond the bound are zero, a quotient compatible with the commutation
/// relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcPolynomial {
    position_bound: usize,
    terms: BTreeMap<PcMonomial, Coeff>,
}

impl PcPolynomial {
    pub fn zero(position_bound: usize) -> Self {
        PcPolynomial {
            position_bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(position_bound: usize, c: Coeff) -> Self {
        let mut p = Self::zero(position_bound);
        p.add_term(PcMonomial::one(), c);
        p
    }

    pub fn position_bound(&self) -> usize {
        self.position_bound
    }

    pub fn add_term(&mut self, m: PcMonomial, c: Coeff) {
        if c.is_zero() || m.max_position() > self.position_bound {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.position_bound != other.position_bound {
            return Err(Error::BoundMismatch {
                left: self.position_bound,
                right: other.position_bound,
            });
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = Self::zero(self.position_bound);
        for (m, d) in &self.terms {
            out.add_term(m.clone(), d.clone() * c.clone());
        }
        out
    }

    pub fn coeff(&self, m: &PcMonomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PcMonomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn to_lincomb(&self) -> LinComb<PcMonomial> {
        LinComb::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c.clone())))
    }
}

/// Expansion of the monomial function `M_I` over positions `1..=bound`: one
/// monomial per strictly increasing position tuple, `C(bound, k)` terms with
/// unit coefficients. With more rows than positions the expansion is the zero
/// polynomial, consistent with the truncation quotient.
pub fn expand_m(i: &MultiSeq, bound: usize) -> PcPolynomial {
    let k = i.rows().len();
    let mut out = PcPolynomial::zero(bound);
    if k == 0 {
        out.add_term(PcMonomial::one(), Coeff::one());
        return out;
    }
    if k > bound {
        return out;
    }
    for positions in (1..=bound).combinations(k) {
        let blocks = positions
            .iter()
            .zip(i.rows())
            .map(|(p, row)| (*p, row.entries().to_vec()))
            .collect();
        out.add_term(PcMonomial { blocks }, Coeff::one());
    }
    out
}

/// Product of truncated polynomials: distribute, concatenate words,
/// normalize, collect.
pub fn pc_multiply(p: &PcPolynomial, q: &PcPolynomial) -> Result<PcPolynomial> {
    if p.position_bound != q.position_bound {
        return Err(Error::BoundMismatch {
            left: p.position_bound,
            right: q.position_bound,
        });
    }
    let mut out = PcPolynomial::zero(p.position_bound);
    for (m1, c1) in &p.terms {
        for (m2, c2) in &q.terms {
            out.add_term(m1.mul(m2), c1.clone() * c2.clone());
        }
    }
    Ok(out)
}

/// The doubled alphabet: the original variables keep positions `1..=bound`
/// and the second copy sits entirely after them at `bound+1..=2·bound`, so
/// every new variable commutes past every old one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DoubledAlphabet {
    pub bound: usize,
}

impl DoubledAlphabet {
    pub fn new(bound: usize) -> Self {
        DoubledAlphabet { bound }
    }

    /// Total positions available to expansions over both copies.
    pub fn total_positions(&self) -> usize {
        2 * self.bound
    }

    pub fn is_second_copy(&self, position: usize) -> bool {
        position > self.bound
    }

    /// Splits a normal form into its first-copy part and its second-copy
    /// part shifted back down to positions `1..=bound`. Positions increase
    /// along the blocks, so the first-copy blocks are exactly a prefix.
    pub fn split(&self, m: &PcMonomial) -> (PcMonomial, PcMonomial) {
        let cut = m
            .blocks()
            .iter()
            .position(|(p, _)| self.is_second_copy(*p))
            .unwrap_or(m.blocks().len());
        let x_part = PcMonomial {
            blocks: m.blocks()[..cut].to_vec(),
        };
        let y_part = PcMonomial {
            blocks: m.blocks()[cut..]
                .iter()
                .map(|(p, c)| (p - self.bound, c.clone()))
                .collect(),
        };
        (x_part, y_part)
    }
}

/// Coproduct through variable doubling, as an independent oracle: expand
/// `M_I` over the doubled alphabet, split every monomial into its two copy
/// parts, recognize each part as a monomial-function expansion, and collect.
/// Must reproduce the deconcatenation coproduct whenever `bound` is at least
/// the number of rows.
pub fn doubling_coproduct_oracle(
    i: &MultiSeq,
    bound: usize,
) -> Result<Tensor2<MultiSeq, MultiSeq>> {
    let alphabet = DoubledAlphabet::new(bound);
    let doubled = expand_m(i, alphabet.total_positions());
    let mut groups: BTreeMap<(MultiSeq, MultiSeq), usize> = BTreeMap::new();
    for (m, c) in doubled.iter() {
        if !c.is_one() {
            return Err(Error::Recognition(format!(
                "expansion carries coefficient {} on {}",
                c,
                m.encode()
            )));
        }
        let (x_part, y_part) = alphabet.split(m);
        let x_class = x_part.similarity_class();
        let y_class = y_part.similarity_class();
        if x_class.juxtapose(&y_class) != *i {
            return Err(Error::Recognition(format!(
                "parts {} ⊗ {} do not reassemble {}",
                x_class.encode(),
                y_class.encode(),
                i.encode()
            )));
        }
        *groups.entry((x_class, y_class)).or_insert(0) += 1;
    }
    let mut out = Tensor2::zero();
    for ((x_class, y_class), count) in groups {
        let expect = binomial(bound, x_class.rows().len()) * binomial(bound, y_class.rows().len());
        if count != expect {
            return Err(Error::Recognition(format!(
                "group {} ⊗ {} has {} monomials, expected {}",
                x_class.encode(),
                y_class.encode(),
                count,
                expect
            )));
        }
        out.add_term((x_class, y_class), Coeff::one());
    }
    Ok(out)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut out: usize = 1;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}
