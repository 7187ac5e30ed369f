//! Formal linear combinations of basis keys with exact rational coefficients,
//! and their two- and three-fold tensor variants.
//!
//! Zero coefficients are never stored, so equality of combinations is equality
//! of the underlying maps. Keys iterate in their canonical order (every basis
//! key type orders itself length-then-lexicographically on its canonical
//! string encoding), which makes serialization deterministic.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Coefficient field: arbitrary-precision rationals, always reduced with a
/// positive denominator.
pub type Coeff = BigRational;

/// Convenience constructor for small rational coefficients.
pub fn coeff(numer: i64, denom: i64) -> Coeff {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Renders a coefficient as `\"numer/denom\"`, the wire form used in JSON output.
pub fn coeff_to_string(c: &Coeff) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// Parses `"n/d"` or a bare integer `"n"`.
pub fn coeff_from_str(s: &str) -> Result<Coeff> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = n
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator `{s}`")))?;
    let denom: BigInt = d
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator `{s}`")))?;
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(numer, denom))
}

/// A canonical basis key: orderable, and serializable to a unique string.
///
/// `Ord` must sort keys length-then-lexicographically on [`BasisKey::encode`],
/// so that map iteration and JSON output follow the canonical order.
pub trait BasisKey: Clone + Eq + Ord + std::fmt::Debug {
    fn encode(&self) -> String;
}

/// Finite formal linear combination of basis keys over [`Coeff`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Coeff>,
}

impl<B: Ord + Clone> Default for LinComb<B> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    /// The combination `1·key`.
    pub fn single(key: B) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(key, Coeff::one());
        LinComb { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (B, Coeff)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }

    /// Adds `c·key`, dropping the entry if the total cancels.
    pub fn add_term(&mut self, key: B, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
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

    /// Pointwise sum with zero terms dropped.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `key`, zero when absent.
    pub fn coeff(&self, key: &B) -> Coeff {
        self.terms.get(key).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Coeff)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }
}

/// Kronecker pairing of dual bases, extended bilinearly: the sum over common
/// keys of the coefficient products.
pub fn pairing<B: Ord + Clone>(dual: &LinComb<B>, primal: &LinComb<B>) -> Coeff {
    let mut out = Coeff::zero();
    for (k, c) in dual.iter() {
        let d = primal.coeff(k);
        if !d.is_zero() {
            out += c.clone() * d;
        }
    }
    out
}

/// Formal combination of ordered key pairs; the codomain of coproducts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor2<A: Ord, B: Ord> {
    terms: BTreeMap<(A, B), Coeff>,
}

impl<A: Ord + Clone, B: Ord + Clone> Default for Tensor2<A, B> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<A: Ord + Clone, B: Ord + Clone> Tensor2<A, B> {
    pub fn zero() -> Self {
        Tensor2 {
            terms: BTreeMap::new(),
        }
    }

    pub fn single(pair: (A, B)) -> Self {
        let mut t = Self::zero();
        t.add_term(pair, Coeff::one());
        t
    }

    pub fn add_term(&mut self, pair: (A, B), c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(pair) {
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    pub fn coeff(&self, pair: &(A, B)) -> Coeff {
        self.terms.get(pair).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(A, B), &Coeff)> {
        self.terms.iter()
    }

    /// Total of all coefficients; handy for counting terms with multiplicity.
    pub fn total_mass(&self) -> Coeff {
        self.terms
            .values()
            .fold(Coeff::zero(), |a, b| a + b.clone())
    }
}

/// Three-fold tensor terms, used only by the coassociativity checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3<A: Ord, B: Ord, C: Ord> {
    terms: BTreeMap<(A, B, C), Coeff>,
}

impl<A: Ord + Clone, B: Ord + Clone, C: Ord + Clone> Tensor3<A, B, C> {
    pub fn zero() -> Self {
        Tensor3 {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, triple: (A, B, C), c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(triple) {
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

    pub fn iter(&self) -> impl Iterator<Item = (&(A, B, C), &Coeff)> {
        self.terms.iter()
    }
}

/// JSON form of a linear combination: a sorted array of
/// `{"coeff": "n/d", "key": <key JSON>}` objects.
pub fn lincomb_to_json<B: Ord + Serialize>(lc: &LinComb<B>) -> Value {
    Value::Array(
        lc.terms
            .iter()
            .map(|(k, c)| {
                json!({
                    "coeff": coeff_to_string(c),
                    "key": serde_json::to_value(k).expect("key serializes"),
                })
            })
            .collect(),
    )
}

/// JSON form of a tensor: `{"coeff": ..., "left": ..., "right": ...}` terms.
pub fn tensor2_to_json<A: Ord + Serialize, B: Ord + Serialize>(t: &Tensor2<A, B>) -> Value {
    Value::Array(
        t.terms
            .iter()
            .map(|((a, b), c)| {
                json!({
                    "coeff": coeff_to_string(c),
                    "left": serde_json::to_value(a).expect("key serializes"),
                    "right": serde_json::to_value(b).expect("key serializes"),
                })
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(s: &str) -> String {
        s.to_string()
    }

    impl BasisKey for String {
        fn encode(&self) -> String {
            self.clone()
        }
    }

    #[test]
    fn add_cancels_to_zero() {
        let a = LinComb::from_terms([(k("t"), coeff(1, 1))]);
        let b = LinComb::from_terms([(k("t"), coeff(-1, 1))]);
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn add_rationals_exactly() {
        let a = LinComb::from_terms([(k("t"), coeff(1, 2))]);
        let b = LinComb::from_terms([(k("t"), coeff(1, 3))]);
        assert_eq!(a.add(&b), LinComb::from_terms([(k("t"), coeff(5, 6))]));
    }

    #[test]
    fn zero_is_additive_identity() {
        let b = LinComb::from_terms([(k("u"), coeff(2, 1))]);
        assert_eq!(LinComb::zero().add(&b), b);
    }

    #[test]
    fn pairing_of_dual_bases() {
        let t = LinComb::single(k("t"));
        let u = LinComb::single(k("u"));
        assert_eq!(pairing(&t, &t), coeff(1, 1));
        assert_eq!(pairing(&t, &u), coeff(0, 1));
        let a = LinComb::from_terms([(k("t"), coeff(2, 1)), (k("u"), coeff(3, 1))]);
        let b = LinComb::from_terms([(k("t"), coeff(1, 1)), (k("u"), coeff(1, 1))]);
        assert_eq!(pairing(&a, &b), coeff(5, 1));
    }

    #[test]
    fn coeff_string_round_trip() {
        let c = coeff(-7, 3);
        assert_eq!(coeff_to_string(&c), "-7/3");
        assert_eq!(coeff_from_str("-7/3").unwrap(), c);
        assert_eq!(coeff_from_str("4").unwrap(), coeff(4, 1));
        assert!(coeff_from_str("1/0").is_err());
    }
}
