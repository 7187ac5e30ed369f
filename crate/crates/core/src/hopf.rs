//! Generic machinery for graded connected bialgebras given by a canonical
//! basis: structure maps extended linearly, convolution of endomorphisms,
//! the antipode recursion, and an exhaustive axiom-checking harness.

use std::collections::BTreeMap;

use num::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lincomb::{BasisKey, Coeff, LinComb, Tensor2, Tensor3};

/// A graded connected bialgebra presented on a canonical basis.
///
/// `enumerate` must return the complete, duplicate-free, canonically ordered
/// basis of each graded component; the unit key is the unique key of weight 0.
/// Implementations are pure and immutable, so values are safe to share across
/// threads.
pub trait GradedHopf {
    type Key: BasisKey;

    fn unit_key(&self) -> Self::Key;

    fn weight(&self, key: &Self::Key) -> usize;

    fn enumerate(&self, grade: usize) -> Result<Vec<Self::Key>>;

    /// Product of two basis keys, as a linear combination.
    fn product(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key>;

    /// Coproduct of a basis key.
    fn coproduct(&self, key: &Self::Key) -> Tensor2<Self::Key, Self::Key>;

    /// Counit: 1 on the unit key, 0 on every other basis key.
    fn counit(&self, key: &Self::Key) -> Coeff {
        if *key == self.unit_key() {
            Coeff::one()
        } else {
            Coeff::zero()
        }
    }
}

/// Bilinear extension of the product to linear combinations.
pub fn mul_lin<H: GradedHopf>(h: &H, a: &LinComb<H::Key>, b: &LinComb<H::Key>) -> LinComb<H::Key> {
    let mut out = LinComb::zero();
    for (ka, ca) in a.iter() {
        for (kb, cb) in b.iter() {
            let p = h.product(ka, kb);
            for (k, c) in p.iter() {
                out.add_term(k.clone(), c.clone() * ca.clone() * cb.clone());
            }
        }
    }
    out
}

/// Linear extension of the coproduct.
pub fn coproduct_lin<H: GradedHopf>(h: &H, a: &LinComb<H::Key>) -> Tensor2<H::Key, H::Key> {
    let mut out = Tensor2::zero();
    for (k, c) in a.iter() {
        for (pair, d) in h.coproduct(k).iter() {
            out.add_term(pair.clone(), c.clone() * d.clone());
        }
    }
    out
}

/// Linear extension of the counit.
pub fn counit_lin<H: GradedHopf>(h: &H, a: &LinComb<H::Key>) -> Coeff {
    let mut out = Coeff::zero();
    for (k, c) in a.iter() {
        out += c.clone() * h.counit(k);
    }
    out
}

/// Componentwise product on tensors: `(a⊗b)·(c⊗d) = (a·c)⊗(b·d)`.
pub fn tensor_mul<H: GradedHopf>(
    h: &H,
    s: &Tensor2<H::Key, H::Key>,
    t: &Tensor2<H::Key, H::Key>,
) -> Tensor2<H::Key, H::Key> {
    let mut out = Tensor2::zero();
    for ((a, b), c1) in s.iter() {
        for ((x, y), c2) in t.iter() {
            let left = h.product(a, x);
            let right = h.product(b, y);
            for (kl, cl) in left.iter() {
                for (kr, cr) in right.iter() {
                    out.add_term(
                        (kl.clone(), kr.clone()),
                        c1.clone() * c2.clone() * cl.clone() * cr.clone(),
                    );
                }
            }
        }
    }
    out
}

type KeyMap<'a, K> = Box<dyn Fn(&K) -> LinComb<K> + 'a>;

/// A linear endomorphism, determined by its action on basis keys.
pub struct EndoMap<'a, K: Ord> {
    f: KeyMap<'a, K>,
}

impl<'a, K: Ord + Clone> EndoMap<'a, K> {
    pub fn from_fn(f: impl Fn(&K) -> LinComb<K> + 'a) -> Self {
        EndoMap { f: Box::new(f) }
    }

    pub fn identity() -> Self {
        EndoMap {
            f: Box::new(|k: &K| LinComb::single(k.clone())),
        }
    }

    pub fn apply_key(&self, k: &K) -> LinComb<K> {
        (self.f)(k)
    }

    pub fn apply(&self, x: &LinComb<K>) -> LinComb<K> {
        let mut out = LinComb::zero();
        for (k, c) in x.iter() {
            for (k2, c2) in (self.f)(k).iter() {
                out.add_term(k2.clone(), c.clone() * c2.clone());
            }
        }
        out
    }
}

/// The neutral element of convolution: `η ∘ ε`.
pub fn unit_counit_map<'a, H: GradedHopf>(h: &'a H) -> EndoMap<'a, H::Key> {
    EndoMap::from_fn(move |k: &H::Key| LinComb::single(h.unit_key()).scale(&h.counit(k)))
}

/// Convolution `f ⋆ g = μ ∘ (f ⊗ g) ∘ Δ` on endomorphisms.
pub fn convolution<'a, H: GradedHopf>(
    h: &'a H,
    f: EndoMap<'a, H::Key>,
    g: EndoMap<'a, H::Key>,
) -> EndoMap<'a, H::Key> {
    EndoMap::from_fn(move |k: &H::Key| {
        let mut out = LinComb::zero();
        for ((a, b), c) in h.coproduct(k).iter() {
            let fa = f.apply_key(a);
            let gb = g.apply_key(b);
            for (k2, c2) in mul_lin(h, &fa, &gb).iter() {
                out.add_term(k2.clone(), c.clone() * c2.clone());
            }
        }
        out
    })
}

/// Reduced coproduct `Δ(u) − u⊗1 − 1⊗u`, the strictly-intermediate part used
/// by the antipode recursion. Fails when a weight-0 key other than the unit
/// shows up, i.e. when the bialgebra is not connected.
fn reduced_coproduct<H: GradedHopf>(h: &H, key: &H::Key) -> Result<Tensor2<H::Key, H::Key>> {
    let unit = h.unit_key();
    let mut red = h.coproduct(key);
    red.add_term((key.clone(), unit.clone()), -Coeff::one());
    red.add_term((unit.clone(), key.clone()), -Coeff::one());
    for ((a, b), _) in red.iter() {
        for part in [a, b] {
            if h.weight(part) == 0 && *part != unit {
                return Err(Error::NonConnected { key: part.encode() });
            }
        }
    }
    Ok(red)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Recursion {
    Left,
    Right,
}

fn antipode_with<H: GradedHopf>(
    h: &H,
    x: &LinComb<H::Key>,
    dir: Recursion,
) -> Result<LinComb<H::Key>> {
    // per-call memo table; the recursion revisits low-weight keys constantly
    let mut memo: BTreeMap<H::Key, LinComb<H::Key>> = BTreeMap::new();
    let mut out = LinComb::zero();
    for (k, c) in x.iter() {
        let s = antipode_key(h, k, dir, &mut memo)?;
        for (k2, c2) in s.iter() {
            out.add_term(k2.clone(), c.clone() * c2.clone());
        }
    }
    Ok(out)
}

fn antipode_key<H: GradedHopf>(
    h: &H,
    key: &H::Key,
    dir: Recursion,
    memo: &mut BTreeMap<H::Key, LinComb<H::Key>>,
) -> Result<LinComb<H::Key>> {
    if let Some(s) = memo.get(key) {
        return Ok(s.clone());
    }
    let unit = h.unit_key();
    if h.weight(key) == 0 {
        if *key != unit {
            return Err(Error::NonConnected { key: key.encode() });
        }
        return Ok(LinComb::single(unit));
    }
    let mut s = LinComb::single(key.clone()).neg();
    for ((a, b), c) in reduced_coproduct(h, key)?.iter() {
        let term = match dir {
            // S(u) = −u − Σ S(u′)·u″
            Recursion::Left => {
                let sa = antipode_key(h, a, dir, memo)?;
                mul_lin(h, &sa, &LinComb::single(b.clone()))
            }
            // S(u) = −u − Σ u′·S(u″)
            Recursion::Right => {
                let sb = antipode_key(h, b, dir, memo)?;
                mul_lin(h, &LinComb::single(a.clone()), &sb)
            }
        };
        for (k2, c2) in term.iter() {
            out_sub(&mut s, k2, &(c.clone() * c2.clone()));
        }
    }
    memo.insert(key.clone(), s.clone());
    Ok(s)
}

fn out_sub<K: Ord + Clone>(acc: &mut LinComb<K>, k: &K, c: &Coeff) {
    acc.add_term(k.clone(), -c.clone());
}

/// Antipode by the left recursion `S(u) = −u − Σ S(u′)·u″` over the reduced
/// coproduct, with `S(1) = 1`.
pub fn antipode<H: GradedHopf>(h: &H, x: &LinComb<H::Key>) -> Result<LinComb<H::Key>> {
    antipode_with(h, x, Recursion::Left)
}

/// Antipode by the equivalent right recursion `S(u) = −u − Σ u′·S(u″)`;
/// agreement with [`antipode`] is a free cross-check.
pub fn antipode_right<H: GradedHopf>(h: &H, x: &LinComb<H::Key>) -> Result<LinComb<H::Key>> {
    antipode_with(h, x, Recursion::Right)
}

/// One failed axiom instance, with the offending keys in canonical encoding.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomFailure {
    pub axiom: String,
    pub keys: Vec<String>,
    pub detail: String,
}

/// Outcome of an exhaustive axiom suite over all basis keys up to a weight.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub max_weight: usize,
    pub keys_checked: usize,
    pub pairs_checked: usize,
    pub triples_checked: usize,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exhaustively verifies the graded-bialgebra axioms on every basis key of
/// weight at most `max_weight`: associativity, unit laws, coassociativity,
/// counit laws, that `Δ` and `ε` are algebra morphisms, and that the grading
/// is respected. Failures are reported with the first counterexample per
/// axiom rather than thrown.
pub fn check_bialgebra<H: GradedHopf>(h: &H, max_weight: usize) -> AxiomReport {
    let mut report = AxiomReport {
        max_weight,
        keys_checked: 0,
        pairs_checked: 0,
        triples_checked: 0,
        failures: Vec::new(),
    };
    let fail = |report: &mut AxiomReport, axiom: &str, keys: Vec<String>, detail: String| {
        if !report.failures.iter().any(|f| f.axiom == axiom) {
            report.failures.push(AxiomFailure {
                axiom: axiom.to_string(),
                keys,
                detail,
            });
        }
    };

    let mut grades: Vec<Vec<H::Key>> = Vec::with_capacity(max_weight + 1);
    for g in 0..=max_weight {
        match h.enumerate(g) {
            Ok(keys) => grades.push(keys),
            Err(e) => {
                fail(&mut report, "enumeration", vec![], e.to_string());
                return report;
            }
        }
    }

    let unit = h.unit_key();
    if grades[0] != vec![unit.clone()] {
        fail(
            &mut report,
            "connectedness",
            grades[0].iter().map(|k| k.encode()).collect(),
            "grade 0 is not exactly the unit key".into(),
        );
    }
    if h.coproduct(&unit) != Tensor2::single((unit.clone(), unit.clone())) {
        fail(
            &mut report,
            "coproduct of unit",
            vec![unit.encode()],
            "Δ(1) ≠ 1⊗1".into(),
        );
    }
    if h.counit(&unit) != Coeff::one() {
        fail(
            &mut report,
            "counit of unit",
            vec![unit.encode()],
            "ε(1) ≠ 1".into(),
        );
    }

    // per-key checks: grading of Δ, counit laws, coassociativity, unit laws
    for keys in &grades {
        for u in keys {
            report.keys_checked += 1;
            let wu = h.weight(u);
            let cop = h.coproduct(u);

            for ((a, b), _) in cop.iter() {
                if h.weight(a) + h.weight(b) != wu {
                    fail(
                        &mut report,
                        "coproduct grading",
                        vec![u.encode(), a.encode(), b.encode()],
                        format!("tensor weights {}+{} ≠ {}", h.weight(a), h.weight(b), wu),
                    );
                }
            }

            let mut left_counit = LinComb::zero();
            let mut right_counit = LinComb::zero();
            for ((a, b), c) in cop.iter() {
                left_counit.add_term(b.clone(), c.clone() * h.counit(a));
                right_counit.add_term(a.clone(), c.clone() * h.counit(b));
            }
            let u_lc = LinComb::single(u.clone());
            if left_counit != u_lc || right_counit != u_lc {
                fail(
                    &mut report,
                    "counit law",
                    vec![u.encode()],
                    "(ε⊗id)Δ(u) or (id⊗ε)Δ(u) differs from u".into(),
                );
            }

            let mut lhs = Tensor3::zero();
            let mut rhs = Tensor3::zero();
            for ((a, b), c) in cop.iter() {
                for ((x, y), d) in h.coproduct(a).iter() {
                    lhs.add_term((x.clone(), y.clone(), b.clone()), c.clone() * d.clone());
                }
                for ((x, y), d) in h.coproduct(b).iter() {
                    rhs.add_term((a.clone(), x.clone(), y.clone()), c.clone() * d.clone());
                }
            }
            if lhs != rhs {
                fail(
                    &mut report,
                    "coassociativity",
                    vec![u.encode()],
                    "(Δ⊗id)Δ(u) ≠ (id⊗Δ)Δ(u)".into(),
                );
            }

            let lu = mul_lin(h, &LinComb::single(unit.clone()), &u_lc);
            let ru = mul_lin(h, &u_lc, &LinComb::single(unit.clone()));
            if lu != u_lc || ru != u_lc {
                fail(
                    &mut report,
                    "unit law",
                    vec![u.encode()],
                    "1·u or u·1 differs from u".into(),
                );
            }
        }
    }

    // pairwise checks: product grading, ε and Δ algebra morphisms
    for (wa, keys_a) in grades.iter().enumerate() {
        for (wb, keys_b) in grades.iter().enumerate() {
            if wa + wb > max_weight {
                continue;
            }
            for u in keys_a {
                for v in keys_b {
                    report.pairs_checked += 1;
                    let p = h.product(u, v);
                    for (k, _) in p.iter() {
                        if h.weight(k) != wa + wb {
                            fail(
                                &mut report,
                                "product grading",
                                vec![u.encode(), v.encode(), k.encode()],
                                format!("weight {} ≠ {}", h.weight(k), wa + wb),
                            );
                        }
                    }
                    let eps_p = counit_lin(h, &p);
                    if eps_p != h.counit(u) * h.counit(v) {
                        fail(
                            &mut report,
                            "counit morphism",
                            vec![u.encode(), v.encode()],
                            "ε(u·v) ≠ ε(u)ε(v)".into(),
                        );
                    }
                    let dp = coproduct_lin(h, &p);
                    let dd = tensor_mul(h, &h.coproduct(u), &h.coproduct(v));
                    if dp != dd {
                        fail(
                            &mut report,
                            "coproduct morphism",
                            vec![u.encode(), v.encode()],
                            "Δ(u·v) ≠ Δ(u)·Δ(v)".into(),
                        );
                    }
                }
            }
        }
    }

    // associativity on all triples within the weight budget
    for (wa, keys_a) in grades.iter().enumerate() {
        for (wb, keys_b) in grades.iter().enumerate() {
            for (wc, keys_c) in grades.iter().enumerate() {
                if wa + wb + wc > max_weight {
                    continue;
                }
                for u in keys_a {
                    for v in keys_b {
                        for w in keys_c {
                            report.triples_checked += 1;
                            let uv_w = mul_lin(h, &h.product(u, v), &LinComb::single(w.clone()));
                            let u_vw = mul_lin(h, &LinComb::single(u.clone()), &h.product(v, w));
                            if uv_w != u_vw {
                                fail(
                                    &mut report,
                                    "associativity",
                                    vec![u.encode(), v.encode(), w.encode()],
                                    "(u·v)·w ≠ u·(v·w)".into(),
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    report
}

/// Checks `id⋆S = S⋆id = η∘ε` on every basis key up to `max_weight`, and that
/// the left and right antipode recursions agree key by key.
pub fn check_antipode<H: GradedHopf>(h: &H, max_weight: usize) -> Result<AxiomReport> {
    let mut report = AxiomReport {
        max_weight,
        keys_checked: 0,
        pairs_checked: 0,
        triples_checked: 0,
        failures: Vec::new(),
    };
    let s_map = EndoMap::from_fn(|k: &H::Key| antipode(h, &LinComb::single(k.clone())).unwrap());
    let id_star_s = convolution(h, EndoMap::identity(), s_map);
    let s_map2 = EndoMap::from_fn(|k: &H::Key| antipode(h, &LinComb::single(k.clone())).unwrap());
    let s_star_id = convolution(h, s_map2, EndoMap::identity());
    for g in 0..=max_weight {
        for u in h.enumerate(g)? {
            report.keys_checked += 1;
            let lc = LinComb::single(u.clone());
            let expected = LinComb::single(h.unit_key()).scale(&h.counit(&u));
            if id_star_s.apply(&lc) != expected || s_star_id.apply(&lc) != expected {
                report.failures.push(AxiomFailure {
                    axiom: "antipode convolution".into(),
                    keys: vec![u.encode()],
                    detail: "id⋆S or S⋆id differs from η∘ε".into(),
                });
            }
            if antipode(h, &lc)? != antipode_right(h, &lc)? {
                report.failures.push(AxiomFailure {
                    axiom: "antipode recursion agreement".into(),
                    keys: vec![u.encode()],
                    detail: "left and right recursions disagree".into(),
                });
            }
        }
    }
    Ok(report)
}
