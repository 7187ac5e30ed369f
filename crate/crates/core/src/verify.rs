//! Exhaustive cross-structure verifiers: adjointness of the four dual
//! (product, coproduct) pairs, and the power-series oracles for the
//! quasi-shuffle product and the doubling coproduct.

use serde::Serialize;

use crate::error::Result;
use crate::nsym::{enumerate_multiseqs, h_coproduct, h_product};
use crate::pcseries::{doubling_coproduct_oracle, expand_m, pc_multiply, PcPolynomial};
use crate::qsym::{deconcat_coproduct_m, quasi_shuffle};
use crate::tree::{
    concat, deconcat_coproduct, enumerate_trees, grafting_product, pruning_coproduct,
    DEFAULT_ENUM_CAP,
};

/// Outcome of one exhaustive verification sweep.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl VerifyReport {
    fn new(name: &str) -> Self {
        VerifyReport {
            name: name.to_string(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 8 {
            self.failures.push(detail());
        }
    }
}

/// Adjointness of (concatenation, deconcatenation) and of (grafting,
/// pruning) on trees, exhaustively up to the given total weight.
pub fn verify_tree_duality(n: u32, max_total_weight: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("tree duality");
    let grades: Vec<_> = (0..=max_total_weight)
        .map(|w| enumerate_trees(n, w, DEFAULT_ENUM_CAP))
        .collect::<Result<_>>()?;

    // concat against deconcat: ⟨t·u, φ_v⟩ = ⟨t⊗u, δ(v)⟩
    for keys in &grades {
        for v in keys {
            let dec = deconcat_coproduct(v);
            for ((t, u), c) in dec.iter() {
                report.record(
                    concat(t, u) == *v && c == &crate::lincomb::coeff(1, 1),
                    || {
                        format!(
                            "deconcat term {} ⊗ {} of {}",
                            t.encode(),
                            u.encode(),
                            v.encode()
                        )
                    },
                );
            }
            // every two-factor split appears exactly once
            let splits = v.children().len() + 1;
            report.record(dec.len() == splits, || {
                format!(
                    "{} has {} deconcat terms, expected {}",
                    v.encode(),
                    dec.len(),
                    splits
                )
            });
        }
    }

    // grafting against pruning, both directions
    for keys_v in &grades {
        for v in keys_v {
            for ((tc, ts), c) in pruning_coproduct(v).iter() {
                let g = grafting_product(tc, ts);
                report.record(g.coeff(v) == *c, || {
                    format!(
                        "graft({}, {}) has coefficient {} at {}, pruning says {}",
                        tc.encode(),
                        ts.encode(),
                        g.coeff(v),
                        v.encode(),
                        c
                    )
                });
            }
        }
    }
    for wa in 0..=max_total_weight {
        for wb in 0..=(max_total_weight - wa) {
            for t in &grades[wa] {
                for u in &grades[wb] {
                    let g = grafting_product(t, u);
                    for (v, c) in g.iter() {
                        let want = pruning_coproduct(v).coeff(&(t.clone(), u.clone()));
                        report.record(want == *c, || {
                            format!(
                                "coefficient of {} in {} ⧢ {} is {}, pruning says {}",
                                v.encode(),
                                t.encode(),
                                u.encode(),
                                c,
                                want
                            )
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Adjointness of the symmetric-function pairs: the juxtaposition product
/// against the monomial deconcatenation, and the quasi-shuffle against the
/// rowwise coproduct of bunches. Exhaustive up to the given total weight.
pub fn verify_nsym_qsym_duality(n: u32, max_total_weight: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("nsym/qsym duality");
    let grades: Vec<_> = (0..=max_total_weight)
        .map(|w| enumerate_multiseqs(n, w, DEFAULT_ENUM_CAP))
        .collect::<Result<_>>()?;

    // ⟨H_I·H_J, M_K⟩ = ⟨H_I⊗H_J, δ(M_K)⟩
    for keys in &grades {
        for k in keys {
            let dec = deconcat_coproduct_m(k);
            for ((i, j), c) in dec.iter() {
                report.record(
                    h_product(i, j) == *k && c == &crate::lincomb::coeff(1, 1),
                    || {
                        format!(
                            "deconcat term {} ⊗ {} of {}",
                            i.encode(),
                            j.encode(),
                            k.encode()
                        )
                    },
                );
            }
            report.record(dec.len() == k.rows().len() + 1, || {
                format!("{} has {} deconcat terms", k.encode(), dec.len())
            });
        }
    }

    // ⟨M_I ⧢ M_J, H_K⟩ = ⟨M_I⊗M_J, Δ(H_K)⟩, both directions
    for keys in &grades {
        for k in keys {
            for ((i, j), c) in h_coproduct(k).iter() {
                let qs = quasi_shuffle(i, j);
                report.record(qs.coeff(k) == *c, || {
                    format!(
                        "⟨{} ⧢ {}, {}⟩ = {} but Δ gives {}",
                        i.encode(),
                        j.encode(),
                        k.encode(),
                        qs.coeff(k),
                        c
                    )
                });
            }
        }
    }
    for wa in 0..=max_total_weight {
        for wb in 0..=(max_total_weight - wa) {
            for i in &grades[wa] {
                for j in &grades[wb] {
                    let qs = quasi_shuffle(i, j);
                    for (k, c) in qs.iter() {
                        let want = h_coproduct(k).coeff(&(i.clone(), j.clone()));
                        report.record(want == *c, || {
                            format!(
                                "coefficient of {} in {} ⧢ {} is {}, coproduct says {}",
                                k.encode(),
                                i.encode(),
                                j.encode(),
                                c,
                                want
                            )
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

/// The power-series oracle for the quasi-shuffle: multiplying expansions of
/// `M_I` and `M_J` in the truncated partially commutative ring must equal the
/// expansion of their quasi-shuffle, with `bound = rows(I) + rows(J) + 1`.
pub fn verify_quasi_shuffle_oracle(n: u32, max_total_weight: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("quasi-shuffle power-series oracle");
    let grades: Vec<_> = (0..=max_total_weight)
        .map(|w| enumerate_multiseqs(n, w, DEFAULT_ENUM_CAP))
        .collect::<Result<_>>()?;
    for wa in 0..=max_total_weight {
        for wb in 0..=(max_total_weight - wa) {
            for i in &grades[wa] {
                for j in &grades[wb] {
                    let bound = i.rows().len() + j.rows().len() + 1;
                    let lhs = pc_multiply(&expand_m(i, bound), &expand_m(j, bound))?;
                    let mut rhs = PcPolynomial::zero(bound);
                    for (k, c) in quasi_shuffle(i, j).iter() {
                        rhs = rhs.add(&expand_m(k, bound).scale(c))?;
                    }
                    report.record(lhs == rhs, || {
                        format!(
                            "product of expansions differs for {} · {}",
                            i.encode(),
                            j.encode()
                        )
                    });
                }
            }
        }
    }
    Ok(report)
}

/// The variable-doubling oracle: the coproduct recovered from expansions over
/// the doubled alphabet must equal the deconcatenation coproduct.
pub fn verify_doubling_oracle(n: u32, max_weight: usize, bound: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("doubling coproduct oracle");
    for w in 0..=max_weight {
        for i in enumerate_multiseqs(n, w, DEFAULT_ENUM_CAP)? {
            let via_doubling = doubling_coproduct_oracle(&i, bound)?;
            report.record(via_doubling == deconcat_coproduct_m(&i), || {
                format!("doubling oracle differs on {}", i.encode())
            });
        }
    }
    Ok(report)
}
