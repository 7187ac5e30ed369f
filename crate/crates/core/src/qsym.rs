//! Generalized quasi-symmetric functions on the monomial basis: the
//! quasi-shuffle product, the deconcatenation coproduct, the duality pairing
//! against the bunch basis, and the classical one-colour specializations
//! (monomial and complete homogeneous symmetric functions, Hall pairing).

use itertools::Itertools;
use num::One;

use crate::error::Result;
use crate::hopf::GradedHopf;
use crate::lincomb::{Coeff, LinComb, Tensor2};
use crate::nsym::{enumerate_multiseqs, ColourSeq, MultiSeq, Partition};
use crate::tree::DEFAULT_ENUM_CAP;

/// Keys of the monomial basis; the same multisequences that index bunches.
pub type MBasisKey = MultiSeq;

/// Where one row of a quasi-shuffle came from: a left row, a right row, or a
/// merged (left.right) pair of rows, all indexed into the operands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowProvenance {
    Left(usize),
    Right(usize),
    Merged(usize, usize),
}

/// One quasi-shuffle of two multisequences together with its interleaving
/// pattern; multiplicities of the product count distinct patterns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiShuffleTerm {
    pub merged: MultiSeq,
    pub provenance: Vec<RowProvenance>,
}

/// Enumerates every quasi-shuffle of `i` and `j` with its provenance: a
/// shuffle of the rows in which any set of adjacent (left, right) pairs is
/// replaced by the concatenated row, left part first.
pub fn quasi_shuffle_terms(i: &MultiSeq, j: &MultiSeq) -> Vec<QuasiShuffleTerm> {
    fn go(
        left: &[ColourSeq],
        right: &[ColourSeq],
        li: usize,
        ri: usize,
    ) -> Vec<(Vec<ColourSeq>, Vec<RowProvenance>)> {
        if left.is_empty() {
            let rows = right.to_vec();
            let prov = (0..right.len())
                .map(|k| RowProvenance::Right(ri + k))
                .collect();
            return vec![(rows, prov)];
        }
        if right.is_empty() {
            let rows = left.to_vec();
            let prov = (0..left.len())
                .map(|k| RowProvenance::Left(li + k))
                .collect();
            return vec![(rows, prov)];
        }
        let mut out = Vec::new();
        for (rows, prov) in go(&left[1..], right, li + 1, ri) {
            let mut r = vec![left[0].clone()];
            r.extend(rows);
            let mut p = vec![RowProvenance::Left(li)];
            p.extend(prov);
            out.push((r, p));
        }
        for (rows, prov) in go(left, &right[1..], li, ri + 1) {
            let mut r = vec![right[0].clone()];
            r.extend(rows);
            let mut p = vec![RowProvenance::Right(ri)];
            p.extend(prov);
            out.push((r, p));
        }
        let merged = {
            let mut e = left[0].entries().to_vec();
            e.extend(right[0].entries());
            ColourSeq::new(e).expect("nonempty")
        };
        for (rows, prov) in go(&left[1..], &right[1..], li + 1, ri + 1) {
            let mut r = vec![merged.clone()];
            r.extend(rows);
            let mut p = vec![RowProvenance::Merged(li, ri)];
            p.extend(prov);
            out.push((r, p));
        }
        out
    }
    go(i.rows(), j.rows(), 0, 0)
        .into_iter()
        .map(|(rows, provenance)| QuasiShuffleTerm {
            merged: MultiSeq::new(rows),
            provenance,
        })
        .collect()
}

/// Quasi-shuffle product on the monomial basis, with multiplicity equal to
/// the number of provenance patterns producing each multisequence.
pub fn quasi_shuffle(i: &MultiSeq, j: &MultiSeq) -> LinComb<MBasisKey> {
    let mut out = LinComb::zero();
    for term in quasi_shuffle_terms(i, j) {
        out.add_term(term.merged, Coeff::one());
    }
    out
}

/// Deconcatenation coproduct on the monomial basis: rows split into prefix ⊗
/// suffix at every position.
pub fn deconcat_coproduct_m(i: &MultiSeq) -> Tensor2<MBasisKey, MBasisKey> {
    let k = i.rows().len();
    let mut out = Tensor2::zero();
    for j in 0..=k {
        let left = MultiSeq::new(i.rows()[..j].to_vec());
        let right = MultiSeq::new(i.rows()[j..].to_vec());
        out.add_term((left, right), Coeff::one());
    }
    out
}

/// Kronecker duality pairing of the monomial basis against the bunch basis,
/// extended bilinearly.
pub fn duality_pairing(m_side: &LinComb<MBasisKey>, h_side: &LinComb<MultiSeq>) -> Coeff {
    crate::lincomb::pairing(m_side, h_side)
}

/// `m_λ = Σ_{α̃ = λ} M_α` in the one-colour algebra: the sum of monomial
/// functions over all compositions reordering to the partition.
pub fn monomial_sym(lambda: &Partition) -> LinComb<MBasisKey> {
    let mut out = LinComb::zero();
    let parts = lambda.parts().to_vec();
    let k = parts.len();
    if k == 0 {
        return LinComb::single(MultiSeq::unit());
    }
    let mut seen = std::collections::BTreeSet::new();
    for perm in parts.iter().copied().permutations(k) {
        if seen.insert(perm.clone()) {
            let ms = MultiSeq::from_rows(perm.iter().map(|&p| vec![1u32; p]).collect())
                .expect("positive parts");
            out.add_term(ms, Coeff::one());
        }
    }
    out
}

/// `h_λ = h_{λ_1}…h_{λ_k}` in the one-colour algebra: the single bunch whose
/// row lengths are the parts of λ.
pub fn complete_hom_sym(lambda: &Partition) -> LinComb<MultiSeq> {
    LinComb::single(MultiSeq::from_composition(&lambda.as_composition()))
}

/// `Δ(m_λ) = Σ m_μ ⊗ m_ν` over ordered pairs of partitions whose multiset
/// union reorders to λ, each pair once.
pub fn sym_coproduct_m(lambda: &Partition) -> Tensor2<Partition, Partition> {
    // choose a sub-multiset of the parts: a count per distinct part value
    let mut distinct: Vec<(usize, usize)> = Vec::new(); // (value, multiplicity)
    for &p in lambda.parts() {
        match distinct.iter_mut().find(|(v, _)| *v == p) {
            Some((_, m)) => *m += 1,
            None => distinct.push((p, 1)),
        }
    }
    let mut out = Tensor2::zero();
    let ranges: Vec<Vec<usize>> = distinct.iter().map(|(_, m)| (0..=*m).collect()).collect();
    let choices = if ranges.is_empty() {
        vec![vec![]]
    } else {
        ranges.into_iter().multi_cartesian_product().collect()
    };
    for take in choices {
        let mut mu = Vec::new();
        let mut nu = Vec::new();
        for ((value, mult), taken) in distinct.iter().zip(take.iter()) {
            mu.extend(std::iter::repeat_n(*value, *taken));
            nu.extend(std::iter::repeat_n(*value, mult - taken));
        }
        mu.sort_unstable_by(|a, b| b.cmp(a));
        nu.sort_unstable_by(|a, b| b.cmp(a));
        out.add_term(
            (
                Partition::new(mu).expect("sorted"),
                Partition::new(nu).expect("sorted"),
            ),
            Coeff::one(),
        );
    }
    out
}

/// Hall pairing `(m_λ, h_μ)`, computed through the one-colour duality
/// pairing; equals 1 exactly when λ = μ.
pub fn hall_pairing(lambda: &Partition, mu: &Partition) -> Coeff {
    duality_pairing(&monomial_sym(lambda), &complete_hom_sym(mu))
}

/// `QSym_n` on the monomial basis.
#[derive(Clone, Debug)]
pub struct QsymHopf {
    pub n: u32,
    pub cap: u128,
}

impl QsymHopf {
    pub fn new(n: u32) -> Self {
        QsymHopf {
            n,
            cap: DEFAULT_ENUM_CAP,
        }
    }
}

impl GradedHopf for QsymHopf {
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
        quasi_shuffle(a, b)
    }

    fn coproduct(&self, key: &MultiSeq) -> Tensor2<MultiSeq, MultiSeq> {
        deconcat_coproduct_m(key)
    }
}

/// Classical quasi-shuffle of compositions, with part sums replacing row
/// concatenations; the one-colour projection of [`quasi_shuffle`].
pub fn quasi_shuffle_compositions(
    alpha: &crate::nsym::Composition,
    beta: &crate::nsym::Composition,
) -> LinComb<MultiSeq> {
    // reuse the coloured engine on monochromatic rows; row lengths add under
    // concatenation exactly as parts add under merging
    quasi_shuffle(
        &MultiSeq::from_composition(alpha),
        &MultiSeq::from_composition(beta),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::coeff;
    use crate::nsym::{h_coproduct, h_product, Composition};
    use num::Zero;

    fn ms(s: &str) -> MultiSeq {
        MultiSeq::parse(s).unwrap()
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn coloured_quasi_shuffle_example() {
        let p = quasi_shuffle(&ms("1;2"), &ms("2"));
        assert_eq!(p.len(), 4);
        assert_eq!(p.coeff(&ms("1;2;2")), coeff(2, 1));
        assert_eq!(p.coeff(&ms("1;2,2")), coeff(1, 1));
        assert_eq!(p.coeff(&ms("1,2;2")), coeff(1, 1));
        assert_eq!(p.coeff(&ms("2;1;2")), coeff(1, 1));
    }

    #[test]
    fn quasi_shuffle_units() {
        let j = ms("2;1,1");
        assert_eq!(
            quasi_shuffle(&MultiSeq::unit(), &j),
            LinComb::single(j.clone())
        );
        assert_eq!(quasi_shuffle(&j, &MultiSeq::unit()), LinComb::single(j));
    }

    #[test]
    fn classical_quasi_shuffle_projects() {
        // M_{(1)}·M_{(2)} = M_{(1,2)} + M_{(2,1)} + M_{(3)}
        let a = Composition::new(vec![1]).unwrap();
        let b = Composition::new(vec![2]).unwrap();
        let p = quasi_shuffle_compositions(&a, &b);
        assert_eq!(p.len(), 3);
        for (key, c) in p.iter() {
            assert_eq!(*c, coeff(1, 1));
            let lens = key.row_lengths();
            assert!(lens.parts() == [1, 2] || lens.parts() == [2, 1] || lens.parts() == [3]);
        }
    }

    #[test]
    fn provenance_multiplicity_matches_collected_coefficient() {
        let terms = quasi_shuffle_terms(&ms("1;2"), &ms("2"));
        assert_eq!(terms.len(), 5);
        let repeats = terms
            .iter()
            .filter(|t| t.merged == ms("1;2;2"))
            .collect::<Vec<_>>();
        assert_eq!(repeats.len(), 2);
        assert_ne!(repeats[0].provenance, repeats[1].provenance);
    }

    #[test]
    fn deconcat_examples() {
        let cop = deconcat_coproduct_m(&ms("1,2;2"));
        assert_eq!(cop.len(), 3);
        assert_eq!(cop.coeff(&(ms("1,2;2"), MultiSeq::unit())), coeff(1, 1));
        assert_eq!(cop.coeff(&(ms("1,2"), ms("2"))), coeff(1, 1));
        assert_eq!(cop.coeff(&(MultiSeq::unit(), ms("1,2;2"))), coeff(1, 1));

        assert_eq!(
            deconcat_coproduct_m(&MultiSeq::unit()),
            Tensor2::single((MultiSeq::unit(), MultiSeq::unit()))
        );

        // δ(M_{(2,1)}) in the one-colour case
        let m21 = MultiSeq::from_rows(vec![vec![1, 1], vec![1]]).unwrap();
        let cop = deconcat_coproduct_m(&m21);
        assert_eq!(cop.len(), 3);
        assert_eq!(
            cop.coeff(&(
                MultiSeq::from_rows(vec![vec![1, 1]]).unwrap(),
                MultiSeq::from_rows(vec![vec![1]]).unwrap()
            )),
            coeff(1, 1)
        );
    }

    #[test]
    fn duality_pairing_examples() {
        let m = LinComb::single(ms("1;2"));
        let h = LinComb::single(ms("1;2"));
        assert_eq!(duality_pairing(&m, &h), coeff(1, 1));
        assert_eq!(
            duality_pairing(&LinComb::single(ms("1,2")), &LinComb::single(ms("1;2"))),
            coeff(0, 1)
        );
    }

    #[test]
    fn product_coproduct_adjointness_small() {
        // ⟨I ⧢ J, H_K⟩ = ⟨M_I ⊗ M_J, Δ(K)⟩ for total weight ≤ 4
        for wi in 0..=4usize {
            for wj in 0..=(4 - wi) {
                for i in enumerate_multiseqs(2, wi, DEFAULT_ENUM_CAP).unwrap() {
                    for j in enumerate_multiseqs(2, wj, DEFAULT_ENUM_CAP).unwrap() {
                        let prod = quasi_shuffle(&i, &j);
                        for k in enumerate_multiseqs(2, wi + wj, DEFAULT_ENUM_CAP).unwrap() {
                            let lhs = prod.coeff(&k);
                            let rhs = h_coproduct(&k).coeff(&(i.clone(), j.clone()));
                            assert_eq!(
                                lhs,
                                rhs,
                                "I={} J={} K={}",
                                i.encode(),
                                j.encode(),
                                k.encode()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn monomial_sym_examples() {
        let m = monomial_sym(&part(&[2, 1]));
        assert_eq!(m.len(), 2);
        assert_eq!(
            m.coeff(&MultiSeq::from_rows(vec![vec![1, 1], vec![1]]).unwrap()),
            coeff(1, 1)
        );
        assert_eq!(
            m.coeff(&MultiSeq::from_rows(vec![vec![1], vec![1, 1]]).unwrap()),
            coeff(1, 1)
        );
        assert_eq!(
            monomial_sym(&Partition::empty()),
            LinComb::single(MultiSeq::unit())
        );
        assert_eq!(monomial_sym(&part(&[1, 1])).len(), 1);
    }

    #[test]
    fn complete_hom_sym_examples() {
        // the index of h_{(2,1)}·h_{(2)} reorders to (2,2,1)
        let h21 = complete_hom_sym(&part(&[2, 1]));
        let h2 = complete_hom_sym(&part(&[2]));
        let prod_key = h_product(h21.keys().next().unwrap(), h2.keys().next().unwrap());
        assert_eq!(prod_key.row_lengths().to_partition(), part(&[2, 2, 1]));
        assert_eq!(
            complete_hom_sym(&Partition::empty()),
            LinComb::single(MultiSeq::unit())
        );
        // Δ(h_3) = Σ h_i ⊗ h_{3−i}
        let h3 = MultiSeq::from_rows(vec![vec![1, 1, 1]]).unwrap();
        let cop = h_coproduct(&h3);
        assert_eq!(cop.len(), 4);
    }

    #[test]
    fn sym_coproduct_examples() {
        let cop = sym_coproduct_m(&part(&[2, 1]));
        assert_eq!(cop.len(), 4);
        let one = coeff(1, 1);
        assert_eq!(cop.coeff(&(part(&[2, 1]), Partition::empty())), one);
        assert_eq!(cop.coeff(&(part(&[2]), part(&[1]))), one);
        assert_eq!(cop.coeff(&(part(&[1]), part(&[2]))), one);
        assert_eq!(cop.coeff(&(Partition::empty(), part(&[2, 1]))), one);

        assert_eq!(
            sym_coproduct_m(&Partition::empty()),
            Tensor2::single((Partition::empty(), Partition::empty()))
        );
    }

    #[test]
    fn sym_coproduct_agrees_with_monomial_expansion() {
        // expand m_λ into the monomial basis, deconcatenate, and compare with
        // the expansion of Σ m_μ ⊗ m_ν
        for m in 0..=4usize {
            for lambda in Partition::all_of(m) {
                let mut via_m: Tensor2<MultiSeq, MultiSeq> = Tensor2::zero();
                for (key, c) in monomial_sym(&lambda).iter() {
                    for (pair, d) in deconcat_coproduct_m(key).iter() {
                        via_m.add_term(pair.clone(), c.clone() * d.clone());
                    }
                }
                let mut via_sym: Tensor2<MultiSeq, MultiSeq> = Tensor2::zero();
                for ((mu, nu), c) in sym_coproduct_m(&lambda).iter() {
                    for (km, cm) in monomial_sym(mu).iter() {
                        for (kn, cn) in monomial_sym(nu).iter() {
                            via_sym.add_term(
                                (km.clone(), kn.clone()),
                                c.clone() * cm.clone() * cn.clone(),
                            );
                        }
                    }
                }
                assert_eq!(via_m, via_sym, "λ = {:?}", lambda.parts());
            }
        }
    }

    #[test]
    fn hall_pairing_is_kronecker() {
        assert_eq!(hall_pairing(&part(&[2, 1]), &part(&[2, 1])), coeff(1, 1));
        assert_eq!(hall_pairing(&part(&[2, 1]), &part(&[3])), coeff(0, 1));
        for m in 1..=5usize {
            assert_eq!(hall_pairing(&part(&[m]), &part(&[m])), coeff(1, 1));
        }
    }

    #[test]
    fn structure_constants_nonnegative_integers() {
        for wi in 0..=3usize {
            for wj in 0..=(3 - wi) {
                for i in enumerate_multiseqs(2, wi, DEFAULT_ENUM_CAP).unwrap() {
                    for j in enumerate_multiseqs(2, wj, DEFAULT_ENUM_CAP).unwrap() {
                        for (_, c) in quasi_shuffle(&i, &j).iter() {
                            assert!(c.is_integer() && *c > Coeff::zero());
                        }
                    }
                }
            }
        }
    }
}
