//! Module-level invariants at their full stated depths, beyond what the
//! acceptance suite already covers.

use qsymn::{
    check_antipode, check_bialgebra, coeff, deconcat_coproduct, enumerate_multiseqs,
    enumerate_trees, expand_m, grafting_product, h_coproduct, pc_multiply, pruning_coproduct,
    quasi_shuffle, verify_tree_duality, Coeff, LinComb, MultiSeq, NsymHopf, PcPolynomial, QsymHopf,
    TreeHopf, DEFAULT_ENUM_CAP,
};

#[test]
fn tree_axioms_hold_to_weight_five_for_three_colours() {
    let report = check_bialgebra(&TreeHopf::new(3), 5);
    assert!(report.passed(), "{:?}", report.failures);
}

#[test]
fn tree_duality_holds_to_total_weight_five() {
    for n in 1..=2u32 {
        let report = verify_tree_duality(n, 5).unwrap();
        assert!(report.passed(), "n={n}: {:?}", report.failures);
    }
}

#[test]
fn nsym_antipode_convolution_to_weight_five() {
    for n in 1..=2u32 {
        let report = check_antipode(&NsymHopf::new(n), 5).unwrap();
        assert!(report.passed(), "n={n}: {:?}", report.failures);
    }
}

#[test]
fn quasi_shuffle_commutative_exactly_in_the_one_colour_case() {
    // one colour: the classical commutative quasi-shuffle, exhaustively
    for wa in 0..=4usize {
        for wb in 0..=(4 - wa) {
            for i in enumerate_multiseqs(1, wa, DEFAULT_ENUM_CAP).unwrap() {
                for j in enumerate_multiseqs(1, wb, DEFAULT_ENUM_CAP).unwrap() {
                    assert_eq!(quasi_shuffle(&i, &j), quasi_shuffle(&j, &i));
                }
            }
        }
    }
    // two colours: merged rows concatenate left-first, so the product cannot
    // commute (dually, the rowwise coproduct is not cocommutative): the
    // products of M_{(1)} and M_{(2)} differ in their merged term
    let m1 = MultiSeq::parse("1").unwrap();
    let m2 = MultiSeq::parse("2").unwrap();
    let fwd = quasi_shuffle(&m1, &m2);
    let bwd = quasi_shuffle(&m2, &m1);
    assert_ne!(fwd, bwd);
    assert_eq!(fwd.coeff(&MultiSeq::parse("1,2").unwrap()), coeff(1, 1));
    assert_eq!(bwd.coeff(&MultiSeq::parse("2,1").unwrap()), coeff(1, 1));
}

/// Independent classical quasi-shuffle on compositions: shuffle the parts,
/// optionally replacing adjacent (left, right) pairs by their sum.
fn classical_quasi_shuffle(a: &[usize], b: &[usize]) -> Vec<Vec<usize>> {
    if a.is_empty() {
        return vec![b.to_vec()];
    }
    if b.is_empty() {
        return vec![a.to_vec()];
    }
    let mut out = Vec::new();
    for rest in classical_quasi_shuffle(&a[1..], b) {
        let mut v = vec![a[0]];
        v.extend(rest);
        out.push(v);
    }
    for rest in classical_quasi_shuffle(a, &b[1..]) {
        let mut v = vec![b[0]];
        v.extend(rest);
        out.push(v);
    }
    for rest in classical_quasi_shuffle(&a[1..], &b[1..]) {
        let mut v = vec![a[0] + b[0]];
        v.extend(rest);
        out.push(v);
    }
    out
}

#[test]
fn row_lengths_project_onto_the_classical_quasi_shuffle() {
    use std::collections::BTreeMap;
    for wa in 0..=4usize {
        for wb in 0..=(4 - wa) {
            for i in enumerate_multiseqs(2, wa, DEFAULT_ENUM_CAP).unwrap() {
                for j in enumerate_multiseqs(2, wb, DEFAULT_ENUM_CAP).unwrap() {
                    let mut projected: BTreeMap<Vec<usize>, Coeff> = BTreeMap::new();
                    for (k, c) in quasi_shuffle(&i, &j).iter() {
                        *projected
                            .entry(k.row_lengths().parts().to_vec())
                            .or_insert_with(|| coeff(0, 1)) += c.clone();
                    }
                    let mut classical: BTreeMap<Vec<usize>, Coeff> = BTreeMap::new();
                    for gamma in
                        classical_quasi_shuffle(i.row_lengths().parts(), j.row_lengths().parts())
                    {
                        *classical.entry(gamma).or_insert_with(|| coeff(0, 1)) += coeff(1, 1);
                    }
                    assert_eq!(projected, classical, "I={} J={}", i.encode(), j.encode());
                }
            }
        }
    }
}

#[test]
fn tree_structure_maps_have_nonnegative_integer_coefficients() {
    use num::Zero;
    for w in 0..=4usize {
        for t in enumerate_trees(2, w, DEFAULT_ENUM_CAP).unwrap() {
            for ((_, _), c) in pruning_coproduct(&t).iter() {
                assert!(c.is_integer() && *c > Coeff::zero());
            }
            for ((_, _), c) in deconcat_coproduct(&t).iter() {
                assert!(c.is_integer() && *c > Coeff::zero());
            }
            for u in enumerate_trees(2, 4 - w, DEFAULT_ENUM_CAP).unwrap() {
                for (_, c) in grafting_product(&t, &u).iter() {
                    assert!(c.is_integer() && *c > Coeff::zero());
                }
            }
        }
    }
}

#[test]
fn pairing_is_nondegenerate_on_each_graded_component() {
    for grade in 0..=3usize {
        let keys = enumerate_multiseqs(2, grade, DEFAULT_ENUM_CAP).unwrap();
        for (a, i) in keys.iter().enumerate() {
            for (b, j) in keys.iter().enumerate() {
                let want = if a == b { coeff(1, 1) } else { coeff(0, 1) };
                assert_eq!(
                    qsymn::pairing(&LinComb::single(i.clone()), &LinComb::single(j.clone())),
                    want
                );
            }
        }
    }
}

#[test]
fn pc_multiplication_is_associative_on_small_polynomials() {
    let bound = 4;
    let ms = |s: &str| MultiSeq::parse(s).unwrap();
    let polys: Vec<PcPolynomial> = vec![
        expand_m(&ms("1"), bound),
        expand_m(&ms("2;1"), bound),
        expand_m(&ms("1,2"), bound),
        expand_m(&ms("2"), bound).scale(&coeff(-3, 2)),
        PcPolynomial::constant(bound, coeff(5, 7)),
        expand_m(&ms("1"), bound)
            .add(&expand_m(&ms("2,2"), bound).scale(&coeff(2, 1)))
            .unwrap(),
    ];
    for p in &polys {
        for q in &polys {
            for r in &polys {
                let left = pc_multiply(&pc_multiply(p, q).unwrap(), r).unwrap();
                let right = pc_multiply(p, &pc_multiply(q, r).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }
}

#[test]
fn qsym_antipode_convolution_to_weight_four() {
    for n in 1..=2u32 {
        let report = check_antipode(&QsymHopf::new(n), 4).unwrap();
        assert!(report.passed(), "n={n}: {:?}", report.failures);
    }
}

#[test]
fn embedding_respects_the_h_coproduct_multiplicities() {
    // bunch-valued coefficients of the rowwise coproduct match tree prunings
    for w in 0..=4usize {
        for i in enumerate_multiseqs(2, w, DEFAULT_ENUM_CAP).unwrap() {
            let tree = qsymn::embed_as_bunch(&i);
            let cop = pruning_coproduct(&tree);
            for ((a, b), c) in h_coproduct(&i).iter() {
                assert_eq!(
                    cop.coeff(&(qsymn::embed_as_bunch(a), qsymn::embed_as_bunch(b))),
                    c.clone()
                );
            }
        }
    }
}
