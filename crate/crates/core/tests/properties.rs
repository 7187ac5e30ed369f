//! Property tests for the algebraic invariants: linear-combination algebra,
//! serialization round trips, quasi-shuffle commutativity/associativity, and
//! the normal-form monoid of partially commutative words.

use std::sync::OnceLock;

use proptest::prelude::*;

use qsymn::{
    coeff, enumerate_multiseqs, enumerate_trees, mul_lin, normalize, pairing, pc_multiply,
    quasi_shuffle, Coeff, LinComb, MultiSeq, PcVar, QsymHopf, RocTree, DEFAULT_ENUM_CAP,
};

fn tree_pool() -> &'static Vec<RocTree> {
    static POOL: OnceLock<Vec<RocTree>> = OnceLock::new();
    POOL.get_or_init(|| {
        (0..=4usize)
            .flat_map(|w| enumerate_trees(2, w, DEFAULT_ENUM_CAP).unwrap())
            .collect()
    })
}

fn multiseq_pool() -> &'static Vec<MultiSeq> {
    static POOL: OnceLock<Vec<MultiSeq>> = OnceLock::new();
    POOL.get_or_init(|| {
        (0..=3usize)
            .flat_map(|w| enumerate_multiseqs(2, w, DEFAULT_ENUM_CAP).unwrap())
            .collect()
    })
}

fn monochrome_pool() -> &'static Vec<MultiSeq> {
    static POOL: OnceLock<Vec<MultiSeq>> = OnceLock::new();
    POOL.get_or_init(|| {
        (0..=4usize)
            .flat_map(|w| enumerate_multiseqs(1, w, DEFAULT_ENUM_CAP).unwrap())
            .collect()
    })
}

fn arb_tree() -> impl Strategy<Value = RocTree> {
    (0..tree_pool().len()).prop_map(|i| tree_pool()[i].clone())
}

fn arb_multiseq() -> impl Strategy<Value = MultiSeq> {
    (0..multiseq_pool().len()).prop_map(|i| multiseq_pool()[i].clone())
}

fn arb_monochrome() -> impl Strategy<Value = MultiSeq> {
    (0..monochrome_pool().len()).prop_map(|i| monochrome_pool()[i].clone())
}

fn arb_coeff() -> impl Strategy<Value = Coeff> {
    (-20i64..=20, 1i64..=7).prop_map(|(n, d)| coeff(n, d))
}

fn arb_lincomb() -> impl Strategy<Value = LinComb<MultiSeq>> {
    proptest::collection::vec((arb_multiseq(), arb_coeff()), 0..5).prop_map(LinComb::from_terms)
}

fn arb_word() -> impl Strategy<Value = Vec<PcVar>> {
    proptest::collection::vec((1u32..=3, 1usize..=5), 0..8)
        .prop_map(|v| v.into_iter().map(|(c, p)| PcVar::new(c, p)).collect())
}

proptest! {
    #[test]
    fn tree_encodings_round_trip(t in arb_tree()) {
        prop_assert_eq!(RocTree::parse(&t.encode()).unwrap(), t.clone());
        let js = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<RocTree>(&js).unwrap(), t);
    }

    #[test]
    fn multiseq_encodings_round_trip(i in arb_multiseq()) {
        prop_assert_eq!(MultiSeq::parse(&i.encode()).unwrap(), i.clone());
        let js = serde_json::to_string(&i).unwrap();
        prop_assert_eq!(serde_json::from_str::<MultiSeq>(&js).unwrap(), i);
    }

    #[test]
    fn key_order_is_length_then_lexicographic(
        a in arb_tree(),
        b in arb_tree(),
        i in arb_multiseq(),
        j in arb_multiseq(),
    ) {
        let by_encoding = |x: &str, y: &str| x.len().cmp(&y.len()).then_with(|| x.cmp(y));
        prop_assert_eq!(a.cmp(&b), by_encoding(&a.encode(), &b.encode()));
        prop_assert_eq!(i.cmp(&j), by_encoding(&i.encode(), &j.encode()));
    }

    #[test]
    fn lincomb_addition_is_a_commutative_group(
        a in arb_lincomb(),
        b in arb_lincomb(),
        c in arb_lincomb(),
    ) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert!(a.add(&a.neg()).is_zero());
        prop_assert_eq!(a.add(&LinComb::zero()), a);
    }

    #[test]
    fn pairing_is_bilinear(
        a in arb_lincomb(),
        b in arb_lincomb(),
        c in arb_lincomb(),
        s in arb_coeff(),
    ) {
        prop_assert_eq!(
            pairing(&a.add(&b), &c),
            pairing(&a, &c) + pairing(&b, &c)
        );
        prop_assert_eq!(pairing(&a.scale(&s), &c), pairing(&a, &c) * s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quasi_shuffle_is_associative(
        i in arb_multiseq(),
        j in arb_multiseq(),
        k in arb_multiseq(),
    ) {
        let h = QsymHopf::new(2);
        let ij_k = mul_lin(&h, &quasi_shuffle(&i, &j), &LinComb::single(k.clone()));
        let i_jk = mul_lin(&h, &LinComb::single(i.clone()), &quasi_shuffle(&j, &k));
        prop_assert_eq!(ij_k, i_jk);
    }

    #[test]
    fn quasi_shuffle_is_commutative_in_one_colour(
        i in arb_monochrome(),
        j in arb_monochrome(),
    ) {
        prop_assert_eq!(quasi_shuffle(&i, &j), quasi_shuffle(&j, &i));
    }

    #[test]
    fn product_oracle_at_minimal_bound(i in arb_multiseq(), j in arb_multiseq()) {
        // the row counts of every quasi-shuffle are at most rows(I)+rows(J),
        // so that many positions already make the oracle exact
        let bound = (i.rows().len() + j.rows().len()).max(1);
        let lhs = pc_multiply(
            &qsymn::expand_m(&i, bound),
            &qsymn::expand_m(&j, bound),
        ).unwrap();
        let mut rhs = qsymn::PcPolynomial::zero(bound);
        for (k, c) in quasi_shuffle(&i, &j).iter() {
            rhs = rhs.add(&qsymn::expand_m(k, bound).scale(c)).unwrap();
        }
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #[test]
    fn normalize_is_idempotent(w in arb_word()) {
        let m = normalize(&w);
        let reflat: Vec<PcVar> = m
            .blocks()
            .iter()
            .flat_map(|(p, cs)| cs.iter().map(|&c| PcVar::new(c, *p)).collect::<Vec<_>>())
            .collect();
        prop_assert_eq!(normalize(&reflat), m);
    }

    #[test]
    fn normalize_is_a_monoid_homomorphism(u in arb_word(), v in arb_word()) {
        let mut uv = u.clone();
        uv.extend(v.iter().copied());
        prop_assert_eq!(normalize(&uv), normalize(&u).mul(&normalize(&v)));
    }

    #[test]
    fn distinct_positions_commute(w in arb_word(), i in 0usize..8) {
        let mut swapped = w.clone();
        if swapped.len() >= 2 {
            let i = i % (swapped.len() - 1);
            if swapped[i].position != swapped[i + 1].position {
                swapped.swap(i, i + 1);
            }
        }
        prop_assert_eq!(normalize(&swapped), normalize(&w));
    }
}
