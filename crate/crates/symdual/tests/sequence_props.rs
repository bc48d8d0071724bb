use proptest::prelude::*;
use symdual::numseq::{
    additivity_class, left_transform_partial, right_transform_partial, shift, ExtInt, IntSeqWindow, Reference,
};

fn nondecreasing(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0i64..=3, len).prop_map(|steps| {
        let mut acc = 0;
        steps.into_iter().map(|s| { acc += s; acc + 1 }).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn right_transform_is_a_galois_adjoint(vals in (1usize..20).prop_flat_map(nondecreasing), n_max in 1i64..30) {
        let alpha = IntSeqWindow::from_finite(1, &vals).certified_nondecreasing().unwrap();
        let r = right_transform_partial(&alpha, Reference::Identity, n_max).unwrap();
        for (n, rn) in r.window.indexed() {
            for (d, ad) in alpha.indexed() {
                // α_d ≤ n ⟺ d ≤ →α_n
                prop_assert_eq!(ad <= ExtInt::Finite(n), ExtInt::Finite(d) <= rn);
            }
        }
    }

    #[test]
    fn left_transform_is_a_galois_adjoint(vals in (1usize..20).prop_flat_map(nondecreasing), n_max in 1i64..30) {
        let alpha = IntSeqWindow::from_finite(1, &vals).certified_nondecreasing().unwrap();
        let l = left_transform_partial(&alpha, Reference::Identity, n_max).unwrap();
        // the partial transform stops at the first uncertified index
        prop_assert!(l.window.end() <= n_max);
        for (n, ln) in l.window.indexed() {
            for (d, ad) in alpha.indexed() {
                prop_assert_eq!(ad >= ExtInt::Finite(n), ExtInt::Finite(d) >= ln);
            }
        }
    }

    #[test]
    fn left_and_right_differ_by_one_on_integers(vals in (1usize..20).prop_flat_map(nondecreasing), n_max in 2i64..30) {
        let alpha = IntSeqWindow::from_finite(1, &vals).certified_nondecreasing().unwrap();
        let r = right_transform_partial(&alpha, Reference::Identity, n_max).unwrap();
        let l = left_transform_partial(&alpha, Reference::Identity, n_max).unwrap();
        for (n, ln) in l.window.indexed() {
            if let (Some(ExtInt::Finite(prev)), ExtInt::Finite(ln)) = (r.window.get(n - 1), ln) {
                prop_assert_eq!(ln, prev + 1);
            }
        }
    }

    #[test]
    fn shifting_back_and_forth_is_the_identity_on_the_overlap(vals in prop::collection::vec(-20i64..20, 1..15), k in 0i64..5) {
        let alpha = IntSeqWindow::from_finite(1, &vals);
        let back = shift(&shift(&alpha, k), -k);
        for (n, v) in back.indexed() {
            prop_assert_eq!(alpha.get(n), Some(v));
        }
    }

    #[test]
    fn linear_sequences_are_both_sub_and_superadditive(a in -5i64..5, len in 1usize..15) {
        let alpha = IntSeqWindow::from_fn(1, len, |n| a * n);
        let v = additivity_class(&alpha);
        prop_assert!(v.is_subadditive() && v.is_superadditive());
    }
}
