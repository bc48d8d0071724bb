use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use symdual::monomial::{
    newton_closure_member, nu_eval, polyhedron_invariants, symbolic_power, MonomialIdeal,
};
use symdual::scalars::ExponentVec;

fn squarefree() -> impl Strategy<Value = MonomialIdeal> {
    (2usize..=4).prop_flat_map(|nv| {
        prop::collection::vec(1u32..(1 << nv), 1..=4).prop_map(move |masks| {
            let gens = masks
                .into_iter()
                .map(|m| ExponentVec::new((0..nv).map(|v| (m >> v) & 1).collect()))
                .collect();
            MonomialIdeal::new(nv, gens).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn symbolic_powers_form_a_graded_family(i in squarefree(), a in 1u32..=3, b in 1u32..=3) {
        let ia = symbolic_power(&i, a).unwrap();
        let ib = symbolic_power(&i, b).unwrap();
        let iab = symbolic_power(&i, a + b).unwrap();
        prop_assert!(ia.mul(&ib).is_subset_of(&iab));
        prop_assert!(i.pow(a).is_subset_of(&ia));
        prop_assert!(iab.is_subset_of(&ia));
    }

    #[test]
    fn monomial_valuations_are_superadditive_on_symbolic_powers(i in squarefree(), a in 1u32..=3, b in 1u32..=3, w in prop::collection::vec(1u32..4, 4)) {
        let w = ExponentVec::new(w[..i.nvars()].to_vec());
        let v = |n| nu_eval(&w, &symbolic_power(&i, n).unwrap()).unwrap();
        prop_assert!(v(a + b) >= v(a) + v(b));
    }

    #[test]
    fn waldschmidt_bounds_every_normalized_initial_degree(i in squarefree(), n in 1u32..=4) {
        let inv = polyhedron_invariants(&i).unwrap();
        let alpha = symbolic_power(&i, n).unwrap().alpha().unwrap();
        let ratio = BigRational::new(BigInt::from(alpha), BigInt::from(n));
        prop_assert!(inv.waldschmidt <= ratio);
        prop_assert!(inv.waldschmidt <= inv.areg);
    }

    #[test]
    fn ordinary_powers_lie_in_their_integral_closure(i in squarefree(), n in 1u32..=3) {
        for g in i.pow(n).generators() {
            prop_assert!(newton_closure_member(g, &i, n));
        }
    }
}
