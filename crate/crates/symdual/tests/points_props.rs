use proptest::prelude::*;
use symdual::points::{PointConfig, PointScheme};
use symdual::polyalg::dim_degree;
use symdual::scalars::Field;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fat_point_hilbert_functions_rise_to_the_multiplicity(
        n in 1usize..=2, r in 1usize..=4, m in 1u32..=2, seed in any::<u64>(),
        ch in prop_oneof![Just(0u64), Just(101)],
    ) {
        let x = PointConfig::random_seeded(Field::new(ch).unwrap(), n, r, seed);
        let s = PointScheme::new(x);
        let e = s.multiplicity(m);
        let mut prev = 0;
        for d in 0..=8 {
            let h = s.hilbert(m, d);
            prop_assert!(h >= prev);
            prop_assert!(h <= e.min(dim_degree(n + 1, d) as u64));
            prev = h;
        }
        // r·m - 1 always suffices for r points of multiplicity m
        prop_assert_eq!(s.hilbert(m, (r as u32) * m - 1), e);
    }

    #[test]
    fn regularity_and_initial_degree_grow_with_multiplicity(n in 1usize..=2, r in 1usize..=3, seed in any::<u64>()) {
        let s = PointScheme::new(PointConfig::random_seeded(Field::new(0).unwrap(), n, r, seed));
        let reg = s.reg_seq(3, 12).unwrap().finite_values().unwrap();
        let alpha = s.alpha_seq(3, 12).unwrap().finite_values().unwrap();
        for w in reg.windows(2).chain(alpha.windows(2)) {
            prop_assert!(w[0] <= w[1]);
        }
        for (a, g) in alpha.iter().zip(&reg) {
            prop_assert!(a <= &(g + 1));
        }
    }
}
