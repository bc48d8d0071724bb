use num_bigint::BigInt;
use proptest::prelude::*;
use symdual::polyalg::{
    contract, diff_apply, divided_mul, dim_degree, Ambient, DividedPoly, GradedSubspace, Poly, Polynomial,
};
use symdual::polyalg::Basis;
use symdual::scalars::{binomial_big, binomial_mod, ExponentVec, Field, FieldScalar};

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(0u64), Just(2), Just(3), Just(5), Just(7)].prop_map(|c| Field::new(c).unwrap())
}

fn coeffs(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, len)
}

fn poly<B: Basis>(field: Field, nvars: usize, d: u32, c: &[i64]) -> Polynomial<B> {
    let v: Vec<FieldScalar> = c.iter().map(|&x| field.from_i64(x)).collect();
    Polynomial::<B>::from_vector(field, nvars, d, &v)
}

/// (field, nvars, degree, coefficient vector) for a random homogeneous form.
fn form() -> impl Strategy<Value = (Field, usize, u32, Vec<i64>)> {
    (field_strategy(), 1usize..=3, 0u32..=4).prop_flat_map(|(f, nv, d)| {
        let len = dim_degree(nv, d);
        (Just(f), Just(nv), Just(d), coeffs(len))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lucas_matches_integer_binomials(b in 0u64..200, a in 0u64..200, p in prop_oneof![Just(2u32), Just(3), Just(5), Just(7), Just(101)]) {
        let exact = binomial_big(b, a) % BigInt::from(p);
        prop_assert_eq!(BigInt::from(binomial_mod(b, a, p)), exact);
    }

    #[test]
    fn divided_product_is_commutative_and_associative(
        (f, nv, da, ca) in form(),
        db in 0u32..=3, dc in 0u32..=3,
        seed in any::<u64>(),
    ) {
        let pick = |d: u32, salt: u64| -> Vec<i64> {
            (0..dim_degree(nv, d)).map(|i| ((seed ^ salt).wrapping_mul(i as u64 + 7) % 5) as i64 - 2).collect()
        };
        let a: DividedPoly = poly(f, nv, da, &ca);
        let b: DividedPoly = poly(f, nv, db, &pick(db, 1));
        let c: DividedPoly = poly(f, nv, dc, &pick(dc, 2));
        prop_assert_eq!(divided_mul(&a, &b).unwrap(), divided_mul(&b, &a).unwrap());
        let left = divided_mul(&divided_mul(&a, &b).unwrap(), &c).unwrap();
        let right = divided_mul(&a, &divided_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn contraction_is_an_action((f, nv, d, cg) in form(), e1 in 0u32..=2, e2 in 0u32..=2, i in 0usize..3, j in 0usize..3) {
        let g: DividedPoly = poly(f, nv, d, &cg);
        let a = Poly::var(f, nv, i % nv).pow(e1);
        let b = Poly::var(f, nv, j % nv).pow(e2);
        let lhs = contract(&a.try_mul(&b).unwrap(), &g).unwrap();
        let rhs = contract(&a, &contract(&b, &g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hasse_derivatives_compose_with_binomials((f, nv, d, cf) in form(), k in 0u32..=3, l in 0u32..=3, i in 0usize..3) {
        // D_k D_l = C(k+l, k) D_{k+l} along one variable
        let i = i % nv;
        let g: Poly = poly(f, nv, d, &cf);
        let lhs = diff_apply(&ExponentVec::unit(nv, i, k), &diff_apply(&ExponentVec::unit(nv, i, l), &g));
        let c = f.from_bigint(&binomial_big((k + l) as u64, k as u64));
        let rhs = diff_apply(&ExponentVec::unit(nv, i, k + l), &g).scale(&c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn perp_is_an_involution_and_swaps_sum_and_intersection(
        f in field_strategy(), nv in 1usize..=3, d in 0u32..=3,
        rows_a in prop::collection::vec(coeffs(20), 0..4),
        rows_b in prop::collection::vec(coeffs(20), 0..4),
    ) {
        let n = dim_degree(nv, d);
        let mk = |rows: &[Vec<i64>]| {
            let rows: Vec<Vec<FieldScalar>> = rows.iter().map(|r| r[..n].iter().map(|&x| f.from_i64(x)).collect()).collect();
            GradedSubspace::from_vectors(f, nv, d, Ambient::Ring, rows)
        };
        let u = mk(&rows_a);
        let v = mk(&rows_b);
        prop_assert_eq!(u.perp().perp(), u.clone());
        prop_assert_eq!(u.perp().dim() + u.dim(), n);
        prop_assert_eq!(u.intersect(&v).perp(), u.perp().sum(&v.perp()));
        prop_assert_eq!(u.sum(&v).perp(), u.perp().intersect(&v.perp()));
    }
}
