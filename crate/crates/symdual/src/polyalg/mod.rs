//! Polynomials, the divided power algebra, contraction, Hasse derivatives and
//! inverse systems.

mod basis;
mod parse;
mod poly;
mod subspace;

use thiserror::Error;

use crate::scalars::ScalarError;

pub use basis::{dim_degree, monomial_basis, MonomialBasis};
pub use parse::{parse_point, parse_polynomial};
pub use poly::{
    contract, diff_apply, divided_mul, dual_power, Basis, Divided, DividedPoly, Ordinary, Poly,
    Polynomial,
};
pub use subspace::{ideal_piece, monomials, multiply_up, one_point_perp, perp, Ambient, GradedSubspace};

pub(crate) use subspace::vanishing_rows;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operands live over different fields")]
    CharMismatch,
    #[error("operands have different numbers of variables")]
    VarMismatch,
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("expected a homogeneous polynomial of the requested degree")]
    NonHomogeneous,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{ExponentVec, Field};

    fn q() -> Field {
        Field::RATIONALS
    }

    fn dp(s: &str, f: Field, n: usize) -> DividedPoly {
        parse_polynomial::<Divided>(s, f, n).unwrap()
    }

    fn rp(s: &str, f: Field, n: usize) -> Poly {
        parse_polynomial::<Ordinary>(s, f, n).unwrap()
    }

    #[test]
    fn divided_products() {
        let y0 = dp("Y0", q(), 2);
        assert_eq!(divided_mul(&y0, &y0).unwrap(), dp("2*Y0^[2]", q(), 2));
        let f2 = Field::new(2).unwrap();
        let z = dp("Y0", f2, 2);
        assert!(divided_mul(&z, &z).unwrap().is_zero());
        let a = dp("Y0", q(), 1);
        let b = dp("Y0^[2]", q(), 1);
        assert_eq!(divided_mul(&a, &b).unwrap(), dp("3*Y0^[3]", q(), 1));
        let one = DividedPoly::one(q(), 3);
        let m = dp("Y0^[2]*Y2", q(), 3);
        assert_eq!(divided_mul(&m, &one).unwrap(), m);
        assert_eq!(
            divided_mul(&z, &DividedPoly::one(q(), 2)),
            Err(PolyError::CharMismatch)
        );
    }

    #[test]
    fn contraction_rules() {
        assert_eq!(
            contract(&rp("x0", q(), 2), &dp("Y0^[3]", q(), 2)).unwrap(),
            dp("Y0^[2]", q(), 2)
        );
        assert!(contract(&rp("x0", q(), 2), &dp("Y1", q(), 2)).unwrap().is_zero());
        let p = vec![q().one(), q().one()];
        let l3 = dual_power(&p, 3).unwrap();
        let r = contract(&rp("x0*x1", q(), 2), &l3).unwrap();
        assert_eq!(r, dp("Y0 + Y1", q(), 2));
    }

    #[test]
    fn hasse_derivatives() {
        let f = rp("x0^2*x1", q(), 3);
        let a = ExponentVec::new(vec![1, 0, 0]);
        assert_eq!(diff_apply(&a, &f), rp("2*x0*x1", q(), 3));
        assert_eq!(diff_apply(&ExponentVec::zero(3), &f), f);
        let f3 = Field::new(3).unwrap();
        let g = rp("x0 + 2*x1", f3, 2).pow(3);
        for k in [1u32, 2, 4, 5] {
            assert!(diff_apply(&ExponentVec::unit(2, 0, k), &g).is_zero());
        }
        assert!(!diff_apply(&ExponentVec::unit(2, 0, 3), &g).is_zero());
    }

    #[test]
    fn dual_power_examples() {
        let p = vec![q().one(), q().zero(), q().zero()];
        assert_eq!(dual_power(&p, 4).unwrap(), dp("Y0^[4]", q(), 3));
        let p = vec![q().one(), q().one()];
        assert_eq!(
            dual_power(&p, 2).unwrap(),
            dp("Y0^[2] + Y0*Y1 + Y1^[2]", q(), 2)
        );
        let p = vec![q().from_i64(3), q().from_i64(-2)];
        let l = dual_power(&p, 4).unwrap();
        assert_eq!(
            contract(&rp("x0", q(), 2), &l).unwrap(),
            dual_power(&p, 3).unwrap().scale(&q().from_i64(3))
        );
        assert_eq!(dual_power(&[q().zero()], 1), Err(PolyError::ZeroPoint));
    }

    #[test]
    fn perp_examples() {
        let full = GradedSubspace::full(q(), 2, 1, Ambient::Ring);
        assert!(perp(&full).is_zero());
        let u = GradedSubspace::from_polys(q(), 2, 2, &[rp("x0^2", q(), 2)]).unwrap();
        let expect = GradedSubspace::from_divided(
            q(),
            2,
            2,
            &[dp("Y0*Y1", q(), 2), dp("Y1^[2]", q(), 2)],
        )
        .unwrap();
        assert_eq!(perp(&u), expect);
        assert_eq!(perp(&perp(&u)), u);
    }

    #[test]
    fn one_point_perp_small() {
        let p = vec![q().one(), q().from_i64(2)];
        assert!(one_point_perp(&p, 3, 2).unwrap().is_full());
        // N = 1: (𝔪_p^2)_d has codimension 2
        let v = one_point_perp(&p, 2, 3).unwrap();
        assert_eq!(v.dim(), 2);
    }

    #[test]
    fn display_and_parse_round_trip() {
        let f = rp("3*x0^2*x1 - x2^3 + 1/2", q(), 3);
        assert_eq!(f.to_string(), "3*x0^2*x1 - x2^3 + 1/2");
        assert_eq!(rp(&f.to_string(), q(), 3), f);
        let g = dp("Y0^[2]*Y1 - 2*Y2", q(), 3);
        assert_eq!(g.to_string(), "Y0^[2]*Y1 - 2*Y2");
        assert!(parse_polynomial::<Ordinary>("x3", q(), 3).is_err());
        assert!(parse_polynomial::<Divided>("Y0*Y0", q(), 3).is_err());
    }
}
