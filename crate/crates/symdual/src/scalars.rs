//! Exact scalars over ℚ and F_p, exponent vectors, and binomial kernels.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest admissible prime characteristic (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("characteristic {0} is neither 0 nor a prime below 2^31")]
    BadCharacteristic(u64),
    #[error("characteristic mismatch: {0} vs {1}")]
    CharMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} has no image in characteristic {1}")]
    Unrepresentable(String, u32),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

/// The base field, identified by its characteristic (0 means ℚ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Field(u32);

impl Field {
    pub const RATIONALS: Field = Field(0);

    pub fn new(characteristic: u64) -> Result<Field, ScalarError> {
        if characteristic == 0 || (characteristic < MAX_PRIME && is_prime(characteristic)) {
            Ok(Field(characteristic as u32))
        } else {
            Err(ScalarError::BadCharacteristic(characteristic))
        }
    }

    pub fn characteristic(self) -> u32 {
        self.0
    }

    pub fn is_rational(self) -> bool {
        self.0 == 0
    }

    pub fn zero(self) -> FieldScalar {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldScalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> FieldScalar {
        if self.0 == 0 {
            FieldScalar::Rational(BigRational::from_integer(BigInt::from(v)))
        } else {
            let p = self.0 as i64;
            FieldScalar::Modular {
                residue: v.rem_euclid(p) as u32,
                prime: self.0,
            }
        }
    }

    pub fn from_bigint(self, v: &BigInt) -> FieldScalar {
        if self.0 == 0 {
            FieldScalar::Rational(BigRational::from_integer(v.clone()))
        } else {
            FieldScalar::Modular {
                residue: reduce_bigint(v, self.0),
                prime: self.0,
            }
        }
    }

    /// Maps a rational into this field; fails when the denominator vanishes mod p.
    pub fn from_rational(self, q: &BigRational) -> Result<FieldScalar, ScalarError> {
        if self.0 == 0 {
            return Ok(FieldScalar::Rational(q.clone()));
        }
        let num = reduce_bigint(q.numer(), self.0);
        let den = reduce_bigint(q.denom(), self.0);
        if den == 0 {
            return Err(ScalarError::Unrepresentable(q.to_string(), self.0));
        }
        let r = mul_mod(num, inv_mod(den, self.0), self.0);
        Ok(FieldScalar::Modular {
            residue: r,
            prime: self.0,
        })
    }

    /// Parses "3", "-2/5" and similar literals into this field.
    pub fn parse(self, s: &str) -> Result<FieldScalar, ScalarError> {
        let q = parse_rational(s)?;
        self.from_rational(&q)
    }
}

impl TryFrom<u64> for Field {
    type Error = ScalarError;
    fn try_from(v: u64) -> Result<Self, Self::Error> {
        Field::new(v)
    }
}

impl From<Field> for u64 {
    fn from(f: Field) -> u64 {
        f.0 as u64
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            write!(f, "QQ")
        } else {
            write!(f, "GF({})", self.0)
        }
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let t = s.trim();
    let bad = || ScalarError::Parse(s.to_string());
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(ScalarError::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

fn reduce_bigint(v: &BigInt, p: u32) -> u32 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u32().expect("residue fits")
}

pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn pow_mod(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    pow_mod(a, p as u64 - 2, p)
}

/// An element of ℚ or F_p. The characteristic travels with the value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldScalar {
    Rational(BigRational),
    Modular { residue: u32, prime: u32 },
}

impl FieldScalar {
    pub fn field(&self) -> Field {
        match self {
            FieldScalar::Rational(_) => Field(0),
            FieldScalar::Modular { prime, .. } => Field(*prime),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Rational(q) => q.is_zero(),
            FieldScalar::Modular { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldScalar::Rational(q) => q.is_one(),
            FieldScalar::Modular { residue, .. } => *residue == 1,
        }
    }

    fn same_field(&self, other: &FieldScalar) -> Result<(), ScalarError> {
        let (a, b) = (self.field(), other.field());
        if a == b {
            Ok(())
        } else {
            Err(ScalarError::CharMismatch(a.0, b.0))
        }
    }

    pub fn checked_add(&self, other: &FieldScalar) -> Result<FieldScalar, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a + b),
            (
                FieldScalar::Modular { residue: a, prime },
                FieldScalar::Modular { residue: b, .. },
            ) => FieldScalar::Modular {
                residue: ((*a as u64 + *b as u64) % *prime as u64) as u32,
                prime: *prime,
            },
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &FieldScalar) -> Result<FieldScalar, ScalarError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &FieldScalar) -> Result<FieldScalar, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a * b),
            (
                FieldScalar::Modular { residue: a, prime },
                FieldScalar::Modular { residue: b, .. },
            ) => FieldScalar::Modular {
                residue: mul_mod(*a, *b, *prime),
                prime: *prime,
            },
            _ => unreachable!(),
        })
    }

    pub fn inv(&self) -> Result<FieldScalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            FieldScalar::Rational(q) => FieldScalar::Rational(q.recip()),
            FieldScalar::Modular { residue, prime } => FieldScalar::Modular {
                residue: inv_mod(*residue, *prime),
                prime: *prime,
            },
        })
    }

    pub fn checked_div(&self, other: &FieldScalar) -> Result<FieldScalar, ScalarError> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    fn neg_ref(&self) -> FieldScalar {
        match self {
            FieldScalar::Rational(q) => FieldScalar::Rational(-q),
            FieldScalar::Modular { residue, prime } => FieldScalar::Modular {
                residue: (*prime - *residue) % *prime,
                prime: *prime,
            },
        }
    }

    pub fn pow(&self, e: u64) -> FieldScalar {
        match self {
            FieldScalar::Rational(q) => {
                let mut acc = BigRational::one();
                for _ in 0..e {
                    acc *= q;
                }
                FieldScalar::Rational(acc)
            }
            FieldScalar::Modular { residue, prime } => FieldScalar::Modular {
                residue: pow_mod(*residue, e, *prime),
                prime: *prime,
            },
        }
    }

    /// The rational value, if this scalar lives in ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldScalar::Rational(q) => Some(q),
            FieldScalar::Modular { .. } => None,
        }
    }

    /// A rational representative: the value itself in ℚ, the residue in {0..p−1} otherwise.
    pub fn to_rational(&self) -> BigRational {
        match self {
            FieldScalar::Rational(q) => q.clone(),
            FieldScalar::Modular { residue, .. } => {
                BigRational::from_integer(BigInt::from(*residue))
            }
        }
    }

    pub(crate) fn residue(&self) -> u32 {
        match self {
            FieldScalar::Modular { residue, .. } => *residue,
            FieldScalar::Rational(_) => panic!("residue requested from a rational scalar"),
        }
    }

    pub(crate) fn is_negative(&self) -> bool {
        matches!(self, FieldScalar::Rational(q) if q.is_negative())
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rational(q) => write!(f, "{q}"),
            FieldScalar::Modular { residue, .. } => write!(f, "{residue}"),
        }
    }
}

macro_rules! forward_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr for &FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: &FieldScalar) -> FieldScalar {
                self.$checked(rhs).expect("mixed characteristics")
            }
        }
        impl $tr for FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: FieldScalar) -> FieldScalar {
                (&self).$checked(&rhs).expect("mixed characteristics")
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        self.neg_ref()
    }
}

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        self.neg_ref()
    }
}

/// Exponent vector 𝐚 = (a_0, …, a_N).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVec(pub Vec<u32>);

impl ExponentVec {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVec(entries)
    }

    pub fn zero(len: usize) -> Self {
        ExponentVec(vec![0; len])
    }

    /// k·e_i in `len` coordinates.
    pub fn unit(len: usize, i: usize, k: u32) -> Self {
        let mut v = vec![0; len];
        v[i] = k;
        ExponentVec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Componentwise ≤.
    pub fn divides(&self, other: &ExponentVec) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &ExponentVec) -> ExponentVec {
        ExponentVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// self − other when other ≤ self componentwise.
    pub fn checked_sub(&self, other: &ExponentVec) -> Option<ExponentVec> {
        if !other.divides(self) {
            return None;
        }
        Some(ExponentVec(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn lcm(&self, other: &ExponentVec) -> ExponentVec {
        ExponentVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn scale(&self, k: u32) -> ExponentVec {
        ExponentVec(self.0.iter().map(|a| a * k).collect())
    }

    pub fn dot(&self, w: &ExponentVec) -> u64 {
        self.0
            .iter()
            .zip(&w.0)
            .map(|(a, b)| *a as u64 * *b as u64)
            .sum()
    }

    /// Graded lexicographic comparison: degree first, then x_0 heaviest.
    pub fn grlex_cmp(&self, other: &ExponentVec) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl From<Vec<u32>> for ExponentVec {
    fn from(v: Vec<u32>) -> Self {
        ExponentVec(v)
    }
}

impl fmt::Display for ExponentVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// C(b, a) as an exact integer; 0 when a > b.
pub fn binomial_big(b: u64, a: u64) -> BigInt {
    if a > b {
        return BigInt::zero();
    }
    let a = a.min(b - a);
    let mut acc = BigInt::one();
    for i in 0..a {
        acc *= BigInt::from(b - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// C(b, a) mod p for digits b, a < p, via the falling-factorial quotient.
fn small_binomial_mod(b: u64, a: u64, p: u32) -> u32 {
    if a > b {
        return 0;
    }
    let a = a.min(b - a);
    let (mut num, mut den) = (1u32, 1u32);
    for i in 0..a {
        num = mul_mod(num, ((b - i) % p as u64) as u32, p);
        den = mul_mod(den, ((i + 1) % p as u64) as u32, p);
    }
    mul_mod(num, inv_mod(den, p), p)
}

/// C(b, a) mod p by Lucas on base-p digits.
pub fn binomial_mod(mut b: u64, mut a: u64, p: u32) -> u32 {
    let pp = p as u64;
    let mut acc = 1u32;
    while a > 0 || b > 0 {
        let (bd, ad) = (b % pp, a % pp);
        if ad > bd {
            return 0;
        }
        acc = mul_mod(acc, small_binomial_mod(bd, ad, p), p);
        if acc == 0 {
            return 0;
        }
        b /= pp;
        a /= pp;
    }
    acc
}

/// The binomial coefficient C(b, a) as an element of the field.
pub fn binomial_char(b: u64, a: u64, field: Field) -> FieldScalar {
    if field.is_rational() {
        FieldScalar::Rational(BigRational::from_integer(binomial_big(b, a)))
    } else {
        FieldScalar::Modular {
            residue: binomial_mod(b, a, field.0),
            prime: field.0,
        }
    }
}

/// C(𝐚+𝐛, 𝐚) = ∏ C(a_i+b_i, a_i).
pub fn multi_binomial(a: &ExponentVec, b: &ExponentVec, field: Field) -> FieldScalar {
    assert_eq!(a.len(), b.len(), "exponent vectors of different length");
    let mut acc = field.one();
    for (x, y) in a.0.iter().zip(&b.0) {
        let c = binomial_char(*x as u64 + *y as u64, *x as u64, field);
        if c.is_zero() {
            return c;
        }
        acc = &acc * &c;
    }
    acc
}

/// C(𝐛, 𝐚) = ∏ C(b_i, a_i), zero unless 𝐚 ≤ 𝐛.
pub fn multi_choose(b: &ExponentVec, a: &ExponentVec, field: Field) -> FieldScalar {
    assert_eq!(a.len(), b.len(), "exponent vectors of different length");
    let mut acc = field.one();
    for (bi, ai) in b.0.iter().zip(&a.0) {
        let c = binomial_char(*bi as u64, *ai as u64, field);
        if c.is_zero() {
            return c;
        }
        acc = &acc * &c;
    }
    acc
}

/// 𝐚! = ∏ a_i! in the field.
pub fn factorial_vec(a: &ExponentVec, field: Field) -> FieldScalar {
    let mut acc = field.one();
    for &x in &a.0 {
        for k in 2..=x as i64 {
            acc = &acc * &field.from_i64(k);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lucas_small_cases() {
        let f3 = Field::new(3).unwrap();
        assert_eq!(binomial_char(5, 2, f3), f3.one());
        let f7 = Field::new(7).unwrap();
        for k in 1..7 {
            assert!(binomial_char(7, k, f7).is_zero());
        }
        let f2 = Field::new(2).unwrap();
        // q = 4, qa = 12: C(12, k) vanishes mod 2 unless 4 | k
        for k in 1..12u64 {
            assert_eq!(binomial_char(12, k, f2).is_zero(), k % 4 != 0, "k={k}");
        }
    }

    #[test]
    fn multibinomial_examples() {
        let q = Field::RATIONALS;
        let a = ExponentVec::new(vec![1, 1]);
        assert_eq!(multi_binomial(&a, &a, q), q.from_i64(4));
        let z = ExponentVec::zero(3);
        let c = ExponentVec::new(vec![3, 0, 5]);
        assert!(multi_binomial(&c, &z, Field::new(5).unwrap()).is_one());
        assert_eq!(factorial_vec(&ExponentVec::new(vec![2]), q), q.from_i64(2));
    }

    #[test]
    fn field_validation() {
        assert!(Field::new(4).is_err());
        assert!(Field::new(1).is_err());
        assert!(Field::new(2147483647).is_ok());
        assert!(Field::new(1 << 31).is_err());
    }

    #[test]
    fn mixed_characteristic_rejected() {
        let a = Field::new(5).unwrap().one();
        let b = Field::RATIONALS.one();
        assert_eq!(a.checked_add(&b), Err(ScalarError::CharMismatch(5, 0)));
        assert_eq!(b.checked_div(&Field::RATIONALS.zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn rational_images_mod_p() {
        let f5 = Field::new(5).unwrap();
        let x = f5.parse("3/2").unwrap();
        assert_eq!(&x * &f5.from_i64(2), f5.from_i64(3));
        assert!(f5.parse("1/10").is_err());
        assert_eq!(f5.parse("-1").unwrap(), f5.from_i64(4));
    }
}
