//! Integer sequences with ±∞, the transforms ← and →, additivity and growth.

use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::Zero;
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

/// An integer, or one of the sentinels −∞ and +∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtInt {
    NegInf,
    Finite(i64),
    PosInf,
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Finite(_))
    }

    /// Sum in the extended integers; `None` for −∞ + +∞.
    pub fn checked_add(self, other: ExtInt) -> Option<ExtInt> {
        use ExtInt::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Some(Finite(a + b)),
            (NegInf, PosInf) | (PosInf, NegInf) => None,
            (NegInf, _) | (_, NegInf) => Some(NegInf),
            (PosInf, _) | (_, PosInf) => Some(PosInf),
        }
    }

    pub fn offset(self, k: i64) -> ExtInt {
        match self {
            ExtInt::Finite(v) => ExtInt::Finite(v + k),
            other => other,
        }
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(v)
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => write!(f, "-inf"),
            ExtInt::PosInf => write!(f, "inf"),
            ExtInt::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for ExtInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtInt::Finite(v) => s.serialize_i64(*v),
            ExtInt::NegInf => s.serialize_str("-inf"),
            ExtInt::PosInf => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(ExtInt::Finite(v)),
            Raw::Text(t) => match t.as_str() {
                "-inf" => Ok(ExtInt::NegInf),
                "inf" | "+inf" => Ok(ExtInt::PosInf),
                other => other
                    .parse::<i64>()
                    .map(ExtInt::Finite)
                    .map_err(|_| de::Error::custom(format!("bad sequence entry {other:?}"))),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("sup at index {index} (threshold {threshold}) is not determined by the window")]
    UncertifiedSup { index: i64, threshold: ExtInt },
    #[error("inf at index {index} (threshold {threshold}) is not determined by the window")]
    UncertifiedInf { index: i64, threshold: ExtInt },
    #[error("reference sequence ends at {end}, before the requested index {requested}")]
    ReferenceTooShort { end: i64, requested: i64 },
    #[error("window is not {declared:?} on the window: pair ({0}, {1}) violates it", .witness.0, .witness.1)]
    KindMismatch { declared: GrowthKind, witness: (i64, i64) },
    #[error("no finite entry at a positive index")]
    EmptyWindow,
    #[error("window values are not nondecreasing although certified so (index {0})")]
    NotMonotone(i64),
    #[error("invalid sequence literal: {0}")]
    Parse(String),
}

/// α_d ≥ slope·d + offset for every index beyond the window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TailBound {
    #[serde(with = "ratio_text")]
    pub slope: Rational64,
    #[serde(with = "ratio_text", default = "Rational64::zero")]
    pub offset: Rational64,
}

mod ratio_text {
    use num_rational::Rational64;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational64, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(Rational64::from_integer(v)),
            Raw::Text(t) => t.parse().map_err(|_| de::Error::custom(format!("bad ratio {t:?}"))),
        }
    }
}

/// What is known about the sequence outside the computed window.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Certificate {
    /// The whole sequence (not only the window) is nondecreasing.
    #[serde(default)]
    pub nondecreasing: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tail: Option<TailBound>,
}

/// A finite window {α_n}_{n = start, …} of an integer sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntSeqWindow {
    start: i64,
    values: Vec<ExtInt>,
    cert: Certificate,
}

impl IntSeqWindow {
    pub fn new(start: i64, values: Vec<ExtInt>) -> Self {
        IntSeqWindow {
            start,
            values,
            cert: Certificate::default(),
        }
    }

    pub fn from_finite(start: i64, values: &[i64]) -> Self {
        Self::new(start, values.iter().map(|&v| ExtInt::Finite(v)).collect())
    }

    pub fn from_fn(start: i64, len: usize, f: impl Fn(i64) -> i64) -> Self {
        Self::new(start, (0..len as i64).map(|i| ExtInt::Finite(f(start + i))).collect())
    }

    /// id on 1..=len, certified nondecreasing with tail n ≥ n.
    pub fn identity(len: usize) -> Self {
        Self::from_fn(1, len, |n| n)
            .with_certificate(Certificate {
                nondecreasing: true,
                tail: Some(TailBound {
                    slope: Rational64::from_integer(1),
                    offset: Rational64::zero(),
                }),
            })
            .expect("identity is monotone")
    }

    pub fn with_certificate(mut self, cert: Certificate) -> Result<Self, SeqError> {
        if cert.nondecreasing {
            if let Some(i) = self.first_descent() {
                return Err(SeqError::NotMonotone(i));
            }
        }
        self.cert = cert;
        Ok(self)
    }

    pub fn certified_nondecreasing(self) -> Result<Self, SeqError> {
        let cert = Certificate {
            nondecreasing: true,
            ..self.cert
        };
        self.with_certificate(cert)
    }

    pub fn with_tail(self, slope: Rational64, offset: Rational64) -> Self {
        let cert = Certificate {
            tail: Some(TailBound { slope, offset }),
            ..self.cert
        };
        IntSeqWindow { cert, ..self }
    }

    fn first_descent(&self) -> Option<i64> {
        self.values
            .windows(2)
            .position(|w| w[1] < w[0])
            .map(|i| self.start + i as i64 + 1)
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    /// Last index in the window (start − 1 when empty).
    pub fn end(&self) -> i64 {
        self.start + self.values.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[ExtInt] {
        &self.values
    }

    pub fn certificate(&self) -> Certificate {
        self.cert
    }

    pub fn get(&self, n: i64) -> Option<ExtInt> {
        if n < self.start {
            return None;
        }
        self.values.get((n - self.start) as usize).copied()
    }

    pub fn indexed(&self) -> impl Iterator<Item = (i64, ExtInt)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(i, v)| (self.start + i as i64, *v))
    }

    pub fn finite_values(&self) -> Option<Vec<i64>> {
        self.values.iter().map(|v| v.finite()).collect()
    }

    /// {α_n + k·n}; certificates are dropped.
    pub fn add_multiple_of_index(&self, k: i64) -> IntSeqWindow {
        IntSeqWindow::new(
            self.start,
            self.indexed().map(|(n, v)| v.offset(k * n)).collect(),
        )
    }

    /// The restriction to indices in [from, to].
    pub fn restrict(&self, from: i64, to: i64) -> IntSeqWindow {
        let lo = from.max(self.start);
        let hi = to.min(self.end());
        let values = if lo > hi {
            Vec::new()
        } else {
            self.values[(lo - self.start) as usize..=(hi - self.start) as usize].to_vec()
        };
        IntSeqWindow {
            start: lo,
            values,
            cert: self.cert,
        }
    }

    fn sup_le(&self, t: ExtInt) -> Option<ExtInt> {
        if t == ExtInt::PosInf {
            return Some(ExtInt::PosInf);
        }
        let last = self
            .indexed()
            .filter(|&(_, v)| v <= t)
            .map(|(d, _)| d)
            .last();
        let beyond_ok = match (self.cert.nondecreasing, self.values.last()) {
            (true, Some(&v)) if v > t => true,
            _ => match (self.cert.tail, t) {
                (_, ExtInt::NegInf) if self.cert.tail.is_some() => true,
                (Some(tb), ExtInt::Finite(tv)) => {
                    tb.slope > Rational64::zero()
                        && tb.slope * Rational64::from_integer(self.end() + 1) + tb.offset
                            > Rational64::from_integer(tv)
                }
                _ => false,
            },
        };
        if !beyond_ok {
            return None;
        }
        Some(last.map(ExtInt::Finite).unwrap_or(ExtInt::NegInf))
    }

    fn inf_ge(&self, t: ExtInt) -> Option<ExtInt> {
        if t == ExtInt::NegInf {
            return Some(ExtInt::Finite(self.start));
        }
        self.indexed()
            .find(|&(_, v)| v >= t)
            .map(|(d, _)| ExtInt::Finite(d))
    }
}

impl fmt::Display for IntSeqWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]@{}", self.start)
    }
}

#[derive(Serialize, Deserialize)]
struct WindowJson {
    start: i64,
    values: Vec<ExtInt>,
    #[serde(default)]
    nondecreasing: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tail: Option<TailBound>,
}

impl Serialize for IntSeqWindow {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        WindowJson {
            start: self.start,
            values: self.values.clone(),
            nondecreasing: self.cert.nondecreasing,
            tail: self.cert.tail,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntSeqWindow {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Bare(Vec<ExtInt>),
            Full(WindowJson),
        }
        let w = match Raw::deserialize(d)? {
            Raw::Bare(values) => IntSeqWindow::new(1, values),
            Raw::Full(j) => IntSeqWindow::new(j.start, j.values).with_certificate(Certificate {
                nondecreasing: j.nondecreasing,
                tail: j.tail,
            })
            .map_err(de::Error::custom)?,
        };
        Ok(w)
    }
}

/// Parses `{"start": n0, "values": [...]}` or a bare list (start 1).
pub fn parse_window(text: &str) -> Result<IntSeqWindow, SeqError> {
    serde_json::from_str(text).map_err(|e| SeqError::Parse(e.to_string()))
}

/// The reference sequence β in the relative transforms.
#[derive(Debug, Clone, Copy)]
pub enum Reference<'a> {
    Identity,
    Window(&'a IntSeqWindow),
}

impl Reference<'_> {
    fn start(&self) -> i64 {
        match self {
            Reference::Identity => 1,
            Reference::Window(w) => w.start,
        }
    }

    fn value(&self, n: i64) -> Result<ExtInt, SeqError> {
        match self {
            Reference::Identity => Ok(ExtInt::Finite(n)),
            Reference::Window(w) => w.get(n).ok_or(SeqError::ReferenceTooShort {
                end: w.end(),
                requested: n,
            }),
        }
    }

    fn nondecreasing(&self) -> bool {
        match self {
            Reference::Identity => true,
            Reference::Window(w) => w.cert.nondecreasing,
        }
    }
}

/// A transform evaluated on the longest certified prefix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartialTransform {
    pub window: IntSeqWindow,
    /// First index that could not be certified, if any.
    pub uncertified_from: Option<i64>,
}

fn transform(
    beta: Reference<'_>,
    n_max: i64,
    eval: impl Fn(ExtInt) -> Option<ExtInt>,
) -> Result<PartialTransform, SeqError> {
    let start = beta.start();
    let mut values = Vec::new();
    let mut uncertified_from = None;
    for n in start..=n_max {
        let t = beta.value(n)?;
        match eval(t) {
            Some(v) => values.push(v),
            None => {
                uncertified_from = Some(n);
                break;
            }
        }
    }
    let mut window = IntSeqWindow::new(start, values);
    if beta.nondecreasing() {
        window = window.certified_nondecreasing()?;
    }
    Ok(PartialTransform {
        window,
        uncertified_from,
    })
}

/// →α^β_n = sup{d : α_d ≤ β_n} on the certified prefix of start..=n_max.
pub fn right_transform_partial(
    alpha: &IntSeqWindow,
    beta: Reference<'_>,
    n_max: i64,
) -> Result<PartialTransform, SeqError> {
    transform(beta, n_max, |t| alpha.sup_le(t))
}

/// ←α^β_n = inf{d : α_d ≥ β_n} on the certified prefix of start..=n_max.
pub fn left_transform_partial(
    alpha: &IntSeqWindow,
    beta: Reference<'_>,
    n_max: i64,
) -> Result<PartialTransform, SeqError> {
    transform(beta, n_max, |t| alpha.inf_ge(t))
}

/// →α^β for every index up to n_max, or the first index the window cannot certify.
pub fn right_transform(alpha: &IntSeqWindow, beta: Reference<'_>, n_max: i64) -> Result<IntSeqWindow, SeqError> {
    let p = right_transform_partial(alpha, beta, n_max)?;
    match p.uncertified_from {
        None => Ok(p.window),
        Some(index) => Err(SeqError::UncertifiedSup {
            index,
            threshold: beta.value(index)?,
        }),
    }
}

/// ←α^β for every index up to n_max, or the first index the window cannot certify.
pub fn left_transform(alpha: &IntSeqWindow, beta: Reference<'_>, n_max: i64) -> Result<IntSeqWindow, SeqError> {
    let p = left_transform_partial(alpha, beta, n_max)?;
    match p.uncertified_from {
        None => Ok(p.window),
        Some(index) => Err(SeqError::UncertifiedInf {
            index,
            threshold: beta.value(index)?,
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Additivity {
    Subadditive,
    Superadditive,
    Both,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdditivityVerdict {
    pub class: Additivity,
    /// First (i, j) with α_{i+j} > α_i + α_j.
    pub sub_violation: Option<(i64, i64)>,
    /// First (i, j) with α_{i+j} < α_i + α_j.
    pub super_violation: Option<(i64, i64)>,
}

impl AdditivityVerdict {
    pub fn is_subadditive(&self) -> bool {
        self.sub_violation.is_none()
    }

    pub fn is_superadditive(&self) -> bool {
        self.super_violation.is_none()
    }
}

/// Checks α_{i+j} against α_i + α_j for all window pairs i ≤ j.
pub fn additivity_class(alpha: &IntSeqWindow) -> AdditivityVerdict {
    let (mut sub, mut sup) = (None, None);
    let (s, e) = (alpha.start, alpha.end());
    'outer: for i in s..=e {
        for j in i..=e {
            let Some(vij) = alpha.get(i + j) else { break };
            if let Some(sum) = alpha.get(i).unwrap().checked_add(alpha.get(j).unwrap()) {
                if sub.is_none() && vij > sum {
                    sub = Some((i, j));
                }
                if sup.is_none() && vij < sum {
                    sup = Some((i, j));
                }
            }
            if sub.is_some() && sup.is_some() {
                break 'outer;
            }
        }
    }
    let class = match (sub.is_none(), sup.is_none()) {
        (true, true) => Additivity::Both,
        (true, false) => Additivity::Subadditive,
        (false, true) => Additivity::Superadditive,
        (false, false) => Additivity::Neither,
    };
    AdditivityVerdict {
        class,
        sub_violation: sub,
        super_violation: sup,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GrowthKind {
    Sub,
    Super,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundSide {
    /// The limit is at most the bound.
    Upper,
    /// The limit is at least the bound.
    Lower,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthBound {
    #[serde(serialize_with = "ser_rational")]
    pub bound: BigRational,
    pub witness_n: i64,
    pub side: BoundSide,
}

pub(crate) fn ser_rational<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

/// One-sided bound on lim α_n/n: min over the window when subadditive, max when superadditive.
pub fn growth_window(alpha: &IntSeqWindow, kind: GrowthKind) -> Result<GrowthBound, SeqError> {
    let verdict = additivity_class(alpha);
    let violation = match kind {
        GrowthKind::Sub => verdict.sub_violation,
        GrowthKind::Super => verdict.super_violation,
    };
    if let Some(witness) = violation {
        return Err(SeqError::KindMismatch {
            declared: kind,
            witness,
        });
    }
    let mut best: Option<(BigRational, i64)> = None;
    for (n, v) in alpha.indexed() {
        let (Some(v), true) = (v.finite(), n >= 1) else {
            continue;
        };
        let r = BigRational::new(BigInt::from(v), BigInt::from(n));
        let better = match &best {
            None => true,
            Some((b, _)) => match kind {
                GrowthKind::Sub => r < *b,
                GrowthKind::Super => r > *b,
            },
        };
        if better {
            best = Some((r, n));
        }
    }
    let (bound, witness_n) = best.ok_or(SeqError::EmptyWindow)?;
    Ok(GrowthBound {
        bound,
        witness_n,
        side: match kind {
            GrowthKind::Sub => BoundSide::Upper,
            GrowthKind::Super => BoundSide::Lower,
        },
    })
}

/// α[k]_n = α_{n+k} for n ∈ ℕ with n > −k.
pub fn shift(alpha: &IntSeqWindow, k: i64) -> IntSeqWindow {
    let start = 1.max(1 - k).max(alpha.start - k);
    let values: Vec<ExtInt> = (start..)
        .map(|n| alpha.get(n + k))
        .take_while(|v| v.is_some())
        .flatten()
        .collect();
    let tail = alpha.cert.tail.map(|tb| TailBound {
        slope: tb.slope,
        offset: tb.offset + tb.slope * Rational64::from_integer(k),
    });
    IntSeqWindow {
        start,
        values,
        cert: Certificate {
            nondecreasing: alpha.cert.nondecreasing,
            tail,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ExtInt::*;

    fn odd_even(len: usize) -> IntSeqWindow {
        IntSeqWindow::from_fn(1, len, |n| if n % 2 == 1 { n } else { n / 2 })
            .with_tail(Rational64::new(1, 2), Rational64::zero())
    }

    #[test]
    fn transforms_of_odd_even() {
        let a = odd_even(10);
        let r = right_transform(&a, Reference::Identity, 5).unwrap();
        assert_eq!(r, IntSeqWindow::from_finite(1, &[2, 4, 6, 8, 10]).certified_nondecreasing().unwrap());
        let ra = odd_even(30);
        let r = right_transform(&ra, Reference::Identity, 10).unwrap();
        let l = left_transform(&r, Reference::Identity, 5).unwrap();
        assert_eq!(l.values(), &[Finite(1), Finite(1), Finite(2), Finite(2), Finite(3)]);
    }

    #[test]
    fn uncertified_sup_is_an_error() {
        let a = IntSeqWindow::from_finite(1, &[1, 1, 3, 2, 5, 3, 7, 4, 9, 5]);
        assert!(matches!(
            right_transform(&a, Reference::Identity, 5),
            Err(SeqError::UncertifiedSup { index: 1, .. })
        ));
        let p = right_transform_partial(&a.clone().with_tail(Rational64::new(1, 2), Rational64::zero()), Reference::Identity, 6).unwrap();
        assert_eq!(p.window.len(), 5);
        assert_eq!(p.uncertified_from, Some(6));
    }

    #[test]
    fn relative_transform_table() {
        let alpha = IntSeqWindow::from_fn(1, 40, |n| (n + 1) / 2).certified_nondecreasing().unwrap();
        let beta = IntSeqWindow::from_fn(1, 40, |n| n / 2).certified_nondecreasing().unwrap();
        let r = right_transform(&alpha, Reference::Window(&beta), 5).unwrap();
        assert_eq!(r.values(), &[NegInf, Finite(2), Finite(2), Finite(4), Finite(4)]);
        let r40 = right_transform(&alpha, Reference::Window(&beta), 30).unwrap();
        let back = left_transform(&r40, Reference::Window(&beta), 5).unwrap();
        assert_eq!(back.values(), &[Finite(2); 5]);
    }

    #[test]
    fn identity_is_fixed() {
        let id = IntSeqWindow::identity(20);
        assert_eq!(right_transform(&id, Reference::Identity, 10).unwrap().values(), &id.values()[..10]);
        assert_eq!(left_transform(&id, Reference::Identity, 10).unwrap().values(), &id.values()[..10]);
    }

    #[test]
    fn additivity_examples() {
        assert_eq!(additivity_class(&IntSeqWindow::identity(10)).class, Additivity::Both);
        assert_eq!(additivity_class(&IntSeqWindow::from_fn(1, 10, |n| 2 * n)).class, Additivity::Both);
        let j = IntSeqWindow::from_finite(1, &[4, 9, 13, 18, 22, 27]);
        let v = additivity_class(&j);
        assert_eq!(v.sub_violation, Some((1, 1)));
        assert!(!v.is_subadditive());
    }

    #[test]
    fn growth_examples() {
        let a = IntSeqWindow::from_fn(1, 20, |n| (n + 1) / 2);
        let g = growth_window(&a, GrowthKind::Sub).unwrap();
        assert_eq!(g.bound, BigRational::new(1.into(), 2.into()));
        assert_eq!(g.witness_n, 2);
        assert_eq!(g.side, BoundSide::Upper);
        let id = IntSeqWindow::identity(7);
        assert_eq!(growth_window(&id, GrowthKind::Super).unwrap().bound, BigRational::from_integer(1.into()));
        let j = IntSeqWindow::from_finite(1, &[4, 9, 13, 18]);
        assert!(matches!(growth_window(&j, GrowthKind::Sub), Err(SeqError::KindMismatch { .. })));
    }

    #[test]
    fn shift_examples() {
        let id = IntSeqWindow::identity(10);
        let s = shift(&id, 2);
        assert_eq!(s.start(), 1);
        assert_eq!(s.values()[..3], [Finite(3), Finite(4), Finite(5)]);
        assert_eq!(shift(&id, 0), id);
        let j = IntSeqWindow::from_finite(1, &[4, 9, 13, 18]);
        let back = shift(&j, -1);
        assert_eq!(back.start(), 2);
        assert_eq!(back.get(1), None);
        assert_eq!(back.values(), j.values());
        assert_eq!(shift(&j, 1).values(), &j.values()[1..]);
    }

    #[test]
    fn json_round_trip() {
        let w = parse_window(r#"{"start": 2, "values": [1, "-inf", "inf"]}"#).unwrap();
        assert_eq!(w.values(), &[Finite(1), NegInf, PosInf]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(parse_window(&s).unwrap(), w);
        assert_eq!(parse_window("[1,2,3]").unwrap().start(), 1);
        assert!(parse_window(r#"{"start":1,"values":[3,2],"nondecreasing":true}"#).is_err());
    }
}
