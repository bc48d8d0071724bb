//! Finite point sets in P^N: fat point schemes, regularity, jet separation and
//! the Waldschmidt / Seshadri window experiments.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::filtrations::{
    power_filtration, symbolic_points_filtration, Claim, FiltrationOracle,
};
use crate::linalg::{integer_rank, Echelon};
use crate::numseq::{
    additivity_class, growth_window, left_transform_partial, right_transform_partial,
    AdditivityVerdict, ExtInt, GrowthBound, GrowthKind, IntSeqWindow, Reference, SeqError,
};
use crate::polyalg::{dim_degree, monomials, vanishing_rows, GradedSubspace, Poly, PolyError};
use crate::scalars::{binomial_big, parse_rational, Field, FieldScalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointsError {
    #[error("point {0} is zero or has the wrong length")]
    BadPoint(usize),
    #[error("points {0} and {1} coincide projectively")]
    DuplicatePoints(usize, usize),
    #[error("no points given")]
    Empty,
    #[error("stabilization not reached by degree {cap} (m = {m})")]
    CapExceeded { m: u32, cap: u32 },
    #[error("jet separation still holds at the order cap {k_cap} in degree {d}")]
    JetCapExceeded { d: u32, k_cap: u32 },
    #[error("hypothesis not met: {0}")]
    HypothesisUnmet(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Seq(#[from] SeqError),
}

/// r points of P^N, stored in a normalized representative per point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfig {
    field: Field,
    nvars: usize,
    points: Vec<Vec<FieldScalar>>,
}

impl PointConfig {
    pub fn new(field: Field, nvars: usize, points: Vec<Vec<FieldScalar>>) -> Result<Self, PointsError> {
        if points.is_empty() {
            return Err(PointsError::Empty);
        }
        let mut normed = Vec::with_capacity(points.len());
        for (i, p) in points.into_iter().enumerate() {
            if p.len() != nvars || p.iter().all(|x| x.is_zero()) || p.iter().any(|x| x.field() != field) {
                return Err(PointsError::BadPoint(i));
            }
            let q = normalize(p);
            if let Some(j) = normed.iter().position(|o| *o == q) {
                return Err(PointsError::DuplicatePoints(j, i));
            }
            normed.push(q);
        }
        Ok(PointConfig {
            field,
            nvars,
            points: normed,
        })
    }

    /// Parses rational coordinate strings; `n` is the projective dimension N.
    pub fn parse(field: Field, n: usize, points: &[Vec<String>]) -> Result<Self, PointsError> {
        let pts = points
            .iter()
            .map(|p| {
                p.iter()
                    .map(|c| field.parse(c).map_err(PolyError::from))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        PointConfig::new(field, n + 1, pts)
    }

    /// The first r coordinate points e_0, …, e_{r−1} of P^N.
    pub fn coordinate_points(field: Field, n: usize, r: usize) -> Result<Self, PointsError> {
        let pts = (0..r)
            .map(|i| {
                (0..=n)
                    .map(|j| if i == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        PointConfig::new(field, n + 1, pts)
    }

    /// r points with integer coordinates in [−6, 6], drawn from `rng`.
    ///
    /// Small coordinates keep exact elimination cheap; a rational point is
    /// projectively an integer point anyway.
    pub fn random(field: Field, n: usize, r: usize, rng: &mut impl Rng) -> Self {
        loop {
            let pts: Vec<Vec<FieldScalar>> = (0..r)
                .map(|_| {
                    (0..=n)
                        .map(|_| {
                            let a: i64 = rng.gen_range(-6..=6);
                            field.from_i64(a)
                        })
                        .collect()
                })
                .collect();
            if let Ok(cfg) = PointConfig::new(field, n + 1, pts) {
                return cfg;
            }
        }
    }

    /// A seeded random configuration, reproducible from (seed, field, N, r).
    pub fn random_seeded(field: Field, n: usize, r: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random(field, n, r, &mut rng)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim(&self) -> usize {
        self.nvars - 1
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<FieldScalar>] {
        &self.points
    }

    /// Rank of the coordinate matrix; below N+1 the points lie on a hyperplane.
    pub fn span_rank(&self) -> usize {
        Echelon::from_rows(self.field, self.nvars, self.points.clone()).rank()
    }

    pub fn to_json(&self) -> PointConfigJson {
        PointConfigJson {
            n: self.dim(),
            char: self.field.characteristic() as u64,
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(|x| x.to_string()).collect())
                .collect(),
        }
    }
}

/// `{"N": 2, "points": [["1","0","0"], ...]}` with an optional "char".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointConfigJson {
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(default)]
    pub char: u64,
    pub points: Vec<Vec<String>>,
}

impl PointConfigJson {
    pub fn build(&self) -> Result<PointConfig, PointsError> {
        let field = Field::new(self.char).map_err(PolyError::from)?;
        PointConfig::parse(field, self.n, &self.points)
    }
}

/// Scales to a primitive integer vector with positive leading entry (ℚ) or
/// leading entry 1 (F_p).
fn normalize(p: Vec<FieldScalar>) -> Vec<FieldScalar> {
    let field = p[0].field();
    let lead = p.iter().find(|x| !x.is_zero()).unwrap().clone();
    if !field.is_rational() {
        let inv = lead.inv().unwrap();
        return p.iter().map(|x| x * &inv).collect();
    }
    let qs: Vec<BigRational> = p.iter().map(|x| x.as_rational().unwrap().clone()).collect();
    let mut l = BigInt::one();
    for q in &qs {
        l = l.lcm(q.denom());
    }
    let ints: Vec<BigInt> = qs
        .iter()
        .map(|q| (q * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    let sign = if lead.is_negative() { -BigInt::one() } else { BigInt::one() };
    ints.into_iter()
        .map(|x| FieldScalar::Rational(BigRational::from_integer(x / &g * &sign)))
        .collect()
}

/// Hilbert data of R/I(X)^(m).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FatSchemeReport {
    pub m: u32,
    /// H(d) = dim R_d − dim (I^(m))_d for d = 0..=reg.
    pub hilbert: IntSeqWindow,
    pub multiplicity_e: u64,
    /// reg(R/I^(m)): least d with H(d) = e.
    pub reg: u32,
    /// reg(I^(m)) = reg(R/I^(m)) + 1.
    pub reg_ideal: u32,
    /// α(I^(m)).
    pub alpha: u32,
}

/// A point configuration with shared oracles for its symbolic powers and point ideals.
#[derive(Debug, Clone)]
pub struct PointScheme {
    config: PointConfig,
    symbolic: FiltrationOracle,
    point_powers: Arc<Mutex<BTreeMap<usize, FiltrationOracle>>>,
    hilbert_cache: Arc<Mutex<BTreeMap<(u32, u32), u64>>>,
    /// The points in a projective frame where a spanning subset is e_0, …, e_N.
    framed: Vec<Vec<FieldScalar>>,
}

impl PointScheme {
    pub fn new(config: PointConfig) -> Self {
        let symbolic = symbolic_points_filtration(&config);
        PointScheme {
            symbolic,
            point_powers: Arc::new(Mutex::new(BTreeMap::new())),
            hilbert_cache: Arc::new(Mutex::new(BTreeMap::new())),
            framed: framed_points(&config),
            config,
        }
    }

    pub fn config(&self) -> &PointConfig {
        &self.config
    }

    pub fn symbolic(&self) -> &FiltrationOracle {
        &self.symbolic
    }

    /// e = r·C(m+N−1, N).
    pub fn multiplicity(&self, m: u32) -> u64 {
        let n = self.config.dim() as u64;
        let c = binomial_big(m as u64 + n - 1, n).to_u64().unwrap();
        self.config.len() as u64 * c
    }

    /// H(d) = dim R_d − dim (I^(m))_d, the rank of the stacked vanishing conditions.
    pub fn hilbert(&self, m: u32, d: u32) -> u64 {
        if let Some(&h) = self.hilbert_cache.lock().unwrap().get(&(m, d)) {
            return h;
        }
        let cols = dim_degree(self.config.nvars, d);
        let h = if self.config.field.is_rational() {
            let rows = self.framed.iter().flat_map(|p| integer_vanishing_rows(p, m, d)).collect();
            integer_rank(cols, rows) as u64
        } else {
            let mut rows = Vec::new();
            for p in &self.framed {
                rows.extend(vanishing_rows(p, m, d).expect("validated points"));
            }
            Echelon::rank_of(self.config.field, cols, rows) as u64
        };
        self.hilbert_cache.lock().unwrap().insert((m, d), h);
        h
    }

    pub fn fat_scheme_report(&self, m: u32, d_cap: u32) -> Result<FatSchemeReport, PointsError> {
        let m = m.max(1);
        let e = self.multiplicity(m);
        let mut hilbert = Vec::new();
        let mut alpha = None;
        for d in 0..=d_cap {
            let h = self.hilbert(m, d);
            if alpha.is_none() && (h as usize) < dim_degree(self.config.nvars, d) {
                alpha = Some(d);
            }
            hilbert.push(h as i64);
            if h == e {
                let alpha = match alpha {
                    Some(a) => a,
                    None => self
                        .symbolic
                        .initial_degree(m, d + 1, d + m + 1)
                        .ok_or(PointsError::CapExceeded { m, cap: d_cap })?,
                };
                return Ok(FatSchemeReport {
                    m,
                    hilbert: IntSeqWindow::from_finite(0, &hilbert),
                    multiplicity_e: e,
                    reg: d,
                    reg_ideal: d + 1,
                    alpha,
                });
            }
        }
        Err(PointsError::CapExceeded { m, cap: d_cap })
    }

    /// reg(I^(m)) for m = 1..=m_max.
    pub fn reg_seq(&self, m_max: u32, d_cap: u32) -> Result<IntSeqWindow, PointsError> {
        let regs: Vec<i64> = (1..=m_max)
            .into_par_iter()
            .map(|m| self.fat_scheme_report(m, d_cap).map(|r| r.reg_ideal as i64))
            .collect::<Result<_, _>>()?;
        Ok(IntSeqWindow::from_finite(1, &regs))
    }

    /// α(I^(m)) for m = 1..=m_max, from the first degree where H(d) < dim R_d.
    pub fn alpha_seq(&self, m_max: u32, d_cap: u32) -> Result<IntSeqWindow, PointsError> {
        let vals: Vec<i64> = (1..=m_max)
            .into_par_iter()
            .map(|m| {
                self.initial_degree(m, d_cap)
                    .map(|d| d as i64)
                    .ok_or(PointsError::CapExceeded { m, cap: d_cap })
            })
            .collect::<Result<_, _>>()?;
        Ok(IntSeqWindow::from_finite(1, &vals).certified_nondecreasing()?)
    }

    /// α(I^(m)) if it is at most `cap`.
    pub fn initial_degree(&self, m: u32, cap: u32) -> Option<u32> {
        let nv = self.config.nvars;
        (m..=cap).find(|&d| (self.hilbert(m, d) as usize) < dim_degree(nv, d))
    }

    /// soc(𝒟/L^s) for the symbolic filtration, read off the Hilbert functions.
    ///
    /// (L^s)_d is everything exactly when (I^(d−s))_d = 0; the answer is certified
    /// once that happens with α(I^(n)) − n nondecreasing up to that n, and `None` otherwise.
    pub fn dual_socle(&self, s: u32, d_cap: u32) -> Option<u32> {
        let s = s.max(1);
        let nv = self.config.nvars;
        let mut soc = s;
        let mut prev_gap: Option<i64> = None;
        for d in s + 1..=d_cap {
            let n = d - s;
            if self.hilbert(n, d) as usize == dim_degree(nv, d) {
                return Some(soc);
            }
            soc = d;
            let gap = self.initial_degree(n, d).expect("nonzero piece") as i64 - n as i64;
            if prev_gap.is_some_and(|g| gap < g) {
                return None;
            }
            prev_gap = Some(gap);
        }
        None
    }

    /// {P^n} for the ideal P of the i-th point.
    fn point_power_oracle(&self, i: usize) -> FiltrationOracle {
        let mut map = self.point_powers.lock().unwrap();
        map.entry(i)
            .or_insert_with(|| {
                power_filtration(&point_ideal_generators(&self.config.points[i])).expect("point ideal")
            })
            .clone()
    }

    /// Whether R_d → ⊕_i (R/P_i^{k+1})_d is onto, via the rank of the direct sum map.
    pub fn jet_sep_direct(&self, k: u32, d: u32) -> bool {
        let field = self.config.field;
        let nv = self.config.nvars;
        let total = dim_degree(nv, d);
        let mut target = 0usize;
        let mut kernel = GradedSubspace::full(field, nv, d, crate::polyalg::Ambient::Ring);
        for i in 0..self.config.len() {
            let q = self.point_power_oracle(i).piece(k + 1, d);
            target += total - q.dim();
            kernel = kernel.intersect(&q);
        }
        total - kernel.dim() == target
    }

    /// s(X, d): largest k ≥ 1 with k-jets separated in degree d, certified by a failure at k+1.
    pub fn jet_sep_index(&self, d: u32, k_cap: u32) -> Result<ExtInt, PointsError> {
        let mut best = ExtInt::NegInf;
        for k in 1..=k_cap + 1 {
            if self.jet_sep_direct(k, d) {
                best = ExtInt::Finite(k as i64);
            } else {
                return Ok(best);
            }
        }
        Err(PointsError::JetCapExceeded { d, k_cap })
    }

    /// sup{k ≥ 1 : reg(R/I^(k+1)) ≤ d}; for r ≥ 2 this stops by k = d.
    pub fn jet_index_from_regularity(&self, d: u32) -> ExtInt {
        let mut best = ExtInt::NegInf;
        let bound = if self.config.len() >= 2 { d } else { d + 1 };
        for k in 1..=bound {
            let m = k + 1;
            if self.hilbert(m, d) == self.multiplicity(m) {
                best = ExtInt::Finite(k as i64);
            } else {
                break;
            }
        }
        best
    }

    pub fn asymptotic_report(&self, d_cap: u32, m_cap: u32) -> Result<AsymptoticReport, PointsError> {
        if self.config.len() < 2 || self.config.dim() < 2 {
            return Err(PointsError::HypothesisUnmet(
                "needs at least two points in P^N with N ≥ 2".into(),
            ));
        }
        let m_cap = m_cap.max(2);
        let reg_cap = d_cap.max(m_cap * (self.config.len() as u32 + 1));
        // r_k = reg(I^(k+1)) ≥ k + 2
        let regs: Vec<i64> = (2..=m_cap)
            .into_par_iter()
            .map(|m| self.fat_scheme_report(m, reg_cap).map(|r| r.reg_ideal as i64))
            .collect::<Result<_, _>>()?;
        let r = IntSeqWindow::from_finite(1, &regs)
            .with_tail(Rational64::from_integer(1), Rational64::from_integer(2));
        // s_d = s(X, d − 1); s(X, 0) = −∞
        let s_vals: Vec<ExtInt> = (1..=d_cap)
            .into_par_iter()
            .map(|d| {
                if d == 1 {
                    Ok(ExtInt::NegInf)
                } else {
                    self.jet_sep_index(d - 1, d)
                }
            })
            .collect::<Result<_, _>>()?;
        let s = IntSeqWindow::new(1, s_vals).certified_nondecreasing()?;

        let mut claims = Vec::new();
        let via_r = right_transform_partial(&r, Reference::Identity, d_cap as i64)?;
        let bad = via_r.window.indexed().find(|&(d, v)| s.get(d) != Some(v));
        claims.push(Claim::new(
            "s_d = right(r)_d",
            bad.is_none() && !via_r.window.is_empty(),
            format!("checked d = 1..{}; first mismatch {bad:?}", via_r.window.end()),
        ));
        let via_s = left_transform_partial(&s, Reference::Identity, regs.len() as i64)?;
        let bad = via_s.window.indexed().find(|&(k, v)| r.get(k) != Some(v));
        claims.push(Claim::new(
            "r_k = left(s)_k",
            bad.is_none() && !via_s.window.is_empty(),
            format!("checked k = 1..{}; first mismatch {bad:?}", via_s.window.end()),
        ));

        let reg_full = {
            let first = self.fat_scheme_report(1, reg_cap)?.reg_ideal as i64;
            let mut v = vec![first];
            v.extend(&regs);
            IntSeqWindow::from_finite(1, &v)
        };
        let reg_additivity = additivity_class(&reg_full);
        claims.push(Claim::new(
            "reg(I^(m)) subadditive",
            reg_additivity.is_subadditive(),
            format!("{:?}", reg_additivity.sub_violation),
        ));
        let r1 = regs[0];
        let shifted = s.restrict(r1, d_cap as i64);
        let jet_additivity = additivity_class(&shifted);
        claims.push(Claim::new(
            "shifted jet sequence superadditive",
            jet_additivity.is_superadditive(),
            format!("window d = {}..{}; {:?}", shifted.start(), shifted.end(), jet_additivity.super_violation),
        ));

        let seshadri_lower = growth_window(&shifted, GrowthKind::Super).ok();
        let reg_upper = growth_window(&reg_full, GrowthKind::Sub).ok();
        if let (Some(a), Some(b)) = (&seshadri_lower, &reg_upper) {
            let prod = &a.bound * &b.bound;
            claims.push(Claim::new(
                "seshadri_lower * reg_upper <= 1",
                prod <= BigRational::one(),
                format!("{} * {} = {}", a.bound, b.bound, prod),
            ));
        }
        Ok(AsymptoticReport {
            reg_shifted: r,
            reg: reg_full,
            jets: s,
            reg_additivity,
            jet_additivity,
            seshadri_lower,
            reg_upper,
            claims,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticReport {
    /// r_k = reg(I^(k+1)), k ≥ 1.
    pub reg_shifted: IntSeqWindow,
    /// reg(I^(m)), m ≥ 1.
    pub reg: IntSeqWindow,
    /// s_d = s(X, d − 1), d ≥ 1.
    pub jets: IntSeqWindow,
    pub reg_additivity: AdditivityVerdict,
    pub jet_additivity: AdditivityVerdict,
    /// max s_d/d over d ≥ reg(I^(2)): a lower bound for ε(X).
    pub seshadri_lower: Option<GrowthBound>,
    /// min reg(I^(m))/m: an upper bound for the asymptotic regularity.
    pub reg_upper: Option<GrowthBound>,
    pub claims: Vec<Claim>,
}

impl AsymptoticReport {
    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }
}

/// Rows D_𝐚 F(p) for |𝐚| < m on R_d, for a point with integer coordinates:
/// the entry at x^𝐞 is C(𝐞, 𝐚)·p^(𝐞−𝐚).
fn integer_vanishing_rows(p: &[FieldScalar], m: u32, d: u32) -> Vec<Vec<BigInt>> {
    let nv = p.len();
    let target = monomials(nv, d);
    if d < m {
        return (0..target.len())
            .map(|i| (0..target.len()).map(|j| BigInt::from((i == j) as u8)).collect())
            .collect();
    }
    let coords: Vec<BigInt> = p.iter().map(|x| x.to_rational().to_integer()).collect();
    let powers: Vec<Vec<BigInt>> = coords
        .iter()
        .map(|x| {
            let mut v = vec![BigInt::one()];
            for k in 1..=d as usize {
                let next = &v[k - 1] * x;
                v.push(next);
            }
            v
        })
        .collect();
    let mut rows = Vec::new();
    for outer in 0..m {
        for a in monomials(nv, outer) {
            rows.push(
                target
                    .iter()
                    .map(|e| match e.checked_sub(&a) {
                        None => BigInt::zero(),
                        Some(rest) => {
                            let mut c = BigInt::one();
                            for i in 0..nv {
                                let k = rest.0[i] as usize;
                                if powers[i][k].is_zero() {
                                    return BigInt::zero();
                                }
                                c *= &powers[i][k];
                                if a.0[i] > 0 {
                                    c *= binomial_big(e.0[i] as u64, a.0[i] as u64);
                                }
                            }
                            c
                        }
                    })
                    .collect(),
            );
        }
    }
    rows
}

/// Applies a linear change of coordinates sending a maximal independent subset of
/// the points to coordinate points; Hilbert functions of fat points are invariant.
fn framed_points(cfg: &PointConfig) -> Vec<Vec<FieldScalar>> {
    let field = cfg.field;
    let nv = cfg.nvars;
    let mut basis: Vec<usize> = Vec::new();
    for i in 0..cfg.len() {
        let mut rows: Vec<Vec<FieldScalar>> = basis.iter().map(|&j| cfg.points[j].clone()).collect();
        rows.push(cfg.points[i].clone());
        if Echelon::from_rows(field, nv, rows).rank() == basis.len() + 1 {
            basis.push(i);
        }
        if basis.len() == nv {
            break;
        }
    }
    let mut frame: Vec<Vec<FieldScalar>> = basis.iter().map(|&j| cfg.points[j].clone()).collect();
    for k in 0..nv {
        if frame.len() == nv {
            break;
        }
        let e: Vec<FieldScalar> = (0..nv).map(|i| if i == k { field.one() } else { field.zero() }).collect();
        let mut rows = frame.clone();
        rows.push(e.clone());
        if Echelon::from_rows(field, nv, rows).rank() == frame.len() + 1 {
            frame.push(e);
        }
    }
    cfg.points
        .iter()
        .map(|p| {
            let c = solve_in_basis(frame.iter().collect(), p);
            primitive_coordinates(field, c)
        })
        .collect()
}

/// Coordinates c with Σ c_i b_i = p, by Gauss–Jordan on the augmented system.
fn solve_in_basis(basis: Vec<&Vec<FieldScalar>>, p: &[FieldScalar]) -> Vec<FieldScalar> {
    let n = basis.len();
    let mut a: Vec<Vec<FieldScalar>> = (0..n)
        .map(|row| {
            let mut r: Vec<FieldScalar> = basis.iter().map(|b| b[row].clone()).collect();
            r.push(p[row].clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("basis is independent");
        a.swap(col, piv);
        let inv = a[col][col].inv().expect("nonzero pivot");
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x = &*x - &(&f * y);
                }
            }
        }
    }
    a.into_iter().map(|r| r[n].clone()).collect()
}

fn primitive_coordinates(field: Field, c: Vec<FieldScalar>) -> Vec<FieldScalar> {
    if !field.is_rational() {
        return c;
    }
    let mut l = BigInt::one();
    for x in &c {
        l = l.lcm(x.to_rational().denom());
    }
    let ints: Vec<BigInt> = c.iter().map(|x| (x.to_rational() * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    ints.iter().map(|x| field.from_bigint(&(x / &g))).collect()
}

/// The 2×2 minors p_a x_b − p_b x_a, which generate the ideal of the point p.
pub fn point_ideal_generators(p: &[FieldScalar]) -> Vec<Poly> {
    let field = p[0].field();
    let nv = p.len();
    let mut gens = Vec::new();
    for a in 0..nv {
        for b in a + 1..nv {
            let g = Poly::var(field, nv, b)
                .scale(&p[a])
                .try_sub(&Poly::var(field, nv, a).scale(&p[b]))
                .unwrap();
            if !g.is_zero() {
                gens.push(g);
            }
        }
    }
    gens
}

pub fn fat_scheme_report(x: &PointConfig, m: u32, d_cap: u32) -> Result<FatSchemeReport, PointsError> {
    PointScheme::new(x.clone()).fat_scheme_report(m, d_cap)
}

pub fn reg_seq(x: &PointConfig, m_max: u32, d_cap: u32) -> Result<IntSeqWindow, PointsError> {
    PointScheme::new(x.clone()).reg_seq(m_max, d_cap)
}

pub fn jet_sep_direct(x: &PointConfig, k: u32, d: u32) -> bool {
    PointScheme::new(x.clone()).jet_sep_direct(k, d)
}

pub fn jet_sep_index(x: &PointConfig, d: u32, k_cap: u32) -> Result<ExtInt, PointsError> {
    PointScheme::new(x.clone()).jet_sep_index(d, k_cap)
}

pub fn asymptotic_report(x: &PointConfig, d_cap: u32, m_cap: u32) -> Result<AsymptoticReport, PointsError> {
    PointScheme::new(x.clone()).asymptotic_report(d_cap, m_cap)
}

/// The tabulated Waldschmidt constant of r general points in P^N, when known.
pub fn expected_waldschmidt(r: u64, n: u64) -> Option<BigRational> {
    let q = |a: u64, b: u64| BigRational::new(a.into(), b.into());
    if r >= 2 && r <= n + 1 {
        Some(q(r, r - 1))
    } else if r == n + 2 {
        Some(q(r, r - 2))
    } else if r == n + 3 && r % 2 == 0 {
        Some(q(r - 1, r - 3))
    } else if r == n + 3 {
        Some(q(r * (r - 2), r * r - 4 * r + 2))
    } else {
        None
    }
}

/// The tabulated growth of reg(S/L^s)/s for r general points in P^N.
pub fn expected_dual_growth(r: u64, n: u64) -> Option<BigRational> {
    let q = |a: u64, b: u64| BigRational::new(a.into(), b.into());
    if r <= n + 1 {
        Some(q(r, 1))
    } else if r == n + 2 {
        Some(q(r, 2))
    } else if r == n + 3 && r % 2 == 0 {
        Some(q(r - 1, 2))
    } else if r == n + 3 {
        Some(q(r * (r - 2), 2 * (r - 1)))
    } else {
        None
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NagataTrial {
    pub points: PointConfigJson,
    pub alpha: IntSeqWindow,
    pub reg: IntSeqWindow,
    /// min α(I^(m))/m: an upper bound for α̂.
    pub alpha_hat_upper: GrowthBound,
    /// min reg(I^(m))/m: an upper bound for the asymptotic regularity.
    pub reg_hat_upper: GrowthBound,
    /// α(I^(m)) ≥ m·r^{1/N}, decided as α^N ≥ m^N·r.
    pub nagata_inequality: Vec<bool>,
    /// Whether the points span P^N.
    pub nondegenerate: bool,
    /// β_s = soc(𝒟/L^s) where finite length could be certified.
    pub dual_beta: IntSeqWindow,
    /// max β_s/s on the certified window: a lower bound for lim β_s/s.
    #[serde(serialize_with = "ser_opt_rational")]
    pub dual_lower: Option<BigRational>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NagataReport {
    pub r: u64,
    #[serde(rename = "N")]
    pub n: u64,
    pub seed: u64,
    #[serde(serialize_with = "ser_opt_rational")]
    pub expected_waldschmidt: Option<BigRational>,
    #[serde(serialize_with = "ser_opt_rational")]
    pub expected_dual_growth: Option<BigRational>,
    pub trials: Vec<NagataTrial>,
}

fn ser_opt_rational<S: serde::Serializer>(q: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_some(&q.to_string()),
        None => s.serialize_none(),
    }
}

/// Random rational configurations of r points in P^N with window Waldschmidt,
/// regularity and dual-growth data.
pub fn nagata_check(
    r: u64,
    n: u64,
    trials: u32,
    m_cap: u32,
    d_cap: u32,
    seed: u64,
) -> Result<NagataReport, PointsError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let configs: Vec<PointConfig> = (0..trials.max(1))
        .map(|_| PointConfig::random(Field::RATIONALS, n as usize, r as usize, &mut rng))
        .collect();
    let trials = configs
        .into_par_iter()
        .map(|cfg| nagata_trial(cfg, r, n, m_cap, d_cap))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(NagataReport {
        r,
        n,
        seed,
        expected_waldschmidt: expected_waldschmidt(r, n),
        expected_dual_growth: expected_dual_growth(r, n),
        trials,
    })
}

fn nagata_trial(cfg: PointConfig, r: u64, n: u64, m_cap: u32, d_cap: u32) -> Result<NagataTrial, PointsError> {
    let nondegenerate = cfg.span_rank() == cfg.nvars();
    let scheme = PointScheme::new(cfg);
    let alpha = scheme.alpha_seq(m_cap, d_cap)?;
    let reg = scheme.reg_seq(m_cap, d_cap)?;
    let alpha_hat_upper = growth_window(&alpha, GrowthKind::Sub)?;
    let reg_hat_upper = growth_window(&reg, GrowthKind::Sub)?;
    let nagata_inequality = alpha
        .indexed()
        .map(|(m, a)| {
            let a = BigInt::from(a.finite().unwrap());
            let lhs = num_traits::pow(a, n as usize);
            let rhs = num_traits::pow(BigInt::from(m), n as usize) * BigInt::from(r);
            lhs >= rhs
        })
        .collect();
    let mut betas = Vec::new();
    if nondegenerate {
        for s in 1..=3u32 {
            match scheme.dual_socle(s, d_cap) {
                Some(soc) => betas.push(soc as i64),
                None => break,
            }
        }
    }
    let dual_beta = IntSeqWindow::from_finite(1, &betas);
    let dual_lower = growth_window(&dual_beta, GrowthKind::Super).ok().map(|g| g.bound);
    Ok(NagataTrial {
        points: scheme.config().to_json(),
        alpha,
        reg,
        alpha_hat_upper,
        reg_hat_upper,
        nagata_inequality,
        nondegenerate,
        dual_beta,
        dual_lower,
    })
}

/// Parses a rational literal used in point files.
pub fn parse_coordinate(s: &str, field: Field) -> Result<FieldScalar, PointsError> {
    let q = parse_rational(s).map_err(PolyError::from)?;
    Ok(field.from_rational(&q).map_err(PolyError::from)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::RATIONALS
    }

    fn pts(raw: &[&[&str]]) -> Vec<Vec<String>> {
        raw.iter().map(|p| p.iter().map(|s| s.to_string()).collect()).collect()
    }

    #[test]
    fn normalization_and_duplicates() {
        let c = PointConfig::parse(q(), 2, &pts(&[&["2", "4", "6"], &["-1/2", "1", "0"]])).unwrap();
        assert_eq!(c.points()[0], vec![q().from_i64(1), q().from_i64(2), q().from_i64(3)]);
        assert_eq!(c.points()[1], vec![q().from_i64(1), q().from_i64(-2), q().zero()]);
        let dup = PointConfig::parse(q(), 1, &pts(&[&["1", "2"], &["-3", "-6"]]));
        assert_eq!(dup, Err(PointsError::DuplicatePoints(0, 1)));
        assert!(PointConfig::parse(q(), 1, &pts(&[&["0", "0"]])).is_err());
        let f5 = Field::new(5).unwrap();
        let c = PointConfig::parse(f5, 1, &pts(&[&["2", "1"]])).unwrap();
        assert_eq!(c.points()[0], vec![f5.one(), f5.from_i64(3)]);
    }

    #[test]
    fn fat_points_hilbert() {
        let x = PointConfig::coordinate_points(q(), 2, 3).unwrap();
        let r = fat_scheme_report(&x, 2, 10).unwrap();
        assert_eq!(r.hilbert.finite_values(), Some(vec![1, 3, 6, 9]));
        assert_eq!(r.multiplicity_e, 9);
        assert_eq!((r.reg, r.reg_ideal, r.alpha), (3, 4, 3));
        let r1 = fat_scheme_report(&x, 1, 10).unwrap();
        assert_eq!((r1.reg, r1.reg_ideal, r1.alpha), (1, 2, 2));
        assert!(matches!(fat_scheme_report(&x, 4, 2), Err(PointsError::CapExceeded { .. })));
    }

    #[test]
    fn jet_indices_agree() {
        let x = PointScheme::new(PointConfig::coordinate_points(q(), 2, 3).unwrap());
        for d in 1..=6 {
            assert_eq!(x.jet_sep_index(d, d + 2).unwrap(), x.jet_index_from_regularity(d), "d = {d}");
        }
        let y = PointScheme::new(PointConfig::random_seeded(q(), 2, 4, 7));
        for d in 1..=5 {
            assert_eq!(y.jet_sep_index(d, d + 2).unwrap(), y.jet_index_from_regularity(d), "d = {d}");
        }
    }

    #[test]
    fn single_point_jets_never_fail() {
        let x = PointScheme::new(PointConfig::coordinate_points(q(), 2, 1).unwrap());
        assert!(matches!(x.jet_sep_index(2, 4), Err(PointsError::JetCapExceeded { .. })));
        assert_eq!(x.jet_index_from_regularity(3), ExtInt::Finite(3));
    }

    #[test]
    fn asymptotics_of_coordinate_points() {
        let x = PointConfig::coordinate_points(q(), 2, 3).unwrap();
        let r = asymptotic_report(&x, 7, 4).unwrap();
        assert!(r.all_passed(), "{:#?}", r.claims);
        let one = PointConfig::coordinate_points(q(), 2, 1).unwrap();
        assert!(asymptotic_report(&one, 5, 3).is_err());
    }

    #[test]
    fn closed_form_tables() {
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(expected_waldschmidt(3, 2), Some(q(3, 2)));
        assert_eq!(expected_waldschmidt(4, 2), Some(q(2, 1)));
        assert_eq!(expected_waldschmidt(5, 2), Some(q(15, 7)));
        assert_eq!(expected_waldschmidt(6, 3), Some(q(5, 3)));
        assert_eq!(expected_waldschmidt(9, 2), None);
        for (r, n) in [(3, 2), (4, 2), (5, 2), (6, 3), (7, 4)] {
            let a = expected_waldschmidt(r, n).unwrap();
            let b = expected_dual_growth(r, n).unwrap();
            assert_eq!(&a / (&a - BigRational::one()), b, "r = {r}, N = {n}");
        }
    }

    #[test]
    fn nagata_window_is_reproducible() {
        let a = nagata_check(4, 2, 2, 3, 12, 11).unwrap();
        let b = nagata_check(4, 2, 2, 3, 12, 11).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        for t in &a.trials {
            assert_eq!(t.alpha.finite_values(), Some(vec![2, 4, 6]));
        }
    }

    #[test]
    fn framed_hilbert_matches_the_symbolic_oracle() {
        let cfg = PointConfig::parse(q(), 2, &pts(&[&["1", "2", "3"], &["2", "-1", "1"], &["1/2", "1", "5"], &["3", "3", "-2"]])).unwrap();
        let x = PointScheme::new(cfg);
        for m in 1..=3 {
            for d in 0..=7 {
                let piece = x.symbolic().piece(m, d);
                assert_eq!(x.hilbert(m, d), (piece.ambient_dim() - piece.dim()) as u64, "m = {m}, d = {d}");
            }
        }
        let f7 = Field::new(7).unwrap();
        let y = PointScheme::new(PointConfig::parse(f7, 2, &pts(&[&["1", "2", "3"], &["2", "6", "1"]])).unwrap());
        for d in 0..=5 {
            let piece = y.symbolic().piece(2, d);
            assert_eq!(y.hilbert(2, d), (piece.ambient_dim() - piece.dim()) as u64);
        }
    }

    #[test]
    fn dual_socle_matches_l_transform() {
        let x = PointScheme::new(PointConfig::coordinate_points(q(), 2, 3).unwrap());
        for s in 1..=3 {
            let l = crate::filtrations::l_transform(x.symbolic(), s, 12);
            assert_eq!(x.dual_socle(s, 12), l.finite_length.certified_soc());
            assert_eq!(x.dual_socle(s, 12), Some(3 * s));
        }
    }
}
