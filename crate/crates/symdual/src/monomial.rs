//! Monomial ideals: symbolic powers of squarefree ideals, monomial valuations,
//! Newton-polyhedron integral closure, resurgence windows and the symbolic polyhedron.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::numseq::{ExtInt, IntSeqWindow, SeqError};
use crate::scalars::ExponentVec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonomialError {
    #[error("the ideal is not squarefree")]
    NotSquarefree,
    #[error("vertex enumeration supports at most 9 variables, got {0}")]
    DimensionTooLarge(usize),
    #[error("no certificate for n = {n} within d_cap = {cap}")]
    CapExceeded { n: u32, cap: u32 },
    #[error("weight must be nonzero and have one entry per variable")]
    BadWeight,
    #[error("the valuation vanishes on the ideal")]
    NotSupported,
    #[error("invalid monomial ideal: {0}")]
    Invalid(String),
    #[error(transparent)]
    Seq(#[from] SeqError),
}

/// A monomial ideal of K[x_0..x_N] given by its minimal generators.
///
/// No generators means the zero ideal; the zero exponent means the unit ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MonomialIdealJson", into = "MonomialIdealJson")]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<ExponentVec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct MonomialIdealJson {
    #[serde(rename = "N")]
    n: usize,
    generators: Vec<Vec<u32>>,
}

impl TryFrom<MonomialIdealJson> for MonomialIdeal {
    type Error = MonomialError;

    fn try_from(j: MonomialIdealJson) -> Result<Self, Self::Error> {
        MonomialIdeal::new(j.n + 1, j.generators.into_iter().map(ExponentVec::new).collect())
    }
}

impl From<MonomialIdeal> for MonomialIdealJson {
    fn from(i: MonomialIdeal) -> Self {
        MonomialIdealJson {
            n: i.nvars - 1,
            generators: i.gens.into_iter().map(|g| g.0).collect(),
        }
    }
}

fn minimalize(mut gens: Vec<ExponentVec>) -> Vec<ExponentVec> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut kept: Vec<ExponentVec> = Vec::new();
    for g in gens {
        if !kept.iter().any(|h| h.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<ExponentVec>) -> Result<Self, MonomialError> {
        if nvars == 0 {
            return Err(MonomialError::Invalid("no variables".into()));
        }
        if let Some(g) = gens.iter().find(|g| g.len() != nvars) {
            return Err(MonomialError::Invalid(format!("generator {g} has wrong length")));
        }
        Ok(MonomialIdeal {
            nvars,
            gens: minimalize(gens),
        })
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![ExponentVec::zero(nvars)],
        }
    }

    /// The prime generated by the listed variables.
    pub fn prime(nvars: usize, vars: &[usize]) -> Self {
        let gens = vars.iter().map(|&i| ExponentVec::unit(nvars, i, 1)).collect();
        MonomialIdeal {
            nvars,
            gens: minimalize(gens),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[ExponentVec] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.degree() == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.entries().iter().all(|&e| e <= 1))
    }

    pub fn contains(&self, a: &ExponentVec) -> bool {
        self.gens.iter().any(|g| g.divides(a))
    }

    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Least generator degree; None for the zero ideal.
    pub fn alpha(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).min()
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).max()
    }

    pub fn mul(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.add(b));
            }
        }
        MonomialIdeal {
            nvars: self.nvars,
            gens: minimalize(gens),
        }
    }

    pub fn pow(&self, n: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.nvars);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal {
            nvars: self.nvars,
            gens: minimalize(gens),
        }
    }
}

impl std::fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let mut first = true;
            for (v, &e) in g.entries().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "x{v}")?;
                } else {
                    write!(f, "x{v}^{e}")?;
                }
            }
            if first {
                write!(f, "1")?;
            }
        }
        write!(f, ")")
    }
}

/// Minimal vertex covers of the generator hypergraph, each as a sorted variable list.
pub fn minimal_primes_squarefree(i: &MonomialIdeal) -> Result<Vec<Vec<usize>>, MonomialError> {
    if !i.is_squarefree() {
        return Err(MonomialError::NotSquarefree);
    }
    if i.is_unit() || i.is_zero() {
        return Ok(Vec::new());
    }
    let supports: Vec<Vec<usize>> = i
        .gens
        .iter()
        .map(|g| (0..i.nvars).filter(|&v| g.0[v] > 0).collect())
        .collect();
    let mut covers: Vec<Vec<usize>> = Vec::new();
    let mut cur = Vec::new();
    extend_cover(&supports, 0, &mut cur, &mut covers);
    let mut minimal: Vec<Vec<usize>> = Vec::new();
    covers.sort_by_key(|c| c.len());
    for c in covers {
        if !minimal.iter().any(|m| m.iter().all(|v| c.contains(v))) {
            minimal.push(c);
        }
    }
    minimal.sort();
    Ok(minimal)
}

/// Branches on the variables of the first uncovered edge.
fn extend_cover(edges: &[Vec<usize>], from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let Some(edge) = edges[from..].iter().find(|e| !e.iter().any(|v| cur.contains(v))) else {
        let mut c = cur.clone();
        c.sort_unstable();
        if !out.contains(&c) {
            out.push(c);
        }
        return;
    };
    for &v in edge {
        cur.push(v);
        extend_cover(edges, from, cur, out);
        cur.pop();
    }
}

/// I^(n) = ∩_P P^n over the minimal primes of a squarefree I.
pub fn symbolic_power(i: &MonomialIdeal, n: u32) -> Result<MonomialIdeal, MonomialError> {
    let primes = minimal_primes_squarefree(i)?;
    if i.is_zero() {
        return Ok(i.clone());
    }
    if n == 0 || primes.is_empty() {
        return Ok(MonomialIdeal::unit(i.nvars));
    }
    let mut acc = MonomialIdeal::unit(i.nvars);
    for p in &primes {
        acc = acc.intersect(&MonomialIdeal::prime(i.nvars, p).pow(n));
    }
    Ok(acc)
}

fn check_weight(w: &ExponentVec, i: &MonomialIdeal) -> Result<(), MonomialError> {
    if w.len() != i.nvars || w.degree() == 0 {
        return Err(MonomialError::BadWeight);
    }
    Ok(())
}

/// ν_w(I) = min over generators of w·a; None for the zero ideal.
pub fn nu_eval(w: &ExponentVec, i: &MonomialIdeal) -> Option<u64> {
    i.gens.iter().map(|g| g.dot(w)).min()
}

/// ν_w(I^(d)) for d = 1..=d_max.
pub fn nu_symbolic_seq(i: &MonomialIdeal, w: &ExponentVec, d_max: u32) -> Result<IntSeqWindow, MonomialError> {
    check_weight(w, i)?;
    let vals: Vec<i64> = (1..=d_max)
        .into_par_iter()
        .map(|d| symbolic_power(i, d).map(|p| nu_eval(w, &p).unwrap_or(0) as i64))
        .collect::<Result<_, _>>()?;
    Ok(IntSeqWindow::from_finite(1, &vals))
}

/// β^ν_n = sup{d ≥ 1 : ν(I^(d)) < ν(I^n)} for n = 1..=n_max; −∞ when the set is empty.
///
/// ν(I^(d)) is nondecreasing in d, so the first d reaching n·ν(I) certifies the sup.
pub fn beta_nu_window(i: &MonomialIdeal, w: &ExponentVec, n_max: u32, d_cap: u32) -> Result<IntSeqWindow, MonomialError> {
    check_weight(w, i)?;
    let base = nu_eval(w, i).ok_or(MonomialError::NotSupported)?;
    if base == 0 {
        return Err(MonomialError::NotSupported);
    }
    let nus = nu_symbolic_seq(i, w, d_cap)?;
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let target = n as i64 * base as i64;
        let first = nus
            .indexed()
            .find(|&(_, v)| v >= ExtInt::Finite(target))
            .map(|(d, _)| d)
            .ok_or(MonomialError::CapExceeded { n, cap: d_cap })?;
        out.push(if first == 1 {
            ExtInt::NegInf
        } else {
            ExtInt::Finite(first - 1)
        });
    }
    Ok(IntSeqWindow::new(1, out).certified_nondecreasing()?)
}

/// Whether a ∈ n·NP(I), i.e. x^a lies in the integral closure of I^n.
pub fn newton_closure_member(a: &ExponentVec, i: &MonomialIdeal, n: u32) -> bool {
    if i.is_zero() {
        return false;
    }
    // λ_g ≥ 0, Σ λ_g = n, Σ λ_g g_v + slack_v = a_v
    let k = i.gens.len();
    let nv = i.nvars;
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut rows = Vec::with_capacity(nv + 1);
    let mut rhs = Vec::with_capacity(nv + 1);
    let mut total = vec![q(0); k + nv];
    for t in total.iter_mut().take(k) {
        *t = q(1);
    }
    rows.push(total);
    rhs.push(q(n as i64));
    for v in 0..nv {
        let mut row = vec![q(0); k + nv];
        for (j, g) in i.gens.iter().enumerate() {
            row[j] = q(g.0[v] as i64);
        }
        row[k + v] = q(1);
        rows.push(row);
        rhs.push(q(a.0[v] as i64));
    }
    lp_feasible(&rows, &rhs)
}

/// Feasibility of {x ≥ 0 : A x = b} by phase-one simplex with Bland's rule.
pub fn lp_feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    let m = a.len();
    if m == 0 {
        return true;
    }
    let n = a[0].len();
    let width = n + m + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (r, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut full = vec![BigRational::zero(); width];
        for (j, x) in row.iter().enumerate() {
            full[j] = if flip { -x } else { x.clone() };
        }
        full[n + r] = BigRational::one();
        full[width - 1] = if flip { -rhs } else { rhs.clone() };
        t.push(full);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    let mut cost = vec![BigRational::zero(); width];
    for row in &t {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[width - 1] -= &row[width - 1];
    }
    loop {
        let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..m {
            if !t[r][enter].is_positive() {
                continue;
            }
            let ratio = &t[r][width - 1] / &t[r][enter];
            let better = match &leave {
                None => true,
                Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        // phase one is bounded below by zero
        let (r, _) = leave.expect("bounded phase-one objective");
        let piv = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x /= &piv;
        }
        let prow = t[r].clone();
        for (rr, row) in t.iter_mut().enumerate() {
            if rr != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (x, p) in cost.iter_mut().zip(&prow) {
                *x -= &f * p;
            }
        }
        basis[r] = enter;
    }
    cost[width - 1].is_zero()
}

fn ser_rational<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

fn ser_opt_rational<S: Serializer>(q: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_some(&q.to_string()),
        None => s.serialize_none(),
    }
}

fn ser_points<S: Serializer>(pts: &[Vec<BigRational>], s: S) -> Result<S::Ok, S::Error> {
    let text: Vec<Vec<String>> = pts
        .iter()
        .map(|p| p.iter().map(|x| x.to_string()).collect())
        .collect();
    text.serialize(s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResurgenceReport {
    /// λ_n = max{d : I^(d) ⊄ I^n}.
    pub lambda: IntSeqWindow,
    /// β_n = max{d : I^(d) ⊄ closure(I^n)}.
    pub beta_ic: IntSeqWindow,
    /// A generator of I^(λ_n) outside I^n.
    pub lambda_witness: Vec<Option<ExponentVec>>,
    #[serde(serialize_with = "ser_opt_rational")]
    pub lambda_ratio: Option<BigRational>,
    #[serde(serialize_with = "ser_opt_rational")]
    pub beta_ratio: Option<BigRational>,
    pub d_cap: u32,
}

/// λ_n and β_n for n = 1..=n_max.
///
/// A value is certified only when containment is verified for every d in (sup, d_cap];
/// I^(d) is decreasing in d, so containment at sup + 1 persists.
pub fn resurgence_windows(i: &MonomialIdeal, n_max: u32, d_cap: u32) -> Result<ResurgenceReport, MonomialError> {
    if !i.is_squarefree() {
        return Err(MonomialError::NotSquarefree);
    }
    let symbolic: Vec<MonomialIdeal> = (1..=d_cap)
        .into_par_iter()
        .map(|d| symbolic_power(i, d))
        .collect::<Result<_, _>>()?;
    let rows: Vec<(ExtInt, Option<ExponentVec>, ExtInt)> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let ordinary = i.pow(n);
            let mut lambda = ExtInt::NegInf;
            let mut witness = None;
            let mut beta = ExtInt::NegInf;
            for (idx, sp) in symbolic.iter().enumerate() {
                let d = idx as i64 + 1;
                if let Some(g) = sp.gens.iter().find(|g| !ordinary.contains(g)) {
                    lambda = ExtInt::Finite(d);
                    witness = Some(g.clone());
                }
                if sp.gens.iter().any(|g| !newton_closure_member(g, i, n)) {
                    beta = ExtInt::Finite(d);
                }
            }
            if lambda == ExtInt::Finite(d_cap as i64) || beta == ExtInt::Finite(d_cap as i64) {
                return Err(MonomialError::CapExceeded { n, cap: d_cap });
            }
            Ok((lambda, witness, beta))
        })
        .collect::<Result<_, _>>()?;
    let lambda = IntSeqWindow::new(1, rows.iter().map(|r| r.0).collect());
    let beta_ic = IntSeqWindow::new(1, rows.iter().map(|r| r.2).collect());
    Ok(ResurgenceReport {
        lambda_ratio: max_ratio(&lambda),
        beta_ratio: max_ratio(&beta_ic),
        lambda,
        beta_ic,
        lambda_witness: rows.into_iter().map(|r| r.1).collect(),
        d_cap,
    })
}

fn max_ratio(w: &IntSeqWindow) -> Option<BigRational> {
    w.indexed()
        .filter_map(|(n, v)| v.finite().map(|v| BigRational::new(v.into(), n.into())))
        .max()
}

/// {a ≥ 0 : coeffs·a ≥ rhs for every constraint}, with its vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalPolyhedron {
    pub nvars: usize,
    pub constraints: Vec<Constraint>,
    #[serde(serialize_with = "ser_points")]
    pub vertices: Vec<Vec<BigRational>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Constraint {
    pub coeffs: Vec<i64>,
    #[serde(serialize_with = "ser_rational")]
    pub rhs: BigRational,
}

impl RationalPolyhedron {
    /// Vertex enumeration over all nvars-subsets of the constraints (including a ≥ 0).
    pub fn new(nvars: usize, constraints: Vec<Constraint>) -> Result<Self, MonomialError> {
        if nvars > 9 {
            return Err(MonomialError::DimensionTooLarge(nvars));
        }
        let q = |x: i64| BigRational::from_integer(BigInt::from(x));
        let mut all: Vec<(Vec<BigRational>, BigRational)> = constraints
            .iter()
            .map(|c| (c.coeffs.iter().map(|&x| q(x)).collect(), c.rhs.clone()))
            .collect();
        for v in 0..nvars {
            let mut e = vec![q(0); nvars];
            e[v] = q(1);
            all.push((e, q(0)));
        }
        let mut found = BTreeSet::new();
        for subset in subsets(all.len(), nvars) {
            let sys: Vec<&(Vec<BigRational>, BigRational)> = subset.iter().map(|&k| &all[k]).collect();
            let Some(x) = solve_square(&sys) else {
                continue;
            };
            let feasible = all.iter().all(|(c, r)| {
                let lhs: BigRational = c.iter().zip(&x).map(|(a, b)| a * b).sum();
                lhs >= *r
            });
            if feasible {
                found.insert(x);
            }
        }
        Ok(RationalPolyhedron {
            nvars,
            constraints,
            vertices: found.into_iter().collect(),
        })
    }

    pub fn contains(&self, a: &[BigRational]) -> bool {
        a.iter().all(|x| !x.is_negative())
            && self.constraints.iter().all(|c| {
                let lhs: BigRational = c
                    .coeffs
                    .iter()
                    .zip(a)
                    .map(|(&k, x)| BigRational::from_integer(k.into()) * x)
                    .sum();
                lhs >= c.rhs
            })
    }
}

/// k-subsets of 0..n in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// The unique solution of the square system with equality in each row, if nonsingular.
fn solve_square(rows: &[&(Vec<BigRational>, BigRational)]) -> Option<Vec<BigRational>> {
    let n = rows.len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|(c, r)| {
            let mut row = c.clone();
            row.push(r.clone());
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &p;
        }
        let prow = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// SP(I) = {a ≥ 0 : Σ_{x_i ∈ P} a_i ≥ 1 for each minimal prime P}.
pub fn symbolic_polyhedron(i: &MonomialIdeal) -> Result<RationalPolyhedron, MonomialError> {
    let primes = minimal_primes_squarefree(i)?;
    if i.nvars > 9 {
        return Err(MonomialError::DimensionTooLarge(i.nvars));
    }
    let constraints = primes
        .iter()
        .map(|p| {
            let mut coeffs = vec![0i64; i.nvars];
            for &v in p {
                coeffs[v] = 1;
            }
            Constraint {
                coeffs,
                rhs: BigRational::one(),
            }
        })
        .collect();
    RationalPolyhedron::new(i.nvars, constraints)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyhedronInvariants {
    /// Minimum vertex coordinate sum.
    #[serde(serialize_with = "ser_rational")]
    pub waldschmidt: BigRational,
    /// Maximum vertex coordinate sum.
    #[serde(serialize_with = "ser_rational")]
    pub areg: BigRational,
    pub equal_sums: bool,
    /// A minimal generator whose exponent vector is a vertex, if any.
    pub generator_vertex: Option<ExponentVec>,
}

pub fn polyhedron_invariants(i: &MonomialIdeal) -> Result<PolyhedronInvariants, MonomialError> {
    let sp = symbolic_polyhedron(i)?;
    let sums: Vec<BigRational> = sp.vertices.iter().map(|v| v.iter().sum()).collect();
    let (Some(lo), Some(hi)) = (sums.iter().min(), sums.iter().max()) else {
        return Err(MonomialError::Invalid("the symbolic polyhedron has no vertices".into()));
    };
    let generator_vertex = i
        .gens
        .iter()
        .find(|g| {
            let v: Vec<BigRational> = g.0.iter().map(|&e| BigRational::from_integer(e.into())).collect();
            sp.vertices.contains(&v)
        })
        .cloned();
    Ok(PolyhedronInvariants {
        waldschmidt: lo.clone(),
        areg: hi.clone(),
        equal_sums: lo == hi,
        generator_vertex,
    })
}

/// reg(J(m,s)^(t)): m(s+1)n for t = 2n, m(s+1)n + m + s − 1 for t = 2n+1.
pub fn jms_regularity(m: i64, s: i64, t: i64) -> i64 {
    let n = t / 2;
    if t % 2 == 0 {
        m * (s + 1) * n
    } else {
        m * (s + 1) * n + m + s - 1
    }
}

pub fn jms_sequence(m: i64, s: i64, len: i64) -> IntSeqWindow {
    IntSeqWindow::from_fn(1, len as usize, |t| jms_regularity(m, s, t))
}

/// A squarefree ideal with 1–4 random generators of support at least 2 when possible.
pub fn random_squarefree(nvars: usize, rng: &mut impl Rng) -> MonomialIdeal {
    let k = rng.gen_range(1..=4);
    let gens = (0..k)
        .map(|_| loop {
            let mask: u32 = rng.gen_range(1..(1u32 << nvars));
            if mask.count_ones() >= 2 || nvars == 1 {
                break ExponentVec::new((0..nvars).map(|v| (mask >> v) & 1).collect());
            }
        })
        .collect();
    MonomialIdeal::new(nvars, gens).expect("well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVec {
        ExponentVec::new(v.to_vec())
    }

    fn triangle() -> MonomialIdeal {
        MonomialIdeal::new(3, vec![ev(&[1, 1, 0]), ev(&[1, 0, 1]), ev(&[0, 1, 1])]).unwrap()
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn minimal_primes() {
        let i = MonomialIdeal::new(2, vec![ev(&[1, 1])]).unwrap();
        assert_eq!(minimal_primes_squarefree(&i).unwrap(), vec![vec![0], vec![1]]);
        assert_eq!(
            minimal_primes_squarefree(&triangle()).unwrap(),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        let x0 = MonomialIdeal::prime(3, &[0]);
        assert_eq!(minimal_primes_squarefree(&x0).unwrap(), vec![vec![0]]);
        let bad = MonomialIdeal::new(2, vec![ev(&[2, 0])]).unwrap();
        assert_eq!(minimal_primes_squarefree(&bad), Err(MonomialError::NotSquarefree));
    }

    #[test]
    fn symbolic_powers() {
        let i = MonomialIdeal::new(2, vec![ev(&[1, 1])]).unwrap();
        for n in 1..5 {
            assert_eq!(symbolic_power(&i, n).unwrap(), i.pow(n));
        }
        let t = triangle();
        assert_eq!(symbolic_power(&t, 1).unwrap(), t);
        let s2 = symbolic_power(&t, 2).unwrap();
        assert!(s2.contains(&ev(&[1, 1, 1])));
        assert!(!t.pow(2).contains(&ev(&[1, 1, 1])));
        assert_eq!(t.pow(2).alpha(), Some(4));
        assert_eq!(s2.alpha(), Some(3));
    }

    #[test]
    fn valuations() {
        let t = triangle();
        let ones = ev(&[1, 1, 1]);
        assert_eq!(nu_eval(&ones, &t), Some(2));
        assert_eq!(nu_eval(&ones, &t.pow(3)), Some(6));
        assert_eq!(nu_eval(&ones, &symbolic_power(&t, 2).unwrap()), Some(3));
        let b = beta_nu_window(&t, &ones, 3, 10).unwrap();
        assert_eq!(b.get(1), Some(ExtInt::NegInf));
        assert_eq!(b.get(2), Some(ExtInt::Finite(2)));
        assert!(beta_nu_window(&t, &ev(&[0, 0, 0]), 2, 5).is_err());
        assert!(matches!(beta_nu_window(&t, &ones, 5, 3), Err(MonomialError::CapExceeded { .. })));
    }

    #[test]
    fn newton_closure() {
        let i = MonomialIdeal::new(2, vec![ev(&[2, 0]), ev(&[0, 2])]).unwrap();
        assert!(newton_closure_member(&ev(&[1, 1]), &i, 1));
        assert!(!newton_closure_member(&ev(&[1, 0]), &i, 1));
        assert!(newton_closure_member(&ev(&[2, 2]), &i, 2));
        assert!(!newton_closure_member(&ev(&[3, 0]), &i, 2));
        for g in triangle().pow(3).generators() {
            assert!(newton_closure_member(g, &triangle(), 3));
        }
    }

    #[test]
    fn resurgence_of_triangle_and_prime() {
        let r = resurgence_windows(&triangle(), 3, 10).unwrap();
        assert_eq!(r.lambda.get(1), Some(ExtInt::NegInf));
        assert_eq!(r.lambda.get(2), Some(ExtInt::Finite(2)));
        let p = MonomialIdeal::prime(3, &[0, 1]);
        let r = resurgence_windows(&p, 4, 8).unwrap();
        assert_eq!(r.lambda.get(1), Some(ExtInt::NegInf));
        for n in 2..=4 {
            assert_eq!(r.lambda.get(n), Some(ExtInt::Finite(n - 1)));
        }
        assert!(matches!(resurgence_windows(&triangle(), 4, 3), Err(MonomialError::CapExceeded { .. })));
    }

    #[test]
    fn polyhedra() {
        let i = MonomialIdeal::new(2, vec![ev(&[1, 1])]).unwrap();
        let sp = symbolic_polyhedron(&i).unwrap();
        assert_eq!(sp.vertices, vec![vec![q(1, 1), q(1, 1)]]);
        let inv = polyhedron_invariants(&i).unwrap();
        assert_eq!((inv.waldschmidt.clone(), inv.equal_sums), (q(2, 1), true));
        let sp = symbolic_polyhedron(&triangle()).unwrap();
        let h = q(1, 2);
        let mut expect = vec![
            vec![q(0, 1), q(1, 1), q(1, 1)],
            vec![q(1, 1), q(0, 1), q(1, 1)],
            vec![q(1, 1), q(1, 1), q(0, 1)],
            vec![h.clone(), h.clone(), h],
        ];
        expect.sort();
        assert_eq!(sp.vertices, expect);
        let inv = polyhedron_invariants(&triangle()).unwrap();
        assert_eq!(inv.waldschmidt, q(3, 2));
        assert_eq!(inv.areg, q(2, 1));
        assert!(!inv.equal_sums);
        assert!(inv.generator_vertex.is_some());
        let x0 = MonomialIdeal::prime(3, &[0]);
        assert_eq!(symbolic_polyhedron(&x0).unwrap().vertices, vec![vec![q(1, 1), q(0, 1), q(0, 1)]]);
    }

    #[test]
    fn jms_formula() {
        assert_eq!(jms_regularity(3, 2, 2), 9);
        assert_eq!(jms_regularity(3, 2, 3), 13);
        assert_eq!(jms_sequence(2, 1, 4).finite_values(), Some(vec![2, 4, 6, 8]));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"N":2,"generators":[[1,1,0],[1,0,1],[0,1,1]]}"#;
        let i: MonomialIdeal = serde_json::from_str(text).unwrap();
        assert_eq!(i, triangle());
        let back: MonomialIdeal = serde_json::from_str(&serde_json::to_string(&i).unwrap()).unwrap();
        assert_eq!(back, i);
        assert!(serde_json::from_str::<MonomialIdeal>(r#"{"N":1,"generators":[[1,1,1]]}"#).is_err());
        assert_eq!(i.to_string(), "(x0*x1, x0*x2, x1*x2)");
    }
}
