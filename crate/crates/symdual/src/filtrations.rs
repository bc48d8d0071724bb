//! Filtration oracles {I_n}, differential closure, the L^s transform of inverse
//! systems and the α/β duality report.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::Echelon;
use crate::numseq::{
    additivity_class, growth_window, left_transform_partial, right_transform,
    AdditivityVerdict, GrowthBound, GrowthKind, IntSeqWindow, Reference, SeqError,
};
use crate::points::{PointConfig, PointsError};
use crate::polyalg::{
    diff_apply, dim_degree, ideal_piece, monomial_basis, parse_polynomial, vanishing_rows,
    Ambient, DividedPoly, GradedSubspace, Ordinary, Poly, PolyError,
};
use crate::scalars::{multi_choose, ExponentVec, Field, FieldScalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiltrationError {
    #[error("generator {0} is not homogeneous")]
    NonHomogeneous(String),
    #[error("integral Frobenius powers need a positive characteristic")]
    CharZero,
    #[error("members disagree on characteristic or variable count")]
    Mismatch,
    #[error("no generators given")]
    NoGenerators,
    #[error("I_{n} has no nonzero element in degree ≤ {cap}")]
    DegreeCapExceeded { n: u32, cap: u32 },
    #[error("hypothesis not met: {0}")]
    HypothesisUnmet(String),
    #[error("invalid descriptor: {0}")]
    Descriptor(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Points(#[from] PointsError),
    #[error(transparent)]
    Seq(#[from] SeqError),
}

type PieceFn = dyn Fn(u32, u32) -> GradedSubspace + Send + Sync;

enum Kind {
    Powers(Vec<Poly>),
    SymbolicPoints(PointConfig),
    Frobenius(Vec<Poly>),
    Differential(Vec<Poly>),
    Intersection(Vec<FiltrationOracle>),
    Family(Vec<GeneratorTemplate>),
    Custom(Box<PieceFn>),
}

/// A family {I_n} of homogeneous ideals answering degreewise queries (I_n)_d.
///
/// Pieces are memoized per (n, d); clones share the cache.
#[derive(Clone)]
pub struct FiltrationOracle {
    field: Field,
    nvars: usize,
    label: String,
    kind: Arc<Kind>,
    cache: Arc<RwLock<HashMap<(u32, u32), GradedSubspace>>>,
}

impl fmt::Debug for FiltrationOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiltrationOracle")
            .field("label", &self.label)
            .field("field", &self.field)
            .field("nvars", &self.nvars)
            .finish()
    }
}

fn check_generators(field: Field, nvars: usize, gens: &[Poly]) -> Result<(), FiltrationError> {
    if gens.iter().all(|g| g.is_zero()) {
        return Err(FiltrationError::NoGenerators);
    }
    for g in gens {
        if g.field() != field || g.nvars() != nvars {
            return Err(FiltrationError::Mismatch);
        }
        if !g.is_homogeneous() {
            return Err(FiltrationError::NonHomogeneous(g.to_string()));
        }
    }
    Ok(())
}

fn ring_of(gens: &[Poly]) -> Result<(Field, usize), FiltrationError> {
    let g = gens.first().ok_or(FiltrationError::NoGenerators)?;
    Ok((g.field(), g.nvars()))
}

impl FiltrationOracle {
    fn with_kind(field: Field, nvars: usize, label: String, kind: Kind) -> Self {
        FiltrationOracle {
            field,
            nvars,
            label,
            kind: Arc::new(kind),
            cache: Arc::new(RwLock::new(HashMap::new())),
        }
    }

    /// An oracle backed by an arbitrary piece function. The function must return
    /// subspaces of R_d in the oracle's field; n = 0 is answered with R_d before
    /// the function is consulted.
    pub fn custom(
        field: Field,
        nvars: usize,
        label: impl Into<String>,
        piece: impl Fn(u32, u32) -> GradedSubspace + Send + Sync + 'static,
    ) -> Self {
        Self::with_kind(field, nvars, label.into(), Kind::Custom(Box::new(piece)))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// (I_n)_d, with I_0 = R.
    pub fn piece(&self, n: u32, d: u32) -> GradedSubspace {
        if n == 0 {
            return GradedSubspace::full(self.field, self.nvars, d, Ambient::Ring);
        }
        if let Some(p) = self.cache.read().unwrap().get(&(n, d)) {
            return p.clone();
        }
        let p = self.compute(n, d);
        debug_assert_eq!(p.degree(), d);
        self.cache
            .write()
            .unwrap()
            .entry((n, d))
            .or_insert(p)
            .clone()
    }

    fn compute(&self, n: u32, d: u32) -> GradedSubspace {
        match &*self.kind {
            Kind::Powers(gens) => {
                let mut rows = Vec::new();
                for g in gens.iter().filter(|g| !g.is_zero()) {
                    let gd = g.degree().unwrap();
                    if gd <= d {
                        rows.extend(times_rows(g, &self.piece(n - 1, d - gd)));
                    }
                }
                GradedSubspace::from_vectors(self.field, self.nvars, d, Ambient::Ring, rows)
            }
            Kind::SymbolicPoints(cfg) => {
                let mut rows = Vec::new();
                for p in cfg.points() {
                    rows.extend(vanishing_rows(p, n, d).expect("validated points"));
                }
                let cols = dim_degree(self.nvars, d);
                let ker = Echelon::from_rows(self.field, cols, rows).nullspace();
                GradedSubspace::from_echelon(self.nvars, d, Ambient::Ring, ker)
            }
            Kind::Frobenius(gens) => {
                let p = self.field.characteristic();
                let factors = frobenius_factors(gens, n, p);
                product_piece(self.field, self.nvars, &factors, d)
            }
            Kind::Differential(gens) => differential_power_piece(gens, n, d)
                .expect("validated generators"),
            Kind::Intersection(members) => {
                let mut it = members.iter();
                let first = it.next().expect("nonempty intersection").piece(n, d);
                it.fold(first, |acc, m| acc.intersect(&m.piece(n, d)))
            }
            Kind::Family(templates) => {
                let gens: Vec<Poly> = templates.iter().map(|t| t.instantiate(n)).collect();
                ideal_piece(self.field, self.nvars, &gens, d).expect("validated templates")
            }
            Kind::Custom(f) => f(n, d),
        }
    }

    /// Least d ≤ cap with (I_n)_d ≠ 0, scanning upward from `from`.
    pub fn initial_degree(&self, n: u32, from: u32, cap: u32) -> Option<u32> {
        (from..=cap).find(|&d| !self.piece(n, d).is_zero())
    }
}

/// Spanning vectors of g·U in R_{e + deg g}, for U ⊆ R_e.
fn times_rows(g: &Poly, u: &GradedSubspace) -> Vec<Vec<FieldScalar>> {
    let d = u.degree() + g.degree().unwrap();
    u.basis_polys()
        .iter()
        .map(|f| g.try_mul(f).unwrap().to_vector(d).unwrap())
        .collect()
}

/// Generators of I^{[q]} = (g^q : g ∈ gens) for each base-p digit of n.
fn frobenius_factors(gens: &[Poly], n: u32, p: u32) -> Vec<Vec<Poly>> {
    let mut factors = Vec::new();
    let (mut rest, mut q) = (n, 1u32);
    while rest > 0 {
        let digit = rest % p;
        let powered: Vec<Poly> = gens.iter().map(|g| g.pow(q)).collect();
        for _ in 0..digit {
            factors.push(powered.clone());
        }
        rest /= p;
        q = q.saturating_mul(p);
    }
    factors
}

/// (J_1 ⋯ J_k)_d for ideals given by generator lists.
fn product_piece(field: Field, nvars: usize, factors: &[Vec<Poly>], d: u32) -> GradedSubspace {
    fn go(
        field: Field,
        nvars: usize,
        factors: &[Vec<Poly>],
        d: u32,
        memo: &mut HashMap<(usize, u32), GradedSubspace>,
    ) -> GradedSubspace {
        let k = factors.len();
        if k == 0 {
            return GradedSubspace::full(field, nvars, d, Ambient::Ring);
        }
        if let Some(p) = memo.get(&(k, d)) {
            return p.clone();
        }
        let mut rows = Vec::new();
        for g in factors[k - 1].iter().filter(|g| !g.is_zero()) {
            let gd = g.degree().unwrap();
            if gd <= d {
                let lower = go(field, nvars, &factors[..k - 1], d - gd, memo);
                rows.extend(times_rows(g, &lower));
            }
        }
        let acc = GradedSubspace::from_vectors(field, nvars, d, Ambient::Ring, rows);
        memo.insert((k, d), acc.clone());
        acc
    }
    go(field, nvars, factors, d, &mut HashMap::new())
}

/// {I^n}: ordinary powers of the ideal generated by `gens`.
pub fn power_filtration(gens: &[Poly]) -> Result<FiltrationOracle, FiltrationError> {
    let (field, nvars) = ring_of(gens)?;
    check_generators(field, nvars, gens)?;
    let label = format!("powers({})", join(gens));
    Ok(FiltrationOracle::with_kind(
        field,
        nvars,
        label,
        Kind::Powers(gens.to_vec()),
    ))
}

/// {I(X)^(n)} = {∩_p 𝔪_p^n} for a finite point set.
pub fn symbolic_points_filtration(points: &PointConfig) -> FiltrationOracle {
    FiltrationOracle::with_kind(
        points.field(),
        points.nvars(),
        format!("symbolic({} points in P^{})", points.len(), points.nvars() - 1),
        Kind::SymbolicPoints(points.clone()),
    )
}

/// Integral Frobenius powers I^[n] = I^{n_0}(I^{[p]})^{n_1}⋯ for n = Σ n_i p^i.
pub fn frobenius_integral_filtration(gens: &[Poly]) -> Result<FiltrationOracle, FiltrationError> {
    let (field, nvars) = ring_of(gens)?;
    if field.is_rational() {
        return Err(FiltrationError::CharZero);
    }
    check_generators(field, nvars, gens)?;
    Ok(FiltrationOracle::with_kind(
        field,
        nvars,
        format!("frobenius({})", join(gens)),
        Kind::Frobenius(gens.to_vec()),
    ))
}

/// {I^<n>}: differential powers of the ideal generated by `gens`.
pub fn differential_filtration(gens: &[Poly]) -> Result<FiltrationOracle, FiltrationError> {
    let (field, nvars) = ring_of(gens)?;
    check_generators(field, nvars, gens)?;
    Ok(FiltrationOracle::with_kind(
        field,
        nvars,
        format!("differential({})", join(gens)),
        Kind::Differential(gens.to_vec()),
    ))
}

/// A family I_n generated by templates whose exponents depend affinely on n.
pub fn family_filtration(
    field: Field,
    nvars: usize,
    templates: &[String],
) -> Result<FiltrationOracle, FiltrationError> {
    if templates.is_empty() {
        return Err(FiltrationError::NoGenerators);
    }
    let parsed: Vec<GeneratorTemplate> = templates
        .iter()
        .map(|t| GeneratorTemplate::new(t, field, nvars))
        .collect::<Result<_, _>>()?;
    Ok(FiltrationOracle::with_kind(
        field,
        nvars,
        format!("family({})", templates.join(", ")),
        Kind::Family(parsed),
    ))
}

/// Degreewise intersection of filtrations over one ring.
pub fn intersect(oracles: &[FiltrationOracle]) -> Result<FiltrationOracle, FiltrationError> {
    let first = oracles.first().ok_or(FiltrationError::NoGenerators)?;
    if oracles
        .iter()
        .any(|o| o.field != first.field || o.nvars != first.nvars)
    {
        return Err(FiltrationError::Mismatch);
    }
    if oracles.len() == 1 {
        return Ok(first.clone());
    }
    let label = oracles
        .iter()
        .map(|o| o.label.as_str())
        .collect::<Vec<_>>()
        .join(" ∩ ");
    Ok(FiltrationOracle::with_kind(
        first.field,
        first.nvars,
        label,
        Kind::Intersection(oracles.to_vec()),
    ))
}

fn join(gens: &[Poly]) -> String {
    gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
}

/// (I^<n>)_d: forms f with D_𝐚 f ∈ I for every |𝐚| ≤ n−1.
pub fn differential_power_piece(gens: &[Poly], n: u32, d: u32) -> Result<GradedSubspace, FiltrationError> {
    let (field, nvars) = ring_of(gens)?;
    check_generators(field, nvars, gens)?;
    let target = monomial_basis(nvars, d);
    let mut rows: Vec<Vec<FieldScalar>> = Vec::new();
    for order in 0..n.min(d + 1) {
        let dual = ideal_piece(field, nvars, gens, d - order)?.perp();
        if dual.is_zero() {
            continue;
        }
        let lower = monomial_basis(nvars, d - order);
        let hs = dual.echelon().rows();
        for a in monomial_basis(nvars, order).monomials() {
            for h in &hs {
                let row = target
                    .monomials()
                    .iter()
                    .map(|b| match b.checked_sub(a) {
                        None => field.zero(),
                        Some(rest) => {
                            let hv = &h[lower.index_of(&rest).unwrap()];
                            if hv.is_zero() {
                                field.zero()
                            } else {
                                hv * &multi_choose(b, a, field)
                            }
                        }
                    })
                    .collect();
                rows.push(row);
            }
        }
    }
    let cols = target.len();
    let ker = Echelon::from_rows(field, cols, rows).nullspace();
    Ok(GradedSubspace::from_echelon(nvars, d, Ambient::Ring, ker))
}

/// A generator whose exponents are affine in n, written like "x0^n", "x1^{2n+1}".
#[derive(Debug, Clone)]
struct GeneratorTemplate {
    text: String,
    field: Field,
    nvars: usize,
}

impl GeneratorTemplate {
    fn new(text: &str, field: Field, nvars: usize) -> Result<Self, FiltrationError> {
        let t = GeneratorTemplate {
            text: text.to_string(),
            field,
            nvars,
        };
        for n in 1..4 {
            let g = t.try_instantiate(n)?;
            if !g.is_homogeneous() {
                return Err(FiltrationError::NonHomogeneous(g.to_string()));
            }
        }
        Ok(t)
    }

    fn instantiate(&self, n: u32) -> Poly {
        self.try_instantiate(n).expect("validated template")
    }

    fn try_instantiate(&self, n: u32) -> Result<Poly, FiltrationError> {
        let text = substitute_exponents(&self.text, n as i64)?;
        Ok(parse_polynomial::<Ordinary>(&text, self.field, self.nvars)?)
    }
}

fn substitute_exponents(text: &str, n: i64) -> Result<String, FiltrationError> {
    let bad = || FiltrationError::Descriptor(format!("bad exponent in {text:?}"));
    let mut out = String::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        out.push(c);
        i += 1;
        if c != '^' {
            continue;
        }
        let expr: String = if chars.get(i) == Some(&'{') {
            let close = chars[i..].iter().position(|&x| x == '}').ok_or_else(bad)? + i;
            let e = chars[i + 1..close].iter().collect();
            i = close + 1;
            e
        } else {
            let e: String = chars[i..]
                .iter()
                .take_while(|x| x.is_ascii_alphanumeric())
                .collect();
            i += e.len();
            e
        };
        let v = eval_affine(&expr, n).ok_or_else(bad)?;
        if v < 0 {
            return Err(bad());
        }
        out.push_str(&v.to_string());
    }
    Ok(out)
}

/// Evaluates "3", "n", "2n", "2n+1", "n-1" at n.
fn eval_affine(expr: &str, n: i64) -> Option<i64> {
    let e: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    let (head, tail) = match e[1..].find(['+', '-']) {
        Some(pos) => (&e[..pos + 1], &e[pos + 1..]),
        None => (&e[..], ""),
    };
    let head_val = if let Some(coef) = head.strip_suffix('n') {
        let c = if coef.is_empty() { 1 } else { coef.parse::<i64>().ok()? };
        c * n
    } else {
        head.parse::<i64>().ok()?
    };
    let tail_val = if tail.is_empty() {
        0
    } else {
        tail.parse::<i64>().ok()?
    };
    Some(head_val + tail_val)
}

/// JSON descriptor of a filtration.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FiltrationSpec {
    Powers {
        #[serde(rename = "N")]
        n: usize,
        #[serde(default)]
        char: u64,
        generators: Vec<String>,
    },
    SymbolicPoints {
        #[serde(rename = "N")]
        n: usize,
        #[serde(default)]
        char: u64,
        points: Vec<Vec<String>>,
    },
    Frobenius {
        #[serde(rename = "N")]
        n: usize,
        char: u64,
        generators: Vec<String>,
    },
    Differential {
        #[serde(rename = "N")]
        n: usize,
        #[serde(default)]
        char: u64,
        generators: Vec<String>,
    },
    Intersection {
        members: Vec<FiltrationSpec>,
    },
    Family {
        #[serde(rename = "N")]
        n: usize,
        #[serde(default)]
        char: u64,
        generators: Vec<String>,
    },
}

impl FiltrationSpec {
    pub fn build(&self) -> Result<FiltrationOracle, FiltrationError> {
        let parse_gens = |n: usize, char: u64, gens: &[String]| -> Result<Vec<Poly>, FiltrationError> {
            let field = Field::new(char).map_err(PolyError::from)?;
            gens.iter()
                .map(|g| parse_polynomial::<Ordinary>(g, field, n + 1).map_err(Into::into))
                .collect()
        };
        match self {
            FiltrationSpec::Powers { n, char, generators } => {
                power_filtration(&parse_gens(*n, *char, generators)?)
            }
            FiltrationSpec::Frobenius { n, char, generators } => {
                frobenius_integral_filtration(&parse_gens(*n, *char, generators)?)
            }
            FiltrationSpec::Differential { n, char, generators } => {
                differential_filtration(&parse_gens(*n, *char, generators)?)
            }
            FiltrationSpec::SymbolicPoints { n, char, points } => {
                let field = Field::new(*char).map_err(PolyError::from)?;
                let cfg = PointConfig::parse(field, *n, points)?;
                Ok(symbolic_points_filtration(&cfg))
            }
            FiltrationSpec::Intersection { members } => {
                let built: Vec<FiltrationOracle> =
                    members.iter().map(|m| m.build()).collect::<Result<_, _>>()?;
                intersect(&built)
            }
            FiltrationSpec::Family { n, char, generators } => {
                let field = Field::new(*char).map_err(PolyError::from)?;
                family_filtration(field, n + 1, generators)
            }
        }
    }
}

/// A failed nesting or ideal-slice condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationViolation {
    pub n: u32,
    pub d: u32,
    pub condition: &'static str,
}

/// Checks (I_{n+1})_d ⊆ (I_n)_d and R_1·(I_n)_d ⊆ (I_n)_{d+1} within the bounds.
pub fn check_filtration(oracle: &FiltrationOracle, n_max: u32, d_max: u32) -> Result<(), FiltrationViolation> {
    for n in 0..=n_max {
        for d in 0..=d_max {
            let p = oracle.piece(n, d);
            if n < n_max && !oracle.piece(n + 1, d).is_subspace_of(&p) {
                return Err(FiltrationViolation { n: n + 1, d, condition: "nesting" });
            }
            if d < d_max && !crate::polyalg::multiply_up(&p, 1).is_subspace_of(&oracle.piece(n, d + 1)) {
                return Err(FiltrationViolation { n, d, condition: "ideal slice" });
            }
        }
    }
    Ok(())
}

/// Orders of the generating operators: 1 in characteristic 0, the powers p^i otherwise.
fn operator_orders(field: Field, max_order: u32) -> Vec<u32> {
    let p = field.characteristic();
    if p == 0 {
        return if max_order >= 1 { vec![1] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut q = 1u32;
    while q <= max_order {
        out.push(q);
        match q.checked_mul(p) {
            Some(v) => q = v,
            None => break,
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DcWitness {
    pub n: u32,
    pub d: u32,
    pub operator: ExponentVec,
    pub element: Poly,
    pub image: Poly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DcVerdict {
    pub closed: bool,
    pub n_max: u32,
    pub d_max: u32,
    pub witness: Option<DcWitness>,
}

/// Tests D F ∈ I_{n−k} for the generating operators D of order k and every
/// basis element F of (I_n)_d, n ≤ n_max, d ≤ d_max.
pub fn is_differentially_closed(oracle: &FiltrationOracle, n_max: u32, d_max: u32) -> DcVerdict {
    let nv = oracle.nvars();
    for n in 1..=n_max {
        for d in 0..=d_max {
            let piece = oracle.piece(n, d);
            if piece.is_zero() {
                continue;
            }
            let basis = piece.basis_polys();
            for k in operator_orders(oracle.field(), (n - 1).min(d)) {
                let target = oracle.piece(n - k, d - k);
                for j in 0..nv {
                    let op = ExponentVec::unit(nv, j, k);
                    for f in &basis {
                        let img = diff_apply(&op, f);
                        if !target.contains_poly(&img) {
                            return DcVerdict {
                                closed: false,
                                n_max,
                                d_max,
                                witness: Some(DcWitness {
                                    n,
                                    d,
                                    operator: op,
                                    element: f.clone(),
                                    image: img,
                                }),
                            };
                        }
                    }
                }
            }
        }
    }
    DcVerdict {
        closed: true,
        n_max,
        d_max,
        witness: None,
    }
}

/// Finite-length status of 𝒟/L^s.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum FiniteLength {
    /// α_n > n+s from `witness_n` on, certified by α_n − n nondecreasing up to it.
    Certified { soc: u32, witness_n: u32 },
    /// Only the window was inspected; the socle degree is at least this.
    LowerBound { soc_at_least: u32 },
}

impl FiniteLength {
    pub fn certified_soc(&self) -> Option<u32> {
        match self {
            FiniteLength::Certified { soc, .. } => Some(*soc),
            FiniteLength::LowerBound { .. } => None,
        }
    }
}

/// Degree pieces of L^s = ⊕_{d ≥ s+1} ((I_{d−s})_d)^⊥ ⊆ 𝒟.
#[derive(Debug, Clone)]
pub struct LPieces {
    pub s: u32,
    pub field: Field,
    pub nvars: usize,
    pub pieces: BTreeMap<u32, GradedSubspace>,
    pub finite_length: FiniteLength,
}

impl LPieces {
    pub fn piece(&self, d: u32) -> Option<&GradedSubspace> {
        self.pieces.get(&d)
    }

    pub fn d_max(&self) -> u32 {
        self.pieces.keys().next_back().copied().unwrap_or(self.s)
    }

    /// dim (𝒟/L^s)_d for s+1 ≤ d ≤ d_max.
    pub fn quotient_dim(&self, d: u32) -> Option<usize> {
        self.pieces.get(&d).map(|p| p.ambient_dim() - p.dim())
    }
}

/// Computes L^s up to d_max and tries to certify that 𝒟/L^s has finite length.
pub fn l_transform(oracle: &FiltrationOracle, s: u32, d_max: u32) -> LPieces {
    let s = s.max(1);
    let mut pieces = BTreeMap::new();
    for d in s + 1..=d_max {
        pieces.insert(d, oracle.piece(d - s, d).perp());
    }
    let finite_length = certify_finite_length(oracle, s, &pieces);
    LPieces {
        s,
        field: oracle.field(),
        nvars: oracle.nvars(),
        pieces,
        finite_length,
    }
}

fn certify_finite_length(oracle: &FiltrationOracle, s: u32, pieces: &BTreeMap<u32, GradedSubspace>) -> FiniteLength {
    // (𝒟/L^s)_d ≅ (I_{d−s})_d, nonzero for every d ≤ s
    let mut soc = s;
    let mut prev_gap: Option<i64> = None;
    for (&d, p) in pieces {
        let n = d - s;
        if p.is_full() {
            // α_n > n + s; the certificate also needs α_m − m nondecreasing for m < n
            return FiniteLength::Certified { soc, witness_n: n };
        }
        soc = d;
        let alpha = oracle
            .initial_degree(n, 0, d)
            .expect("nonzero piece below d");
        let gap = alpha as i64 - n as i64;
        if let Some(g) = prev_gap {
            if gap < g {
                return FiniteLength::LowerBound { soc_at_least: soc };
            }
        }
        prev_gap = Some(gap);
    }
    FiniteLength::LowerBound { soc_at_least: soc }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealWitness {
    pub d: u32,
    pub variable: usize,
    pub order: u32,
    pub element: DividedPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealVerdict {
    pub is_ideal: bool,
    pub d_max: u32,
    pub witness: Option<IdealWitness>,
}

/// Tests Y_j^[k]·L_d ⊆ L_{d+k} for generating orders k (1, or p^i) with d+k ≤ d_max.
pub fn is_ideal(l: &LPieces, d_max: u32) -> IdealVerdict {
    let d_max = d_max.min(l.d_max());
    for (&d, piece) in l.pieces.range(..=d_max) {
        if piece.is_zero() {
            continue;
        }
        let elems = piece.basis_divided();
        for k in operator_orders(l.field, d_max.saturating_sub(d)) {
            let target = &l.pieces[&(d + k)];
            for j in 0..l.nvars {
                let y = DividedPoly::monomial(ExponentVec::unit(l.nvars, j, k), l.field.one());
                for g in &elems {
                    let prod = y.try_mul(g).expect("same ring");
                    if !target.contains_divided(&prod) {
                        return IdealVerdict {
                            is_ideal: false,
                            d_max,
                            witness: Some(IdealWitness {
                                d,
                                variable: j,
                                order: k,
                                element: g.clone(),
                            }),
                        };
                    }
                }
            }
        }
    }
    IdealVerdict {
        is_ideal: true,
        d_max,
        witness: None,
    }
}

/// α_n = least d with (I_n)_d ≠ 0, for n = 1..=n_max.
pub fn alpha_seq(oracle: &FiltrationOracle, n_max: u32, d_cap: u32) -> Result<IntSeqWindow, FiltrationError> {
    let mut vals = Vec::with_capacity(n_max as usize);
    let mut from = 0;
    for n in 1..=n_max {
        let a = oracle
            .initial_degree(n, from, d_cap)
            .ok_or(FiltrationError::DegreeCapExceeded { n, cap: d_cap })?;
        vals.push(a as i64);
        from = a;
    }
    // nesting of the filtration makes α nondecreasing everywhere
    Ok(IntSeqWindow::from_finite(1, &vals).certified_nondecreasing()?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Claim {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Claim {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DualityReport {
    pub label: String,
    pub alpha: IntSeqWindow,
    /// α_n − n.
    pub gap: IntSeqWindow,
    /// β_s = soc(𝒟/L^s) from the L^s pieces.
    pub beta: IntSeqWindow,
    /// s + (→(α − id))_s computed from α alone.
    pub beta_from_alpha: IntSeqWindow,
    /// ←(β − id)_n on the certified prefix.
    pub gap_from_beta: IntSeqWindow,
    pub alpha_additivity: AdditivityVerdict,
    pub beta_additivity: AdditivityVerdict,
    pub alpha_hat_upper: GrowthBound,
    pub beta_hat_lower: GrowthBound,
    pub claims: Vec<Claim>,
}

impl DualityReport {
    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// Computes α and β = soc(𝒟/L^s) and cross-checks them through the transforms.
pub fn duality_report(
    oracle: &FiltrationOracle,
    n_max: u32,
    s_max: u32,
    d_cap: u32,
) -> Result<DualityReport, FiltrationError> {
    let n_max = n_max.max(1);
    let s_max = s_max.max(1);
    // α until α_n − n exceeds s_max, but at least n_max terms
    let mut alpha_vals: Vec<i64> = Vec::new();
    let mut from = 0;
    for n in 1u32.. {
        let Some(a) = oracle.initial_degree(n, from, d_cap) else {
            if n <= n_max {
                return Err(FiltrationError::DegreeCapExceeded { n, cap: d_cap });
            }
            break;
        };
        alpha_vals.push(a as i64);
        from = a;
        if n >= n_max && a as i64 - n as i64 > s_max as i64 {
            break;
        }
    }
    let alpha = IntSeqWindow::from_finite(1, &alpha_vals).certified_nondecreasing()?;
    let gaps: Vec<i64> = alpha_vals
        .iter()
        .enumerate()
        .map(|(i, a)| a - (i as i64 + 1))
        .collect();
    if gaps.windows(2).any(|w| w[1] < w[0]) {
        return Err(FiltrationError::HypothesisUnmet(
            "α_n − n decreases on the window".into(),
        ));
    }
    if gaps.first() == gaps.last() {
        return Err(FiltrationError::HypothesisUnmet(format!(
            "α_n − n is constant ({}) on the window",
            gaps[0]
        )));
    }
    let gap = IntSeqWindow::from_finite(1, &gaps).certified_nondecreasing()?;

    let max_gap = *gaps.last().unwrap();
    let s_cert = (max_gap - 1).clamp(0, s_max as i64) as u32;
    let mut betas = Vec::new();
    let mut claims = Vec::new();
    for s in 1..=s_cert {
        let n0 = gaps.iter().position(|&g| g > s as i64).unwrap() as u32 + 1;
        let l = l_transform(oracle, s, n0 + s);
        match l.finite_length.certified_soc() {
            Some(soc) => betas.push(soc as i64),
            None => {
                claims.push(Claim::new(
                    format!("finite length of D/L^{s}"),
                    false,
                    format!("{:?}", l.finite_length),
                ));
                break;
            }
        }
    }
    let beta = IntSeqWindow::from_finite(1, &betas).certified_nondecreasing()?;

    let via_alpha = right_transform(&gap, Reference::Identity, beta.len() as i64)?;
    let beta_from_alpha = via_alpha.add_multiple_of_index(1);
    let agree = beta.values() == beta_from_alpha.values();
    claims.push(Claim::new(
        "beta_s - s = right(alpha - id)_s",
        agree && !beta.is_empty(),
        format!("beta = {beta}, from alpha = {beta_from_alpha}"),
    ));

    let beta_gap = beta
        .add_multiple_of_index(-1)
        .certified_nondecreasing()?;
    let left = left_transform_partial(&beta_gap, Reference::Identity, n_max as i64)?;
    let gap_from_beta = left.window;
    let mismatch = gap_from_beta
        .indexed()
        .find(|&(n, v)| gap.get(n) != Some(v));
    claims.push(Claim::new(
        "alpha_n - n = left(beta - id)_n",
        mismatch.is_none() && !gap_from_beta.is_empty(),
        match mismatch {
            None => format!("agreement on n = 1..{}", gap_from_beta.end()),
            Some((n, v)) => format!("n = {n}: left transform {v}, alpha_n - n = {:?}", gap.get(n)),
        },
    ));

    let alpha_additivity = additivity_class(&alpha);
    let beta_additivity = additivity_class(&beta);
    claims.push(Claim::new(
        "alpha subadditive",
        alpha_additivity.is_subadditive(),
        format!("{:?}", alpha_additivity.sub_violation),
    ));
    claims.push(Claim::new(
        "beta superadditive",
        beta_additivity.is_superadditive(),
        format!("{:?}", beta_additivity.super_violation),
    ));
    let alpha_hat_upper = growth_window(&alpha, GrowthKind::Sub)?;
    let beta_hat_lower = growth_window(&beta, GrowthKind::Super)?;

    // soc(𝒟/L^s) ≤ s·α̂/(α̂ − 1)
    let ah = &alpha_hat_upper.bound;
    let one = BigRational::one();
    if *ah > one {
        let f = ah / (ah - &one);
        let bad = beta
            .indexed()
            .find(|&(s, b)| BigRational::from_integer(b.finite().unwrap().into()) > &f * rat(s, 1));
        claims.push(Claim::new(
            "beta_s <= s*ah/(ah-1)",
            bad.is_none(),
            format!("ah window = {ah}; first failure {bad:?}"),
        ));
    }
    // n·β̂/(β̂ − 1) ≤ α_n
    let bh = &beta_hat_lower.bound;
    if *bh > one {
        let f = bh / (bh - &one);
        let bad = alpha
            .indexed()
            .filter(|&(n, _)| n <= n_max as i64)
            .find(|&(n, a)| &f * rat(n, 1) > BigRational::from_integer(a.finite().unwrap().into()));
        claims.push(Claim::new(
            "n*bh/(bh-1) <= alpha_n",
            bad.is_none(),
            format!("bh window = {bh}; first failure {bad:?}"),
        ));
    }
    if s_cert < s_max {
        claims.push(Claim::new(
            "beta window reaches s_max",
            false,
            format!("certified up to s = {s_cert} within degree cap {d_cap}"),
        ));
    }
    Ok(DualityReport {
        label: oracle.label().to_string(),
        alpha,
        gap,
        beta,
        beta_from_alpha,
        gap_from_beta,
        alpha_additivity,
        beta_additivity,
        alpha_hat_upper,
        beta_hat_lower,
        claims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::parse_polynomial;

    fn q() -> Field {
        Field::RATIONALS
    }

    fn rp(s: &str, f: Field, n: usize) -> Poly {
        parse_polynomial::<Ordinary>(s, f, n).unwrap()
    }

    fn coord3() -> FiltrationOracle {
        symbolic_points_filtration(&PointConfig::coordinate_points(q(), 2, 3).unwrap())
    }

    #[test]
    fn symbolic_points_pieces() {
        let o = coord3();
        assert_eq!(o.piece(2, 3).dim(), 1);
        assert!(o.piece(2, 3).contains_poly(&rp("x0*x1*x2", q(), 3)));
        assert_eq!(o.piece(1, 2).dim(), 3);
        assert_eq!(o.piece(0, 2).dim(), 6);
        let a = alpha_seq(&o, 6, 20).unwrap();
        assert_eq!(a.finite_values(), Some(vec![2, 3, 5, 6, 8, 9]));
        assert!(check_filtration(&o, 3, 5).is_ok());
    }

    #[test]
    fn ordinary_powers() {
        let gens = [rp("x0", q(), 3), rp("x1", q(), 3)];
        let o = power_filtration(&gens).unwrap();
        assert_eq!(o.piece(2, 2).dim(), 3);
        assert_eq!(o.piece(2, 3).dim(), 10 - 3);
        assert!(o.piece(3, 2).is_zero());
        assert!(check_filtration(&o, 3, 4).is_ok());
        assert!(power_filtration(&[rp("x0 + x1^2", q(), 3)]).is_err());
    }

    #[test]
    fn frobenius_pieces() {
        let f2 = Field::new(2).unwrap();
        let gens = [rp("x0", f2, 2), rp("x1", f2, 2)];
        let o = frobenius_integral_filtration(&gens).unwrap();
        // I^[2] = (x0^2, x1^2)
        let p = o.piece(2, 2);
        assert_eq!(p.dim(), 2);
        assert!(!p.contains_poly(&rp("x0*x1", f2, 2)));
        // I^[3] = I·I^[2]
        assert!(o.piece(3, 2).is_zero());
        assert!(o.piece(3, 3).is_full());
        assert!(frobenius_integral_filtration(&[rp("x0", q(), 2)]).is_err());
        assert!(check_filtration(&o, 4, 5).is_ok());
    }

    #[test]
    fn differential_powers() {
        let gens = [rp("x0*x1", q(), 2)];
        let p = differential_power_piece(&gens, 2, 4).unwrap();
        assert!(p.contains_poly(&rp("x0^2*x1^2", q(), 2)));
        assert_eq!(p.dim(), 1);
        let p3 = differential_power_piece(&gens, 2, 3).unwrap();
        assert!(p3.is_zero());
        // the first differential power is the ideal itself
        let o = differential_filtration(&gens).unwrap();
        assert_eq!(o.piece(1, 3), ideal_piece(q(), 2, &gens, 3).unwrap());
    }

    #[test]
    fn families_and_intersections() {
        let o = family_filtration(q(), 2, &["x0^n".into(), "x1^{2n+1}".into()]).unwrap();
        assert_eq!(o.piece(2, 2).dim(), 1);
        assert_eq!(o.piece(1, 3).dim(), 4);
        assert!(family_filtration(q(), 2, &["x0^n + x1".into()]).is_err());
        let i = intersect(&[coord3(), power_filtration(&[rp("x0", q(), 3)]).unwrap()]).unwrap();
        assert_eq!(i.piece(1, 2).dim(), 2);
    }

    #[test]
    fn differential_closure() {
        let dc = is_differentially_closed(&coord3(), 4, 6);
        assert!(dc.closed, "{dc:?}");
        let bad = family_filtration(q(), 2, &["x0^n".into(), "x1".into()]).unwrap();
        let v = is_differentially_closed(&bad, 3, 4);
        assert!(!v.closed);
        let w = v.witness.unwrap();
        assert!(!bad.piece(w.n - w.operator.degree(), w.d - w.operator.degree()).contains_poly(&w.image));
        let f3 = Field::new(3).unwrap();
        let frob = frobenius_integral_filtration(&[rp("x0", f3, 2), rp("x1", f3, 2)]).unwrap();
        assert!(is_differentially_closed(&frob, 5, 6).closed);
    }

    #[test]
    fn l_transform_of_points() {
        let o = coord3();
        for s in 1..=3u32 {
            let l = l_transform(&o, s, 4 * s + 2);
            assert_eq!(l.finite_length.certified_soc(), Some(3 * s));
            assert!(is_ideal(&l, 4 * s + 2).is_ideal);
        }
        let bad = family_filtration(q(), 2, &["x0^n".into(), "x1".into()]).unwrap();
        let l = l_transform(&bad, 1, 6);
        assert!(l.pieces.values().all(|p| p.is_zero()));
    }

    #[test]
    fn duality_for_coordinate_points() {
        let r = duality_report(&coord3(), 6, 3, 20).unwrap();
        assert_eq!(r.beta.finite_values(), Some(vec![3, 6, 9]));
        assert_eq!(r.beta_from_alpha.finite_values(), Some(vec![3, 6, 9]));
        assert!(r.all_passed(), "{:#?}", r.claims);
        let flat = family_filtration(q(), 2, &["x0^n".into()]).unwrap();
        assert!(matches!(
            duality_report(&flat, 4, 2, 10),
            Err(FiltrationError::HypothesisUnmet(_))
        ));
    }

    #[test]
    fn spec_json_round_trip() {
        let text = r#"{"kind":"symbolic-points","N":2,"points":[["1","0","0"],["0","1","0"],["0","0","1"]]}"#;
        let spec: FiltrationSpec = serde_json::from_str(text).unwrap();
        let o = spec.build().unwrap();
        assert_eq!(o.piece(2, 3).dim(), 1);
        let text = r#"{"kind":"intersection","members":[{"kind":"powers","N":1,"generators":["x0"]},{"kind":"powers","N":1,"generators":["x1"]}]}"#;
        let spec: FiltrationSpec = serde_json::from_str(text).unwrap();
        assert_eq!(spec.build().unwrap().piece(1, 2).dim(), 1);
    }
}
