use serde::Serialize;

use super::basis::{dim_degree, monomial_basis};
use super::poly::{DividedPoly, Poly, Polynomial, Basis};
use super::PolyError;
use crate::linalg::Echelon;
use crate::scalars::{multi_choose, ExponentVec, Field, FieldScalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambient {
    /// R_d, monomial basis x^𝐚.
    Ring,
    /// 𝒟_d, divided-monomial basis Y^[𝐚].
    Divided,
}

/// A subspace of R_d or 𝒟_d held as a canonical reduced echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedSubspace {
    nvars: usize,
    degree: u32,
    ambient: Ambient,
    basis: Echelon,
}

impl GradedSubspace {
    pub fn zero(field: Field, nvars: usize, degree: u32, ambient: Ambient) -> Self {
        GradedSubspace {
            nvars,
            degree,
            ambient,
            basis: Echelon::zero(field, dim_degree(nvars, degree)),
        }
    }

    pub fn full(field: Field, nvars: usize, degree: u32, ambient: Ambient) -> Self {
        GradedSubspace {
            nvars,
            degree,
            ambient,
            basis: Echelon::full(field, dim_degree(nvars, degree)),
        }
    }

    pub fn from_echelon(nvars: usize, degree: u32, ambient: Ambient, basis: Echelon) -> Self {
        assert_eq!(basis.cols(), dim_degree(nvars, degree));
        GradedSubspace {
            nvars,
            degree,
            ambient,
            basis,
        }
    }

    pub fn from_vectors(
        field: Field,
        nvars: usize,
        degree: u32,
        ambient: Ambient,
        rows: Vec<Vec<FieldScalar>>,
    ) -> Self {
        let cols = dim_degree(nvars, degree);
        GradedSubspace {
            nvars,
            degree,
            ambient,
            basis: Echelon::from_rows(field, cols, rows),
        }
    }

    fn from_elements<B: Basis>(
        field: Field,
        nvars: usize,
        degree: u32,
        ambient: Ambient,
        elems: &[Polynomial<B>],
    ) -> Result<Self, PolyError> {
        let mut rows = Vec::with_capacity(elems.len());
        for p in elems {
            if p.field() != field {
                return Err(PolyError::CharMismatch);
            }
            if p.nvars() != nvars {
                return Err(PolyError::VarMismatch);
            }
            rows.push(p.to_vector(degree)?);
        }
        Ok(Self::from_vectors(field, nvars, degree, ambient, rows))
    }

    /// Span of homogeneous forms of degree `degree` in R.
    pub fn from_polys(field: Field, nvars: usize, degree: u32, polys: &[Poly]) -> Result<Self, PolyError> {
        Self::from_elements(field, nvars, degree, Ambient::Ring, polys)
    }

    /// Span of homogeneous divided-power elements of degree `degree`.
    pub fn from_divided(
        field: Field,
        nvars: usize,
        degree: u32,
        elems: &[DividedPoly],
    ) -> Result<Self, PolyError> {
        Self::from_elements(field, nvars, degree, Ambient::Divided, elems)
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn echelon(&self) -> &Echelon {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    pub fn contains_vector(&self, v: &[FieldScalar]) -> bool {
        self.basis.contains(v)
    }

    pub fn contains_poly(&self, f: &Poly) -> bool {
        debug_assert_eq!(self.ambient, Ambient::Ring);
        self.contains_element(f)
    }

    pub fn contains_divided(&self, g: &DividedPoly) -> bool {
        debug_assert_eq!(self.ambient, Ambient::Divided);
        self.contains_element(g)
    }

    fn contains_element<B: Basis>(&self, p: &Polynomial<B>) -> bool {
        if p.is_zero() {
            return true;
        }
        match p.to_vector(self.degree) {
            Ok(v) => self.basis.contains(&v),
            Err(_) => false,
        }
    }

    pub fn basis_polys(&self) -> Vec<Poly> {
        self.basis
            .rows()
            .iter()
            .map(|r| Poly::from_vector(self.field(), self.nvars, self.degree, r))
            .collect()
    }

    pub fn basis_divided(&self) -> Vec<DividedPoly> {
        self.basis
            .rows()
            .iter()
            .map(|r| DividedPoly::from_vector(self.field(), self.nvars, self.degree, r))
            .collect()
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "variable counts differ");
        assert_eq!(self.degree, other.degree, "degrees differ");
        assert_eq!(self.ambient, other.ambient, "ambient spaces differ");
    }

    pub fn sum(&self, other: &Self) -> Self {
        self.check_same(other);
        GradedSubspace {
            basis: self.basis.sum(&other.basis),
            ..self.clone()
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.check_same(other);
        GradedSubspace {
            basis: self.basis.intersect(&other.basis),
            ..self.clone()
        }
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.check_same(other);
        self.basis.is_subspace_of(&other.basis)
    }

    /// The orthogonal complement in the other ambient space.
    pub fn perp(&self) -> Self {
        GradedSubspace {
            nvars: self.nvars,
            degree: self.degree,
            ambient: match self.ambient {
                Ambient::Ring => Ambient::Divided,
                Ambient::Divided => Ambient::Ring,
            },
            basis: self.basis.nullspace(),
        }
    }
}

/// U^⊥ ⊆ 𝒟_d for U ⊆ R_d (and symmetrically).
pub fn perp(u: &GradedSubspace) -> GradedSubspace {
    u.perp()
}

/// The inverse system (𝔪_p^n)^⊥_d: all of 𝒟_d when d < n, otherwise the span of
/// Y^[𝐚]·L_p^[c] with d−n+1 ≤ c ≤ d and |𝐚| = d−c.
pub fn one_point_perp(point: &[FieldScalar], n: u32, d: u32) -> Result<GradedSubspace, PolyError> {
    let rows = one_point_conditions(point, n, d)?;
    let field = point[0].field();
    let nvars = point.len();
    Ok(match rows {
        None => GradedSubspace::full(field, nvars, d, Ambient::Divided),
        Some(rows) => GradedSubspace::from_vectors(field, nvars, d, Ambient::Divided, rows),
    })
}

/// The spanning vectors behind [`one_point_perp`]; `None` means the full space.
///
/// In the divided basis Y^[𝐚]·L_p^[c] has coefficient C(𝐞, 𝐚)·p^(𝐞−𝐚) at Y^[𝐞].
pub(crate) fn one_point_conditions(
    point: &[FieldScalar],
    n: u32,
    d: u32,
) -> Result<Option<Vec<Vec<FieldScalar>>>, PolyError> {
    if point.is_empty() || point.iter().all(|x| x.is_zero()) {
        return Err(PolyError::ZeroPoint);
    }
    let field = point[0].field();
    if point.iter().any(|x| x.field() != field) {
        return Err(PolyError::CharMismatch);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if d < n {
        return Ok(None);
    }
    let nvars = point.len();
    let target = monomial_basis(nvars, d);
    let powers: Vec<Vec<FieldScalar>> = point
        .iter()
        .map(|x| {
            let mut v = vec![field.one()];
            for k in 1..=d as usize {
                let next = &v[k - 1] * x;
                v.push(next);
            }
            v
        })
        .collect();
    let mut rows = Vec::new();
    for outer in 0..n {
        // |𝐚| = d − c ranges over 0..=n−1
        for a in monomial_basis(nvars, outer).monomials() {
            let row: Vec<FieldScalar> = target
                .monomials()
                .iter()
                .map(|e| match e.checked_sub(a) {
                    None => field.zero(),
                    Some(rest) => {
                        let mut c = multi_choose(e, a, field);
                        if c.is_zero() {
                            return c;
                        }
                        for (i, &k) in rest.entries().iter().enumerate() {
                            c = &c * &powers[i][k as usize];
                        }
                        c
                    }
                })
                .collect();
            rows.push(row);
        }
    }
    Ok(Some(rows))
}

/// Hasse-derivative conditions D_𝐚 F(p) = 0 for |𝐚| ≤ n−1, as rows on R_d.
///
/// These rows coincide with the spanning set of [`one_point_conditions`]; the
/// kernel is (𝔪_p^n)_d.
pub(crate) fn vanishing_rows(point: &[FieldScalar], n: u32, d: u32) -> Result<Vec<Vec<FieldScalar>>, PolyError> {
    match one_point_conditions(point, n, d)? {
        Some(rows) => Ok(rows),
        None => {
            let field = point[0].field();
            let cols = dim_degree(point.len(), d);
            Ok(Echelon::full(field, cols).rows())
        }
    }
}

/// Degree-d piece of the ideal generated by `gens`: span of g·m for monomials m.
pub fn ideal_piece(field: Field, nvars: usize, gens: &[Poly], d: u32) -> Result<GradedSubspace, PolyError> {
    let mut rows = Vec::new();
    for g in gens {
        if g.field() != field {
            return Err(PolyError::CharMismatch);
        }
        if g.is_zero() {
            continue;
        }
        if !g.is_homogeneous() {
            return Err(PolyError::NonHomogeneous);
        }
        let gd = g.degree().unwrap();
        if gd > d {
            continue;
        }
        for m in monomial_basis(nvars, d - gd).monomials() {
            let mut t = Poly::zero(field, nvars);
            for (e, c) in g.terms() {
                t.add_term(e.add(m), c);
            }
            rows.push(t.to_vector(d)?);
        }
    }
    Ok(GradedSubspace::from_vectors(field, nvars, d, Ambient::Ring, rows))
}

/// Multiplies every basis element of `piece` by each monomial of degree `k`.
pub fn multiply_up(piece: &GradedSubspace, k: u32) -> GradedSubspace {
    let field = piece.field();
    let nvars = piece.nvars;
    let d = piece.degree + k;
    let mut rows = Vec::new();
    let monos = monomial_basis(nvars, k);
    for f in piece.basis_polys() {
        for m in monos.monomials() {
            let mut t = Poly::zero(field, nvars);
            for (e, c) in f.terms() {
                t.add_term(e.add(m), c);
            }
            rows.push(t.to_vector(d).expect("homogeneous"));
        }
    }
    GradedSubspace::from_vectors(field, nvars, d, Ambient::Ring, rows)
}

/// Monomial exponents of degree d as a convenience for callers.
pub fn monomials(nvars: usize, d: u32) -> Vec<ExponentVec> {
    monomial_basis(nvars, d).monomials().to_vec()
}
