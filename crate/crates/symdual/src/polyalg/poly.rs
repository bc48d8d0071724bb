use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::basis::monomial_basis;
use super::PolyError;
use crate::scalars::{multi_binomial, multi_choose, ExponentVec, Field, FieldScalar};

/// Marks how a term at exponent 𝐚 is read: x^𝐚 or Y^[𝐚].
pub trait Basis: Clone + fmt::Debug + PartialEq + Eq + Send + Sync + 'static {
    const DIVIDED: bool;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ordinary;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Divided;

impl Basis for Ordinary {
    const DIVIDED: bool = false;
}

impl Basis for Divided {
    const DIVIDED: bool = true;
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<B: Basis> {
    field: Field,
    nvars: usize,
    terms: BTreeMap<ExponentVec, FieldScalar>,
    _basis: PhantomData<B>,
}

/// An element of R = K[x_0, …, x_N].
pub type Poly = Polynomial<Ordinary>;
/// An element of the divided power algebra 𝒟, in the basis Y^[𝐚].
pub type DividedPoly = Polynomial<Divided>;

impl<B: Basis> Polynomial<B> {
    pub fn zero(field: Field, nvars: usize) -> Self {
        Polynomial {
            field,
            nvars,
            terms: BTreeMap::new(),
            _basis: PhantomData,
        }
    }

    pub fn constant(field: Field, nvars: usize, c: FieldScalar) -> Self {
        Self::monomial(ExponentVec::zero(nvars), c)
            .with_field_check(field)
            .expect("constant in the wrong field")
    }

    fn with_field_check(self, field: Field) -> Result<Self, PolyError> {
        if self.field == field {
            Ok(self)
        } else {
            Err(PolyError::CharMismatch)
        }
    }

    pub fn one(field: Field, nvars: usize) -> Self {
        Self::constant(field, nvars, field.one())
    }

    pub fn monomial(exp: ExponentVec, coeff: FieldScalar) -> Self {
        let field = coeff.field();
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Polynomial {
            field,
            nvars,
            terms,
            _basis: PhantomData,
        }
    }

    /// The variable x_i (or Y_i).
    pub fn var(field: Field, nvars: usize, i: usize) -> Self {
        Self::monomial(ExponentVec::unit(nvars, i, 1), field.one())
    }

    pub fn from_terms<I>(field: Field, nvars: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (ExponentVec, FieldScalar)>,
    {
        let mut p = Self::zero(field, nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(PolyError::VarMismatch);
            }
            if c.field() != field {
                return Err(PolyError::CharMismatch);
            }
            p.add_term(e, &c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, e: ExponentVec, c: &FieldScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVec, &FieldScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &ExponentVec) -> FieldScalar {
        self.terms.get(e).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Top total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|e| e.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|x| x == d),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        let mut p = Self::zero(self.field, self.nvars);
        for (e, c) in &self.terms {
            if e.degree() == d {
                p.terms.insert(e.clone(), c.clone());
            }
        }
        p
    }

    fn compatible(&self, other: &Self) -> Result<(), PolyError> {
        if self.field != other.field {
            Err(PolyError::CharMismatch)
        } else if self.nvars != other.nvars {
            Err(PolyError::VarMismatch)
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.compatible(other)?;
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), c);
        }
        Ok(p)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-self.field.one())
    }

    pub fn scale(&self, c: &FieldScalar) -> Self {
        let mut p = Self::zero(self.field, self.nvars);
        if c.is_zero() {
            return p;
        }
        for (e, v) in &self.terms {
            let w = v * c;
            if !w.is_zero() {
                p.terms.insert(e.clone(), w);
            }
        }
        p
    }

    /// Coefficients in the degree-d monomial basis; other degrees are not allowed.
    pub fn to_vector(&self, d: u32) -> Result<Vec<FieldScalar>, PolyError> {
        let basis = monomial_basis(self.nvars, d);
        let mut v = vec![self.field.zero(); basis.len()];
        for (e, c) in &self.terms {
            let i = basis.index_of(e).ok_or(PolyError::NonHomogeneous)?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn from_vector(field: Field, nvars: usize, d: u32, v: &[FieldScalar]) -> Self {
        let basis = monomial_basis(nvars, d);
        assert_eq!(basis.len(), v.len(), "vector length differs from the monomial count");
        let mut p = Self::zero(field, nvars);
        for (e, c) in basis.monomials().iter().zip(v) {
            if !c.is_zero() {
                p.terms.insert(e.clone(), c.clone());
            }
        }
        p
    }

    /// Terms in graded-lex order, highest first.
    pub fn sorted_terms(&self) -> Vec<(&ExponentVec, &FieldScalar)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| b.0.grlex_cmp(a.0));
        t
    }
}

impl Poly {
    pub fn try_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.compatible(other)?;
        let mut p = Poly::zero(self.field, self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                p.add_term(a.add(b), &(x * y));
            }
        }
        Ok(p)
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.field, self.nvars);
        for _ in 0..k {
            acc = acc.try_mul(self).expect("same ring");
        }
        acc
    }

    pub fn eval(&self, point: &[FieldScalar]) -> Result<FieldScalar, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::VarMismatch);
        }
        let mut acc = self.field.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e.entries()) {
                if k > 0 {
                    t = t.checked_mul(&x.pow(k as u64)).map_err(|_| PolyError::CharMismatch)?;
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }
}

impl DividedPoly {
    pub fn try_mul(&self, other: &DividedPoly) -> Result<DividedPoly, PolyError> {
        self.compatible(other)?;
        let mut p = DividedPoly::zero(self.field, self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let c = multi_binomial(a, b, self.field);
                if c.is_zero() {
                    continue;
                }
                p.add_term(a.add(b), &(&(x * y) * &c));
            }
        }
        Ok(p)
    }
}

/// Y^[𝐚]·Y^[𝐛] = C(𝐚+𝐛, 𝐚)·Y^[𝐚+𝐛], extended bilinearly.
pub fn divided_mul(f: &DividedPoly, g: &DividedPoly) -> Result<DividedPoly, PolyError> {
    f.try_mul(g)
}

/// The contraction action x^𝐚 • Y^[𝐛] = Y^[𝐛−𝐚] (zero unless 𝐚 ≤ 𝐛).
pub fn contract(f: &Poly, g: &DividedPoly) -> Result<DividedPoly, PolyError> {
    if f.field != g.field {
        return Err(PolyError::CharMismatch);
    }
    if f.nvars != g.nvars {
        return Err(PolyError::VarMismatch);
    }
    let mut out = DividedPoly::zero(f.field, f.nvars);
    for (a, x) in &f.terms {
        for (b, y) in &g.terms {
            if let Some(e) = b.checked_sub(a) {
                out.add_term(e, &(x * y));
            }
        }
    }
    Ok(out)
}

/// Hasse derivative D_𝐚(x^𝐛) = C(𝐛, 𝐚)·x^(𝐛−𝐚).
pub fn diff_apply(a: &ExponentVec, f: &Poly) -> Poly {
    assert_eq!(a.len(), f.nvars, "operator and polynomial have different variable counts");
    let mut out = Poly::zero(f.field, f.nvars);
    for (b, c) in &f.terms {
        if let Some(e) = b.checked_sub(a) {
            let k = multi_choose(b, a, f.field);
            if !k.is_zero() {
                out.add_term(e, &(c * &k));
            }
        }
    }
    out
}

/// L_p^[k] = Σ_{|𝐚|=k} p^𝐚·Y^[𝐚].
pub fn dual_power(point: &[FieldScalar], k: u32) -> Result<DividedPoly, PolyError> {
    let Some(first) = point.first() else {
        return Err(PolyError::ZeroPoint);
    };
    if point.iter().all(|x| x.is_zero()) {
        return Err(PolyError::ZeroPoint);
    }
    let field = first.field();
    if point.iter().any(|x| x.field() != field) {
        return Err(PolyError::CharMismatch);
    }
    let basis = monomial_basis(point.len(), k);
    let mut out = DividedPoly::zero(field, point.len());
    for e in basis.monomials() {
        out.add_term(e.clone(), &point_power(point, e));
    }
    Ok(out)
}

pub(crate) fn point_power(point: &[FieldScalar], e: &ExponentVec) -> FieldScalar {
    let mut c = point[0].field().one();
    for (x, &k) in point.iter().zip(e.entries()) {
        if k > 0 {
            c = &c * &x.pow(k as u64);
        }
    }
    c
}

impl<B: Basis> fmt::Display for Polynomial<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono = format_monomial::<B>(e);
            match (mag.is_one(), mono.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{mono}")?,
                (false, true) => write!(f, "{mag}")?,
                (false, false) => write!(f, "{mag}*{mono}")?,
            }
        }
        Ok(())
    }
}

fn format_monomial<B: Basis>(e: &ExponentVec) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.entries().iter().enumerate() {
        if k == 0 {
            continue;
        }
        let s = match (B::DIVIDED, k) {
            (false, 1) => format!("x{i}"),
            (false, _) => format!("x{i}^{k}"),
            (true, 1) => format!("Y{i}"),
            (true, _) => format!("Y{i}^[{k}]"),
        };
        parts.push(s);
    }
    parts.join("*")
}

impl<B: Basis> Serialize for Polynomial<B> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<(Vec<u32>, String)> = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| (e.entries().to_vec(), c.to_string()))
            .collect();
        let mut st = s.serialize_struct("Polynomial", 4)?;
        st.serialize_field("char", &self.field.characteristic())?;
        st.serialize_field("nvars", &self.nvars)?;
        st.serialize_field("text", &self.to_string())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}
