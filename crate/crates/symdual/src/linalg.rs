//! Exact row reduction over ℚ and F_p.
//!
//! Rational matrices are reduced fraction-free on primitive integer rows and
//! only normalized to rationals at the end; prime fields use plain residues.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalars::{inv_mod, mul_mod, Field, FieldScalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum RowData {
    Rat(Vec<Vec<BigRational>>),
    Mod(u32, Vec<Vec<u32>>),
}

/// A subspace of K^cols stored as its reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Echelon {
    cols: usize,
    pivots: Vec<usize>,
    data: RowData,
}

impl Echelon {
    pub fn zero(field: Field, cols: usize) -> Echelon {
        let data = if field.is_rational() {
            RowData::Rat(Vec::new())
        } else {
            RowData::Mod(field.characteristic(), Vec::new())
        };
        Echelon {
            cols,
            pivots: Vec::new(),
            data,
        }
    }

    pub fn full(field: Field, cols: usize) -> Echelon {
        let rows = (0..cols)
            .map(|i| {
                let mut r = vec![field.zero(); cols];
                r[i] = field.one();
                r
            })
            .collect();
        Echelon::from_rows(field, cols, rows)
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<FieldScalar>>) -> Echelon {
        if field.is_rational() {
            let rows = rows
                .into_iter()
                .map(|r| {
                    debug_assert_eq!(r.len(), cols);
                    r.into_iter()
                        .map(|x| x.as_rational().expect("rational entry").clone())
                        .collect()
                })
                .collect();
            Echelon::from_rational_rows(cols, rows)
        } else {
            let p = field.characteristic();
            let rows = rows
                .into_iter()
                .map(|r| r.iter().map(|x| x.residue()).collect())
                .collect();
            Echelon::from_mod_rows(p, cols, rows)
        }
    }

    /// Rank by forward elimination only, without building the reduced basis.
    pub fn rank_of(field: Field, cols: usize, rows: Vec<Vec<FieldScalar>>) -> usize {
        if !field.is_rational() {
            return Echelon::from_rows(field, cols, rows).rank();
        }
        let rows: Vec<Vec<BigInt>> = rows
            .into_iter()
            .filter_map(|r| primitive_row(r.into_iter().map(|x| x.to_rational()).collect()))
            .collect();
        integer_rank(cols, rows)
    }

    pub(crate) fn from_rational_rows(cols: usize, rows: Vec<Vec<BigRational>>) -> Echelon {
        let ints = rows.into_iter().filter_map(primitive_row).collect();
        Echelon::from_integer_rows(cols, ints)
    }

    /// Row reduction of integer rows; the result is the canonical rational RREF.
    pub(crate) fn from_integer_rows(cols: usize, mut rows: Vec<Vec<BigInt>>) -> Echelon {
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
        let mut pivots = Vec::new();
        let mut top = 0;
        for c in 0..cols {
            if top == rows.len() {
                break;
            }
            let best = (top..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by_key(|&i| rows[i][c].bits());
            let Some(best) = best else { continue };
            rows.swap(top, best);
            let prow = rows[top].clone();
            let piv = prow[c].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == top || row[c].is_zero() {
                    continue;
                }
                let g = piv.gcd(&row[c]);
                let a = &piv / &g;
                let b = &row[c] / &g;
                for (x, y) in row.iter_mut().zip(&prow) {
                    if y.is_zero() {
                        if !x.is_zero() {
                            *x *= &a;
                        }
                    } else {
                        *x = &*x * &a - y * &b;
                    }
                }
                make_primitive(row);
            }
            pivots.push(c);
            top += 1;
        }
        rows.truncate(top);
        let rat = rows
            .into_iter()
            .zip(&pivots)
            .map(|(row, &c)| {
                let piv = row[c].clone();
                row.into_iter()
                    .map(|x| BigRational::new(x, piv.clone()))
                    .collect()
            })
            .collect();
        Echelon {
            cols,
            pivots,
            data: RowData::Rat(rat),
        }
    }

    pub(crate) fn from_mod_rows(p: u32, cols: usize, mut rows: Vec<Vec<u32>>) -> Echelon {
        let mut pivots = Vec::new();
        let mut top = 0;
        for c in 0..cols {
            let Some(best) = (top..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(top, best);
            let inv = inv_mod(rows[top][c], p);
            for x in rows[top].iter_mut() {
                *x = mul_mod(*x, inv, p);
            }
            let prow = rows[top].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == top || row[c] == 0 {
                    continue;
                }
                let f = (p - row[c]) as u64;
                for (x, y) in row.iter_mut().zip(&prow) {
                    if *y != 0 {
                        *x = ((*x as u64 + f * *y as u64) % p as u64) as u32;
                    }
                }
            }
            pivots.push(c);
            top += 1;
            if top == rows.len() {
                break;
            }
        }
        rows.truncate(top);
        Echelon {
            cols,
            pivots,
            data: RowData::Mod(p, rows),
        }
    }

    pub fn field(&self) -> Field {
        match &self.data {
            RowData::Rat(_) => Field::RATIONALS,
            RowData::Mod(p, _) => Field::new(*p as u64).expect("prime"),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn row(&self, i: usize) -> Vec<FieldScalar> {
        match &self.data {
            RowData::Rat(rows) => rows[i]
                .iter()
                .map(|q| FieldScalar::Rational(q.clone()))
                .collect(),
            RowData::Mod(p, rows) => rows[i]
                .iter()
                .map(|&r| FieldScalar::Modular {
                    residue: r,
                    prime: *p,
                })
                .collect(),
        }
    }

    pub fn rows(&self) -> Vec<Vec<FieldScalar>> {
        (0..self.rank()).map(|i| self.row(i)).collect()
    }

    /// Basis of {x : row·x = 0 for every row} under the standard pairing.
    pub fn nullspace(&self) -> Echelon {
        let free: Vec<usize> = {
            let mut is_piv = vec![false; self.cols];
            for &c in &self.pivots {
                is_piv[c] = true;
            }
            (0..self.cols).filter(|&c| !is_piv[c]).collect()
        };
        match &self.data {
            RowData::Rat(rows) => {
                let vecs = free
                    .iter()
                    .map(|&f| {
                        let mut v = vec![BigRational::zero(); self.cols];
                        v[f] = BigRational::one();
                        for (row, &pc) in rows.iter().zip(&self.pivots) {
                            v[pc] = -row[f].clone();
                        }
                        v
                    })
                    .collect();
                Echelon::from_rational_rows(self.cols, vecs)
            }
            RowData::Mod(p, rows) => {
                let vecs = free
                    .iter()
                    .map(|&f| {
                        let mut v = vec![0u32; self.cols];
                        v[f] = 1;
                        for (row, &pc) in rows.iter().zip(&self.pivots) {
                            v[pc] = (*p - row[f]) % *p;
                        }
                        v
                    })
                    .collect();
                Echelon::from_mod_rows(*p, self.cols, vecs)
            }
        }
    }

    /// Whether `v` lies in the row space.
    pub fn contains(&self, v: &[FieldScalar]) -> bool {
        assert_eq!(v.len(), self.cols);
        match &self.data {
            RowData::Rat(rows) => {
                let mut w: Vec<BigRational> =
                    v.iter().map(|x| x.as_rational().unwrap().clone()).collect();
                for (row, &pc) in rows.iter().zip(&self.pivots) {
                    if w[pc].is_zero() {
                        continue;
                    }
                    let f = w[pc].clone();
                    for (x, y) in w.iter_mut().zip(row) {
                        if !y.is_zero() {
                            *x -= &f * y;
                        }
                    }
                }
                w.iter().all(|x| x.is_zero())
            }
            RowData::Mod(p, rows) => {
                let mut w: Vec<u32> = v.iter().map(|x| x.residue()).collect();
                for (row, &pc) in rows.iter().zip(&self.pivots) {
                    if w[pc] == 0 {
                        continue;
                    }
                    let f = (*p - w[pc]) as u64;
                    for (x, y) in w.iter_mut().zip(row) {
                        if *y != 0 {
                            *x = ((*x as u64 + f * *y as u64) % *p as u64) as u32;
                        }
                    }
                }
                w.iter().all(|&x| x == 0)
            }
        }
    }

    pub fn is_subspace_of(&self, other: &Echelon) -> bool {
        self.rank() <= other.rank() && self.rows().iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Echelon) -> Echelon {
        assert_eq!(self.cols, other.cols);
        match (&self.data, &other.data) {
            (RowData::Rat(a), RowData::Rat(b)) => {
                Echelon::from_rational_rows(self.cols, a.iter().chain(b).cloned().collect())
            }
            (RowData::Mod(p, a), RowData::Mod(_, b)) => {
                Echelon::from_mod_rows(*p, self.cols, a.iter().chain(b).cloned().collect())
            }
            _ => panic!("mixed characteristics"),
        }
    }

    pub fn intersect(&self, other: &Echelon) -> Echelon {
        self.nullspace().sum(&other.nullspace()).nullspace()
    }
}

/// Clears denominators and content; `None` for the zero row.
/// Rank of integer rows by fraction-free forward elimination.
///
/// Rows with a single nonzero entry are pivots that clear their column outright.
pub fn integer_rank(cols: usize, mut rows: Vec<Vec<BigInt>>) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        let best = (rank..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| rows[i][c].bits());
        let Some(best) = best else { continue };
        rows.swap(rank, best);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        let piv = &prow[c];
        let single = prow[c + 1..].iter().all(|x| x.is_zero());
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            if single {
                row[c] = BigInt::zero();
                continue;
            }
            let g = piv.gcd(&row[c]);
            let a = piv / &g;
            let b = &row[c] / &g;
            for (x, y) in row.iter_mut().zip(prow).skip(c) {
                if y.is_zero() {
                    if !x.is_zero() {
                        *x *= &a;
                    }
                } else {
                    *x = &*x * &a - y * &b;
                }
            }
            make_primitive(row);
        }
        rank += 1;
    }
    rank
}

fn primitive_row(row: Vec<BigRational>) -> Option<Vec<BigInt>> {
    if row.iter().all(|x| x.is_zero()) {
        return None;
    }
    let mut l = BigInt::one();
    for x in &row {
        if !x.is_zero() {
            l = l.lcm(x.denom());
        }
    }
    let mut ints: Vec<BigInt> = row
        .into_iter()
        .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    make_primitive(&mut ints);
    Some(ints)
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    let g = g.abs();
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x /= &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<FieldScalar> {
        v.iter().map(|&x| Field::RATIONALS.from_i64(x)).collect()
    }

    #[test]
    fn rref_is_canonical() {
        let f = Field::RATIONALS;
        let a = Echelon::from_rows(f, 3, vec![q(&[2, 4, 6]), q(&[1, 1, 1])]);
        let b = Echelon::from_rows(f, 3, vec![q(&[3, 3, 3]), q(&[0, 2, 4]), q(&[1, 2, 3])]);
        assert_eq!(a, b);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.row(0), vec![f.one(), f.zero(), -f.one()]);
    }

    #[test]
    fn nullspace_and_intersection() {
        let f = Field::new(5).unwrap();
        let row = |v: &[i64]| v.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        let a = Echelon::from_rows(f, 3, vec![row(&[1, 0, 0]), row(&[0, 1, 0])]);
        let b = Echelon::from_rows(f, 3, vec![row(&[0, 1, 0]), row(&[0, 0, 1])]);
        let n = a.nullspace();
        assert_eq!(n, Echelon::from_rows(f, 3, vec![row(&[0, 0, 3])]));
        assert_eq!(a.intersect(&b), Echelon::from_rows(f, 3, vec![row(&[0, 1, 0])]));
        assert_eq!(a.sum(&b), Echelon::full(f, 3));
        assert!(n.nullspace() == a);
    }

    #[test]
    fn membership() {
        let f = Field::RATIONALS;
        let a = Echelon::from_rows(f, 3, vec![q(&[1, 2, 3])]);
        assert!(a.contains(&q(&[-2, -4, -6])));
        assert!(!a.contains(&q(&[1, 2, 4])));
        assert!(Echelon::zero(f, 3).is_subspace_of(&a));
    }
}
