use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::scalars::{binomial_big, ExponentVec};
use num_traits::ToPrimitive;

/// Degree-d monomials in graded-lex order, x_0^d first.
#[derive(Debug)]
pub struct MonomialBasis {
    monos: Vec<ExponentVec>,
    index: HashMap<ExponentVec, usize>,
}

impl MonomialBasis {
    fn build(nvars: usize, d: u32) -> Self {
        let mut monos = Vec::new();
        let mut cur = vec![0u32; nvars];
        fill(&mut monos, &mut cur, 0, d);
        let index = monos
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        MonomialBasis { monos, index }
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomials(&self) -> &[ExponentVec] {
        &self.monos
    }

    pub fn index_of(&self, e: &ExponentVec) -> Option<usize> {
        self.index.get(e).copied()
    }
}

fn fill(out: &mut Vec<ExponentVec>, cur: &mut Vec<u32>, i: usize, left: u32) {
    if cur.is_empty() {
        return;
    }
    if i + 1 == cur.len() {
        cur[i] = left;
        out.push(ExponentVec(cur.clone()));
        return;
    }
    for k in (0..=left).rev() {
        cur[i] = k;
        fill(out, cur, i + 1, left - k);
    }
    cur[i] = 0;
}

type Cache = RwLock<HashMap<(usize, u32), Arc<MonomialBasis>>>;

pub fn monomial_basis(nvars: usize, d: u32) -> Arc<MonomialBasis> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.read().unwrap().get(&(nvars, d)) {
        return b.clone();
    }
    let b = Arc::new(MonomialBasis::build(nvars, d));
    cache
        .write()
        .unwrap()
        .entry((nvars, d))
        .or_insert(b)
        .clone()
}

/// dim R_d = C(d+N, N) for `nvars` = N+1 variables.
pub fn dim_degree(nvars: usize, d: u32) -> usize {
    if nvars == 0 {
        return 0;
    }
    binomial_big(d as u64 + nvars as u64 - 1, nvars as u64 - 1)
        .to_usize()
        .expect("dimension fits in usize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_size() {
        let b = monomial_basis(3, 2);
        let got: Vec<Vec<u32>> = b.monomials().iter().map(|e| e.0.clone()).collect();
        assert_eq!(
            got,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
        for n in 1..5 {
            for d in 0..7 {
                assert_eq!(monomial_basis(n, d).len(), dim_degree(n, d));
            }
        }
    }
}
