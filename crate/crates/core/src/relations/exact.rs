//! Rank over Q by fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::generators::{enumerate_generators, h0_dim, RowEngine};
use crate::error::{Error, Result};

/// Largest weight accepted by [`rank_exact`] unless a bound is given.
pub const DEFAULT_EXACT_BOUND: usize = 8;

/// Echelon rows with primitive integer entries, in insertion order.
#[derive(Debug, Default)]
pub struct ExactEliminator {
    pivots: Vec<(usize, Vec<BigInt>)>,
}

fn make_primitive(r: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in r.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if !g.is_zero() {
        for x in r.iter_mut() {
            *x = &*x / &g;
        }
    }
}

impl ExactEliminator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds `row`; returns `true` if the rank grew.
    pub fn insert(&mut self, row: &[i64]) -> bool {
        let mut r: Vec<BigInt> = row.iter().map(|&x| BigInt::from(x)).collect();
        for (c, p) in &self.pivots {
            if r[*c].is_zero() {
                continue;
            }
            // r ← p[c]·r − r[c]·p, which clears column c
            let (a, b) = (p[*c].clone(), r[*c].clone());
            for (x, y) in r.iter_mut().zip(p) {
                *x = &a * &*x - &b * y;
            }
            make_primitive(&mut r);
        }
        match r.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(c) => {
                if r[c].is_negative() {
                    r.iter_mut().for_each(|x| *x = -&*x);
                }
                self.pivots.push((c, r));
                true
            }
        }
    }
}

/// Rank over Q of all relation generators of weight `k`, refusing weights
/// above `bound`.
pub fn rank_exact(k: usize, bound: usize) -> Result<usize> {
    if k > bound {
        return Err(Error::ExactBoundExceeded { k, bound });
    }
    if k == 0 {
        return Err(Error::WeightOutOfRange(k));
    }
    let mut eng = RowEngine::new(k);
    let mut row = vec![0i64; h0_dim(k)];
    let mut e = ExactEliminator::new();
    for (u, v, w) in enumerate_generators(k) {
        if e.rank() == row.len() {
            break;
        }
        eng.row(&u, &v, &w, &mut row);
        if row.iter().any(|&x| x != 0) {
            e.insert(&row);
        }
    }
    Ok(e.rank())
}
