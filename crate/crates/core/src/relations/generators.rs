//! Relation elements and their coordinate rows.
//!
//! Rows are written in the monomial basis of h0 of weight `k`: the word
//! `1 x 1` with `k − 1` inner letters `x` sits in column `x` read as a
//! binary number, so the dimension is `2^{k-1}`. Generators are built from
//! the unsigned words `e1 e0^{k1-1} … e1 e0^{kd-1} e1 = (−1)^d w(k)`; by
//! trilinearity this changes every generator by a sign only.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::index::{harmonic_word, Index};
use crate::word::WordPoly;

/// `dim h0_k = 2^{k-1}` for `k ≥ 1`.
pub fn h0_dim(k: usize) -> usize {
    assert!(k >= 1, "weight must be positive");
    1 << (k - 1)
}

/// `D(u,v,w) = u*(v⧢w) − v⧢(u*w)` for `u, v, w` in h0.
pub fn d_generator(u: &WordPoly, v: &WordPoly, w: &WordPoly) -> Result<WordPoly> {
    for x in [u, v, w] {
        if !x.in_h0() {
            return Err(Error::NotInH0(x.to_string()));
        }
    }
    let first = harmonic_word(u, &v.shuffle(w))?;
    let second = v.shuffle(&harmonic_word(u, w)?);
    Ok(first.sub(&second))
}

/// All triples of indices `(κ, λ, μ)` with `|κ| + |λ| + |μ| = k − 1`, in a
/// fixed order: by the weights `(a, b, c)`, then lexicographically.
pub fn enumerate_generators(k: usize) -> impl Iterator<Item = (Index, Index, Index)> {
    assert!(k >= 1, "weight must be positive");
    let n = (k - 1) as u32;
    (0..=n).flat_map(move |a| {
        (0..=n - a).flat_map(move |b| {
            let c = n - a - b;
            let us = Index::compositions(a);
            let vs = Index::compositions(b);
            let ws = Index::compositions(c);
            us.into_iter().flat_map(move |u| {
                let ws = ws.clone();
                vs.clone().into_iter().flat_map(move |v| {
                    let u = u.clone();
                    ws.clone().into_iter().map(move |w| (u.clone(), v.clone(), w))
                })
            })
        })
    })
}

/// `Σ_{a+b+c=k−1} c_a c_b c_c` with `c_0 = 1`, `c_a = 2^{a-1}`.
pub fn generator_count(k: usize) -> u64 {
    assert!(k >= 1, "weight must be positive");
    let c = |a: usize| if a == 0 { 1u64 } else { 1 << (a - 1) };
    let n = k - 1;
    (0..=n).flat_map(|a| (0..=n - a).map(move |b| c(a) * c(b) * c(n - a - b))).sum()
}

/// A word of h0 packed into an integer, first letter most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Packed {
    bits: u64,
    len: u32,
}

impl Packed {
    fn of_index(k: &[u32]) -> Packed {
        let mut bits = 0u64;
        let mut len = 0;
        for &p in k {
            bits = (bits << p) | (1 << (p - 1));
            len += p;
        }
        Packed { bits: (bits << 1) | 1, len: len + 1 }
    }

    fn parts(self) -> Vec<u32> {
        let mut parts = Vec::new();
        let mut cur = 0u32;
        for i in (0..self.len - 1).rev() {
            cur += 1;
            if (self.bits >> i) & 1 == 1 {
                parts.push(cur);
                cur = 0;
            }
        }
        parts
    }
}

/// Calls `f(bits, sign)` for every term of the unsigned-word quasi-shuffle
/// `W(k) * W(l) = Σ (−1)^{merges} W(m)`, where `bits` encodes the index `m`
/// as `Σ` blocks `1 0^{m_i − 1}` (the word without its final letter).
fn stuffle_leaves(k: &[u32], l: &[u32], bits: u64, sign: i64, f: &mut impl FnMut(u64, i64)) {
    match (k.split_first(), l.split_first()) {
        (None, _) => f(append_parts(bits, l), sign),
        (_, None) => f(append_parts(bits, k), sign),
        (Some((&a, kr)), Some((&b, lr))) => {
            stuffle_leaves(kr, l, append_part(bits, a), sign, f);
            stuffle_leaves(k, lr, append_part(bits, b), sign, f);
            stuffle_leaves(kr, lr, append_part(bits, a + b), -sign, f);
        }
    }
}

#[inline]
fn append_part(bits: u64, p: u32) -> u64 {
    (bits << p) | (1 << (p - 1))
}

fn append_parts(mut bits: u64, ps: &[u32]) -> u64 {
    for &p in ps {
        bits = append_part(bits, p);
    }
    bits
}

/// Calls `f(word)` for every interleaving of `u` and `v` (with repetition).
fn shuffle_leaves(u: Packed, v: Packed, acc: u64, f: &mut impl FnMut(u64)) {
    if u.len == 0 {
        return f((acc << v.len) | v.bits);
    }
    if v.len == 0 {
        return f((acc << u.len) | u.bits);
    }
    let (hu, ru) = split_head(u);
    shuffle_leaves(ru, v, (acc << 1) | hu, f);
    let (hv, rv) = split_head(v);
    shuffle_leaves(u, rv, (acc << 1) | hv, f);
}

#[inline]
fn split_head(w: Packed) -> (u64, Packed) {
    let rest = w.len - 1;
    ((w.bits >> rest) & 1, Packed { bits: w.bits & ((1u64 << rest) - 1), len: rest })
}

/// Builds dense integer rows of `D` in weight `k` with reusable scratch space.
#[derive(Debug)]
pub struct RowEngine {
    k: usize,
    mask: u64,
    shuffled: HashMap<u64, i64>,
    harmonic: HashMap<u64, i64>,
}

impl RowEngine {
    pub fn new(k: usize) -> Self {
        assert!((1..=40).contains(&k), "weight out of range");
        RowEngine { k, mask: (1u64 << (k - 1)) - 1, shuffled: HashMap::new(), harmonic: HashMap::new() }
    }

    pub fn dim(&self) -> usize {
        h0_dim(self.k)
    }

    /// Writes the coordinates of `D(W(u), W(v), W(w))` into `row`
    /// (length `2^{k-1}`, overwritten).
    pub fn row(&mut self, u: &Index, v: &Index, w: &Index, row: &mut [i64]) {
        assert_eq!((u.weight() + v.weight() + w.weight()) as usize + 1, self.k, "weights must sum to k - 1");
        row.iter_mut().for_each(|x| *x = 0);
        let mask = self.mask;

        // u * (v ⧢ w)
        self.shuffled.clear();
        let (pv, pw) = (Packed::of_index(v.parts()), Packed::of_index(w.parts()));
        let shuffled = &mut self.shuffled;
        shuffle_leaves(pv, pw, 0, &mut |x| *shuffled.entry(x).or_insert(0) += 1);
        let len_vw = pv.len + pw.len;
        for (&x, &n) in self.shuffled.iter() {
            let parts = Packed { bits: x, len: len_vw }.parts();
            stuffle_leaves(u.parts(), &parts, 0, n, &mut |bits, s| row[(bits & mask) as usize] += s);
        }

        // v ⧢ (u * w)
        self.harmonic.clear();
        let harmonic = &mut self.harmonic;
        stuffle_leaves(u.parts(), w.parts(), 0, 1, &mut |bits, s| *harmonic.entry(bits).or_insert(0) += s);
        let len_uw = u.weight() + w.weight() + 1;
        for (&y, &n) in self.harmonic.iter() {
            if n == 0 {
                continue;
            }
            let py = Packed { bits: (y << 1) | 1, len: len_uw };
            shuffle_leaves(pv, py, 0, &mut |z| row[((z >> 1) & mask) as usize] -= n);
        }
    }
}

/// Coordinates of an h0 element of weight `k` in the column order of
/// [`RowEngine`].
pub fn row_of(p: &WordPoly, k: usize) -> Result<Vec<i64>> {
    let mut row = vec![0i64; h0_dim(k)];
    for (w, c) in p.iter() {
        if !w.in_h0() || w.len() != k + 1 {
            return Err(Error::NotInH0(w.to_string()));
        }
        if !c.is_integer() {
            return Err(Error::Schema(format!("coefficient {c} is not an integer")));
        }
        let inner = (w.bits() >> 1) as usize & (h0_dim(k) - 1);
        row[inner] = i64::try_from(c.to_integer()).map_err(|_| Error::Schema("coefficient too large".into()))?;
    }
    Ok(row)
}

/// The unsigned word `W(k)` as a polynomial.
#[cfg(test)]
fn unsigned_word(k: &Index) -> WordPoly {
    WordPoly::from_word(crate::word::Word::h0_of_index(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::word::Word;

    fn idx(s: &str) -> Index {
        s.parse().unwrap()
    }

    fn wp(s: &str) -> WordPoly {
        WordPoly::from_word(s.parse().unwrap())
    }

    #[test]
    fn generator_examples() {
        let e1 = wp("1");
        let e11 = wp("11");
        let expect = WordPoly::from_index(&idx("2")).scale(&q(2)).add(&WordPoly::from_index(&idx("1,1")));
        assert_eq!(d_generator(&e11, &e1, &e1).unwrap(), expect);
        assert!(d_generator(&e1, &e11, &e1).unwrap().is_zero());
        assert!(d_generator(&e1, &e1, &e1).unwrap().is_zero());
        assert!(matches!(d_generator(&wp("10"), &e1, &e1), Err(Error::NotInH0(_))));
    }

    #[test]
    fn counts() {
        assert_eq!(generator_count(1), 1);
        assert_eq!(generator_count(2), 3);
        for k in 1..=7 {
            assert_eq!(enumerate_generators(k).count() as u64, generator_count(k));
        }
        assert_eq!(generator_count(14), 153600);
    }

    #[test]
    fn packed_round_trip() {
        for wt in 0..=6 {
            for k in Index::compositions(wt) {
                let p = Packed::of_index(k.parts());
                assert_eq!(p.parts(), k.parts());
                assert_eq!(Word::h0_of_index(&k).bits() as u64, p.bits);
            }
        }
    }

    #[test]
    fn engine_matches_reference() {
        for k in 1..=6 {
            let mut eng = RowEngine::new(k);
            let mut row = vec![0; eng.dim()];
            for (u, v, w) in enumerate_generators(k) {
                eng.row(&u, &v, &w, &mut row);
                let reference = d_generator(&unsigned_word(&u), &unsigned_word(&v), &unsigned_word(&w)).unwrap();
                assert_eq!(row, row_of(&reference, k).unwrap(), "D({u};{v};{w})");
            }
        }
    }
}
