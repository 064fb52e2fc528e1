//! Shuffle regularization of iterated integrals along the straight path
//! from 0 to 1 (tangent vector 1 at 0 and -1 at 1), the regularized
//! polynomials `ζ_⧢(k;T)`, `ζ_*(k;T)`, and the series `Γ1`.
//!
//! A word `a1…an` stands for the iterated integral whose first letter is
//! integrated closest to 0, so the admissible word `1 0^{k1-1} … 1 0^{kd-1}`
//! has regularized value `(-1)^d ζ(k1,…,kd)`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::index::{stuffle_indices, Index};
use crate::rational::{self, Q};
use crate::tpoly::TPoly;
use crate::word::Word;
use crate::zsymbol::ZSymbol;

/// Coefficients of a polynomial in `T`, lowest degree first.
type Series = Arc<Vec<ZSymbol>>;

fn add_series(acc: &mut Vec<ZSymbol>, s: &[ZSymbol], c: &Q) {
    if acc.len() < s.len() {
        acc.resize(s.len(), ZSymbol::zero());
    }
    for (a, x) in acc.iter_mut().zip(s) {
        a.add_assign(&x.scale(c));
    }
}

fn trim(mut v: Vec<ZSymbol>) -> Vec<ZSymbol> {
    while v.last().is_some_and(ZSymbol::is_zero) {
        v.pop();
    }
    v
}

fn series_to_tpoly(s: &[ZSymbol]) -> TPoly {
    let mut p = TPoly::zero_t();
    for (j, c) in s.iter().enumerate() {
        p.add_term(vec![j as u32], c.clone());
    }
    p
}

fn word_cache() -> &'static RwLock<HashMap<Word, Series>> {
    static CACHE: OnceLock<RwLock<HashMap<Word, Series>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn index_cache() -> &'static RwLock<HashMap<Index, Series>> {
    static CACHE: OnceLock<RwLock<HashMap<Index, Series>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Regularized iterated integral of `w` as a polynomial in `T`, where the
/// letter `e1` alone regularizes to `-T` and `e0` to 0.
fn reg_series(w: &Word) -> Series {
    if let Some(s) = word_cache().read().unwrap().get(w) {
        return s.clone();
    }
    let s = Arc::new(trim(compute_reg_series(w)));
    word_cache().write().unwrap().insert(*w, s.clone());
    s
}

fn compute_reg_series(w: &Word) -> Vec<ZSymbol> {
    let n = w.len();
    if n == 0 {
        return vec![ZSymbol::one()];
    }
    let lead = w.leading_zeros();
    if lead == n {
        return vec![];
    }
    if lead > 0 {
        // e0 ⧢ e0^{i-1}v = i·e0^i v + Σ_{p≥1} e0^{i-1}(v with e0 inserted at p)
        let v = w.suffix(lead);
        let head = Word::from_letters(&vec![0; lead - 1]);
        let mut acc = Vec::new();
        for p in 1..=v.len() {
            add_series(&mut acc, &reg_series(&head.concat(&v.insert(p, 0))), &rational::one());
        }
        let c = rational::q_frac(-1, lead as i64);
        return acc.iter().map(|x| x.scale(&c)).collect();
    }
    let tail = w.trailing_ones();
    if tail == 0 {
        let k = w.dch_to_index();
        let z = ZSymbol::zeta(&k).expect("admissible word");
        return vec![z.scale(&rational::sign(k.depth() as u64))];
    }
    let u = w.prefix(n - tail);
    let ones = Word::from_letters(&vec![1; tail - 1]);
    let mut acc = Vec::new();
    if u.is_empty() {
        // e1^j = (e1)^{⧢j}/j!
        let mut v = vec![ZSymbol::zero(); tail + 1];
        v[tail] = ZSymbol::constant(rational::sign(tail as u64) * rational::inv_factorial(tail as u32));
        return v;
    }
    // e1 ⧢ u e1^{j-1} = j·u e1^j + Σ_{p<|u|} (u with e1 inserted at p) e1^{j-1}
    let shorter = reg_series(&u.concat(&ones));
    let mut shifted = vec![ZSymbol::zero()];
    shifted.extend(shorter.iter().map(ZSymbol::neg));
    add_series(&mut acc, &shifted, &rational::one());
    for p in 0..u.len() {
        add_series(&mut acc, &reg_series(&u.insert(p, 1).concat(&ones)), &-rational::one());
    }
    let c = rational::q_frac(1, tail as i64);
    acc.iter().map(|x| x.scale(&c)).collect()
}

/// `I_dch(0'; w; 1')`: the shuffle-regularized integral of `w` from 0 to 1.
pub fn reg_dch(w: &Word) -> ZSymbol {
    reg_series(w).first().cloned().unwrap_or_default()
}

/// `I_{dch^{-1}}(1'; w; 0')`, the same integral along the reversed path.
pub fn reg_dch_inv(w: &Word) -> ZSymbol {
    reg_dch(&w.reverse()).scale(&rational::sign(w.len() as u64))
}

/// `ζ_⧢(k;T)`.
pub fn zeta_sh_poly(k: &Index) -> TPoly {
    let s = reg_series(&Word::dch_of_index(k));
    series_to_tpoly(&s).scale(&rational::sign(k.depth() as u64))
}

fn star_series(k: &Index) -> Series {
    if let Some(s) = index_cache().read().unwrap().get(k) {
        return s.clone();
    }
    let s = Arc::new(trim(compute_star_series(k)));
    index_cache().write().unwrap().insert(k.clone(), s.clone());
    s
}

fn compute_star_series(k: &Index) -> Vec<ZSymbol> {
    if k.is_admissible() {
        return vec![ZSymbol::zeta(k).expect("admissible index")];
    }
    // (a,1^{n-1}) * (1) = n·(a,1^n) + terms with fewer trailing ones
    let n = k.trailing_ones();
    let x = k.prefix(k.depth() - 1);
    let prod = stuffle_indices(&x, &Index::from_parts(&[1]));
    let mut acc = vec![ZSymbol::zero()];
    acc.extend(star_series(&x).iter().cloned());
    for (m, c) in prod.iter() {
        if m != k {
            add_series(&mut acc, &star_series(m), &-c.clone());
        }
    }
    debug_assert_eq!(prod.coeff(k), rational::q(n as i64));
    let c = rational::q_frac(1, n as i64);
    acc.iter().map(|z| z.scale(&c)).collect()
}

/// `ζ_*(k;T)`, the harmonic regularization with `ζ_*(1;T) = T`.
pub fn zeta_star_poly(k: &Index) -> TPoly {
    series_to_tpoly(&star_series(k))
}

/// `exp(Σ_{k≥2} s_k t^k)` truncated after `t^n`, for `s_k` given by `term`.
fn exp_series(n: usize, term: impl Fn(usize) -> ZSymbol) -> Vec<ZSymbol> {
    let s: Vec<ZSymbol> = (0..=n).map(|k| if k < 2 { ZSymbol::zero() } else { term(k) }).collect();
    let mut g = vec![ZSymbol::one()];
    for m in 1..=n {
        let mut acc = ZSymbol::zero();
        for j in 2..=m {
            acc.add_assign(&s[j].mul(&g[m - j]).scale(&rational::q(j as i64)));
        }
        g.push(acc.scale(&rational::q_frac(1, m as i64)));
    }
    g
}

fn zeta_single(k: usize) -> ZSymbol {
    ZSymbol::zeta(&Index::from_parts(&[k as u32])).expect("k >= 2")
}

/// Coefficients of `t^0 … t^n` in `Γ1(t) = exp(Σ_{k≥2} ζ(k)(-t)^k / k)`.
pub fn gamma1_coeffs(n: usize) -> Vec<ZSymbol> {
    exp_series(n, |k| zeta_single(k).scale(&(rational::sign(k as u64) * rational::q_frac(1, k as i64))))
}

/// `ζ_*(k;T)` read off from `Φ_⧢(T)·Γ1(-X1)^{-1}`.
pub fn zeta_star_via_gamma(k: &Index) -> TPoly {
    let w = Word::dch_of_index(k);
    let j_max = w.trailing_ones();
    // Γ1(-X1)^{-1} = exp(-Σ ζ(k) X1^k / k)
    let h = exp_series(j_max, |k| zeta_single(k).scale(&rational::q_frac(-1, k as i64)));
    let mut acc: Vec<ZSymbol> = Vec::new();
    for (j, hj) in h.iter().enumerate() {
        if hj.is_zero() {
            continue;
        }
        let s: Vec<ZSymbol> = reg_series(&w.prefix(w.len() - j)).iter().map(|c| c.mul(hj)).collect();
        add_series(&mut acc, &s, &rational::one());
    }
    series_to_tpoly(&trim(acc)).scale(&rational::sign(k.depth() as u64))
}
