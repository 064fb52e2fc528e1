//! Multiple zeta values to high precision.
//!
//! `ζ(k)` is the iterated integral of `ω1 ω0^{k1-1} … ω1 ω0^{kd-1}` over
//! `[0,1]`, with `ω0 = dt/t`, `ω1 = dt/(1-t)` and the first letter nearest
//! to 0. Splitting the path at 1/2 writes it as
//! `Σ_j I(0;a1…aj;1/2)·I(0;ā_n…ā_{j+1};1/2)`, where the bar swaps the two
//! letters. Every factor is a power series in `x = 1/2` whose coefficients
//! lie in `[0,1]`, so truncating after `N` terms leaves a tail below `2^-N`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::fixed::{bits_for_digits, BigComplex};
use crate::error::{Error, Result};
use crate::index::Index;

/// Values `I(0; a1…aj; 1/2)` for `j = 0..=n` together with their error
/// bounds in units of `2^-bits`. The word must be empty or start with 1.
fn prefix_values_at_half(letters: &[u8], bits: u32) -> Vec<(BigInt, u64)> {
    debug_assert!(letters.first().is_none_or(|&a| a == 1));
    let terms = bits as usize + 2;
    let mut c = vec![BigInt::zero(); terms + 1];
    c[0] = BigInt::one() << bits;
    let mut coeff_err: u64 = 0;
    let mut out = vec![(c[0].clone(), 0)];
    for &a in letters {
        if a == 0 {
            for (m, cm) in c.iter_mut().enumerate().skip(1) {
                *cm = &*cm / BigInt::from(m as u64);
            }
        } else {
            let mut partial = BigInt::zero();
            let mut next = vec![BigInt::zero(); terms + 1];
            for m in 1..=terms {
                partial += &c[m - 1];
                next[m] = &partial / BigInt::from(m as u64);
            }
            c = next;
        }
        c[0] = BigInt::zero();
        coeff_err += 1;
        let mut value = BigInt::zero();
        for (m, cm) in c.iter().enumerate().skip(1) {
            value += cm >> m;
        }
        // truncation of each term, coefficient errors weighted by Σ 2^-m ≤ 1,
        // and the tail Σ_{m>N} 2^-m
        out.push((value, terms as u64 + coeff_err + 1));
    }
    out
}

/// `ζ(k)` for an admissible nonempty index with error at most `10^-digits`.
pub fn mzv_value(k: &Index, digits: u32) -> Result<BigComplex> {
    if k.is_empty() || !k.is_admissible() {
        return Err(Error::NotAdmissible(k.clone()));
    }
    if digits < 10 {
        return Err(Error::Precision(format!("{digits} digits requested, at least 10 required")));
    }
    let bits = bits_for_digits(digits);
    let mut letters = Vec::new();
    for &p in k.parts() {
        letters.push(1u8);
        letters.extend(std::iter::repeat_n(0u8, p as usize - 1));
    }
    let dual: Vec<u8> = letters.iter().rev().map(|a| 1 - a).collect();
    let left = prefix_values_at_half(&letters, bits);
    let right = prefix_values_at_half(&dual, bits);
    let n = letters.len();
    let mut sum = BigComplex::zero(bits);
    for j in 0..=n {
        let (a, ea) = &left[j];
        let (b, eb) = &right[n - j];
        sum = sum.add(&BigComplex::real(a.clone(), *ea, bits).mul(&BigComplex::real(b.clone(), *eb, bits)));
    }
    Ok(sum)
}

/// Partial sum of `ζ(k)` over `0 < m1 < … < md ≤ n`, at `digits` digits.
pub fn mzv_naive(k: &Index, n: u64, digits: u32) -> Result<BigComplex> {
    if k.is_empty() || !k.is_admissible() {
        return Err(Error::NotAdmissible(k.clone()));
    }
    let bits = bits_for_digits(digits);
    let n = n as usize;
    // prefix[m] = Σ over chains ending at or below m for the parts seen so far
    let mut prefix = vec![BigInt::one() << bits; n + 1];
    let mut prefix_err = vec![0u64; n + 1];
    let mut first = true;
    for &p in k.parts() {
        let mut next = vec![BigInt::zero(); n + 1];
        let mut next_err = vec![0u64; n + 1];
        for m in 1..=n {
            let below = if first { BigInt::one() << bits } else { prefix[m - 1].clone() };
            let below_err = if first { 0 } else { prefix_err[m - 1] };
            let den = BigInt::from(m as u64).pow(p);
            let q = below / &den;
            next[m] = &next[m - 1] + q;
            next_err[m] = next_err[m - 1] + below_err + 1;
        }
        prefix = next;
        prefix_err = next_err;
        first = false;
    }
    Ok(BigComplex::real(prefix[n].clone(), prefix_err[n], bits))
}

/// Rigorous upper bound on `ζ(k) − mzv_naive(k, n)` (the omitted terms are
/// positive). With `j = d−1`, `s = kd−1` and `y = 1 + ln n`, the inner sums are
/// at most `y^j / j!`, and comparing with an integral gives
/// `n^{-s} Σ_{i=0}^{j} y^{j-i} / ((j-i)! s^{i+1})`.
pub fn naive_tail_bound(k: &Index, n: u64) -> Result<f64> {
    if k.is_empty() || !k.is_admissible() {
        return Err(Error::NotAdmissible(k.clone()));
    }
    let j = k.depth() - 1;
    let s = (*k.parts().last().unwrap() - 1) as f64;
    let y = 1.0 + (n as f64).ln();
    // the integrand is decreasing beyond n only when (s+1)·y ≥ j
    if (s + 1.0) * y < j as f64 || n < 2 {
        return Err(Error::Precision(format!("truncation point {n} too small for index {k}")));
    }
    let mut total = 0.0;
    for i in 0..=j {
        let e = (j - i) as i32;
        let fact: f64 = (1..=e).map(f64::from).product();
        total += y.powi(e) / (fact * s.powi(i as i32 + 1));
    }
    Ok(total * (n as f64).powf(-s) * (1.0 + 1e-12))
}
