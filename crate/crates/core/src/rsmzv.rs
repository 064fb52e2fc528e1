//! The polynomial `L(w;T)`, the map `Z^RS`, and the refined symmetric
//! values `ζ^RS(k)` computed along four independent routes.
//!
//! Coefficients of `L(w;T)` are returned in shuffle-normal form (see
//! [`ZSymbol::shuffle_normalize`]); in that form the constant term of
//! `L(w;T)` vanishes exactly for every nonempty word, which makes the
//! division by `2πi` in `Z^RS` exact.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::index::Index;
use crate::rational;
use crate::regularization::{reg_dch, reg_dch_inv, zeta_sh_poly, zeta_star_poly};
use crate::tpoly::TPoly;
use crate::word::{Word, WordPoly};
use crate::zsymbol::ZSymbol;

const T12: [&str; 2] = ["T1", "T2"];

/// `L(w;T) = Σ_{w = u·e1^r·v} (T^r / r!) · I_dch(u) · I_{dch^{-1}}(v)`.
pub fn l_poly(w: &Word) -> TPoly {
    let n = w.len();
    let mut p = TPoly::zero_t();
    for i in 0..=n {
        let left = reg_dch(&w.prefix(i));
        if left.is_zero() {
            continue;
        }
        let mut r = 0;
        loop {
            let right = reg_dch_inv(&w.suffix(i + r));
            if !right.is_zero() {
                let c = left.mul(&right).scale(&rational::inv_factorial(r as u32)).shuffle_normalize();
                p.add_term(vec![r as u32], c);
            }
            if i + r == n || w.letter(i + r) != 1 {
                break;
            }
            r += 1;
        }
    }
    p
}

/// `L(u;T)` extended linearly to word polynomials.
pub fn l_poly_linear(u: &WordPoly) -> TPoly {
    let mut p = TPoly::zero_t();
    for (w, c) in u.iter() {
        for (e, s) in l_poly(w).iter() {
            p.add_term(e.clone(), s.scale(c));
        }
    }
    p
}

/// `L_n(w) = L(w; 2πi·n)`.
pub fn l_n(w: &Word, n: i64) -> ZSymbol {
    let t = ZSymbol::twopii_pow(1).scale(&rational::q(n));
    l_poly(w).eval(&[t]).expect("univariate")
}

/// `L̃(u;T) = L(u;T+πi) − L(u;T−πi)`.
pub fn l_tilde(u: &WordPoly) -> TPoly {
    let l = l_poly_linear(u);
    let t = TPoly::var(&["T"], 0);
    let pi = TPoly::constant(&["T"], ZSymbol::pi_multiple(&rational::one()));
    let plus = l.compose(&t.add(&pi).expect("same variables")).expect("univariate");
    let minus = l.compose(&t.sub(&pi).expect("same variables")).expect("univariate");
    plus.sub(&minus).expect("same variables")
}

fn z_rs_cache() -> &'static RwLock<HashMap<Word, ZSymbol>> {
    static CACHE: OnceLock<RwLock<HashMap<Word, ZSymbol>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn z_rs_word(w: &Word) -> Result<ZSymbol> {
    if let Some(s) = z_rs_cache().read().unwrap().get(w) {
        return Ok(s.clone());
    }
    let s = l_poly(w).eval(&[ZSymbol::twopii_pow(1)])?.div_twopii()?;
    z_rs_cache().write().unwrap().insert(*w, s.clone());
    Ok(s)
}

/// `Z^RS(u) = L(u;2πi) / 2πi` for `u` in h.
pub fn z_rs(u: &WordPoly) -> Result<ZSymbol> {
    if !u.in_h() {
        return Err(Error::NotInH(u.to_string()));
    }
    let mut out = ZSymbol::zero();
    for (w, c) in u.iter() {
        out.add_assign(&z_rs_word(w)?.scale(c));
    }
    Ok(out)
}

/// `ζ_⧢(k)` at `T = 0`.
fn zeta_sh0(k: &Index) -> ZSymbol {
    zeta_sh_poly(k).coeff(&[0])
}

/// The closed formula
/// `Σ_{a≤b, k_j=1 (a<j≤b)} (-2πi)^{b-a}/(b-a+1)! · (-1)^{k_{b+1}+…+k_d} ζ_⧢(k1..ka) ζ_⧢(kd..k_{b+1})`.
pub fn zeta_rs_explicit(k: &Index) -> ZSymbol {
    let parts = k.parts();
    let d = parts.len();
    let mut out = ZSymbol::zero();
    for a in 0..=d {
        let left = zeta_sh0(&k.prefix(a));
        for b in a..=d {
            if b > a && parts[b - 1] != 1 {
                break;
            }
            let tail = k.suffix(b);
            let sign = rational::sign(tail.weight() as u64);
            let right = zeta_sh0(&tail.reversed());
            let m = (b - a) as u32;
            let c = sign * rational::sign(m as u64) * rational::inv_factorial(m + 1);
            out.add_assign(&left.mul(&right).mul_twopii(m).scale(&c));
        }
    }
    out
}

/// `Z^RS(w(k))`.
pub fn zeta_rs_lpoly(k: &Index) -> ZSymbol {
    z_rs(&WordPoly::from_index(k)).expect("w(k) lies in h")
}

fn lift(p: &TPoly, var: usize) -> TPoly {
    let mut out = TPoly::zero(&T12);
    for (e, c) in p.iter() {
        let mut exps = vec![0, 0];
        exps[var] = e[0];
        out.add_term(exps, c.clone());
    }
    out
}

fn symmetrized(k: &Index, poly: impl Fn(&Index) -> TPoly) -> TPoly {
    let d = k.depth();
    let mut out = TPoly::zero(&T12);
    for i in 0..=d {
        let tail = k.suffix(i);
        let left = lift(&poly(&k.prefix(i)), 0);
        let right = lift(&poly(&tail.reversed()), 1);
        let term = left.mul(&right).expect("same variables").scale(&rational::sign(tail.weight() as u64));
        out = out.add(&term).expect("same variables");
    }
    out
}

/// `ζ^S_⧢(k;T1,T2) = Σ_i (-1)^{k_{i+1}+…+k_d} ζ_⧢(k1..ki;T1) ζ_⧢(kd..k_{i+1};T2)`.
pub fn zeta_sh_s(k: &Index) -> TPoly {
    symmetrized(k, zeta_sh_poly)
}

/// `ζ^S_*(k;T1,T2)`, the same sum with harmonic regularization.
pub fn zeta_star_s(k: &Index) -> TPoly {
    symmetrized(k, zeta_star_poly)
}

/// `ζ^S_*(k; -πi/2, πi/2)`.
pub fn xi_btt(k: &Index) -> ZSymbol {
    let half = rational::q_frac(1, 2);
    let pts = [ZSymbol::pi_multiple(&-half.clone()), ZSymbol::pi_multiple(&half)];
    zeta_star_s(k).eval(&pts).expect("bivariate")
}

/// `(1/2πi) ∫_0^{2πi} ζ^S_⧢(k;0,T) dT`.
pub fn zeta_rs_integral(k: &Index) -> ZSymbol {
    let p = zeta_sh_s(k).eval_var(0, &ZSymbol::zero());
    p.integrate_to(&ZSymbol::twopii_pow(1)).expect("univariate").div_twopii().expect("integral carries a factor 2πi")
}

/// Computation path for `ζ^RS(k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Route {
    #[default]
    Explicit,
    LPoly,
    Integral,
    Btt,
}

impl Route {
    pub const ALL: [Route; 4] = [Route::Explicit, Route::LPoly, Route::Integral, Route::Btt];
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Explicit => "explicit",
            Route::LPoly => "lpoly",
            Route::Integral => "integral",
            Route::Btt => "btt",
        })
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "explicit" => Ok(Route::Explicit),
            "lpoly" => Ok(Route::LPoly),
            "integral" => Ok(Route::Integral),
            "btt" => Ok(Route::Btt),
            _ => Err(Error::Config(format!("unknown route {s:?}: expected explicit, lpoly, integral or btt"))),
        }
    }
}

/// `ζ^RS(k)` along the chosen route.
pub fn zeta_rs(k: &Index, route: Route) -> ZSymbol {
    match route {
        Route::Explicit => zeta_rs_explicit(k),
        Route::LPoly => zeta_rs_lpoly(k),
        Route::Integral => zeta_rs_integral(k),
        Route::Btt => xi_btt(k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_frac};

    fn idx(s: &str) -> Index {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn z(s: &str) -> ZSymbol {
        ZSymbol::zeta(&idx(s)).unwrap()
    }

    fn tp(m: u32, c: ZSymbol) -> ZSymbol {
        c.mul_twopii(m)
    }

    #[test]
    fn l_poly_examples() {
        assert_eq!(l_poly(&w("1")), TPoly::var(&["T"], 0));
        assert_eq!(l_poly(&w("11")), TPoly::monomial(&["T"], vec![2], ZSymbol::constant(q_frac(1, 2))));
        assert_eq!(l_poly(&Word::empty()), TPoly::constant(&["T"], ZSymbol::one()));
        for n in 1..=6 {
            for x in Word::all_of_len(n) {
                assert!(l_poly(&x).coeff(&[0]).is_zero(), "L({};0)", x);
            }
        }
    }

    #[test]
    fn l_n_examples() {
        assert!(l_n(&w("101"), 0).is_zero());
        assert_eq!(l_n(&w("1"), 1), ZSymbol::twopii_pow(1));
        assert_eq!(l_n(&w("11"), -1), ZSymbol::twopii_pow(2).scale(&q_frac(1, 2)));
    }

    #[test]
    fn z_rs_examples() {
        assert_eq!(z_rs(&WordPoly::from_word(w("1"))).unwrap(), ZSymbol::one());
        assert_eq!(z_rs(&WordPoly::from_index(&idx("1"))).unwrap(), ZSymbol::pi_multiple(&q(-1)));
        assert_eq!(z_rs(&WordPoly::from_index(&idx("2"))).unwrap(), z("2").scale(&q(2)));
        assert!(matches!(z_rs(&WordPoly::one()), Err(Error::NotInH(_))));
    }

    #[test]
    fn explicit_examples() {
        assert_eq!(zeta_rs_explicit(&Index::empty()), ZSymbol::one());
        assert_eq!(zeta_rs_explicit(&idx("1")), ZSymbol::pi_multiple(&q(-1)));
        assert_eq!(zeta_rs_explicit(&idx("1,1")), tp(2, ZSymbol::constant(q_frac(1, 6))));
        assert_eq!(zeta_rs_explicit(&idx("2")), z("2").scale(&q(2)));
    }

    #[test]
    fn symmetrized_examples() {
        let t1 = TPoly::var(&T12, 0);
        let t2 = TPoly::var(&T12, 1);
        assert_eq!(zeta_sh_s(&Index::empty()), TPoly::constant(&T12, ZSymbol::one()));
        assert_eq!(zeta_sh_s(&idx("1")), t1.sub(&t2).unwrap());
        assert_eq!(zeta_sh_s(&idx("2")), TPoly::constant(&T12, z("2").scale(&q(2))));
        assert_eq!(zeta_star_s(&idx("1")), t1.sub(&t2).unwrap());
        // (1,1): (T1²−ζ(2))/2 − T1·T2 + (T2²−ζ(2))/2
        let d = t1.sub(&t2).unwrap();
        let expect = d.mul(&d).unwrap().scale(&q_frac(1, 2)).sub(&TPoly::constant(&T12, z("2"))).unwrap();
        assert_eq!(zeta_star_s(&idx("1,1")), expect);
    }

    #[test]
    fn btt_and_integral_examples() {
        assert_eq!(xi_btt(&Index::empty()), ZSymbol::one());
        assert_eq!(xi_btt(&idx("1")), ZSymbol::pi_multiple(&q(-1)));
        assert_eq!(xi_btt(&idx("2")), z("2").scale(&q(2)));
        assert_eq!(zeta_rs_integral(&Index::empty()), ZSymbol::one());
        assert_eq!(zeta_rs_integral(&idx("1")), ZSymbol::pi_multiple(&q(-1)));
        assert_eq!(zeta_rs_integral(&idx("2")), z("2").scale(&q(2)));
    }

    #[test]
    fn kernel_element() {
        // 2 w(2) + w(1,1)
        let u = WordPoly::from_index(&idx("2")).scale(&q(2)).add(&WordPoly::from_index(&idx("1,1")));
        let v = z_rs(&u).unwrap();
        // 4ζ(2) + (2πi)²/6: zero once ζ(2) = -(2πi)²/24 is imposed
        assert_eq!(v, z("2").scale(&q(4)).add(&ZSymbol::twopii_pow(2).scale(&q_frac(1, 6))));
    }

    #[test]
    fn routes_agree_small() {
        for wt in 0..=4 {
            for k in Index::compositions(wt) {
                let e = zeta_rs_explicit(&k).shuffle_normalize();
                assert_eq!(zeta_rs_lpoly(&k).shuffle_normalize(), e, "lpoly {}", k);
                assert_eq!(zeta_rs_integral(&k).shuffle_normalize(), e, "integral {}", k);
            }
        }
    }
}
