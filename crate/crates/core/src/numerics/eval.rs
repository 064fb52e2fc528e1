//! Numerical values of symbols and residual-based identity checks.

use std::collections::HashMap;
use std::io::{BufRead, Write};
use std::path::Path;
use std::sync::RwLock;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::fixed::{bits_for_digits, fixed_to_decimal, pi, BigComplex};
use super::mzv::mzv_value;
use crate::error::{Error, Result};
use crate::index::Index;
use crate::rational::{self, Q};
use crate::tpoly::TPoly;
use crate::zsymbol::ZSymbol;

/// Evaluates symbols at a fixed precision, caching ζ values.
#[derive(Debug)]
pub struct Evaluator {
    digits: u32,
    bits: u32,
    twopii: BigComplex,
    zetas: RwLock<HashMap<Index, BigComplex>>,
    powers: RwLock<Vec<BigComplex>>,
}

#[derive(Serialize, Deserialize)]
struct CacheLine {
    index: String,
    digits: u32,
    re: String,
}

impl Evaluator {
    pub fn new(digits: u32) -> Self {
        let bits = bits_for_digits(digits);
        let twopii = pi(bits).mul_q(&rational::q(2)).mul_i();
        Evaluator {
            digits,
            bits,
            powers: RwLock::new(vec![BigComplex::one(bits), twopii.clone()]),
            twopii,
            zetas: RwLock::new(HashMap::new()),
        }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// `ζ(k)` at this evaluator's precision.
    pub fn zeta(&self, k: &Index) -> Result<BigComplex> {
        if let Some(v) = self.zetas.read().unwrap().get(k) {
            return Ok(v.clone());
        }
        let v = mzv_value(k, self.digits)?;
        self.zetas.write().unwrap().entry(k.clone()).or_insert(v.clone());
        Ok(v)
    }

    fn twopii_pow(&self, m: u32) -> BigComplex {
        let m = m as usize;
        if let Some(v) = self.powers.read().unwrap().get(m) {
            return v.clone();
        }
        let mut p = self.powers.write().unwrap();
        while p.len() <= m {
            let next = p.last().unwrap().mul(&self.twopii);
            p.push(next);
        }
        p[m].clone()
    }

    pub fn value(&self, s: &ZSymbol) -> Result<BigComplex> {
        let mut sum = BigComplex::zero(self.bits);
        for (m, c) in s.iter() {
            let mut t = self.twopii_pow(m.twopii());
            for k in m.factors() {
                t = t.mul(&self.zeta(k)?);
            }
            sum = sum.add(&t.mul_q(c));
        }
        Ok(sum)
    }

    /// Merges values from a cache file of JSON lines
    /// `{"index": "3,2", "digits": 60, "re": "1.23…"}`; lines written at a
    /// lower precision are ignored.
    pub fn load_cache(&self, path: &Path) -> Result<usize> {
        if !path.exists() {
            return Ok(0);
        }
        let file = std::io::BufReader::new(std::fs::File::open(path)?);
        let mut loaded = 0;
        for line in file.lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let entry: CacheLine = serde_json::from_str(&line)?;
            if entry.digits < self.digits {
                continue;
            }
            let k: Index = entry.index.parse()?;
            let v = parse_decimal(&entry.re, self.bits, entry.digits)?;
            self.zetas.write().unwrap().insert(k, v);
            loaded += 1;
        }
        Ok(loaded)
    }

    /// Writes every cached ζ value as JSON lines.
    pub fn save_cache(&self, path: &Path) -> Result<()> {
        let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
        let map = self.zetas.read().unwrap();
        let mut keys: Vec<&Index> = map.keys().collect();
        keys.sort();
        // 10^-shown < 2^-bits / 10, so reloading rounds back to the same grid point
        let shown = (self.bits as u64 * 30103 / 100000) as u32 + 2;
        for k in keys {
            let line = CacheLine { index: k.to_string(), digits: self.digits, re: fixed_to_decimal(map[k].re_raw(), self.bits, shown) };
            writeln!(out, "{}", serde_json::to_string(&line)?)?;
        }
        Ok(())
    }
}

/// Parses a decimal string written with at least `digits` correct decimals.
fn parse_decimal(s: &str, bits: u32, digits: u32) -> Result<BigComplex> {
    let bad = || Error::Schema(format!("bad decimal {s:?} in cache"));
    let (neg, body) = s.strip_prefix('-').map_or((false, s), |r| (true, r));
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    let scale = frac.len() as u32;
    let n: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let n = if neg { -n } else { n };
    let x = Q::new(n, BigInt::from(10u32).pow(scale));
    let v = BigComplex::from_q(&x, bits);
    // stored value is within 10^-digits of the truth
    let slack = BigComplex::from_q(&Q::new(BigInt::from(2), BigInt::from(10u32).pow(digits)), bits);
    let err = v.err_raw() + slack.re_raw().magnitude() + 2u32;
    Ok(BigComplex::from_raw(v.re_raw().clone(), v.im_raw().clone(), err, bits))
}

/// Either side of an identity to verify.
#[derive(Clone, Debug)]
pub enum Expr {
    Symbol(ZSymbol),
    Poly(TPoly),
}

impl From<ZSymbol> for Expr {
    fn from(s: ZSymbol) -> Self {
        Expr::Symbol(s)
    }
}

impl From<TPoly> for Expr {
    fn from(p: TPoly) -> Self {
        Expr::Poly(p)
    }
}

/// Outcome of a numerical identity check.
#[derive(Clone, Debug, Serialize)]
pub struct Residual {
    /// Upper bound on `max |lhs − rhs|` over the sample points.
    pub residual: f64,
    /// Threshold `10^-(digits−guard)`.
    pub tolerance: f64,
    pub pass: bool,
}

/// Differences of the two sides at each sample point, as exact symbols.
fn differences(lhs: &Expr, rhs: &Expr, samples: &[Vec<ZSymbol>]) -> Result<Vec<ZSymbol>> {
    match (lhs, rhs) {
        (Expr::Symbol(a), Expr::Symbol(b)) => Ok(vec![a.sub(b)]),
        (Expr::Poly(p), Expr::Symbol(s)) | (Expr::Symbol(s), Expr::Poly(p)) => {
            let names: Vec<&str> = p.vars().iter().map(String::as_str).collect();
            let c = Expr::Poly(TPoly::constant(&names, s.clone()));
            if matches!(lhs, Expr::Poly(_)) {
                differences(lhs, &c, samples)
            } else {
                differences(&c, rhs, samples)
            }
        }
        (Expr::Poly(a), Expr::Poly(b)) => {
            let d = a.sub(b)?;
            if samples.is_empty() {
                return Err(Error::DimensionMismatch { expected: d.nvars(), got: 0 });
            }
            samples.iter().map(|pt| d.eval(pt)).collect()
        }
    }
}

/// `max |lhs − rhs|` over the samples, passing when below `10^-(digits−guard)`.
pub fn verify_identity(ev: &Evaluator, lhs: &Expr, rhs: &Expr, samples: &[Vec<ZSymbol>], guard: u32) -> Result<Residual> {
    if guard >= ev.digits() {
        return Err(Error::Precision(format!("guard {guard} must be below digits {}", ev.digits())));
    }
    let mut residual: f64 = 0.0;
    for d in differences(lhs, rhs, samples)? {
        if d.is_zero() {
            continue;
        }
        residual = residual.max(ev.value(&d)?.abs_upper());
    }
    let tolerance = 10f64.powi(-((ev.digits() - guard) as i32));
    Ok(Residual { residual, tolerance, pass: residual < tolerance })
}
