//! Polynomials in one or two formal variables with [`ZSymbol`] coefficients.

use std::collections::{btree_map::Entry, BTreeMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Q};
use crate::zsymbol::ZSymbol;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, ZSymbol>,
}

impl TPoly {
    pub fn zero(vars: &[&str]) -> Self {
        TPoly { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    /// Univariate zero in `T`.
    pub fn zero_t() -> Self {
        Self::zero(&["T"])
    }

    /// Bivariate zero in `T1, T2`.
    pub fn zero_t12() -> Self {
        Self::zero(&["T1", "T2"])
    }

    pub fn constant(vars: &[&str], c: ZSymbol) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    /// The variable with position `i`.
    pub fn var(vars: &[&str], i: usize) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[i] = 1;
        let mut p = Self::zero(vars);
        p.add_term(exps, ZSymbol::one());
        p
    }

    pub fn monomial(vars: &[&str], exps: Vec<u32>, c: ZSymbol) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(exps, c);
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: ZSymbol) {
        assert_eq!(exps.len(), self.vars.len(), "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &ZSymbol)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> ZSymbol {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Largest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::DimensionMismatch { expected: self.vars.len(), got: other.vars.len() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-rational::one()))
    }

    pub fn scale(&self, c: &Q) -> Self {
        self.map_coeffs(|s| s.scale(c))
    }

    pub fn mul_symbol(&self, s: &ZSymbol) -> Self {
        self.map_coeffs(|c| c.mul(s))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = TPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (ea, ca) in self.iter() {
            for (eb, cb) in other.iter() {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        Ok(out)
    }

    /// Applies `f` to every coefficient, dropping those that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&ZSymbol) -> ZSymbol) -> Self {
        let mut out = TPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in self.iter() {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Substitutes a symbol for every variable.
    pub fn eval(&self, values: &[ZSymbol]) -> Result<ZSymbol> {
        if values.len() != self.vars.len() {
            return Err(Error::DimensionMismatch { expected: self.vars.len(), got: values.len() });
        }
        let mut out = ZSymbol::zero();
        for (e, c) in self.iter() {
            let mut t = c.clone();
            for (x, &k) in values.iter().zip(e) {
                t = t.mul(&x.pow(k));
            }
            out.add_assign(&t);
        }
        Ok(out)
    }

    /// Substitutes a symbol for variable `i` and removes that variable.
    pub fn eval_var(&self, i: usize, value: &ZSymbol) -> Self {
        let vars: Vec<String> = self.vars.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v.clone()).collect();
        let mut out = TPoly { vars, terms: BTreeMap::new() };
        for (e, c) in self.iter() {
            let mut rest = e.clone();
            let k = rest.remove(i);
            out.add_term(rest, c.mul(&value.pow(k)));
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = TPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in self.iter() {
            if e[i] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[i] -= 1;
            out.add_term(d, c.scale(&rational::q(e[i] as i64)));
        }
        out
    }

    /// `∫_0^upper p dT` for a univariate polynomial, with `upper` a symbol.
    pub fn integrate_to(&self, upper: &ZSymbol) -> Result<ZSymbol> {
        if self.vars.len() != 1 {
            return Err(Error::DimensionMismatch { expected: 1, got: self.vars.len() });
        }
        let mut out = ZSymbol::zero();
        for (e, c) in self.iter() {
            let j = e[0];
            out.add_assign(&c.mul(&upper.pow(j + 1)).scale(&rational::q_frac(1, j as i64 + 1)));
        }
        Ok(out)
    }

    /// Composes a univariate polynomial with `sub`, giving a polynomial in
    /// the variables of `sub`.
    pub fn compose(&self, sub: &TPoly) -> Result<TPoly> {
        if self.vars.len() != 1 {
            return Err(Error::DimensionMismatch { expected: 1, got: self.vars.len() });
        }
        let names: Vec<&str> = sub.vars.iter().map(String::as_str).collect();
        let top = self.degree().unwrap_or(0);
        // Horner from the top degree down
        let mut acc = TPoly::zero(&names);
        for j in (0..=top).rev() {
            acc = acc.mul(sub)?;
            acc = acc.add(&TPoly::constant(&names, self.coeff(&[j])))?;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TPolyWire::from(self)).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let wire: TPolyWire = serde_json::from_value(v.clone())?;
        wire.try_into()
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", c)?;
            for (v, &k) in self.vars.iter().zip(e) {
                match k {
                    0 => {}
                    1 => write!(f, "·{}", v)?,
                    _ => write!(f, "·{}^{}", v, k)?,
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    exps: Vec<u32>,
    coeff: ZSymbol,
}

#[derive(Serialize, Deserialize)]
struct TPolyWire {
    vars: Vec<String>,
    terms: Vec<TermWire>,
}

impl From<&TPoly> for TPolyWire {
    fn from(p: &TPoly) -> Self {
        TPolyWire {
            vars: p.vars.clone(),
            terms: p.iter().map(|(e, c)| TermWire { exps: e.clone(), coeff: c.clone() }).collect(),
        }
    }
}

impl TryFrom<TPolyWire> for TPoly {
    type Error = Error;

    fn try_from(w: TPolyWire) -> Result<Self> {
        let mut p = TPoly { vars: w.vars, terms: BTreeMap::new() };
        for t in w.terms {
            if t.exps.len() != p.vars.len() {
                return Err(Error::DimensionMismatch { expected: p.vars.len(), got: t.exps.len() });
            }
            p.add_term(t.exps, t.coeff);
        }
        Ok(p)
    }
}
