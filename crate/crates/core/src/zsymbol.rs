//! Exact elements of the ring Z[2πi]: rational combinations of monomials
//! `(2πi)^m · ζ(k¹) ··· ζ(kʳ)` with admissible, nonempty indices `kʲ`.
//!
//! The ζ factors are treated as independent commuting symbols. No relation
//! between multiple zeta values is applied by the ring operations. The
//! explicit [`ZSymbol::shuffle_normalize`] and [`ZSymbol::stuffle_normalize`]
//! maps linearize products through one of the two product structures when
//! an identity is known to hold modulo exactly those relations.

use std::collections::{btree_map::Entry, BTreeMap};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::index::{stuffle, Index, IndexPoly};
use crate::rational::{self, Q};
use crate::word::{Word, WordPoly};

/// `(2πi)^twopii · ∏ ζ(factor)`, factors sorted by weight then
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ZetaMonomial {
    twopii: u32,
    factors: Vec<Index>,
}

impl ZetaMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn new(twopii: u32, mut factors: Vec<Index>) -> Result<Self> {
        for k in &factors {
            if k.is_empty() || !k.is_admissible() {
                return Err(Error::NotAdmissible(k.clone()));
            }
        }
        factors.sort();
        Ok(ZetaMonomial { twopii, factors })
    }

    pub fn twopii(&self) -> u32 {
        self.twopii
    }

    pub fn factors(&self) -> &[Index] {
        &self.factors
    }

    /// `m + Σ wt(k)`, counting 2πi with weight one.
    pub fn weight(&self) -> u32 {
        self.twopii + self.factors.iter().map(Index::weight).sum::<u32>()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        factors.sort();
        ZetaMonomial { twopii: self.twopii + other.twopii, factors }
    }
}

/// A canonical element of Z[2πi]; no zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct ZSymbol {
    terms: BTreeMap<ZetaMonomial, Q>,
}

impl ZSymbol {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::term(ZetaMonomial::one(), c)
    }

    pub fn term(m: ZetaMonomial, c: Q) -> Self {
        let mut s = Self::zero();
        s.add_term(m, c);
        s
    }

    /// The single symbol ζ(k) for a nonempty admissible index; the empty
    /// index gives 1.
    pub fn zeta(k: &Index) -> Result<Self> {
        if k.is_empty() {
            return Ok(Self::one());
        }
        Ok(Self::term(ZetaMonomial::new(0, vec![k.clone()])?, Q::one()))
    }

    /// `(2πi)^m`.
    pub fn twopii_pow(m: u32) -> Self {
        Self::term(ZetaMonomial { twopii: m, factors: vec![] }, Q::one())
    }

    /// `q·πi`, stored as `(q/2)·(2πi)`.
    pub fn pi_multiple(q: &Q) -> Self {
        Self::term(ZetaMonomial { twopii: 1, factors: vec![] }, q / rational::q(2))
    }

    pub fn add_term(&mut self, m: ZetaMonomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ZetaMonomial, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &ZetaMonomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in other.iter() {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ZSymbol { terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Complex conjugation: `(2πi)^m -> (-1)^m (2πi)^m`, ζ factors fixed.
    pub fn conj(&self) -> Self {
        ZSymbol {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), if m.twopii % 2 == 0 { c.clone() } else { -c.clone() }))
                .collect(),
        }
    }

    /// Multiplies by `(2πi)^m`.
    pub fn mul_twopii(&self, m: u32) -> Self {
        ZSymbol {
            terms: self
                .terms
                .iter()
                .map(|(mono, c)| {
                    (ZetaMonomial { twopii: mono.twopii + m, factors: mono.factors.clone() }, c.clone())
                })
                .collect(),
        }
    }

    /// Exact division by 2πi; fails if any monomial has no factor 2πi.
    pub fn div_twopii(&self) -> Result<Self> {
        let mut out = Self::zero();
        for (m, c) in self.iter() {
            if m.twopii == 0 {
                return Err(Error::NonExactDivision);
            }
            out.add_term(ZetaMonomial { twopii: m.twopii - 1, factors: m.factors.clone() }, c.clone());
        }
        Ok(out)
    }

    /// Part of the symbol free of 2πi.
    pub fn twopii_free_part(&self) -> Self {
        ZSymbol {
            terms: self.terms.iter().filter(|(m, _)| m.twopii == 0).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Weight of every monomial if they all agree.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut ws = self.terms.keys().map(ZetaMonomial::weight);
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    /// Distinct ζ factors appearing anywhere in the symbol.
    pub fn zeta_atoms(&self) -> Vec<Index> {
        let mut v: Vec<Index> = self.terms.keys().flat_map(|m| m.factors.iter().cloned()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Linearizes every product of ζ symbols through the shuffle product of
    /// their iterated-integral words. The result uses at most one ζ factor
    /// per monomial; two symbols agree modulo the shuffle relations exactly
    /// when their normalizations are equal.
    pub fn shuffle_normalize(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.iter() {
            if m.factors.len() <= 1 {
                out.add_term(m.clone(), c.clone());
                continue;
            }
            // ζ(k) = (-1)^d [e1 e0^{k1-1} ... e1 e0^{kd-1}]
            let mut prod = WordPoly::one();
            for k in &m.factors {
                let wk = WordPoly::term(Word::dch_of_index(k), rational::sign(k.depth() as u64));
                prod = prod.shuffle(&wk);
            }
            for (w, d) in prod.iter() {
                let k = w.dch_to_index();
                let mono = ZetaMonomial { twopii: m.twopii, factors: vec![k.clone()] };
                out.add_term(mono, c * d * rational::sign(k.depth() as u64));
            }
        }
        out
    }

    /// Linearizes every product of ζ symbols through the harmonic
    /// (quasi-shuffle) product of their indices.
    pub fn stuffle_normalize(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.iter() {
            if m.factors.len() <= 1 {
                out.add_term(m.clone(), c.clone());
                continue;
            }
            let mut prod = IndexPoly::from_index(Index::empty());
            for k in &m.factors {
                prod = stuffle(&prod, &IndexPoly::from_index(k.clone()));
            }
            for (k, d) in prod.iter() {
                let mono = ZetaMonomial { twopii: m.twopii, factors: vec![k.clone()] };
                out.add_term(mono, c * d);
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ZSymbolWire::from(self)).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let wire: ZSymbolWire = serde_json::from_value(v.clone())?;
        wire.try_into()
    }
}

impl fmt::Display for ZSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.iter().enumerate() {
            let mut body = Vec::new();
            if m.twopii == 1 {
                body.push("(2πi)".to_string());
            } else if m.twopii > 1 {
                body.push(format!("(2πi)^{}", m.twopii));
            }
            for k in &m.factors {
                body.push(format!("ζ({})", k));
            }
            let neg = c.is_negative();
            let a = c.abs();
            let sep = match (i, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            write!(f, "{}", sep)?;
            if body.is_empty() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", body.join("·"))?;
            } else {
                write!(f, "{}·{}", a, body.join("·"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MonomialWire {
    #[serde(with = "crate::rational::serde_q")]
    coeff: Q,
    twopii: u32,
    zetas: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct ZSymbolWire {
    terms: Vec<MonomialWire>,
}

impl From<&ZSymbol> for ZSymbolWire {
    fn from(s: &ZSymbol) -> Self {
        ZSymbolWire {
            terms: s
                .iter()
                .map(|(m, c)| MonomialWire {
                    coeff: c.clone(),
                    twopii: m.twopii,
                    zetas: m.factors.iter().map(|k| k.parts().to_vec()).collect(),
                })
                .collect(),
        }
    }
}

impl TryFrom<ZSymbolWire> for ZSymbol {
    type Error = Error;

    fn try_from(w: ZSymbolWire) -> Result<Self> {
        let mut s = ZSymbol::zero();
        for t in w.terms {
            let factors = t.zetas.into_iter().map(Index::new).collect::<Result<Vec<_>>>()?;
            s.add_term(ZetaMonomial::new(t.twopii, factors)?, t.coeff);
        }
        Ok(s)
    }
}

impl Serialize for ZSymbol {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ZSymbolWire::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ZSymbol {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        ZSymbol::try_from(ZSymbolWire::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}
