//! The free algebra Q<e0, e1>: words over {0, 1}, their rational
//! combinations, the shuffle and concatenation products, the maps `phi`
//! and `tau`, and conversion between h0 monomials and indices.

use std::collections::{btree_map::Entry, BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::index::Index;
use crate::rational::{self, Q};

pub const MAX_WORD_LEN: usize = 128;

/// A word in the letters 0 (e0) and 1 (e1), stored as a bit string.
///
/// The first letter is the most significant of the `len` used bits, so for
/// words of equal length numeric order of `bits` is lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    len: u8,
    bits: u128,
}

impl Word {
    pub const fn empty() -> Self {
        Word { len: 0, bits: 0 }
    }

    pub fn from_letters(letters: &[u8]) -> Self {
        assert!(letters.len() <= MAX_WORD_LEN, "word too long");
        let mut w = Word::empty();
        for &a in letters {
            w = w.push(a);
        }
        w
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// Weight in the grading of h: length minus one.
    pub fn weight(&self) -> i64 {
        self.len as i64 - 1
    }

    pub fn letter(&self, i: usize) -> u8 {
        debug_assert!(i < self.len());
        ((self.bits >> (self.len() - 1 - i)) & 1) as u8
    }

    pub fn letters(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len()).map(move |i| self.letter(i))
    }

    /// Appends one letter at the end.
    pub fn push(&self, a: u8) -> Word {
        assert!(self.len() < MAX_WORD_LEN, "word too long");
        Word { len: self.len + 1, bits: (self.bits << 1) | (a & 1) as u128 }
    }

    /// Prepends one letter at the front.
    pub fn prepend(&self, a: u8) -> Word {
        assert!(self.len() < MAX_WORD_LEN, "word too long");
        Word { len: self.len + 1, bits: self.bits | (((a & 1) as u128) << self.len) }
    }

    pub fn concat(&self, other: &Word) -> Word {
        assert!(self.len() + other.len() <= MAX_WORD_LEN, "word too long");
        if other.len == 0 {
            return *self;
        }
        Word { len: self.len + other.len, bits: (self.bits << other.len) | other.bits }
    }

    /// Letters `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        debug_assert!(start <= end && end <= self.len());
        let n = end - start;
        if n == 0 {
            return Word::empty();
        }
        let shifted = self.bits >> (self.len() - end);
        let mask = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        Word { len: n as u8, bits: shifted & mask }
    }

    pub fn prefix(&self, n: usize) -> Word {
        self.slice(0, n)
    }

    pub fn suffix(&self, start: usize) -> Word {
        self.slice(start, self.len())
    }

    pub fn reverse(&self) -> Word {
        let mut w = Word::empty();
        for i in (0..self.len()).rev() {
            w = w.push(self.letter(i));
        }
        w
    }

    /// Inserts letter `a` so that it becomes the letter at position `pos`.
    pub fn insert(&self, pos: usize, a: u8) -> Word {
        self.prefix(pos).push(a).concat(&self.suffix(pos))
    }

    pub fn count_ones(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn leading_zeros(&self) -> usize {
        self.letters().take_while(|&a| a == 0).count()
    }

    pub fn trailing_ones(&self) -> usize {
        (self.bits.trailing_ones() as usize).min(self.len())
    }

    pub fn is_all_ones(&self) -> bool {
        self.count_ones() == self.len()
    }

    pub fn in_h(&self) -> bool {
        self.len >= 1
    }

    /// Starts and ends with letter 1 (this includes the single letter `e1`).
    pub fn in_h0(&self) -> bool {
        self.len >= 1 && self.letter(0) == 1 && self.letter(self.len() - 1) == 1
    }

    /// First letter 1 and last letter 0: the convergent iterated integrals.
    pub fn is_admissible(&self) -> bool {
        self.len >= 2 && self.letter(0) == 1 && self.letter(self.len() - 1) == 0
    }

    /// The unsigned h0 monomial `e1 e0^{k1-1} e1 ... e0^{kd-1} e1`.
    pub fn h0_of_index(k: &Index) -> Word {
        let mut w = Word::empty().push(1);
        for &p in k.parts() {
            for _ in 1..p {
                w = w.push(0);
            }
            w = w.push(1);
        }
        w
    }

    /// The word `e1 e0^{k1-1} ... e1 e0^{kd-1}` (no closing `e1`).
    pub fn dch_of_index(k: &Index) -> Word {
        let mut w = Word::empty();
        for &p in k.parts() {
            w = w.push(1);
            for _ in 1..p {
                w = w.push(0);
            }
        }
        w
    }

    /// Inverse of `h0_of_index`, returning the index and the sign `(-1)^d`
    /// of the signed basis element `w(k)` this monomial belongs to.
    pub fn to_index(&self) -> Result<(Index, i64)> {
        if !self.in_h0() {
            return Err(Error::NotInH0(self.to_string()));
        }
        let mut parts = Vec::new();
        let mut cur = 1u32;
        for a in self.letters().skip(1) {
            if a == 0 {
                cur += 1;
            } else {
                parts.push(cur);
                cur = 1;
            }
        }
        let sign = if parts.len() % 2 == 0 { 1 } else { -1 };
        Ok((Index::from_parts(&parts), sign))
    }

    /// Reads the index off a word `e1 e0^{k1-1} ... e1 e0^{kd-1}`.
    /// The word must be empty or start with 1.
    pub fn dch_to_index(&self) -> Index {
        assert!(self.is_empty() || self.letter(0) == 1, "word must start with e1");
        let mut parts: Vec<u32> = Vec::new();
        for a in self.letters() {
            if a == 1 {
                parts.push(1);
            } else {
                *parts.last_mut().unwrap() += 1;
            }
        }
        Index::from_parts(&parts)
    }

    /// All words of the given length in lexicographic order.
    pub fn all_of_len(len: usize) -> impl Iterator<Item = Word> {
        assert!(len < 64, "enumeration limited to short words");
        (0..(1u128 << len)).map(move |b| Word { len: len as u8, bits: b })
    }

    /// Monomial basis of h0 of weight `k` (length `k + 1`).
    pub fn h0_basis(k: usize) -> Vec<Word> {
        if k == 0 {
            return vec![Word::from_letters(&[1])];
        }
        (0..(1u128 << (k - 1)))
            .map(|mid| Word { len: (k + 1) as u8, bits: (1u128 << k) | (mid << 1) | 1 })
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in self.letters() {
            write!(f, "{}", a)?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.len() > MAX_WORD_LEN {
            return Err(Error::InvalidWord(s.to_string()));
        }
        let mut w = Word::empty();
        for ch in t.chars() {
            w = match ch {
                '0' => w.push(0),
                '1' => w.push(1),
                _ => return Err(Error::InvalidWord(s.to_string())),
            };
        }
        Ok(w)
    }
}

/// Multiset of all interleavings of `u` and `v`, with multiplicities.
pub fn shuffle_words(u: Word, v: Word) -> Vec<(Word, u128)> {
    let (n, m) = (u.len(), v.len());
    assert!(n + m <= MAX_WORD_LEN, "word too long");
    // row[j] holds shuffle(u[i..], v[j..]) for the current i.
    let mut next: Vec<HashMap<Word, u128>> = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let mut h = HashMap::new();
        h.insert(v.suffix(j), 1u128);
        next.push(h);
    }
    for i in (0..n).rev() {
        let a = u.letter(i);
        let mut cur: Vec<HashMap<Word, u128>> = vec![HashMap::new(); m + 1];
        let mut h = HashMap::new();
        h.insert(u.suffix(i), 1u128);
        cur[m] = h;
        for j in (0..m).rev() {
            let b = v.letter(j);
            let mut h: HashMap<Word, u128> = HashMap::new();
            for (w, c) in &next[j] {
                *h.entry(w.prepend(a)).or_insert(0) += c;
            }
            for (w, c) in &cur[j + 1] {
                *h.entry(w.prepend(b)).or_insert(0) += c;
            }
            cur[j] = h;
        }
        next = cur;
    }
    let mut out: Vec<(Word, u128)> = next.swap_remove(0).into_iter().collect();
    out.sort();
    out
}

/// A finite rational combination of words.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct WordPoly {
    terms: BTreeMap<Word, Q>,
}

impl WordPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit: the empty word.
    pub fn one() -> Self {
        Self::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        Self::term(w, Q::one())
    }

    pub fn term(w: Word, c: Q) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    /// The signed basis element `w(k) = (-1)^d e1 e0^{k1-1} ... e1`.
    pub fn from_index(k: &Index) -> Self {
        Self::term(Word::h0_of_index(k), rational::sign(k.depth() as u64))
    }

    pub fn add_term(&mut self, w: Word, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Q)> {
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

    pub fn coeff(&self, w: &Word) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn in_h(&self) -> bool {
        self.terms.keys().all(Word::in_h)
    }

    pub fn in_h0(&self) -> bool {
        self.terms.keys().all(Word::in_h0)
    }

    /// Common length of all monomials, if homogeneous and nonzero.
    pub fn homogeneous_len(&self) -> Option<usize> {
        let mut lens = self.terms.keys().map(Word::len);
        let first = lens.next()?;
        lens.all(|l| l == first).then_some(first)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.add_term(*w, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.add_term(*w, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero();
        if c.is_zero() {
            return out;
        }
        for (w, d) in self.iter() {
            out.terms.insert(*w, d * c);
        }
        out
    }

    /// Bilinear concatenation product.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in self.iter() {
            for (v, b) in other.iter() {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// Bilinear shuffle product.
    pub fn shuffle(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in self.iter() {
            for (v, b) in other.iter() {
                let ab = a * b;
                for (w, n) in shuffle_words(*u, *v) {
                    out.add_term(w, &ab * Q::from_integer(BigInt::from(n)));
                }
            }
        }
        out
    }

    /// The automorphism with `e0 -> e0 - e1`, `e1 -> -e1`.
    pub fn phi(&self) -> Self {
        let mut out = Self::zero();
        for (w, c) in self.iter() {
            // expand letter by letter; each e0 branches into e0 and -e1
            let mut partial: Vec<(Word, i64)> = vec![(Word::empty(), 1)];
            for a in w.letters() {
                let mut next = Vec::with_capacity(partial.len() * 2);
                for (p, s) in partial {
                    if a == 0 {
                        next.push((p.push(0), s));
                        next.push((p.push(1), -s));
                    } else {
                        next.push((p.push(1), -s));
                    }
                }
                partial = next;
            }
            for (p, s) in partial {
                out.add_term(p, c * rational::q(s));
            }
        }
        out
    }

    /// The anti-automorphism with `e_a -> -e_a`: reverses each word and
    /// multiplies by `(-1)^length`. Same map as `epsilon`.
    pub fn tau(&self) -> Self {
        let mut out = Self::zero();
        for (w, c) in self.iter() {
            out.add_term(w.reverse(), c * rational::sign(w.len() as u64));
        }
        out
    }

    pub fn epsilon(&self) -> Self {
        self.tau()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(WordPolyWire::from(self)).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let wire: WordPolyWire = serde_json::from_value(v.clone())?;
        wire.try_into()
    }
}

impl From<Word> for WordPoly {
    fn from(w: Word) -> Self {
        WordPoly::from_word(w)
    }
}

impl fmt::Display for WordPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(w, c)| {
                let w = if w.is_empty() { "1".to_string() } else { format!("[{}]", w) };
                format!("{}*{}", c, w)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct WordTermWire {
    word: String,
    #[serde(with = "crate::rational::serde_q")]
    coeff: Q,
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct WordPolyWire(Vec<WordTermWire>);

impl From<&WordPoly> for WordPolyWire {
    fn from(p: &WordPoly) -> Self {
        WordPolyWire(
            p.iter()
                .map(|(w, c)| WordTermWire { word: w.to_string(), coeff: c.clone() })
                .collect(),
        )
    }
}

impl TryFrom<WordPolyWire> for WordPoly {
    type Error = Error;

    fn try_from(wire: WordPolyWire) -> Result<Self> {
        let mut p = WordPoly::zero();
        for t in wire.0 {
            p.add_term(t.word.parse()?, t.coeff);
        }
        Ok(p)
    }
}

impl Serialize for WordPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WordPolyWire::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for WordPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = WordPolyWire::deserialize(d)?;
        WordPoly::try_from(wire).map_err(serde::de::Error::custom)
    }
}

/// Pairs `(p_i, q_i)` in h x h with
/// `sum_i p_i ⧢ q_i = (u ⧢ v) e_a - u e_a epsilon(v)`.
///
/// For `v = e_{b_1} ... e_{b_n}` the pairs are
/// `p_i = (u ⧢ e_{b_{i+1}} ... e_{b_n}) e_a` and
/// `q_i = -epsilon(e_{b_1} ... e_{b_i})` for `i = 1..n`.
pub fn hh_witness(u: Word, v: Word, a: u8) -> Vec<(WordPoly, WordPoly)> {
    let ea = WordPoly::from_word(Word::empty().push(a));
    let up = WordPoly::from_word(u);
    (1..=v.len())
        .map(|i| {
            let tail = WordPoly::from_word(v.suffix(i));
            let p = up.shuffle(&tail).concat(&ea);
            let q = WordPoly::from_word(v.prefix(i)).epsilon().neg();
            (p, q)
        })
        .collect()
}
