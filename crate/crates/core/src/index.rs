//! Indices (compositions of positive integers), the harmonic product on
//! indices and on h0, and the deconcatenation coproduct.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Q};
use crate::word::WordPoly;

/// A finite sequence of positive integers `(k_1, ..., k_d)`.
///
/// The associated series puts exponent `k_d` on the largest summation
/// variable, so `(k_1, ..., k_d)` is admissible when it is empty or
/// `k_d >= 2`.
///
/// Ordered by weight first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Index(Vec<u32>);

impl Index {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidIndex(
                parts.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(","),
            ));
        }
        Ok(Index(parts))
    }

    /// Builds an index without checking positivity; panics on a zero part.
    pub fn from_parts(parts: &[u32]) -> Self {
        assert!(parts.iter().all(|&k| k >= 1), "index parts must be >= 1");
        Index(parts.to_vec())
    }

    pub fn empty() -> Self {
        Index(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_admissible(&self) -> bool {
        self.0.last().is_none_or(|&k| k >= 2)
    }

    pub fn reversed(&self) -> Index {
        Index(self.0.iter().rev().copied().collect())
    }

    pub fn prefix(&self, len: usize) -> Index {
        Index(self.0[..len].to_vec())
    }

    pub fn suffix(&self, start: usize) -> Index {
        Index(self.0[start..].to_vec())
    }

    /// Number of trailing parts equal to 1.
    pub fn trailing_ones(&self) -> usize {
        self.0.iter().rev().take_while(|&&k| k == 1).count()
    }

    /// All indices of the given weight (compositions of `weight`), in
    /// lexicographic order. Weight 0 yields only the empty index.
    pub fn compositions(weight: u32) -> Vec<Index> {
        fn go(rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Index>) {
            if rest == 0 {
                out.push(Index(cur.clone()));
                return;
            }
            for k in 1..=rest {
                cur.push(k);
                go(rest - k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(weight, &mut Vec::new(), &mut out);
        out
    }

    /// All admissible indices of the given weight.
    pub fn admissible(weight: u32) -> Vec<Index> {
        Self::compositions(weight)
            .into_iter()
            .filter(|k| k.is_admissible())
            .collect()
    }
}

impl Ord for Index {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Index {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Index {
    type Err = Error;

    /// Parses `"3,2"`; the empty (or all-blank) string is the empty index.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Index::empty());
        }
        let parts = t
            .split(',')
            .map(|p| match p.trim().parse::<u32>() {
                Ok(k) if k >= 1 => Ok(k),
                _ => Err(Error::InvalidIndex(s.to_string())),
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(Index(parts))
    }
}

/// A finite rational combination of indices.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IndexPoly {
    terms: BTreeMap<Index, Q>,
}

impl IndexPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_index(k: Index) -> Self {
        Self::term(k, Q::one())
    }

    pub fn term(k: Index, c: Q) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c);
        p
    }

    pub fn add_term(&mut self, k: Index, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Index, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &Index) -> Q {
        self.terms.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero();
        for (k, d) in self.iter() {
            out.add_term(k.clone(), d * c);
        }
        out
    }
}

/// Integer-coefficient quasi-shuffle of two indices. `merge_sign` multiplies
/// every merged term `(k_1 + l_1, ...)`; the index-level product uses `+1`.
pub(crate) fn stuffle_parts(k: &[u32], l: &[u32], merge_sign: i64, out: &mut BTreeMap<Vec<u32>, i64>) {
    fn go(
        k: &[u32],
        l: &[u32],
        sign: i64,
        merge_sign: i64,
        prefix: &mut Vec<u32>,
        out: &mut BTreeMap<Vec<u32>, i64>,
    ) {
        if k.is_empty() || l.is_empty() {
            let mut w = prefix.clone();
            w.extend_from_slice(k);
            w.extend_from_slice(l);
            *out.entry(w).or_insert(0) += sign;
            return;
        }
        prefix.push(k[0]);
        go(&k[1..], l, sign, merge_sign, prefix, out);
        prefix.pop();
        prefix.push(l[0]);
        go(k, &l[1..], sign, merge_sign, prefix, out);
        prefix.pop();
        prefix.push(k[0] + l[0]);
        go(&k[1..], &l[1..], sign * merge_sign, merge_sign, prefix, out);
        prefix.pop();
    }
    go(k, l, 1, merge_sign, &mut Vec::new(), out);
}

/// Bilinear quasi-shuffle (harmonic) product of index combinations.
pub fn stuffle(k: &IndexPoly, l: &IndexPoly) -> IndexPoly {
    let mut out = IndexPoly::zero();
    for (a, ca) in k.iter() {
        for (b, cb) in l.iter() {
            let mut raw = BTreeMap::new();
            stuffle_parts(a.parts(), b.parts(), 1, &mut raw);
            let c = ca * cb;
            for (parts, n) in raw {
                out.add_term(Index(parts), &c * rational::q(n));
            }
        }
    }
    out
}

pub fn stuffle_indices(k: &Index, l: &Index) -> IndexPoly {
    stuffle(&IndexPoly::from_index(k.clone()), &IndexPoly::from_index(l.clone()))
}

/// Harmonic product on h0, computed by transporting both factors to the
/// index basis, taking the quasi-shuffle there and mapping back through
/// the signed basis `w(k)`.
pub fn harmonic_word(u: &WordPoly, v: &WordPoly) -> Result<WordPoly> {
    let ui = to_index_poly(u)?;
    let vi = to_index_poly(v)?;
    Ok(from_index_poly(&stuffle(&ui, &vi)))
}

/// Coordinates of an h0 element in the signed basis `w(k)`.
pub fn to_index_poly(u: &WordPoly) -> Result<IndexPoly> {
    let mut out = IndexPoly::zero();
    for (w, c) in u.iter() {
        let (k, sign) = w.to_index()?;
        out.add_term(k, c * rational::q(sign));
    }
    Ok(out)
}

/// `sum c_k w(k)`.
pub fn from_index_poly(p: &IndexPoly) -> WordPoly {
    let mut out = WordPoly::zero();
    for (k, c) in p.iter() {
        out = out.add(&WordPoly::from_index(k).scale(c));
    }
    out
}

/// Deconcatenation coproduct: all `d + 1` splits `(k_1..k_i, k_{i+1}..k_d)`.
pub fn coproduct(k: &Index) -> Vec<(Index, Index)> {
    (0..=k.depth()).map(|i| (k.prefix(i), k.suffix(i))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn idx(s: &str) -> Index {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(idx(""), Index::empty());
        assert_eq!(idx("3,2").parts(), &[3, 2]);
        assert_eq!(idx("3,2").to_string(), "3,2");
        assert!("0".parse::<Index>().is_err());
        assert!("2,,1".parse::<Index>().is_err());
        assert!("a".parse::<Index>().is_err());
    }

    #[test]
    fn admissibility() {
        assert!(idx("").is_admissible());
        assert!(idx("1,2").is_admissible());
        assert!(!idx("2,1").is_admissible());
        assert_eq!(idx("2,1,1").trailing_ones(), 2);
    }

    #[test]
    fn ordering_is_weight_first() {
        assert!(idx("5") < idx("1,1,1,1,1,1"));
        assert!(idx("1,2") < idx("2,1"));
    }

    #[test]
    fn compositions_count() {
        for w in 1..8u32 {
            assert_eq!(Index::compositions(w).len(), 1 << (w - 1));
        }
        assert_eq!(Index::compositions(0), vec![Index::empty()]);
    }

    #[test]
    fn stuffle_examples() {
        let e = IndexPoly::from_index(Index::empty());
        let k = IndexPoly::from_index(idx("3,1"));
        assert_eq!(stuffle(&e, &k), k);

        let one = IndexPoly::from_index(idx("1"));
        let mut expect = IndexPoly::zero();
        expect.add_term(idx("1,1"), q(2));
        expect.add_term(idx("2"), q(1));
        assert_eq!(stuffle(&one, &one), expect);

        let p = stuffle_indices(&idx("4"), &idx("7"));
        let mut expect = IndexPoly::zero();
        expect.add_term(idx("4,7"), q(1));
        expect.add_term(idx("7,4"), q(1));
        expect.add_term(idx("11"), q(1));
        assert_eq!(p, expect);
    }

    #[test]
    fn harmonic_word_examples() {
        let e1: WordPoly = WordPoly::from_word("1".parse().unwrap());
        let u = WordPoly::from_index(&idx("2,1"));
        assert_eq!(harmonic_word(&e1, &u).unwrap(), u);
        assert_eq!(harmonic_word(&u, &e1).unwrap(), u);

        let w1 = WordPoly::from_index(&idx("1"));
        let expect = WordPoly::from_index(&idx("1,1"))
            .scale(&q(2))
            .add(&WordPoly::from_index(&idx("2")));
        assert_eq!(harmonic_word(&w1, &w1).unwrap(), expect);

        let got = harmonic_word(&WordPoly::from_index(&idx("2")), &WordPoly::from_index(&idx("3"))).unwrap();
        let expect = WordPoly::from_index(&idx("2,3"))
            .add(&WordPoly::from_index(&idx("3,2")))
            .add(&WordPoly::from_index(&idx("5")));
        assert_eq!(got, expect);
    }

    #[test]
    fn harmonic_word_rejects_non_h0() {
        let bad = WordPoly::from_word("10".parse().unwrap());
        let e1 = WordPoly::from_word("1".parse().unwrap());
        assert!(matches!(harmonic_word(&bad, &e1), Err(Error::NotInH0(_))));
    }

    #[test]
    fn coproduct_examples() {
        assert_eq!(coproduct(&Index::empty()), vec![(Index::empty(), Index::empty())]);
        assert_eq!(
            coproduct(&idx("3")),
            vec![(Index::empty(), idx("3")), (idx("3"), Index::empty())]
        );
        assert_eq!(
            coproduct(&idx("1,2")),
            vec![
                (Index::empty(), idx("1,2")),
                (idx("1"), idx("2")),
                (idx("1,2"), Index::empty())
            ]
        );
    }
}
