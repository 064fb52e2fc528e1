use std::collections::BTreeMap;

use proptest::prelude::*;
use rsmzv::index::{coproduct, harmonic_word, stuffle, stuffle_indices, Index, IndexPoly};
use rsmzv::rational::q;
use rsmzv::{Error, Word, WordPoly};

fn idx(s: &str) -> Index {
    s.parse().unwrap()
}

fn ip(terms: &[(&str, i64)]) -> IndexPoly {
    let mut p = IndexPoly::zero();
    for (k, c) in terms {
        p.add_term(idx(k), q(*c));
    }
    p
}

// The word-level recursion, written independently of the index transport:
// with u = e1 e0^{a-1} u' and v = e1 e0^{b-1} v' (u', v' in h0),
//   u * v = e1 e0^{a-1}(u' * v) + e1 e0^{b-1}(u * v') - e1 e0^{a+b-1}(u' * v'),
// and e1 is the unit. The signs differ from the recursion on the signed
// basis w(k) because each leading block of w(k) carries a factor -1.
fn oracle_harmonic(u: &str, v: &str) -> BTreeMap<String, i64> {
    let mut out = BTreeMap::new();
    if u == "1" || v == "1" {
        out.insert(if u == "1" { v.to_string() } else { u.to_string() }, 1);
        return out;
    }
    let split = |s: &str| {
        let n = 1 + s[1..].find('1').unwrap();
        (n, s[n..].to_string())
    };
    let ((a, ur), (b, vr)) = (split(u), split(v));
    let block = |len: usize| format!("1{}", "0".repeat(len - 1));
    let mut add = |prefix: String, part: BTreeMap<String, i64>, sign: i64| {
        for (s, c) in part {
            *out.entry(format!("{prefix}{s}")).or_insert(0) += sign * c;
        }
    };
    add(block(a), oracle_harmonic(&ur, v), 1);
    add(block(b), oracle_harmonic(u, &vr), 1);
    add(block(a + b), oracle_harmonic(&ur, &vr), -1);
    out.retain(|_, c| *c != 0);
    out
}

fn to_poly(m: &BTreeMap<String, i64>) -> WordPoly {
    let mut p = WordPoly::zero();
    for (s, &c) in m {
        p.add_term(s.parse().unwrap(), q(c));
    }
    p
}

#[test]
fn stuffle_examples() {
    assert_eq!(stuffle_indices(&Index::empty(), &idx("2,1")), ip(&[("2,1", 1)]));
    assert_eq!(stuffle_indices(&idx("1"), &idx("1")), ip(&[("1,1", 2), ("2", 1)]));
    assert_eq!(stuffle_indices(&idx("2"), &idx("3")), ip(&[("2,3", 1), ("3,2", 1), ("5", 1)]));
}

#[test]
fn harmonic_word_examples() {
    let e1 = WordPoly::from_word("1".parse().unwrap());
    let u = WordPoly::from_index(&idx("2,1,3"));
    assert_eq!(harmonic_word(&e1, &u).unwrap(), u);
    assert_eq!(harmonic_word(&u, &e1).unwrap(), u);
    let w = |s: &str| WordPoly::from_index(&idx(s));
    assert_eq!(harmonic_word(&w("1"), &w("1")).unwrap(), w("1,1").scale(&q(2)).add(&w("2")));
    assert_eq!(harmonic_word(&w("2"), &w("3")).unwrap(), w("2,3").add(&w("3,2")).add(&w("5")));
    let bad = WordPoly::from_word("10".parse().unwrap());
    assert!(matches!(harmonic_word(&bad, &e1), Err(Error::NotInH0(_))));
}

#[test]
fn harmonic_word_matches_signed_recursion() {
    for a in 0..=4 {
        for b in 0..=(5 - a) {
            for u in Word::h0_basis(a) {
                for v in Word::h0_basis(b) {
                    let got = harmonic_word(&WordPoly::from_word(u), &WordPoly::from_word(v)).unwrap();
                    let expect = to_poly(&oracle_harmonic(&u.to_string(), &v.to_string()));
                    assert_eq!(got, expect, "{u} * {v}");
                }
            }
        }
    }
}

#[test]
fn transport_through_signed_basis() {
    for a in 0..=5u32 {
        for b in 0..=(5 - a) {
            for k in Index::compositions(a) {
                for l in Index::compositions(b) {
                    let lhs = rsmzv::index::from_index_poly(&stuffle_indices(&k, &l));
                    let rhs = harmonic_word(&WordPoly::from_index(&k), &WordPoly::from_index(&l)).unwrap();
                    assert_eq!(lhs, rhs, "{k} * {l}");
                }
            }
        }
    }
}

#[test]
fn coproduct_examples() {
    assert_eq!(coproduct(&Index::empty()), vec![(Index::empty(), Index::empty())]);
    assert_eq!(coproduct(&idx("3")), vec![(Index::empty(), idx("3")), (idx("3"), Index::empty())]);
    assert_eq!(coproduct(&idx("1,2")), vec![(Index::empty(), idx("1,2")), (idx("1"), idx("2")), (idx("1,2"), Index::empty())]);
}

type Tensor = BTreeMap<(Index, Index), rsmzv::Q>;

fn add_tensor(t: &mut Tensor, a: Index, b: Index, c: rsmzv::Q) {
    let e = t.entry((a, b)).or_insert_with(|| q(0));
    *e += c;
}

fn delta(p: &IndexPoly) -> Tensor {
    let mut t = Tensor::new();
    for (k, c) in p.iter() {
        for (a, b) in coproduct(k) {
            add_tensor(&mut t, a, b, c.clone());
        }
    }
    t.retain(|_, c| *c != q(0));
    t
}

fn tensor_stuffle(x: &Tensor, y: &Tensor) -> Tensor {
    let mut t = Tensor::new();
    for ((a1, b1), c1) in x {
        for ((a2, b2), c2) in y {
            let left = stuffle_indices(a1, a2);
            let right = stuffle_indices(b1, b2);
            for (l, cl) in left.iter() {
                for (r, cr) in right.iter() {
                    add_tensor(&mut t, l.clone(), r.clone(), c1 * c2 * cl * cr);
                }
            }
        }
    }
    t.retain(|_, c| *c != q(0));
    t
}

#[test]
fn coproduct_is_compatible_with_stuffle() {
    for a in 0..=5u32 {
        for b in 0..=(5 - a) {
            for k in Index::compositions(a) {
                for l in Index::compositions(b) {
                    let lhs = delta(&stuffle_indices(&k, &l));
                    let rhs = tensor_stuffle(&delta(&IndexPoly::from_index(k.clone())), &delta(&IndexPoly::from_index(l.clone())));
                    assert_eq!(lhs, rhs, "{k} * {l}");
                }
            }
        }
    }
}

fn index_strategy() -> impl Strategy<Value = Index> {
    prop::collection::vec(1u32..=3, 0..=3).prop_map(|v| Index::new(v).unwrap())
}

fn ipoly_strategy() -> impl Strategy<Value = IndexPoly> {
    prop::collection::vec((index_strategy(), -2i64..=2), 0..3).prop_map(|terms| {
        let mut p = IndexPoly::zero();
        for (k, c) in terms {
            p.add_term(k, q(c));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn stuffle_is_commutative(a in ipoly_strategy(), b in ipoly_strategy()) {
        prop_assert_eq!(stuffle(&a, &b), stuffle(&b, &a));
    }

    #[test]
    fn stuffle_is_associative(a in ipoly_strategy(), b in ipoly_strategy(), c in ipoly_strategy()) {
        prop_assert_eq!(stuffle(&stuffle(&a, &b), &c), stuffle(&a, &stuffle(&b, &c)));
    }

    #[test]
    fn stuffle_grading(k in index_strategy(), l in index_strategy()) {
        for (m, _) in stuffle_indices(&k, &l).iter() {
            prop_assert_eq!(m.weight(), k.weight() + l.weight());
            prop_assert!(m.depth() <= k.depth() + l.depth());
            prop_assert!(m.depth() >= k.depth().max(l.depth()));
        }
    }
}
