use rsmzv::index::{stuffle_indices, Index};
use rsmzv::numerics::{verify_identity, Evaluator, Expr};
use rsmzv::rational::{q, q_frac, sign};
use rsmzv::regularization::{gamma1_coeffs, reg_dch, reg_dch_inv, zeta_sh_poly, zeta_star_poly, zeta_star_via_gamma};
use rsmzv::tpoly::TPoly;
use rsmzv::{Word, WordPoly, ZSymbol};

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn idx(s: &str) -> Index {
    s.parse().unwrap()
}

fn z(s: &str) -> ZSymbol {
    ZSymbol::zeta(&idx(s)).unwrap()
}

fn t_points() -> Vec<Vec<ZSymbol>> {
    vec![
        vec![ZSymbol::zero()],
        vec![ZSymbol::constant(q_frac(3, 7))],
        vec![ZSymbol::pi_multiple(&q_frac(1, 3)).add(&ZSymbol::constant(q(-1)))],
    ]
}

fn words_up_to(n: usize) -> impl Iterator<Item = Word> {
    (0..=n).flat_map(Word::all_of_len)
}

// The regularized integral is determined by three facts: it is a shuffle
// homomorphism, it kills e0 and e1, and it sends the admissible word of k
// to (-1)^depth ζ(k). Each is checked on its own.
#[test]
fn reg_kills_single_letters_and_matches_admissible_words() {
    assert!(reg_dch(&w("0")).is_zero());
    assert!(reg_dch(&w("1")).is_zero());
    assert_eq!(reg_dch(&Word::empty()), ZSymbol::one());
    for wt in 2..=6 {
        for k in Index::compositions(wt).into_iter().filter(Index::is_admissible) {
            let word = Word::dch_of_index(&k);
            assert_eq!(reg_dch(&word), ZSymbol::zeta(&k).unwrap().scale(&sign(k.depth() as u64)), "{k}");
        }
    }
}

#[test]
fn reg_is_a_shuffle_homomorphism() {
    let ev = Evaluator::new(40);
    for total in 2..=7 {
        for lu in 1..total {
            for u in Word::all_of_len(lu) {
                for v in Word::all_of_len(total - lu) {
                    if u > v {
                        continue;
                    }
                    let prod = WordPoly::from_word(u).shuffle(&WordPoly::from_word(v));
                    let mut lhs = ZSymbol::zero();
                    for (x, c) in prod.iter() {
                        lhs.add_assign(&reg_dch(x).scale(c));
                    }
                    let rhs = reg_dch(&u).mul(&reg_dch(&v));
                    assert_eq!(lhs, rhs.shuffle_normalize(), "{u} sh {v}");
                    if total <= 5 {
                        let r = verify_identity(&ev, &lhs.into(), &rhs.into(), &[], 10).unwrap();
                        assert!(r.pass, "{u} sh {v}: residual {}", r.residual);
                    }
                }
            }
        }
    }
}

#[test]
fn path_followed_by_its_inverse_is_trivial() {
    for word in words_up_to(7).filter(|x| !x.is_empty()) {
        let mut acc = ZSymbol::zero();
        for i in 0..=word.len() {
            acc.add_assign(&reg_dch(&word.prefix(i)).mul(&reg_dch_inv(&word.suffix(i))));
        }
        assert!(acc.shuffle_normalize().is_zero(), "{word}");
    }
}

#[test]
fn reversed_path_examples() {
    assert_eq!(reg_dch_inv(&w("01")), z("2").neg());
    assert_eq!(reg_dch_inv(&w("10")), z("2"));
    assert_eq!(reg_dch_inv(&w("001")), z("3"));
}

fn t_pow(j: u32, c: ZSymbol) -> TPoly {
    TPoly::monomial(&["T"], vec![j], c)
}

#[test]
fn regularized_polynomial_examples() {
    let half = ZSymbol::constant(q_frac(1, 2));
    assert_eq!(zeta_sh_poly(&idx("1,1")), t_pow(2, half.clone()));
    let star11 = t_pow(2, half).add(&t_pow(0, z("2").scale(&q_frac(-1, 2)))).unwrap();
    assert_eq!(zeta_star_poly(&idx("1,1")), star11);
    // (2)*(1) = (2,1) + (1,2) + (3)
    let star21 = t_pow(1, z("2")).sub(&t_pow(0, z("1,2").add(&z("3")))).unwrap();
    assert_eq!(zeta_star_poly(&idx("2,1")), star21);
    assert_eq!(zeta_sh_poly(&Index::empty()), t_pow(0, ZSymbol::one()));
    assert_eq!(zeta_star_poly(&Index::empty()), t_pow(0, ZSymbol::one()));
}

fn poly_of(p: &TPoly, f: impl Fn(&ZSymbol) -> ZSymbol) -> TPoly {
    p.map_coeffs(f)
}

#[test]
fn shuffle_regularized_polynomials_multiply_by_shuffle() {
    let ev = Evaluator::new(40);
    for a in 1..=3u32 {
        for b in 1..=(5 - a) {
            for k in Index::compositions(a) {
                for l in Index::compositions(b) {
                    let (wk, wl) = (Word::dch_of_index(&k), Word::dch_of_index(&l));
                    let mut lhs = TPoly::zero_t();
                    for (x, c) in WordPoly::from_word(wk).shuffle(&WordPoly::from_word(wl)).iter() {
                        let m = x.dch_to_index();
                        let s = sign(m.depth() as u64) * c;
                        lhs = lhs.add(&zeta_sh_poly(&m).scale(&s)).unwrap();
                    }
                    let s = sign((k.depth() + l.depth()) as u64);
                    let rhs = zeta_sh_poly(&k).mul(&zeta_sh_poly(&l)).unwrap().scale(&s);
                    assert_eq!(lhs, poly_of(&rhs, ZSymbol::shuffle_normalize), "{k} sh {l}");
                    let r = verify_identity(&ev, &Expr::Poly(lhs), &Expr::Poly(rhs), &t_points(), 10).unwrap();
                    assert!(r.pass, "{k} sh {l}: residual {}", r.residual);
                }
            }
        }
    }
}

#[test]
fn harmonic_regularized_polynomials_multiply_by_stuffle() {
    let ev = Evaluator::new(40);
    for a in 1..=3u32 {
        for b in 1..=(5 - a) {
            for k in Index::compositions(a) {
                for l in Index::compositions(b) {
                    let mut lhs = TPoly::zero_t();
                    for (m, c) in stuffle_indices(&k, &l).iter() {
                        lhs = lhs.add(&zeta_star_poly(m).scale(c)).unwrap();
                    }
                    let rhs = zeta_star_poly(&k).mul(&zeta_star_poly(&l)).unwrap();
                    assert_eq!(lhs, poly_of(&rhs, ZSymbol::stuffle_normalize), "{k} * {l}");
                    let r = verify_identity(&ev, &Expr::Poly(lhs), &Expr::Poly(rhs), &t_points(), 10).unwrap();
                    assert!(r.pass, "{k} * {l}: residual {}", r.residual);
                }
            }
        }
    }
}

#[test]
fn gamma_comparison_agrees_numerically() {
    let ev = Evaluator::new(50);
    for wt in 1..=6 {
        for k in Index::compositions(wt) {
            let lhs = zeta_star_poly(&k);
            let rhs = zeta_star_via_gamma(&k);
            let r = verify_identity(&ev, &lhs.into(), &rhs.into(), &t_points(), 12).unwrap();
            assert!(r.pass, "{k}: residual {}", r.residual);
        }
    }
}

#[test]
fn gamma1_against_the_reflection_formula() {
    // Γ1(t)Γ1(-t) = πt / sin(πt) = 1 + ζ(2) t² + (7/4)ζ(4) t⁴ + …
    let g = gamma1_coeffs(4);
    let even = |n: usize| -> ZSymbol {
        let mut acc = ZSymbol::zero();
        for i in 0..=n {
            let s = sign((n - i) as u64);
            acc.add_assign(&g[i].mul(&g[n - i]).scale(&s));
        }
        acc
    };
    let ev = Evaluator::new(40);
    let cases = [(2, z("2")), (4, z("4").scale(&q_frac(7, 4)))];
    for (n, expect) in cases {
        let r = verify_identity(&ev, &even(n).into(), &expect.into(), &[], 10).unwrap();
        assert!(r.pass, "t^{n}: residual {}", r.residual);
    }
    assert!(even(3).is_zero());
}
