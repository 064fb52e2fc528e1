use rsmzv::index::Index;
use rsmzv::numerics::{verify_identity, Evaluator};
use rsmzv::rational::{inv_factorial, q, q_frac, sign};
use rsmzv::regularization::zeta_sh_poly;
use rsmzv::rsmzv::{l_n, l_poly, l_poly_linear, l_tilde, z_rs, zeta_rs, zeta_rs_explicit, zeta_rs_integral, zeta_rs_lpoly, Route};
use rsmzv::tpoly::TPoly;
use rsmzv::{Error, Word, WordPoly, ZSymbol};

fn idx(s: &str) -> Index {
    s.parse().unwrap()
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn z(s: &str) -> ZSymbol {
    ZSymbol::zeta(&idx(s)).unwrap()
}

fn t_pow(j: u32, c: ZSymbol) -> TPoly {
    TPoly::monomial(&["T"], vec![j], c)
}

fn assert_close(ev: &Evaluator, lhs: ZSymbol, rhs: ZSymbol, what: &str) {
    let r = verify_identity(ev, &lhs.into(), &rhs.into(), &[], 15).unwrap();
    assert!(r.pass, "{what}: residual {}", r.residual);
}

#[test]
fn spot_values() {
    let two_pi_i = ZSymbol::twopii_pow(1);
    assert_eq!(zeta_rs_explicit(&Index::empty()), ZSymbol::one());
    assert_eq!(zeta_rs_explicit(&idx("1")), two_pi_i.scale(&q_frac(-1, 2)));
    assert_eq!(zeta_rs_explicit(&idx("2")), z("2").scale(&q(2)));
    assert_eq!(zeta_rs_explicit(&idx("1,1")), ZSymbol::twopii_pow(2).scale(&q_frac(1, 6)));

    let ev = Evaluator::new(60);
    let pi = std::f64::consts::PI;
    let v1 = ev.value(&zeta_rs_explicit(&idx("1"))).unwrap();
    assert!(v1.re_f64().abs() < 1e-30 && (v1.im_f64() + pi).abs() < 1e-14);
    let v2 = ev.value(&zeta_rs_explicit(&idx("2"))).unwrap();
    assert!((v2.re_f64() - pi * pi / 3.0).abs() < 1e-14);
    let v11 = ev.value(&zeta_rs_explicit(&idx("1,1"))).unwrap();
    assert!((v11.re_f64() + 2.0 * pi * pi / 3.0).abs() < 1e-14 && v11.im_f64().abs() < 1e-30);

    let kernel = zeta_rs_explicit(&idx("2")).scale(&q(2)).add(&zeta_rs_explicit(&idx("1,1")));
    assert_close(&ev, kernel.clone(), ZSymbol::zero(), "2 zeta(2) + zeta(1,1)");
    let kernel_word = WordPoly::from_index(&idx("2")).scale(&q(2)).add(&WordPoly::from_index(&idx("1,1")));
    assert_eq!(z_rs(&kernel_word).unwrap(), kernel);
}

#[test]
fn l_poly_examples() {
    assert_eq!(l_poly(&Word::empty()), t_pow(0, ZSymbol::one()));
    assert!(l_poly(&w("0")).is_zero());
    assert_eq!(l_poly(&w("1")), t_pow(1, ZSymbol::one()));
    assert_eq!(l_poly(&w("11")), t_pow(2, ZSymbol::constant(q_frac(1, 2))));
    // every split of 1^n contributes only through the middle block
    assert_eq!(l_poly(&w("1111")), t_pow(4, ZSymbol::constant(inv_factorial(4))));
    // e1 e0: T·I(e0) vanishes, leaving I_dch(e1 e0) + I_dch^{-1}(e1 e0)
    assert!(l_poly(&w("10")).is_zero());
    assert_eq!(l_poly(&w("101")).coeff(&[0]), ZSymbol::zero());
}

#[test]
fn constant_term_vanishes_for_nonempty_words() {
    for n in 1..=7 {
        for word in Word::all_of_len(n) {
            assert!(l_poly(&word).coeff(&[0]).is_zero(), "{word}");
        }
    }
}

#[test]
fn l_n_examples() {
    assert_eq!(l_n(&w("1"), 3), ZSymbol::twopii_pow(1).scale(&q(3)));
    assert_eq!(l_n(&w("11"), -1), ZSymbol::twopii_pow(2).scale(&q_frac(1, 2)));
    assert!(l_n(&w("101"), 0).is_zero());
    for word in Word::all_of_len(5) {
        let p = l_poly(&word);
        assert_eq!(l_n(&word, 2), p.eval(&[ZSymbol::twopii_pow(1).scale(&q(2))]).unwrap());
    }
}

#[test]
fn l_tilde_is_a_difference_of_shifts() {
    // L(e1;T) = T, so L̃(e1;T) = 2πi
    assert_eq!(l_tilde(&WordPoly::from_word(w("1"))), t_pow(0, ZSymbol::twopii_pow(1)));
    // L(e1e1;T) = T²/2, so L̃ = 2πi·T
    assert_eq!(l_tilde(&WordPoly::from_word(w("11"))), t_pow(1, ZSymbol::twopii_pow(1)));
}

#[test]
fn z_rs_errors_and_linearity() {
    assert!(matches!(z_rs(&WordPoly::one()), Err(Error::NotInH(_))));
    let u = WordPoly::from_word(w("101")).scale(&q(3)).sub(&WordPoly::from_word(w("0110")));
    let parts = z_rs(&WordPoly::from_word(w("101"))).unwrap().scale(&q(3)).sub(&z_rs(&WordPoly::from_word(w("0110"))).unwrap());
    assert_eq!(z_rs(&u).unwrap(), parts);
    assert_eq!(l_poly_linear(&u), l_poly(&w("101")).scale(&q(3)).sub(&l_poly(&w("0110"))).unwrap());
}

#[test]
fn routes_agree_exactly() {
    for wt in 0..=6 {
        for k in Index::compositions(wt) {
            let e = zeta_rs_explicit(&k).shuffle_normalize();
            assert_eq!(zeta_rs_lpoly(&k).shuffle_normalize(), e, "lpoly route at {k}");
            assert_eq!(zeta_rs_integral(&k).shuffle_normalize(), e, "integral route at {k}");
            assert_eq!(zeta_rs(&k, Route::Explicit).shuffle_normalize(), e);
        }
    }
}

#[test]
fn values_are_homogeneous_of_the_index_weight() {
    for wt in 0..=6u32 {
        for k in Index::compositions(wt) {
            let s = zeta_rs_explicit(&k);
            if !s.is_zero() {
                assert_eq!(s.homogeneous_weight(), Some(wt), "{k}");
            }
        }
    }
}

// Dropping every term with a power of 2πi leaves the symmetric sum
// Σ_i (-1)^{k_{i+1}+…+k_d} ζ_⧢(k1..ki) ζ_⧢(kd..k_{i+1}), written out here
// from its definition.
#[test]
fn two_pi_i_free_part_is_the_symmetric_value() {
    let sh0 = |k: &Index| zeta_sh_poly(k).coeff(&[0]);
    for wt in 1..=6 {
        for k in Index::compositions(wt) {
            let parts = k.parts();
            let mut expect = ZSymbol::zero();
            for i in 0..=parts.len() {
                let head = Index::new(parts[..i].to_vec()).unwrap();
                let tail: Vec<u32> = parts[i..].iter().rev().copied().collect();
                let s = sign(parts[i..].iter().sum::<u32>() as u64);
                expect.add_assign(&sh0(&head).mul(&sh0(&Index::new(tail).unwrap())).scale(&s));
            }
            assert_eq!(zeta_rs_explicit(&k).twopii_free_part(), expect, "{k}");
        }
    }
}

#[test]
fn btt_route_agrees_numerically() {
    let ev = Evaluator::new(60);
    for wt in 0..=5 {
        for k in Index::compositions(wt) {
            assert_close(&ev, zeta_rs(&k, Route::Btt), zeta_rs_explicit(&k), &format!("btt at {k}"));
        }
    }
}

#[test]
fn route_names_round_trip() {
    for r in Route::ALL {
        assert_eq!(r.to_string().parse::<Route>().unwrap(), r);
    }
    assert!("fast".parse::<Route>().is_err());
}
