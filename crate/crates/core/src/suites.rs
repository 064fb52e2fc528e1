//! Property suites checking relations among refined symmetric values, each
//! run over every basis element up to a weight cap.
//!
//! A case compares two sides numerically with [`verify_identity`]. Cases
//! whose identity follows from path composition alone are also compared
//! symbolically after shuffle normalization and fail unless that
//! difference vanishes too.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::index::{harmonic_word, Index};
use crate::numerics::{verify_identity, Evaluator, Expr};
use crate::rational::{q, q_frac};
use crate::regularization::{zeta_star_poly, zeta_star_via_gamma};
use crate::rsmzv::{l_poly_linear, l_tilde, xi_btt, z_rs, zeta_rs_explicit, zeta_rs_integral, zeta_rs_lpoly, zeta_sh_s};
use crate::tpoly::TPoly;
use crate::word::{Word, WordPoly};
use crate::zsymbol::ZSymbol;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Shuffle,
    Harmonic,
    Duality,
    Reversal,
    Btt,
    Variants,
    Hopf,
    Regcross,
}

impl Suite {
    pub const ALL: [Suite; 8] =
        [Suite::Shuffle, Suite::Harmonic, Suite::Duality, Suite::Reversal, Suite::Btt, Suite::Variants, Suite::Hopf, Suite::Regcross];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Shuffle => "shuffle",
            Suite::Harmonic => "harmonic",
            Suite::Duality => "duality",
            Suite::Reversal => "reversal",
            Suite::Btt => "btt",
            Suite::Variants => "variants",
            Suite::Hopf => "hopf",
            Suite::Regcross => "regcross",
        }
    }

    /// Weight cap used when none is configured.
    pub fn default_max_weight(self) -> usize {
        match self {
            Suite::Shuffle | Suite::Hopf => 5,
            _ => 6,
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::Shuffle => "Z(u sh v) = 2 pi i Z(u) Z(v) on pairs of words in h",
            Suite::Harmonic => "Z(u * v) = Z(u) Z(v) on pairs of words in h0",
            Suite::Duality => "Z(phi(w)) = -conj Z(w) on h0",
            Suite::Reversal => "Z(tau(w)) = -conj Z(w) on h",
            Suite::Btt => "xi(k reversed) = zeta^RS(k)",
            Suite::Variants => "explicit, integral and BTT routes against Z(w(k)); zeta^S_sh = L'(w(k); T2 - T1)",
            Suite::Hopf => "L(u sh v) = L(u) L(v) on h; 2 pi i Ltilde(u * v) = Ltilde(u) Ltilde(v) on h0",
            Suite::Regcross => "zeta_* directly against the Gamma_1 route",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub key: String,
    /// Upper bound on `|lhs − rhs|`, as a decimal string.
    pub residual: String,
    /// For cases that must hold symbolically: whether they do.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact: Option<bool>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub max_weight: usize,
    pub digits: u32,
    pub guard: u32,
    pub tolerance: String,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

fn fmt_residual(x: f64) -> String {
    if x == 0.0 {
        "0".into()
    } else {
        format!("{x:.3e}")
    }
}

/// One identity to check.
struct Case {
    key: String,
    lhs: Expr,
    rhs: Expr,
    exact: bool,
}

impl Case {
    fn symbols(key: String, lhs: ZSymbol, rhs: ZSymbol, exact: bool) -> Case {
        Case { key, lhs: lhs.into(), rhs: rhs.into(), exact }
    }

    fn polys(key: String, lhs: TPoly, rhs: TPoly, exact: bool) -> Case {
        Case { key, lhs: lhs.into(), rhs: rhs.into(), exact }
    }
}

fn symbolically_equal(a: &Expr, b: &Expr) -> bool {
    match (a, b) {
        (Expr::Symbol(x), Expr::Symbol(y)) => x.sub(y).shuffle_normalize().is_zero(),
        (Expr::Poly(x), Expr::Poly(y)) => match x.sub(y) {
            Ok(d) => d.iter().all(|(_, c)| c.shuffle_normalize().is_zero()),
            Err(_) => false,
        },
        _ => false,
    }
}

/// Sample points for identities between polynomials in one variable.
pub fn samples_t() -> Vec<Vec<ZSymbol>> {
    vec![
        vec![ZSymbol::pi_multiple(&q_frac(1, 3))],
        vec![ZSymbol::pi_multiple(&q_frac(-5, 7)).add(&ZSymbol::constant(q_frac(1, 2)))],
        vec![ZSymbol::constant(q(2))],
    ]
}

/// Sample points for identities between polynomials in two variables.
pub fn samples_t12() -> Vec<Vec<ZSymbol>> {
    vec![
        vec![ZSymbol::pi_multiple(&q_frac(1, 3)), ZSymbol::pi_multiple(&q_frac(-1, 2))],
        vec![ZSymbol::constant(q_frac(1, 2)), ZSymbol::pi_multiple(&q_frac(5, 7)).add(&ZSymbol::constant(q(-1)))],
        vec![ZSymbol::constant(q(-2)), ZSymbol::constant(q(3))],
    ]
}

/// Nonempty words of length at most `max_len`, shortest first.
fn h_words(max_len: usize) -> Vec<Word> {
    (1..=max_len).flat_map(Word::all_of_len).collect()
}

/// Words in h0 of weight at most `max_weight`, lightest first.
fn h0_words(max_weight: usize) -> Vec<Word> {
    (0..=max_weight).flat_map(Word::h0_basis).collect()
}

/// Unordered pairs `(u, v)` with `weight(u) + weight(v) ≤ max_weight`.
fn pairs(words: &[Word], max_weight: usize) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for (i, u) in words.iter().enumerate() {
        for v in &words[i..] {
            if (u.weight() + v.weight()) as usize <= max_weight {
                out.push((*u, *v));
            }
        }
    }
    out
}

fn indices(max_weight: usize) -> Vec<Index> {
    (0..=max_weight as u32).flat_map(Index::compositions).collect()
}

fn index_key(k: &Index) -> String {
    format!("({k})")
}

fn cases(suite: Suite, max_weight: usize) -> Result<Vec<Case>> {
    let twopii = ZSymbol::twopii_pow(1);
    let mut out = Vec::new();
    match suite {
        Suite::Shuffle => {
            for (u, v) in pairs(&h_words(max_weight + 1), max_weight) {
                let (pu, pv) = (WordPoly::from_word(u), WordPoly::from_word(v));
                let lhs = z_rs(&pu.shuffle(&pv))?;
                let rhs = z_rs(&pu)?.mul(&z_rs(&pv)?).mul(&twopii);
                out.push(Case::symbols(format!("{u}|{v}"), lhs, rhs, false));
            }
        }
        Suite::Harmonic => {
            for (u, v) in pairs(&h0_words(max_weight), max_weight) {
                let (pu, pv) = (WordPoly::from_word(u), WordPoly::from_word(v));
                let lhs = z_rs(&harmonic_word(&pu, &pv)?)?;
                let rhs = z_rs(&pu)?.mul(&z_rs(&pv)?);
                out.push(Case::symbols(format!("{u}|{v}"), lhs, rhs, false));
            }
        }
        Suite::Duality => {
            for w in h0_words(max_weight) {
                let p = WordPoly::from_word(w);
                out.push(Case::symbols(w.to_string(), z_rs(&p.phi())?, z_rs(&p)?.conj().neg(), false));
            }
        }
        Suite::Reversal => {
            for w in h_words(max_weight + 1) {
                let p = WordPoly::from_word(w);
                out.push(Case::symbols(w.to_string(), z_rs(&p.tau())?, z_rs(&p)?.conj().neg(), false));
            }
        }
        Suite::Btt => {
            for k in indices(max_weight) {
                out.push(Case::symbols(index_key(&k), xi_btt(&k), zeta_rs_lpoly(&k), false));
            }
        }
        Suite::Variants => {
            for k in indices(max_weight) {
                let reference = zeta_rs_lpoly(&k);
                let key = index_key(&k);
                out.push(Case::symbols(format!("explicit:{key}"), zeta_rs_explicit(&k), reference.clone(), true));
                out.push(Case::symbols(format!("integral:{key}"), zeta_rs_integral(&k), reference.clone(), true));
                out.push(Case::symbols(format!("btt:{key}"), xi_btt(&k), reference, false));
                out.push(Case::polys(format!("derivative:{key}"), zeta_sh_s(&k), l_derivative_at_difference(&k)?, true));
            }
        }
        Suite::Hopf => {
            for (u, v) in pairs(&h_words(max_weight + 1), max_weight) {
                let (pu, pv) = (WordPoly::from_word(u), WordPoly::from_word(v));
                let lhs = l_poly_linear(&pu.shuffle(&pv));
                let rhs = l_poly_linear(&pu).mul(&l_poly_linear(&pv))?;
                out.push(Case::polys(format!("shuffle:{u}|{v}"), lhs, rhs, true));
            }
            for (u, v) in pairs(&h0_words(max_weight), max_weight) {
                let (pu, pv) = (WordPoly::from_word(u), WordPoly::from_word(v));
                let lhs = l_tilde(&harmonic_word(&pu, &pv)?).mul_symbol(&twopii);
                let rhs = l_tilde(&pu).mul(&l_tilde(&pv))?;
                out.push(Case::polys(format!("harmonic:{u}|{v}"), lhs, rhs, false));
            }
        }
        Suite::Regcross => {
            for k in indices(max_weight) {
                out.push(Case::polys(index_key(&k), zeta_star_poly(&k), zeta_star_via_gamma(&k), false));
            }
        }
    }
    Ok(out)
}

/// `(d/dT) L(w(k);T)` at `T = −T1 + T2`, as a polynomial in `T1, T2`.
pub fn l_derivative_at_difference(k: &Index) -> Result<TPoly> {
    let vars = ["T1", "T2"];
    let diff = TPoly::var(&vars, 1).sub(&TPoly::var(&vars, 0))?;
    l_poly_linear(&WordPoly::from_index(k)).derivative(0).compose(&diff)
}

/// Runs `suite` on every case up to `max_weight`, with results sorted by key.
pub fn run_suite(suite: Suite, max_weight: usize, ev: &Evaluator, guard: u32) -> Result<SuiteReport> {
    let mut results = Vec::new();
    let mut tolerance = 0.0;
    for case in cases(suite, max_weight)? {
        let samples = match (&case.lhs, &case.rhs) {
            (Expr::Poly(p), _) | (_, Expr::Poly(p)) if p.nvars() == 2 => samples_t12(),
            (Expr::Poly(_), _) | (_, Expr::Poly(_)) => samples_t(),
            _ => Vec::new(),
        };
        let r = verify_identity(ev, &case.lhs, &case.rhs, &samples, guard)?;
        tolerance = r.tolerance;
        let exact = case.exact.then(|| symbolically_equal(&case.lhs, &case.rhs));
        results.push(CaseResult {
            key: case.key,
            residual: fmt_residual(r.residual),
            pass: r.pass && exact != Some(false),
            exact,
        });
    }
    results.sort_by(|a, b| a.key.cmp(&b.key));
    let failed = results.iter().filter(|c| !c.pass).count();
    Ok(SuiteReport {
        suite: suite.name().into(),
        max_weight,
        digits: ev.digits(),
        guard,
        tolerance: if tolerance == 0.0 {
            format!("1e-{}", ev.digits().saturating_sub(guard))
        } else {
            format!("{tolerance:.0e}")
        },
        passed: results.len() - failed,
        failed,
        pass: failed == 0,
        cases: results,
    })
}

/// Exact agreement of `Z(w(k))`, the closed formula and the integral route
/// for every index up to `max_weight`; returns the indices that disagree.
pub fn exact_route_mismatches(max_weight: usize) -> Vec<Index> {
    indices(max_weight)
        .into_iter()
        .filter(|k| {
            let a = zeta_rs_lpoly(k).shuffle_normalize();
            a != zeta_rs_explicit(k).shuffle_normalize() || a != zeta_rs_integral(k).shuffle_normalize()
        })
        .collect()
}

/// Indices up to `max_weight` where `ζ^S_⧢(k;T1,T2)` and
/// `L'(w(k); T2 − T1)` differ symbolically.
pub fn exact_derivative_mismatches(max_weight: usize) -> Result<Vec<Index>> {
    let mut bad = Vec::new();
    for k in indices(max_weight) {
        let lhs = Expr::Poly(zeta_sh_s(&k));
        if !symbolically_equal(&lhs, &Expr::Poly(l_derivative_at_difference(&k)?)) {
            bad.push(k);
        }
    }
    Ok(bad)
}

/// Word pairs in h of total weight up to `max_weight` where
/// `L(u⧢v;T) ≠ L(u;T)L(v;T)` symbolically.
pub fn exact_shuffle_mismatches(max_weight: usize) -> Result<Vec<(Word, Word)>> {
    let mut bad = Vec::new();
    for (u, v) in pairs(&h_words(max_weight + 1), max_weight) {
        let (pu, pv) = (WordPoly::from_word(u), WordPoly::from_word(v));
        let lhs = Expr::Poly(l_poly_linear(&pu.shuffle(&pv)));
        let rhs = Expr::Poly(l_poly_linear(&pu).mul(&l_poly_linear(&pv))?);
        if !symbolically_equal(&lhs, &rhs) {
            bad.push((u, v));
        }
    }
    Ok(bad)
}
