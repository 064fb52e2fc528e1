//! Per-weight comparison of computed ranks with `2^{k-1} − d_k − d_{k-1}`.

use std::time::Instant;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::eliminate::ModEliminator;
use super::exact::rank_exact;
use super::generators::{enumerate_generators, generator_count, h0_dim, RowEngine};
use super::modp::{ModP, SPARE_PRIMES};
use super::expected_rank;
use crate::error::{Error, Result};

/// Settings for [`conjecture_table`].
#[derive(Clone, Debug)]
pub struct RankOptions {
    /// Primes used for every weight (at least one).
    pub primes: Vec<u64>,
    /// Also compute the rank over Q up to this weight.
    pub exact_upto: usize,
    /// Upper limit for exact computation.
    pub exact_bound: usize,
    /// Seed for the order in which generators are fed to the eliminator.
    pub seed: u64,
}

impl Default for RankOptions {
    fn default() -> Self {
        RankOptions {
            primes: super::modp::DEFAULT_PRIMES.to_vec(),
            exact_upto: 0,
            exact_bound: super::exact::DEFAULT_EXACT_BOUND,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub k: usize,
    pub dim: usize,
    pub generators: u64,
    pub rank: usize,
    pub expected: u64,
    #[serde(rename = "match")]
    pub matches: bool,
    pub elapsed_ms: u64,
    pub primes: Vec<u64>,
    pub ranks_mod_p: Vec<usize>,
    pub primes_agree: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact_rank: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub warnings: Vec<String>,
}

/// Ranks of the weight-`k` relation space modulo each prime, computed from
/// one stream of generator rows.
///
/// A seeded random subset of slightly more than `dim` generators is reduced
/// first; once the rank is nearly full, each of the remaining rows only
/// costs a pass over the few non-pivot columns.
pub fn rank_mod_primes(k: usize, primes: &[u64], seed: u64) -> Result<Vec<usize>> {
    if k == 0 || k > 30 {
        return Err(Error::WeightOutOfRange(k));
    }
    let fields = primes.iter().map(|&p| ModP::new(p)).collect::<Result<Vec<_>>>()?;
    let n = h0_dim(k);
    let mut elims: Vec<ModEliminator> = fields.into_iter().map(|f| ModEliminator::new(f, n)).collect();
    let triples: Vec<_> = enumerate_generators(k).collect();
    let mut first = vec![false; triples.len()];
    let warm = (n + n / 4 + 16).min(triples.len());
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ k as u64);
    for i in sample(&mut rng, triples.len(), warm) {
        first[i] = true;
    }
    let order = (0..triples.len()).filter(|&i| first[i]).chain((0..triples.len()).filter(|&i| !first[i]));
    let mut eng = RowEngine::new(k);
    let mut row = vec![0i64; n];
    for i in order {
        if elims.iter().all(|e| e.rank() == n) {
            break;
        }
        let (u, v, w) = &triples[i];
        eng.row(u, v, w, &mut row);
        if row.iter().all(|&x| x == 0) {
            continue;
        }
        for e in elims.iter_mut() {
            e.insert(&row);
        }
    }
    Ok(elims.iter().map(ModEliminator::rank).collect())
}

/// Rank of the weight-`k` relation space over `Z/pZ`.
pub fn rank_mod_p(k: usize, p: u64) -> Result<usize> {
    Ok(rank_mod_primes(k, &[p], RankOptions::default().seed)?[0])
}

fn table_row(k: usize, opts: &RankOptions) -> Result<TableRow> {
    let start = Instant::now();
    let mut primes = opts.primes.clone();
    let mut ranks = rank_mod_primes(k, &primes, opts.seed)?;
    let mut warnings = Vec::new();
    for &p in &primes {
        if p < 1 << 60 {
            warnings.push(format!("prime {p} is below 2^60; coefficient collisions are more likely"));
        }
    }
    let mut agree = ranks.windows(2).all(|w| w[0] == w[1]);
    if !agree {
        warnings.push(format!("ranks {:?} differ between primes {:?}; retrying with a further prime", ranks, primes));
        if let Some(&extra) = SPARE_PRIMES.iter().find(|p| !primes.contains(p)) {
            ranks.push(rank_mod_primes(k, &[extra], opts.seed)?[0]);
            primes.push(extra);
        }
        agree = false;
    }
    // every modular rank is a lower bound for the rank over Q
    let rank = ranks.iter().copied().max().unwrap_or(0);
    let exact_rank = if k <= opts.exact_upto { Some(rank_exact(k, opts.exact_bound)?) } else { None };
    let expected = expected_rank(k);
    let matches = agree && rank as u64 == expected && exact_rank.is_none_or(|r| r == rank);
    Ok(TableRow {
        k,
        dim: h0_dim(k),
        generators: generator_count(k),
        rank,
        expected,
        matches,
        elapsed_ms: start.elapsed().as_millis() as u64,
        primes,
        ranks_mod_p: ranks,
        primes_agree: agree,
        exact_rank,
        warnings,
    })
}

/// Rows for weights `1..=k_max`, calling `progress` after each one.
pub fn conjecture_table(k_max: usize, opts: &RankOptions, mut progress: impl FnMut(&TableRow)) -> Result<Vec<TableRow>> {
    if opts.primes.is_empty() {
        return Err(Error::Config("at least one prime is required".into()));
    }
    let mut rows = Vec::new();
    for k in 1..=k_max {
        let row = table_row(k, opts)?;
        progress(&row);
        rows.push(row);
    }
    Ok(rows)
}

impl TableRow {
    pub const CSV_HEADER: &'static str = "k,dim,generators,rank,expected,match,elapsed_ms,primes";

    pub fn to_csv(&self) -> String {
        let primes: Vec<String> = self.primes.iter().map(u64::to_string).collect();
        format!(
            "{},{},{},{},{},{},{},{}",
            self.k,
            self.dim,
            self.generators,
            self.rank,
            self.expected,
            self.matches,
            self.elapsed_ms,
            primes.join(";")
        )
    }
}
