//! Run settings shared by the library entry points and the command line.
//!
//! Defaults can be overridden by `RSMZV_DIGITS`, `RSMZV_GUARD`,
//! `RSMZV_PRIMES` (comma separated) and `RSMZV_CACHE`.

use std::collections::BTreeMap;
use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::relations::{ModP, DEFAULT_PRIMES};
use crate::suites::Suite;

/// Smallest allowed `digits − guard` for a pass/fail decision.
pub const MIN_DECISIVE_DIGITS: u32 = 30;

#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    pub digits: u32,
    pub guard: u32,
    pub primes: Vec<u64>,
    pub max_weight: BTreeMap<Suite, usize>,
    pub cache_path: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            digits: 60,
            guard: 15,
            primes: DEFAULT_PRIMES.to_vec(),
            max_weight: Suite::ALL.into_iter().map(|s| (s, s.default_max_weight())).collect(),
            cache_path: None,
        }
    }
}

fn env_parse<T: std::str::FromStr>(name: &str) -> Result<Option<T>> {
    match std::env::var(name) {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| Error::Config(format!("cannot parse {name}={v:?}"))),
        Err(_) => Ok(None),
    }
}

/// Parses a comma-separated list of primes.
pub fn parse_primes(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|_| Error::Config(format!("bad prime {p:?} in {s:?}"))))
        .collect()
}

impl Config {
    /// Defaults overridden by the environment, then validated.
    pub fn from_env() -> Result<Self> {
        let mut c = Config::default();
        if let Some(d) = env_parse("RSMZV_DIGITS")? {
            c.digits = d;
        }
        if let Some(g) = env_parse("RSMZV_GUARD")? {
            c.guard = g;
        }
        if let Ok(p) = std::env::var("RSMZV_PRIMES") {
            c.primes = parse_primes(&p)?;
        }
        if let Ok(p) = std::env::var("RSMZV_CACHE") {
            c.cache_path = Some(PathBuf::from(p));
        }
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.digits < self.guard + MIN_DECISIVE_DIGITS {
            return Err(Error::Config(format!(
                "digits ({}) minus guard ({}) must be at least {MIN_DECISIVE_DIGITS}",
                self.digits, self.guard
            )));
        }
        if self.primes.is_empty() {
            return Err(Error::Config("at least one prime is required".into()));
        }
        for &p in &self.primes {
            ModP::new(p)?;
        }
        Ok(())
    }

    pub fn max_weight(&self, s: Suite) -> usize {
        self.max_weight.get(&s).copied().unwrap_or_else(|| s.default_max_weight())
    }
}
