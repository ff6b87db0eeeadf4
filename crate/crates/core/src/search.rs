//! Smallest `n` with `p * 2^n + 1` prime, per prime `p` and over ranges of `p`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::proth::{classify, Outcome, ProthCandidate, Verdict, DEFAULT_SIEVE_BUDGET};
use crate::{oracle, Natural};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub n_max: u32,
    pub sieve_budget: u64,
    /// Stop at a primover verdict as if it were prime. Exploratory only.
    pub accept_primover: bool,
}

impl SearchConfig {
    pub fn new(n_max: u32) -> Self {
        SearchConfig {
            n_max,
            sieve_budget: DEFAULT_SIEVE_BUDGET,
            accept_primover: false,
        }
    }

    pub fn sieve_budget(mut self, budget: u64) -> Self {
        self.sieve_budget = budget;
        self
    }

    pub fn accept_primover(mut self, accept: bool) -> Self {
        self.accept_primover = accept;
        self
    }
}

/// Outcome of the minimal-`n` search for one multiplier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub p: Natural,
    pub n_max: u32,
    pub min_n: Option<u32>,
    pub r_at_min: Option<Natural>,
    /// Verdict for every `n` tried, in order.
    pub verdicts: Vec<(u32, Verdict)>,
    /// No `n <= n_max` stopped the search.
    pub survivor: bool,
}

impl SearchReport {
    pub fn verdict_at_min(&self) -> Option<&Verdict> {
        let n = self.min_n?;
        self.verdicts.iter().find(|(m, _)| *m == n).map(|(_, v)| v)
    }

    /// Exponents where the classifier could not settle a `GF(3, n-1)` divisor.
    pub fn primover_exponents(&self) -> Vec<u32> {
        self.verdicts
            .iter()
            .filter(|(_, v)| v.outcome() == Outcome::Primover)
            .map(|(n, _)| *n)
            .collect()
    }
}

/// Smallest `n <= n_max` for which `p * 2^n + 1` is proven prime.
///
/// `n = 1` is decided by the oracle; larger `n` go through [`classify`].
/// Primover verdicts are recorded but do not end the search unless
/// `accept_primover` is set.
pub fn min_n(p: &Natural, config: &SearchConfig) -> Result<SearchReport> {
    let first = ProthCandidate::new(p.clone(), 1)?;
    search_from(first, config)
}

/// [`min_n`] for a multiplier the caller attests is prime.
pub fn min_n_attested(p: &Natural, config: &SearchConfig) -> Result<SearchReport> {
    let first = ProthCandidate::attested(p.clone(), 1)?;
    search_from(first, config)
}

fn search_from(first: ProthCandidate, config: &SearchConfig) -> Result<SearchReport> {
    if config.n_max < 1 {
        return Err(Error::InvalidArgument("n_max must be >= 1".into()));
    }
    let p = first.p().clone();
    let mut report = SearchReport {
        p: p.clone(),
        n_max: config.n_max,
        min_n: None,
        r_at_min: None,
        verdicts: Vec::new(),
        survivor: true,
    };
    for n in 1..=config.n_max {
        let c = if n == 1 {
            first.clone()
        } else {
            ProthCandidate::attested(p.clone(), n)?
        };
        let verdict = if n == 1 {
            Verdict::exact(c.r())?
        } else {
            classify(&c, config.sieve_budget)?
        };
        let stop = match verdict.outcome() {
            Outcome::Prime => true,
            Outcome::Primover => config.accept_primover,
            Outcome::Composite => false,
        };
        report.verdicts.push((n, verdict));
        if stop {
            report.min_n = Some(n);
            report.r_at_min = Some(c.r().clone());
            report.survivor = false;
            break;
        }
    }
    Ok(report)
}

/// Odd primes in `[p_min, p_max]`.
pub fn odd_primes(p_min: u64, p_max: u64) -> Vec<u64> {
    (p_min.max(3)..=p_max)
        .filter(|&p| p % 2 == 1 && oracle::is_prime_u64(p))
        .collect()
}

/// Runs [`min_n`] for every odd prime in `[p_min, p_max]` on `workers` threads.
///
/// Reports come back in ascending `p` whatever the scheduling.
pub fn scan(p_min: u64, p_max: u64, config: &SearchConfig, workers: usize) -> Result<Vec<SearchReport>> {
    if p_min > p_max {
        return Err(Error::InvalidArgument(format!(
            "empty range: p_min {p_min} > p_max {p_max}"
        )));
    }
    if workers < 1 {
        return Err(Error::InvalidArgument("workers must be >= 1".into()));
    }
    if config.n_max < 1 {
        return Err(Error::InvalidArgument("n_max must be >= 1".into()));
    }
    let primes = odd_primes(p_min, p_max);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    pool.install(|| {
        primes
            .par_iter()
            .map(|&p| min_n(&Natural::from(p), config))
            .collect()
    })
}
