//! Replays the base-3 test against the oracle over a desk-scale range.
//!
//! Suites:
//! * `equivalence`: `3^((R-1)/2) = -1 (mod R)` exactly when `R` is prime or a
//!   primover divisor of `GF(3, n-1)` (p > 3, 3 ∤ R);
//! * `residue`: `3 | R`, or `R = 2 (mod 3)` with `(3 / R) = -1` (p > 3);
//! * `soundness`: classifier verdicts never contradict the oracle;
//! * `passing_factors`: prime factors of a composite `R` passing the test are
//!   `1 (mod 2^n)` with order `2^n`;
//! * `gf3_forms`: `GF(3, n)`, `n <= 5`, factors completely into form A / form B
//!   primes of order `2^(n+1)`;
//! * `gf_divisor`: the composite divisor `3281 = 17 * 193` of `GF(3, 3)`.

use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fermat::{factor_gf3, form_of, low_residue, DEFAULT_GF3_BUDGET, GF3_FACTOR_CAP};
use crate::modular::{jacobi, mult_order_3, pow3_tower, JacobiValue};
use crate::proth::{classify, divides_gf3, euler_test, Outcome, ProthCandidate, DEFAULT_SIEVE_BUDGET};
use crate::search::odd_primes;
use crate::{oracle, Natural};

/// Candidates at or above this value are skipped.
pub const DEFAULT_R_BOUND: u64 = 1 << 40;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub p_max: u64,
    pub n_max: u32,
    pub workers: usize,
    pub r_bound: u64,
    pub sieve_budget: u64,
}

impl VerifyConfig {
    pub fn new(p_max: u64, n_max: u32) -> Self {
        VerifyConfig {
            p_max,
            n_max,
            workers: 1,
            r_bound: DEFAULT_R_BOUND,
            sieve_budget: DEFAULT_SIEVE_BUDGET,
        }
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub suite: &'static str,
    pub p: u64,
    pub n: u32,
    #[serde(rename = "R")]
    pub r: u64,
    pub detail: String,
}

/// A composite `R` that passed the base-3 Euler test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PassingComposite {
    pub p: u64,
    pub n: u32,
    #[serde(rename = "R")]
    pub r: u64,
    pub factors: Vec<u64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub candidates: u64,
    pub multiplier_three: u64,
    pub divisible_by_three: u64,
    pub euler_passing: u64,
    pub primes: u64,
    pub composites: u64,
    pub primover_verdicts: u64,
    pub skipped_above_bound: u64,
    pub passing_composites: Vec<PassingComposite>,
    pub gf3_checked: Vec<u32>,
    pub discrepancies: Vec<Discrepancy>,
}

impl VerifySummary {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }

    fn merge(&mut self, other: VerifySummary) {
        self.candidates += other.candidates;
        self.multiplier_three += other.multiplier_three;
        self.divisible_by_three += other.divisible_by_three;
        self.euler_passing += other.euler_passing;
        self.primes += other.primes;
        self.composites += other.composites;
        self.primover_verdicts += other.primover_verdicts;
        self.skipped_above_bound += other.skipped_above_bound;
        self.passing_composites.extend(other.passing_composites);
        self.gf3_checked.extend(other.gf3_checked);
        self.discrepancies.extend(other.discrepancies);
    }

    pub fn discrepancies_in(&self, suite: &str) -> usize {
        self.discrepancies.iter().filter(|d| d.suite == suite).count()
    }
}

impl std::fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "candidates tested:     {}", self.candidates)?;
        writeln!(f, "  multiplier p = 3:    {}", self.multiplier_three)?;
        writeln!(f, "  divisible by 3:      {}", self.divisible_by_three)?;
        writeln!(f, "  passing Euler test:  {}", self.euler_passing)?;
        writeln!(f, "primes:                {}", self.primes)?;
        writeln!(f, "composites:            {}", self.composites)?;
        writeln!(f, "primover cases:        {}", self.primover_verdicts)?;
        writeln!(f, "passing composites:    {}", self.passing_composites.len())?;
        writeln!(f, "skipped (R >= bound):  {}", self.skipped_above_bound)?;
        writeln!(f, "GF(3, n) factored:     {:?}", self.gf3_checked)?;
        for d in &self.discrepancies {
            writeln!(f, "  [{}] p={} n={} R={}: {}", d.suite, d.p, d.n, d.r, d.detail)?;
        }
        write!(f, "{} discrepancies", self.discrepancies.len())
    }
}

struct Local {
    summary: VerifySummary,
    p: u64,
    n: u32,
    r: u64,
}

impl Local {
    fn flag(&mut self, suite: &'static str, detail: impl Into<String>) {
        self.summary.discrepancies.push(Discrepancy {
            suite,
            p: self.p,
            n: self.n,
            r: self.r,
            detail: detail.into(),
        });
    }
}

fn check_candidate(p: u64, n: u32, config: &VerifyConfig) -> Result<VerifySummary> {
    let r = match p.checked_shl(n).filter(|v| v >> n == p).and_then(|v| v.checked_add(1)) {
        Some(r) if r < config.r_bound => r,
        _ => {
            return Ok(VerifySummary {
                skipped_above_bound: 1,
                ..Default::default()
            })
        }
    };
    let mut local = Local {
        summary: VerifySummary {
            candidates: 1,
            ..Default::default()
        },
        p,
        n,
        r,
    };
    let c = ProthCandidate::from_u64(p, n)?;
    let oracle_prime = oracle::is_prime_u64(r);
    if oracle_prime {
        local.summary.primes += 1;
    } else {
        local.summary.composites += 1;
    }

    let verdict = classify(&c, config.sieve_budget)?;
    match verdict.outcome() {
        Outcome::Prime if !oracle_prime => local.flag("soundness", format!("classified {verdict} but composite")),
        Outcome::Composite if oracle_prime => local.flag("soundness", format!("classified {verdict} but prime")),
        Outcome::Primover => {
            local.summary.primover_verdicts += 1;
            if !divides_gf3(&c)? || !euler_test(&c)? {
                local.flag("soundness", "primover verdict without Euler pass and GF(3, n-1) divisibility");
            }
        }
        _ => {}
    }

    if p == 3 {
        local.summary.multiplier_three += 1;
        return Ok(local.summary);
    }
    if r % 3 == 0 {
        local.summary.divisible_by_three += 1;
        return Ok(local.summary);
    }

    let jac = jacobi(&Natural::from(3u32), c.r())?;
    if r % 3 != 2 || jac != JacobiValue::MinusOne {
        local.flag("residue", format!("R mod 3 = {}, (3/R) = {jac}", r % 3));
    }

    let passes = euler_test(&c)?;
    if passes {
        local.summary.euler_passing += 1;
    }
    let gf_divisor = divides_gf3(&c)?;
    let rhs = oracle_prime || (gf_divisor && oracle::is_primover_3(c.r())?);
    if passes != rhs {
        local.flag(
            "equivalence",
            format!("euler_test = {passes}, prime = {oracle_prime}, divides GF = {gf_divisor}"),
        );
    }

    if passes && !oracle_prime {
        let fac = oracle::factorize(c.r(), oracle::DEFAULT_FACTOR_BUDGET)?;
        if !fac.complete {
            return Err(Error::IncompleteFactorization(c.r().clone()));
        }
        let order = Natural::one() << n;
        let mut factors = Vec::new();
        for f in fac.primes() {
            factors.push(f.to_u64().expect("factor of a word"));
            if low_residue(f, n) != 1 {
                local.flag("passing_factors", format!("factor {f} is not 1 mod 2^{n}"));
            }
            match mult_order_3(f, c.p(), n) {
                Ok(o) if o == order => {}
                Ok(o) => local.flag("passing_factors", format!("ord_{f}(3) = {o}")),
                Err(e) => local.flag("passing_factors", format!("factor {f}: {e}")),
            }
        }
        local.summary.passing_composites.push(PassingComposite { p, n, r, factors });
    }
    Ok(local.summary)
}

/// Checks `GF(3, n)` against the two divisor shapes and the order law.
pub fn check_gf3(n: u32) -> Result<Vec<String>> {
    let mut problems = Vec::new();
    let fac = factor_gf3(n, DEFAULT_GF3_BUDGET)?;
    if !fac.complete {
        problems.push(format!("GF(3, {n}) not completely factored: {fac}"));
    }
    if fac.product() != fac.target && fac.complete {
        problems.push(format!("product of factors differs from GF(3, {n})"));
    }
    let order = Natural::one() << (n + 1);
    for f in fac.primes().filter(|f| **f != Natural::from(2u32)) {
        if !oracle::is_prime_exact(f)? {
            problems.push(format!("listed factor {f} is not prime"));
        }
        if form_of(f, n)?.is_none() {
            problems.push(format!("{f} matches neither form"));
        }
        if low_residue(f, n + 1) != 1 {
            problems.push(format!("{f} is not 1 mod 2^{}", n + 1));
        }
        let o = mult_order_3(f, &Natural::one(), n + 1)?;
        if o != order {
            problems.push(format!("ord_{f}(3) = {o}, expected {order}"));
        }
        if !oracle::is_primover_3(f)? {
            problems.push(format!("{f} is not primover"));
        }
    }
    Ok(problems)
}

/// Checks the composite divisor `3281 = 17 * 193` of `GF(3, 3)`.
pub fn check_gf_divisor_3281() -> Result<Vec<String>> {
    let m = Natural::from(3281u32);
    let mut problems = Vec::new();
    if pow3_tower(3, &m)? != Natural::from(3280u32) {
        problems.push("3^8 is not -1 mod 3281".to_string());
    }
    if !oracle::is_overpseudoprime_3(&m)? {
        problems.push("3281 is not an overpseudoprime".to_string());
    }
    for f in [17u32, 193] {
        let o = mult_order_3(&Natural::from(f), &Natural::one(), 4)?;
        if o != Natural::from(16u32) {
            problems.push(format!("ord_{f}(3) = {o}"));
        }
    }
    if !(Natural::from(17u32 * 193) - &m).is_zero() {
        problems.push("3281 != 17 * 193".to_string());
    }
    Ok(problems)
}

/// Runs every suite over primes `p <= p_max` and `2 <= n <= n_max`.
pub fn run(config: &VerifyConfig) -> Result<VerifySummary> {
    if config.workers < 1 {
        return Err(Error::InvalidArgument("workers must be >= 1".into()));
    }
    let pairs: Vec<(u64, u32)> = odd_primes(3, config.p_max)
        .into_iter()
        .flat_map(|p| (2..=config.n_max).map(move |n| (p, n)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let parts: Vec<VerifySummary> = pool.install(|| {
        pairs
            .par_iter()
            .map(|&(p, n)| check_candidate(p, n, config))
            .collect::<Result<_>>()
    })?;

    let mut summary = VerifySummary::default();
    for part in parts {
        summary.merge(part);
    }

    for n in 1..=GF3_FACTOR_CAP {
        for detail in check_gf3(n)? {
            summary.discrepancies.push(Discrepancy {
                suite: "gf3_forms",
                p: 0,
                n,
                r: 0,
                detail,
            });
        }
        summary.gf3_checked.push(n);
    }
    for detail in check_gf_divisor_3281()? {
        summary.discrepancies.push(Discrepancy {
            suite: "gf_divisor",
            p: 0,
            n: 3,
            r: 3281,
            detail,
        });
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_range_routes_p3() {
        let s = run(&VerifyConfig::new(3, 2)).unwrap();
        assert_eq!(s.candidates, 1);
        assert_eq!(s.multiplier_three, 1);
        assert_eq!(s.primes, 1);
        assert!(s.is_clean(), "{s}");
    }

    #[test]
    fn small_range_is_clean() {
        let s = run(&VerifyConfig::new(100, 12).workers(2)).unwrap();
        assert!(s.is_clean(), "{s}");
        assert!(s.to_string().ends_with("0 discrepancies"));
        assert_eq!(s.gf3_checked, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn bound_skips_large_candidates() {
        let mut cfg = VerifyConfig::new(13, 10);
        cfg.r_bound = 1000;
        let s = run(&cfg).unwrap();
        assert!(s.skipped_above_bound > 0);
        assert_eq!(s.candidates + s.skipped_above_bound, 5 * 9);
    }
}
