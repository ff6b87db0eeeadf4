//! Divisors of the base-3 generalized Fermat numbers `GF(3, n) = 3^(2^n) + 1`.
//!
//! Every odd prime factor of `GF(3, n)` has one of two shapes:
//!
//! * form A: `k * 2^(n+1) + 1` with `k` odd and `3 ∤ k`;
//! * form B: `3 * m * 2^(n+2) + 1` with `m >= 1`.
//!
//! Writing `f = j * 2^(n+1) + 1`, form A is `j = 1, 5 (mod 6)` and form B is
//! `j = 0 (mod 6)`, so the two are disjoint and together form a wheel of three
//! residues out of six.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::proth::{divides_gf3, euler_test, ProthCandidate};
use crate::{oracle, Natural};

/// Largest `n` for which [`factor_gf3`] will factor `GF(3, n)` by default.
pub const GF3_FACTOR_CAP: u32 = 5;

/// Default candidate budget for [`factor_gf3`].
pub const DEFAULT_GF3_BUDGET: u64 = 10_000_000;

/// `GF(3, n) = 3^(2^n) + 1`.
pub fn gf3(n: u32) -> Natural {
    Natural::from(3u32).pow(1u32 << n) + 1u32
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FormKind {
    /// `k * 2^(n+1) + 1`, `k` odd, `3 ∤ k`.
    FormA { k: Natural },
    /// `3 * m * 2^(n+2) + 1`.
    FormB { m: Natural },
}

/// Shape of a candidate divisor of `GF(3, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactorForm {
    pub n: u32,
    pub kind: FormKind,
}

impl FactorForm {
    /// The integer this form describes.
    pub fn value(&self) -> Natural {
        match &self.kind {
            FormKind::FormA { k } => (k << (self.n + 1)) + 1u32,
            FormKind::FormB { m } => ((m * 3u32) << (self.n + 2)) + 1u32,
        }
    }
}

impl fmt::Display for FactorForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FormKind::FormA { k } => write!(f, "FormA(k={k})"),
            FormKind::FormB { m } => write!(f, "FormB(m={m})"),
        }
    }
}

/// Classifies `f` against the two divisor shapes for index `n`.
///
/// Returns `Ok(None)` when `f` fits neither.
pub fn form_of(f: &Natural, n: u32) -> Result<Option<FactorForm>> {
    if f.is_even() || *f < Natural::from(5u32) {
        return Err(Error::InvalidArgument(format!(
            "form_of needs an odd f >= 5, got {f}"
        )));
    }
    let below = f - 1u32;
    let step_b = Natural::from(3u32) << (n + 2);
    let (m, rem) = below.div_rem(&step_b);
    if rem.is_zero() {
        return Ok(Some(FactorForm {
            n,
            kind: FormKind::FormB { m },
        }));
    }
    let step_a = Natural::one() << (n + 1);
    let (k, rem) = below.div_rem(&step_a);
    if rem.is_zero() && k.is_odd() && !(&k % 3u32).is_zero() {
        return Ok(Some(FactorForm {
            n,
            kind: FormKind::FormA { k },
        }));
    }
    Ok(None)
}

/// Increasing stream of every integer `<= limit` of form A or form B.
#[derive(Debug, Clone)]
pub struct FormCandidates {
    step: Natural,
    limit: Natural,
    j: u64,
}

impl Iterator for FormCandidates {
    type Item = Natural;

    fn next(&mut self) -> Option<Natural> {
        // j runs over 1, 5, 6, 7, 11, 12, ... (residues 0, 1, 5 mod 6)
        let value = &self.step * self.j + 1u32;
        if value > self.limit {
            return None;
        }
        self.j = match self.j % 6 {
            1 => self.j + 4,
            _ => self.j + 1,
        };
        Some(value)
    }
}

pub fn enumerate_candidates(n: u32, limit: &Natural) -> FormCandidates {
    FormCandidates {
        step: Natural::one() << (n + 1),
        limit: limit.clone(),
        j: 1,
    }
}

/// Factors `GF(3, n)` for `1 <= n <= GF3_FACTOR_CAP`.
pub fn factor_gf3(n: u32, budget: u64) -> Result<Factorization> {
    factor_gf3_with_cap(n, budget, GF3_FACTOR_CAP)
}

/// Factors `GF(3, n)` by trial division restricted to the divisor shapes.
///
/// The single factor 2 is removed first. After that only form A and form B
/// candidates up to the square root are tried, at most `budget` of them. The
/// factorization is complete once the cofactor is 1 or proven prime.
pub fn factor_gf3_with_cap(n: u32, budget: u64, cap: u32) -> Result<Factorization> {
    if n > cap {
        return Err(Error::IndexAboveCap { n, cap });
    }
    if n == 0 {
        return Err(Error::InvalidArgument("GF(3, 0) = 4 has no odd part".into()));
    }
    let target = gf3(n);
    let mut out = Factorization::new(target);
    out.push(Natural::from(2u32), 1);
    debug_assert!(out.unfactored.is_odd());

    let cofactor_is_prime = |c: &Natural| -> Result<Option<bool>> {
        if c.is_one() {
            return Ok(Some(false));
        }
        match oracle::is_prime_exact(c) {
            Ok(b) => Ok(Some(b)),
            Err(Error::OutOfOracleRange { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    };

    if cofactor_is_prime(&out.unfactored)? == Some(true) {
        out.finish(true);
        return Ok(out);
    }

    let root = out.unfactored.sqrt();
    let mut reached_root = false;
    let mut tried = 0u64;
    for candidate in enumerate_candidates(n, &root) {
        if tried == budget {
            break;
        }
        tried += 1;
        if &candidate * &candidate > out.unfactored {
            reached_root = true;
            break;
        }
        let mut rest = out.unfactored.clone();
        let mut e = 0;
        while (&rest % &candidate).is_zero() {
            rest /= &candidate;
            e += 1;
        }
        if e > 0 {
            if oracle::is_prime_exact(&candidate)? {
                out.push(candidate, e);
            } else {
                return Err(Error::Contract(format!(
                    "composite candidate {candidate} divides GF(3, {n}) before its prime factors"
                )));
            }
            if cofactor_is_prime(&out.unfactored)? == Some(true) {
                out.finish(true);
                return Ok(out);
            }
        }
    }
    if tried < budget {
        // the candidate stream ran past the square root
        reached_root = true;
    }
    let prime = match cofactor_is_prime(&out.unfactored)? {
        Some(b) => b,
        None => reached_root,
    };
    out.finish(prime);
    Ok(out)
}

/// Result of the restricted sieve on an ambiguous `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SieveOutcome {
    FactorFound(Natural),
    Exhausted,
    BudgetSpent,
}

/// Trial-divides `R` by `k * 2^n + 1`, `k = 1, 2, ...`, up to `floor(sqrt(R))`.
///
/// Any factor of a composite `R` that passes the base-3 Euler test lies on this
/// progression, so exhausting it below the square root proves `R` prime.
/// Requires `p > 3`, `n > 2`, and that `R` passes [`euler_test`] and
/// [`divides_gf3`].
pub fn sieve_r(c: &ProthCandidate, budget: u64) -> Result<SieveOutcome> {
    if *c.p() <= Natural::from(3u32) || c.n() <= 2 {
        return Err(Error::Contract(format!(
            "sieve needs p > 3 and n > 2, got {c}"
        )));
    }
    if !euler_test(c)? || !divides_gf3(c)? {
        return Err(Error::Contract(format!(
            "{c} must pass the Euler test and divide GF(3, n-1) before sieving"
        )));
    }
    Ok(sieve_progression(c.r(), c.n(), budget))
}

fn sieve_progression(r: &Natural, n: u32, budget: u64) -> SieveOutcome {
    let limit = r.sqrt();
    let step = Natural::one() << n;
    let mut f = &step + 1u32;
    for _ in 0..budget {
        if f > limit {
            return SieveOutcome::Exhausted;
        }
        if (r % &f).is_zero() {
            return SieveOutcome::FactorFound(f);
        }
        f += &step;
    }
    if f > limit {
        SieveOutcome::Exhausted
    } else {
        SieveOutcome::BudgetSpent
    }
}

/// `f mod 2^bits`, for congruence checks on factors.
pub fn low_residue(f: &Natural, bits: u32) -> u64 {
    debug_assert!(bits < 64);
    (f % (Natural::one() << bits)).to_u64().expect("below 2^64")
}
