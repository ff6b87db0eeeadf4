//! The base-3 extension of Proth's test for `R = p * 2^n + 1`.
//!
//! Passing `3^((R - 1)/2) = -1 (mod R)` leaves two possibilities: `R` is prime,
//! or `R` is a composite divisor of `GF(3, n - 1) = 3^(2^(n-1)) + 1` all of whose
//! divisors share the order of 3 (primover). [`classify`] closes the gap with
//! cheap sufficient conditions first and a restricted trial-division sieve last.

use std::fmt;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fermat::{sieve_r, SieveOutcome};
use crate::modular::{jacobi, mod_pow, pow3_tower, JacobiValue};
use crate::{oracle, Natural};

/// A validated `(p, n, R = p * 2^n + 1)` triple with `p` an odd prime.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProthCandidate {
    p: Natural,
    n: u32,
    r: Natural,
}

impl ProthCandidate {
    /// Builds a candidate, checking `p` with the oracle.
    ///
    /// Multipliers above the oracle's exact range are refused with
    /// [`Error::AttestationRequired`]; use [`ProthCandidate::attested`] for them.
    pub fn new(p: Natural, n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("exponent n must be >= 1".into()));
        }
        match oracle::is_prime_exact(&p) {
            Ok(true) if p.is_odd() => Ok(Self::build(p, n)),
            Ok(_) => Err(Error::NotOddPrime(p)),
            Err(Error::OutOfOracleRange { .. }) => Err(Error::AttestationRequired(p)),
            Err(e) => Err(e),
        }
    }

    /// Builds a candidate whose multiplier the caller vouches is prime.
    ///
    /// Only parity is checked; every verdict depends on the attestation being true.
    pub fn attested(p: Natural, n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("exponent n must be >= 1".into()));
        }
        if p.is_even() || p < Natural::from(3u32) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(Self::build(p, n))
    }

    pub fn from_u64(p: u64, n: u32) -> Result<Self> {
        Self::new(Natural::from(p), n)
    }

    fn build(p: Natural, n: u32) -> Self {
        let r = (&p << n) + 1u32;
        ProthCandidate { p, n, r }
    }

    pub fn p(&self) -> &Natural {
        &self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `p * 2^n + 1`.
    pub fn r(&self) -> &Natural {
        &self.r
    }

    pub fn r_is_divisible_by_three(&self) -> bool {
        (&self.r % 3u32).is_zero()
    }

    /// `2^n > p`: the classical Proth condition.
    pub fn satisfies_proth_bound(&self) -> bool {
        self.p.bits() <= u64::from(self.n)
    }
}

impl fmt::Display for ProthCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}+1 = {}", self.p, self.n, self.r)
    }
}

/// Three-way outcome of the classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Composite,
    Prime,
    Primover,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Composite => "composite",
            Outcome::Prime => "prime",
            Outcome::Primover => "primover",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Why a verdict was reached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Evidence {
    DivisibleByThree,
    /// `base^((R-1)/2) mod R` came out as `residue`, not `R - 1`.
    EulerWitness { base: u32, residue: Natural },
    ProthBound,
    MagnitudeBound,
    NonDivisorOfGF,
    SieveExhausted,
    SieveFactorFound(Natural),
    GFDivisorUnresolved,
    /// Decided by the oracle's exact primality check (only used for `n = 1`).
    OracleExact,
}

impl Evidence {
    pub fn tag(&self) -> &'static str {
        match self {
            Evidence::DivisibleByThree => "divisible_by_three",
            Evidence::EulerWitness { .. } => "euler_witness",
            Evidence::ProthBound => "proth_bound",
            Evidence::MagnitudeBound => "magnitude_bound",
            Evidence::NonDivisorOfGF => "non_divisor_of_gf",
            Evidence::SieveExhausted => "sieve_exhausted",
            Evidence::SieveFactorFound(_) => "sieve_factor_found",
            Evidence::GFDivisorUnresolved => "gf_divisor_unresolved",
            Evidence::OracleExact => "oracle_exact",
        }
    }

    /// Factor or residue backing the evidence, if any.
    pub fn witness(&self) -> Option<Natural> {
        match self {
            Evidence::DivisibleByThree => Some(Natural::from(3u32)),
            Evidence::EulerWitness { residue, .. } => Some(residue.clone()),
            Evidence::SieveFactorFound(f) => Some(f.clone()),
            _ => None,
        }
    }
}

/// Classification of one candidate.
///
/// Constructed only inside the crate, so the outcome always agrees with the
/// evidence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Verdict {
    outcome: Outcome,
    evidence: Evidence,
    passed_euler: bool,
}

impl Verdict {
    fn composite(evidence: Evidence) -> Self {
        debug_assert!(matches!(
            evidence,
            Evidence::DivisibleByThree
                | Evidence::EulerWitness { .. }
                | Evidence::SieveFactorFound(_)
                | Evidence::OracleExact
        ));
        let passed_euler = matches!(evidence, Evidence::SieveFactorFound(_));
        Verdict {
            outcome: Outcome::Composite,
            evidence,
            passed_euler,
        }
    }

    fn prime(evidence: Evidence, passed_euler: bool) -> Self {
        debug_assert!(matches!(
            evidence,
            Evidence::ProthBound
                | Evidence::MagnitudeBound
                | Evidence::NonDivisorOfGF
                | Evidence::SieveExhausted
                | Evidence::OracleExact
        ));
        Verdict {
            outcome: Outcome::Prime,
            evidence,
            passed_euler,
        }
    }

    fn primover() -> Self {
        Verdict {
            outcome: Outcome::Primover,
            evidence: Evidence::GFDivisorUnresolved,
            passed_euler: true,
        }
    }

    /// Verdict for `n = 1`, decided exactly rather than by the base-3 test.
    pub(crate) fn exact(r: &Natural) -> Result<Self> {
        if (r % 3u32).is_zero() && *r != Natural::from(3u32) {
            return Ok(Verdict::composite(Evidence::DivisibleByThree));
        }
        Ok(if oracle::is_prime_exact(r)? {
            Verdict::prime(Evidence::OracleExact, false)
        } else {
            Verdict::composite(Evidence::OracleExact)
        })
    }

    pub fn outcome(&self) -> Outcome {
        self.outcome
    }

    pub fn evidence(&self) -> &Evidence {
        &self.evidence
    }

    pub fn passed_euler(&self) -> bool {
        self.passed_euler
    }

    pub fn is_prime(&self) -> bool {
        self.outcome == Outcome::Prime
    }
}

impl Verdict {
    /// Human-readable verdict with the `GF(3, n-1)` index spelled out.
    pub fn describe(&self, n: u32) -> String {
        let mut out = String::new();
        self.write(&mut out, Some(n)).expect("writing to a String");
        out
    }

    fn write(&self, f: &mut impl fmt::Write, n: Option<u32>) -> fmt::Result {
        write!(f, "{} (", self.outcome)?;
        match &self.evidence {
            Evidence::DivisibleByThree => f.write_str("divisible by 3")?,
            Evidence::EulerWitness { base, residue } => {
                write!(f, "Euler witness: {base}^((R-1)/2) = {residue}")?
            }
            Evidence::ProthBound => f.write_str("Proth bound 2^n > p")?,
            Evidence::MagnitudeBound => f.write_str("magnitude bound p > (3^(2^n)+1)/2")?,
            Evidence::NonDivisorOfGF => match n {
                Some(n) => write!(f, "non-divisor of GF(3,{})", n.saturating_sub(1))?,
                None => f.write_str("non-divisor of GF(3,n-1)")?,
            },
            Evidence::SieveExhausted => f.write_str("no factor k*2^n+1 below sqrt(R)")?,
            Evidence::SieveFactorFound(q) => write!(f, "factor {q}")?,
            Evidence::GFDivisorUnresolved => f.write_str("divides GF(3,n-1), sieve budget spent")?,
            Evidence::OracleExact => f.write_str("exact check")?,
        }
        f.write_str(")")
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, None)
    }
}

fn screen(c: &ProthCandidate) -> Result<()> {
    if c.n < 2 {
        return Err(Error::ExponentOutOfScope(c.n));
    }
    if c.r_is_divisible_by_three() {
        return Err(Error::DivisibleByThree(c.r.clone()));
    }
    Ok(())
}

fn euler_residue(c: &ProthCandidate, base: u32) -> Result<Natural> {
    let half = (&c.r - 1u32) >> 1u32;
    mod_pow(&Natural::from(base), &half, &c.r)
}

/// `3^((R-1)/2) = -1 (mod R)`.
///
/// Needs `n >= 2` and `3 ∤ R`.
pub fn euler_test(c: &ProthCandidate) -> Result<bool> {
    screen(c)?;
    Ok(euler_residue(c, 3)? + 1u32 == c.r)
}

/// Whether `R` divides `GF(3, n - 1)`, checked as `3^(2^(n-1)) = -1 (mod R)`.
pub fn divides_gf3(c: &ProthCandidate) -> Result<bool> {
    screen(c)?;
    Ok(pow3_tower(u64::from(c.n - 1), &c.r)? + 1u32 == c.r)
}

// log2(3) > 1.58
const LOG2_3_LOWER_PERCENT: u64 = 158;

/// `p > (3^(2^n) + 1) / 2`, evaluated without building `3^(2^n)` unless `p`
/// is already about that large.
pub fn exceeds_magnitude_bound(p: &Natural, n: u32) -> bool {
    let two_n = match 1u64.checked_shl(n) {
        Some(v) if n < 63 => v,
        _ => return false,
    };
    if two_n > 64 {
        let guard_bits = LOG2_3_LOWER_PERCENT * two_n / 100;
        if p.bits() < guard_bits {
            return false;
        }
    }
    let bound = (Natural::from(3u32).pow(two_n as u32) + 1u32) >> 1u32;
    *p > bound
}

/// Default sieve budget, in candidate divisors tried.
pub const DEFAULT_SIEVE_BUDGET: u64 = 1_000_000;

/// Full classification of `R = p * 2^n + 1`, `n >= 2`.
///
/// Checks run cheapest first: divisibility by 3, the base-3 Euler test, the
/// Proth bound `2^n > p`, the magnitude bound, the `GF(3, n-1)` divisor check,
/// and finally a sieve over divisors `k * 2^n + 1` limited to `sieve_budget`
/// candidates. `p = 3` is routed to [`p3_proth`].
pub fn classify(c: &ProthCandidate, sieve_budget: u64) -> Result<Verdict> {
    if c.n < 2 {
        return Err(Error::ExponentOutOfScope(c.n));
    }
    if c.p == Natural::from(3u32) {
        return p3_proth(c.n);
    }
    if c.r_is_divisible_by_three() {
        return Ok(Verdict::composite(Evidence::DivisibleByThree));
    }
    let residue = euler_residue(c, 3)?;
    if &residue + 1u32 != c.r {
        return Ok(Verdict::composite(Evidence::EulerWitness { base: 3, residue }));
    }
    if c.satisfies_proth_bound() {
        return Ok(Verdict::prime(Evidence::ProthBound, true));
    }
    if exceeds_magnitude_bound(&c.p, c.n) {
        return Ok(Verdict::prime(Evidence::MagnitudeBound, true));
    }
    if !divides_gf3(c)? {
        return Ok(Verdict::prime(Evidence::NonDivisorOfGF, true));
    }
    if c.n == 2 {
        return Ok(Verdict::primover());
    }
    Ok(match sieve_r(c, sieve_budget)? {
        SieveOutcome::FactorFound(f) => Verdict::composite(Evidence::SieveFactorFound(f)),
        SieveOutcome::Exhausted => Verdict::prime(Evidence::SieveExhausted, true),
        SieveOutcome::BudgetSpent => Verdict::primover(),
    })
}

/// Classical Proth test for `R = 3 * 2^n + 1`, `n >= 2`.
///
/// Uses the smallest base `a >= 2` with `(a / R) = -1`. A base sharing a
/// factor with `R` is itself a witness of compositeness, which also settles
/// perfect squares such as 25 and 49 where no such `a` exists.
pub fn p3_proth(n: u32) -> Result<Verdict> {
    if n < 2 {
        return Err(Error::ExponentOutOfScope(n));
    }
    let c = ProthCandidate::build(Natural::from(3u32), n);
    let mut a: u32 = 2;
    loop {
        match jacobi(&Natural::from(a), &c.r)? {
            JacobiValue::MinusOne => break,
            JacobiValue::Zero => {
                let residue = euler_residue(&c, a)?;
                return Ok(Verdict::composite(Evidence::EulerWitness { base: a, residue }));
            }
            JacobiValue::One => a += 1,
        }
    }
    let residue = euler_residue(&c, a)?;
    if &residue + 1u32 == c.r {
        Ok(Verdict::prime(Evidence::ProthBound, true))
    } else {
        Ok(Verdict::composite(Evidence::EulerWitness { base: a, residue }))
    }
}

/// `R mod 3` and `(3 / R)` for a candidate with `3 ∤ R`.
pub fn residue_profile(c: &ProthCandidate) -> Result<(u32, JacobiValue)> {
    screen(c)?;
    let r_mod_3 = (&c.r % 3u32).to_u32().expect("residue below 3");
    Ok((r_mod_3, jacobi(&Natural::from(3u32), &c.r)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cand(p: u64, n: u32) -> ProthCandidate {
        ProthCandidate::from_u64(p, n).unwrap()
    }

    #[test]
    fn candidate_construction() {
        assert_eq!(cand(5, 3).r(), &Natural::from(41u32));
        assert!(matches!(ProthCandidate::from_u64(9, 2), Err(Error::NotOddPrime(_))));
        assert!(matches!(ProthCandidate::from_u64(2, 2), Err(Error::NotOddPrime(_))));
        assert!(ProthCandidate::from_u64(5, 0).is_err());
        let big = Natural::from(u64::MAX) * 1000u32 + 1u32;
        assert!(matches!(
            ProthCandidate::new(big.clone(), 2),
            Err(Error::AttestationRequired(_))
        ));
        assert!(ProthCandidate::attested(big, 2).is_ok());
        assert!(ProthCandidate::attested(Natural::from(4u32), 2).is_err());
    }

    #[test]
    fn euler_test_examples() {
        assert!(euler_test(&cand(5, 3)).unwrap());
        assert!(euler_test(&cand(7, 2)).unwrap());
        assert!(euler_test(&cand(13, 2)).unwrap());
        // 5 * 2^4 + 1 = 81 is screened; 7 * 2^3 + 1 = 57 too
        assert!(matches!(euler_test(&cand(5, 2)), Err(Error::DivisibleByThree(_))));
        assert!(matches!(euler_test(&cand(5, 1)), Err(Error::ExponentOutOfScope(1))));
    }

    #[test]
    fn euler_test_rejects_smallest_composite() {
        let mut smallest: Option<(u64, u32, u64)> = None;
        for p in (5..200u64).filter(|&p| oracle::is_prime_u64(p)) {
            for n in 2..10 {
                let r = p * (1 << n) + 1;
                if r % 3 != 0 && !oracle::is_prime_u64(r) && smallest.is_none_or(|s| r < s.2) {
                    smallest = Some((p, n, r));
                }
            }
        }
        let (p, n, r) = smallest.unwrap();
        assert_eq!((p, n, r), (19, 2, 77));
        assert!(!euler_test(&cand(p, n)).unwrap());
    }

    #[test]
    fn divides_gf3_examples() {
        assert!(divides_gf3(&cand(5, 3)).unwrap());
        assert!(!divides_gf3(&cand(7, 2)).unwrap());
        assert!(matches!(divides_gf3(&cand(5, 2)), Err(Error::DivisibleByThree(_))));
    }

    #[test]
    fn classify_examples() {
        let v = classify(&cand(7, 2), 0).unwrap();
        assert_eq!(v.outcome(), Outcome::Prime);
        assert_eq!(v.evidence(), &Evidence::NonDivisorOfGF);
        let v = classify(&cand(5, 3), 0).unwrap();
        assert_eq!(v.evidence(), &Evidence::ProthBound);
        let v = classify(&cand(5, 2), 0).unwrap();
        assert_eq!(v.outcome(), Outcome::Composite);
        assert_eq!(v.evidence(), &Evidence::DivisibleByThree);
        assert!(!v.passed_euler());
        let v = classify(&cand(11, 2), 0).unwrap();
        assert_eq!(v.evidence(), &Evidence::DivisibleByThree);
        assert!(matches!(classify(&cand(7, 1), 0), Err(Error::ExponentOutOfScope(1))));
    }

    #[test]
    fn classify_euler_witness_carries_residue() {
        // 11 * 2^4 + 1 = 177 = 3 * 59, so use 13 * 2^4 + 1 = 209 = 11 * 19
        let c = cand(13, 4);
        let v = classify(&c, 0).unwrap();
        assert_eq!(v.outcome(), Outcome::Composite);
        let expected = Natural::from(3u32).modpow(&Natural::from(104u32), &Natural::from(209u32));
        assert_eq!(v.evidence().witness(), Some(expected));
    }

    #[test]
    fn magnitude_bound() {
        // (3^4 + 1) / 2 = 41
        assert!(exceeds_magnitude_bound(&Natural::from(43u32), 2));
        assert!(!exceeds_magnitude_bound(&Natural::from(41u32), 2));
        // (3^8 + 1) / 2 = 3281
        assert!(exceeds_magnitude_bound(&Natural::from(3299u32), 3));
        assert!(!exceeds_magnitude_bound(&Natural::from(3271u32), 3));
        assert!(!exceeds_magnitude_bound(&Natural::from(u64::MAX), 7));
        assert!(!exceeds_magnitude_bound(&Natural::from(u64::MAX), 200));
        let huge = Natural::from(3u32).pow(128);
        assert!(exceeds_magnitude_bound(&huge, 7));
        assert!(!exceeds_magnitude_bound(&(&huge >> 1u32), 7));
    }

    #[test]
    fn classify_magnitude_path() {
        // 47 * 4 + 1 = 189 divisible by 3; 43 * 4 + 1 = 173 prime, 43 > 41
        let v = classify(&cand(43, 2), 0).unwrap();
        assert_eq!(v.evidence(), &Evidence::MagnitudeBound);
        assert!(oracle::is_prime_u64(173));
    }

    #[test]
    fn p3_route() {
        let v = p3_proth(2).unwrap();
        assert_eq!(v.outcome(), Outcome::Prime);
        assert_eq!(v.evidence(), &Evidence::ProthBound);
        assert_eq!(p3_proth(3).unwrap().outcome(), Outcome::Composite);
        assert_eq!(p3_proth(4).unwrap().outcome(), Outcome::Composite);
        assert!(p3_proth(1).is_err());
        for n in 2..40 {
            let r = 3u64 * (1 << n) + 1;
            assert_eq!(p3_proth(n).unwrap().is_prime(), oracle::is_prime_u64(r), "n = {n}");
            assert_eq!(classify(&cand(3, n), 0).unwrap(), p3_proth(n).unwrap());
        }
    }

    #[test]
    fn verdict_display() {
        assert_eq!(
            classify(&cand(7, 2), 0).unwrap().describe(2),
            "prime (non-divisor of GF(3,1))"
        );
        assert_eq!(classify(&cand(5, 2), 0).unwrap().to_string(), "composite (divisible by 3)");
    }
}
