//! Brute-force ground truth.
//!
//! The oracle works on machine words with its own `u128` modular arithmetic and
//! shares no code with [`crate::modular`], so checks built on top of it stay
//! independent of the classifier they validate.

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::Natural;

/// Largest integer for which [`is_prime_exact`] answers unconditionally.
///
/// The strong-probable-prime battery over the first twelve primes has no
/// strong pseudoprime below 3.3 * 10^24, which covers every `u64`.
pub const EXACT_BOUND: u64 = u64::MAX;

/// Default number of trial divisors the oracle will try before giving up.
pub const DEFAULT_FACTOR_BUDGET: u64 = 20_000_000;

const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// The range in which oracle answers are exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleRange {
    pub exact_bound: Natural,
}

impl Default for OracleRange {
    fn default() -> Self {
        OracleRange {
            exact_bound: Natural::from(EXACT_BOUND),
        }
    }
}

impl OracleRange {
    pub fn contains(&self, m: &Natural) -> bool {
        *m <= self.exact_bound
    }
}

fn to_word(m: &Natural) -> Result<u64> {
    m.to_u64().ok_or_else(|| Error::OutOfOracleRange {
        value: m.clone(),
        bound: Natural::from(EXACT_BOUND),
    })
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn strong_probable_prime(m: u64, a: u64) -> bool {
    let d_twos = (m - 1).trailing_zeros();
    let d = (m - 1) >> d_twos;
    let mut x = pow_mod(a, d, m);
    if x == 1 || x == m - 1 {
        return true;
    }
    for _ in 1..d_twos {
        x = mul_mod(x, x, m);
        if x == m - 1 {
            return true;
        }
    }
    false
}

/// Exact primality for machine words.
pub fn is_prime_u64(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    for &q in &WITNESSES {
        if m == q {
            return true;
        }
        if m.is_multiple_of(q) {
            return false;
        }
    }
    if m < 41 * 41 {
        return true;
    }
    WITNESSES.iter().all(|&a| strong_probable_prime(m, a))
}

/// Exact primality of `m`; refuses anything above [`EXACT_BOUND`].
pub fn is_prime_exact(m: &Natural) -> Result<bool> {
    Ok(is_prime_u64(to_word(m)?))
}

/// Trial divisors 2, 3, then 6k - 1 and 6k + 1.
fn trial_divisors() -> impl Iterator<Item = u64> {
    [2u64, 3]
        .into_iter()
        .chain((1u64..).flat_map(|k| [6 * k - 1, 6 * k + 1]))
}

fn factorize_word(m: u64, budget: u64) -> Factorization {
    let mut out = Factorization::new(Natural::from(m));
    let mut rest = m;
    let mut reached_root = false;
    for d in trial_divisors().take(budget.min(usize::MAX as u64) as usize) {
        if (d as u128) * (d as u128) > rest as u128 {
            reached_root = true;
            break;
        }
        let mut e = 0;
        while rest.is_multiple_of(d) {
            rest /= d;
            e += 1;
        }
        if e > 0 {
            out.push(Natural::from(d), e);
        }
    }
    let cofactor_prime = rest > 1 && (reached_root || is_prime_u64(rest));
    out.finish(cofactor_prime);
    out
}

fn factorize_big(m: &Natural, budget: u64) -> Factorization {
    let mut out = Factorization::new(m.clone());
    let mut rest = m.clone();
    let mut reached_root = false;
    for d in trial_divisors().take(budget.min(usize::MAX as u64) as usize) {
        if let Some(small) = rest.to_u64() {
            // finish on the fast path once the cofactor fits a word
            let tail = factorize_word(small, budget);
            for (q, e) in tail.prime_factors {
                out.push(q, e);
            }
            out.finish(false);
            return out;
        }
        let d_big = Natural::from(d);
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&d_big);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.push(d_big.clone(), e);
        }
        if &d_big * &d_big > rest {
            reached_root = true;
            break;
        }
    }
    out.finish(reached_root && rest > Natural::from(1u32));
    out
}

/// Trial-division factorization of `m >= 2`, trying at most `budget` divisors.
///
/// A cofactor left over after the budget is accepted as prime only when it is
/// within the exact range and passes [`is_prime_exact`].
pub fn factorize(m: &Natural, budget: u64) -> Result<Factorization> {
    if *m < Natural::from(2u32) {
        return Err(Error::InvalidArgument(format!(
            "factorize needs m >= 2, got {m}"
        )));
    }
    Ok(match m.to_u64() {
        Some(w) => factorize_word(w, budget),
        None => factorize_big(m, budget),
    })
}

/// Multiplicative order of 3 modulo `q^e` for a prime `q != 3`.
fn order_of_3_mod_prime_power(q: u64, e: u32) -> Result<u64> {
    let modulus = q.pow(e);
    if modulus == 2 {
        return Ok(1);
    }
    let phi = q.pow(e - 1) * (q - 1);
    let phi_factors = factorize_word(phi, DEFAULT_FACTOR_BUDGET);
    if !phi_factors.complete {
        return Err(Error::IncompleteFactorization(Natural::from(phi)));
    }
    let mut order = phi;
    for (r, _) in &phi_factors.prime_factors {
        let r = r.to_u64().expect("factor of a word fits a word");
        while order.is_multiple_of(r) && pow_mod(3, order / r, modulus) == 1 {
            order /= r;
        }
    }
    Ok(order)
}

/// Multiplicative orders of 3 modulo every prime-power divisor of `m`.
pub fn prime_power_orders(m: &Natural, budget: u64) -> Result<Vec<(u64, u32, u64)>> {
    let w = to_word(m)?;
    if w % 3 == 0 {
        return Err(Error::DivisibleByThree(m.clone()));
    }
    let fac = factorize_word(w, budget);
    if !fac.complete {
        return Err(Error::IncompleteFactorization(m.clone()));
    }
    let mut out = Vec::new();
    for (q, e) in &fac.prime_factors {
        let q = q.to_u64().expect("factor of a word fits a word");
        for i in 1..=*e {
            out.push((q, i, order_of_3_mod_prime_power(q, i)?));
        }
    }
    Ok(out)
}

/// Whether every divisor `d > 1` of `m` has the same multiplicative order of 3.
///
/// Requires `gcd(3, m) = 1` and a complete factorization within the default
/// budget; otherwise the oracle refuses.
pub fn is_primover_3(m: &Natural) -> Result<bool> {
    is_primover_3_with_budget(m, DEFAULT_FACTOR_BUDGET)
}

pub fn is_primover_3_with_budget(m: &Natural, budget: u64) -> Result<bool> {
    if *m < Natural::from(2u32) {
        return Err(Error::InvalidArgument(format!("primover needs m >= 2, got {m}")));
    }
    let orders = prime_power_orders(m, budget)?;
    Ok(orders.windows(2).all(|w| w[0].2 == w[1].2))
}

/// Composite and primover. Multiples of 3 are screened out as `false`.
pub fn is_overpseudoprime_3(m: &Natural) -> Result<bool> {
    let w = to_word(m)?;
    if w % 3 == 0 || is_prime_u64(w) {
        return Ok(false);
    }
    is_primover_3(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn brute_is_prime(m: u64) -> bool {
        m >= 2 && (2..).take_while(|d| d * d <= m).all(|d| !m.is_multiple_of(d))
    }

    fn brute_order(m: u64) -> u64 {
        let mut x = 3 % m;
        let mut e = 1;
        while x != 1 {
            x = x * 3 % m;
            e += 1;
        }
        e
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime_exact(&nat(41)).unwrap());
        assert!(!is_prime_exact(&nat(3281)).unwrap());
        assert!(is_prime_exact(&nat(21523361)).unwrap());
        assert!(brute_is_prime(21523361));
    }

    #[test]
    fn primality_matches_brute_force() {
        for m in 0..20_000u64 {
            assert_eq!(is_prime_u64(m), brute_is_prime(m), "{m}");
        }
    }

    #[test]
    fn strong_pseudoprimes_are_rejected() {
        // strong pseudoprimes to several small bases
        for m in [2047u64, 1373653, 25326001, 3215031751, 2152302898747, 3474749660383, 341550071728321, 3825123056546413051] {
            assert!(!is_prime_u64(m), "{m}");
        }
        assert!(is_prime_u64(18446744073709551557)); // largest 64-bit prime
    }

    #[test]
    fn refuses_above_exact_bound() {
        let big = Natural::from(u64::MAX) + 1u32;
        assert!(matches!(is_prime_exact(&big), Err(Error::OutOfOracleRange { .. })));
        assert!(OracleRange::default().contains(&nat(u64::MAX)));
        assert!(!OracleRange::default().contains(&big));
    }

    #[test]
    fn factorize_examples() {
        let f = factorize(&nat(6562), 1000).unwrap();
        assert!(f.complete);
        assert_eq!(f.prime_factors, vec![(nat(2), 1), (nat(17), 1), (nat(193), 1)]);
        let f = factorize(&nat(82), 1000).unwrap();
        assert_eq!(f.prime_factors, vec![(nat(2), 1), (nat(41), 1)]);
        let f = factorize(&nat(1217), 1000).unwrap();
        assert_eq!(f.prime_factors, vec![(nat(1217), 1)]);
        let f = factorize(&nat(1 << 20), 1000).unwrap();
        assert_eq!(f.prime_factors, vec![(nat(2), 20)]);
        assert!(factorize(&nat(1), 10).is_err());
    }

    #[test]
    fn factorize_budget_leaves_cofactor() {
        // 1009 * 1013: neither factor is reached with 5 trial divisors
        let f = factorize(&nat(1009 * 1013), 5).unwrap();
        assert!(!f.complete);
        assert_eq!(f.unfactored, nat(1009 * 1013));
        // prime cofactor is accepted through the exact test
        let f = factorize(&nat(2 * 1_000_003), 3).unwrap();
        assert!(f.complete);
    }

    #[test]
    fn factorize_beyond_a_word() {
        let m = Natural::from(u64::MAX) * 6u32;
        let f = factorize(&m, 100_000).unwrap();
        assert!(f.complete);
        assert_eq!(f.product(), m);
    }

    #[test]
    fn primover_examples() {
        assert_eq!(brute_order(17), 16);
        assert_eq!(brute_order(193), 16);
        assert_eq!(brute_order(3281), 16);
        assert_eq!(brute_order(7), 6);
        assert_eq!(brute_order(13), 3);
        assert!(is_primover_3(&nat(41)).unwrap());
        assert!(is_primover_3(&nat(3281)).unwrap());
        assert!(!is_primover_3(&nat(91)).unwrap());
        assert!(is_overpseudoprime_3(&nat(3281)).unwrap());
        assert!(!is_overpseudoprime_3(&nat(41)).unwrap());
        assert!(!is_overpseudoprime_3(&nat(21)).unwrap());
        assert!(matches!(is_primover_3(&nat(21)), Err(Error::DivisibleByThree(_))));
    }

    #[test]
    fn prime_power_orders_match_brute_force() {
        for m in (2..3000u64).filter(|m| m % 3 != 0) {
            for (q, e, ord) in prime_power_orders(&nat(m), 1000).unwrap() {
                assert_eq!(ord, brute_order(q.pow(e)), "3 mod {q}^{e}");
            }
        }
    }
}
