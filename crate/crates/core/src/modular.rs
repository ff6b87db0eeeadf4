//! Exact modular arithmetic on arbitrary-precision naturals.
//!
//! Everything here is a pure function of its arguments. Quantities such as
//! `3^(2^z)` are never materialized; only residues are.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Natural;

/// Value of a Jacobi symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JacobiValue {
    MinusOne,
    Zero,
    One,
}

impl JacobiValue {
    pub fn as_i8(self) -> i8 {
        match self {
            JacobiValue::MinusOne => -1,
            JacobiValue::Zero => 0,
            JacobiValue::One => 1,
        }
    }

    fn negate(self) -> Self {
        match self {
            JacobiValue::MinusOne => JacobiValue::One,
            JacobiValue::One => JacobiValue::MinusOne,
            JacobiValue::Zero => JacobiValue::Zero,
        }
    }
}

impl fmt::Display for JacobiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_i8())
    }
}

fn check_modulus(modulus: &Natural) -> Result<()> {
    if *modulus < Natural::from(2u32) {
        return Err(Error::InvalidModulus(modulus.clone()));
    }
    Ok(())
}

/// `base^exponent mod modulus`, reduced into `[0, modulus)`.
pub fn mod_pow(base: &Natural, exponent: &Natural, modulus: &Natural) -> Result<Natural> {
    check_modulus(modulus)?;
    Ok(base.modpow(exponent, modulus))
}

/// Jacobi symbol `(a / m)` for odd `m >= 3`.
///
/// Uses the binary reduction: factors of two are pulled out of `a` with the
/// supplementary law for `(2 / m)`, then the arguments are swapped under
/// quadratic reciprocity. No primality assumption is made on `m`.
pub fn jacobi(a: &Natural, m: &Natural) -> Result<JacobiValue> {
    if m.is_even() || *m < Natural::from(3u32) {
        return Err(Error::InvalidArgument(format!(
            "Jacobi symbol needs an odd modulus >= 3, got {m}"
        )));
    }
    let mut a = a % m;
    let mut m = m.clone();
    let mut result = JacobiValue::One;

    while !a.is_zero() {
        let twos = a.trailing_zeros().unwrap_or(0);
        if twos > 0 {
            a >>= twos;
            // (2/m) = -1 iff m = 3, 5 mod 8
            let m_mod_8 = low_bits(&m, 8);
            if twos % 2 == 1 && (m_mod_8 == 3 || m_mod_8 == 5) {
                result = result.negate();
            }
        }
        // both odd now: reciprocity flips the sign iff a = m = 3 mod 4
        if low_bits(&a, 4) == 3 && low_bits(&m, 4) == 3 {
            result = result.negate();
        }
        std::mem::swap(&mut a, &mut m);
        a %= &m;
    }

    if m.is_one() {
        Ok(result)
    } else {
        Ok(JacobiValue::Zero)
    }
}

fn low_bits(x: &Natural, modulus: u64) -> u64 {
    debug_assert!(modulus.is_power_of_two());
    x.iter_u64_digits().next().unwrap_or(0) & (modulus - 1)
}

/// `3^(2^z) mod modulus` by `z` successive squarings.
pub fn pow3_tower(z: u64, modulus: &Natural) -> Result<Natural> {
    check_modulus(modulus)?;
    let mut acc = Natural::from(3u32) % modulus;
    for _ in 0..z {
        if acc.is_zero() || acc.is_one() {
            break;
        }
        acc = (&acc * &acc) % modulus;
    }
    Ok(acc)
}

/// Multiplicative order of 3 modulo `f`, given that it divides `p * 2^n`.
///
/// `p` must be 1 or a prime. The premise `3^(p * 2^n) = 1 (mod f)` is checked
/// and an [`Error::OrderBoundViolated`] is returned when it fails.
pub fn mult_order_3(f: &Natural, p: &Natural, n: u32) -> Result<Natural> {
    check_modulus(f)?;
    if p.is_zero() {
        return Err(Error::InvalidArgument("order bound p must be positive".into()));
    }
    let three = Natural::from(3u32);
    let bound: Natural = p << n;
    if !mod_pow(&three, &bound, f)?.is_one() {
        return Err(Error::OrderBoundViolated {
            modulus: f.clone(),
            exponent: bound,
        });
    }

    let mut order = bound;
    if !p.is_one() {
        let reduced = &order / p;
        if mod_pow(&three, &reduced, f)?.is_one() {
            order = reduced;
        }
    }
    // x = 3^(odd part of order); the remaining order is the number of squarings to reach 1
    let odd_part = &order >> n;
    let mut x = mod_pow(&three, &odd_part, f)?;
    let mut twos = 0u32;
    while !x.is_one() {
        x = (&x * &x) % f;
        twos += 1;
    }
    Ok(odd_part << twos)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn brute_pow(base: u64, exp: u64, m: u64) -> u64 {
        (0..exp).fold(1 % m, |acc, _| acc * base % m)
    }

    #[test]
    fn mod_pow_examples() {
        assert_eq!(brute_pow(3, 20, 41), 40);
        assert_eq!(brute_pow(3, 14, 29), 28);
        assert_eq!(mod_pow(&nat(3), &nat(20), &nat(41)).unwrap(), nat(40));
        assert_eq!(mod_pow(&nat(3), &nat(14), &nat(29)).unwrap(), nat(28));
        for m in 2..50u64 {
            assert_eq!(mod_pow(&nat(17), &nat(0), &nat(m)).unwrap(), nat(1));
        }
    }

    #[test]
    fn invalid_modulus() {
        assert!(matches!(
            mod_pow(&nat(3), &nat(2), &nat(1)),
            Err(Error::InvalidModulus(_))
        ));
        assert!(matches!(pow3_tower(2, &nat(0)), Err(Error::InvalidModulus(_))));
        assert!(mult_order_3(&nat(1), &nat(1), 1).is_err());
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi(&nat(3), &nat(29)).unwrap(), JacobiValue::MinusOne);
        assert_eq!(jacobi(&nat(3), &nat(41)).unwrap(), JacobiValue::MinusOne);
        for m in (5..500u64).step_by(2).filter(|m| m % 3 != 0) {
            assert_eq!(jacobi(&nat(9), &nat(m)).unwrap(), JacobiValue::One);
        }
        assert_eq!(jacobi(&nat(6), &nat(9)).unwrap(), JacobiValue::Zero);
        assert_eq!(jacobi(&nat(0), &nat(3)).unwrap(), JacobiValue::Zero);
        assert_eq!(jacobi(&nat(1), &nat(3)).unwrap(), JacobiValue::One);
    }

    #[test]
    fn jacobi_rejects_even_or_small_modulus() {
        assert!(jacobi(&nat(3), &nat(10)).is_err());
        assert!(jacobi(&nat(3), &nat(1)).is_err());
    }

    #[test]
    fn jacobi_matches_square_table() {
        // Legendre symbol from an exhaustive table of squares
        for m in [29u64, 41, 53, 97, 101] {
            let squares: Vec<u64> = (1..m).map(|x| x * x % m).collect();
            for a in 1..m {
                let expected = if squares.contains(&a) { 1 } else { -1 };
                assert_eq!(jacobi(&nat(a), &nat(m)).unwrap().as_i8(), expected, "({a}/{m})");
            }
        }
    }

    #[test]
    fn pow3_tower_examples() {
        assert_eq!(pow3_tower(1, &nat(10)).unwrap(), nat(9));
        assert_eq!(pow3_tower(1, &nat(29)).unwrap(), nat(9));
        assert_eq!(6562 / 3281, 2);
        assert_eq!(pow3_tower(3, &nat(3281)).unwrap(), nat(3280));
        assert_eq!(pow3_tower(0, &nat(2)).unwrap(), nat(1));
    }

    #[test]
    fn mult_order_examples() {
        let brute_order = |m: u64| (1..).find(|&e| brute_pow(3, e, m) == 1).unwrap();
        assert_eq!(brute_order(41), 8);
        assert_eq!(brute_order(17), 16);
        assert_eq!(brute_order(4), 2);
        assert_eq!(mult_order_3(&nat(41), &nat(5), 3).unwrap(), nat(8));
        assert_eq!(mult_order_3(&nat(17), &nat(7), 5).unwrap(), nat(16));
        assert_eq!(mult_order_3(&nat(4), &nat(1), 1).unwrap(), nat(2));
    }

    #[test]
    fn mult_order_keeps_the_odd_factor() {
        // ord_11(3) = 5
        assert_eq!(mult_order_3(&nat(11), &nat(5), 1).unwrap(), nat(5));
        // ord_7(3) = 6
        assert_eq!(mult_order_3(&nat(7), &nat(3), 1).unwrap(), nat(6));
    }

    #[test]
    fn mult_order_rejects_false_premise() {
        // ord_7(3) = 6 does not divide 5 * 2^3
        assert!(matches!(
            mult_order_3(&nat(7), &nat(5), 3),
            Err(Error::OrderBoundViolated { .. })
        ));
    }
}
