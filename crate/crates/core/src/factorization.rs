use std::fmt;

use num_traits::One;
use crate::Natural;

/// Prime factors of `target` with multiplicities.
///
/// When `complete` is false the listed primes multiply to a proper divisor of
/// `target` and `unfactored` holds the remaining cofactor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub target: Natural,
    pub prime_factors: Vec<(Natural, u32)>,
    pub unfactored: Natural,
    pub complete: bool,
}

impl Factorization {
    pub(crate) fn new(target: Natural) -> Self {
        Factorization {
            unfactored: target.clone(),
            target,
            prime_factors: Vec::new(),
            complete: false,
        }
    }

    /// Records `prime` dividing the cofactor `multiplicity` times.
    pub(crate) fn push(&mut self, prime: Natural, multiplicity: u32) {
        for _ in 0..multiplicity {
            self.unfactored /= &prime;
        }
        match self.prime_factors.iter_mut().find(|(q, _)| *q == prime) {
            Some((_, e)) => *e += multiplicity,
            None => {
                self.prime_factors.push((prime, multiplicity));
                self.prime_factors.sort();
            }
        }
    }

    pub(crate) fn finish(&mut self, cofactor_is_prime: bool) {
        if cofactor_is_prime && !self.unfactored.is_one() {
            let q = self.unfactored.clone();
            self.push(q, 1);
        }
        self.complete = self.unfactored.is_one();
    }

    /// Product of the listed prime powers.
    pub fn product(&self) -> Natural {
        self.prime_factors
            .iter()
            .fold(Natural::one(), |acc, (q, e)| acc * q.pow(*e))
    }

    pub fn primes(&self) -> impl Iterator<Item = &Natural> {
        self.prime_factors.iter().map(|(q, _)| q)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = ", self.target)?;
        let mut first = true;
        for (q, e) in &self.prime_factors {
            if !first {
                f.write_str(" · ")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{q}")?;
            } else {
                write!(f, "{q}^{e}")?;
            }
        }
        if !self.unfactored.is_one() {
            if !first {
                f.write_str(" · ")?;
            }
            write!(f, "({})", self.unfactored)?;
        }
        Ok(())
    }
}
