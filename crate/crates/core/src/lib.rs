//! Primality of `R = p * 2^n + 1` for prime `p` through a single base-3 Euler test.
//!
//! For an odd prime `p` and `n >= 2`, `3^((R-1)/2) = -1 (mod R)` holds exactly
//! when `R` is prime or `R` is a composite divisor of `GF(3, n-1) = 3^(2^(n-1)) + 1`
//! whose divisors all share the order of 3 (a primover number). The crate
//! provides:
//!
//! - [`modular`]: modular exponentiation, Jacobi symbols, `3^(2^z) mod m` and
//!   orders of 3 with a factored bound;
//! - [`proth`]: the classifier for `p * 2^n + 1`;
//! - [`fermat`]: divisor shapes and factor tables for `GF(3, n)` and the
//!   restricted sieve for ambiguous candidates;
//! - [`search`]: smallest `n` per prime `p` and range scans;
//! - [`oracle`]: independent brute-force ground truth;
//! - [`verify`]: replay of the test against the oracle;
//! - [`report`]: JSON records used by the `proth3` binary.
//!
//! ```
//! use proth3::{classify, Outcome, ProthCandidate};
//!
//! let c = ProthCandidate::from_u64(7, 2).unwrap(); // 29
//! let v = classify(&c, 1_000).unwrap();
//! assert_eq!(v.outcome(), Outcome::Prime);
//! ```

pub mod error;
pub mod factorization;
pub mod fermat;
pub mod modular;
pub mod oracle;
pub mod proth;
pub mod report;
pub mod search;
pub mod verify;

/// Arbitrary-precision non-negative integer.
pub type Natural = num_bigint::BigUint;

pub use error::{Error, Result};
pub use factorization::Factorization;
pub use fermat::{enumerate_candidates, factor_gf3, form_of, gf3, sieve_r, FactorForm, FormKind, SieveOutcome};
pub use modular::{jacobi, mod_pow, mult_order_3, pow3_tower, JacobiValue};
pub use proth::{classify, divides_gf3, euler_test, p3_proth, Evidence, Outcome, ProthCandidate, Verdict};
pub use search::{min_n, scan, SearchConfig, SearchReport};
