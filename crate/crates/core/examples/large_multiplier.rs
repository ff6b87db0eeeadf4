//! Multipliers beyond the oracle's exact range must be attested prime.
//!
//! With p = 2^127 - 1, small n fall under the magnitude bound
//! p > (3^(2^n) + 1) / 2 and larger n under the base-3 test alone.
//!
//! cargo run -p proth3 --example large_multiplier

use proth3::{classify, Error, Natural, ProthCandidate};

fn main() -> proth3::Result<()> {
    let p: Natural = (Natural::from(1u32) << 127u32) - 1u32;

    match ProthCandidate::new(p.clone(), 2) {
        Err(Error::AttestationRequired(_)) => println!("unattested 2^127-1 refused, as expected"),
        other => println!("unexpected: {other:?}"),
    }

    for n in 2..=200 {
        let c = ProthCandidate::attested(p.clone(), n)?;
        let v = classify(&c, 10_000)?;
        if !c.r_is_divisible_by_three() {
            println!("n = {n:>3}: {}", v.describe(n));
        }
        if v.is_prime() {
            println!("(2^127-1)*2^{n}+1 is prime");
            break;
        }
    }
    Ok(())
}
