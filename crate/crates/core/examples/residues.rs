//! For prime p > 3 and 3 ∤ R, R = p * 2^n + 1 is 2 mod 3 and (3 / R) = -1,
//! so 3 is a quadratic non-residue of every prime R.
//!
//! cargo run -p proth3 --example residues

use proth3::modular::{jacobi, JacobiValue};
use proth3::search::odd_primes;
use proth3::{Natural, ProthCandidate};

fn main() -> proth3::Result<()> {
    let three = Natural::from(3u32);
    let mut counts = [0usize; 3];
    for p in odd_primes(5, 500) {
        for n in 2..=16 {
            let c = ProthCandidate::from_u64(p, n)?;
            if c.r_is_divisible_by_three() {
                counts[0] += 1;
                continue;
            }
            match jacobi(&three, c.r())? {
                JacobiValue::MinusOne => counts[1] += 1,
                other => {
                    counts[2] += 1;
                    println!("unexpected (3/R) = {other} for {c}");
                }
            }
        }
    }
    println!("3 | R: {}, (3/R) = -1: {}, other: {}", counts[0], counts[1], counts[2]);
    Ok(())
}
