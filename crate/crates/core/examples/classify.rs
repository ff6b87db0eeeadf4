//! Classify a few `p * 2^n + 1` and show which check settled each one.
//!
//! cargo run -p proth3 --example classify

use proth3::{classify, ProthCandidate};

fn main() -> proth3::Result<()> {
    let cases = [(7u64, 2u32), (5, 3), (5, 2), (13, 4), (43, 2), (3, 2), (3, 3), (19, 6), (1_000_003, 10)];
    for (p, n) in cases {
        let c = ProthCandidate::from_u64(p, n)?;
        let v = classify(&c, 1_000_000)?;
        println!("{:<32} {}", c.to_string(), v.describe(n));
    }
    Ok(())
}
