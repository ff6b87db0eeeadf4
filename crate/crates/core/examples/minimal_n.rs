//! Smallest n with p * 2^n + 1 prime, for every odd prime p in a range.
//!
//! cargo run -p proth3 --example minimal_n -- [p_max] [n_max]

use proth3::search::{scan, SearchConfig};

fn main() -> proth3::Result<()> {
    let mut args = std::env::args().skip(1);
    let p_max: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(200);
    let n_max: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(32);

    let reports = scan(3, p_max, &SearchConfig::new(n_max), 4)?;
    let mut survivors = Vec::new();
    for rep in &reports {
        match (rep.min_n, &rep.r_at_min) {
            (Some(n), Some(r)) => {
                let how = rep.verdict_at_min().map(|v| v.evidence().tag()).unwrap_or("?");
                println!("p = {:>5}  n = {n:>3}  R = {r}  ({how})", rep.p);
            }
            _ => survivors.push(rep.p.clone()),
        }
    }
    println!("{} primes, survivors up to n = {n_max}: {survivors:?}", reports.len());
    Ok(())
}
