//! Replay the base-3 test against the brute-force oracle.
//!
//! cargo run --release -p proth3 --example verify_range -- [p_max] [n_max] [workers]

use proth3::verify::{run, VerifyConfig};

fn main() -> proth3::Result<()> {
    let mut args = std::env::args().skip(1);
    let p_max = args.next().and_then(|s| s.parse().ok()).unwrap_or(1000);
    let n_max = args.next().and_then(|s| s.parse().ok()).unwrap_or(20);
    let workers = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);

    let summary = run(&VerifyConfig::new(p_max, n_max).workers(workers))?;
    println!("{summary}");
    if !summary.is_clean() {
        std::process::exit(1);
    }
    Ok(())
}
