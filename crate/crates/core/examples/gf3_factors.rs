//! Factor GF(3, n) = 3^(2^n) + 1 for n = 1..5 and show each odd factor's shape.
//!
//! cargo run -p proth3 --example gf3_factors

use num_traits::One;
use proth3::fermat::{enumerate_candidates, factor_gf3, form_of, DEFAULT_GF3_BUDGET};
use proth3::{mult_order_3, Natural};

fn main() -> proth3::Result<()> {
    for n in 1..=5 {
        let fac = factor_gf3(n, DEFAULT_GF3_BUDGET)?;
        println!("GF(3,{n}): {fac}  (complete: {})", fac.complete);
        for f in fac.primes().filter(|f| **f != Natural::from(2u32)) {
            let form = form_of(f, n)?.map(|x| x.to_string()).unwrap_or_else(|| "none".into());
            let order = mult_order_3(f, &Natural::one(), n + 1)?;
            println!("    {f} = {form}, ord(3) = {order}");
        }
    }

    let first: Vec<String> = enumerate_candidates(2, &Natural::from(400u32))
        .map(|c| c.to_string())
        .collect();
    println!("candidate divisors of GF(3,2) up to 400: {}", first.join(", "));
    Ok(())
}
