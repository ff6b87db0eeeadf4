//! 3281 = 17 * 193 divides GF(3, 3) = 6562 and is a base-3 overpseudoprime.
//! Written as 205 * 2^4 + 1 it passes the base-3 Euler test, which is exactly
//! the ambiguous case the restricted sieve exists for.
//!
//! cargo run -p proth3 --example overpseudoprime

use num_traits::One;
use proth3::oracle;
use proth3::{classify, divides_gf3, euler_test, mult_order_3, pow3_tower, sieve_r, Natural, ProthCandidate};

fn main() -> proth3::Result<()> {
    let m = Natural::from(3281u32);
    println!("3^8 mod 3281 = {}", pow3_tower(3, &m)?);
    for f in [17u32, 193, 3281] {
        println!("ord_{f}(3) = {}", mult_order_3(&Natural::from(f), &Natural::one(), 4)?);
    }
    println!("primover: {}", oracle::is_primover_3(&m)?);
    println!("overpseudoprime: {}", oracle::is_overpseudoprime_3(&m)?);

    // 205 is not prime; attesting it anyway drives 3281 through the ambiguous branch
    let c = ProthCandidate::attested(Natural::from(205u32), 4)?;
    println!("euler_test: {}, divides GF(3,3): {}", euler_test(&c)?, divides_gf3(&c)?);
    println!("sieve: {:?}", sieve_r(&c, 100)?);
    println!("classify, budget 100: {}", classify(&c, 100)?.describe(4));
    println!("classify, budget 0:   {}", classify(&c, 0)?.describe(4));
    Ok(())
}
