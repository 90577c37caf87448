// Morita's p-adic Gamma function at a few rational arguments.

use supercongruence::arith::{rat, Prime};
use supercongruence::gamma::{gamma_p, gamma_p_batch, GammaQuery};
use supercongruence::Result;

pub fn run_example() -> Result<()> {
    let p = Prime::new(5)?;
    for x in [rat(0, 1), rat(1, 1), rat(2, 1), rat(1, 2), rat(1, 4), rat(-3, 7)] {
        let q = GammaQuery::new(&x, p, 3)?;
        println!("Γ_5({x}) ≡ {} (mod 125), m = {}", gamma_p(&q), q.representative());
    }

    // one sweep serves every argument at the same precision
    let p = Prime::new(13)?;
    let xs = [rat(1, 4), rat(3, 4), rat(1, 2)];
    let g = gamma_p_batch(p, 4, &xs)?;
    let reflection = &g[0] * &g[1];
    println!("Γ_13(1/4) Γ_13(3/4) ≡ {} (mod 13^4)", reflection.centered());
    println!("Γ_13(1/2)^2 ≡ {} (mod 13^4)", g[2].pow(2).centered());
    assert_eq!(reflection.centered(), 1.into());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
