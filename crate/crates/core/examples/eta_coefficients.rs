// Coefficients of q ∏ (1 - q^{2n})^4 (1 - q^{4n})^4 at primes.

use supercongruence::arith::{primes_in, reduce_mod};
use supercongruence::eta::{a_p, eta_product_qexp};
use supercongruence::hypergeom::pfq_mod_residue;
use supercongruence::verify::specs;
use supercongruence::Result;

pub fn run_example() -> Result<()> {
    let series = eta_product_qexp(60)?;
    let head: Vec<String> = series.coefficients()[1..=12].iter().map(|c| c.to_string()).collect();
    println!("a_1..a_12: {}", head.join(", "));

    for p in primes_in(3, 60) {
        let ap = a_p(&series, p)?;
        let sum = pfq_mod_residue(&specs::kilbourn(p), p, 3)?;
        let target = reduce_mod(&ap.clone().into(), p, 3)?;
        println!("p = {p:2}: a_p = {ap:6}, 4F3 ≡ {sum} ≡ a_p: {}", sum == target);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
