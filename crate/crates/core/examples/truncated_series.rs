// A truncated 7F6: exact value, p-adic value and residue.

use supercongruence::arith::{render_rational, Prime};
use supercongruence::hypergeom::{pfq_exact, pfq_mod, pfq_mod_residue, PfqSpec};
use supercongruence::Result;

pub fn run_example() -> Result<()> {
    // sum_k (-1)^k (4k+1) ((1/2)_k / k!)^3, written as a 4F3 with the 5/4 : 1/4 trick
    let spec = PfqSpec::from_pairs(&[(1, 2), (1, 2), (1, 2), (5, 4)], &[(1, 1), (1, 1), (1, 4)], (-1, 1), 2);
    let exact = pfq_exact(&spec)?;
    println!("exact partial sum through k = 2: {}", render_rational(&exact));

    let p = Prime::new(5)?;
    println!("as a 5-adic number: {}", pfq_mod(&spec, p, 3)?);
    println!("mod 5^3: {}", pfq_mod_residue(&spec, p, 3)?);

    // terms with p in the denominator cancel against later ones
    let p = Prime::new(7)?;
    let spec = PfqSpec::from_pairs(&[(1, 2), (1, 2), (1, 2), (5, 4)], &[(1, 1), (1, 1), (1, 4)], (-1, 1), 3);
    println!("p = 7: {} (mod 7^3), expected -7 ≡ 336", pfq_mod_residue(&spec, p, 3)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
