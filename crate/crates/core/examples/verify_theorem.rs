// The main 7F6 congruence mod p^3 for small primes and every admissible α.

use supercongruence::arith::primes_in;
use supercongruence::verify::{alphas_for, verify_main_batch, AlphaPolicy};
use supercongruence::Result;

pub fn run_example() -> Result<()> {
    for p in primes_in(5, 29) {
        let alphas = alphas_for(p, &AlphaPolicy::All);
        for report in verify_main_batch(p, &alphas)? {
            let report = report?;
            println!("{}", report.text_line(false));
            assert!(report.holds);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
