// Every check over a small prime range, emitted as JSON lines.

use supercongruence::arith::primes_in;
use supercongruence::verify::{sweep, CongruenceId, SweepConfig};
use supercongruence::Result;

pub fn run_example() -> Result<()> {
    let mut cfg = SweepConfig::new(CongruenceId::ALL.to_vec(), primes_in(3, 17));
    cfg.gs_cases = 12;
    cfg.law_samples = 20;
    let reports = sweep(&cfg);
    for r in reports.iter().take(5) {
        println!("{}", serde_json::to_string(&r.record(false)).expect("serializable"));
    }
    let failed = reports.iter().filter(|r| !r.holds).count();
    println!("{} reports, {failed} failed", reports.len());
    assert_eq!(failed, 0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
