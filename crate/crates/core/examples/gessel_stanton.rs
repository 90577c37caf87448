// The terminating 7F6 summation, with rational and with ω-deformed parameters.

use supercongruence::arith::{rat, render_rational, Prime};
use supercongruence::hypergeom::{ff1_build, gs_lhs, gs_rhs, GSParams};
use supercongruence::Result;

pub fn run_example() -> Result<()> {
    for (a, b, d, n) in [
        (rat(1, 4), rat(1, 2), rat(1, 4), 2),
        (rat(2, 3), rat(-1, 5), rat(3, 7), 4),
        (rat(1, 3), rat(2, 7), rat(5, 11), 3),
    ] {
        let g = GSParams::new(a.clone(), b.clone(), d.clone(), n)?;
        let (lhs, rhs) = (gs_lhs(&g)?, gs_rhs(&g)?);
        println!(
            "a = {a}, b = {b}, d = {d}, n = {n}: {} = {}",
            render_rational(&lhs),
            render_rational(&rhs)
        );
        assert_eq!(lhs, rhs);
    }

    let p = Prime::new(13)?;
    for alpha in 0..=3 {
        let (lhs, rhs) = ff1_build(p, &rat(alpha, 1))?;
        println!("p = 13, α = {alpha}: sum = {lhs}");
        assert_eq!(lhs, rhs);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
