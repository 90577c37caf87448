// Splitting u^3 + v^3 p^3 over Q(ω) and reducing into (Z/p^3)[ω].

use supercongruence::arith::{cyclo_reduce, rat, CycloExact, Prime};
use supercongruence::verify::verify_ff2;
use supercongruence::Result;

pub fn run_example() -> Result<()> {
    let (u, v, p) = (rat(2, 3), rat(-5, 2), 7);
    let vp = CycloExact::from_rational(v.clone() * rat(p, 1));
    let w = CycloExact::omega();
    let u_ = CycloExact::from_rational(u.clone());
    let product = (u_.clone() + vp.clone()) * (u_.clone() + vp.clone() * w.clone()) * (u_ + vp * w.clone() * w);
    let expected = CycloExact::from_rational(u.clone() * &u * &u + v.clone() * &v * &v * rat(p * p * p, 1));
    println!("(u+vp)(u+vpω)(u+vpω²) = {product}");
    assert_eq!(product, expected);

    let prime = Prime::new(p as u64)?;
    println!("in (Z/7^3)[ω]: {}", cyclo_reduce(&product, prime, 3)?);

    let report = verify_ff2(prime, &u, &v, 3)?;
    println!("{}", report.text_line(false));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
