//! The congruences are sharp: one power of p higher, they fail. This guards
//! against checks that pass vacuously.

use supercongruence::arith::{primes_in, rat, reduce_mod, BigRational, Prime};
use supercongruence::eta::{a_p, eta_product_qexp};
use supercongruence::hypergeom::pfq_mod_residue;
use supercongruence::verify::{specs, verify_main, verify_zudilin};

fn fails_mod_p4(
    spec_for: impl Fn(Prime) -> supercongruence::hypergeom::PfqSpec<BigRational>,
    target: impl Fn(Prime) -> BigRational,
) -> usize {
    primes_in(5, 43)
        .into_iter()
        .filter(|&p| {
            let lhs = pfq_mod_residue(&spec_for(p), p, 4).unwrap();
            lhs != reduce_mod(&target(p), p, 4).unwrap()
        })
        .count()
}

#[test]
fn fourth_order_congruences_fail() {
    let zudilin = fails_mod_p4(specs::zudilin, |p| {
        let s = if p.modulo(4) == 1 { 1 } else { -1 };
        rat(s * p.get() as i64, 1)
    });
    assert!(zudilin > 0);

    let eta = eta_product_qexp(50).unwrap();
    let kilbourn = fails_mod_p4(specs::kilbourn, |p| a_p(&eta, p).unwrap().into());
    assert!(kilbourn > 0);
}

#[test]
fn mismatched_alpha_is_detected() {
    // the right side depends on α; pairing sides from different α fails
    let p = Prime::new(13).unwrap();
    let r0 = verify_main(p, &rat(0, 1)).unwrap();
    let r1 = verify_main(p, &rat(1, 1)).unwrap();
    assert!(r0.holds && r1.holds);
    assert_ne!(r0.rhs, r1.rhs);
}

#[test]
fn anchors() {
    let p5 = Prime::new(5).unwrap();
    assert_eq!(verify_zudilin(p5).unwrap().lhs, "5");
    assert_eq!(
        pfq_mod_residue(&specs::zudilin(p5), p5, 3).unwrap(),
        reduce_mod(&rat(435, 512), p5, 3).unwrap()
    );
}
