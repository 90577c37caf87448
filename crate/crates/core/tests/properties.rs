use num_bigint::BigInt;
use proptest::prelude::*;
use supercongruence::arith::{
    least_residue, rat, reduce_mod, vp, BigRational, CycloExact, PadicCapped, Prime, PrimePowerResidue,
};
use supercongruence::gamma::{gamma, gamma_p_batch};
use supercongruence::hypergeom::{gs_lhs, gs_rhs, pfq_exact, pfq_mod, GSParams, PfqSpec};

fn prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13, 97]).prop_map(|p| Prime::new(p).unwrap())
}

/// A rational whose denominator is prime to `p`.
fn small_prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13]).prop_map(|p| Prime::new(p).unwrap())
}

fn integral(p: Prime) -> impl Strategy<Value = BigRational> {
    (-1_000_000i64..=1_000_000, 1i64..=10_000)
        .prop_filter("p-unit denominator", move |(_, d)| d % p.get() as i64 != 0)
        .prop_map(|(n, d)| rat(n, d))
}

fn with_two(k_max: u32) -> impl Strategy<Value = (Prime, u32, BigRational, BigRational)> {
    (prime(), 1..=k_max).prop_flat_map(|(p, k)| (Just(p), Just(k), integral(p), integral(p)))
}

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-12i64..=12, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn reduction_is_a_ring_homomorphism((p, k, x, y) in with_two(6)) {
        let (rx, ry) = (reduce_mod(&x, p, k).unwrap(), reduce_mod(&y, p, k).unwrap());
        prop_assert_eq!(reduce_mod(&(&x + &y), p, k).unwrap(), &rx + &ry);
        prop_assert_eq!(reduce_mod(&(&x - &y), p, k).unwrap(), &rx - &ry);
        prop_assert_eq!(reduce_mod(&(&x * &y), p, k).unwrap(), &rx * &ry);
        prop_assert_eq!(reduce_mod(&-x.clone(), p, k).unwrap(), -rx.clone());
        if vp(&y, p) == Some(0) {
            prop_assert_eq!(reduce_mod(&(&x / &y), p, k).unwrap(), &rx * &ry.inverse().unwrap());
        }
    }

    #[test]
    fn residue_ring_axioms((p, k, x, y) in with_two(6), z in -1_000_000i64..=1_000_000) {
        let a = reduce_mod(&x, p, k).unwrap();
        let b = reduce_mod(&y, p, k).unwrap();
        let c = PrimePowerResidue::from_i64(p, k, z).unwrap();
        let zero = PrimePowerResidue::zero(p, k).unwrap();
        let one = PrimePowerResidue::one(p, k).unwrap();
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &zero, a.clone());
        prop_assert_eq!(&a * &one, a.clone());
        prop_assert!((&a + &-a.clone()).is_zero());
        prop_assert!(a.value() < a.modulus());
    }

    #[test]
    fn least_residue_detects_congruence((p, _k, x, y) in with_two(1)) {
        let same = least_residue(&x, p).unwrap() == least_residue(&y, p).unwrap();
        let close = vp(&(&x - &y), p).is_none_or(|v| v >= 1);
        prop_assert_eq!(same, close);
    }

    #[test]
    fn padic_round_trip((p, k, x, y) in with_two(6)) {
        let px = PadicCapped::from_rational(&x, p, 6).unwrap();
        let py = PadicCapped::from_rational(&y, p, 6).unwrap();
        prop_assert_eq!(px.to_residue(k).unwrap(), reduce_mod(&x, p, k).unwrap());
        prop_assert_eq!(px.mul(&py).unwrap().to_residue(k).unwrap(), reduce_mod(&(&x * &y), p, k).unwrap());
        prop_assert_eq!(px.valuation(), vp(&x, p));
        // a sum is never reported with more absolute precision than its inputs
        let sum = px.add(&py).unwrap();
        let cap = [px.absolute_precision(), py.absolute_precision()].into_iter().flatten().min();
        prop_assert!(sum.absolute_precision() <= cap || cap.is_none());
        if let Ok(r) = sum.to_residue(k) {
            prop_assert_eq!(r, reduce_mod(&(&x + &y), p, k).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cube_splits_over_omega(u in small_rational(), v in small_rational(), p in prime()) {
        let pr = rat(p.get() as i64, 1);
        let w = CycloExact::omega();
        let uc = CycloExact::from_rational(u.clone());
        let vpc = CycloExact::from_rational(&v * &pr);
        let lhs = (uc.clone() + vpc.clone()) * (uc.clone() + vpc.clone() * w.clone()) * (uc + vpc * w.clone() * w);
        let rhs = CycloExact::from_rational(&u * &u * &u + &v * &v * &v * &pr * &pr * &pr);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn batch_matches_single(p in small_prime(), k in 1u32..=4, xs in prop::collection::vec((-500i64..=500, 1i64..=30), 1..8)) {
        let xs: Vec<BigRational> = xs
            .into_iter()
            .filter(|(_, d)| d % p.get() as i64 != 0)
            .map(|(n, d)| rat(n, d))
            .collect();
        let batch = gamma_p_batch(p, k, &xs).unwrap();
        for (x, g) in xs.iter().zip(&batch) {
            prop_assert_eq!(g, &gamma(x, p, k).unwrap());
        }
    }

    #[test]
    fn gamma_is_continuous(
        (p, k, x) in (small_prime(), 1u32..=3).prop_flat_map(|(p, k)| (Just(p), Just(k), integral(p))),
        shift in -50i64..=50,
    ) {
        let pk = BigRational::from_integer(BigInt::from(p.get()).pow(k));
        let y = &x + pk * rat(shift, 1);
        prop_assert_eq!(gamma(&x, p, k).unwrap(), gamma(&y, p, k).unwrap());
    }

    #[test]
    fn terminating_summation(a in small_rational(), b in small_rational(), d in small_rational(), n in 0usize..=10) {
        let Ok(g) = GSParams::new(a, b, d, n) else { return Ok(()) };
        let (Ok(lhs), Ok(rhs)) = (gs_lhs(&g), gs_rhs(&g)) else { return Ok(()) };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn modular_series_matches_exact(
        p in prime(),
        k in 1u32..=4,
        upper in prop::collection::vec(small_rational(), 1..5),
        lower in prop::collection::vec(small_rational(), 0..4),
        z in small_rational(),
        n in 0usize..=12,
    ) {
        let spec = PfqSpec::new(upper, lower, z, n);
        let Ok(exact) = pfq_exact(&spec) else { return Ok(()) };
        let Ok(expected) = reduce_mod(&exact, p, k) else { return Ok(()) };
        prop_assert_eq!(pfq_mod(&spec, p, k).unwrap().to_residue(k).unwrap(), expected);
    }
}
