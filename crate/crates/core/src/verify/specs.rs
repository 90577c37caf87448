//! The truncated series on the left of each congruence.

use crate::arith::{rat, BigRational, Prime};
use crate::hypergeom::PfqSpec;

fn half_range(p: Prime) -> usize {
    (p.get() as usize - 1) / 2
}

fn repeat(x: (i64, i64), n: usize) -> Vec<BigRational> {
    vec![rat(x.0, x.1); n]
}

fn with(mut v: Vec<BigRational>, extra: &[(i64, i64)]) -> Vec<BigRational> {
    v.extend(extra.iter().map(|&(a, b)| rat(a, b)));
    v
}

/// `∑_{k ≤ (p-1)/2} ((1/2)_k / k!)^4`
pub fn kilbourn(p: Prime) -> PfqSpec<BigRational> {
    PfqSpec::new(repeat((1, 2), 4), repeat((1, 1), 3), rat(1, 1), half_range(p))
}

/// `∑_{k ≤ (p-1)/2} (-1)^k (4k+1) ((1/2)_k / k!)^3`, using `(5/4)_k / (1/4)_k = 4k+1`.
pub fn zudilin(p: Prime) -> PfqSpec<BigRational> {
    PfqSpec::new(
        with(repeat((1, 2), 3), &[(5, 4)]),
        with(repeat((1, 1), 2), &[(1, 4)]),
        rat(-1, 1),
        half_range(p),
    )
}

/// `∑_{k ≤ (p-1)/2} (-1)^k (4k+1) ((1/2)_k / k!)^5`
pub fn mccarthy_osburn(p: Prime) -> PfqSpec<BigRational> {
    PfqSpec::new(
        with(repeat((1, 2), 5), &[(5, 4)]),
        with(repeat((1, 1), 4), &[(1, 4)]),
        rat(-1, 1),
        half_range(p),
    )
}

/// `₇F₆[1/3 ×6, 7/6; 1 ×5, 1/6; 1]_{p-1}`
pub fn long_ramakrishna(p: Prime) -> PfqSpec<BigRational> {
    PfqSpec::new(
        with(repeat((1, 3), 6), &[(7, 6)]),
        with(repeat((1, 1), 5), &[(1, 6)]),
        rat(1, 1),
        p.get() as usize - 1,
    )
}

/// `₇F₆[1/2, 1/2, 1/2, 1/4, 7/6, 1/2+α, 1/4-α; 1, 1, 1, 1/6, 1+2α, 1/2-2α; 1]_{(p-1)/2}`
pub fn main(p: Prime, alpha: &BigRational) -> PfqSpec<BigRational> {
    let two = BigRational::from_integer(2.into());
    let mut upper = with(repeat((1, 2), 3), &[(1, 4), (7, 6)]);
    upper.push(rat(1, 2) + alpha);
    upper.push(rat(1, 4) - alpha);
    let mut lower = with(repeat((1, 1), 3), &[(1, 6)]);
    lower.push(rat(1, 1) + &two * alpha);
    lower.push(rat(1, 2) - &two * alpha);
    PfqSpec::new(upper, lower, rat(1, 1), half_range(p))
}

/// `₅F₄[1/2, 1/2, 1/2, 1/4, 7/6; 1, 1, 1, 1/6; 1/4]_{(p-1)/2}`
pub fn cor_quarter(p: Prime) -> PfqSpec<BigRational> {
    PfqSpec::new(
        with(repeat((1, 2), 3), &[(1, 4), (7, 6)]),
        with(repeat((1, 1), 3), &[(1, 6)]),
        rat(1, 4),
        half_range(p),
    )
}

/// `₆F₅[1/2, 1/2, 1/2, 1/4, 1/4, 7/6; 1, 1, 1, 1, 1/6; 1]_{(p-1)/2}`
pub fn cor_6f5(p: Prime) -> PfqSpec<BigRational> {
    PfqSpec::new(
        with(repeat((1, 2), 3), &[(1, 4), (1, 4), (7, 6)]),
        with(repeat((1, 1), 4), &[(1, 6)]),
        rat(1, 1),
        half_range(p),
    )
}

/// The series obtained from [`main`] by dropping the four α-dependent
/// parameters and replacing `z = 1` by the limit `1/4` of their term ratio.
pub fn main_alpha_limit(p: Prime) -> PfqSpec<BigRational> {
    let m = main(p, &rat(0, 1));
    PfqSpec::new(m.upper[..5].to_vec(), m.lower[..4].to_vec(), rat(1, 4), m.n)
}
