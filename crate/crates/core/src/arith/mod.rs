//! Scalar arithmetic shared by every other module: exact rationals, the
//! residue rings Z/p^k, capped-precision p-adic numbers and the ring
//! generated by a primitive cube root of unity.

mod cyclo;
mod padic;
mod prime;
mod rational;
mod residue;

pub use cyclo::{cyclo_reduce, Cyclo, CycloExact, CycloMod};
pub use padic::PadicCapped;
pub use prime::{check_precision, primes_in, Prime, MAX_PRECISION};
pub use rational::{
    checked_div, least_residue, parse_rational, rat, reduce_mod, render_rational, vp, vp_int, BigRational,
};
pub use residue::PrimePowerResidue;

pub(crate) use rational::{p_adic_split, reduce_mod_unbounded};
