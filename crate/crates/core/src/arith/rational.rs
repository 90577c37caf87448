use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{CheckedDiv, One, ToPrimitive, Zero};

pub use num_rational::BigRational;

use super::{check_precision, Prime, PrimePowerResidue};
use crate::error::{Error, Result};

/// Shorthand for the rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn checked_div(x: &BigRational, y: &BigRational) -> Result<BigRational> {
    x.checked_div(y).ok_or(Error::DivisionByZero)
}

/// p-adic valuation of an integer; `None` stands for +∞ (n = 0).
pub fn vp_int(n: &BigInt, p: Prime) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p.get());
    let mut v = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        v += 1;
        m = q;
    }
}

/// v_p(numerator) − v_p(denominator); `None` stands for +∞ (x = 0).
pub fn vp(x: &BigRational, p: Prime) -> Option<i64> {
    let num = vp_int(x.numer(), p)? as i64;
    let den = vp_int(x.denom(), p).unwrap_or(0) as i64;
    Some(num - den)
}

/// Splits a nonzero rational as `p^v · u` with `u` a p-adic unit.
pub(crate) fn p_adic_split(x: &BigRational, p: Prime) -> Option<(i64, BigRational)> {
    let v = vp(x, p)?;
    let pp = BigInt::from(p.get()).pow(v.unsigned_abs() as u32);
    let unit = if v >= 0 {
        BigRational::new(x.numer() / &pp, x.denom().clone())
    } else {
        BigRational::new(x.numer().clone(), x.denom() / &pp)
    };
    Some((v, unit))
}

fn not_integral(x: &BigRational, p: Prime) -> Error {
    Error::NonUnitDenominator {
        value: render_rational(x),
        p: p.get(),
    }
}

/// `numerator · denominator⁻¹ mod p^k` for any `k ≥ 1`.
pub(crate) fn reduce_mod_unbounded(x: &BigRational, p: Prime, k: u32) -> Result<BigUint> {
    let modulus = BigInt::from(p.get()).pow(k);
    let den = x.denom().mod_floor(&modulus);
    let inv = den.modinv(&modulus).ok_or_else(|| not_integral(x, p))?;
    let value = (x.numer().mod_floor(&modulus) * inv).mod_floor(&modulus);
    Ok(value.to_biguint().expect("reduced value is non-negative"))
}

/// The class of `x` in Z/p^k. Fails when p divides the denominator.
pub fn reduce_mod(x: &BigRational, p: Prime, k: u32) -> Result<PrimePowerResidue> {
    check_precision(k)?;
    let value = reduce_mod_unbounded(x, p, k)?;
    Ok(PrimePowerResidue::from_reduced(p, k, value))
}

/// ⟨x⟩_p: the least non-negative integer congruent to `x` mod p.
pub fn least_residue(x: &BigRational, p: Prime) -> Result<u64> {
    let r = reduce_mod_unbounded(x, p, 1)?;
    Ok(r.to_u64().expect("residue below p"))
}

/// Renders `n/d`, or just `n` for integers.
pub fn render_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `[+-]num[/den]`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let err = || Error::Parse(s.to_string());
    let t = s.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (n, d) = match body.split_once('/') {
        Some((n, d)) => (n, d),
        None => (body, "1"),
    };
    let digits = |x: &str| !x.is_empty() && x.bytes().all(|b| b.is_ascii_digit());
    if !digits(n) || !digits(d) {
        return Err(err());
    }
    let n = BigInt::from_biguint(Sign::Plus, n.parse::<BigUint>().map_err(|_| err())?);
    let d = BigInt::from_biguint(Sign::Plus, d.parse::<BigUint>().map_err(|_| err())?);
    if d.is_zero() {
        return Err(err());
    }
    let x = BigRational::new(n, d);
    Ok(if neg { -x } else { x })
}
