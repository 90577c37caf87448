use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{check_precision, Prime};
use crate::error::{Error, Result};

/// An element of Z/p^k, stored as its least non-negative representative.
///
/// Binary operators panic when the operands come from different rings;
/// mixing moduli is a programming error, not a runtime condition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimePowerResidue {
    p: Prime,
    k: u32,
    modulus: BigUint,
    value: BigUint,
}

impl PrimePowerResidue {
    pub fn new(p: Prime, k: u32, value: &BigInt) -> Result<Self> {
        check_precision(k)?;
        let modulus = BigUint::from(p.get()).pow(k);
        let m = BigInt::from(modulus.clone());
        let value = value.mod_floor(&m).to_biguint().expect("non-negative");
        Ok(PrimePowerResidue { p, k, modulus, value })
    }

    pub fn from_i64(p: Prime, k: u32, value: i64) -> Result<Self> {
        Self::new(p, k, &BigInt::from(value))
    }

    pub fn zero(p: Prime, k: u32) -> Result<Self> {
        Self::from_i64(p, k, 0)
    }

    pub fn one(p: Prime, k: u32) -> Result<Self> {
        Self::from_i64(p, k, 1)
    }

    /// `value` must already lie in `[0, p^k)` and `k` must be in range.
    pub(crate) fn from_reduced(p: Prime, k: u32, value: BigUint) -> Self {
        let modulus = BigUint::from(p.get()).pow(k);
        debug_assert!(value < modulus);
        PrimePowerResidue { p, k, modulus, value }
    }

    /// `(-1)^e` in Z/p^k.
    pub fn sign(p: Prime, k: u32, e: u64) -> Result<Self> {
        Self::from_i64(p, k, if e.is_multiple_of(2) { 1 } else { -1 })
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    pub fn is_unit(&self) -> bool {
        !(&self.value % self.p.get()).is_zero()
    }

    fn same_ring(&self, other: &Self) {
        assert!(
            self.p == other.p && self.k == other.k,
            "residues mod {}^{} and {}^{} mixed",
            self.p,
            self.k,
            other.p,
            other.k
        );
    }

    fn with_value(&self, value: BigUint) -> Self {
        PrimePowerResidue {
            p: self.p,
            k: self.k,
            modulus: self.modulus.clone(),
            value,
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        self.value
            .modinv(&self.modulus)
            .map(|v| self.with_value(v))
            .ok_or_else(|| Error::NonInvertible(format!("{} mod {}^{}", self.value, self.p, self.k)))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.with_value(self.value.modpow(&BigUint::from(e), &self.modulus))
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow_signed(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inverse()?.pow(e.unsigned_abs()))
        }
    }

    /// Image under Z/p^k → Z/p^j for `j ≤ k`.
    pub fn truncate(&self, j: u32) -> Result<Self> {
        check_precision(j)?;
        if j > self.k {
            return Err(Error::PrecisionExhausted(format!(
                "cannot lift a residue mod {}^{} to {}^{}",
                self.p, self.k, self.p, j
            )));
        }
        let modulus = BigUint::from(self.p.get()).pow(j);
        let value = &self.value % &modulus;
        Ok(PrimePowerResidue {
            p: self.p,
            k: j,
            modulus,
            value,
        })
    }

    /// Multiplies by `p^t`; a class mod p^k times p^t is well defined mod p^(k+t).
    pub fn scale_by_p_power(&self, t: u32) -> Result<Self> {
        let k = check_precision(self.k + t)?;
        let value = &self.value * BigUint::from(self.p.get()).pow(t);
        Ok(PrimePowerResidue::from_reduced(self.p, k, value))
    }

    /// Signed representative in `(-p^k/2, p^k/2]`.
    pub fn centered(&self) -> BigInt {
        let v = BigInt::from(self.value.clone());
        let m = BigInt::from(self.modulus.clone());
        if &v * 2 > m {
            v - m
        } else {
            v
        }
    }
}

impl fmt::Display for PrimePowerResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

impl<'a> Add<&'a PrimePowerResidue> for &'a PrimePowerResidue {
    type Output = PrimePowerResidue;

    fn add(self, rhs: &PrimePowerResidue) -> PrimePowerResidue {
        self.same_ring(rhs);
        let mut v = &self.value + &rhs.value;
        if v >= self.modulus {
            v -= &self.modulus;
        }
        self.with_value(v)
    }
}

impl<'a> Sub<&'a PrimePowerResidue> for &'a PrimePowerResidue {
    type Output = PrimePowerResidue;

    fn sub(self, rhs: &PrimePowerResidue) -> PrimePowerResidue {
        self.same_ring(rhs);
        let v = if self.value >= rhs.value {
            &self.value - &rhs.value
        } else {
            &self.value + &self.modulus - &rhs.value
        };
        self.with_value(v)
    }
}

impl<'a> Mul<&'a PrimePowerResidue> for &'a PrimePowerResidue {
    type Output = PrimePowerResidue;

    fn mul(self, rhs: &PrimePowerResidue) -> PrimePowerResidue {
        self.same_ring(rhs);
        self.with_value((&self.value * &rhs.value) % &self.modulus)
    }
}

impl Neg for &PrimePowerResidue {
    type Output = PrimePowerResidue;

    fn neg(self) -> PrimePowerResidue {
        if self.value.is_zero() {
            self.clone()
        } else {
            self.with_value(&self.modulus - &self.value)
        }
    }
}

impl Neg for PrimePowerResidue {
    type Output = PrimePowerResidue;

    fn neg(self) -> PrimePowerResidue {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<PrimePowerResidue> for PrimePowerResidue {
            type Output = PrimePowerResidue;
            fn $method(self, rhs: PrimePowerResidue) -> PrimePowerResidue {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a PrimePowerResidue> for PrimePowerResidue {
            type Output = PrimePowerResidue;
            fn $method(self, rhs: &PrimePowerResidue) -> PrimePowerResidue {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<PrimePowerResidue> for &'a PrimePowerResidue {
            type Output = PrimePowerResidue;
            fn $method(self, rhs: PrimePowerResidue) -> PrimePowerResidue {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);
