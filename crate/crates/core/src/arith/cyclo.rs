use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{reduce_mod, BigRational, Prime, PrimePowerResidue};
use crate::error::{Error, Result};

/// `c0 + c1·ω` in `R[x]/(x² + x + 1)`, with ω a primitive cube root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclo<T> {
    pub c0: T,
    pub c1: T,
}

/// Elements of the field Q(ω).
pub type CycloExact = Cyclo<BigRational>;

/// Elements of `(Z/p^k)[x]/(x² + x + 1)`.
pub type CycloMod = Cyclo<PrimePowerResidue>;

impl<T> Cyclo<T> {
    pub fn new(c0: T, c1: T) -> Self {
        Cyclo { c0, c1 }
    }
}

impl<T> Cyclo<T>
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>,
{
    /// Image under ω ↦ ω²: `(c0 − c1) − c1·ω`.
    pub fn conj(&self) -> Self {
        Cyclo::new(self.c0.clone() - self.c1.clone(), -self.c1.clone())
    }

    /// `c0² − c0·c1 + c1²`, the product of the element with its conjugate.
    pub fn norm(&self) -> T {
        let (a, b) = (self.c0.clone(), self.c1.clone());
        a.clone() * a.clone() - a * b.clone() + b.clone() * b
    }
}

impl CycloExact {
    pub fn zero() -> Self {
        Cyclo::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Cyclo::new(BigRational::one(), BigRational::zero())
    }

    pub fn omega() -> Self {
        Cyclo::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_rational(x: BigRational) -> Self {
        Cyclo::new(x, BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    /// `x⁻¹ = conj(x) / N(x)`; N(x) vanishes only at x = 0.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::NonInvertible(self.to_string()));
        }
        let c = self.conj();
        Ok(Cyclo::new(c.c0 / &n, c.c1 / &n))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.clone() * other.inverse()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }
}

impl CycloMod {
    pub fn zero(p: Prime, k: u32) -> Result<Self> {
        Ok(Cyclo::new(
            PrimePowerResidue::zero(p, k)?,
            PrimePowerResidue::zero(p, k)?,
        ))
    }

    pub fn one(p: Prime, k: u32) -> Result<Self> {
        Ok(Cyclo::new(
            PrimePowerResidue::one(p, k)?,
            PrimePowerResidue::zero(p, k)?,
        ))
    }

    pub fn omega(p: Prime, k: u32) -> Result<Self> {
        Ok(Cyclo::new(
            PrimePowerResidue::zero(p, k)?,
            PrimePowerResidue::one(p, k)?,
        ))
    }

    pub fn from_residue(r: PrimePowerResidue) -> Self {
        let zero = PrimePowerResidue::from_reduced(r.p(), r.k(), Zero::zero());
        Cyclo::new(r, zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    pub fn pow(&self, e: u32) -> Self {
        let one = Cyclo::new(
            PrimePowerResidue::from_reduced(self.c0.p(), self.c0.k(), One::one()),
            PrimePowerResidue::from_reduced(self.c0.p(), self.c0.k(), Zero::zero()),
        );
        (0..e).fold(one, |acc, _| acc * self.clone())
    }
}

/// Coordinatewise reduction Q(ω) → `(Z/p^k)[ω]`.
pub fn cyclo_reduce(x: &CycloExact, p: Prime, k: u32) -> Result<CycloMod> {
    Ok(Cyclo::new(reduce_mod(&x.c0, p, k)?, reduce_mod(&x.c1, p, k)?))
}

impl<T> Add for Cyclo<T>
where
    T: Add<Output = T>,
{
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Cyclo::new(self.c0 + rhs.c0, self.c1 + rhs.c1)
    }
}

impl<T> Sub for Cyclo<T>
where
    T: Sub<Output = T>,
{
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Cyclo::new(self.c0 - rhs.c0, self.c1 - rhs.c1)
    }
}

impl<T> Neg for Cyclo<T>
where
    T: Neg<Output = T>,
{
    type Output = Self;

    fn neg(self) -> Self {
        Cyclo::new(-self.c0, -self.c1)
    }
}

// (a + bω)(c + dω) = ac + (ad + bc)ω + bdω², with ω² = −1 − ω
impl<T> Mul for Cyclo<T>
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let bd = self.c1.clone() * rhs.c1.clone();
        let c0 = self.c0.clone() * rhs.c0.clone() - bd.clone();
        let c1 = self.c0 * rhs.c1 + self.c1 * rhs.c0 - bd;
        Cyclo::new(c0, c1)
    }
}

impl<T: fmt::Display> fmt::Display for Cyclo<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ω", self.c0, self.c1)
    }
}
