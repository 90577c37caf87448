use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use super::{check_precision, p_adic_split, reduce_mod_unbounded, BigRational, Prime, PrimePowerResidue};
use crate::error::{Error, Result};

/// A p-adic number `p^v · u` whose unit `u` is known modulo `p^prec`.
///
/// Zero comes in two kinds: the exact zero, and a zero that is only known up
/// to some absolute precision (the result of a cancellation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicCapped {
    p: Prime,
    repr: Repr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    /// `None` is exact zero, `Some(a)` means `O(p^a)`.
    Zero(Option<i64>),
    Unit {
        valuation: i64,
        unit: BigUint,
        prec: u32,
    },
}

fn pow_p(p: Prime, e: u32) -> BigUint {
    BigUint::from(p.get()).pow(e)
}

fn min_abs(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl PadicCapped {
    pub fn exact_zero(p: Prime) -> Self {
        PadicCapped {
            p,
            repr: Repr::Zero(None),
        }
    }

    /// Builds `p^valuation · unit` with the unit known mod `p^prec`.
    pub fn from_unit(p: Prime, valuation: i64, unit: &BigUint, prec: u32) -> Result<Self> {
        if prec == 0 {
            return Err(Error::PrecisionExhausted("relative precision 0".into()));
        }
        let unit = unit % pow_p(p, prec);
        if (&unit % p.get()).is_zero() {
            return Err(Error::HypothesisViolated(format!("{unit} is not a {p}-adic unit")));
        }
        Ok(PadicCapped {
            p,
            repr: Repr::Unit { valuation, unit, prec },
        })
    }

    /// Embeds an exact rational with `prec` digits of relative precision.
    pub fn from_rational(x: &BigRational, p: Prime, prec: u32) -> Result<Self> {
        if prec == 0 {
            return Err(Error::PrecisionExhausted("relative precision 0".into()));
        }
        match p_adic_split(x, p) {
            None => Ok(Self::exact_zero(p)),
            Some((valuation, u)) => Ok(PadicCapped {
                p,
                repr: Repr::Unit {
                    valuation,
                    unit: reduce_mod_unbounded(&u, p, prec)?,
                    prec,
                },
            }),
        }
    }

    fn zero_to(p: Prime, abs: Option<i64>) -> Self {
        PadicCapped {
            p,
            repr: Repr::Zero(abs),
        }
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero(_))
    }

    pub fn is_exact_zero(&self) -> bool {
        self.repr == Repr::Zero(None)
    }

    /// Valuation of a nonzero value; `None` for any zero.
    pub fn valuation(&self) -> Option<i64> {
        match self.repr {
            Repr::Unit { valuation, .. } => Some(valuation),
            Repr::Zero(_) => None,
        }
    }

    pub fn unit(&self) -> Option<&BigUint> {
        match &self.repr {
            Repr::Unit { unit, .. } => Some(unit),
            Repr::Zero(_) => None,
        }
    }

    pub fn relative_precision(&self) -> Option<u32> {
        match self.repr {
            Repr::Unit { prec, .. } => Some(prec),
            Repr::Zero(_) => None,
        }
    }

    /// The exponent `a` such that the value is known modulo `p^a`; `None` if exact.
    pub fn absolute_precision(&self) -> Option<i64> {
        match self.repr {
            Repr::Zero(a) => a,
            Repr::Unit { valuation, prec, .. } => Some(valuation + prec as i64),
        }
    }

    fn check_prime(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::ModulusMismatch)
        }
    }

    pub fn neg(&self) -> Self {
        match &self.repr {
            Repr::Zero(_) => self.clone(),
            Repr::Unit { valuation, unit, prec } => PadicCapped {
                p: self.p,
                repr: Repr::Unit {
                    valuation: *valuation,
                    unit: pow_p(self.p, *prec) - unit,
                    prec: *prec,
                },
            },
        }
    }

    /// Keeps only the digits below absolute precision `abs`.
    fn truncated(&self, abs: Option<i64>) -> Self {
        let Some(abs) = abs else { return self.clone() };
        match &self.repr {
            Repr::Zero(a) => Self::zero_to(self.p, min_abs(*a, Some(abs))),
            Repr::Unit { valuation, unit, prec } => {
                if *valuation >= abs {
                    return Self::zero_to(self.p, Some(abs));
                }
                let prec = (*prec).min((abs - valuation) as u32);
                PadicCapped {
                    p: self.p,
                    repr: Repr::Unit {
                        valuation: *valuation,
                        unit: unit % pow_p(self.p, prec),
                        prec,
                    },
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        let abs = min_abs(self.absolute_precision(), other.absolute_precision());
        match (&self.repr, &other.repr) {
            (Repr::Zero(_), _) => Ok(other.truncated(abs)),
            (_, Repr::Zero(_)) => Ok(self.truncated(abs)),
            (
                Repr::Unit {
                    valuation: va,
                    unit: ua,
                    ..
                },
                Repr::Unit {
                    valuation: vb,
                    unit: ub,
                    ..
                },
            ) => {
                let abs = abs.expect("units carry finite precision");
                let vmin = (*va).min(*vb);
                let width = (abs - vmin) as u32;
                let modulus = pow_p(self.p, width);
                let sa = ua * pow_p(self.p, (va - vmin) as u32);
                let sb = ub * pow_p(self.p, (vb - vmin) as u32);
                let mut s = (sa + sb) % &modulus;
                if s.is_zero() {
                    return Ok(Self::zero_to(self.p, Some(abs)));
                }
                let mut w = 0u32;
                while (&s % self.p.get()).is_zero() {
                    s /= self.p.get();
                    w += 1;
                }
                Ok(PadicCapped {
                    p: self.p,
                    repr: Repr::Unit {
                        valuation: vmin + w as i64,
                        unit: s,
                        prec: width - w,
                    },
                })
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        let p = self.p;
        Ok(match (&self.repr, &other.repr) {
            (Repr::Zero(None), _) | (_, Repr::Zero(None)) => Self::exact_zero(p),
            (Repr::Zero(Some(a)), Repr::Zero(Some(b))) => Self::zero_to(p, Some(a + b)),
            (Repr::Zero(Some(a)), Repr::Unit { valuation, .. })
            | (Repr::Unit { valuation, .. }, Repr::Zero(Some(a))) => Self::zero_to(p, Some(a + valuation)),
            (
                Repr::Unit {
                    valuation: va,
                    unit: ua,
                    prec: ra,
                },
                Repr::Unit {
                    valuation: vb,
                    unit: ub,
                    prec: rb,
                },
            ) => {
                let prec = (*ra).min(*rb);
                PadicCapped {
                    p,
                    repr: Repr::Unit {
                        valuation: va + vb,
                        unit: (ua * ub) % pow_p(p, prec),
                        prec,
                    },
                }
            }
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        let p = self.p;
        let (vb, ub, rb) = match &other.repr {
            Repr::Zero(None) => return Err(Error::DivisionByZero),
            Repr::Zero(Some(a)) => return Err(Error::PrecisionExhausted(format!("division by O({p}^{a})"))),
            Repr::Unit { valuation, unit, prec } => (*valuation, unit, *prec),
        };
        Ok(match &self.repr {
            Repr::Zero(None) => Self::exact_zero(p),
            Repr::Zero(Some(a)) => Self::zero_to(p, Some(a - vb)),
            Repr::Unit {
                valuation: va,
                unit: ua,
                prec: ra,
            } => {
                let prec = (*ra).min(rb);
                let modulus = pow_p(p, prec);
                let inv = (ub % &modulus).modinv(&modulus).expect("units are invertible");
                PadicCapped {
                    p,
                    repr: Repr::Unit {
                        valuation: va - vb,
                        unit: (ua * inv) % modulus,
                        prec,
                    },
                }
            }
        })
    }

    /// Reads the value as a class in Z/p^k.
    pub fn to_residue(&self, k: u32) -> Result<PrimePowerResidue> {
        check_precision(k)?;
        let p = self.p;
        let exhausted = || Error::PrecisionExhausted(format!("{self} is not known mod {p}^{k}"));
        match &self.repr {
            Repr::Zero(None) => PrimePowerResidue::zero(p, k),
            Repr::Zero(Some(a)) if *a >= k as i64 => PrimePowerResidue::zero(p, k),
            Repr::Zero(Some(_)) => Err(exhausted()),
            Repr::Unit { valuation, unit, prec } => {
                if *valuation < 0 {
                    return Err(Error::NonUnitDenominator {
                        value: self.to_string(),
                        p: p.get(),
                    });
                }
                if valuation + (*prec as i64) < k as i64 {
                    return Err(exhausted());
                }
                if *valuation >= k as i64 {
                    return PrimePowerResidue::zero(p, k);
                }
                let modulus = pow_p(p, k);
                let value = (unit * pow_p(p, *valuation as u32)) % modulus;
                Ok(PrimePowerResidue::from_reduced(p, k, value))
            }
        }
    }
}

impl fmt::Display for PadicCapped {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Zero(None) => write!(f, "0"),
            Repr::Zero(Some(a)) => write!(f, "O({}^{})", self.p, a),
            Repr::Unit { valuation, unit, prec } => write!(
                f,
                "{}^{}·{} + O({}^{})",
                self.p,
                valuation,
                unit,
                self.p,
                valuation + *prec as i64
            ),
        }
    }
}
