//! Pochhammer symbols and truncated hypergeometric series.
//!
//! Two evaluators are kept side by side. [`pfq_exact`] sums the series
//! exactly over Q or Q(ω) and serves as the oracle. [`pfq_mod`] sums over
//! capped p-adics, so that p-divisible factors in a term's numerator and
//! denominator cancel through valuation bookkeeping instead of failing a
//! modular inversion.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{
    checked_div, least_residue, render_rational, vp, BigRational, CycloExact, PadicCapped, Prime, PrimePowerResidue,
};
use crate::error::{Error, Result};

/// Exact scalars the series can be summed over.
pub trait Scalar:
    Clone + PartialEq + fmt::Display + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(x: BigRational) -> Self;
    fn is_zero(&self) -> bool;
    fn try_div(&self, other: &Self) -> Result<Self>;
    /// The value as an integer, if it is one.
    fn to_integer(&self) -> Option<BigInt>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_rational(x: BigRational) -> Self {
        x
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn try_div(&self, other: &Self) -> Result<Self> {
        checked_div(self, other)
    }

    fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.to_integer())
    }

    fn render(&self) -> String {
        render_rational(self)
    }
}

impl Scalar for CycloExact {
    fn zero() -> Self {
        CycloExact::zero()
    }

    fn one() -> Self {
        CycloExact::one()
    }

    fn from_rational(x: BigRational) -> Self {
        CycloExact::from_rational(x)
    }

    fn is_zero(&self) -> bool {
        CycloExact::is_zero(self)
    }

    fn try_div(&self, other: &Self) -> Result<Self> {
        self.checked_div(other)
    }

    fn to_integer(&self) -> Option<BigInt> {
        (Zero::is_zero(&self.c1) && self.c0.is_integer()).then(|| self.c0.to_integer())
    }

    fn render(&self) -> String {
        format!("{} + {}ω", render_rational(&self.c0), render_rational(&self.c1))
    }
}

/// Rising factorial `(x)_n = x(x+1)⋯(x+n-1)`, with `(x)_0 = 1`.
pub fn pochhammer<T: Scalar>(x: &T, n: usize) -> T {
    (0..n).fold(T::one(), |acc, j| acc * (x.clone() + T::from_int(j as i64)))
}

/// A truncated series `ᵣFₛ[upper; lower; z]_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct PfqSpec<T> {
    pub upper: Vec<T>,
    pub lower: Vec<T>,
    pub z: T,
    pub n: usize,
}

impl<T: Scalar> PfqSpec<T> {
    pub fn new(upper: Vec<T>, lower: Vec<T>, z: T, n: usize) -> Self {
        PfqSpec { upper, lower, z, n }
    }
}

impl PfqSpec<BigRational> {
    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_pairs(upper: &[(i64, i64)], lower: &[(i64, i64)], z: (i64, i64), n: usize) -> Self {
        let conv = |v: &[(i64, i64)]| v.iter().map(|&(a, b)| crate::arith::rat(a, b)).collect();
        PfqSpec::new(conv(upper), conv(lower), crate::arith::rat(z.0, z.1), n)
    }
}

/// Why the term recursion stopped before index `n`.
enum Step<T> {
    /// Ratio numerator and denominator for `t_{k+1} / t_k`.
    Ratio(Vec<T>, Vec<T>),
    /// Some upper parameter hit zero: every later term vanishes.
    Terminated,
}

/// Factors of `t_{k+1}/t_k = ∏(a_i + k) · z / (∏(b_j + k) · (k+1))`.
fn step<T: Scalar>(s: &PfqSpec<T>, k: usize) -> Result<Step<T>> {
    let kk = T::from_int(k as i64);
    let mut num: Vec<T> = Vec::with_capacity(s.upper.len() + 1);
    for a in &s.upper {
        let f = a.clone() + kk.clone();
        if f.is_zero() {
            return Ok(Step::Terminated);
        }
        num.push(f);
    }
    if s.z.is_zero() {
        return Ok(Step::Terminated);
    }
    num.push(s.z.clone());
    let mut den: Vec<T> = Vec::with_capacity(s.lower.len() + 1);
    for b in &s.lower {
        let f = b.clone() + kk.clone();
        if f.is_zero() {
            return Err(Error::PoleInRange {
                index: k + 1,
                parameter: b.render(),
            });
        }
        den.push(f);
    }
    den.push(T::from_int(k as i64 + 1));
    Ok(Step::Ratio(num, den))
}

/// Exact value of the truncated series.
pub fn pfq_exact<T: Scalar>(s: &PfqSpec<T>) -> Result<T> {
    let mut term = T::one();
    let mut sum = T::one();
    for k in 0..s.n {
        let (num, den) = match step(s, k)? {
            Step::Terminated => break,
            Step::Ratio(num, den) => (num, den),
        };
        let num = num.into_iter().fold(T::one(), |acc, f| acc * f);
        let den = den.into_iter().fold(T::one(), |acc, f| acc * f);
        term = (term * num).try_div(&den)?;
        sum = sum + term.clone();
    }
    Ok(sum)
}

/// The rational factors of each step, with `None` marking termination.
fn rational_steps(s: &PfqSpec<BigRational>) -> Result<Vec<(Vec<BigRational>, Vec<BigRational>)>> {
    let mut steps = Vec::with_capacity(s.n);
    for k in 0..s.n {
        match step(s, k)? {
            Step::Terminated => break,
            Step::Ratio(num, den) => steps.push((num, den)),
        }
    }
    Ok(steps)
}

/// The truncated series as a capped p-adic number known modulo `p^k`.
///
/// Each factor enters with exact valuation and a unit carried to enough
/// relative precision that every term is known modulo `p^k`.
pub fn pfq_mod(s: &PfqSpec<BigRational>, p: Prime, k: u32) -> Result<PadicCapped> {
    crate::arith::check_precision(k)?;
    let steps = rational_steps(s)?;

    let val = |x: &BigRational| vp(x, p).expect("factors are nonzero");
    let mut v = 0i64;
    let mut vmin = 0i64;
    for (num, den) in &steps {
        v += num.iter().map(val).sum::<i64>() - den.iter().map(val).sum::<i64>();
        vmin = vmin.min(v);
    }
    let prec = k + vmin.unsigned_abs() as u32;

    let embed = |x: &BigRational| PadicCapped::from_rational(x, p, prec);
    let mut term = embed(&<BigRational as One>::one())?;
    let mut sum = term.clone();
    for (num, den) in &steps {
        for f in num {
            term = term.mul(&embed(f)?)?;
        }
        for f in den {
            term = term.div(&embed(f)?)?;
        }
        sum = sum.add(&term)?;
    }
    Ok(sum)
}

/// [`pfq_mod`] read back as a class in Z/p^k.
pub fn pfq_mod_residue(s: &PfqSpec<BigRational>, p: Prime, k: u32) -> Result<PrimePowerResidue> {
    pfq_mod(s, p, k)?.to_residue(k)
}

/// Parameters of the terminating ₇F₆ summation
///
/// ```text
/// ₇F₆[a, b, a-b+1/2, 1+2a/3, 1-2d, 2a+2d+n, -n;
///     2a-2b+1, 2b, 2a/3, a+d+1/2, 1-d-n/2, 1+a+n/2; 1]
///   = (1/2)_r (b+d)_r (d-b+a+1/2)_r (a+1)_r
///     / ((b+1/2)_r (a+d+1/2)_r (d)_r (a-b+1)_r)   if n = 2r,
///   = 0                                            if n is odd.
/// ```
#[derive(Clone, Debug, PartialEq)]
pub struct GSParams<T> {
    a: T,
    b: T,
    d: T,
    n: usize,
}

fn half<T: Scalar>() -> T {
    T::from_rational(crate::arith::rat(1, 2))
}

fn scaled<T: Scalar>(x: &T, num: i64, den: i64) -> T {
    x.clone() * T::from_rational(crate::arith::rat(num, den))
}

impl<T: Scalar> GSParams<T> {
    /// Rejects parameters where a lower parameter of the sum is a pole inside
    /// the terminating range, i.e. a non-positive integer `≥ -(n-1)`.
    pub fn new(a: T, b: T, d: T, n: usize) -> Result<Self> {
        let g = GSParams { a, b, d, n };
        let bound = -(n as i64 - 1);
        for b in g.lower() {
            if let Some(m) = b.to_integer() {
                if !m.is_positive() && m >= BigInt::from(bound) {
                    // (b)_k first vanishes at k = 1 - b
                    let index = (BigInt::from(1) - m).try_into().expect("bounded by n");
                    return Err(Error::PoleInRange {
                        index,
                        parameter: b.render(),
                    });
                }
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn n_half(&self) -> T {
        T::from_rational(crate::arith::rat(self.n as i64, 2))
    }

    pub fn upper(&self) -> Vec<T> {
        let (a, b, d) = (&self.a, &self.b, &self.d);
        let n = T::from_int(self.n as i64);
        vec![
            a.clone(),
            b.clone(),
            a.clone() - b.clone() + half(),
            T::one() + scaled(a, 2, 3),
            T::one() - scaled(d, 2, 1),
            scaled(a, 2, 1) + scaled(d, 2, 1) + n.clone(),
            -n,
        ]
    }

    pub fn lower(&self) -> Vec<T> {
        let (a, b, d) = (&self.a, &self.b, &self.d);
        vec![
            scaled(a, 2, 1) - scaled(b, 2, 1) + T::one(),
            scaled(b, 2, 1),
            scaled(a, 2, 3),
            a.clone() + d.clone() + half(),
            T::one() - d.clone() - self.n_half(),
            T::one() + a.clone() + self.n_half(),
        ]
    }

    pub fn spec(&self) -> PfqSpec<T> {
        PfqSpec::new(self.upper(), self.lower(), T::one(), self.n)
    }

    /// Numerator and denominator parameters of the closed form, each used at length `r`.
    pub fn closed_form_parameters(&self) -> ([T; 4], [T; 4]) {
        let (a, b, d) = (&self.a, &self.b, &self.d);
        (
            [
                half(),
                b.clone() + d.clone(),
                d.clone() - b.clone() + a.clone() + half(),
                a.clone() + T::one(),
            ],
            [
                b.clone() + half(),
                a.clone() + d.clone() + half(),
                d.clone(),
                a.clone() - b.clone() + T::one(),
            ],
        )
    }
}

/// Left side of the terminating ₇F₆ summation, summed exactly.
pub fn gs_lhs<T: Scalar>(g: &GSParams<T>) -> Result<T> {
    pfq_exact(&g.spec())
}

/// Closed-form right side: a Pochhammer quotient for even `n`, zero for odd `n`.
pub fn gs_rhs<T: Scalar>(g: &GSParams<T>) -> Result<T> {
    if g.n % 2 == 1 {
        return Ok(T::zero());
    }
    let r = g.n / 2;
    let (num, den) = g.closed_form_parameters();
    pochhammer_quotient(&num, &den, r)
}

/// `∏ (num_i)_r / ∏ (den_j)_r`, failing if a denominator vanishes.
pub fn pochhammer_quotient<T: Scalar>(num: &[T], den: &[T], r: usize) -> Result<T> {
    let top = num.iter().fold(T::one(), |acc, x| acc * pochhammer(x, r));
    let mut bottom = T::one();
    for x in den {
        let f = pochhammer(x, r);
        if f.is_zero() {
            return Err(Error::PoleInRange {
                index: r,
                parameter: x.render(),
            });
        }
        bottom = bottom * f;
    }
    top.try_div(&bottom)
}

/// Checks `0 ≤ ⟨α⟩_p ≤ ⌊p/4⌋`.
pub fn check_alpha(p: Prime, alpha: &BigRational) -> Result<u64> {
    let residue = least_residue(alpha, p)?;
    let bound = p.get() / 4;
    if residue > bound {
        return Err(Error::AlphaOutOfRange {
            alpha: render_rational(alpha),
            p: p.get(),
            residue,
            bound,
        });
    }
    Ok(residue)
}

fn require_p_ge_5(p: Prime) -> Result<()> {
    if p.get() < 5 {
        return Err(Error::RangeUnsupported {
            p: p.get(),
            range: "p ≥ 5".into(),
        });
    }
    Ok(())
}

/// The ω-deformed ₇F₆ obtained from the terminating summation with
/// `n = (p-1)/2, a = 1/4, b = 1/2 + α, d = (1 + ω²p)/4`.
pub fn ff1_spec(p: Prime, alpha: &BigRational) -> Result<PfqSpec<CycloExact>> {
    require_p_ge_5(p)?;
    check_alpha(p, alpha)?;
    let r = |n: i64, d: i64| CycloExact::from_rational(crate::arith::rat(n, d));
    let w = CycloExact::omega();
    let w2 = w.clone() * w.clone();
    let pp = CycloExact::from_int(p.get() as i64);
    let al = CycloExact::from_rational(alpha.clone());
    let upper = vec![
        (r(1, 1) - pp.clone()) * r(1, 2),
        (r(1, 1) - w.clone() * pp.clone()) * r(1, 2),
        (r(1, 1) - w2.clone() * pp.clone()) * r(1, 2),
        r(1, 2) + al.clone(),
        r(1, 4) - al.clone(),
        r(1, 4),
        r(7, 6),
    ];
    let lower = vec![
        r(1, 1) + pp.clone() * r(1, 4),
        r(1, 1) + w * pp.clone() * r(1, 4),
        r(1, 1) + w2 * pp * r(1, 4),
        r(1, 1) + al.clone() * r(2, 1),
        r(1, 2) - al * r(2, 1),
        r(1, 6),
    ];
    Ok(PfqSpec::new(
        upper,
        lower,
        CycloExact::one(),
        (p.get() as usize - 1) / 2,
    ))
}

/// Numerator and denominator parameters of the closed form for
/// `p ≡ 1 (mod 4)`, each used at length `(p-1)/4`.
pub fn ff1_closed_form_parameters(p: Prime, alpha: &BigRational) -> ([CycloExact; 4], [CycloExact; 4]) {
    let r = |n: i64, d: i64| CycloExact::from_rational(crate::arith::rat(n, d));
    let w = CycloExact::omega();
    let w2p = w.clone() * w * CycloExact::from_int(p.get() as i64);
    let al4 = CycloExact::from_rational(alpha * BigRational::from_integer(4.into()));
    let quarter = r(1, 4);
    (
        [
            r(1, 2),
            r(5, 4),
            (al4.clone() + r(3, 1) + w2p.clone()) * quarter.clone(),
            (r(2, 1) - al4 + w2p.clone()) * quarter.clone(),
        ],
        [
            (r(1, 1) + w2p.clone()) * quarter.clone(),
            (r(4, 1) + w2p) * quarter,
            r(1, 1) + CycloExact::from_rational(alpha.clone()),
            r(3, 4) - CycloExact::from_rational(alpha.clone()),
        ],
    )
}

/// Both sides of the ω-deformed identity, exactly in Q(ω).
pub fn ff1_build(p: Prime, alpha: &BigRational) -> Result<(CycloExact, CycloExact)> {
    let spec = ff1_spec(p, alpha)?;
    let lhs = pfq_exact(&spec)?;
    let rhs = if p.modulo(4) == 3 {
        CycloExact::zero()
    } else {
        let (num, den) = ff1_closed_form_parameters(p, alpha);
        pochhammer_quotient(&num, &den, (p.get() as usize - 1) / 4)?
    };
    Ok((lhs, rhs))
}
