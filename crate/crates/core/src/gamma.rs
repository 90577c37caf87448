//! Morita's p-adic Gamma function at rational p-adic integers.
//!
//! For `x ∈ Z_p ∩ Q` and a precision `k`, let `m ∈ [0, p^k)` be the least
//! non-negative integer with `m ≡ x (mod p^k)`. Then
//!
//! ```text
//! Γ_p(x) ≡ (-1)^m · ∏_{0 ≤ j < m, p ∤ j} j   (mod p^k)
//! ```
//!
//! by p-adic continuity of Γ_p. Evaluation is a prefix product of length
//! `m`, so a single value costs O(p^k) ring multiplications. [`GammaBatch`]
//! answers any number of queries at one `(p, k)` with a single ascending
//! sweep.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::arith::{check_precision, least_residue, reduce_mod_unbounded, vp, BigRational, Prime, PrimePowerResidue};
use crate::error::{Error, Result};

/// A validated argument of Γ_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaQuery {
    x: BigRational,
    p: Prime,
    k: u32,
    rep: u64,
}

impl GammaQuery {
    pub fn new(x: &BigRational, p: Prime, k: u32) -> Result<Self> {
        check_precision(k)?;
        let rep = representative(x, p, k)?;
        Ok(GammaQuery {
            x: x.clone(),
            p,
            k,
            rep,
        })
    }

    pub fn x(&self) -> &BigRational {
        &self.x
    }

    /// The integer `m ∈ [0, p^k)` whose product is evaluated.
    pub fn representative(&self) -> u64 {
        self.rep
    }
}

fn representative(x: &BigRational, p: Prime, k: u32) -> Result<u64> {
    let m = reduce_mod_unbounded(x, p, k)?;
    m.to_u64().ok_or_else(|| Error::RangeUnsupported {
        p: p.get(),
        range: format!("p^{k} < 2^64"),
    })
}

fn modulus_u64(p: Prime, k: u32) -> Result<u64> {
    p.get().checked_pow(k).ok_or_else(|| Error::RangeUnsupported {
        p: p.get(),
        range: format!("p^{k} < 2^64"),
    })
}

/// Γ_p queries sharing one `(p, k)`, answered by one prefix-product sweep.
#[derive(Clone, Debug)]
pub struct GammaBatch {
    p: Prime,
    k: u32,
    reps: Vec<u64>,
}

impl GammaBatch {
    pub fn new(p: Prime, k: u32) -> Result<Self> {
        check_precision(k)?;
        modulus_u64(p, k)?;
        Ok(GammaBatch { p, k, reps: Vec::new() })
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Queues Γ_p(x) and returns its position in the output of [`evaluate`](Self::evaluate).
    pub fn push(&mut self, x: &BigRational) -> Result<usize> {
        self.reps.push(representative(x, self.p, self.k)?);
        Ok(self.reps.len() - 1)
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Number of prefix-product steps the sweep will take.
    pub fn sweep_length(&self) -> u64 {
        self.reps.iter().copied().max().unwrap_or(0)
    }

    pub fn evaluate(&self) -> Vec<PrimePowerResidue> {
        let modulus = modulus_u64(self.p, self.k).expect("checked in new");
        let p = self.p.get();
        let mut order: Vec<usize> = (0..self.reps.len()).collect();
        order.sort_by_key(|&i| self.reps[i]);

        let mut out = vec![0u64; self.reps.len()];
        let mut acc: u64 = 1 % modulus;
        let mut j: u64 = 0;
        for i in order {
            let m = self.reps[i];
            while j < m {
                if !j.is_multiple_of(p) {
                    acc = ((acc as u128 * j as u128) % modulus as u128) as u64;
                }
                j += 1;
            }
            out[i] = if m % 2 == 1 && acc != 0 { modulus - acc } else { acc };
        }
        out.into_iter()
            .map(|v| PrimePowerResidue::from_reduced(self.p, self.k, BigUint::from(v)))
            .collect()
    }
}

/// Γ_p(x) mod p^k for a single argument.
pub fn gamma_p(q: &GammaQuery) -> PrimePowerResidue {
    let mut batch = GammaBatch::new(q.p, q.k).expect("query already validated");
    batch.reps.push(q.rep);
    batch.evaluate().pop().expect("one query")
}

/// Shorthand for `gamma_p(&GammaQuery::new(x, p, k)?)`.
pub fn gamma(x: &BigRational, p: Prime, k: u32) -> Result<PrimePowerResidue> {
    Ok(gamma_p(&GammaQuery::new(x, p, k)?))
}

/// Evaluates every argument at one `(p, k)` with a single sweep.
pub fn gamma_p_batch(p: Prime, k: u32, xs: &[BigRational]) -> Result<Vec<PrimePowerResidue>> {
    let mut batch = GammaBatch::new(p, k)?;
    for x in xs {
        batch.push(x)?;
    }
    Ok(batch.evaluate())
}

/// a_p(x): the representative of `x` mod p in `{1, …, p}`.
pub fn residue_rep(x: &BigRational, p: Prime) -> Result<u64> {
    match least_residue(x, p)? {
        0 => Ok(p.get()),
        r => Ok(r),
    }
}

/// `(a)_n` computed as `(-1)^n Γ_p(a+n) / Γ_p(a)` mod p^k.
///
/// Requires none of `a, a+1, …, a+n-1` to be divisible by p.
pub fn pochhammer_gamma(a: &BigRational, n: u64, p: Prime, k: u32) -> Result<PrimePowerResidue> {
    check_precision(k)?;
    if vp(a, p).is_some_and(|v| v < 0) {
        return Err(Error::NonUnitDenominator {
            value: crate::arith::render_rational(a),
            p: p.get(),
        });
    }
    // a + j ≡ 0 (mod p) first happens at j ≡ -a (mod p)
    let r = least_residue(a, p)?;
    let first_bad = (p.get() - r) % p.get();
    if first_bad < n {
        return Err(Error::HypothesisViolated(format!(
            "a + {first_bad} ≡ 0 (mod {p}) for a = {}",
            crate::arith::render_rational(a)
        )));
    }
    let shifted = a + BigRational::from_integer(n.into());
    let g = gamma_p_batch(p, k, &[shifted, a.clone()])?;
    Ok(PrimePowerResidue::sign(p, k, n)? * &g[0] * g[1].inverse()?)
}
