//! q-expansion of the weight 4 eta product
//!
//! ```text
//! η(2z)^4 η(4z)^4 = q ∏_{n≥1} (1 - q^{2n})^4 (1 - q^{4n})^4
//! ```
//!
//! by truncated dense multiplication, one sparse binomial `(1 - q^m)` at a time.

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::Prime;
use crate::error::{Error, Result};

/// Integer power series truncated after `q^limit`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coefficients: Vec<BigInt>,
}

impl QSeries {
    pub fn limit(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Coefficients of `q^0 … q^limit`.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn coefficient(&self, index: usize) -> Result<&BigInt> {
        self.coefficients.get(index).ok_or(Error::LimitExceeded {
            index,
            limit: self.limit(),
        })
    }
}

/// Multiplies `poly` in place by `(1 - q^m)`, dropping powers past its length.
fn mul_one_minus_q_pow(poly: &mut [BigInt], m: usize) {
    for i in (m..poly.len()).rev() {
        let (lo, hi) = poly.split_at_mut(i);
        hi[0] -= &lo[i - m];
    }
}

/// Coefficients of `q ∏ (1 - q^{2n})^4 (1 - q^{4n})^4` through `q^limit`.
pub fn eta_product_qexp(limit: usize) -> Result<QSeries> {
    if limit == 0 {
        return Err(Error::LimitExceeded { index: 0, limit: 0 });
    }
    // the product only needs powers up to q^(limit-1)
    let mut product = vec![BigInt::default(); limit];
    product[0] = BigInt::one();
    for step in [2usize, 4] {
        let mut m = step;
        while m < limit {
            for _ in 0..4 {
                mul_one_minus_q_pow(&mut product, m);
            }
            m += step;
        }
    }
    let mut coefficients = Vec::with_capacity(limit + 1);
    coefficients.push(BigInt::default());
    coefficients.extend(product);
    Ok(QSeries { coefficients })
}

/// The coefficient `a_p` read from an expansion.
pub fn a_p(series: &QSeries, p: Prime) -> Result<BigInt> {
    series.coefficient(p.get() as usize).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Re-expansion with the factors in the opposite order and each fourth
    /// power applied through its binomial coefficients 1, -4, 6, -4, 1.
    fn reference(limit: usize) -> Vec<BigInt> {
        let mut poly = vec![BigInt::default(); limit + 1];
        poly[1] = BigInt::one();
        let mut ms: Vec<usize> = (1..=limit).filter(|m| m % 2 == 0).collect();
        ms.extend((1..=limit).filter(|m| m % 4 == 0));
        ms.reverse();
        for m in ms {
            let mut next = vec![BigInt::default(); limit + 1];
            for (j, c) in [1i64, -4, 6, -4, 1].iter().enumerate() {
                for i in 0..=limit {
                    if i + j * m <= limit {
                        next[i + j * m] += &poly[i] * c;
                    }
                }
            }
            poly = next;
        }
        poly
    }

    #[test]
    fn leading_coefficients() {
        let s = eta_product_qexp(3).unwrap();
        let got: Vec<i64> = s.coefficients()[1..].iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(got, vec![1, 0, -4]);
        assert_eq!(eta_product_qexp(1).unwrap().coefficient(1).unwrap(), &BigInt::one());
        assert_eq!(s.coefficient(2).unwrap(), &BigInt::default());
        assert!(matches!(
            s.coefficient(4),
            Err(Error::LimitExceeded { index: 4, limit: 3 })
        ));
        assert!(eta_product_qexp(0).is_err());
    }

    #[test]
    fn independent_expansion_agrees() {
        let s = eta_product_qexp(120).unwrap();
        assert_eq!(s.coefficients(), reference(120).as_slice());
        let p5 = Prime::new(5).unwrap();
        assert_eq!(a_p(&s, p5).unwrap(), reference(120)[5]);
    }

    #[test]
    fn even_coefficients_vanish() {
        let s = eta_product_qexp(300).unwrap();
        assert!(s.coefficients().iter().step_by(2).all(|c| c == &BigInt::default()));
    }

    #[test]
    fn prefix_stable() {
        let short = eta_product_qexp(50).unwrap();
        let long = eta_product_qexp(200).unwrap();
        assert_eq!(short.coefficients(), &long.coefficients()[..=50]);
    }
}
