//! Randomized checks of the functional equations of Γ_p at rational arguments.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::{CongruenceId, CongruenceReport, Modulus};
use crate::arith::{least_residue, rat, reduce_mod, vp, BigRational, Prime, PrimePowerResidue, MAX_PRECISION};
use crate::error::Result;
use crate::gamma::{gamma, residue_rep, GammaBatch};
use crate::hypergeom::pochhammer;

const K: u32 = 3;

/// Outcome of the Γ_p law suite at one prime.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GammaLawSummary {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl GammaLawSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

/// Random rational with p-unit denominator.
pub fn random_p_integral<R: Rng>(rng: &mut R, p: Prime) -> BigRational {
    loop {
        let den: i64 = rng.gen_range(1..=60);
        if !(den as u64).is_multiple_of(p.get()) {
            return rat(rng.gen_range(-600..=600), den);
        }
    }
}

fn r_int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

enum Law {
    Reflection { x: BigRational, g: usize, h: usize },
    Shift { x: BigRational, g: usize, h: usize },
    Pochhammer { a: BigRational, n: u64, g: usize, h: usize },
    ThirdDifference { a: BigRational, g: [usize; 4] },
    Continuity { x: BigRational, g: usize, h: usize },
}

/// Runs reflection, shift, Pochhammer-through-Γ and continuity at `samples`
/// random arguments each, the third-difference test at `diff_samples`
/// arguments, and the fixed identities at `p/4` and `1/2`, all mod p^3 with
/// one shared sweep.
pub fn gamma_law_suite(p: Prime, samples: usize, diff_samples: usize, seed: u64) -> Result<GammaLawSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p.get().wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut batch = GammaBatch::new(p, K)?;
    let mut laws = Vec::new();
    let pr = r_int(p.get() as i64);
    let pk = r_int(p.get().pow(K) as i64);

    for i in 0..samples {
        let x = random_p_integral(&mut rng, p);
        laws.push(Law::Reflection {
            g: batch.push(&x)?,
            h: batch.push(&(r_int(1) - &x))?,
            x,
        });

        // every other shift sample is divisible by p
        let x = if i % 2 == 0 {
            random_p_integral(&mut rng, p)
        } else {
            random_p_integral(&mut rng, p) * &pr
        };
        laws.push(Law::Shift {
            g: batch.push(&x)?,
            h: batch.push(&(&x + r_int(1)))?,
            x,
        });

        let a = random_p_integral(&mut rng, p);
        let first_bad = (p.get() - least_residue(&a, p)?) % p.get();
        let n = rng.gen_range(0..=first_bad.min(12));
        laws.push(Law::Pochhammer {
            g: batch.push(&(&a + r_int(n as i64)))?,
            h: batch.push(&a)?,
            a,
            n,
        });

        let x = random_p_integral(&mut rng, p);
        let y = &x + &pk * r_int(rng.gen_range(-50..=50));
        laws.push(Law::Continuity {
            g: batch.push(&x)?,
            h: batch.push(&y)?,
            x,
        });
    }
    for _ in 0..diff_samples {
        let a = random_p_integral(&mut rng, p);
        let mut g = [0; 4];
        for (m, slot) in g.iter_mut().enumerate() {
            *slot = batch.push(&(&a + r_int(m as i64) * &pr))?;
        }
        laws.push(Law::ThirdDifference { a, g });
    }
    let quarter_p = batch.push(&(&pr / r_int(4)))?;
    let quarter_p_plus_one = batch.push(&(&pr / r_int(4) + r_int(1)))?;
    let half = batch.push(&rat(1, 2))?;

    let values = batch.evaluate();
    let one = PrimePowerResidue::one(p, K)?;
    let sign = |e: u64| PrimePowerResidue::sign(p, K, e);
    let mut summary = GammaLawSummary::default();

    for law in laws {
        match law {
            Law::Reflection { x, g, h } => {
                let expected = sign(residue_rep(&x, p)?)?;
                summary.record(&values[g] * &values[h] == expected, || format!("reflection at x = {x}"));
            }
            Law::Shift { x, g, h } => {
                let expected = if vp(&x, p).is_some_and(|v| v == 0) {
                    -(reduce_mod(&x, p, K)? * &values[g])
                } else {
                    -values[g].clone()
                };
                summary.record(values[h] == expected, || format!("shift at x = {x}"));
            }
            Law::Pochhammer { a, n, g, h } => {
                let via_gamma = sign(n)? * &values[g] * values[h].inverse()?;
                let direct = reduce_mod(&pochhammer(&a, n as usize), p, K)?;
                summary.record(via_gamma == direct, || format!("pochhammer at a = {a}, n = {n}"));
            }
            Law::Continuity { x, g, h } => {
                summary.record(values[g] == values[h], || format!("continuity at x = {x}"));
            }
            Law::ThirdDifference { a, g } => {
                let f: Vec<&PrimePowerResidue> = g.iter().map(|&i| &values[i]).collect();
                let three = PrimePowerResidue::from_i64(p, K, 3)?;
                let diff = f[3] - &(&three * f[2]) + &three * f[1] - f[0];
                summary.record(diff.is_zero(), || format!("third difference at a = {a}"));
            }
        }
    }

    let ratio = &values[quarter_p] * values[quarter_p_plus_one].inverse()?;
    summary.record((ratio + one.clone()).is_zero(), || "Γ(p/4)/Γ(1+p/4) = -1".into());
    let half_sq = values[half].pow(2);
    summary.record(half_sq == sign(p.get().div_ceil(2))?, || {
        "Γ(1/2)^2 = (-1)^((p+1)/2)".into()
    });

    for k in 1..=MAX_PRECISION {
        let g1 = gamma(&r_int(1), p, k)?;
        summary.record((g1 + PrimePowerResidue::one(p, k)?).is_zero(), || {
            format!("Γ(1) = -1 mod {p}^{k}")
        });
        let g0 = gamma(&r_int(0), p, k)?;
        summary.record(g0.is_one(), || format!("Γ(0) = 1 mod {p}^{k}"));
    }
    Ok(summary)
}

/// Report form of [`gamma_law_suite`]: `lhs` counts passed checks, `rhs` all checks.
pub fn verify_gamma_laws(p: Prime, samples: usize, seed: u64) -> Result<CongruenceReport> {
    let started = Instant::now();
    let diff_samples = samples.clamp(20, 100);
    let summary = gamma_law_suite(p, samples, diff_samples, seed)?;
    let mut r = CongruenceReport::new(CongruenceId::GammaLaws, Some(p), Modulus::PrimePower { p, k: K })
        .param("samples", samples)
        .param("seed", seed);
    if let Some(first) = summary.failures.first() {
        r = r.param("first_failure", first);
    }
    r.holds = summary.passed();
    r.lhs = (summary.checks - summary.failures.len()).to_string();
    r.rhs = summary.checks.to_string();
    r.elapsed = started.elapsed();
    Ok(r)
}
