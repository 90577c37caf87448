use std::time::Instant;

use num_bigint::BigInt;

use super::report::{render_cyclo_exact, render_cyclo_mod, render_residue, CongruenceId, CongruenceReport, Modulus};
use super::specs;
use crate::arith::{
    cyclo_reduce, p_adic_split, rat, reduce_mod, render_rational, vp, BigRational, CycloExact, CycloMod, Prime,
    PrimePowerResidue,
};
use crate::error::{Error, Result};
use crate::eta::{a_p, QSeries};
use crate::gamma::GammaBatch;
use crate::hypergeom::{
    check_alpha, ff1_build, ff1_closed_form_parameters, ff1_spec, gs_lhs, gs_rhs, pfq_exact, pfq_mod_residue,
    pochhammer_quotient, GSParams, PfqSpec, Scalar,
};

/// `c · ∏ Γ_p(x)^e`, as the coefficient `c` and the `(x, e)` factors.
pub type GammaProduct = (BigRational, Vec<(BigRational, i64)>);

/// Evaluates Γ-products mod p^n with one shared sweep.
///
/// A product with coefficient `c`, `v_p(c) = t ≥ 0`, only needs its Γ
/// factors mod `p^(n-t)`; the sweep runs at the largest such precision.
pub fn gamma_products(p: Prime, n: u32, items: &[GammaProduct]) -> Result<Vec<PrimePowerResidue>> {
    let mut plans = Vec::with_capacity(items.len());
    for (c, _) in items {
        let plan = match p_adic_split(c, p) {
            None => None,
            Some((t, unit)) if t < 0 => {
                return Err(Error::NonUnitDenominator {
                    value: render_rational(&(unit * c)),
                    p: p.get(),
                })
            }
            Some((t, _)) if t >= n as i64 => None,
            Some((t, unit)) => Some((t as u32, unit)),
        };
        plans.push(plan);
    }
    let Some(precision) = plans.iter().flatten().map(|(t, _)| n - t).max() else {
        return items.iter().map(|_| PrimePowerResidue::zero(p, n)).collect();
    };

    let mut batch = GammaBatch::new(p, precision)?;
    let mut slots = Vec::with_capacity(items.len());
    for (_, factors) in items {
        let mut s = Vec::with_capacity(factors.len());
        for (x, e) in factors {
            s.push((batch.push(x)?, *e));
        }
        slots.push(s);
    }
    let values = batch.evaluate();

    let mut out = Vec::with_capacity(items.len());
    for (plan, s) in plans.into_iter().zip(slots) {
        let Some((t, unit)) = plan else {
            out.push(PrimePowerResidue::zero(p, n)?);
            continue;
        };
        let j = n - t;
        let mut acc = reduce_mod(&unit, p, j)?;
        for (idx, e) in s {
            acc = acc * values[idx].truncate(j)?.pow_signed(e)?;
        }
        out.push(if t == 0 { acc } else { acc.scale_by_p_power(t)? });
    }
    Ok(out)
}

fn sign(e: u64) -> BigRational {
    if e.is_multiple_of(2) {
        rat(1, 1)
    } else {
        -rat(1, 1)
    }
}

fn prime_rational(p: Prime) -> BigRational {
    BigRational::from_integer(p.get().into())
}

fn require(p: Prime, id: CongruenceId) -> Result<()> {
    if id.supports(p) {
        Ok(())
    } else {
        let range = match id {
            CongruenceId::LongRamakrishna => "5 ≤ p ≤ 23",
            CongruenceId::Ff3 => "p ≥ 5, p ≡ 1 (mod 4)",
            _ => "p ≥ 5",
        };
        Err(Error::RangeUnsupported {
            p: p.get(),
            range: range.into(),
        })
    }
}

/// Compares a truncated series mod p^k against a right-hand class, with the
/// exact sum as a cross-check on the modular evaluator.
fn series_report(
    id: CongruenceId,
    p: Prime,
    spec: &PfqSpec<BigRational>,
    k: u32,
    rhs: &PrimePowerResidue,
    started: Instant,
) -> Result<CongruenceReport> {
    let lhs = pfq_mod_residue(spec, p, k)?;
    let oracle = reduce_mod(&pfq_exact(spec)?, p, k)?;
    let mut report = CongruenceReport::new(id, Some(p), Modulus::PrimePower { p, k });
    report.holds = &lhs == rhs;
    report.oracle_agrees = Some(oracle == lhs);
    report.lhs = render_residue(&lhs);
    report.rhs = render_residue(rhs);
    report.elapsed = started.elapsed();
    Ok(report)
}

/// `∑ ((1/2)_k/k!)^4 ≡ a_p (mod p^3)` with `a_p` from the eta product.
pub fn verify_kilbourn(p: Prime, eta: &QSeries) -> Result<CongruenceReport> {
    let started = Instant::now();
    let ap = BigRational::from_integer(a_p(eta, p)?);
    let rhs = reduce_mod(&ap, p, 3)?;
    series_report(CongruenceId::Kilbourn, p, &specs::kilbourn(p), 3, &rhs, started)
}

/// `∑ (-1)^k (4k+1) ((1/2)_k/k!)^3 ≡ (-1)^((p-1)/2) p (mod p^3)`
pub fn verify_zudilin(p: Prime) -> Result<CongruenceReport> {
    let started = Instant::now();
    let rhs = reduce_mod(&(sign((p.get() - 1) / 2) * prime_rational(p)), p, 3)?;
    series_report(CongruenceId::Zudilin, p, &specs::zudilin(p), 3, &rhs, started)
}

/// `∑ (-1)^k (4k+1) ((1/2)_k/k!)^5 ≡ -p / Γ_p(3/4)^4` or `0 (mod p^3)`
pub fn verify_mccarthy_osburn(p: Prime) -> Result<CongruenceReport> {
    require(p, CongruenceId::McCarthyOsburn)?;
    let started = Instant::now();
    let rhs = if p.modulo(4) == 1 {
        let item = (-prime_rational(p), vec![(rat(3, 4), -4)]);
        gamma_products(p, 3, &[item])?.remove(0)
    } else {
        PrimePowerResidue::zero(p, 3)?
    };
    series_report(
        CongruenceId::McCarthyOsburn,
        p,
        &specs::mccarthy_osburn(p),
        3,
        &rhs,
        started,
    )
}

/// The ₇F₆ with six parameters 1/3, mod p^6:
/// `-p Γ_p(1/3)^9` if `p ≡ 1 (mod 6)`, `-(10/27) p^4 Γ_p(1/3)^9` if `p ≡ 5 (mod 6)`.
pub fn verify_long_ramakrishna(p: Prime) -> Result<CongruenceReport> {
    require(p, CongruenceId::LongRamakrishna)?;
    let started = Instant::now();
    let pr = prime_rational(p);
    let c = if p.modulo(6) == 1 {
        -pr
    } else {
        -rat(10, 27) * pr.clone() * pr.clone() * pr.clone() * pr
    };
    let rhs = gamma_products(p, 6, &[(c, vec![(rat(1, 3), 9)])])?.remove(0);
    series_report(
        CongruenceId::LongRamakrishna,
        p,
        &specs::long_ramakrishna(p),
        6,
        &rhs,
        started,
    )
}

/// The Γ-product on the right of the main congruence for `p ≡ 1 (mod 4)`:
/// `(-1)^((p+3)/4) p Γ(1/2) Γ(1/4)^2 Γ(1+α) Γ(3/4-α) Γ(1/2+α)^3 Γ(1/4-α)^3`.
pub fn main_rhs_product(p: Prime, alpha: &BigRational) -> GammaProduct {
    (
        sign(p.get().div_ceil(4)) * prime_rational(p),
        vec![
            (rat(1, 2), 1),
            (rat(1, 4), 2),
            (rat(1, 1) + alpha, 1),
            (rat(3, 4) - alpha, 1),
            (rat(1, 2) + alpha, 3),
            (rat(1, 4) - alpha, 3),
        ],
    )
}

fn alpha_params(report: CongruenceReport, alpha: &BigRational) -> CongruenceReport {
    report.param("alpha", render_rational(alpha))
}

/// Right-hand classes of the main congruence for several α, with one Γ sweep.
fn main_rhs_batch(p: Prime, alphas: &[BigRational]) -> Result<Vec<PrimePowerResidue>> {
    if p.modulo(4) == 3 {
        return alphas.iter().map(|_| PrimePowerResidue::zero(p, 3)).collect();
    }
    let items: Vec<GammaProduct> = alphas.iter().map(|a| main_rhs_product(p, a)).collect();
    gamma_products(p, 3, &items)
}

/// Runs the main ₇F₆ congruence for each α, sharing the Γ sweep. Each entry
/// fails independently (e.g. when α violates `⟨α⟩_p ≤ ⌊p/4⌋`).
pub fn verify_main_batch(p: Prime, alphas: &[BigRational]) -> Result<Vec<Result<CongruenceReport>>> {
    require(p, CongruenceId::Main)?;
    let shared = Instant::now();
    let valid: Vec<BigRational> = alphas.iter().filter(|a| check_alpha(p, a).is_ok()).cloned().collect();
    let mut rhs = main_rhs_batch(p, &valid)?.into_iter();
    let share = shared.elapsed() / valid.len().max(1) as u32;

    Ok(alphas
        .iter()
        .map(|alpha| {
            check_alpha(p, alpha)?;
            let rhs = rhs.next().expect("one class per valid alpha");
            let started = Instant::now();
            let mut r = series_report(CongruenceId::Main, p, &specs::main(p, alpha), 3, &rhs, started)?;
            r.elapsed += share;
            Ok(alpha_params(r, alpha))
        })
        .collect())
}

pub fn verify_main(p: Prime, alpha: &BigRational) -> Result<CongruenceReport> {
    verify_main_batch(p, std::slice::from_ref(alpha))?.remove(0)
}

/// `₅F₄[…; 1/4] ≡ (-1)^((p+3)/4) p Γ_p(1/2) Γ_p(1/4)^2` or `0 (mod p^3)`
pub fn verify_cor_quarter(p: Prime) -> Result<CongruenceReport> {
    require(p, CongruenceId::CorQuarter)?;
    let started = Instant::now();
    let rhs = if p.modulo(4) == 1 {
        let item = (
            sign(p.get().div_ceil(4)) * prime_rational(p),
            vec![(rat(1, 2), 1), (rat(1, 4), 2)],
        );
        gamma_products(p, 3, &[item])?.remove(0)
    } else {
        PrimePowerResidue::zero(p, 3)?
    };
    series_report(CongruenceId::CorQuarter, p, &specs::cor_quarter(p), 3, &rhs, started)
}

/// Result of re-deriving the ₆F₅ right side from the main right side at α = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cor6F5Chain {
    pub main_rhs: PrimePowerResidue,
    pub cor_rhs: PrimePowerResidue,
    /// Γ_p(1) = −1, Γ_p(1/2)^4 = 1 and Γ_p(1/4) Γ_p(3/4) = (−1)^((p+3)/4), mod p^3.
    pub gamma_identities: bool,
}

impl Cor6F5Chain {
    pub fn holds(&self) -> bool {
        self.gamma_identities && self.main_rhs == self.cor_rhs
    }
}

pub fn cor_6f5_chain(p: Prime) -> Result<Cor6F5Chain> {
    require(p, CongruenceId::Cor6F5)?;
    if p.modulo(4) == 3 {
        let zero = PrimePowerResidue::zero(p, 3)?;
        return Ok(Cor6F5Chain {
            main_rhs: zero.clone(),
            cor_rhs: zero,
            gamma_identities: true,
        });
    }
    let cor_item = (-prime_rational(p), vec![(rat(1, 4), 4)]);
    let mut both = gamma_products(p, 3, &[main_rhs_product(p, &rat(0, 1)), cor_item])?;
    let cor_rhs = both.pop().expect("two products");
    let main_rhs = both.pop().expect("two products");

    let mut batch = GammaBatch::new(p, 3)?;
    let idx: Vec<usize> = [rat(1, 1), rat(1, 2), rat(1, 4), rat(3, 4)]
        .iter()
        .map(|x| batch.push(x))
        .collect::<Result<_>>()?;
    let g = batch.evaluate();
    let one = PrimePowerResidue::one(p, 3)?;
    let gamma_identities = (&g[idx[0]] + &one).is_zero()
        && g[idx[1]].pow(4) == one
        && &g[idx[2]] * &g[idx[3]] == PrimePowerResidue::sign(p, 3, p.get().div_ceil(4))?;
    Ok(Cor6F5Chain {
        main_rhs,
        cor_rhs,
        gamma_identities,
    })
}

/// `₆F₅[…] ≡ -p Γ_p(1/4)^4` or `0 (mod p^3)`; also requires the right side to
/// agree with the α = 0 case of the main right side.
pub fn verify_cor_6f5(p: Prime) -> Result<CongruenceReport> {
    let started = Instant::now();
    let chain = cor_6f5_chain(p)?;
    let mut r = series_report(CongruenceId::Cor6F5, p, &specs::cor_6f5(p), 3, &chain.cor_rhs, started)?;
    r.holds &= chain.holds();
    r = r.param("main_alpha0_rhs", render_residue(&chain.main_rhs));
    r.elapsed = started.elapsed();
    Ok(r)
}

/// Exact equality of both sides of the ω-deformed ₇F₆ summation in Q(ω).
pub fn verify_ff1(p: Prime, alpha: &BigRational) -> Result<CongruenceReport> {
    let started = Instant::now();
    let (lhs, rhs) = ff1_build(p, alpha)?;
    let mut r = CongruenceReport::new(CongruenceId::Ff1, Some(p), Modulus::Exact);
    r.holds = lhs == rhs;
    r.lhs = render_cyclo_exact(&lhs);
    r.rhs = render_cyclo_exact(&rhs);
    r.elapsed = started.elapsed();
    Ok(alpha_params(r, alpha))
}

fn p_unit_denominator(x: &BigRational, p: Prime) -> Result<()> {
    if vp(&BigRational::from_integer(x.denom().clone()), p) == Some(0) {
        Ok(())
    } else {
        Err(Error::NonUnitDenominator {
            value: render_rational(x),
            p: p.get(),
        })
    }
}

/// `(u+vp)_k (u+vpω)_k (u+vpω²)_k ≡ (u)_k^3` in `(Z/p^3)[ω]` for every `k ≤ kmax`.
pub fn verify_ff2(p: Prime, u: &BigRational, v: &BigRational, kmax: usize) -> Result<CongruenceReport> {
    require(p, CongruenceId::Ff2)?;
    p_unit_denominator(u, p)?;
    p_unit_denominator(v, p)?;
    let half = (p.get() as usize - 1) / 2;
    if kmax > half {
        return Err(Error::HypothesisViolated(format!(
            "kmax = {kmax} exceeds (p-1)/2 = {half}"
        )));
    }
    let started = Instant::now();
    let vp_ = CycloExact::from_rational(v * prime_rational(p));
    let w = CycloExact::omega();
    let base = [
        CycloExact::from_rational(u.clone()) + vp_.clone(),
        CycloExact::from_rational(u.clone()) + vp_.clone() * w.clone(),
        CycloExact::from_rational(u.clone()) + vp_ * w.clone() * w,
    ];
    let mut triple = CycloExact::one();
    let mut plain = rat(1, 1);
    let mut holds = true;
    let mut last = (CycloMod::one(p, 3)?, CycloMod::one(p, 3)?);
    for k in 0..=kmax {
        if k > 0 {
            let j = CycloExact::from_int(k as i64 - 1);
            for b in &base {
                triple = triple * (b.clone() + j.clone());
            }
            plain *= u + BigRational::from_integer(BigInt::from(k - 1));
        }
        let lhs = cyclo_reduce(&triple, p, 3)?;
        let rhs = CycloMod::from_residue(reduce_mod(&(plain.clone() * &plain * &plain), p, 3)?);
        holds &= lhs == rhs;
        last = (lhs, rhs);
    }
    let mut r = CongruenceReport::new(CongruenceId::Ff2, Some(p), Modulus::PrimePower { p, k: 3 })
        .param("u", render_rational(u))
        .param("v", render_rational(v))
        .param("kmax", kmax);
    r.holds = holds;
    r.lhs = render_cyclo_mod(&last.0);
    r.rhs = render_cyclo_mod(&last.1);
    r.elapsed = started.elapsed();
    Ok(r)
}

/// The ω-deformed ₇F₆ reduces mod p^3 to the undeformed one of the main congruence.
pub fn verify_ff2_series(p: Prime, alpha: &BigRational) -> Result<CongruenceReport> {
    let started = Instant::now();
    let deformed = cyclo_reduce(&pfq_exact(&ff1_spec(p, alpha)?)?, p, 3)?;
    let spec = specs::main(p, alpha);
    let plain = pfq_mod_residue(&spec, p, 3)?;
    let oracle = reduce_mod(&pfq_exact(&spec)?, p, 3)?;
    let plain = CycloMod::from_residue(plain);
    let mut r =
        CongruenceReport::new(CongruenceId::Ff2, Some(p), Modulus::PrimePower { p, k: 3 }).param("series", "7F6");
    r.holds = deformed == plain;
    r.oracle_agrees = Some(CycloMod::from_residue(oracle) == plain);
    r.lhs = render_cyclo_mod(&deformed);
    r.rhs = render_cyclo_mod(&plain);
    r.elapsed = started.elapsed();
    Ok(alpha_params(r, alpha))
}

/// Checks that none of the four α-dependent Pochhammer symbols of the
/// closed form has a factor divisible by p in Z_p[ω].
fn check_ff3_hypothesis(p: Prime, alpha: &BigRational) -> Result<()> {
    let r = (p.get() as usize - 1) / 4;
    let (num, den) = ff1_closed_form_parameters(p, alpha);
    for x in num[2..].iter().chain(&den[2..]) {
        for j in 0..r {
            let f = x.clone() + CycloExact::from_int(j as i64);
            if vp(&f.norm(), p).is_none_or(|v| v != 0) {
                return Err(Error::HypothesisViolated(format!(
                    "factor {} is not a unit at p = {p}",
                    render_cyclo_exact(&f)
                )));
            }
        }
    }
    Ok(())
}

/// The Pochhammer quotient of the closed form against the main Γ-product,
/// in `(Z/p^3)[ω]`, for each α with one shared Γ sweep.
pub fn verify_ff3_batch(p: Prime, alphas: &[BigRational]) -> Result<Vec<Result<CongruenceReport>>> {
    require(p, CongruenceId::Ff3)?;
    let shared = Instant::now();
    let valid: Vec<BigRational> = alphas
        .iter()
        .filter(|a| check_alpha(p, a).is_ok() && check_ff3_hypothesis(p, a).is_ok())
        .cloned()
        .collect();
    let mut rhs = main_rhs_batch(p, &valid)?.into_iter();
    let share = shared.elapsed() / valid.len().max(1) as u32;
    let r = (p.get() as usize - 1) / 4;

    Ok(alphas
        .iter()
        .map(|alpha| {
            check_alpha(p, alpha)?;
            check_ff3_hypothesis(p, alpha)?;
            let rhs = CycloMod::from_residue(rhs.next().expect("one class per valid alpha"));
            let started = Instant::now();
            let (num, den) = ff1_closed_form_parameters(p, alpha);
            let lhs = cyclo_reduce(&pochhammer_quotient(&num, &den, r)?, p, 3)?;
            let mut rep = CongruenceReport::new(CongruenceId::Ff3, Some(p), Modulus::PrimePower { p, k: 3 });
            rep.holds = lhs == rhs;
            rep.lhs = render_cyclo_mod(&lhs);
            rep.rhs = render_cyclo_mod(&rhs);
            rep.elapsed = started.elapsed() + share;
            Ok(alpha_params(rep, alpha))
        })
        .collect())
}

pub fn verify_ff3(p: Prime, alpha: &BigRational) -> Result<CongruenceReport> {
    verify_ff3_batch(p, std::slice::from_ref(alpha))?.remove(0)
}

/// Exact equality of both sides of the terminating ₇F₆ summation.
pub fn verify_gs(g: &GSParams<BigRational>, params: [&BigRational; 3]) -> Result<CongruenceReport> {
    let started = Instant::now();
    let lhs = gs_lhs(g)?;
    let rhs = gs_rhs(g)?;
    let mut r = CongruenceReport::new(CongruenceId::GesselStanton, None, Modulus::Exact)
        .param("a", render_rational(params[0]))
        .param("b", render_rational(params[1]))
        .param("d", render_rational(params[2]))
        .param("n", g.n());
    r.holds = lhs == rhs;
    r.lhs = render_rational(&lhs);
    r.rhs = render_rational(&rhs);
    r.elapsed = started.elapsed();
    Ok(r)
}

/// Draws pole-free summation parameters with numerators `|·| ≤ 12`,
/// denominators `≤ 12` and `n ≤ 10`; rejected draws are redrawn.
pub fn random_gs_params<R: rand::Rng>(rng: &mut R, count: usize) -> Vec<(GSParams<BigRational>, [BigRational; 3])> {
    let mut out = Vec::with_capacity(count);
    let draw = |rng: &mut R| rat(rng.gen_range(-12..=12), rng.gen_range(1..=12));
    while out.len() < count {
        let (a, b, d) = (draw(rng), draw(rng), draw(rng));
        let n = out.len() % 11;
        let Ok(g) = GSParams::new(a.clone(), b.clone(), d.clone(), n) else {
            continue;
        };
        if gs_rhs(&g).is_err() || gs_lhs(&g).is_err() {
            continue;
        }
        out.push((g, [a, b, d]));
    }
    out
}
