//! Acceptance run: every criterion prints one PASS/FAIL line and the process
//! exits non-zero if any criterion fails. Checks are exact, no tolerance.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use supercongruence::arith::{primes_in, rat, Prime};
use supercongruence::eta::eta_product_qexp;
use supercongruence::hypergeom::{ff1_build, GSParams};
use supercongruence::verify::{
    alphas_for, cor_6f5_chain, gamma_law_suite, random_gs_params, random_p_integral, verify_cor_6f5,
    verify_cor_quarter, verify_ff2, verify_ff3_batch, verify_gs, verify_kilbourn, verify_long_ramakrishna,
    verify_main_batch, verify_mccarthy_osburn, verify_zudilin, AlphaPolicy, CongruenceReport,
};

type Outcome = Result<String, String>;

const SEED: u64 = 0x5eed;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_hold(reports: &[CongruenceReport]) -> Result<(), String> {
    match reports.iter().find(|r| !r.holds) {
        None => Ok(()),
        Some(r) => Err(format!("first failure: {}", r.text_line(false))),
    }
}

fn primes(lo: u64, hi: u64) -> Vec<Prime> {
    primes_in(lo, hi)
}

fn flatten(
    batch: supercongruence::Result<Vec<supercongruence::Result<CongruenceReport>>>,
) -> Result<Vec<CongruenceReport>, String> {
    batch
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|r| r.map_err(|e| e.to_string()))
        .collect()
}

fn main_congruence(oracle: &mut Vec<CongruenceReport>) -> Outcome {
    let started = Instant::now();
    let mut reports = Vec::new();
    let (mut one, mut three) = (false, false);
    for p in primes(5, 97) {
        let alphas = alphas_for(p, &AlphaPolicy::All);
        ensure(alphas.len() as u64 == p.get() / 4 + 1, || {
            format!("alpha range at p = {p}")
        })?;
        let batch = flatten(verify_main_batch(p, &alphas))?;
        ensure(batch.len() == alphas.len(), || format!("missing reports at p = {p}"))?;
        one |= p.modulo(4) == 1;
        three |= p.modulo(4) == 3;
        reports.extend(batch);
    }
    ensure(one && three, || "both classes mod 4".into())?;
    all_hold(&reports)?;
    let elapsed = started.elapsed();
    ensure(elapsed <= Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    let n = reports.len();
    oracle.extend(reports);
    Ok(format!("{n} (p, alpha) pairs, p in 5..97"))
}

fn corollaries(oracle: &mut Vec<CongruenceReport>) -> Outcome {
    let mut reports = Vec::new();
    let mut chains = 0;
    for p in primes(5, 97) {
        reports.push(verify_cor_quarter(p).map_err(|e| e.to_string())?);
        reports.push(verify_cor_6f5(p).map_err(|e| e.to_string())?);
        if p.modulo(4) == 1 {
            let chain = cor_6f5_chain(p).map_err(|e| e.to_string())?;
            ensure(chain.holds(), || format!("alpha = 0 chain at p = {p}: {chain:?}"))?;
            chains += 1;
        }
    }
    all_hold(&reports)?;
    let n = reports.len();
    oracle.extend(reports);
    Ok(format!("{n} reports, {chains} alpha = 0 chains"))
}

fn eta_coefficient_sum(oracle: &mut Vec<CongruenceReport>) -> Outcome {
    let eta = eta_product_qexp(100).map_err(|e| e.to_string())?;
    let mut reports = Vec::new();
    for p in primes(3, 97) {
        reports.push(verify_kilbourn(p, &eta).map_err(|e| e.to_string())?);
    }
    let at3 = &reports[0];
    ensure(at3.lhs == "23" && at3.rhs == "23", || {
        format!("p = 3 anchor: {}", at3.text_line(false))
    })?;
    ensure(eta.coefficient(3).map_err(|e| e.to_string())? == &(-4).into(), || {
        "a_3 = -4".into()
    })?;
    all_hold(&reports)?;
    let n = reports.len();
    oracle.extend(reports);
    Ok(format!("{n} primes, p = 3 gives 23"))
}

fn alternating_cubic(oracle: &mut Vec<CongruenceReport>) -> Outcome {
    let mut reports = Vec::new();
    for p in primes(3, 97) {
        reports.push(verify_zudilin(p).map_err(|e| e.to_string())?);
    }
    let at5 = &reports[1];
    ensure(at5.lhs == "5", || format!("p = 5 anchor: {}", at5.text_line(false)))?;
    all_hold(&reports)?;
    let n = reports.len();
    oracle.extend(reports);
    Ok(format!("{n} primes, p = 5 gives 5"))
}

fn alternating_quintic(oracle: &mut Vec<CongruenceReport>) -> Outcome {
    let mut reports = Vec::new();
    let mut zeros = 0;
    for p in primes(5, 97) {
        let r = verify_mccarthy_osburn(p).map_err(|e| e.to_string())?;
        if p.modulo(4) == 3 {
            ensure(r.rhs == "0" && r.lhs == "0", || {
                format!("zero case: {}", r.text_line(false))
            })?;
            zeros += 1;
        }
        reports.push(r);
    }
    all_hold(&reports)?;
    let n = reports.len();
    oracle.extend(reports);
    Ok(format!("{n} primes, {zeros} zero cases"))
}

fn sextic_order(oracle: &mut Vec<CongruenceReport>) -> Outcome {
    let started = Instant::now();
    let set: Vec<Prime> = [7, 11, 13, 17, 19, 23]
        .iter()
        .map(|&p| Prime::new(p).unwrap())
        .collect();
    ensure(
        set.iter().any(|p| p.modulo(6) == 1) && set.iter().any(|p| p.modulo(6) == 5),
        || "classes mod 6".into(),
    )?;
    let mut reports = Vec::new();
    for &p in &set {
        reports.push(verify_long_ramakrishna(p).map_err(|e| e.to_string())?);
    }
    all_hold(&reports)?;
    let elapsed = started.elapsed();
    ensure(elapsed <= Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    oracle.extend(reports);
    Ok("p in {7, 11, 13, 17, 19, 23} mod p^6".into())
}

fn terminating_summation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let cases = random_gs_params(&mut rng, 110);
    let mut reports = Vec::new();
    for (g, [a, b, d]) in &cases {
        ensure(g.n() <= 10, || "n > 10".into())?;
        reports.push(verify_gs(g, [a, b, d]).map_err(|e| e.to_string())?);
    }
    let forced = [
        (rat(2, 3), rat(-1, 5), rat(3, 7), 0, "1"),
        (rat(1, 4), rat(1, 2), rat(1, 4), 0, "1"),
        (rat(2, 3), rat(1, 5), rat(3, 7), 3, "0"),
        (rat(-5, 6), rat(7, 2), rat(1, 9), 7, "0"),
    ];
    for (a, b, d, n, both) in forced {
        let g = GSParams::new(a.clone(), b.clone(), d.clone(), n).map_err(|e| e.to_string())?;
        let r = verify_gs(&g, [&a, &b, &d]).map_err(|e| e.to_string())?;
        ensure(r.lhs == both && r.rhs == both, || {
            format!("forced case: {}", r.text_line(false))
        })?;
        reports.push(r);
    }
    all_hold(&reports)?;
    Ok(format!("{} random and 4 forced cases", cases.len()))
}

fn ff1() -> Outcome {
    let mut count = 0;
    for p in primes(5, 37) {
        for alpha in alphas_for(p, &AlphaPolicy::All) {
            let (lhs, rhs) = ff1_build(p, &alpha).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || format!("p = {p}, alpha = {alpha}: {lhs} vs {rhs}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} (p, alpha) pairs exact in Q(ω)"))
}

fn ff2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut reports = Vec::new();
    for p in [5, 7, 11, 13].map(|p| Prime::new(p).unwrap()) {
        let kmax = (p.get() as usize - 1) / 2;
        for _ in 0..50 {
            let u = random_p_integral(&mut rng, p);
            let v = random_p_integral(&mut rng, p);
            reports.push(verify_ff2(p, &u, &v, kmax).map_err(|e| e.to_string())?);
        }
    }
    all_hold(&reports)?;
    Ok(format!("{} (u, v) pairs, every k ≤ (p-1)/2", reports.len()))
}

fn ff3() -> Outcome {
    let mut reports = Vec::new();
    for p in primes(5, 61).into_iter().filter(|p| p.modulo(4) == 1) {
        let alphas = alphas_for(p, &AlphaPolicy::All);
        let batch = flatten(verify_ff3_batch(p, &alphas))?;
        ensure(batch.len() == alphas.len(), || format!("missing reports at p = {p}"))?;
        reports.extend(batch);
    }
    all_hold(&reports)?;
    Ok(format!("{} (p, alpha) pairs in (Z/p^3)[ω]", reports.len()))
}

fn gamma_laws() -> Outcome {
    let mut checks = 0;
    for p in primes(5, 97) {
        let s = gamma_law_suite(p, 100, 20, SEED).map_err(|e| e.to_string())?;
        ensure(s.passed(), || format!("p = {p}: {:?}", s.failures))?;
        checks += s.checks;
    }
    Ok(format!("{checks} checks, 100 arguments per law, 20 third differences"))
}

fn oracle(reports: &[CongruenceReport]) -> Outcome {
    ensure(!reports.is_empty(), || "no reports collected".into())?;
    if let Some(r) = reports.iter().find(|r| r.oracle_agrees != Some(true)) {
        return Err(format!("{:?} at {}", r.oracle_agrees, r.text_line(false)));
    }
    Ok(format!("{} reports, zero mismatches", reports.len()))
}

fn run(name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let started = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        Err(e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into()))
    });
    let secs = started.elapsed().as_secs_f64();
    match outcome {
        Ok(detail) => {
            println!("PASS  {name}: {detail} ({secs:.2} s)");
            true
        }
        Err(detail) => {
            println!("FAIL  {name}: {detail} ({secs:.2} s)");
            false
        }
    }
}

fn main() {
    let mut collected = Vec::new();
    let mut ok = true;
    ok &= run(" 1 main 7F6 mod p^3", || main_congruence(&mut collected));
    ok &= run(" 2 corollaries mod p^3", || corollaries(&mut collected));
    ok &= run(" 3 ((1/2)_k/k!)^4 sum ≡ a_p mod p^3", || {
        eta_coefficient_sum(&mut collected)
    });
    ok &= run(" 4 (4k+1)((1/2)_k/k!)^3 sum mod p^3", || {
        alternating_cubic(&mut collected)
    });
    ok &= run(" 5 (4k+1)((1/2)_k/k!)^5 sum mod p^3", || {
        alternating_quintic(&mut collected)
    });
    ok &= run(" 6 7F6 at 1/3 mod p^6", || sextic_order(&mut collected));
    ok &= run(" 7 terminating 7F6 summation", terminating_summation);
    ok &= run(" 8 ω-deformed summation in Q(ω)", ff1);
    ok &= run(" 9 triple Pochhammer in (Z/p^3)[ω]", ff2);
    ok &= run("10 Pochhammer quotient vs Γ-product", ff3);
    ok &= run("11 Γ_p law suite", gamma_laws);
    ok &= run("12 modular vs exact series oracle", || oracle(&collected));
    if !ok {
        std::process::exit(1);
    }
}
