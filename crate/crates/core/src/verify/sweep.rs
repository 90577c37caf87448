use std::collections::BTreeMap;

use rayon::prelude::*;

use super::checks::*;
use super::gamma_laws::verify_gamma_laws;
use super::report::{CongruenceId, CongruenceReport};
use crate::arith::{rat, render_rational, BigRational, Prime};
use crate::error::{Error, Result};
use crate::eta::{eta_product_qexp, QSeries};
use crate::hypergeom::check_alpha;

/// Which α the α-dependent checkers run at.
#[derive(Clone, Debug, PartialEq)]
pub enum AlphaPolicy {
    /// Every integer in `[0, ⌊p/4⌋]`.
    All,
    /// The given values, at each prime where `⟨α⟩_p ≤ ⌊p/4⌋` holds.
    List(Vec<BigRational>),
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub ids: Vec<CongruenceId>,
    pub primes: Vec<Prime>,
    pub alpha: AlphaPolicy,
    pub seed: u64,
    /// Random arguments per law in the Γ_p suite.
    pub law_samples: usize,
    /// Random parameter triples for the terminating summation.
    pub gs_cases: usize,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl SweepConfig {
    pub fn new(ids: Vec<CongruenceId>, primes: Vec<Prime>) -> Self {
        SweepConfig {
            ids,
            primes,
            alpha: AlphaPolicy::All,
            seed: 0,
            law_samples: 100,
            gs_cases: 100,
            jobs: None,
        }
    }
}

/// The α values used at `p`, ascending.
pub fn alphas_for(p: Prime, policy: &AlphaPolicy) -> Vec<BigRational> {
    match policy {
        AlphaPolicy::All => (0..=(p.get() / 4) as i64).map(|a| rat(a, 1)).collect(),
        AlphaPolicy::List(list) => {
            let mut v: Vec<BigRational> = list.iter().filter(|a| check_alpha(p, a).is_ok()).cloned().collect();
            v.sort();
            v.dedup();
            v
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Cell {
    AtPrime(CongruenceId, Prime),
    Identity,
}

fn cells(cfg: &SweepConfig) -> Vec<Cell> {
    let mut ids = cfg.ids.clone();
    ids.sort();
    ids.dedup();
    let mut primes = cfg.primes.clone();
    primes.sort();
    primes.dedup();
    let mut out = Vec::new();
    for id in ids {
        if id == CongruenceId::GesselStanton {
            out.push(Cell::Identity);
            continue;
        }
        out.extend(
            primes
                .iter()
                .filter(|&&p| id.supports(p))
                .map(|&p| Cell::AtPrime(id, p)),
        );
    }
    out
}

/// Precision of the Γ_p sweep a checker runs at `p`, if any.
fn gamma_precision(id: CongruenceId, p: Prime) -> Option<u32> {
    let one_mod_four = p.modulo(4) == 1;
    match id {
        CongruenceId::McCarthyOsburn | CongruenceId::Main | CongruenceId::CorQuarter if one_mod_four => Some(2),
        CongruenceId::Ff3 => Some(2),
        CongruenceId::Cor6F5 if one_mod_four => Some(3),
        CongruenceId::GammaLaws => Some(3),
        CongruenceId::LongRamakrishna if p.modulo(6) == 1 => Some(5),
        CongruenceId::LongRamakrishna if p.get() == 5 => Some(1),
        CongruenceId::LongRamakrishna => Some(2),
        _ => None,
    }
}

/// Upper bound on the total Γ_p sweep length (ring multiplications).
pub fn estimated_work(cfg: &SweepConfig) -> u128 {
    cells(cfg)
        .into_iter()
        .map(|c| match c {
            Cell::AtPrime(id, p) => gamma_precision(id, p).map_or(0, |k| (p.get() as u128).pow(k)),
            Cell::Identity => 0,
        })
        .sum()
}

fn failure(id: CongruenceId, p: Option<Prime>, alpha: Option<&BigRational>, err: &Error) -> CongruenceReport {
    let mut params = BTreeMap::new();
    if let Some(a) = alpha {
        params.insert("alpha".to_string(), render_rational(a));
    }
    CongruenceReport::failed(id, p, params, err)
}

fn per_alpha(
    id: CongruenceId,
    p: Prime,
    alphas: &[BigRational],
    batch: Result<Vec<Result<CongruenceReport>>>,
) -> Vec<CongruenceReport> {
    match batch {
        Err(e) => vec![failure(id, Some(p), None, &e)],
        Ok(results) => results
            .into_iter()
            .zip(alphas)
            .map(|(r, a)| r.unwrap_or_else(|e| failure(id, Some(p), Some(a), &e)))
            .collect(),
    }
}

fn run_cell(cell: Cell, cfg: &SweepConfig, eta: Option<&QSeries>) -> Vec<CongruenceReport> {
    let (id, p) = match cell {
        Cell::Identity => {
            let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(cfg.seed);
            return random_gs_params(&mut rng, cfg.gs_cases)
                .iter()
                .map(|(g, [a, b, d])| {
                    verify_gs(g, [a, b, d]).unwrap_or_else(|e| failure(CongruenceId::GesselStanton, None, None, &e))
                })
                .collect();
        }
        Cell::AtPrime(id, p) => (id, p),
    };
    let one = |r: Result<CongruenceReport>| vec![r.unwrap_or_else(|e| failure(id, Some(p), None, &e))];
    let alphas = alphas_for(p, &cfg.alpha);
    match id {
        CongruenceId::Kilbourn => one(verify_kilbourn(p, eta.expect("eta expansion prepared"))),
        CongruenceId::Zudilin => one(verify_zudilin(p)),
        CongruenceId::McCarthyOsburn => one(verify_mccarthy_osburn(p)),
        CongruenceId::LongRamakrishna => one(verify_long_ramakrishna(p)),
        CongruenceId::CorQuarter => one(verify_cor_quarter(p)),
        CongruenceId::Cor6F5 => one(verify_cor_6f5(p)),
        CongruenceId::GammaLaws => one(verify_gamma_laws(p, cfg.law_samples, cfg.seed)),
        CongruenceId::Main => per_alpha(id, p, &alphas, verify_main_batch(p, &alphas)),
        CongruenceId::Ff3 => per_alpha(id, p, &alphas, verify_ff3_batch(p, &alphas)),
        CongruenceId::Ff1 => alphas
            .iter()
            .map(|a| verify_ff1(p, a).unwrap_or_else(|e| failure(id, Some(p), Some(a), &e)))
            .collect(),
        CongruenceId::Ff2 => {
            let half = (p.get() as usize - 1) / 2;
            let mut out = one(verify_ff2(p, &rat(1, 2), &rat(-1, 2), half));
            out.extend(one(verify_ff2(p, &rat(1, 1), &rat(1, 4), half)));
            out.extend(
                alphas
                    .iter()
                    .map(|a| verify_ff2_series(p, a).unwrap_or_else(|e| failure(id, Some(p), Some(a), &e))),
            );
            out
        }
        CongruenceId::GesselStanton => unreachable!("identity cell"),
    }
}

fn run_all(cfg: &SweepConfig) -> Vec<CongruenceReport> {
    let eta = cfg.ids.contains(&CongruenceId::Kilbourn).then(|| {
        let limit = cfg.primes.iter().map(|p| p.get() as usize).max().unwrap_or(0).max(100);
        eta_product_qexp(limit).expect("limit ≥ 1")
    });
    let per_cell: Vec<Vec<CongruenceReport>> = cells(cfg)
        .into_par_iter()
        .map(|c| run_cell(c, cfg, eta.as_ref()))
        .collect();
    per_cell.into_iter().flatten().collect()
}

/// Runs every requested checker at every supported prime. Reports come back
/// ordered by id, then prime, then α, whatever order the cells finish in.
/// A checker error becomes a failed report; it never aborts the sweep.
pub fn sweep(cfg: &SweepConfig) -> Vec<CongruenceReport> {
    match cfg.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map(|pool| pool.install(|| run_all(cfg)))
            .unwrap_or_else(|_| run_all(cfg)),
        None => run_all(cfg),
    }
}
