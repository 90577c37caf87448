use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use num_bigint::BigUint;
use serde::Serialize;

use crate::arith::{CycloExact, CycloMod, Prime, PrimePowerResidue};
use crate::error::Error;
use crate::hypergeom::Scalar;

/// The congruences and identities this crate knows how to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CongruenceId {
    Kilbourn,
    Zudilin,
    McCarthyOsburn,
    LongRamakrishna,
    Main,
    CorQuarter,
    Cor6F5,
    GesselStanton,
    Ff1,
    Ff2,
    Ff3,
    GammaLaws,
}

impl CongruenceId {
    pub const ALL: [CongruenceId; 12] = [
        CongruenceId::Kilbourn,
        CongruenceId::Zudilin,
        CongruenceId::McCarthyOsburn,
        CongruenceId::LongRamakrishna,
        CongruenceId::Main,
        CongruenceId::CorQuarter,
        CongruenceId::Cor6F5,
        CongruenceId::GesselStanton,
        CongruenceId::Ff1,
        CongruenceId::Ff2,
        CongruenceId::Ff3,
        CongruenceId::GammaLaws,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CongruenceId::Kilbourn => "kilbourn-1.1",
            CongruenceId::Zudilin => "zudilin-1.2",
            CongruenceId::McCarthyOsburn => "mccarthy-osburn-1.3",
            CongruenceId::LongRamakrishna => "long-ramakrishna-p6",
            CongruenceId::Main => "main-1.4",
            CongruenceId::CorQuarter => "cor-1.5",
            CongruenceId::Cor6F5 => "cor-1.6",
            CongruenceId::GesselStanton => "gs-2.6",
            CongruenceId::Ff1 => "ff-3.1",
            CongruenceId::Ff2 => "ff-3.2",
            CongruenceId::Ff3 => "ff-3.3",
            CongruenceId::GammaLaws => "gamma-laws",
        }
    }

    /// Whether the checker is defined at `p`.
    pub fn supports(self, p: Prime) -> bool {
        let p = p.get();
        match self {
            CongruenceId::Kilbourn | CongruenceId::Zudilin => true,
            CongruenceId::LongRamakrishna => (5..=23).contains(&p),
            CongruenceId::Ff3 => p >= 5 && p % 4 == 1,
            _ => p >= 5,
        }
    }

    /// Whether the sweep runs this checker once per α.
    pub fn uses_alpha(self) -> bool {
        matches!(
            self,
            CongruenceId::Main | CongruenceId::Ff1 | CongruenceId::Ff2 | CongruenceId::Ff3
        )
    }
}

impl fmt::Display for CongruenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CongruenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        CongruenceId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

impl Serialize for CongruenceId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// The ring a report's two sides were compared in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Modulus {
    PrimePower { p: Prime, k: u32 },
    Exact,
}

impl Modulus {
    /// `p^k` in decimal, or `exact`.
    pub fn decimal(&self) -> String {
        match self {
            Modulus::PrimePower { p, k } => BigUint::from(p.get()).pow(*k).to_string(),
            Modulus::Exact => "exact".into(),
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Modulus::PrimePower { p, k } => write!(f, "mod {p}^{k}"),
            Modulus::Exact => write!(f, "exact"),
        }
    }
}

/// Verdict of one congruence check.
#[derive(Clone, Debug, PartialEq)]
pub struct CongruenceReport {
    pub id: CongruenceId,
    pub p: Option<Prime>,
    pub params: BTreeMap<String, String>,
    pub modulus: Modulus,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
    pub elapsed: Duration,
    /// Whether the fast modular evaluator agreed with the exact one, for
    /// checks whose left side is a truncated series.
    pub oracle_agrees: Option<bool>,
}

impl CongruenceReport {
    pub fn new(id: CongruenceId, p: Option<Prime>, modulus: Modulus) -> Self {
        CongruenceReport {
            id,
            p,
            params: BTreeMap::new(),
            modulus,
            lhs: String::new(),
            rhs: String::new(),
            holds: false,
            elapsed: Duration::ZERO,
            oracle_agrees: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    /// A failed check that never got to compare classes.
    pub fn failed(id: CongruenceId, p: Option<Prime>, params: BTreeMap<String, String>, err: &Error) -> Self {
        CongruenceReport {
            params,
            lhs: format!("error: {err}"),
            ..CongruenceReport::new(id, p, Modulus::Exact)
        }
    }

    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn record(&self, timing: bool) -> ReportRecord<'_> {
        ReportRecord {
            id: self.id,
            p: self.p.map(Prime::get),
            params: &self.params,
            modulus: self.modulus.decimal(),
            lhs: &self.lhs,
            rhs: &self.rhs,
            holds: self.holds,
            elapsed_ms: if timing { self.elapsed.as_secs_f64() * 1e3 } else { 0.0 },
        }
    }

    pub fn text_line(&self, timing: bool) -> String {
        let p = self.p.map_or_else(|| "-".to_string(), |p| p.to_string());
        let mut line = format!(
            "{} p={} [{}] {}: lhs={} rhs={} {}",
            self.id,
            p,
            self.params_string(),
            self.modulus,
            self.lhs,
            self.rhs,
            if self.holds { "HOLDS" } else { "FAILS" }
        );
        if timing {
            line.push_str(&format!(" ({:.3} ms)", self.elapsed.as_secs_f64() * 1e3));
        }
        line
    }
}

/// The serialized shape of a report: exactly the published columns.
#[derive(Serialize)]
pub struct ReportRecord<'a> {
    pub id: CongruenceId,
    pub p: Option<u64>,
    pub params: &'a BTreeMap<String, String>,
    pub modulus: String,
    pub lhs: &'a str,
    pub rhs: &'a str,
    pub holds: bool,
    pub elapsed_ms: f64,
}

pub const CSV_HEADER: &str = "id,p,params,modulus,lhs,rhs,holds,elapsed_ms";

impl ReportRecord<'_> {
    pub fn csv_row(&self, report: &CongruenceReport) -> String {
        let quote = |s: &str| {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        };
        format!(
            "{},{},{},{},{},{},{},{}",
            self.id,
            self.p.map_or_else(String::new, |p| p.to_string()),
            quote(&report.params_string()),
            self.modulus,
            quote(self.lhs),
            quote(self.rhs),
            self.holds,
            self.elapsed_ms
        )
    }
}

/// Least non-negative representative, as a decimal string.
pub fn render_residue(r: &PrimePowerResidue) -> String {
    r.value().to_string()
}

pub fn render_cyclo_mod(x: &CycloMod) -> String {
    format!("{} + {}ω", x.c0, x.c1)
}

pub fn render_cyclo_exact(x: &CycloExact) -> String {
    Scalar::render(x)
}
