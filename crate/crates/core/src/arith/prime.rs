use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest precision exponent accepted by the public API.
pub const MAX_PRECISION: u32 = 6;

/// An odd prime, validated on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p > 2 && is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotOddPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// `p mod m`
    pub fn modulo(self, m: u64) -> u64 {
        self.0 % m
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn check_precision(k: u32) -> Result<u32> {
    if (1..=MAX_PRECISION).contains(&k) {
        Ok(k)
    } else {
        Err(Error::PrecisionOutOfRange(k))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Odd primes in the inclusive range `[lo, hi]`, via a sieve of Eratosthenes.
pub fn primes_in(lo: u64, hi: u64) -> Vec<Prime> {
    if hi < 3 || lo > hi {
        return Vec::new();
    }
    let n = hi as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
        if i > 2 && i as u64 >= lo {
            out.push(Prime(i as u64));
        }
    }
    out
}
