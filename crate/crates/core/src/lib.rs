//! Exact and modular arithmetic for checking hypergeometric supercongruences.
//!
//! The building blocks are residues mod `p^k`, capped-precision p-adic
//! numbers, the ring `Z[ω]/(ω²+ω+1)` over Q and over `Z/p^k`, Morita's
//! p-adic Gamma function, truncated `rFs` series, and the q-expansion of
//! `η(2z)^4 η(4z)^4`. [`verify`] combines them into per-prime checks that
//! produce [`verify::CongruenceReport`]s; [`cli`] is the command-line front end.
//!
//! ```
//! use supercongruence::arith::{rat, Prime};
//! use supercongruence::gamma::gamma;
//!
//! let p = Prime::new(5).unwrap();
//! assert_eq!(gamma(&rat(1, 1), p, 3).unwrap().value().to_string(), "124");
//! ```

pub mod arith;
pub mod cli;
pub mod error;
pub mod eta;
pub mod gamma;
pub mod hypergeom;
pub mod verify;

pub use error::{Error, Result};
