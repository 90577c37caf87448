//! Machine checks of each supercongruence and supporting identity.
//!
//! Every checker computes both sides in the ring the statement lives in
//! (Z/p^k, `(Z/p^3)[ω]`, Q or Q(ω)) and returns a [`CongruenceReport`]. A
//! violated congruence is reported with `holds = false`, never as an error.

mod checks;
mod gamma_laws;
mod report;
pub mod specs;
mod sweep;

pub use checks::{
    cor_6f5_chain, gamma_products, main_rhs_product, random_gs_params, verify_cor_6f5, verify_cor_quarter, verify_ff1,
    verify_ff2, verify_ff2_series, verify_ff3, verify_ff3_batch, verify_gs, verify_kilbourn, verify_long_ramakrishna,
    verify_main, verify_main_batch, verify_mccarthy_osburn, verify_zudilin, Cor6F5Chain, GammaProduct,
};
pub use gamma_laws::{gamma_law_suite, random_p_integral, verify_gamma_laws, GammaLawSummary};
pub use report::{
    render_cyclo_exact, render_cyclo_mod, render_residue, CongruenceId, CongruenceReport, Modulus, ReportRecord,
    CSV_HEADER,
};
pub use sweep::{alphas_for, estimated_work, sweep, AlphaPolicy, SweepConfig};
