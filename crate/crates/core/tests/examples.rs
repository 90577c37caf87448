macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(padic_gamma, "padic_gamma.rs");
example!(truncated_series, "truncated_series.rs");
example!(gessel_stanton, "gessel_stanton.rs");
example!(eta_coefficients, "eta_coefficients.rs");
example!(cyclotomic_identity, "cyclotomic_identity.rs");
example!(verify_theorem, "verify_theorem.rs");
example!(prime_sweep, "prime_sweep.rs");

#[test]
fn padic_gamma_runs() {
    padic_gamma::run_example().expect("padic_gamma");
}

#[test]
fn truncated_series_runs() {
    truncated_series::run_example().expect("truncated_series");
}

#[test]
fn gessel_stanton_runs() {
    gessel_stanton::run_example().expect("gessel_stanton");
}

#[test]
fn eta_coefficients_runs() {
    eta_coefficients::run_example().expect("eta_coefficients");
}

#[test]
fn cyclotomic_identity_runs() {
    cyclotomic_identity::run_example().expect("cyclotomic_identity");
}

#[test]
fn verify_theorem_runs() {
    verify_theorem::run_example().expect("verify_theorem");
}

#[test]
fn prime_sweep_runs() {
    prime_sweep::run_example().expect("prime_sweep");
}
