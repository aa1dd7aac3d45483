//! Reportable verification suites: every closed form cross-checked against
//! its independent route on the documented parameter grids.
//!
//! The suites run in `f64` (the tolerances are `f64` contracts) and return a
//! [`SuiteReport`] rather than asserting, so both the CLI front end and the
//! acceptance tests can share them.

use crate::fracops::{frac_deriv_closed, frac_deriv_scaled, rl_reduction_check, DerivSpec, Side};
use crate::kgamma::{check_identity_p5, k_gamma, k_pochhammer, pochhammer, KGammaArg, PochhammerArg};
use crate::oracles::{
    beta_transform_oracle, central_derivative, frac_deriv_oracle, laplace_transform_oracle,
    QuadConfig,
};
use crate::series::{ml_eval, ml_reduction_check, MLParams, MlReduction};
use crate::scalar::at_most;
use crate::special::ln_gamma;
use crate::transforms::{beta_image_closed, laplace_image_closed, BetaImageSpec, LaplaceImageSpec};

/// Outcome of one verification suite.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub worst_residual: f64,
    /// One line per failed check; empty means the suite passed.
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checks: 0,
            worst_residual: 0.0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, label: &str, residual: f64, tol: f64) {
        self.checks += 1;
        if residual.is_finite() {
            self.worst_residual = self.worst_residual.max(residual);
        }
        if !at_most(residual, tol) {
            self.failures
                .push(format!("{label}: residual {residual:.3e} exceeds {tol:.1e}"));
        }
    }

    fn fail(&mut self, label: &str, err: impl core::fmt::Display) {
        self.checks += 1;
        self.failures.push(format!("{label}: {err}"));
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{:<12} {:>4} checks  {:>3} failed  worst residual {:9.3e}  {}",
            self.name,
            self.checks,
            self.failures.len(),
            self.worst_residual,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// The parameter set all default grids use.
pub fn default_params() -> MLParams<f64> {
    MLParams::new(0.5, 0.5, 0.2, 0.5, 0.4).expect("default parameters are valid")
}

/// Default derivative spec at a given order and side, with the grid values
/// `eta = 0.3, mu = 0.5, nu = 0.8`.
pub fn default_deriv(sigma: f64, side: Side) -> DerivSpec<f64> {
    DerivSpec::new(sigma, 0.3, 0.5, 0.8, side).expect("default operator is valid")
}

const THETA_GRID: [f64; 8] = [0.2, 0.5, 1.0, 1.7, 2.5, 3.3, 4.1, 5.0];
const K_GRID: [f64; 6] = [0.25, 0.5, 0.75, 1.0, 1.5, 2.0];

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

/// Gamma-layer identity suite: recurrence, deformation-change identities and
/// the classical reductions, residuals at the 1e-12 level.
pub fn identities() -> SuiteReport {
    let mut rep = SuiteReport::new("identities");
    let kg = |t: f64, k: f64| k_gamma(KGammaArg::new(t, k).unwrap()).unwrap();

    for &t in &THETA_GRID {
        for &k in &K_GRID {
            rep.check(
                &format!("recurrence t={t} k={k}"),
                rel(kg(t + k, k), t * kg(t, k)),
                1e-12,
            );
            for m in [0u32, 1, 2, 5] {
                let lhs = k_pochhammer(PochhammerArg::new(t, m, 1.0, k).unwrap()).unwrap();
                let rhs = k.powi(m as i32) * pochhammer(t / k, m as f64).unwrap();
                rep.check(
                    &format!("P6 t={t} k={k} m={m}"),
                    (lhs - rhs).abs() / rhs.abs().max(1.0),
                    1e-12,
                );
            }
        }
    }
    for &t in &THETA_GRID {
        for &s in &[0.25, 0.6, 1.0, 1.5] {
            for &k in &[0.4, 1.0, 2.0] {
                let lhs = kg(t, s);
                let rhs = (s / k).powf(t / s - 1.0) * kg(k * t / s, k);
                rep.check(&format!("P3 t={t} s={s} k={k}"), rel(lhs, rhs), 1e-12);
            }
        }
    }
    for &t in &[0.5, 1.0, 2.0] {
        for &s in &[0.5, 0.7, 1.3] {
            for &k in &[0.5, 1.0] {
                for n in [1u32, 2, 3] {
                    match check_identity_p5(t, n, 0.4, s, k) {
                        Ok(r) => rep.check(&format!("P5 t={t} s={s} k={k} n={n}"), r, 1e-12),
                        Err(e) => rep.fail("P5", e),
                    }
                }
            }
        }
    }
    // k = 1 reduction to the classical functions
    for &t in &THETA_GRID {
        let want = ln_gamma(t).unwrap().exp();
        rep.check(&format!("k1 gamma t={t}"), rel(kg(t, 1.0), want), 1e-13);
        let lhs = k_pochhammer(PochhammerArg::new(t, 3, 1.0, 1.0).unwrap()).unwrap();
        rep.check(
            &format!("k1 pochhammer t={t}"),
            rel(lhs, pochhammer(t, 3.0).unwrap()),
            1e-13,
        );
    }
    rep
}

/// Reduction-chain suite: the five classical special cases plus the
/// Fox-Wright rewrite of the full function.
pub fn reductions() -> SuiteReport {
    let mut rep = SuiteReport::new("reductions");
    let p = |k, xi, zeta, vt, q| MLParams::new(k, xi, zeta, vt, q).unwrap();

    let mut run = |label: &str, params: MLParams<f64>, z: f64, which: MlReduction| {
        match ml_reduction_check(&params, z, which) {
            Ok(r) => rep.check(label, r, 1e-12),
            Err(e) => rep.fail(label, e),
        }
    };
    for &z in &[0.0, 0.1, 0.2, 0.3] {
        run(
            &format!("q=1 k-ML z={z}"),
            p(0.5, 0.5, 0.2, 0.5, 1.0),
            z,
            MlReduction::Q1,
        );
        run(
            &format!("k=1 general-q z={z}"),
            p(1.0, 0.5, 0.3, 0.7, 0.4),
            z,
            MlReduction::K1,
        );
        run(
            &format!("q=k=1 z={z}"),
            p(1.0, 0.5, 0.3, 0.7, 1.0),
            z,
            MlReduction::Q1K1,
        );
        run(
            &format!("two-parameter z={z}"),
            p(1.0, 0.5, 1.2, 1.0, 1.0),
            z,
            MlReduction::Wiman,
        );
        run(
            &format!("one-parameter z={z}"),
            p(1.0, 0.5, 1.0, 1.0, 1.0),
            z,
            MlReduction::Classical,
        );
    }

    // E_{1,1}(z) = e^z across z in [0, 2]
    let exp_params = p(1.0, 1.0, 1.0, 1.0, 1.0);
    let mut z = 0.0;
    while z <= 2.0 + 1e-9 {
        let got = ml_eval(&exp_params, z, 1e-15).unwrap().value;
        rep.check(&format!("exp reduction z={z:.2}"), rel(got, z.exp()), 1e-12);
        z += 0.25;
    }

    // general form against its own Fox-Wright rewrite
    let params = default_params();
    let (pref, fw, scale) = params.fox_wright_form().unwrap();
    for i in 0..=10 {
        let z = 0.5 * i as f64;
        let direct = ml_eval(&params, z, 1e-14).unwrap().value;
        let via_fw = pref * fw.eval(scale * z, 1e-14).unwrap().value;
        rep.check(
            &format!("fox-wright rewrite z={z}"),
            (direct - via_fw).abs() / direct.abs().max(1.0),
            1e-11,
        );
    }
    rep
}

/// Quadrature-oracle suite: the closed-form derivative against the
/// quadrature + finite-difference route on the default grid, plus the
/// finite-difference and Riemann-Liouville kernel checks.
pub fn oracle(cfg: &QuadConfig<f64>) -> SuiteReport {
    let mut rep = SuiteReport::new("oracle");

    // finite-difference kernel against the power rule
    for &s in &[0.5, 1.7, 3.2] {
        for &x in &[0.5, 1.0, 5.0] {
            let d = central_derivative(|t: f64| t.powf(s), x, cfg.fd_step * x);
            rep.check(
                &format!("fd kernel s={s} x={x}"),
                rel(d, s * x.powf(s - 1.0)),
                1e-8,
            );
        }
    }

    // eta = 1 monomial reduction
    rep.check("rl sigma=0.5 p=1 x=1", rl_reduction_check(0.5, 1.0, 1.0).unwrap(), 1e-13);
    rep.check("rl sigma=0.3 p=2.5 x=4", rl_reduction_check(0.3, 2.5, 4.0).unwrap(), 1e-13);
    rep.check("rl sigma=0.999 p=0.5 x=0.1", rl_reduction_check(0.999, 0.5, 0.1).unwrap(), 1e-12);

    // closed form vs quadrature + finite differences on the default grid
    let params = default_params();
    for &sigma in &[0.1, 0.2, 0.3, 0.4] {
        let spec = default_deriv(sigma, Side::LeftZeroPlus);
        for i in 1..=10 {
            let x = 0.5 * i as f64;
            let label = format!("oracle sigma={sigma} x={x}");
            let closed = match frac_deriv_closed(&spec, &params, x, 1e-12) {
                Ok(r) => r.magnitude,
                Err(e) => {
                    rep.fail(&label, e);
                    continue;
                }
            };
            match frac_deriv_oracle(&spec, &params, x, cfg) {
                Ok(oracle) => rep.check(&label, rel(oracle, closed), 1e-4),
                Err(e) => rep.fail(&label, e),
            }
        }
    }
    rep
}

/// Transform-image suite: Beta and Laplace closed forms against the numeric
/// transform oracles on the documented grids.
pub fn transforms(cfg: &QuadConfig<f64>) -> SuiteReport {
    let mut rep = SuiteReport::new("transforms");
    let params = default_params();

    for &sigma in &[0.1, 0.3] {
        let deriv = default_deriv(sigma, Side::LeftZeroPlus);
        for &x in &[0.25, 0.5, 1.0] {
            for &l in &[0.8, 1.0, 1.5] {
                for &m in &[0.8, 1.0, 1.5] {
                    let label = format!("beta l={l} m={m} x={x} sigma={sigma}");
                    let spec = BetaImageSpec::new(deriv, params, l, m).unwrap();
                    let closed = match beta_image_closed(&spec, x, 1e-12) {
                        Ok(r) => r.magnitude,
                        Err(e) => {
                            rep.fail(&label, e);
                            continue;
                        }
                    };
                    let numeric = beta_transform_oracle(
                        |z| {
                            frac_deriv_scaled(&deriv, &params, x, z, 1e-12)
                                .map(|r| r.magnitude)
                                .unwrap_or(f64::NAN)
                        },
                        l,
                        m,
                        cfg,
                    );
                    match numeric {
                        Ok(v) => rep.check(&label, rel(closed, v), 1e-5),
                        Err(e) => rep.fail(&label, e),
                    }
                }
                for &s in &[2.0, 4.0, 8.0] {
                    let label = format!("laplace l={l} s={s} x={x} sigma={sigma}");
                    let spec = LaplaceImageSpec::new(deriv, params, l, s).unwrap();
                    let closed = match laplace_image_closed(&spec, x, 1e-12) {
                        Ok(r) => r.magnitude,
                        Err(e) => {
                            rep.fail(&label, e);
                            continue;
                        }
                    };
                    let numeric = laplace_transform_oracle(
                        |z| {
                            frac_deriv_scaled(&deriv, &params, x, z, 1e-12)
                                .map(|r| r.magnitude)
                                .unwrap_or(f64::NAN)
                        },
                        l,
                        s,
                        cfg,
                    );
                    match numeric {
                        Ok(v) => rep.check(&label, rel(closed, v), 1e-5),
                        Err(e) => rep.fail(&label, e),
                    }
                }
            }
        }
    }

    // Laplace scaling invariance: (x, s) -> (c x, c s)
    let deriv = default_deriv(0.2, Side::LeftZeroPlus);
    for &c in &[2.0, 3.0] {
        let (l, x, s) = (1.3, 0.5, 2.0);
        let m1 = laplace_image_closed(&LaplaceImageSpec::new(deriv, params, l, s).unwrap(), x, 1e-13)
            .unwrap()
            .magnitude;
        let m2 = laplace_image_closed(
            &LaplaceImageSpec::new(deriv, params, l, c * s).unwrap(),
            c * x,
            1e-13,
        )
        .unwrap()
        .magnitude;
        let inv1 = s.powf(l) * m1 / x.powf(deriv.prefactor_exponent());
        let inv2 = (c * s).powf(l) * m2 / (c * x).powf(deriv.prefactor_exponent());
        rep.check(&format!("laplace scaling c={c}"), rel(inv1, inv2), 1e-12);
    }

    // the 3Psi2 convergence margin for the default set
    let spec = LaplaceImageSpec::new(default_deriv(0.1, Side::LeftZeroPlus), params, 1.0, 2.0)
        .unwrap();
    let margin = spec.fox_wright_spec().unwrap().convergence_margin();
    rep.check("laplace image margin 0.8", (margin - 0.8).abs(), 1e-12);

    rep
}

/// The transform suites need somewhat looser refinement agreement than the
/// derivative oracle (the integrands carry fractional powers at the origin);
/// this is the configuration the 1e-5 consistency gates are stated for.
pub fn transform_quad_config() -> QuadConfig<f64> {
    QuadConfig {
        jacobi_nodes: 96,
        adaptive_tol: 1e-7,
        ..QuadConfig::default()
    }
}

/// Runs every suite in order.
pub fn run_all() -> Vec<SuiteReport> {
    vec![
        identities(),
        reductions(),
        oracle(&QuadConfig::default()),
        transforms(&transform_quad_config()),
    ]
}
