//! Independent brute-force evaluators used to validate every closed form:
//! weight-matched singular quadrature for the fractional integral, finite
//! differences for the outer derivative, and numeric Beta/Laplace
//! transforms.
//!
//! These deliberately avoid the Fox-Wright evaluation path; their only
//! shared infrastructure with the closed forms is the log-gamma kernel.

use crate::error::{Error, Result};
use crate::fracops::DerivSpec;
use crate::quad::GaussRule;
use crate::scalar::{at_least, at_most, is_positive, real, Real};
use crate::series::{ml_eval, MLParams};
use crate::special::ln_gamma;

/// Knob set for the quadrature/finite-difference oracles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig<T> {
    /// Base Gauss-Jacobi node count for the endpoint-singular weight
    /// (doubled until two rules agree). At least 16.
    pub jacobi_nodes: usize,
    /// Agreement threshold between successive refinements, relative.
    /// At least 1e-12.
    pub adaptive_tol: T,
    /// Relative finite-difference step for the outer derivative,
    /// within [1e-7, 1e-3].
    pub fd_step: T,
    /// Base node budget for the semi-infinite (Laplace) rule. At least 32.
    pub laguerre_nodes: usize,
}

impl<T: Real> Default for QuadConfig<T> {
    fn default() -> Self {
        Self {
            jacobi_nodes: 48,
            adaptive_tol: real(1e-9),
            fd_step: real(1e-5),
            laguerre_nodes: 64,
        }
    }
}

impl<T: Real> QuadConfig<T> {
    fn check(&self) -> Result<()> {
        if self.jacobi_nodes < 16 {
            return Err(Error::Quadrature(format!(
                "jacobi_nodes must be >= 16, got {}",
                self.jacobi_nodes
            )));
        }
        if self.laguerre_nodes < 32 {
            return Err(Error::Quadrature(format!(
                "laguerre_nodes must be >= 32, got {}",
                self.laguerre_nodes
            )));
        }
        if !at_least(self.adaptive_tol, real(1e-12)) {
            return Err(Error::Quadrature(format!(
                "adaptive_tol must be >= 1e-12, got {}",
                self.adaptive_tol
            )));
        }
        if !at_least(self.fd_step, real(1e-7)) || !at_most(self.fd_step, real(1e-3)) {
            return Err(Error::Quadrature(format!(
                "fd_step must lie in [1e-7, 1e-3], got {}",
                self.fd_step
            )));
        }
        Ok(())
    }
}

/// Doubles the resolution until two successive evaluations agree to `tol`
/// (relative); errors out if agreement is never reached or a value goes
/// non-finite.
fn refine_until_agreement<T: Real>(
    mut eval: impl FnMut(usize) -> Result<T>,
    n0: usize,
    tol: T,
    doublings: usize,
    what: &str,
) -> Result<T> {
    let mut prev = eval(n0)?;
    if !prev.is_finite() {
        return Err(Error::Quadrature(format!("{what}: non-finite integrand sample")));
    }
    let mut n = n0;
    for _ in 0..doublings {
        n *= 2;
        let cur = eval(n)?;
        if !cur.is_finite() {
            return Err(Error::Quadrature(format!("{what}: non-finite integrand sample")));
        }
        if (cur - prev).abs() <= tol * cur.abs().max(real(1e-300)) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::Quadrature(format!(
        "{what}: refinements did not agree to the requested tolerance at {n} nodes"
    )))
}

/// Generalized fractional integral `(eta I^sigma_{0+} f)(x)` by Gauss-Jacobi
/// quadrature matched to the `(1 - z)^{sigma - 1}` endpoint singularity.
///
/// Substituting `t^eta = x^eta z` maps the integral to
/// `eta^{-sigma} x^{eta sigma} / Gamma(sigma) *
/// int_0^1 (1 - z)^{sigma - 1} f(x z^{1/eta}) dz`.
pub fn frac_integral_oracle<T: Real>(
    sigma_i: T,
    eta: T,
    f: impl Fn(T) -> T,
    x: T,
    cfg: &QuadConfig<T>,
) -> Result<T> {
    cfg.check()?;
    if !is_positive(sigma_i) {
        return Err(Error::Domain(format!(
            "integral order must be > 0, got {sigma_i}"
        )));
    }
    if !is_positive(eta) || !is_positive(x) {
        return Err(Error::Domain(format!(
            "fractional integral requires eta > 0 and x > 0, got eta = {eta}, x = {x}"
        )));
    }
    let scale =
        (-sigma_i * eta.ln() + eta * sigma_i * x.ln() - ln_gamma(sigma_i)?).exp();
    refine_until_agreement(
        |n| {
            let rule = GaussRule::jacobi01(n, sigma_i - T::one(), T::zero())?;
            Ok(scale * rule.integrate(|z| f(x * z.powf(T::one() / eta))))
        },
        cfg.jacobi_nodes,
        cfg.adaptive_tol,
        3,
        "fractional-integral quadrature",
    )
}

/// Five-point central first derivative, `O(h^4)`.
pub fn central_derivative<T: Real>(f: impl Fn(T) -> T, x: T, h: T) -> T {
    let two = real::<T>(2.0);
    let eight = real::<T>(8.0);
    let twelve = real::<T>(12.0);
    (f(x - two * h) - eight * f(x - h) + eight * f(x + h) - f(x + two * h)) / (twelve * h)
}

/// Quadrature + finite-difference evaluation of the generalized fractional
/// derivative of an arbitrary integrand `f`:
/// `x^{1-eta} d/dx (eta I^{1-sigma}_{0+} f)(x)` for `0 < sigma < 1`.
pub fn frac_deriv_oracle_fn<T: Real>(
    sigma: T,
    eta: T,
    f: impl Fn(T) -> T,
    x: T,
    cfg: &QuadConfig<T>,
) -> Result<T> {
    cfg.check()?;
    if !is_positive(sigma) || !is_positive(T::one() - sigma) {
        return Err(Error::Domain(format!(
            "the quadrature oracle covers 0 < sigma < 1, got {sigma}"
        )));
    }
    if !is_positive(x) {
        return Err(Error::Domain(format!("oracle requires x > 0, got {x}")));
    }
    let mut h = cfg.fd_step * x;
    // keep the whole stencil inside (0, inf)
    while x - (h + h) <= T::zero() {
        h *= real(0.5);
    }
    let g = |y: T| -> T {
        match frac_integral_oracle(T::one() - sigma, eta, &f, y, cfg) {
            Ok(v) => v,
            Err(_) => T::nan(),
        }
    };
    let d = central_derivative(g, x, h);
    if !d.is_finite() {
        return Err(Error::Quadrature(
            "finite-difference stencil sampled a failed quadrature".into(),
        ));
    }
    Ok(x.powf(T::one() - eta) * d)
}

/// Quadrature + finite-difference oracle for the derivative of
/// `t^mu E(t^nu)`; returns the magnitude (the right-sided operator shares
/// it, differing only by the unit branch factor).
pub fn frac_deriv_oracle<T: Real>(
    spec: &DerivSpec<T>,
    params: &MLParams<T>,
    x: T,
    cfg: &QuadConfig<T>,
) -> Result<T> {
    let ml_tol = real::<T>(1e-13);
    let mu = spec.mu();
    let nu = spec.nu();
    let f = |t: T| -> T {
        match ml_eval(params, t.powf(nu), ml_tol) {
            Ok(r) if r.converged => t.powf(mu) * r.value,
            _ => T::nan(),
        }
    };
    frac_deriv_oracle_fn(spec.sigma(), spec.eta(), f, x, cfg)
}

/// Numeric Beta transform `int_0^1 z^{l-1} (1-z)^{m-1} g(z) dz` by
/// weight-matched Gauss-Jacobi quadrature.
pub fn beta_transform_oracle<T: Real>(
    g: impl Fn(T) -> T,
    l: T,
    m: T,
    cfg: &QuadConfig<T>,
) -> Result<T> {
    cfg.check()?;
    if !is_positive(l) || !is_positive(m) {
        return Err(Error::Domain(format!(
            "Beta transform requires l > 0 and m > 0, got l = {l}, m = {m}"
        )));
    }
    refine_until_agreement(
        |n| {
            let rule = GaussRule::jacobi01(n, m - T::one(), l - T::one())?;
            Ok(rule.integrate(&g))
        },
        cfg.jacobi_nodes,
        cfg.adaptive_tol,
        3,
        "Beta-transform quadrature",
    )
}

/// Numeric Laplace transform `int_0^inf e^{-sz} z^{l-1} g(z) dz`.
///
/// After scaling `u = s z` the integral is `s^{-l} int_0^inf e^{-u} u^{l-1}
/// g(u/s) du`. A generalized Gauss-Laguerre rule is tried first (exact for
/// polynomially-behaved `g`); if its refinement does not stabilize (the
/// integrand family here carries fractional powers at the origin, for which
/// the Laguerre rule converges only algebraically), the integral is redone
/// on the truncated range `u in (0, U)` with composite Gauss-Legendre panels
/// shrinking geometrically toward the origin. `U` satisfies the explicit
/// bound `e^{-U} U^{l + 32} < adaptive_tol * 1e-3`, so the discarded tail is
/// negligible for any `g` of at-most-polynomial growth of that order.
pub fn laplace_transform_oracle<T: Real>(
    g: impl Fn(T) -> T,
    l: T,
    s: T,
    cfg: &QuadConfig<T>,
) -> Result<T> {
    cfg.check()?;
    if !is_positive(l) || !is_positive(s) {
        return Err(Error::Domain(format!(
            "Laplace transform requires l > 0 and s > 0, got l = {l}, s = {s}"
        )));
    }
    let scale = (-l * s.ln()).exp();

    let laguerre = refine_until_agreement(
        |n| {
            let rule = GaussRule::laguerre(n, l - T::one())?;
            Ok(scale * rule.integrate(|u| g(u / s)))
        },
        cfg.laguerre_nodes,
        cfg.adaptive_tol,
        1,
        "Laplace Gauss-Laguerre stage",
    );
    if let Ok(v) = laguerre {
        return Ok(v);
    }

    // truncated composite fallback
    let upper = truncation_point(l, cfg.adaptive_tol);
    let per_panel = cfg.laguerre_nodes.max(32);
    refine_until_agreement(
        |n| truncated_laplace(&g, l, s, upper, n),
        per_panel / 2,
        cfg.adaptive_tol,
        2,
        "Laplace truncated-panel stage",
    )
    .map(|v| v * scale)
}

/// Solves `e^{-U} U^{l + 32} = tol * 1e-3` for the truncation point `U` by
/// fixed-point iteration of `U = (l + 32) ln U - ln(tol * 1e-3)`.
fn truncation_point<T: Real>(l: T, tol: T) -> T {
    let c = l + real::<T>(32.0);
    let target = (tol * real::<T>(1e-3)).ln();
    let mut u = real::<T>(50.0);
    for _ in 0..64 {
        u = c * u.ln() - target;
    }
    u.max(real(30.0))
}

/// `int_0^U e^{-u} u^{l-1} g(u/s) du` over geometric panels toward the
/// origin (absorbing the `u^{l-1}` and any algebraic behavior of `g`) and
/// width-capped panels towards `U` (tracking the exponential decay), each
/// integrated by an `n`-point Gauss-Legendre rule.
fn truncated_laplace<T: Real>(
    g: &impl Fn(T) -> T,
    l: T,
    s: T,
    upper: T,
    n: usize,
) -> Result<T> {
    let rule = GaussRule::jacobi01(n, T::zero(), T::zero())?;
    let head = real::<T>(1e-14);
    let four = real::<T>(4.0);
    let two = real::<T>(2.0);

    let integrand = |u: T| (-u).exp() * u.powf(l - T::one()) * g(u / s);

    let mut total = T::zero();
    // analytic head: on (0, head) the factor e^{-u} is 1 to machine accuracy
    total += g(head / (two * s)) * head.powf(l) / l;

    let mut a = head;
    while a < upper {
        let b_geo = two * a;
        let b = if b_geo - a > four { a + four } else { b_geo }.min(upper);
        let width = b - a;
        total += width * rule.integrate(|z| integrand(a + width * z));
        a = b;
    }
    Ok(total)
}
