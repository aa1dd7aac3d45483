//! Closed-form Beta- and Laplace-transform images of the generalized
//! fractional derivatives.
//!
//! Transforming the derivative of `t^mu E((t z)^nu)` over the scale variable
//! `z` adds one upper pair `(l, nu)` to the derivative's `2Psi2` — and, for
//! the Beta transform, one lower pair `(l + m, nu)` — since each series term
//! carries `z^{l + r nu - 1}` into the elementary Beta/Laplace integral.

use crate::error::{Error, Result};
use crate::fracops::{DerivResult, DerivSpec};
use crate::scalar::{is_positive, Real};
use crate::series::{EvalResult, FoxWrightSpec, MLParams};
use crate::special::ln_gamma_positive;

/// Beta-transform image spec: transform orders `l, m > 0` on top of the
/// derivative operator and function parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct BetaImageSpec<T> {
    deriv: DerivSpec<T>,
    params: MLParams<T>,
    l: T,
    m: T,
}

impl<T: Real> BetaImageSpec<T> {
    pub fn new(deriv: DerivSpec<T>, params: MLParams<T>, l: T, m: T) -> Result<Self> {
        if !is_positive(l) || !is_positive(m) {
            return Err(Error::Domain(format!(
                "Beta image requires l > 0 and m > 0, got l = {l}, m = {m}"
            )));
        }
        let spec = Self {
            deriv,
            params,
            l,
            m,
        };
        spec.fox_wright_spec()?; // validate the 3Psi3 at construction
        Ok(spec)
    }

    pub fn deriv(&self) -> &DerivSpec<T> {
        &self.deriv
    }
    pub fn params(&self) -> &MLParams<T> {
        &self.params
    }
    pub fn l(&self) -> T {
        self.l
    }
    pub fn m(&self) -> T {
        self.m
    }

    /// The `3Psi3` parameter pairs of the image.
    pub fn fox_wright_spec(&self) -> Result<FoxWrightSpec<T>> {
        let d = &self.deriv;
        let p = &self.params;
        let one = T::one();
        FoxWrightSpec::new(
            vec![
                (p.vartheta() / p.k(), p.q()),
                (d.mu() / d.eta() + one, d.nu() / d.eta()),
                (self.l, d.nu()),
            ],
            vec![
                (p.zeta() / p.k(), p.xi() / p.k()),
                (d.mu() / d.eta() + one - d.sigma(), d.nu() / d.eta()),
                (self.l + self.m, d.nu()),
            ],
        )
    }
}

/// Laplace-transform image spec: weight order `l > 0` and transform
/// variable `s > 0`.
///
/// `compat_qk` switches the first upper pair from `(vartheta/k, q)` (the
/// multiplier the term-by-term derivation fixes) to the alternative
/// `(vartheta/k, q/k)` convention; the default is the derived form.
#[derive(Debug, Clone, PartialEq)]
pub struct LaplaceImageSpec<T> {
    deriv: DerivSpec<T>,
    params: MLParams<T>,
    l: T,
    s: T,
    compat_qk: bool,
}

impl<T: Real> LaplaceImageSpec<T> {
    pub fn new(deriv: DerivSpec<T>, params: MLParams<T>, l: T, s: T) -> Result<Self> {
        Self::with_compat(deriv, params, l, s, false)
    }

    pub fn with_compat(
        deriv: DerivSpec<T>,
        params: MLParams<T>,
        l: T,
        s: T,
        compat_qk: bool,
    ) -> Result<Self> {
        if !is_positive(l) || !is_positive(s) {
            return Err(Error::Domain(format!(
                "Laplace image requires l > 0 and s > 0, got l = {l}, s = {s}"
            )));
        }
        let spec = Self {
            deriv,
            params,
            l,
            s,
            compat_qk,
        };
        spec.fox_wright_spec()?; // enforce the convergence condition up front
        Ok(spec)
    }

    pub fn deriv(&self) -> &DerivSpec<T> {
        &self.deriv
    }
    pub fn params(&self) -> &MLParams<T> {
        &self.params
    }
    pub fn l(&self) -> T {
        self.l
    }
    pub fn s(&self) -> T {
        self.s
    }
    pub fn compat_qk(&self) -> bool {
        self.compat_qk
    }

    /// The `3Psi2` parameter pairs of the image. The missing lower
    /// counterpart of `(l, nu)` makes the convergence margin genuinely
    /// smaller here, so the constructor's check is load-bearing.
    pub fn fox_wright_spec(&self) -> Result<FoxWrightSpec<T>> {
        let d = &self.deriv;
        let p = &self.params;
        let one = T::one();
        let q_mult = if self.compat_qk {
            p.q() / p.k()
        } else {
            p.q()
        };
        FoxWrightSpec::new(
            vec![
                (p.vartheta() / p.k(), q_mult),
                (d.mu() / d.eta() + one, d.nu() / d.eta()),
                (self.l, d.nu()),
            ],
            vec![
                (p.zeta() / p.k(), p.xi() / p.k()),
                (d.mu() / d.eta() + one - d.sigma(), d.nu() / d.eta()),
            ],
        )
    }
}

fn zero_limit<T: Real>(deriv: &DerivSpec<T>) -> Result<DerivResult<T>> {
    if deriv.prefactor_exponent() > T::zero() {
        Ok(DerivResult {
            magnitude: T::zero(),
            phase_factor: deriv.phase_factor(),
            series: EvalResult {
                value: T::zero(),
                terms_used: 0,
                tail_estimate: T::zero(),
                converged: true,
            },
        })
    } else {
        Err(Error::Domain(format!(
            "x = 0 limit requires mu - sigma eta > 0, got {}",
            deriv.prefactor_exponent()
        )))
    }
}

/// Closed-form Beta-transform image
/// `B{ D^sigma [t^mu E((t z)^nu)](x) : l, m }`:
/// `Gamma(m) x^{mu - sigma eta} eta^sigma k^{1 - zeta/k} / Gamma(vartheta/k)`
/// times `3Psi3[...](k^{q - xi/k} x^nu)`, with the side's phase factor.
pub fn beta_image_closed<T: Real>(
    spec: &BetaImageSpec<T>,
    x: T,
    tol: T,
) -> Result<DerivResult<T>> {
    if x < T::zero() {
        return Err(Error::Domain(format!("x must be >= 0, got {x}")));
    }
    if x == T::zero() {
        return zero_limit(&spec.deriv);
    }
    let fw = spec.fox_wright_spec()?;
    let d = &spec.deriv;
    let p = &spec.params;
    let z = ((p.q() - p.xi() / p.k()) * p.k().ln() + d.nu() * x.ln()).exp();
    let series = fw.eval(z, tol)?;
    let ln_pref = ln_gamma_positive(spec.m)
        + d.prefactor_exponent() * x.ln()
        + d.sigma() * d.eta().ln()
        + (T::one() - p.zeta() / p.k()) * p.k().ln()
        - ln_gamma_positive(p.vartheta() / p.k());
    Ok(DerivResult {
        magnitude: ln_pref.exp() * series.value,
        phase_factor: d.phase_factor(),
        series,
    })
}

/// Closed-form Laplace-transform image
/// `L{ z^{l-1} D^sigma [t^mu E((t z)^nu)](x) }`:
/// `x^{mu - sigma eta} / s^l * eta^sigma k^{1 - zeta/k} / Gamma(vartheta/k)`
/// times `3Psi2[...](k^{q - xi/k} (x/s)^nu)`, with the side's phase factor.
pub fn laplace_image_closed<T: Real>(
    spec: &LaplaceImageSpec<T>,
    x: T,
    tol: T,
) -> Result<DerivResult<T>> {
    if x < T::zero() {
        return Err(Error::Domain(format!("x must be >= 0, got {x}")));
    }
    if x == T::zero() {
        return zero_limit(&spec.deriv);
    }
    let fw = spec.fox_wright_spec()?;
    let d = &spec.deriv;
    let p = &spec.params;
    let z = ((p.q() - p.xi() / p.k()) * p.k().ln() + d.nu() * (x / spec.s).ln()).exp();
    let series = fw.eval(z, tol)?;
    let ln_pref = d.prefactor_exponent() * x.ln() - spec.l * spec.s.ln()
        + d.sigma() * d.eta().ln()
        + (T::one() - p.zeta() / p.k()) * p.k().ln()
        - ln_gamma_positive(p.vartheta() / p.k());
    Ok(DerivResult {
        magnitude: ln_pref.exp() * series.value,
        phase_factor: d.phase_factor(),
        series,
    })
}
