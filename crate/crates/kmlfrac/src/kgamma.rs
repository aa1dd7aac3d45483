//! k-deformed gamma function and k-Pochhammer symbol.
//!
//! The one-parameter deformation `Gamma_k(t) = k^{t/k - 1} Gamma(t/k)`
//! reduces to Euler's gamma at `k = 1`; the k-Pochhammer symbol
//! `(t)_{n,k} = t (t+k) ... (t+(n-1)k)` generalizes the rising factorial.
//! Both are evaluated in log space so that large series indices never
//! overflow.

use crate::error::{Error, Result};
use crate::scalar::{at_least, is_positive, Real};
use crate::special::{ln_gamma, ln_gamma_positive};

/// Argument of the k-gamma function: `vartheta > 0`, deformation `k > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KGammaArg<T> {
    pub vartheta: T,
    pub k: T,
}

impl<T: Real> KGammaArg<T> {
    pub fn new(vartheta: T, k: T) -> Result<Self> {
        if !is_positive(vartheta) || !is_positive(k) {
            return Err(Error::Domain(format!(
                "k-gamma requires vartheta > 0 and k > 0, got vartheta = {vartheta}, k = {k}"
            )));
        }
        Ok(Self { vartheta, k })
    }
}

/// Argument of the k-Pochhammer symbol `(vartheta)_{n q, k}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PochhammerArg<T> {
    pub vartheta: T,
    /// Term index `n >= 0`.
    pub n: u32,
    /// Index multiplier `q > 0`; the effective rising count is `n q`.
    pub q: T,
    pub k: T,
}

impl<T: Real> PochhammerArg<T> {
    pub fn new(vartheta: T, n: u32, q: T, k: T) -> Result<Self> {
        if !is_positive(q) || !is_positive(k) {
            return Err(Error::Domain(format!(
                "k-Pochhammer requires q > 0 and k > 0, got q = {q}, k = {k}"
            )));
        }
        Ok(Self { vartheta, n, q, k })
    }
}

/// `ln Gamma_k(t) = (t/k - 1) ln k + ln Gamma(t/k)` for `t, k > 0`.
pub fn ln_k_gamma<T: Real>(t: T, k: T) -> Result<T> {
    if !is_positive(t) || !is_positive(k) {
        return Err(Error::Domain(format!(
            "ln_k_gamma requires t > 0 and k > 0, got t = {t}, k = {k}"
        )));
    }
    Ok((t / k - T::one()) * k.ln() + ln_gamma_positive(t / k))
}

/// The k-gamma function `Gamma_k(vartheta) = k^{vartheta/k - 1} Gamma(vartheta/k)`.
pub fn k_gamma<T: Real>(arg: KGammaArg<T>) -> Result<T> {
    Ok(ln_k_gamma(arg.vartheta, arg.k)?.exp())
}

/// `ln (vartheta)_{c,k}` via the gamma-ratio form
/// `Gamma_k(vartheta + c k) / Gamma_k(vartheta)`, for a real rising count
/// `c >= 0`.
pub fn ln_k_pochhammer<T: Real>(vartheta: T, count: T, k: T) -> Result<T> {
    if !is_positive(vartheta) || !is_positive(k) || !at_least(count, T::zero()) {
        return Err(Error::Domain(format!(
            "k-Pochhammer ratio form requires vartheta > 0, k > 0, count >= 0; \
             got vartheta = {vartheta}, k = {k}, count = {count}"
        )));
    }
    // Gamma_k(t + c k)/Gamma_k(t) = k^c Gamma(t/k + c) / Gamma(t/k)
    Ok(count * k.ln() + ln_gamma_positive(vartheta / k + count) - ln_gamma_positive(vartheta / k))
}

/// The k-Pochhammer symbol `(vartheta)_{n q, k}`.
///
/// When the rising count `n q` is a machine-exact non-negative integer the
/// finite product `vartheta (vartheta + k) ... (vartheta + (nq-1) k)` is
/// used; otherwise the `Gamma_k` ratio form (the product form is undefined
/// for non-integer counts).
pub fn k_pochhammer<T: Real>(arg: PochhammerArg<T>) -> Result<T> {
    let count = T::from_u32(arg.n).unwrap() * arg.q;
    if count == count.floor() {
        let m = count
            .to_u64()
            .ok_or_else(|| Error::Domain(format!("rising count {count} not representable")))?;
        let mut prod = T::one();
        let mut j = T::zero();
        for _ in 0..m {
            prod *= arg.vartheta + j * arg.k;
            j += T::one();
        }
        return Ok(prod);
    }
    Ok(ln_k_pochhammer(arg.vartheta, count, arg.k)?.exp())
}

/// Residual of the deformation-change identity
/// `(vartheta)_{nq,s} = (s/k)^{nq} (k vartheta / s)_{nq,k}`.
///
/// Returns `|lhs - rhs| / |lhs|`; both sides are evaluated through
/// independent log-gamma paths and should agree to ~1e-12 on the positive
/// real domain.
pub fn check_identity_p5<T: Real>(vartheta: T, n: u32, q: T, s: T, k: T) -> Result<T> {
    if !is_positive(vartheta) || !is_positive(q) || !is_positive(s) || !is_positive(k) {
        return Err(Error::Domain(
            "identity check requires all parameters positive".into(),
        ));
    }
    let count = T::from_u32(n).unwrap() * q;
    let lhs = ln_k_pochhammer(vartheta, count, s)?.exp();
    let rhs =
        (count * (s / k).ln() + ln_k_pochhammer(k * vartheta / s, count, k)?).exp();
    if lhs == T::zero() {
        return Ok((lhs - rhs).abs());
    }
    Ok((lhs - rhs).abs() / lhs.abs())
}

/// Classical Pochhammer symbol `(x)_c = Gamma(x + c)/Gamma(x)` for `x > 0`,
/// used by the `k = 1` reduction checks.
pub fn pochhammer<T: Real>(x: T, count: T) -> Result<T> {
    Ok((ln_gamma(x + count)? - ln_gamma(x)?).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn kg(vartheta: f64, k: f64) -> f64 {
        k_gamma(KGammaArg::new(vartheta, k).unwrap()).unwrap()
    }

    #[test]
    fn k_gamma_trivial_cases() {
        assert!((kg(1.0, 1.0) - 1.0).abs() < 1e-14);
        for k in [0.25, 0.7, 1.0, 2.5] {
            assert!((kg(k, k) - 1.0).abs() < 1e-13, "Gamma_k(k) must be 1");
        }
    }

    #[test]
    fn k_gamma_reference_value() {
        // 0.5^{-0.6} Gamma(0.4), 25-digit reference
        let want = 3.362_101_167_636_674_3;
        assert!((kg(0.2, 0.5) - want).abs() < want * 1e-13);
    }

    #[test]
    fn k_gamma_recurrence_grid() {
        // Gamma_k(t + k) = t Gamma_k(t)
        for &t in &[0.2, 0.5, 1.0, 1.7, 2.5, 3.3, 4.1, 5.0] {
            for &k in &[0.25, 0.5, 0.75, 1.0, 1.5, 2.0] {
                let lhs = kg(t + k, k);
                let rhs = t * kg(t, k);
                assert!(
                    (lhs - rhs).abs() <= 1e-12 * rhs.abs(),
                    "recurrence failed at t={t}, k={k}"
                );
            }
        }
    }

    #[test]
    fn reduces_to_gamma_at_k_one() {
        for &t in &[0.2f64, 0.9, 1.0, 2.5, 5.0] {
            let want = ln_gamma(t).unwrap().exp();
            assert!((kg(t, 1.0) - want).abs() <= 1e-13 * want.abs());
        }
    }

    #[test]
    fn pochhammer_product_cases() {
        let p = |vt: f64, n: u32, q: f64, k: f64| {
            k_pochhammer(PochhammerArg::new(vt, n, q, k).unwrap()).unwrap()
        };
        assert_eq!(p(3.7, 0, 0.4, 0.5), 1.0); // empty product
        assert!((p(2.0, 3, 1.0, 1.0) - 24.0).abs() < 1e-12); // 2*3*4
        assert!((p(1.0, 2, 1.0, 0.5) - 1.5).abs() < 1e-13); // 1*(1+0.5)
    }

    #[test]
    fn product_and_ratio_branches_agree() {
        // nq = 3 exactly via (n=3, q=1) against the ratio form directly
        let prod = k_pochhammer(PochhammerArg::new(0.7f64, 3, 1.0, 0.4).unwrap()).unwrap();
        let ratio = ln_k_pochhammer(0.7f64, 3.0, 0.4).unwrap().exp();
        assert!((prod - ratio).abs() <= 1e-13 * prod.abs());
    }

    #[test]
    fn identity_p6_grid() {
        // (t)_{m,k} = k^m (t/k)_m for integer m
        for &t in &[0.2f64, 0.5, 1.0, 1.7, 2.5, 3.3, 4.1, 5.0] {
            for &k in &[0.25f64, 0.5, 0.75, 1.0, 1.5, 2.0] {
                for m in [0u32, 1, 2, 5] {
                    let lhs =
                        k_pochhammer(PochhammerArg::new(t, m, 1.0, k).unwrap()).unwrap();
                    let rhs = k.powi(m as i32) * pochhammer(t / k, m as f64).unwrap();
                    assert!(
                        (lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0),
                        "P6 failed at t={t}, k={k}, m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn identity_p3_grid() {
        // Gamma_s(t) = (s/k)^{t/s - 1} Gamma_k(k t / s)
        for &t in &[0.2, 0.9, 1.7, 3.3, 5.0] {
            for &s in &[0.25, 0.6, 1.0, 1.5] {
                for &k in &[0.4, 1.0, 2.0] {
                    let lhs = kg(t, s);
                    let rhs = (s / k).powf(t / s - 1.0) * kg(k * t / s, k);
                    assert!(
                        (lhs - rhs).abs() <= 1e-12 * lhs.abs(),
                        "P3 failed at t={t}, s={s}, k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn identity_p5_examples() {
        // s = k collapses both sides to the same expression
        assert!(check_identity_p5(1.0f64, 1, 1.0, 0.5, 0.5).unwrap() < 1e-15);
        // non-trivial deformation change
        assert!(check_identity_p5(0.5f64, 2, 0.4, 0.7, 0.5).unwrap() <= 1e-12);
        // fully classical
        assert!(check_identity_p5(2.0f64, 3, 1.0, 1.0, 1.0).unwrap() <= 1e-13);
    }

    #[test]
    fn invalid_arguments_rejected() {
        assert!(KGammaArg::new(-1.0, 0.5).is_err());
        assert!(KGammaArg::new(1.0, 0.0).is_err());
        assert!(PochhammerArg::new(1.0, 1, -0.4, 0.5).is_err());
        assert!(ln_k_gamma(0.0, 1.0).is_err());
    }

    proptest! {
        #[test]
        fn prop_recurrence(t in 0.05f64..10.0, k in 0.1f64..3.0) {
            let lhs = kg(t + k, k);
            let rhs = t * kg(t, k);
            prop_assert!((lhs - rhs).abs() <= 1e-11 * rhs.abs().max(1e-300));
        }

        #[test]
        fn prop_p5(t in 0.1f64..5.0, q in 0.1f64..2.0, s in 0.1f64..2.0,
                   k in 0.1f64..2.0, n in 0u32..6) {
            prop_assert!(check_identity_p5(t, n, q, s, k).unwrap() <= 1e-11);
        }
    }
}
