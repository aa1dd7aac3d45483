//! Gaussian quadrature rules used by the brute-force oracles.
//!
//! Nodes and weights come from the Golub-Welsch algorithm: the symmetric
//! tridiagonal Jacobi matrix of the orthogonal-polynomial recurrence is
//! diagonalized by an implicit-shift QL iteration that tracks only the first
//! eigenvector components (all that the weights need).

use crate::error::{Error, Result};
use crate::scalar::{is_positive, real, Real};
use crate::special::ln_gamma;

/// A fixed Gaussian rule: paired nodes and weights.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussRule<T> {
    nodes: Vec<T>,
    weights: Vec<T>,
}

impl<T: Real> GaussRule<T> {
    /// Gauss-Jacobi rule of degree `n` on `[-1, 1]` for the weight
    /// `(1 - u)^alpha (1 + u)^beta`, `alpha, beta > -1`.
    pub fn jacobi(n: usize, alpha: T, beta: T) -> Result<Self> {
        if n < 2 {
            return Err(Error::Quadrature(format!("degree must be >= 2, got {n}")));
        }
        let neg_one = -T::one();
        if !is_positive(alpha - neg_one) || !alpha.is_finite() || !is_positive(beta - neg_one) || !beta.is_finite() {
            return Err(Error::Quadrature(format!(
                "Jacobi exponents must be finite and > -1, got alpha = {alpha}, beta = {beta}"
            )));
        }
        let two = real::<T>(2.0);
        let ab = alpha + beta;
        let mut diag = vec![T::zero(); n];
        let mut off = vec![T::zero(); n];
        diag[0] = (beta - alpha) / (ab + two);
        for i in 1..n {
            let it = T::from_usize(i).unwrap();
            let d = two * it + ab;
            diag[i] = (beta * beta - alpha * alpha) / (d * (d + two));
            off[i - 1] = (two / d)
                * (it * (it + alpha) * (it + beta) * (it + ab) / ((d + T::one()) * (d - T::one())))
                    .sqrt();
        }
        // total weight: 2^{a+b+1} B(a+1, b+1)
        let ln_mu0 = (ab + T::one()) * two.ln() + ln_gamma(alpha + T::one())?
            + ln_gamma(beta + T::one())?
            - ln_gamma(ab + two)?;
        Self::from_recurrence(diag, off, ln_mu0.exp())
    }

    /// Gauss-Jacobi rule mapped to `[0, 1]` for the weight
    /// `(1 - z)^alpha z^beta`.
    pub fn jacobi01(n: usize, alpha: T, beta: T) -> Result<Self> {
        let raw = Self::jacobi(n, alpha, beta)?;
        let half = real::<T>(0.5);
        let scale = (-(alpha + beta + T::one()) * real::<T>(2.0).ln()).exp();
        Ok(Self {
            nodes: raw.nodes.iter().map(|&u| half * (u + T::one())).collect(),
            weights: raw.weights.iter().map(|&w| w * scale).collect(),
        })
    }

    /// Generalized Gauss-Laguerre rule of degree `n` on `(0, inf)` for the
    /// weight `u^alpha e^{-u}`, `alpha > -1`.
    pub fn laguerre(n: usize, alpha: T) -> Result<Self> {
        if n < 2 {
            return Err(Error::Quadrature(format!("degree must be >= 2, got {n}")));
        }
        if !is_positive(alpha + T::one()) || !alpha.is_finite() {
            return Err(Error::Quadrature(format!(
                "Laguerre exponent must be finite and > -1, got {alpha}"
            )));
        }
        let two = real::<T>(2.0);
        let mut diag = vec![T::zero(); n];
        let mut off = vec![T::zero(); n];
        for i in 0..n {
            let it = T::from_usize(i).unwrap();
            diag[i] = two * it + alpha + T::one();
            if i + 1 < n {
                let i1 = it + T::one();
                off[i] = (i1 * (i1 + alpha)).sqrt();
            }
        }
        Self::from_recurrence(diag, off, ln_gamma(alpha + T::one())?.exp())
    }

    fn from_recurrence(mut diag: Vec<T>, mut off: Vec<T>, mu0: T) -> Result<Self> {
        let n = diag.len();
        let mut first = vec![T::zero(); n];
        first[0] = T::one();
        tridiag_ql(&mut diag, &mut off, &mut first)?;
        let weights = first.iter().map(|&f| mu0 * f * f).collect();
        Ok(Self {
            nodes: diag,
            weights,
        })
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    /// Weighted sum `sum_i w_i f(x_i)`.
    pub fn integrate(&self, f: impl Fn(T) -> T) -> T {
        self.nodes
            .iter()
            .zip(&self.weights)
            .fold(T::zero(), |acc, (&x, &w)| acc + w * f(x))
    }
}

/// Implicit-shift QL iteration for a symmetric tridiagonal matrix,
/// accumulating the rotations into a single tracked vector (initialized to
/// `e_1`, so it ends up holding the first component of each eigenvector).
///
/// `d` holds the diagonal and returns the eigenvalues in ascending order;
/// `e` holds the sub-diagonal in `e[0..n-1]` and is destroyed.
fn tridiag_ql<T: Real>(d: &mut [T], e: &mut [T], z: &mut [T]) -> Result<()> {
    let n = d.len();
    if n == 1 {
        return Ok(());
    }
    let prec = T::epsilon();
    let two = real::<T>(2.0);
    e[n - 1] = T::zero();

    for l in 0..n {
        let mut iter = 0usize;
        'deflate: loop {
            let mut m = l;
            while m + 1 < n {
                if e[m].abs() <= prec * (d[m].abs() + d[m + 1].abs()) {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 100 {
                return Err(Error::Eigen);
            }
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(T::one());
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = T::one();
            let mut c = T::one();
            let mut p = T::zero();
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == T::zero() {
                    d[i + 1] -= p;
                    e[m] = T::zero();
                    continue 'deflate;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = T::zero();
        }
    }

    // insertion sort ascending, carrying the tracked components
    for i in 1..n {
        let di = d[i];
        let zi = z[i];
        let mut j = i;
        while j > 0 && d[j - 1] > di {
            d[j] = d[j - 1];
            z[j] = z[j - 1];
            j -= 1;
        }
        d[j] = di;
        z[j] = zi;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() <= tol, "{g} vs {w}");
        }
    }

    #[test]
    fn legendre_5_reference() {
        // alpha = beta = 0 degree 5: textbook Gauss-Legendre values
        let rule = GaussRule::jacobi(5, 0.0, 0.0).unwrap();
        assert_close(
            rule.nodes(),
            &[
                -0.906179845938664,
                -0.5384693101056831,
                0.0,
                0.5384693101056831,
                0.906179845938664,
            ],
            1e-14,
        );
        assert_close(
            rule.weights(),
            &[
                0.23692688505618908,
                0.47862867049936647,
                0.5688888888888889,
                0.47862867049936647,
                0.23692688505618908,
            ],
            1e-14,
        );
    }

    #[test]
    fn jacobi_alpha1_reference() {
        let rule = GaussRule::jacobi(5, 1.0, 0.0).unwrap();
        assert_close(
            rule.nodes(),
            &[
                -0.9203802858970626,
                -0.6039731642527836,
                -0.1240503795052277,
                0.3909285467072722,
                0.8029298284023472,
            ],
            1e-13,
        );
        assert_close(
            rule.weights(),
            &[
                0.3871263609066059,
                0.6686985523774788,
                0.5855479483386794,
                0.2956354802904667,
                0.0629916580867692,
            ],
            1e-13,
        );
    }

    #[test]
    fn jacobi01_endpoint_singularity() {
        // integral of (1-z)^{-1/2} over (0,1) is 2, captured by the weight alone
        let rule = GaussRule::jacobi01(16, -0.5f64, 0.0).unwrap();
        let got = rule.integrate(|_| 1.0);
        assert!((got - 2.0).abs() < 1e-13);
        // B(2, 1/2) = integral z (1-z)^{-1/2} = 4/3
        let got = rule.integrate(|z| z);
        assert!((got - 4.0 / 3.0).abs() < 1e-13);
    }

    #[test]
    fn jacobi01_polynomial_exactness() {
        let rule = GaussRule::jacobi01(2, 0.0f64, 0.0).unwrap();
        // degree-2 Gauss rule integrates cubics exactly
        let got = rule.integrate(|z| z * z * z);
        assert!((got - 0.25).abs() < 1e-15);
    }

    #[test]
    fn laguerre_basic() {
        let rule = GaussRule::laguerre(2, 0.0f64).unwrap();
        // known degree-2 rule: nodes 2 -+ sqrt(2)
        let s2 = 2.0f64.sqrt();
        assert_close(rule.nodes(), &[2.0 - s2, 2.0 + s2], 1e-13);
        // integral u^2 e^{-u} = 2, exact for a degree-2 rule
        let got = rule.integrate(|u| u * u);
        assert!((got - 2.0).abs() < 1e-13);
    }

    #[test]
    fn laguerre_generalized() {
        // weight u^{1/2} e^{-u}: total mass Gamma(3/2)
        let rule = GaussRule::laguerre(24, 0.5f64).unwrap();
        let got = rule.integrate(|_| 1.0);
        assert!((got - 0.886_226_925_452_758).abs() < 1e-13);
        // with f = u: Gamma(5/2) = 3 sqrt(pi) / 4
        let got = rule.integrate(|u| u);
        let want = 3.0 * core::f64::consts::PI.sqrt() / 4.0;
        assert!((got - want).abs() < 1e-13);
    }

    #[test]
    fn doubling_stability() {
        // a smooth integrand: doubling the rule barely moves the value
        let f = |z: f64| (1.5 * z).exp();
        let a = GaussRule::jacobi01(24, -0.3, 0.0).unwrap().integrate(f);
        let b = GaussRule::jacobi01(48, -0.3, 0.0).unwrap().integrate(f);
        assert!((a - b).abs() <= 1e-13 * b.abs());
    }

    #[test]
    fn invalid_parameters() {
        assert!(GaussRule::<f64>::jacobi(1, 0.0, 0.0).is_err());
        assert!(GaussRule::<f64>::jacobi(8, -1.0, 0.0).is_err());
        assert!(GaussRule::<f64>::jacobi(8, 0.0, -1.5).is_err());
        assert!(GaussRule::<f64>::laguerre(8, -1.0).is_err());
    }
}
