//! Convergence-controlled summation of the generalized k-Mittag-Leffler
//! function and the Fox-Wright function.
//!
//! Both series are summed in log space: each term advances by cached
//! log-gamma differences rather than linear-space gamma products, so large
//! indices neither overflow nor lose the term ratio. Accumulation is
//! compensated (Kahan), which also covers the alternating case `z < 0`.
//!
//! Truncation rule: summation stops once two consecutive term magnitudes
//! fall below `tol * |partial sum|` (a single small term is not trusted,
//! since term ratios near 1 can dip transiently). The result carries a
//! conservative tail estimate: the first omitted term inflated by the
//! geometric factor `1/(1 - rho)` when the observed ratio `rho < 1`.

use crate::error::{Error, Result};
use crate::kgamma::ln_k_gamma;
use crate::scalar::{is_positive, real, Real};
use crate::special::{is_gamma_pole, ln_gamma_positive, ln_gamma_signed};

/// Default term cap; exceeding it flags the result as non-converged.
pub const DEFAULT_TERM_CAP: usize = 10_000;

/// Outcome of a series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult<T> {
    /// Partial sum at truncation.
    pub value: T,
    /// Number of terms actually accumulated.
    pub terms_used: usize,
    /// Conservative bound on the omitted tail (see module docs).
    pub tail_estimate: T,
    /// True iff the tail estimate meets `tol * max(1, |value|)`.
    pub converged: bool,
}

// ---------------------------------------------------------------------------
// summation engine
// ---------------------------------------------------------------------------

/// Compensated accumulator.
#[derive(Debug, Clone, Copy)]
struct KahanSum<T> {
    sum: T,
    err: T,
}

impl<T: Real> KahanSum<T> {
    fn new() -> Self {
        Self {
            sum: T::zero(),
            err: T::zero(),
        }
    }

    fn add(&mut self, v: T) {
        let y = v - self.err;
        let t = self.sum + y;
        self.err = (t - self.sum) - y;
        self.sum = t;
    }
}

/// Sums terms provided as `(ln |term|, sign)` pairs.
///
/// The closure is called once per index in order; one extra call past the
/// stopping index supplies the first omitted term for the tail estimate.
fn sum_log_terms<T: Real>(
    mut next: impl FnMut() -> Result<(T, i8)>,
    tol: T,
    max_terms: usize,
) -> Result<EvalResult<T>> {
    let mut acc = KahanSum::new();
    let mut prev_small = false;
    let mut last_mag = T::zero();
    let mut all_positive = true;
    // one term of lookahead from a tail estimate that came back too large
    let mut pending: Option<(T, i8)> = None;

    for n in 0..max_terms {
        let (ln_mag, sign) = match pending.take() {
            Some(t) => t,
            None => next()?,
        };
        let mag = ln_mag.exp();
        if !mag.is_finite() {
            // A single term overflowed the scalar: surface it, never return
            // a silently wrong finite sum.
            return Ok(EvalResult {
                value: if sign < 0 { -mag } else { mag },
                terms_used: n + 1,
                tail_estimate: T::infinity(),
                converged: false,
            });
        }
        if sign < 0 {
            all_positive = false;
        }
        let before = acc.sum;
        acc.add(if sign < 0 { -mag } else { mag });
        if !acc.sum.is_finite() {
            // the partial sum itself overflowed: flag, never silently wrap
            return Ok(EvalResult {
                value: acc.sum,
                terms_used: n + 1,
                tail_estimate: T::infinity(),
                converged: false,
            });
        }
        if all_positive {
            debug_assert!(
                acc.sum >= before,
                "partial sums of an all-positive series must be monotone"
            );
        }
        last_mag = mag;

        let small = mag <= tol * acc.sum.abs();
        if small && prev_small && n >= 1 {
            let lookahead = next()?;
            let next_mag = lookahead.0.exp();
            let rho = if last_mag > T::zero() {
                next_mag / last_mag
            } else {
                T::zero()
            };
            let tail = if rho < T::one() {
                next_mag / (T::one() - rho)
            } else {
                next_mag
            };
            let value = acc.sum;
            if tail <= tol * value.abs().max(T::one()) {
                return Ok(EvalResult {
                    value,
                    terms_used: n + 1,
                    tail_estimate: tail,
                    converged: true,
                });
            }
            // the geometric inflation still exceeds the budget (term ratio
            // near 1): keep summing, reusing the term just peeked at
            pending = Some(lookahead);
        }
        prev_small = small;
    }

    Ok(EvalResult {
        value: acc.sum,
        terms_used: max_terms,
        tail_estimate: last_mag,
        converged: false,
    })
}

// ---------------------------------------------------------------------------
// generalized k-Mittag-Leffler function
// ---------------------------------------------------------------------------

/// Parameters `(k, xi, zeta, vartheta, q)` of the generalized k-Mittag-Leffler
/// function, all strictly positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLParams<T> {
    k: T,
    xi: T,
    zeta: T,
    vartheta: T,
    q: T,
}

impl<T: Real> MLParams<T> {
    pub fn new(k: T, xi: T, zeta: T, vartheta: T, q: T) -> Result<Self> {
        for (name, v) in [
            ("k", k),
            ("xi", xi),
            ("zeta", zeta),
            ("vartheta", vartheta),
            ("q", q),
        ] {
            if !is_positive(v) {
                return Err(Error::Domain(format!(
                    "Mittag-Leffler parameter {name} must be > 0, got {v}"
                )));
            }
        }
        Ok(Self {
            k,
            xi,
            zeta,
            vartheta,
            q,
        })
    }

    pub fn k(&self) -> T {
        self.k
    }
    pub fn xi(&self) -> T {
        self.xi
    }
    pub fn zeta(&self) -> T {
        self.zeta
    }
    pub fn vartheta(&self) -> T {
        self.vartheta
    }
    pub fn q(&self) -> T {
        self.q
    }

    /// The equivalent Fox-Wright form: `E(z) = pref * 1Psi1[...](scale * z)`.
    ///
    /// Returns `(pref, spec, scale)` with `pref = k^{1 - zeta/k}/Gamma(vartheta/k)`
    /// and `scale = k^{q - xi/k}`. This is the same rewrite the closed-form
    /// derivative formulas rest on, so it doubles as a cross-path check.
    pub fn fox_wright_form(&self) -> Result<(T, FoxWrightSpec<T>, T)> {
        let pref = ((T::one() - self.zeta / self.k) * self.k.ln()
            - ln_gamma_positive(self.vartheta / self.k))
        .exp();
        let spec = FoxWrightSpec::new(
            vec![(self.vartheta / self.k, self.q)],
            vec![(self.zeta / self.k, self.xi / self.k)],
        )?;
        let scale = ((self.q - self.xi / self.k) * self.k.ln()).exp();
        Ok((pref, spec, scale))
    }
}

/// Incremental log-space term source for the k-Mittag-Leffler series.
struct MlTerms<T> {
    params: MLParams<T>,
    n: usize,
    ln_term: T,
    lg_num_prev: T,
    lg_den_prev: T,
    ln_abs_z: T,
    sign_z: i8,
    sign: i8,
}

impl<T: Real> MlTerms<T> {
    fn new(params: MLParams<T>, z: T) -> Self {
        let lg_num0 = ln_gamma_positive(params.vartheta / params.k);
        let lg_den0 = ln_gamma_positive(params.zeta / params.k);
        // n = 0 term: 1 / Gamma_k(zeta)
        let ln_term = -((params.zeta / params.k - T::one()) * params.k.ln() + lg_den0);
        Self {
            params,
            n: 0,
            ln_term,
            lg_num_prev: lg_num0,
            lg_den_prev: lg_den0,
            ln_abs_z: z.abs().ln(),
            sign_z: if z < T::zero() { -1 } else { 1 },
            sign: 1,
        }
    }

    fn next(&mut self) -> Result<(T, i8)> {
        let out = (self.ln_term, self.sign);
        let p = &self.params;
        let n1 = T::from_usize(self.n + 1).unwrap();
        let lg_num = ln_gamma_positive(p.vartheta / p.k + n1 * p.q);
        let lg_den = ln_gamma_positive((n1 * p.xi + p.zeta) / p.k);
        self.ln_term = self.ln_term
            + (p.q - p.xi / p.k) * p.k.ln()
            + (lg_num - self.lg_num_prev)
            - (lg_den - self.lg_den_prev)
            + self.ln_abs_z
            - n1.ln();
        self.lg_num_prev = lg_num;
        self.lg_den_prev = lg_den;
        self.sign *= self.sign_z;
        self.n += 1;
        Ok(out)
    }
}

/// Evaluates the generalized k-Mittag-Leffler function
/// `E(z) = sum_n (vartheta)_{nq,k} z^n / (Gamma_k(n xi + zeta) n!)`
/// with relative tail estimate at most `tol`.
pub fn ml_eval<T: Real>(params: &MLParams<T>, z: T, tol: T) -> Result<EvalResult<T>> {
    ml_eval_capped(params, z, tol, DEFAULT_TERM_CAP)
}

/// [`ml_eval`] with an explicit term cap.
pub fn ml_eval_capped<T: Real>(
    params: &MLParams<T>,
    z: T,
    tol: T,
    max_terms: usize,
) -> Result<EvalResult<T>> {
    if !is_positive(tol) {
        return Err(Error::Domain(format!("tolerance must be > 0, got {tol}")));
    }
    let mut terms = MlTerms::new(*params, z);
    sum_log_terms(|| terms.next(), tol, max_terms)
}

// ---------------------------------------------------------------------------
// Fox-Wright function
// ---------------------------------------------------------------------------

/// Parameter pairs of the Fox-Wright function `pPsi_q`.
///
/// Construction enforces the convergence condition
/// `1 + sum(B_j) - sum(A_i) >= 0`, strictly positive multipliers, strictly
/// positive lower parameters (so no denominator gamma argument can reach a
/// pole along the summation path), and the absence of numerator poles.
#[derive(Debug, Clone, PartialEq)]
pub struct FoxWrightSpec<T> {
    upper: Vec<(T, T)>,
    lower: Vec<(T, T)>,
}

impl<T: Real> FoxWrightSpec<T> {
    pub fn new(upper: Vec<(T, T)>, lower: Vec<(T, T)>) -> Result<Self> {
        for &(a, big_a) in &upper {
            if !is_positive(big_a) {
                return Err(Error::Domain(format!(
                    "upper multiplier must be > 0, got ({a}, {big_a})"
                )));
            }
            if a <= T::zero() {
                // finitely many indices can reach a numerator pole; scan them
                let mut n = T::zero();
                while a + big_a * n <= T::zero() {
                    if is_gamma_pole(a + big_a * n) {
                        return Err(Error::Domain(format!(
                            "upper parameter ({a}, {big_a}) hits a gamma pole at term {n}"
                        )));
                    }
                    n += T::one();
                }
            }
        }
        for &(b, big_b) in &lower {
            if !is_positive(big_b) {
                return Err(Error::Domain(format!(
                    "lower multiplier must be > 0, got ({b}, {big_b})"
                )));
            }
            if !is_positive(b) {
                return Err(Error::Domain(format!(
                    "lower parameter must stay positive along the series, got ({b}, {big_b})"
                )));
            }
        }
        let sum_upper: T = upper
            .iter()
            .fold(T::zero(), |acc, &(_, big_a)| acc + big_a);
        let sum_lower: T = lower
            .iter()
            .fold(T::zero(), |acc, &(_, big_b)| acc + big_b);
        let margin = T::one() + sum_lower - sum_upper;
        if margin < T::zero() {
            return Err(Error::ConvergenceCondition {
                sum_upper: sum_upper.to_f64().unwrap_or(f64::NAN),
                sum_lower: sum_lower.to_f64().unwrap_or(f64::NAN),
                margin: margin.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { upper, lower })
    }

    pub fn upper(&self) -> &[(T, T)] {
        &self.upper
    }

    pub fn lower(&self) -> &[(T, T)] {
        &self.lower
    }

    /// `1 + sum(B_j) - sum(A_i)`; zero means a finite radius of convergence,
    /// positive means the series is entire.
    pub fn convergence_margin(&self) -> T {
        let sum_upper: T = self
            .upper
            .iter()
            .fold(T::zero(), |acc, &(_, a)| acc + a);
        let sum_lower: T = self
            .lower
            .iter()
            .fold(T::zero(), |acc, &(_, b)| acc + b);
        T::one() + sum_lower - sum_upper
    }

    /// Single series term, computed directly (no incremental state):
    /// `prod Gamma(a_i + A_i n) / prod Gamma(b_j + B_j n) * z^n / n!`.
    pub fn term(&self, n: u32, z: T) -> Result<T> {
        let nt = T::from_u32(n).unwrap();
        let mut ln = -ln_gamma_positive(nt + T::one());
        let mut sign = 1i8;
        for &(a, big_a) in &self.upper {
            let (l, s) = ln_gamma_signed(a + big_a * nt)?;
            ln += l;
            sign *= s;
        }
        for &(b, big_b) in &self.lower {
            ln -= ln_gamma_positive(b + big_b * nt);
        }
        if n > 0 {
            if z == T::zero() {
                return Ok(T::zero());
            }
            ln += nt * z.abs().ln();
            if z < T::zero() && n % 2 == 1 {
                sign = -sign;
            }
        }
        Ok(if sign < 0 { -ln.exp() } else { ln.exp() })
    }

    /// Evaluates the series at `z` with relative tail estimate at most `tol`.
    pub fn eval(&self, z: T, tol: T) -> Result<EvalResult<T>> {
        self.eval_capped(z, tol, DEFAULT_TERM_CAP)
    }

    /// [`eval`](Self::eval) with an explicit term cap.
    pub fn eval_capped(&self, z: T, tol: T, max_terms: usize) -> Result<EvalResult<T>> {
        if !is_positive(tol) {
            return Err(Error::Domain(format!("tolerance must be > 0, got {tol}")));
        }
        let mut terms = FoxWrightTerms::new(self, z)?;
        sum_log_terms(|| terms.next(), tol, max_terms)
    }
}

/// Incremental log-space term source for the Fox-Wright series.
struct FoxWrightTerms<'a, T> {
    spec: &'a FoxWrightSpec<T>,
    n: usize,
    ln_term: T,
    lg_upper_prev: Vec<T>,
    lg_lower_prev: Vec<T>,
    sign_gammas: i8,
    ln_abs_z: T,
    sign_z: i8,
    sign_zn: i8,
}

impl<'a, T: Real> FoxWrightTerms<'a, T> {
    fn new(spec: &'a FoxWrightSpec<T>, z: T) -> Result<Self> {
        let mut ln_term = T::zero();
        let mut sign = 1i8;
        let mut lg_upper_prev = Vec::with_capacity(spec.upper.len());
        for &(a, _) in &spec.upper {
            let (l, s) = ln_gamma_signed(a)?;
            ln_term += l;
            sign *= s;
            lg_upper_prev.push(l);
        }
        let mut lg_lower_prev = Vec::with_capacity(spec.lower.len());
        for &(b, _) in &spec.lower {
            let l = ln_gamma_positive(b);
            ln_term -= l;
            lg_lower_prev.push(l);
        }
        Ok(Self {
            spec,
            n: 0,
            ln_term,
            lg_upper_prev,
            lg_lower_prev,
            sign_gammas: sign,
            ln_abs_z: z.abs().ln(),
            sign_z: if z < T::zero() { -1 } else { 1 },
            sign_zn: 1,
        })
    }

    fn next(&mut self) -> Result<(T, i8)> {
        let out = (self.ln_term, self.sign_gammas * self.sign_zn);
        let n1 = T::from_usize(self.n + 1).unwrap();
        let mut delta = self.ln_abs_z - n1.ln();
        let mut sign = 1i8;
        for (i, &(a, big_a)) in self.spec.upper.iter().enumerate() {
            let (l, s) = ln_gamma_signed(a + big_a * n1)?;
            delta += l - self.lg_upper_prev[i];
            self.lg_upper_prev[i] = l;
            sign *= s;
        }
        for (j, &(b, big_b)) in self.spec.lower.iter().enumerate() {
            let l = ln_gamma_positive(b + big_b * n1);
            delta -= l - self.lg_lower_prev[j];
            self.lg_lower_prev[j] = l;
        }
        self.ln_term += delta;
        self.sign_gammas = sign;
        self.sign_zn *= self.sign_z;
        self.n += 1;
        Ok(out)
    }
}

/// Evaluates a Fox-Wright spec at `z`; free-function form of
/// [`FoxWrightSpec::eval`].
pub fn foxwright_eval<T: Real>(spec: &FoxWrightSpec<T>, z: T, tol: T) -> Result<EvalResult<T>> {
    spec.eval(z, tol)
}

// ---------------------------------------------------------------------------
// reduction checks
// ---------------------------------------------------------------------------

/// The classical special cases of the generalized k-Mittag-Leffler function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MlReduction {
    /// `q = 1`: the k-Mittag-Leffler function.
    Q1,
    /// `k = 1`: the four-parameter Mittag-Leffler function.
    K1,
    /// `q = k = 1`: the three-parameter (Prabhakar-type) function.
    Q1K1,
    /// `q = k = vartheta = 1`: the two-parameter (Wiman) function.
    Wiman,
    /// `q = k = vartheta = zeta = 1`: the one-parameter classical function.
    Classical,
}

fn require_one<T: Real>(name: &str, v: T) -> Result<()> {
    if v != T::one() {
        return Err(Error::Contract(format!(
            "reduction requires {name} = 1, got {v}"
        )));
    }
    Ok(())
}

/// Sums a reduced-form series given the per-index `ln |term|` closure.
fn reduced_sum<T: Real>(mut ln_term: impl FnMut(u32) -> T, z: T, cap: u32) -> T {
    let mut acc = KahanSum::new();
    let neg = z < T::zero();
    let tiny = real::<T>(1e-18);
    for n in 0..cap {
        let mag = ln_term(n).exp();
        let term = if neg && n % 2 == 1 { -mag } else { mag };
        acc.add(term);
        if n > 2 && mag <= tiny * acc.sum.abs() {
            break;
        }
    }
    acc.sum
}

/// Compares [`ml_eval`] of the general form against an independently coded
/// reduced-form summation; returns the relative difference.
///
/// The parameters must already satisfy the selected reduction (`which`);
/// otherwise a contract error is returned.
pub fn ml_reduction_check<T: Real>(
    params: &MLParams<T>,
    z: T,
    which: MlReduction,
) -> Result<T> {
    match which {
        MlReduction::Q1 => require_one("q", params.q)?,
        MlReduction::K1 => require_one("k", params.k)?,
        MlReduction::Q1K1 => {
            require_one("q", params.q)?;
            require_one("k", params.k)?;
        }
        MlReduction::Wiman => {
            require_one("q", params.q)?;
            require_one("k", params.k)?;
            require_one("vartheta", params.vartheta)?;
        }
        MlReduction::Classical => {
            require_one("q", params.q)?;
            require_one("k", params.k)?;
            require_one("vartheta", params.vartheta)?;
            require_one("zeta", params.zeta)?;
        }
    }

    let general = ml_eval(params, z, real(1e-15))?.value;
    let ln_abs_z = z.abs().ln();
    let nz = |n: u32| {
        if n == 0 {
            T::zero()
        } else {
            T::from_u32(n).unwrap() * ln_abs_z
        }
    };
    let (k, xi, zeta, vt, q) = (params.k, params.xi, params.zeta, params.vartheta, params.q);

    let reduced = match which {
        // sum (vt)_{n,k} z^n / (Gamma_k(n xi + zeta) n!), product-form Pochhammer
        MlReduction::Q1 => {
            let mut ln_poch = T::zero();
            let mut last = 0u32;
            reduced_sum(
                |n| {
                    while last < n {
                        ln_poch += (vt + T::from_u32(last).unwrap() * k).ln();
                        last += 1;
                    }
                    let nt = T::from_u32(n).unwrap();
                    ln_poch + nz(n)
                        - ln_k_gamma(nt * xi + zeta, k).expect("positive argument")
                        - ln_gamma_positive(nt + T::one())
                },
                z,
                2000,
            )
        }
        // sum (vt)_{nq} z^n / (Gamma(n xi + zeta) n!), classical gamma only
        MlReduction::K1 => {
            let lg_vt = ln_gamma_positive(vt);
            reduced_sum(
                |n| {
                    let nt = T::from_u32(n).unwrap();
                    ln_gamma_positive(vt + nt * q) - lg_vt + nz(n)
                        - ln_gamma_positive(nt * xi + zeta)
                        - ln_gamma_positive(nt + T::one())
                },
                z,
                2000,
            )
        }
        // sum (vt)_n z^n / (Gamma(n xi + zeta) n!), product-form Pochhammer
        MlReduction::Q1K1 => {
            let mut ln_poch = T::zero();
            let mut last = 0u32;
            reduced_sum(
                |n| {
                    while last < n {
                        ln_poch += (vt + T::from_u32(last).unwrap()).ln();
                        last += 1;
                    }
                    let nt = T::from_u32(n).unwrap();
                    ln_poch + nz(n)
                        - ln_gamma_positive(nt * xi + zeta)
                        - ln_gamma_positive(nt + T::one())
                },
                z,
                2000,
            )
        }
        // sum z^n / Gamma(n xi + zeta)
        MlReduction::Wiman => reduced_sum(
            |n| {
                let nt = T::from_u32(n).unwrap();
                nz(n) - ln_gamma_positive(nt * xi + zeta)
            },
            z,
            2000,
        ),
        // sum z^n / Gamma(n xi + 1)
        MlReduction::Classical => reduced_sum(
            |n| {
                let nt = T::from_u32(n).unwrap();
                nz(n) - ln_gamma_positive(nt * xi + T::one())
            },
            z,
            2000,
        ),
    };

    let denom = reduced.abs().max(T::min_positive_value());
    Ok((general - reduced).abs() / denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    const E: f64 = core::f64::consts::E;

    fn p(k: f64, xi: f64, zeta: f64, vt: f64, q: f64) -> MLParams<f64> {
        MLParams::new(k, xi, zeta, vt, q).unwrap()
    }

    fn sec21() -> MLParams<f64> {
        p(0.5, 0.5, 0.2, 0.5, 0.4)
    }

    #[test]
    fn ml_exponential_reduction() {
        // E^{1,1}_{1,1,1}(1) = e
        let r = ml_eval(&p(1.0, 1.0, 1.0, 1.0, 1.0), 1.0, 1e-14).unwrap();
        assert!(r.converged);
        assert!((r.value - E).abs() < 1e-13);
        // zeta = 2: sum 1/(n+1)! = e - 1
        let r = ml_eval(&p(1.0, 1.0, 2.0, 1.0, 1.0), 1.0, 1e-14).unwrap();
        assert!((r.value - (E - 1.0)).abs() < 1e-13);
    }

    #[test]
    fn ml_at_zero_is_reciprocal_k_gamma_of_zeta() {
        let r = ml_eval(&sec21(), 0.0, 1e-14).unwrap();
        // 1/Gamma_k(zeta), 25-digit reference
        assert!((r.value - 0.297_433_048_602_440_24).abs() < 1e-15);
        assert!(r.converged);
        assert!(r.tail_estimate == 0.0);
    }

    #[test]
    fn ml_reference_value_at_one() {
        let r = ml_eval(&sec21(), 1.0, 1e-14).unwrap();
        assert!((r.value - 2.029_773_147_152_345).abs() < 1e-13);
    }

    #[test]
    fn ml_rejects_bad_params() {
        assert!(MLParams::new(0.0, 1.0, 1.0, 1.0, 1.0).is_err());
        assert!(MLParams::new(1.0, -1.0, 1.0, 1.0, 1.0).is_err());
        assert!(ml_eval(&sec21(), 1.0, 0.0).is_err());
    }

    #[test]
    fn foxwright_exponential() {
        // 1Psi1[(1,1);(1,1)](z) = e^z: the gamma factors cancel
        let spec = FoxWrightSpec::new(vec![(1.0, 1.0)], vec![(1.0, 1.0)]).unwrap();
        let r = spec.eval(1.0, 1e-14).unwrap();
        assert!(r.converged);
        assert!((r.value - E).abs() < 1e-13);
    }

    #[test]
    fn foxwright_reference_value() {
        // 1Psi1[(0.5,0.4);(0.4,1.0)](0.7), 200-term direct reference
        let spec = FoxWrightSpec::new(vec![(0.5f64, 0.4)], vec![(0.4, 1.0)]).unwrap();
        let r = spec.eval(0.7, 1e-14).unwrap();
        assert!((r.value - 1.837_664_333_019_986_9).abs() < 1e-13);

        // brute-force oracle: direct per-term summation, no incremental state
        let brute: f64 = (0..200).map(|n| spec.term(n, 0.7).unwrap()).sum();
        assert!((r.value - brute).abs() <= 1e-13 * brute.abs());
    }

    #[test]
    fn foxwright_convergence_condition_rejected() {
        // sum(A) = 2.5 > 1 + sum(B) = 2
        let err = FoxWrightSpec::new(vec![(1.0, 2.5)], vec![(1.0, 1.0)]).unwrap_err();
        match err {
            Error::ConvergenceCondition {
                sum_upper,
                sum_lower,
                margin,
            } => {
                assert_eq!(sum_upper, 2.5);
                assert_eq!(sum_lower, 1.0);
                assert!((margin - (-0.5)).abs() < 1e-15);
            }
            other => panic!("expected convergence-condition error, got {other:?}"),
        }
    }

    #[test]
    fn foxwright_boundary_margin_finite_radius() {
        // margin exactly 0: terms are C(2n, n) z^n, radius 1/4
        let spec = FoxWrightSpec::new(vec![(1.0f64, 2.0)], vec![(1.0, 1.0)]).unwrap();
        assert_eq!(spec.convergence_margin(), 0.0);
        // inside the radius: sums to 1/sqrt(1 - 4z)
        let r = spec.eval(0.2, 1e-13).unwrap();
        assert!(r.converged);
        assert!((r.value - 1.0 / 0.2f64.sqrt()).abs() < 1e-12);
        // outside the radius: must be flagged, not silently wrong
        let r = spec.eval_capped(0.3, 1e-13, 2000).unwrap();
        assert!(!r.converged);
    }

    #[test]
    fn foxwright_lower_pole_rejected_at_construction() {
        assert!(FoxWrightSpec::new(vec![(1.0, 1.0)], vec![(0.0, 1.0)]).is_err());
        assert!(FoxWrightSpec::new(vec![(1.0, 1.0)], vec![(-0.5, 1.0)]).is_err());
    }

    #[test]
    fn foxwright_upper_pole_rejected_negative_nonpole_accepted() {
        // -0.5 + 0.25 * 2 = 0 exactly: numerator pole
        assert!(FoxWrightSpec::new(vec![(-0.5, 0.25)], vec![(1.0, 1.0)]).is_err());
        // -0.625 + 0.25 n never hits an integer <= 0
        let spec = FoxWrightSpec::new(vec![(-0.625f64, 0.25)], vec![(1.0, 1.0)]).unwrap();
        let r = spec.eval(0.1, 1e-12).unwrap();
        assert!(r.converged);
        assert!(r.value.is_finite());
        // signed terms: cross-check against the direct per-term path
        let brute: f64 = (0..60).map(|n| spec.term(n, 0.1).unwrap()).sum();
        assert!((r.value - brute).abs() <= 1e-12 * brute.abs());
    }

    #[test]
    fn term_ratio_incremental_matches_direct() {
        let spec = FoxWrightSpec::new(
            vec![(1.0f64, 0.4), (8.0 / 3.0, 8.0 / 3.0)],
            vec![(0.4, 1.0), (2.566_666_666_666_667, 8.0 / 3.0)],
        )
        .unwrap();
        let z = 1.5157165665103982;
        let mut terms = FoxWrightTerms::new(&spec, z).unwrap();
        let mut prev_ln = terms.next().unwrap().0;
        for n in 0..50u32 {
            let ln = terms.next().unwrap().0;
            let incremental_ratio = (ln - prev_ln).exp();
            let direct_ratio = spec.term(n + 1, z).unwrap() / spec.term(n, z).unwrap();
            assert!(
                (incremental_ratio - direct_ratio).abs() <= 1e-12 * direct_ratio.abs(),
                "ratio mismatch at n = {n}: {incremental_ratio} vs {direct_ratio}"
            );
            prev_ln = ln;
        }
    }

    #[test]
    fn ml_matches_fox_wright_form_on_grid() {
        // the rewrite used inside the closed-form derivative proofs
        let params = sec21();
        let (pref, spec, scale) = params.fox_wright_form().unwrap();
        for i in 0..=10 {
            let z = 0.5 * i as f64;
            let direct = ml_eval(&params, z, 1e-14).unwrap().value;
            let via_fw = pref * spec.eval(scale * z, 1e-14).unwrap().value;
            assert!(
                (direct - via_fw).abs() <= 1e-11 * direct.abs().max(1.0),
                "rewrite mismatch at z = {z}: {direct} vs {via_fw}"
            );
        }
    }

    #[test]
    fn converged_value_matches_long_direct_sum() {
        let params = sec21();
        for &z in &[0.5, 1.0, 2.0, 5.0] {
            let tol = 1e-10;
            let r = ml_eval(&params, z, tol).unwrap();
            assert!(r.converged);
            let (pref, spec, scale) = params.fox_wright_form().unwrap();
            let direct: f64 = (0..2000)
                .map(|n| pref * spec.term(n, scale * z).unwrap())
                .sum();
            assert!(
                (r.value - direct).abs() <= 10.0 * tol * r.value.abs(),
                "z = {z}"
            );
        }
    }

    #[test]
    fn reduction_checks() {
        // Wiman: E_{xi, zeta}(z)
        let r = ml_reduction_check(
            &p(1.0, 0.5, 1.0, 1.0, 1.0),
            0.3,
            MlReduction::Wiman,
        )
        .unwrap();
        assert!(r <= 1e-12, "wiman residual {r}");
        // q = 1 with k-deformation
        let r = ml_reduction_check(&p(0.5, 0.5, 0.2, 0.5, 1.0), 0.2, MlReduction::Q1).unwrap();
        assert!(r <= 1e-12, "q1 residual {r}");
        // k = 1 keeps general q
        let r = ml_reduction_check(&p(1.0, 0.5, 0.3, 0.7, 0.4), 0.2, MlReduction::K1).unwrap();
        assert!(r <= 1e-12, "k1 residual {r}");
        // q = k = 1
        let r = ml_reduction_check(&p(1.0, 0.5, 0.3, 0.7, 1.0), 0.2, MlReduction::Q1K1).unwrap();
        assert!(r <= 1e-12, "q1k1 residual {r}");
        // classical, z = 0: both sides are exactly 1
        let r = ml_reduction_check(
            &p(1.0, 1.0, 1.0, 1.0, 1.0),
            0.0,
            MlReduction::Classical,
        )
        .unwrap();
        assert!(r == 0.0);
    }

    #[test]
    fn reduction_contract_errors() {
        let err = ml_reduction_check(&sec21(), 0.3, MlReduction::Wiman).unwrap_err();
        assert!(matches!(err, Error::Contract(_)));
        let err = ml_reduction_check(&p(0.5, 1.0, 1.0, 1.0, 0.4), 0.3, MlReduction::Q1).unwrap_err();
        assert!(matches!(err, Error::Contract(_)));
    }

    #[test]
    fn negative_argument_alternating() {
        // E_1(-1) = e^{-1}
        let r = ml_eval(&p(1.0, 1.0, 1.0, 1.0, 1.0), -1.0, 1e-14).unwrap();
        assert!((r.value - (-1.0f64).exp()).abs() < 1e-13);
    }

    #[test]
    fn tail_estimate_bounds_true_error() {
        let params = sec21();
        for &z in &[0.5, 2.0, 4.0] {
            let r = ml_eval(&params, z, 1e-6).unwrap();
            let exact = ml_eval(&params, z, 1e-15).unwrap().value;
            assert!(r.converged);
            assert!(
                (r.value - exact).abs() <= r.tail_estimate + 1e-15 * exact,
                "tail underestimates at z = {z}"
            );
        }
    }
}
