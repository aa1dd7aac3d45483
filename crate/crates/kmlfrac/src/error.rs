//! Error type shared by every module.

/// Errors reported by construction and evaluation routines.
///
/// Diagnostics are carried as `f64` regardless of the working scalar type so
/// the error type stays object-simple and printable.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument is outside the function's real-positive domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The Fox-Wright convergence condition `1 + sum(B_j) - sum(A_i) >= 0`
    /// does not hold for the requested parameter pairs.
    #[error(
        "Fox-Wright convergence condition violated: sum(A_i) = {sum_upper}, \
         sum(B_j) = {sum_lower}, margin 1 + sum(B_j) - sum(A_i) = {margin} < 0"
    )]
    ConvergenceCondition {
        sum_upper: f64,
        sum_lower: f64,
        margin: f64,
    },

    /// Parameters are inconsistent with the requested operation
    /// (e.g. a reduction check applied to parameters outside the reduction).
    #[error("contract violation: {0}")]
    Contract(String),

    /// A quadrature rule failed to build or refine to the requested tolerance,
    /// or sampled a non-finite integrand value.
    #[error("quadrature failure: {0}")]
    Quadrature(String),

    /// The symmetric tridiagonal eigensolver exceeded its iteration budget.
    #[error("eigenvalue iteration did not converge")]
    Eigen,
}

pub type Result<T> = core::result::Result<T, Error>;
