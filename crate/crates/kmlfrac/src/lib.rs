//! Numerics for the generalized k-Mittag-Leffler function and its
//! generalized fractional derivatives.
//!
//! The crate has three layers:
//!
//! * kernels — [`special`] (log-gamma) and [`kgamma`] (k-deformed gamma and
//!   Pochhammer symbols with their identities);
//! * closed forms — [`series`] (k-Mittag-Leffler and Fox-Wright summation),
//!   [`fracops`] (the `2Psi2` form of the left/right generalized fractional
//!   derivative of `t^mu E(t^nu)`) and [`transforms`] (Beta and Laplace
//!   images, `3Psi3`/`3Psi2`);
//! * oracles — [`oracles`] and [`quad`]: weight-matched Gaussian quadrature
//!   and finite differences that recompute the same quantities from the
//!   defining integrals, plus [`verify`] which runs the cross-checks as
//!   reportable suites.
//!
//! Everything is pure and stateless; grids can be evaluated from any number
//! of threads without coordination. The numeric kernels are generic over
//! the scalar type via [`scalar::Real`] (`f32` or `f64`); the stated
//! accuracy contracts assume `f64`, and the `*64` aliases below pin that
//! choice.

pub mod error;
pub mod fracops;
pub mod kgamma;
pub mod oracles;
pub mod quad;
pub mod scalar;
pub mod series;
pub mod special;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use fracops::{
    frac_deriv_closed, frac_deriv_monomial, frac_deriv_scaled, frac_deriv_series,
    rl_reduction_check, DerivResult, DerivSpec, MonomialDeriv, Side,
};
pub use kgamma::{
    check_identity_p5, k_gamma, k_pochhammer, ln_k_gamma, ln_k_pochhammer, pochhammer,
    KGammaArg, PochhammerArg,
};
pub use oracles::{
    beta_transform_oracle, central_derivative, frac_deriv_oracle, frac_deriv_oracle_fn,
    frac_integral_oracle, laplace_transform_oracle, QuadConfig,
};
pub use quad::GaussRule;
pub use scalar::Real;
pub use series::{
    foxwright_eval, ml_eval, ml_eval_capped, ml_reduction_check, EvalResult, FoxWrightSpec,
    MLParams, MlReduction, DEFAULT_TERM_CAP,
};
pub use special::{gamma, ln_gamma, ln_gamma_signed};
pub use transforms::{beta_image_closed, laplace_image_closed, BetaImageSpec, LaplaceImageSpec};

/// `f64` instantiations of the parameter and result types.
pub type MLParams64 = series::MLParams<f64>;
pub type FoxWrightSpec64 = series::FoxWrightSpec<f64>;
pub type EvalResult64 = series::EvalResult<f64>;
pub type DerivSpec64 = fracops::DerivSpec<f64>;
pub type DerivResult64 = fracops::DerivResult<f64>;
pub type QuadConfig64 = oracles::QuadConfig<f64>;
pub type BetaImageSpec64 = transforms::BetaImageSpec<f64>;
pub type LaplaceImageSpec64 = transforms::LaplaceImageSpec<f64>;
