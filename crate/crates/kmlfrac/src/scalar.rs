//! Scalar abstraction: the numeric kernels are generic over `f32`/`f64`.

use core::fmt::{Debug, Display};
use core::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the library is generic over.
///
/// Blanket-implemented for `f32` and `f64`. The accuracy contracts quoted in
/// the docs (1e-13 level residuals) assume `f64`; `f32` runs the same
/// algorithms at correspondingly lower precision.
pub trait Real:
    Float + FromPrimitive + AddAssign + SubAssign + MulAssign + DivAssign + Debug + Display + 'static
{
}

impl<T> Real for T where
    T: Float
        + FromPrimitive
        + AddAssign
        + SubAssign
        + MulAssign
        + DivAssign
        + Debug
        + Display
        + 'static
{
}

/// Shorthand for lifting an `f64` constant into the working scalar type.
#[inline]
pub(crate) fn real<T: Real>(v: f64) -> T {
    T::from_f64(v).expect("finite f64 constant converts to any Real scalar")
}

/// Strictly positive and well-ordered (false for NaN).
#[inline]
pub(crate) fn is_positive<T: Real>(v: T) -> bool {
    v > T::zero()
}

/// `lo <= v` with NaN rejected.
#[inline]
pub(crate) fn at_least<T: Real>(v: T, lo: T) -> bool {
    v >= lo
}

/// `v <= hi` with NaN rejected.
#[inline]
pub(crate) fn at_most<T: Real>(v: T, hi: T) -> bool {
    v <= hi
}
