//! Scalar abstraction for the kinematics core.
//!
//! All angle math in this crate is written against [`Real`], so the same
//! code runs in `f32` or `f64`. The tight default tolerances in
//! [`crate::tol`] assume `f64`; `f32` users should widen them.

use core::fmt::{Debug, Display};
use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Display + 'static {
    /// Converts an `f64` literal (tolerances, table constants) into `Self`.
    #[inline]
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("finite literal")
    }

    /// 0.5, used constantly by half-angle formulas.
    #[inline]
    fn half() -> Self {
        Self::of(0.5)
    }

    /// 2.0.
    #[inline]
    fn two() -> Self {
        Self::of(2.0)
    }
}

impl Real for f32 {}
impl Real for f64 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_conversion() {
        assert_eq!(f64::of(1.5), 1.5);
        assert_eq!(f32::of(0.25), 0.25f32);
        assert_eq!(f64::half() * f64::two(), 1.0);
    }
}
