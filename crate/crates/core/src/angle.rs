//! Fold-angle arithmetic on the circle.
//!
//! A fold angle is the signed dihedral deviation from flat at a crease,
//! in radians: 0 unfolded, ±π flat-folded, positive = valley as seen
//! from the +z side of the unfolded sheet. Angles of +π and −π denote
//! the same state, so comparisons go through [`wrap`] / [`gap`].

use crate::scalar::Real;

/// Wraps an angle into (−π, π].
pub fn wrap<T: Real>(a: T) -> T {
    let two_pi = T::two() * T::PI();
    let mut w = (a + T::PI()) - two_pi * ((a + T::PI()) / two_pi).floor();
    // floor form yields [0, 2π); shift to (−π, π]
    w = w - T::PI();
    if w <= -T::PI() {
        w + two_pi
    } else {
        w
    }
}

/// Signed circular gap `a − b`, wrapped into (−π, π].
#[inline]
pub fn gap<T: Real>(a: T, b: T) -> T {
    wrap(a - b)
}

/// Absolute circular distance between two angles.
#[inline]
pub fn dist<T: Real>(a: T, b: T) -> T {
    gap(a, b).abs()
}

/// Representative of `a` (mod 2π) nearest to `prev`, for unwrapping
/// consecutive trace samples before differencing.
pub fn unwrap_near<T: Real>(prev: T, a: T) -> T {
    prev + gap(a, prev)
}

/// True if `a` is within `tol` of 0 or ±π on the circle.
pub fn near_flat_value<T: Real>(a: T, tol: T) -> bool {
    let w = wrap(a);
    w.abs() <= tol || (w.abs() - T::PI()).abs() <= tol
}
