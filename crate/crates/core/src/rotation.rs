//! 3×3 rotation algebra for crease-fold transforms.
//!
//! # Conventions
//!
//! - Right-handed frame, column vectors, left multiplication: `y = R * x`.
//! - [`rot_x`]/[`rot_z`] follow the right-hand rule about +x / +z.
//! - [`fold_about_planar_crease`]`(θ, ρ)` is the fold transform of a crease
//!   ray in the sheet plane at planar angle `θ` with fold angle `ρ`:
//!   `R_z(θ) · R_x(ρ) · R_z(−θ)`. It maps the sector on the
//!   counterclockwise side of the ray into the frame of the sector on the
//!   clockwise side, and fixes every point of the ray. Writing the ray the
//!   other way flips the angle sign:
//!   `fold_about_planar_crease(θ+π, ρ) == fold_about_planar_crease(θ, −ρ)`.

use crate::scalar::Real;
use crate::{Error, Result};

/// A point or direction in ℝ³.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Real> Vec3<T> {
    #[inline]
    pub fn new(x: T, y: T, z: T) -> Self {
        Self { x, y, z }
    }

    #[inline]
    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero())
    }

    #[inline]
    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    #[inline]
    pub fn norm(self) -> T {
        self.dot(self).sqrt()
    }

    #[inline]
    pub fn scale(self, s: T) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }

    /// Componentwise max-abs distance.
    pub fn max_abs_diff(self, o: Self) -> T {
        let d = self - o;
        d.x.abs().max(d.y.abs()).max(d.z.abs())
    }
}

impl<T: Real> std::ops::Add for Vec3<T> {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Real> std::ops::Sub for Vec3<T> {
    type Output = Self;

    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

/// Row-major 3×3 matrix; rotation constructors produce proper rotations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat3<T> {
    pub m: [[T; 3]; 3],
}

impl<T: Real> Mat3<T> {
    pub fn identity() -> Self {
        let (o, l) = (T::zero(), T::one());
        Self {
            m: [[l, o, o], [o, l, o], [o, o, l]],
        }
    }

    #[inline]
    pub fn apply(&self, v: Vec3<T>) -> Vec3<T> {
        let m = &self.m;
        Vec3::new(
            m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z,
        )
    }

    pub fn transpose(&self) -> Self {
        let m = &self.m;
        Self {
            m: [
                [m[0][0], m[1][0], m[2][0]],
                [m[0][1], m[1][1], m[2][1]],
                [m[0][2], m[1][2], m[2][2]],
            ],
        }
    }

    pub fn det(&self) -> T {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Entrywise max-abs difference from `o`.
    pub fn max_abs_diff(&self, o: &Self) -> T {
        let mut d = T::zero();
        for i in 0..3 {
            for j in 0..3 {
                d = d.max((self.m[i][j] - o.m[i][j]).abs());
            }
        }
        d
    }

    /// ‖MᵀM − I‖∞, zero for orthogonal matrices.
    pub fn orthogonality_defect(&self) -> T {
        (self.transpose() * *self).max_abs_diff(&Self::identity())
    }
}

impl<T: Real> std::ops::Mul for Mat3<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut m = [[T::zero(); 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.m[i][0] * rhs.m[0][j]
                    + self.m[i][1] * rhs.m[1][j]
                    + self.m[i][2] * rhs.m[2][j];
            }
        }
        Self { m }
    }
}

/// Rotation by `theta` about the x-axis.
pub fn rot_x<T: Real>(theta: T) -> Mat3<T> {
    let (s, c) = theta.sin_cos();
    let (o, l) = (T::zero(), T::one());
    Mat3 {
        m: [[l, o, o], [o, c, -s], [o, s, c]],
    }
}

/// Rotation by `theta` about the z-axis.
pub fn rot_z<T: Real>(theta: T) -> Mat3<T> {
    let (s, c) = theta.sin_cos();
    let (o, l) = (T::zero(), T::one());
    Mat3 {
        m: [[c, -s, o], [s, c, o], [o, o, l]],
    }
}

/// Fold transform of an in-plane crease ray at planar angle
/// `direction_angle` with fold angle `rho`; fixes the ray pointwise.
pub fn fold_about_planar_crease<T: Real>(direction_angle: T, rho: T) -> Mat3<T> {
    rot_z(direction_angle) * rot_x(rho) * rot_z(-direction_angle)
}

/// Product of a chain of transforms given in application order: the first
/// element acts first on a vector, i.e. it is the rightmost factor of the
/// returned product. Empty chains are rejected.
pub fn compose<T: Real>(chain: &[Mat3<T>]) -> Result<Mat3<T>> {
    if chain.is_empty() {
        return Err(Error::EmptyChain);
    }
    let mut acc = Mat3::identity();
    for f in chain {
        acc = *f * acc;
    }
    Ok(acc)
}

/// Closure product of a vertex: fold transforms of its crease rays
/// multiplied in counterclockwise crossing order (first crossed crease is
/// the leftmost factor). Equals the identity exactly on valid rigid
/// states of the vertex.
pub fn closure_product<T: Real>(rays_and_angles: &[(T, T)]) -> Mat3<T> {
    let mut acc = Mat3::identity();
    for &(dir, rho) in rays_and_angles {
        acc = acc * fold_about_planar_crease(dir, rho);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::SplitMix64;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn assert_vec_eq(a: Vec3<f64>, b: Vec3<f64>, tol: f64) {
        assert!(a.max_abs_diff(b) < tol, "{a:?} != {b:?}");
    }

    #[test]
    fn rot_x_basics() {
        assert!(rot_x(0.0).max_abs_diff(&Mat3::identity()) == 0.0);
        assert_vec_eq(
            rot_x(PI).apply(Vec3::new(0.0, 1.0, 0.0)),
            Vec3::new(0.0, -1.0, 0.0),
            1e-15,
        );
        assert_vec_eq(
            rot_x(FRAC_PI_2).apply(Vec3::new(0.0, 1.0, 0.0)),
            Vec3::new(0.0, 0.0, 1.0),
            1e-15,
        );
    }

    #[test]
    fn rot_z_basics() {
        assert!(rot_z(0.0).max_abs_diff(&Mat3::identity()) == 0.0);
        assert_vec_eq(
            rot_z(FRAC_PI_2).apply(Vec3::new(1.0, 0.0, 0.0)),
            Vec3::new(0.0, 1.0, 0.0),
            1e-15,
        );
        let prod = rot_z(-FRAC_PI_4) * rot_z(FRAC_PI_4);
        assert!(prod.max_abs_diff(&Mat3::identity()) < 1e-15);
    }

    #[test]
    fn crease_fold_specializations() {
        let rho = 0.73;
        assert!(fold_about_planar_crease(0.0, rho).max_abs_diff(&rot_x(rho)) < 1e-15);
        // conjugated factor with the crease ray at −45°
        let lhs = fold_about_planar_crease(-FRAC_PI_4, -0.9);
        let rhs = rot_z(-FRAC_PI_4) * rot_x(-0.9) * rot_z(FRAC_PI_4);
        assert!(lhs.max_abs_diff(&rhs) < 1e-15);
    }

    #[test]
    fn crease_ray_is_fixed() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..1000 {
            let theta = rng.angle();
            let rho = rng.angle();
            let p = Vec3::new(theta.cos(), theta.sin(), 0.0);
            let q = fold_about_planar_crease(theta, rho).apply(p);
            assert!(p.max_abs_diff(q) < 1e-12);
        }
    }

    #[test]
    fn fold_inverse_pairs() {
        let mut rng = SplitMix64::new(11);
        for _ in 0..1000 {
            let theta = rng.angle();
            let rho = rng.angle();
            let prod = fold_about_planar_crease(theta, rho) * fold_about_planar_crease(theta, -rho);
            assert!(prod.max_abs_diff(&Mat3::identity()) < 1e-12);
        }
    }

    #[test]
    fn opposite_ray_flips_sign() {
        let f = fold_about_planar_crease(0.4 + PI, 0.9);
        let g = fold_about_planar_crease(0.4, -0.9);
        assert!(f.max_abs_diff(&g) < 1e-15);
    }

    #[test]
    fn constructed_rotations_are_proper() {
        let mut rng = SplitMix64::new(3);
        for _ in 0..500 {
            let m = fold_about_planar_crease(rng.angle(), rng.angle())
                * rot_z(rng.angle())
                * rot_x(rng.angle());
            assert!(m.orthogonality_defect() < 1e-12);
            assert!((m.det() - 1.0).abs() < 1e-12);
            let v = Vec3::new(rng.angle(), rng.angle(), rng.angle());
            assert!((m.apply(v).norm() - v.norm()).abs() < 1e-12);
        }
    }

    #[test]
    fn compose_conventions() {
        assert!(compose::<f64>(&[]).is_err());
        let i = compose(&[Mat3::<f64>::identity()]).unwrap();
        assert!(i.max_abs_diff(&Mat3::identity()) == 0.0);
        let sum = compose(&[rot_x(0.3), rot_x(0.4)]).unwrap();
        assert!(sum.max_abs_diff(&rot_x(0.7)) < 1e-15);
        // first element acts first on the vector: z-rotation carries x
        // to y, then the x-rotation carries y to z
        let chain = compose(&[rot_z(FRAC_PI_2), rot_x(FRAC_PI_2)]).unwrap();
        assert_vec_eq(
            chain.apply(Vec3::new(1.0, 0.0, 0.0)),
            Vec3::new(0.0, 0.0, 1.0),
            1e-15,
        );
        // the reversed list composes the other way
        let other = compose(&[rot_x(FRAC_PI_2), rot_z(FRAC_PI_2)]).unwrap();
        assert_vec_eq(
            other.apply(Vec3::new(1.0, 0.0, 0.0)),
            Vec3::new(0.0, 1.0, 0.0),
            1e-15,
        );
    }

    #[test]
    fn all_flat_chain_is_identity() {
        // the cut-vertex chain with every fold angle zero
        let chain = [
            fold_about_planar_crease(-FRAC_PI_4, 0.0),
            fold_about_planar_crease(-FRAC_PI_2, 0.0),
            fold_about_planar_crease(0.0, 0.0),
            fold_about_planar_crease(FRAC_PI_4, 0.0),
        ];
        assert!(compose(&chain)
            .unwrap()
            .max_abs_diff(&Mat3::identity())
            == 0.0);
    }
}
