//! Cut-method kinematics of the degree-5 vertices v3 and v4.
//!
//! Each degree-5 vertex is a two-parameter mechanism. Slicing the sheet
//! along the cut crease (κ, collinear with ζ) and folding both ends of
//! the cut toward the fixed sector between the φ and ζ creases turns
//! closure into one vector identity: the two fold chains must map the
//! cut point to the same place. At v3, with independent angles (u₁, ζ),
//! the x-coordinate of that identity gives
//!
//! ```text
//! cos ψ₁ = ½ (1 − cos ζ + cos u₁ (1 + cos ζ) − √2 sin u₁ sin ζ)
//! ```
//!
//! so ψ₁ comes in a symmetric ± pair, and the remaining coordinates
//! determine φ₁ in closed form; κ₁ is the rotation left over about the
//! cut ray.
//!
//! v4 is the half-turn image of v3 with the u and φ roles exchanged
//! (see [`crate::crease`]), so its solve for independent (u₂, ζ) is the
//! φ-driven problem of the same vertex shape. Its ψ₂ satisfies
//! `A cos ψ₂ + B sin ψ₂ = 2` with
//!
//! ```text
//! A = 1 + cos u₂ + (cos u₂ − 1) cos ζ − √2 sin u₂ sin ζ
//! B = −√2 sin u₂ (1 + cos ζ) − 2 cos u₂ sin ζ
//! ```
//!
//! giving two branches `ψ₂ = atan2(B, A) ± arccos(2 / √(A²+B²))`; φ₂ and
//! κ₂ again follow in closed form. Both solvers are validated against
//! the five-crease closure product of their own vertex.
//!
//! Not every (u, ζ) pair is realizable: the arccos argument leaves the
//! unit interval on a sizable part of the square, which the solvers
//! report as [`Error::InfeasiblePair`].

use crate::angle::wrap;
use crate::crease::{ray45, v3_rays, v4_rays, CreaseKey};
use crate::rotation::{closure_product, fold_about_planar_crease, rot_z, Mat3, Vec3};
use crate::scalar::Real;
use crate::{tol, Error, Result};

/// Branch of the two-valued ψ solution at a degree-5 vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign<T: Real>(self) -> T {
        match self {
            Branch::Plus => T::one(),
            Branch::Minus => -T::one(),
        }
    }

    pub fn other(self) -> Self {
        match self {
            Branch::Plus => Branch::Minus,
            Branch::Minus => Branch::Plus,
        }
    }

    /// "+" or "-".
    pub fn symbol(self) -> char {
        match self {
            Branch::Plus => '+',
            Branch::Minus => '-',
        }
    }
}

/// Which degree-5 vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum VertexId {
    V3,
    V4,
}

/// A degree-5 vertex with its crease rays in counterclockwise order.
#[derive(Debug, Clone)]
pub struct D5Vertex<T> {
    pub id: VertexId,
    pub rays: [(CreaseKey, T); 5],
}

impl<T: Real> D5Vertex<T> {
    pub fn new(id: VertexId) -> Self {
        let rays = match id {
            VertexId::V3 => v3_rays(),
            VertexId::V4 => v4_rays(),
        };
        Self { id, rays }
    }

    /// Ray angle of one of the vertex's creases.
    pub fn ray(&self, key: CreaseKey) -> Option<T> {
        self.rays.iter().find(|&&(k, _)| k == key).map(|&(_, a)| a)
    }
}

/// The five fold angles of a degree-5 vertex, named by role: `u` and
/// `zeta` independent, `psi`/`phi` dependent, `kappa` the cut crease.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct D5Angles<T> {
    pub u: T,
    pub zeta: T,
    pub psi: T,
    pub phi: T,
    pub kappa: T,
}

/// Cut point tracked by both fold chains, in v3 frame units.
fn cut_point<T: Real>() -> Vec3<T> {
    Vec3::new(-T::one(), T::one(), T::zero())
}

/// Right-hand side of the ψ₁ cosine relation at v3.
pub fn psi_cosine_rhs<T: Real>(u: T, zeta: T) -> T {
    let (su, cu) = u.sin_cos();
    let (sz, cz) = zeta.sin_cos();
    T::half() * (T::one() - cz + cu * (T::one() + cz) - T::SQRT_2() * su * sz)
}

/// Linear coefficients (A, B) of v4's ψ₂ relation `A cos ψ + B sin ψ = 2`.
pub fn psi_linear_coeffs<T: Real>(u: T, zeta: T) -> (T, T) {
    let (su, cu) = u.sin_cos();
    let (sz, cz) = zeta.sin_cos();
    let a = T::one() + cu + (cu - T::one()) * cz - T::SQRT_2() * su * sz;
    let b = -T::SQRT_2() * su * (T::one() + cz) - T::two() * cu * sz;
    (a, b)
}

fn clamped_acos<T: Real>(c: T, vertex: VertexId, u: T, zeta: T) -> Result<T> {
    let slack = tol::scaled::<T>(tol::ACOS_CLAMP, 128.0);
    if c.abs() > T::one() + slack {
        return Err(Error::InfeasiblePair {
            vertex,
            u: u.to_f64().unwrap_or(f64::NAN),
            zeta: zeta.to_f64().unwrap_or(f64::NAN),
            defect: (c.abs() - T::one()).to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(c.min(T::one()).max(-T::one()).acos())
}

/// ψ fold angle of the vertex for independent angles (u, ζ).
///
/// At v3 the two branches are exact negatives; at v4 they are symmetric
/// about a (u, ζ)-dependent offset. Where the branches coincide
/// (|cos ψ₁| = 1 at v3, a double root at v4) both inputs return the same
/// angle rather than erroring: those loci are the mode crossings the
/// configuration space needs.
pub fn psi_from<T: Real>(vertex: VertexId, u: T, zeta: T, branch: Branch) -> Result<T> {
    match vertex {
        VertexId::V3 => {
            let a = clamped_acos(psi_cosine_rhs(u, zeta), vertex, u, zeta)?;
            Ok(branch.sign::<T>() * a)
        }
        VertexId::V4 => {
            let (a, b) = psi_linear_coeffs(u, zeta);
            let r = a.hypot(b);
            let d = clamped_acos(T::two() / r, vertex, u, zeta)?;
            Ok(wrap(b.atan2(a) + branch.sign::<T>() * d))
        }
    }
}

/// Full closed-form solve of the vertex for independent angles (u, ζ).
pub fn solve<T: Real>(vertex: VertexId, u: T, zeta: T, branch: Branch) -> Result<D5Angles<T>> {
    let psi = psi_from(vertex, u, zeta, branch)?;
    let p = cut_point();
    // Both vertices reduce to the same frame: at v4 the half-turn
    // relabeling puts its u in the φ slot and vice versa, so the chain
    // below reads (phi_slot, psi, kappa, u_slot, zeta) with
    // (phi_slot, u_slot) = (φ₁, u₁) at v3 and (u₂, φ₂) at v4.
    let phi = match vertex {
        VertexId::V3 => {
            let w = fold_about_planar_crease(ray45::<T>(7), -zeta)
                .apply(fold_about_planar_crease(ray45::<T>(6), -u).apply(p));
            let q = fold_about_planar_crease(ray45::<T>(1), psi).apply(p);
            wrap(w.z.atan2(w.y) - q.z.atan2(q.y))
        }
        VertexId::V4 => {
            let q = fold_about_planar_crease(ray45::<T>(1), psi).apply(p);
            let w = fold_about_planar_crease(ray45::<T>(7), zeta)
                .apply(fold_about_planar_crease(ray45::<T>(0), u).apply(q));
            // extract the 270°-slot angle in that ray's frame
            let frame = rot_z(-ray45::<T>(6));
            let pp = frame.apply(p);
            let ww = frame.apply(w);
            wrap(-(ww.z.atan2(ww.y) - pp.z.atan2(pp.y)))
        }
    };
    // the cut crease carries whatever rotation closure leaves over
    let (phi_slot, u_slot) = match vertex {
        VertexId::V3 => (phi, u),
        VertexId::V4 => (u, phi),
    };
    let head = fold_about_planar_crease(T::zero(), phi_slot)
        * fold_about_planar_crease(ray45::<T>(1), psi);
    let tail = fold_about_planar_crease(ray45::<T>(6), u_slot)
        * fold_about_planar_crease(ray45::<T>(7), zeta);
    let leftover = head.transpose() * tail.transpose();
    let local = rot_z(-ray45::<T>(3)) * leftover * rot_z(ray45::<T>(3));
    let kappa = local.m[2][1].atan2(local.m[1][1]);
    Ok(D5Angles {
        u,
        zeta,
        psi,
        phi,
        kappa,
    })
}

/// Dependent φ fold angle for independent angles (u, ζ).
pub fn phi_from<T: Real>(vertex: VertexId, u: T, zeta: T, branch: Branch) -> Result<T> {
    solve(vertex, u, zeta, branch).map(|s| s.phi)
}

/// Cut-crease fold angle for independent angles (u, ζ).
pub fn kappa_from<T: Real>(vertex: VertexId, u: T, zeta: T, branch: Branch) -> Result<T> {
    solve(vertex, u, zeta, branch).map(|s| s.kappa)
}

/// True where the two ψ branches coincide for these independent angles.
pub fn branches_coincide<T: Real>(vertex: VertexId, u: T, zeta: T, tol_: T) -> Result<bool> {
    let a = psi_from(vertex, u, zeta, Branch::Plus)?;
    let b = psi_from(vertex, u, zeta, Branch::Minus)?;
    Ok(crate::angle::dist(a, b) <= tol_)
}

/// Euclidean mismatch of the two images of the vertex's cut point.
///
/// Zero (within tolerance) exactly when (u, ζ, ψ, φ) is a rigid state of
/// the cut-open vertex; the cut crease κ does not enter. Use
/// [`closure_residual`] to also validate κ.
pub fn vertex_residual<T: Real>(vertex: VertexId, angles: &D5Angles<T>) -> T {
    match vertex {
        VertexId::V3 => {
            let p = cut_point();
            let lhs = fold_about_planar_crease(ray45::<T>(7), -angles.zeta)
                .apply(fold_about_planar_crease(ray45::<T>(6), -angles.u).apply(p));
            let rhs = fold_about_planar_crease(T::zero(), angles.phi)
                .apply(fold_about_planar_crease(ray45::<T>(1), angles.psi).apply(p));
            (lhs - rhs).norm()
        }
        VertexId::V4 => {
            // v4's own frame: cut along κ₂ at 315°, cut point (1, −1, 0),
            // fixed sector between φ₂ (90°) and ζ (135°)
            let p = Vec3::new(T::one(), -T::one(), T::zero());
            let ccw = fold_about_planar_crease(ray45::<T>(3), angles.zeta)
                * fold_about_planar_crease(ray45::<T>(4), angles.u)
                * fold_about_planar_crease(ray45::<T>(5), angles.psi);
            let cw = fold_about_planar_crease(ray45::<T>(2), -angles.phi);
            (ccw.apply(p) - cw.apply(p)).norm()
        }
    }
}

/// Max-abs defect of the five-crease closure product of the vertex.
pub fn closure_residual<T: Real>(vertex: VertexId, angles: &D5Angles<T>) -> T {
    let chain: [(T, T); 5] = match vertex {
        VertexId::V3 => [
            (ray45(0), angles.phi),
            (ray45(1), angles.psi),
            (ray45(3), angles.kappa),
            (ray45(6), angles.u),
            (ray45(7), angles.zeta),
        ],
        VertexId::V4 => [
            (ray45(2), angles.phi),
            (ray45(3), angles.zeta),
            (ray45(4), angles.u),
            (ray45(5), angles.psi),
            (ray45(7), angles.kappa),
        ],
    };
    closure_product(&chain).max_abs_diff(&Mat3::identity())
}
