//! Rigid-folding kinematics of the augmented square twist.
//!
//! The augmented square twist is the square twist crease pattern with one
//! extra crease along a diagonal of its central square. This crate
//! computes its full rigid-folding behavior:
//!
//! - fold-angle relations at the two degree-4 vertices ([`degree4`]),
//! - cut-method kinematics of the two degree-5 vertices ([`degree5`]),
//! - the loop constraint coupling them, and its intersection points
//!   A/B/C at fixed driving angle ([`loopsolver`]),
//! - assembly of full 13-angle configurations, folding-mode traces,
//!   mode enumeration and tangent degree-of-freedom checks
//!   ([`configspace`]),
//! - 3D realization of folded states over the actual crease pattern and
//!   geometry export ([`embedding`], [`export`]).
//!
//! The numeric core is generic over the scalar type via [`scalar::Real`]
//! (`f32` or `f64`); the concrete aliases below fix `f64`, which the
//! default tolerances in [`tol`] assume.

pub mod angle;
pub mod configspace;
pub mod crease;
pub mod degree4;
pub mod degree5;
pub mod embedding;
pub mod export;
pub mod loopsolver;
pub mod numerics;
pub mod rotation;
pub mod sampling;
pub mod scalar;
pub mod tol;
pub mod verification;

pub use crease::{CreaseKey, CREASE_ORDER};
pub use scalar::Real;

/// Errors surfaced by the kinematics core.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("compose requires a nonempty chain")]
    EmptyChain,

    #[error("degenerate sector angles: alpha - beta is a multiple of pi")]
    DegenerateSectors,

    #[error("sector angles violate 0 < alpha, 0 < beta, alpha + beta < pi")]
    InvalidSectors,

    #[error("no real closure at {vertex:?} for u = {u}, zeta = {zeta} (defect {defect:e})")]
    InfeasiblePair {
        vertex: degree5::VertexId,
        u: f64,
        zeta: f64,
        defect: f64,
    },

    #[error("driving angle u1 = 0 is degenerate for intersection search")]
    DegenerateDriving,

    #[error("intersection root at zeta = {zeta} (u1 = {u1}) matches no point law (residual {residual:e})")]
    UnlabeledRoot { u1: f64, zeta: f64, residual: f64 },

    #[error("no {label:?} intersection found at u1 = {u1}")]
    MissingPoint {
        label: loopsolver::PointLabel,
        u1: f64,
    },

    #[error("loop residual {residual:e} exceeds tolerance at u1 = {u1}, zeta = {zeta}")]
    LoopResidual { u1: f64, zeta: f64, residual: f64 },

    #[error("continuation lost the {label:?} root near u1 = {u1}")]
    RootLost {
        label: loopsolver::PointLabel,
        u1: f64,
    },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
}

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// 13-angle configuration over `f64`.
pub type Configuration64 = configspace::Configuration<f64>;
/// Trace curve over `f64`.
pub type TraceCurve64 = configspace::TraceCurve<f64>;
/// Crease pattern over `f64`.
pub type CreasePattern64 = embedding::CreasePattern<f64>;
/// Folded state over `f64`.
pub type FoldedState64 = embedding::FoldedState<f64>;
/// Intersection point over `f64`.
pub type IntersectionPoint64 = loopsolver::IntersectionPoint<f64>;
