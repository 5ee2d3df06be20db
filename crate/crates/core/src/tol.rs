//! Numeric tolerances used across the crate, with their basis.
//!
//! The values assume `f64`. Thresholds fall into three tiers: machine
//! precision for exact algebra (1e−12 .. 1e−10), polished-root accuracy
//! (1e−12 .. 1e−8), and geometric labeling slack (1e−7 .. 1e−6).

/// Orthogonality and determinant defect allowed for constructed rotations.
pub const ROTATION_ORTHO: f64 = 1e-12;

/// Single-vertex closure residual (product of crease folds vs identity).
pub const VERTEX_CLOSURE: f64 = 1e-10;

/// Per-vertex closure residual required of a full 13-angle configuration.
pub const CONFIG_CLOSURE: f64 = 1e-9;

/// Loop residual magnitude accepted for a polished intersection root.
pub const ROOT_RESIDUAL: f64 = 1e-12;

/// Residual magnitude accepted when probing a root at a predicted
/// location (the ζ = 0 axis and the closed-form point laws), where a
/// tangential double root defeats sign-change bracketing.
pub const PROBE_RESIDUAL: f64 = 1e-10;

/// Roots closer than this in ζ are the same intersection point.
pub const ROOT_DEDUP: f64 = 1e-7;

/// Slack for matching a root against a closed-form point law when labeling.
pub const LABEL_MATCH: f64 = 1e-6;

/// |ζ| bound certifying a C point.
pub const C_POINT_ZETA: f64 = 1e-9;

/// Agreement required between found points and their closed-form laws.
pub const LAW_AGREEMENT: f64 = 1e-8;

/// Slack beyond [−1, 1] tolerated before an arccos argument is an error.
pub const ACOS_CLAMP: f64 = 1e-9;

/// Flatness test half-width: every angle within this of {0, ±π}.
pub const FLAT: f64 = 1e-6;

/// Relative embedding mismatch (scaled by pattern diameter).
pub const EMBED_MISMATCH_REL: f64 = 1e-8;

/// Vertex deduplication radius for mesh export.
pub const OBJ_VERTEX_DEDUP: f64 = 1e-9;

/// Relative singular-value threshold separating rank from kernel.
pub const DOF_SV_REL: f64 = 1e-7;

/// Step in the driving angle at which origin connectivity is probed.
pub const ORIGIN_PROBE_U1: f64 = 1e-4;

/// Max-norm bound at the probe angle for an origin-connected mode. All
/// angles of a connected mode scale linearly with the driving angle with
/// slope below ~3.5, so a connected mode measures ~1e−4 here while a
/// disconnected one measures ~π.
pub const ORIGIN_CONNECT_NORM: f64 = 1e-2;

/// Uniform ζ samples per branch combination in the intersection scan.
pub const SCAN_SAMPLES: usize = 2048;

/// A tolerance that tracks the scalar's precision: the f64-calibrated
/// base, widened to `eps_factor` machine epsilons when the scalar is
/// coarser. Leaves every f64 threshold unchanged and keeps the solvers
/// usable in f32.
pub fn scaled<T: crate::scalar::Real>(base: f64, eps_factor: f64) -> T {
    T::of(base).max(T::epsilon() * T::of(eps_factor))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    #[allow(clippy::assertions_on_constants)]
    fn tier_ordering() {
        assert!(ROTATION_ORTHO < VERTEX_CLOSURE);
        assert!(VERTEX_CLOSURE < CONFIG_CLOSURE);
        assert!(ROOT_RESIDUAL < PROBE_RESIDUAL);
        assert!(ROOT_DEDUP < LABEL_MATCH);
        assert!(C_POINT_ZETA < LAW_AGREEMENT);
        assert!(ORIGIN_PROBE_U1 < ORIGIN_CONNECT_NORM);
    }
}
