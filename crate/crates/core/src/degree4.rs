//! Fold-angle relations of degree-4 flat-foldable vertices.
//!
//! A flat-foldable degree-4 vertex with consecutive sector angles
//! (α, β, π−α, π−β) is a one-parameter mechanism with two kinematic
//! branches, *mode 1* and *mode 2*. With creases `ρ₁..ρ₄` in
//! counterclockwise order starting at the α sector (rays at 0, α, α+β,
//! π+β), the modes are
//!
//! - mode 1: `ρ₃ = −ρ₁`, `ρ₄ = ρ₂`, `tan(ρ₁/2) = k₁ · tan(ρ₂/2)` with
//!   `k₁ = sin((α−β)/2) / sin((α+β)/2)`,
//! - mode 2: `ρ₃ = ρ₁`, `ρ₄ = −ρ₂`, `tan(ρ₂/2) = −k₂ · tan(ρ₁/2)` with
//!   `k₂ = cos((α+β)/2) / cos((α−β)/2)`.
//!
//! Both degree-4 vertices of the twist (`v1` with creases u₂, u₁, o₁ₐ,
//! o₁ᵦ and `v2` with φ₁, φ₂, o₂ₐ, o₂ᵦ) have this canonical layout with
//! (α, β) = (90°, 45°), where k₁ = k₂ = √2 − 1. In the mode relations
//! used by the loop solver the driving crease is u₁ at `v1` and φ₂ at
//! `v2`:
//!
//! - mode 1: `partner = 2·atan((√2−1)·tan(driving/2))`,
//! - mode 2: `partner = −2·atan((√2+1)·tan(driving/2))`.

use crate::angle::wrap;
use crate::scalar::Real;
use crate::{Error, Result};

/// Kinematic branch of a flat-foldable degree-4 vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Mode {
    Mode1,
    Mode2,
}

impl Mode {
    pub fn other(self) -> Self {
        match self {
            Mode::Mode1 => Mode::Mode2,
            Mode::Mode2 => Mode::Mode1,
        }
    }

    /// "1" or "2".
    pub fn digit(self) -> char {
        match self {
            Mode::Mode1 => '1',
            Mode::Mode2 => '2',
        }
    }
}

/// A flat-foldable degree-4 vertex: sectors (α, β, π−α, π−β) between the
/// crease rays listed counterclockwise.
#[derive(Debug, Clone, Copy)]
pub struct D4Vertex<T> {
    pub alpha: T,
    pub beta: T,
    pub crease_directions: [T; 4],
}

impl<T: Real> D4Vertex<T> {
    /// Canonical vertex with rays at 0, α, α+β, π+β.
    pub fn canonical(alpha: T, beta: T) -> Result<Self> {
        if !(alpha > T::zero() && beta > T::zero() && alpha + beta < T::PI()) {
            return Err(Error::InvalidSectors);
        }
        Ok(Self {
            alpha,
            beta,
            crease_directions: [T::zero(), alpha, alpha + beta, T::PI() + beta],
        })
    }
}

/// Half-angle coefficient of the given mode's tangent relation for
/// sectors (α, β, π−α, π−β); see the module docs for which relation each
/// mode's coefficient enters. For the twist's vertex sectors the
/// magnitude is √2 − 1 in both modes.
pub fn coefficient<T: Real>(alpha: T, beta: T, mode: Mode) -> Result<T> {
    let sum = (alpha + beta) * T::half();
    let diff = (alpha - beta) * T::half();
    match mode {
        Mode::Mode1 => {
            if sum.sin().abs() < T::of(1e-12) {
                return Err(Error::DegenerateSectors);
            }
            Ok(diff.sin() / sum.sin())
        }
        Mode::Mode2 => {
            if diff.cos().abs() < T::of(1e-12) {
                return Err(Error::DegenerateSectors);
            }
            Ok(sum.cos() / diff.cos())
        }
    }
}

/// Which of the vertex's central-crease pair is given.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairInput {
    /// The driving crease is known (u₁ at v1, φ₂ at v2).
    Driving,
    /// The partner crease is known (u₂ at v1, φ₁ at v2).
    Partner,
}

/// The paired central-crease angle of a twist degree-4 vertex.
///
/// Evaluated in two-argument arctangent form so ±π inputs map to ±π
/// exactly instead of hitting tan(π/2).
pub fn partner_angle<T: Real>(angle: T, mode: Mode, input: PairInput) -> T {
    let sq2 = T::SQRT_2();
    let one = T::one();
    let (s, c) = (angle * T::half()).sin_cos();
    // forward coefficients: mode 1 maps driving -> partner with √2−1,
    // mode 2 with −(√2+1); inverses swap and invert.
    let k = match (mode, input) {
        (Mode::Mode1, PairInput::Driving) => sq2 - one,
        (Mode::Mode1, PairInput::Partner) => sq2 + one,
        (Mode::Mode2, PairInput::Driving) => -(sq2 + one),
        (Mode::Mode2, PairInput::Partner) => -(sq2 - one),
    };
    wrap(T::two() * (k * s).atan2(c))
}

/// Full state of a twist degree-4 vertex, creases in counterclockwise
/// order (partner, driving, outer_a, outer_b) at relative rays
/// (0°, 90°, 135°, 225°). At `v1` this reads (u₂, u₁, o₁ₐ, o₁ᵦ); at `v2`
/// (φ₁, φ₂, o₂ₐ, o₂ᵦ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwistVertexState<T> {
    pub partner: T,
    pub driving: T,
    pub outer_a: T,
    pub outer_b: T,
}

impl<T: Real> TwistVertexState<T> {
    /// Angles in the cyclic crease order (ρ₁..ρ₄).
    pub fn angles(&self) -> [T; 4] {
        [self.partner, self.driving, self.outer_a, self.outer_b]
    }
}

/// All four fold angles of a twist degree-4 vertex from its driving
/// angle. The outer angles follow the mode's sign pattern exactly:
/// mode 1 has `outer_a = −partner`, `outer_b = driving`; mode 2 has
/// `outer_a = partner`, `outer_b = −driving`.
pub fn full_vertex_state<T: Real>(driving: T, mode: Mode) -> TwistVertexState<T> {
    let partner = partner_angle(driving, mode, PairInput::Driving);
    match mode {
        Mode::Mode1 => TwistVertexState {
            partner,
            driving,
            outer_a: -partner,
            outer_b: driving,
        },
        Mode::Mode2 => TwistVertexState {
            partner,
            driving,
            outer_a: partner,
            outer_b: -driving,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crease::{v1_rays, v2_rays};
    use crate::rotation::{closure_product, Mat3};
    use crate::sampling::SplitMix64;
    use std::f64::consts::{FRAC_PI_2, PI};

    const SQ2: f64 = std::f64::consts::SQRT_2;

    /// Independent oracle: a rigid state must compose to the identity
    /// around the vertex.
    fn closure_defect(dirs: [f64; 4], angles: [f64; 4]) -> f64 {
        let chain: Vec<(f64, f64)> = dirs.iter().copied().zip(angles).collect();
        closure_product(&chain).max_abs_diff(&Mat3::identity())
    }

    #[test]
    fn coefficient_twist_values() {
        let (a45, a90) = (45f64.to_radians(), 90f64.to_radians());
        // (α, β) = (45°, 90°): the ζ = 0 sub-vertex layout at v3
        let k1 = coefficient(a45, a90, Mode::Mode1).unwrap();
        assert!((k1 - (1.0 - SQ2)).abs() < 1e-15, "k1 = {k1}");
        let k2 = coefficient(a45, a90, Mode::Mode2).unwrap();
        assert!((k2 - (SQ2 - 1.0)).abs() < 1e-15);
        // the twist's canonical vertex order has (α, β) = (90°, 45°)
        assert!((coefficient(a90, a45, Mode::Mode1).unwrap() - (SQ2 - 1.0)).abs() < 1e-15);
        assert!((coefficient(a90, a45, Mode::Mode2).unwrap() - (SQ2 - 1.0)).abs() < 1e-15);
    }

    #[test]
    fn coefficient_degenerate_and_zero() {
        // α + β = π zeroes the mode-2 coefficient
        let c: f64 = coefficient(1.0, PI - 1.0, Mode::Mode2).unwrap();
        assert!(c.abs() < 1e-15);
        // α − β = π makes the mode-2 ratio blow up
        assert!(coefficient(4.0, 4.0 - PI, Mode::Mode2).is_err());
        // α + β = 2π makes the mode-1 ratio blow up
        assert!(coefficient(PI - 0.0, PI, Mode::Mode1).is_err());
    }

    #[test]
    fn generic_vertex_closure_oracle() {
        // (α, β) = (60°, 80°): both mode relations must close the vertex
        let (al, be) = (60f64.to_radians(), 80f64.to_radians());
        let v = D4Vertex::canonical(al, be).unwrap();
        let k1 = coefficient(al, be, Mode::Mode1).unwrap();
        let k2 = coefficient(al, be, Mode::Mode2).unwrap();
        assert!((k1 - -0.1847925309040954).abs() < 1e-15);
        assert!((k2 - 0.34729635533386083).abs() < 1e-15);
        let mut rng = SplitMix64::new(5);
        for _ in 0..200 {
            let r1 = rng.angle();
            let t = (r1 * 0.5).tan();
            // mode 1: tan(ρ₁/2) = k₁ tan(ρ₂/2), ρ₃ = −ρ₁, ρ₄ = ρ₂
            let r2 = 2.0 * (t / k1).atan();
            assert!(
                closure_defect(v.crease_directions, [r1, r2, -r1, r2]) < 1e-10,
                "mode 1 fails at r1 = {r1}"
            );
            // mode 2: tan(ρ₂/2) = −k₂ tan(ρ₁/2), ρ₃ = ρ₁, ρ₄ = −ρ₂
            let r2 = 2.0 * (-k2 * t).atan();
            assert!(
                closure_defect(v.crease_directions, [r1, r2, r1, -r2]) < 1e-10,
                "mode 2 fails at r1 = {r1}"
            );
        }
        // frozen spot values at ρ₁ = 0.9
        let t = 0.45f64.tan();
        assert!((2.0 * (t / k1).atan() - -2.410846593741193).abs() < 1e-12);
        assert!((2.0 * (-k2 * t).atan() - -0.3324308931990031).abs() < 1e-12);
    }

    #[test]
    fn partner_angle_values() {
        assert_eq!(partner_angle(0.0, Mode::Mode1, PairInput::Driving), 0.0);
        // tan(π/8) = √2 − 1 makes this exact
        let p = partner_angle(FRAC_PI_2, Mode::Mode1, PairInput::Driving);
        assert!((p - PI / 4.0).abs() < 1e-15);
        let p = partner_angle(1.6f64, Mode::Mode1, PairInput::Driving);
        assert!((p - 0.8062644582033318).abs() < 1e-14);
        // ±π are exact fixed points up to the ±π identification
        for mode in [Mode::Mode1, Mode::Mode2] {
            let p = partner_angle(PI, mode, PairInput::Driving);
            assert!((p.abs() - PI).abs() < 1e-15, "{mode:?}: {p}");
        }
    }

    #[test]
    fn forward_then_inverse_round_trip() {
        let mut rng = SplitMix64::new(9);
        for _ in 0..1000 {
            let a = rng.angle();
            for mode in [Mode::Mode1, Mode::Mode2] {
                let b = partner_angle(a, mode, PairInput::Driving);
                let back = partner_angle(b, mode, PairInput::Partner);
                assert!((back - a).abs() < 1e-12, "{mode:?} at {a}");
            }
        }
    }

    #[test]
    fn partner_angle_strictly_monotone() {
        let n = 2000;
        for mode in [Mode::Mode1, Mode::Mode2] {
            let mut prev = None;
            for i in 0..=n {
                let a = -PI + 2.0 * PI * (i as f64 + 0.5) / (n as f64 + 1.0);
                let p = partner_angle(a, mode, PairInput::Driving);
                if let Some(q) = prev {
                    match mode {
                        Mode::Mode1 => assert!(p > q),
                        Mode::Mode2 => assert!(p < q),
                    }
                }
                prev = Some(p);
            }
        }
    }

    #[test]
    fn full_state_sign_patterns_are_exact() {
        let mut rng = SplitMix64::new(13);
        for _ in 0..500 {
            let d = rng.angle();
            let s1 = full_vertex_state(d, Mode::Mode1);
            assert_eq!(s1.outer_a, -s1.partner);
            assert_eq!(s1.outer_b, s1.driving);
            let s2 = full_vertex_state(d, Mode::Mode2);
            assert_eq!(s2.outer_a, s2.partner);
            assert_eq!(s2.outer_b, -s2.driving);
        }
        let z = full_vertex_state(0.0, Mode::Mode1);
        assert_eq!(z.angles(), [0.0; 4]);
    }

    #[test]
    fn full_state_closes_both_twist_vertices() {
        // v1 carries (partner, driving) = (u2, u1); v2 carries (φ1, φ2).
        let dirs1: Vec<f64> = v1_rays::<f64>().iter().map(|&(_, a)| a).collect();
        let dirs2: Vec<f64> = v2_rays::<f64>().iter().map(|&(_, a)| a).collect();
        let mut rng = SplitMix64::new(17);
        for _ in 0..500 {
            let d = rng.angle();
            for mode in [Mode::Mode1, Mode::Mode2] {
                let s = full_vertex_state(d, mode);
                let [r1, r2, r3, r4] = s.angles();
                // v1 rays are listed as (u2, u1, o1a, o1b)
                let defect = closure_defect([dirs1[0], dirs1[1], dirs1[2], dirs1[3]], [r1, r2, r3, r4]);
                assert!(defect < 1e-10, "v1 {mode:?} at {d}: {defect:e}");
                // v2 rays are listed as (o2b, phi1, phi2, o2a)
                let defect = closure_defect([dirs2[0], dirs2[1], dirs2[2], dirs2[3]], [r4, r1, r2, r3]);
                assert!(defect < 1e-10, "v2 {mode:?} at {d}: {defect:e}");
            }
        }
    }
}
