//! Crease identifiers and the pattern's angular layout.
//!
//! This is the single site where the pattern's geometry constants live.
//! The crease pattern is a square twist with one extra crease along a
//! diagonal of the central square. In pattern coordinates the central
//! square is `[0,1] × [−1,0]` with corners
//!
//! - `v3 = (0, 0)` and `v4 = (1, −1)` — degree-5, joined by the added
//!   diagonal ζ,
//! - `v1 = (0, −1)` and `v2 = (1, 0)` — degree-4.
//!
//! Crease rays are given as planar angles from the +x axis, in units of
//! 45°. The layout at `v3` puts φ₁ on the +x axis; the rest of the
//! pattern follows by the square twist's fourfold rotational symmetry
//! (the added diagonal reduces the whole pattern to twofold symmetry,
//! the half turn about the square's center swapping `v1↔v2`, `v3↔v4`).
//!
//! Fold angles are intrinsic to a crease: both endpoint vertices use the
//! same signed angle with their own outgoing ray. Every degree-5 cut
//! construction here tracks the image of the cut point `(−1, 1, 0)` in
//! `v3` frame units (the all-flat state, where both fold chains must
//! agree, pins that choice of cut point on both sides).

use crate::scalar::Real;

/// Identifier of one of the 13 creases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum CreaseKey {
    /// Central square side v1–v3.
    U1,
    /// Central square side v1–v4.
    U2,
    /// Central square side v2–v3.
    Phi1,
    /// Central square side v2–v4.
    Phi2,
    /// Outer crease at v3 between the φ₁-side pleat and the north corner.
    Psi1,
    /// Outer crease at v4, the half-turn image of ψ₁.
    Psi2,
    /// The added diagonal v3–v4.
    Zeta,
    /// Outer crease at v3 collinear with ζ (the cut crease of v3).
    Kappa1,
    /// Outer crease at v4 collinear with ζ (the cut crease of v4).
    Kappa2,
    /// Outer crease at v1 toward the north-west boundary.
    O1a,
    /// Outer crease at v1 toward the south-west boundary.
    O1b,
    /// Outer crease at v2 toward the south-east boundary.
    O2a,
    /// Outer crease at v2 toward the north-east boundary.
    O2b,
}

/// All 13 creases in the canonical column order used by exports.
pub const CREASE_ORDER: [CreaseKey; 13] = [
    CreaseKey::U1,
    CreaseKey::U2,
    CreaseKey::Phi1,
    CreaseKey::Phi2,
    CreaseKey::Psi1,
    CreaseKey::Psi2,
    CreaseKey::Zeta,
    CreaseKey::Kappa1,
    CreaseKey::Kappa2,
    CreaseKey::O1a,
    CreaseKey::O1b,
    CreaseKey::O2a,
    CreaseKey::O2b,
];

impl CreaseKey {
    /// Column name used in CSV headers and JSON records.
    pub fn name(self) -> &'static str {
        match self {
            CreaseKey::U1 => "u1",
            CreaseKey::U2 => "u2",
            CreaseKey::Phi1 => "phi1",
            CreaseKey::Phi2 => "phi2",
            CreaseKey::Psi1 => "psi1",
            CreaseKey::Psi2 => "psi2",
            CreaseKey::Zeta => "zeta",
            CreaseKey::Kappa1 => "kappa1",
            CreaseKey::Kappa2 => "kappa2",
            CreaseKey::O1a => "o1a",
            CreaseKey::O1b => "o1b",
            CreaseKey::O2a => "o2a",
            CreaseKey::O2b => "o2b",
        }
    }
}

/// Planar ray angle `k · 45°`.
#[inline]
pub fn ray45<T: Real>(k: u8) -> T {
    T::of(k as f64) * T::FRAC_PI_4()
}

/// Crease rays at v3 in counterclockwise order: φ₁ 0°, ψ₁ 45°, κ₁ 135°,
/// u₁ 270°, ζ 315°. Sectors 45°, 90°, 135°, 45°, 45°.
pub fn v3_rays<T: Real>() -> [(CreaseKey, T); 5] {
    [
        (CreaseKey::Phi1, ray45(0)),
        (CreaseKey::Psi1, ray45(1)),
        (CreaseKey::Kappa1, ray45(3)),
        (CreaseKey::U1, ray45(6)),
        (CreaseKey::Zeta, ray45(7)),
    ]
}

/// Crease rays at v4: φ₂ 90°, ζ 135°, u₂ 180°, ψ₂ 225°, κ₂ 315°.
pub fn v4_rays<T: Real>() -> [(CreaseKey, T); 5] {
    [
        (CreaseKey::Phi2, ray45(2)),
        (CreaseKey::Zeta, ray45(3)),
        (CreaseKey::U2, ray45(4)),
        (CreaseKey::Psi2, ray45(5)),
        (CreaseKey::Kappa2, ray45(7)),
    ]
}

/// Crease rays at v1: u₂ 0°, u₁ 90°, o₁ₐ 135°, o₁ᵦ 225°.
pub fn v1_rays<T: Real>() -> [(CreaseKey, T); 4] {
    [
        (CreaseKey::U2, ray45(0)),
        (CreaseKey::U1, ray45(2)),
        (CreaseKey::O1a, ray45(3)),
        (CreaseKey::O1b, ray45(5)),
    ]
}

/// Crease rays at v2: o₂ᵦ 45°, φ₁ 180°, φ₂ 270°, o₂ₐ 315°.
pub fn v2_rays<T: Real>() -> [(CreaseKey, T); 4] {
    [
        (CreaseKey::O2b, ray45(1)),
        (CreaseKey::Phi1, ray45(4)),
        (CreaseKey::Phi2, ray45(6)),
        (CreaseKey::O2a, ray45(7)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::wrap;

    fn sectors<T: Real>(rays: &[T]) -> Vec<T> {
        let n = rays.len();
        (0..n)
            .map(|i| {
                let d = rays[(i + 1) % n] - rays[i];
                if d <= T::zero() {
                    d + T::two() * T::PI()
                } else {
                    d
                }
            })
            .collect()
    }

    #[test]
    fn sector_angles_match_layout() {
        let deg = |d: f64| d.to_radians();
        let r3: Vec<f64> = v3_rays().iter().map(|&(_, a)| a).collect();
        assert_eq!(sectors(&r3), vec![deg(45.0), deg(90.0), deg(135.0), deg(45.0), deg(45.0)]);
        let r4: Vec<f64> = v4_rays().iter().map(|&(_, a)| a).collect();
        assert_eq!(sectors(&r4), vec![deg(45.0), deg(45.0), deg(45.0), deg(90.0), deg(135.0)]);
        for rays in [v1_rays::<f64>(), v2_rays::<f64>()] {
            let r: Vec<f64> = rays.iter().map(|&(_, a)| a).collect();
            let s = sectors(&r);
            assert!((s.iter().sum::<f64>() - std::f64::consts::TAU).abs() < 1e-15);
            // opposite sectors sum to π (flat-foldable)
            assert!((s[0] + s[2] - std::f64::consts::PI).abs() < 1e-15);
        }
    }

    #[test]
    fn cut_and_diagonal_rays_are_collinear() {
        let pi = std::f64::consts::PI;
        let find = |rays: &[(CreaseKey, f64)], k: CreaseKey| {
            rays.iter().find(|&&(c, _)| c == k).unwrap().1
        };
        let r3 = v3_rays::<f64>();
        assert!(wrap(find(&r3, CreaseKey::Kappa1) - find(&r3, CreaseKey::Zeta) - pi).abs() < 1e-15);
        let r4 = v4_rays::<f64>();
        assert!(wrap(find(&r4, CreaseKey::Kappa2) - find(&r4, CreaseKey::Zeta) - pi).abs() < 1e-15);
    }

    #[test]
    fn half_turn_maps_v3_onto_v4() {
        // rotating v3's rays by 180° reproduces v4's ray set with the
        // role swap u↔φ, ψ↔ψ, κ↔κ, ζ↔ζ
        let swap = |k: CreaseKey| match k {
            CreaseKey::Phi1 => CreaseKey::U2,
            CreaseKey::U1 => CreaseKey::Phi2,
            CreaseKey::Psi1 => CreaseKey::Psi2,
            CreaseKey::Kappa1 => CreaseKey::Kappa2,
            k => k,
        };
        for (k, a) in v3_rays::<f64>() {
            let img = wrap(a + std::f64::consts::PI);
            let hit = v4_rays::<f64>()
                .iter()
                .any(|&(k2, a2)| k2 == swap(k) && wrap(a2 - img).abs() < 1e-15);
            assert!(hit, "no image for {k:?}");
        }
    }
}
