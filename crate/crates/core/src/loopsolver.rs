//! The loop constraint of the central square-twist cycle.
//!
//! Fixing the driving angle u₁ and a case (the modes of the degree-4
//! vertices v1 and v2) leaves one free angle ζ. v1's mode relation sets
//! u₂ from u₁; the two degree-5 solvers then produce φ₁(u₁, ζ) and
//! φ₂(u₂, ζ) on each branch pair, and v2's mode relation demands a
//! specific φ₁ for a given φ₂. The signed circular gap between the two
//! φ₁ values is the *loop residual*; its zeros in ζ are the intersection
//! points A, B, C.
//!
//! The points obey closed-form laws used for labeling and validation
//! (y denotes the φ₁ value of a point):
//!
//! - A: `tan(ζ_A/2) = −√2 · tan(u₂/2)`, equivalently the intersection of
//!   the curve `y = −2·atan((√2/2)·tan(ζ/2))` with the line `y = u₂`;
//!   for v1 in mode 1 this is `tan(ζ_A/2) = (√2−2)·tan(u₁/2)` and in
//!   mode 2 `tan(ζ_A/2) = (√2+2)·tan(u₁/2)`. A always satisfies φ₁ = u₂.
//! - B: `tan(ζ_B/2) = √2·cot(u₁/2)` in every case, with
//!   `y = −2·atan(k·cot(ζ/2))`, `k = √2−2` for v2 in mode 1 and `√2+2`
//!   in mode 2. The B curve never reaches the origin: y → ∓π as ζ → 0±.
//! - C: ζ = 0 exactly; the diagonal stays unfolded.
//!
//! In the same-mode cases the C zero is a double root of the residual
//! (the residual touches zero without crossing), so the search probes
//! ζ = 0 and the law-predicted locations directly in addition to
//! bracketing sign changes.

use crate::angle::{dist, gap, wrap};
use crate::degree4::{partner_angle, Mode, PairInput};
use crate::degree5::{branches_coincide, phi_from, Branch, VertexId};
use crate::scalar::Real;
use crate::{tol, Error, Result};

/// Mode assignment of the two degree-4 vertices; selects one of the four
/// cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct CaseSpec {
    pub mode_v1: Mode,
    pub mode_v2: Mode,
}

impl CaseSpec {
    pub const CASE1: CaseSpec = CaseSpec {
        mode_v1: Mode::Mode1,
        mode_v2: Mode::Mode1,
    };
    pub const CASE2: CaseSpec = CaseSpec {
        mode_v1: Mode::Mode2,
        mode_v2: Mode::Mode2,
    };
    pub const CASE3A: CaseSpec = CaseSpec {
        mode_v1: Mode::Mode1,
        mode_v2: Mode::Mode2,
    };
    pub const CASE3B: CaseSpec = CaseSpec {
        mode_v1: Mode::Mode2,
        mode_v2: Mode::Mode1,
    };

    pub const ALL: [CaseSpec; 4] = [Self::CASE1, Self::CASE2, Self::CASE3A, Self::CASE3B];

    /// CLI name: "1", "2", "3a" (v1 mode 1, v2 mode 2) or "3b".
    pub fn name(self) -> &'static str {
        match (self.mode_v1, self.mode_v2) {
            (Mode::Mode1, Mode::Mode1) => "1",
            (Mode::Mode2, Mode::Mode2) => "2",
            (Mode::Mode1, Mode::Mode2) => "3a",
            (Mode::Mode2, Mode::Mode1) => "3b",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "1" => Some(Self::CASE1),
            "2" => Some(Self::CASE2),
            "3a" => Some(Self::CASE3A),
            "3b" => Some(Self::CASE3B),
            _ => None,
        }
    }

    /// u₂ from u₁ by v1's mode relation.
    pub fn u2_from_u1<T: Real>(self, u1: T) -> T {
        partner_angle(u1, self.mode_v1, PairInput::Driving)
    }

    /// The φ₁ demanded by v2's mode relation for a given φ₂.
    pub fn phi1_demanded<T: Real>(self, phi2: T) -> T {
        partner_angle(phi2, self.mode_v2, PairInput::Driving)
    }
}

/// Intersection point identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum PointLabel {
    A,
    B,
    C,
}

impl PointLabel {
    pub const ALL: [PointLabel; 3] = [PointLabel::A, PointLabel::B, PointLabel::C];

    pub fn name(self) -> &'static str {
        match self {
            PointLabel::A => "A",
            PointLabel::B => "B",
            PointLabel::C => "C",
        }
    }
}

/// A solution of the loop constraint at fixed u₁.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct IntersectionPoint<T> {
    pub label: PointLabel,
    pub zeta: T,
    pub branch_v3: Branch,
    pub branch_v4: Branch,
    /// Loop residual at the reported point.
    pub residual: T,
    /// Set when either degree-5 vertex sits at a branch-coincidence
    /// locus here.
    pub degenerate: bool,
}

/// Signed circular gap between φ₁ from v3 and the φ₁ demanded by v2's
/// mode relation applied to φ₂ from v4.
pub fn loop_residual<T: Real>(
    u1: T,
    zeta: T,
    case: CaseSpec,
    branches: (Branch, Branch),
) -> Result<T> {
    let u2 = case.u2_from_u1(u1);
    let phi1 = phi_from(VertexId::V3, u1, zeta, branches.0)?;
    let phi2 = phi_from(VertexId::V4, u2, zeta, branches.1)?;
    Ok(gap(phi1, case.phi1_demanded(phi2)))
}

/// Closed-form ζ of the A point: the A curve meets the line y = u₂ where
/// `tan(ζ/2) = −√2 · tan(u₂/2)`.
pub fn zeta_a_closed_form<T: Real>(u1: T, case: CaseSpec) -> T {
    let (s, c) = (case.u2_from_u1(u1) * T::half()).sin_cos();
    wrap(T::two() * (-T::SQRT_2() * s).atan2(c))
}

/// Closed-form ζ of the B point, the same in every case:
/// `tan(ζ/2) = √2 · cot(u₁/2)`.
pub fn zeta_b_closed_form<T: Real>(u1: T) -> T {
    let (s, c) = (u1 * T::half()).sin_cos();
    wrap(T::two() * (T::SQRT_2() * c).atan2(s))
}

/// Trace-curve laws of a case, in the (ζ, y) plane of the intersection
/// diagrams; y is the φ₁ value (equal to u₂ on the A point, and on the B
/// point too when both degree-4 vertices share a mode).
#[derive(Debug, Clone, Copy)]
pub struct CurveLaws {
    pub case: CaseSpec,
}

/// The laws of the given case.
pub fn curve_laws(case: CaseSpec) -> CurveLaws {
    CurveLaws { case }
}

impl CurveLaws {
    /// A curve: `y = −2·atan((√2/2)·tan(ζ/2))`, identical in all cases.
    pub fn a_curve<T: Real>(&self, zeta: T) -> T {
        let (s, c) = (zeta * T::half()).sin_cos();
        wrap(-T::two() * ((T::SQRT_2() * T::half()) * s).atan2(c))
    }

    /// B curve: `y = −2·atan(k·cot(ζ/2))` with k = √2−2 (v2 mode 1) or
    /// √2+2 (v2 mode 2). At ζ = 0 the cotangent blows up and the curve
    /// is reported at its ±π limit; it does not pass through the origin.
    pub fn b_curve<T: Real>(&self, zeta: T) -> T {
        let k = match self.case.mode_v2 {
            Mode::Mode1 => T::SQRT_2() - T::two(),
            Mode::Mode2 => T::SQRT_2() + T::two(),
        };
        let (s, c) = (zeta * T::half()).sin_cos();
        wrap(-T::two() * (k * c).atan2(s))
    }

    /// The horizontal line y = u₂(u₁) carrying the A point (and B in the
    /// same-mode cases).
    pub fn u2_line<T: Real>(&self, u1: T) -> T {
        self.case.u2_from_u1(u1)
    }
}

#[derive(Debug, Clone, Copy)]
struct RawRoot<T> {
    zeta: T,
    branches: (Branch, Branch),
    residual: T,
}

const BRANCH_PAIRS: [(Branch, Branch); 4] = [
    (Branch::Plus, Branch::Plus),
    (Branch::Plus, Branch::Minus),
    (Branch::Minus, Branch::Plus),
    (Branch::Minus, Branch::Minus),
];

/// Bisection polish of a bracketed sign change of the loop residual.
fn polish<T: Real>(
    u1: T,
    case: CaseSpec,
    branches: (Branch, Branch),
    mut lo: T,
    mut hi: T,
    mut flo: T,
) -> Option<RawRoot<T>> {
    for _ in 0..120 {
        let mid = (lo + hi) * T::half();
        if mid == lo || mid == hi {
            break;
        }
        match loop_residual(u1, mid, case, branches) {
            Err(_) => return None,
            Ok(fm) => {
                if flo * fm <= T::zero() {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
        }
    }
    let zeta = (lo + hi) * T::half();
    let residual = loop_residual(u1, zeta, case, branches).ok()?;
    Some(RawRoot {
        zeta,
        branches,
        residual,
    })
}

/// All loop-constraint solutions in ζ at fixed u₁, labeled A/B/C.
///
/// Scans 2048 ζ samples per branch pair for sign changes (wrapping
/// across ±π), polishes each bracket, probes ζ = 0 and the closed-form
/// point laws directly (the C zero is tangential in the same-mode
/// cases), deduplicates in ζ, and labels every surviving root by law
/// proximity. An unlabeled root or a missing label is an error, not a
/// silent drop.
pub fn find_intersections<T: Real>(u1: T, case: CaseSpec) -> Result<Vec<IntersectionPoint<T>>> {
    if u1 == T::zero() {
        return Err(Error::DegenerateDriving);
    }
    let n = tol::SCAN_SAMPLES;
    let two_pi = T::two() * T::PI();
    let step = two_pi / T::of(n as f64);
    let mut raw: Vec<RawRoot<T>> = Vec::new();

    for branches in BRANCH_PAIRS {
        let mut values: Vec<Option<T>> = Vec::with_capacity(n);
        for i in 0..n {
            let z = -T::PI() + step * T::of(i as f64);
            values.push(loop_residual(u1, z, case, branches).ok());
        }
        for i in 0..n {
            let j = (i + 1) % n;
            let (Some(ri), Some(rj)) = (values[i], values[j]) else {
                continue;
            };
            let zi = -T::PI() + step * T::of(i as f64);
            // skip jumps where the residual wraps across ±π
            if ri * rj < T::zero() && (ri - rj).abs() < T::PI() {
                if let Some(root) = polish(u1, case, branches, zi, zi + step, ri) {
                    raw.push(root);
                }
            } else if ri == T::zero() {
                raw.push(RawRoot {
                    zeta: zi,
                    branches,
                    residual: ri,
                });
            }
        }
        // direct probes: the ζ = 0 axis and the law-predicted points
        let probes = [
            T::zero(),
            zeta_a_closed_form(u1, case),
            zeta_b_closed_form(u1),
        ];
        for z in probes {
            if let Ok(r) = loop_residual(u1, z, case, branches) {
                if r.abs() < tol::scaled::<T>(tol::PROBE_RESIDUAL, 4096.0) {
                    raw.push(RawRoot {
                        zeta: z,
                        branches,
                        residual: r,
                    });
                }
            }
        }
    }

    // deduplicate on the ζ circle, keeping the smallest residual
    let mut clusters: Vec<RawRoot<T>> = Vec::new();
    raw.sort_by(|a, b| a.residual.abs().partial_cmp(&b.residual.abs()).unwrap());
    for root in raw {
        if !clusters
            .iter()
            .any(|c| dist(c.zeta, root.zeta) < T::of(tol::ROOT_DEDUP))
        {
            clusters.push(root);
        }
    }

    // label each expected point by law proximity; a merged A/B root may
    // serve both labels
    let mut points = Vec::with_capacity(3);
    let u2 = case.u2_from_u1(u1);
    for label in PointLabel::ALL {
        let predicted = match label {
            PointLabel::A => zeta_a_closed_form(u1, case),
            PointLabel::B => zeta_b_closed_form(u1),
            PointLabel::C => T::zero(),
        };
        let hit = clusters
            .iter()
            .filter(|c| dist(c.zeta, predicted) < T::of(tol::LABEL_MATCH))
            .min_by(|a, b| {
                dist(a.zeta, predicted)
                    .partial_cmp(&dist(b.zeta, predicted))
                    .unwrap()
            });
        let Some(root) = hit else {
            return Err(Error::MissingPoint {
                label,
                u1: u1.to_f64().unwrap_or(f64::NAN),
            });
        };
        let mut root = *root;
        // the C zero is structural: report it exactly on the axis when
        // the residual there confirms it
        if label == PointLabel::C {
            if let Ok(r0) = loop_residual(u1, T::zero(), case, root.branches) {
                if r0.abs() < tol::scaled::<T>(tol::PROBE_RESIDUAL, 4096.0) {
                    root.zeta = T::zero();
                    root.residual = r0;
                }
            }
        }
        let degenerate = branches_coincide(VertexId::V3, u1, root.zeta, T::of(1e-9))
            .unwrap_or(false)
            || branches_coincide(VertexId::V4, u2, root.zeta, T::of(1e-9)).unwrap_or(false);
        points.push(IntersectionPoint {
            label,
            zeta: root.zeta,
            branch_v3: root.branches.0,
            branch_v4: root.branches.1,
            residual: root.residual,
            degenerate,
        });
    }

    // Any cluster matching no label is an anomaly worth failing on —
    // unless the residual stays below the probe tolerance all the way to
    // a labeled point, in which case it is a shadow of the same blurred
    // zero (the crossing flattens out near singular configurations).
    for c in &clusters {
        let matched = points
            .iter()
            .any(|p| dist(p.zeta, c.zeta) < T::of(tol::ROOT_DEDUP));
        if matched {
            continue;
        }
        let shadow = points.iter().any(|p| {
            dist(p.zeta, c.zeta) < T::of(1e-3)
                && (1..=5).all(|k| {
                    let f = T::of(k as f64 / 6.0);
                    let z = c.zeta + gap(p.zeta, c.zeta) * f;
                    loop_residual(u1, z, case, c.branches)
                        .map(|r| r.abs() < tol::scaled::<T>(tol::PROBE_RESIDUAL, 4096.0))
                        .unwrap_or(false)
                })
        });
        if !shadow {
            return Err(Error::UnlabeledRoot {
                u1: u1.to_f64().unwrap_or(f64::NAN),
                zeta: c.zeta.to_f64().unwrap_or(f64::NAN),
                residual: c.residual.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    Ok(points)
}

/// Branch pairs solving the loop constraint exactly on the ζ = 0 axis.
///
/// The same-mode cases admit one such state, the mixed cases two; over
/// the four cases these are the six distinct rigid foldings of the
/// plain (non-augmented) square twist that pass through the origin.
pub fn zeta_zero_states<T: Real>(u1: T, case: CaseSpec) -> Vec<(Branch, Branch)> {
    BRANCH_PAIRS
        .iter()
        .copied()
        .filter(|&branches| {
            loop_residual(u1, T::zero(), case, branches)
                .map(|r| r.abs() < tol::scaled::<T>(tol::PROBE_RESIDUAL, 4096.0))
                .unwrap_or(false)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree5::solve;

    const SQ2: f64 = std::f64::consts::SQRT_2;

    #[test]
    fn residual_vanishes_on_trivial_and_known_points() {
        for case in CaseSpec::ALL {
            for branches in BRANCH_PAIRS {
                // the unfolded state satisfies everything
                let r: f64 = loop_residual(0.0, 0.0, case, branches).unwrap();
                assert_eq!(r, 0.0);
                let r: f64 = loop_residual(1e-12, 0.0, case, branches).unwrap();
                assert!(r.abs() < 1e-10);
            }
        }
        // frozen A point of case 1 at u1 = 1.6
        let r = loop_residual(
            1.6f64,
            -1.085462426991604,
            CaseSpec::CASE1,
            (Branch::Plus, Branch::Plus),
        )
        .unwrap();
        assert!(r.abs() < 1e-12, "residual {r:e}");
        // C lives on the ζ = 0 axis
        let r = loop_residual(1.6f64, 0.0, CaseSpec::CASE1, (Branch::Plus, Branch::Minus)).unwrap();
        assert!(r.abs() < 1e-12);
    }

    #[test]
    fn closed_form_zeta_laws() {
        // case 1: tan(ζ/2) = (√2−2) tan(u₁/2)
        let z = zeta_a_closed_form(1.6f64, CaseSpec::CASE1);
        assert!((z - -1.085462426991604).abs() < 1e-14);
        assert!((z - 2.0 * ((SQ2 - 2.0) * 0.8f64.tan()).atan()).abs() < 1e-14);
        // case 2: tan(ζ/2) = (√2+2) tan(u₁/2)
        let z = zeta_a_closed_form(0.4f64, CaseSpec::CASE2);
        assert!((z - 1.210802215209905).abs() < 1e-14);
        assert!((z - 2.0 * ((SQ2 + 2.0) * 0.2f64.tan()).atan()).abs() < 1e-14);
        // B: tan(ζ/2) = √2 cot(u₁/2)
        assert!((zeta_b_closed_form(1.6f64) - 1.8829648695126735).abs() < 1e-14);
        assert!((zeta_b_closed_form(0.4f64) - 2.8568568319831895).abs() < 1e-14);
        assert_eq!(zeta_a_closed_form(0.0f64, CaseSpec::CASE1), 0.0);
    }

    #[test]
    fn finds_exactly_three_labeled_points() {
        let pts = find_intersections(1.6f64, CaseSpec::CASE1).unwrap();
        assert_eq!(pts.len(), 3);
        assert_eq!(pts[0].label, PointLabel::A);
        assert!((pts[0].zeta - -1.085462426991604).abs() < 1e-8);
        assert!((pts[1].zeta - 1.8829648695126735).abs() < 1e-8);
        assert!(pts[2].zeta.abs() < 1e-9);
        let pts = find_intersections(0.4f64, CaseSpec::CASE2).unwrap();
        assert_eq!(pts.len(), 3);
        assert!((pts[0].zeta - 1.210802215209905).abs() < 1e-8);
        for case in [CaseSpec::CASE3A, CaseSpec::CASE3B] {
            assert_eq!(find_intersections(1.6f64, case).unwrap().len(), 3);
        }
        assert!(matches!(
            find_intersections(0.0f64, CaseSpec::CASE1),
            Err(Error::DegenerateDriving)
        ));
    }

    #[test]
    fn points_lie_on_their_curves() {
        for case in CaseSpec::ALL {
            let laws = curve_laws(case);
            for &u1 in &[-2.2f64, -0.9, 0.7, 1.6, 2.8] {
                let u2 = case.u2_from_u1(u1);
                for p in find_intersections(u1, case).unwrap() {
                    let phi1 = phi_from(VertexId::V3, u1, p.zeta, p.branch_v3).unwrap();
                    match p.label {
                        PointLabel::A => {
                            assert!(dist(phi1, laws.a_curve(p.zeta)) < 1e-8);
                            // A satisfies φ₁ = u₂ in every case
                            assert!(dist(phi1, u2) < 1e-8);
                        }
                        PointLabel::B => {
                            assert!(dist(phi1, laws.b_curve(p.zeta)) < 1e-8);
                            // y on the B point is u₁'s partner under v2's mode
                            let y = partner_angle(u1, case.mode_v2, PairInput::Driving);
                            assert!(dist(phi1, y) < 1e-8);
                        }
                        PointLabel::C => assert!(p.zeta.abs() < 1e-9),
                    }
                }
            }
        }
    }

    #[test]
    fn a_and_b_share_the_u2_line_in_same_mode_cases() {
        for case in [CaseSpec::CASE1, CaseSpec::CASE2] {
            let laws = curve_laws(case);
            for &u1 in &[-1.9f64, -0.5, 0.4, 1.6, 2.6] {
                let line = laws.u2_line(u1);
                for p in find_intersections(u1, case).unwrap() {
                    if matches!(p.label, PointLabel::A | PointLabel::B) {
                        let phi1 = phi_from(VertexId::V3, u1, p.zeta, p.branch_v3).unwrap();
                        assert!(dist(phi1, line) < 1e-8, "{case:?} {:?} u1={u1}", p.label);
                    }
                }
            }
        }
    }

    #[test]
    fn b_curve_limit_at_zero_is_flat() {
        let laws = curve_laws(CaseSpec::CASE1);
        let y: f64 = laws.b_curve(1e-14);
        assert!((y - std::f64::consts::PI).abs() < 1e-6); // +π just right of 0
        assert_eq!(laws.a_curve(0.0), 0.0);
        assert!((laws.u2_line(1.6f64) - 0.8062644582033318).abs() < 1e-14);
    }

    #[test]
    fn every_point_reproduces_full_vertex_validity() {
        for case in CaseSpec::ALL {
            for p in find_intersections(1.1, case).unwrap() {
                let u2 = case.u2_from_u1(1.1f64);
                let s3 = solve(VertexId::V3, 1.1, p.zeta, p.branch_v3).unwrap();
                let s4 = solve(VertexId::V4, u2, p.zeta, p.branch_v4).unwrap();
                assert!(crate::degree5::closure_residual(VertexId::V3, &s3) < 1e-10);
                assert!(crate::degree5::closure_residual(VertexId::V4, &s4) < 1e-10);
                assert!(p.residual.abs() < 1e-9);
            }
        }
    }

    #[test]
    fn zeta_zero_state_counts_give_six_curves() {
        let counts: Vec<usize> = CaseSpec::ALL
            .iter()
            .map(|&c| zeta_zero_states(0.9f64, c).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 2]);
        assert_eq!(counts.iter().sum::<usize>(), 6);
    }

    #[test]
    fn merged_a_b_root_near_the_tangency_still_labels() {
        // case 2's A and B points collide at u₁* = 2·atan(√(√2−1));
        // close to it the probe path must still label both
        let u1s = 2.0 * (SQ2 - 1.0).sqrt().atan();
        for du in [-1e-5, 1e-5, 0.0] {
            let pts = find_intersections(u1s + du, CaseSpec::CASE2).unwrap();
            assert_eq!(pts.len(), 3, "du = {du}");
        }
    }
}
