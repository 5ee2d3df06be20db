//! 3D realization of folded states over the actual crease pattern.
//!
//! The pattern lives in the plane of v3's solver frame: central square
//! `[0,1] × [−1,0]`, paper boundary a square rotated 45° ("diamond")
//! with center-to-corner distance `h = 3/2` in central-square units
//! (the drawing is the usual figure rotated by 45°; only the sector
//! angles matter to the kinematics). Faces are rigid; folding composes
//! crease-line isometries along a face tree rooted at the central
//! triangle between the φ₁ and ζ creases, the fixed sector of v3's
//! solver frame. The four creases left out of the tree close one loop
//! per vertex, so the shared-edge mismatch of the embedded state is the
//! whole-pattern closure test.

use crate::configspace::Configuration;
use crate::crease::CreaseKey;
use crate::rotation::{fold_about_planar_crease, Mat3, Vec3};
use crate::scalar::Real;


/// Paper "radius": center-to-corner distance of the boundary diamond in
/// central-square units.
const PAPER_RADIUS: f64 = 1.5;

/// A face of the pattern: corner indices in counterclockwise order.
#[derive(Debug, Clone)]
pub struct Face {
    pub name: &'static str,
    pub corners: Vec<usize>,
}

/// A crease: the directed segment from its anchor vertex to its tip,
/// with the faces on each side.
#[derive(Debug, Clone, Copy)]
pub struct Crease {
    pub key: CreaseKey,
    pub anchor: usize,
    pub tip: usize,
    pub left_face: usize,
    pub right_face: usize,
}

/// A face-tree edge: `child` is reached from `parent` across `crease`.
#[derive(Debug, Clone, Copy)]
pub struct TreeEdge {
    pub child: usize,
    pub parent: usize,
    pub crease: usize,
}

/// The augmented square twist as planar geometry.
#[derive(Debug, Clone)]
pub struct CreasePattern<T> {
    /// Planar coordinates: the four vertices, eight boundary crease
    /// tips, and four boundary corners.
    pub points: Vec<[T; 2]>,
    pub faces: Vec<Face>,
    pub creases: Vec<Crease>,
    pub tree: Vec<TreeEdge>,
    pub root_face: usize,
    pub scale: T,
}

/// Index of a named point in [`CreasePattern::points`].
mod pt {
    pub const V3: usize = 0;
    pub const V2: usize = 1;
    pub const V1: usize = 2;
    pub const V4: usize = 3;
    pub const N1: usize = 4;
    pub const N2: usize = 5;
    pub const NCOR: usize = 6;
    pub const E1: usize = 7;
    pub const E2: usize = 8;
    pub const ECOR: usize = 9;
    pub const S1: usize = 10;
    pub const S2: usize = 11;
    pub const SCOR: usize = 12;
    pub const W1: usize = 13;
    pub const W2: usize = 14;
    pub const WCOR: usize = 15;
}

/// Face indices in [`CreasePattern::faces`].
mod face {
    pub const T1: usize = 0;
    pub const T2: usize = 1;
    pub const P_TOP: usize = 2;
    pub const C_E: usize = 3;
    pub const P_RIGHT: usize = 4;
    pub const C_S: usize = 5;
    pub const P_BOT: usize = 6;
    pub const C_W: usize = 7;
    pub const P_LEFT: usize = 8;
    pub const C_N: usize = 9;
}

/// Builds the augmented square twist pattern at the given scale.
pub fn build_pattern<T: Real>(scale: T) -> CreasePattern<T> {
    assert!(scale > T::zero(), "scale must be positive");
    let h = PAPER_RADIUS;
    let raw: [[f64; 2]; 16] = [
        [0.0, 0.0],                          // v3
        [1.0, 0.0],                          // v2
        [0.0, -1.0],                         // v1
        [1.0, -1.0],                         // v4
        [h / 2.0, h / 2.0],                  // n1: psi1 tip
        [(h + 1.0) / 2.0, (h - 1.0) / 2.0],  // n2: o2b tip
        [0.5, h - 0.5],                      // north corner
        [1.0 + h / 2.0, -h / 2.0],           // e1: o2a tip
        [(h + 1.0) / 2.0, -(h + 1.0) / 2.0], // e2: kappa2 tip
        [h + 0.5, -0.5],                     // east corner
        [1.0 - h / 2.0, -1.0 - h / 2.0],     // s1: psi2 tip
        [(1.0 - h) / 2.0, -(h + 1.0) / 2.0], // s2: o1b tip
        [0.5, -0.5 - h],                     // south corner
        [-h / 2.0, h / 2.0 - 1.0],           // w1: o1a tip
        [(1.0 - h) / 2.0, (h - 1.0) / 2.0],  // w2: kappa1 tip
        [0.5 - h, -0.5],                     // west corner
    ];
    let points = raw
        .iter()
        .map(|&[x, y]| [T::of(x) * scale, T::of(y) * scale])
        .collect();

    use face::*;
    use pt::*;
    let faces = vec![
        Face { name: "central_phi", corners: vec![V3, V4, V2] },
        Face { name: "central_u", corners: vec![V3, V1, V4] },
        Face { name: "pleat_phi1", corners: vec![V3, V2, N2, N1] },
        Face { name: "corner_e", corners: vec![V2, E1, ECOR, N2] },
        Face { name: "pleat_phi2", corners: vec![V4, E2, E1, V2] },
        Face { name: "corner_s", corners: vec![V4, S1, SCOR, E2] },
        Face { name: "pleat_u2", corners: vec![V1, S2, S1, V4] },
        Face { name: "corner_w", corners: vec![V1, W1, WCOR, S2] },
        Face { name: "pleat_u1", corners: vec![V3, W2, W1, V1] },
        Face { name: "corner_n", corners: vec![V3, N1, NCOR, W2] },
    ];

    let creases = vec![
        Crease { key: CreaseKey::U1, anchor: V3, tip: V1, left_face: T2, right_face: P_LEFT },
        Crease { key: CreaseKey::U2, anchor: V1, tip: V4, left_face: T2, right_face: P_BOT },
        Crease { key: CreaseKey::Phi1, anchor: V3, tip: V2, left_face: P_TOP, right_face: T1 },
        Crease { key: CreaseKey::Phi2, anchor: V2, tip: V4, left_face: P_RIGHT, right_face: T1 },
        Crease { key: CreaseKey::Zeta, anchor: V3, tip: V4, left_face: T1, right_face: T2 },
        Crease { key: CreaseKey::Psi1, anchor: V3, tip: N1, left_face: C_N, right_face: P_TOP },
        Crease { key: CreaseKey::Kappa1, anchor: V3, tip: W2, left_face: P_LEFT, right_face: C_N },
        Crease { key: CreaseKey::Psi2, anchor: V4, tip: S1, left_face: C_S, right_face: P_BOT },
        Crease { key: CreaseKey::Kappa2, anchor: V4, tip: E2, left_face: P_RIGHT, right_face: C_S },
        Crease { key: CreaseKey::O1a, anchor: V1, tip: W1, left_face: C_W, right_face: P_LEFT },
        Crease { key: CreaseKey::O1b, anchor: V1, tip: S2, left_face: P_BOT, right_face: C_W },
        Crease { key: CreaseKey::O2a, anchor: V2, tip: E1, left_face: C_E, right_face: P_RIGHT },
        Crease { key: CreaseKey::O2b, anchor: V2, tip: N2, left_face: P_TOP, right_face: C_E },
    ];

    // parent-before-child order; each non-root face appears once
    let by_key = |k: CreaseKey| creases.iter().position(|c| c.key == k).unwrap();
    let tree = vec![
        TreeEdge { child: P_TOP, parent: T1, crease: by_key(CreaseKey::Phi1) },
        TreeEdge { child: P_RIGHT, parent: T1, crease: by_key(CreaseKey::Phi2) },
        TreeEdge { child: T2, parent: T1, crease: by_key(CreaseKey::Zeta) },
        TreeEdge { child: P_LEFT, parent: T2, crease: by_key(CreaseKey::U1) },
        TreeEdge { child: P_BOT, parent: T2, crease: by_key(CreaseKey::U2) },
        TreeEdge { child: C_N, parent: P_TOP, crease: by_key(CreaseKey::Psi1) },
        TreeEdge { child: C_E, parent: P_TOP, crease: by_key(CreaseKey::O2b) },
        TreeEdge { child: C_S, parent: P_RIGHT, crease: by_key(CreaseKey::Kappa2) },
        TreeEdge { child: C_W, parent: P_LEFT, crease: by_key(CreaseKey::O1a) },
    ];

    CreasePattern {
        points,
        faces,
        creases,
        tree,
        root_face: T1,
        scale,
    }
}

impl<T: Real> CreasePattern<T> {
    pub fn point3(&self, idx: usize) -> Vec3<T> {
        Vec3::new(self.points[idx][0], self.points[idx][1], T::zero())
    }

    /// Largest distance between any two pattern points.
    pub fn diameter(&self) -> T {
        let mut d = T::zero();
        for (i, a) in self.points.iter().enumerate() {
            for b in &self.points[i + 1..] {
                let dx = a[0] - b[0];
                let dy = a[1] - b[1];
                d = d.max((dx * dx + dy * dy).sqrt());
            }
        }
        d
    }
}

/// A rigid placement of every face in space.
#[derive(Debug, Clone)]
pub struct FoldedState<T> {
    /// Per-face isometry as (rotation, translation), indexed like
    /// `pattern.faces`.
    pub transforms: Vec<(Mat3<T>, Vec3<T>)>,
    /// Transformed 3D corners per face.
    pub corners: Vec<Vec<Vec3<T>>>,
    /// Largest shared-edge endpoint mismatch across all creases.
    pub mismatch: T,
}

/// Fold isometry about the crease through `anchor` with planar ray angle
/// `theta` and fold angle `rho`; maps the left side relative to the
/// right side's frame.
fn crease_isometry<T: Real>(anchor: Vec3<T>, theta: T, rho: T) -> (Mat3<T>, Vec3<T>) {
    let r = fold_about_planar_crease(theta, rho);
    let t = anchor - r.apply(anchor);
    (r, t)
}

/// Realizes a configuration as rigid faces in space.
///
/// Always returns a state; invalid configurations show up as a large
/// `mismatch` (relative to the pattern diameter), which is exactly the
/// whole-pattern closure defect.
pub fn embed<T: Real>(pattern: &CreasePattern<T>, config: &Configuration<T>) -> FoldedState<T> {
    let identity = (Mat3::identity(), Vec3::zero());
    let mut transforms = vec![identity; pattern.faces.len()];
    for edge in &pattern.tree {
        let crease = &pattern.creases[edge.crease];
        let a = pattern.point3(crease.anchor);
        let b = pattern.point3(crease.tip);
        let theta = (b.y - a.y).atan2(b.x - a.x);
        let rho = config.get(crease.key);
        let child_on_left = crease.left_face == edge.child;
        let signed = if child_on_left { rho } else { -rho };
        let (gr, gt) = crease_isometry(a, theta, signed);
        let (pr, ptr) = transforms[edge.parent];
        transforms[edge.child] = (pr * gr, pr.apply(gt) + ptr);
    }
    let apply = |f: usize, p: Vec3<T>| {
        let (r, t) = transforms[f];
        r.apply(p) + t
    };
    let corners = pattern
        .faces
        .iter()
        .enumerate()
        .map(|(fi, face)| {
            face.corners
                .iter()
                .map(|&ci| apply(fi, pattern.point3(ci)))
                .collect()
        })
        .collect();
    let mut mismatch = T::zero();
    for crease in &pattern.creases {
        for idx in [crease.anchor, crease.tip] {
            let p = pattern.point3(idx);
            let gap = (apply(crease.left_face, p) - apply(crease.right_face, p)).norm();
            mismatch = mismatch.max(gap);
        }
    }
    FoldedState {
        transforms,
        corners,
        mismatch,
    }
}

/// True when every fold angle of the configuration is within `tolerance`
/// of {0, +π, −π}: the sheet lies flat (folded or unfolded).
pub fn is_flat<T: Real>(config: &Configuration<T>, tolerance: T) -> bool {
    config.all_flat(tolerance)
}

/// Shared-edge mismatch of a configuration relative to the pattern
/// diameter.
pub fn relative_mismatch<T: Real>(pattern: &CreasePattern<T>, config: &Configuration<T>) -> T {
    embed(pattern, config).mismatch / pattern.diameter()
}
