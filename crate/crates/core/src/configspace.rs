//! Full 13-angle configurations, folding-mode traces, mode enumeration,
//! and the tangent degree-of-freedom check.

use crate::angle::{dist, gap, near_flat_value};
use crate::crease::{v1_rays, v2_rays, CreaseKey, CREASE_ORDER};
use crate::degree4::full_vertex_state;
use crate::degree5::{solve, Branch, D5Angles, VertexId};
use crate::loopsolver::{
    loop_residual, zeta_a_closed_form, zeta_b_closed_form, zeta_zero_states,
    CaseSpec, PointLabel,
};
use crate::numerics::{central_jacobian, rank, singular_values};
use crate::rotation::{closure_product, Mat3};
use crate::scalar::Real;
use crate::{tol, Error, Result};

/// The 13 fold angles of the augmented square twist, keyed by crease.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Configuration<T> {
    pub u1: T,
    pub u2: T,
    pub phi1: T,
    pub phi2: T,
    pub psi1: T,
    pub psi2: T,
    pub zeta: T,
    pub kappa1: T,
    pub kappa2: T,
    pub o1a: T,
    pub o1b: T,
    pub o2a: T,
    pub o2b: T,
}

impl<T: Real> Configuration<T> {
    pub fn zero() -> Self {
        Self::from_array([T::zero(); 13])
    }

    /// Angles in the canonical crease order of [`CREASE_ORDER`].
    pub fn as_array(&self) -> [T; 13] {
        [
            self.u1, self.u2, self.phi1, self.phi2, self.psi1, self.psi2, self.zeta, self.kappa1,
            self.kappa2, self.o1a, self.o1b, self.o2a, self.o2b,
        ]
    }

    pub fn from_array(a: [T; 13]) -> Self {
        Self {
            u1: a[0],
            u2: a[1],
            phi1: a[2],
            phi2: a[3],
            psi1: a[4],
            psi2: a[5],
            zeta: a[6],
            kappa1: a[7],
            kappa2: a[8],
            o1a: a[9],
            o1b: a[10],
            o2a: a[11],
            o2b: a[12],
        }
    }

    pub fn get(&self, key: CreaseKey) -> T {
        let a = self.as_array();
        a[CREASE_ORDER.iter().position(|&k| k == key).unwrap()]
    }

    /// Largest absolute angle.
    pub fn max_norm(&self) -> T {
        self.as_array()
            .iter()
            .fold(T::zero(), |m, a| m.max(a.abs()))
    }

    /// Largest circular distance to another configuration.
    pub fn max_circle_dist(&self, other: &Self) -> T {
        self.as_array()
            .iter()
            .zip(other.as_array())
            .fold(T::zero(), |m, (&a, b)| m.max(dist(a, b)))
    }

    /// The mountain-valley reflection: every fold angle negated. Maps
    /// valid configurations to valid configurations; an involution.
    pub fn mirrored(&self) -> Self {
        Self::from_array(self.as_array().map(|a| -a))
    }

    /// True when every angle is within `tolerance` of {0, +π, −π}.
    pub fn all_flat(&self, tolerance: T) -> bool {
        self.as_array()
            .iter()
            .all(|&a| near_flat_value(a, tolerance))
    }

    /// Angles of v3's five creases in role order.
    pub fn v3_angles(&self) -> D5Angles<T> {
        D5Angles {
            u: self.u1,
            zeta: self.zeta,
            psi: self.psi1,
            phi: self.phi1,
            kappa: self.kappa1,
        }
    }

    /// Angles of v4's five creases in role order.
    pub fn v4_angles(&self) -> D5Angles<T> {
        D5Angles {
            u: self.u2,
            zeta: self.zeta,
            psi: self.psi2,
            phi: self.phi2,
            kappa: self.kappa2,
        }
    }
}

/// Closure products of the four vertices for a configuration.
fn vertex_products<T: Real>(cfg: &Configuration<T>) -> [Mat3<T>; 4] {
    let chain = |rays: &[(CreaseKey, T)]| {
        let list: Vec<(T, T)> = rays.iter().map(|&(k, d)| (d, cfg.get(k))).collect();
        closure_product(&list)
    };
    [
        chain(&crate::crease::v3_rays()),
        chain(&crate::crease::v4_rays()),
        chain(&v1_rays()),
        chain(&v2_rays()),
    ]
}

/// Max-abs closure defect of each vertex (v3, v4, v1, v2).
pub fn vertex_closure_residuals<T: Real>(cfg: &Configuration<T>) -> [T; 4] {
    vertex_products(cfg).map(|p| p.max_abs_diff(&Mat3::identity()))
}

/// All twelve first-order constraint components: the antisymmetric part
/// of each vertex's closure product, which spans the tangent of the
/// rotation constraint at valid configurations.
pub fn constraint_components<T: Real>(cfg: &Configuration<T>) -> Vec<T> {
    let mut out = Vec::with_capacity(12);
    for p in vertex_products(cfg) {
        let m = &p.m;
        out.push((m[2][1] - m[1][2]) * T::half());
        out.push((m[0][2] - m[2][0]) * T::half());
        out.push((m[1][0] - m[0][1]) * T::half());
    }
    out
}

/// True when all four vertex closures hold within `tolerance`.
pub fn is_valid<T: Real>(cfg: &Configuration<T>, tolerance: T) -> bool {
    vertex_closure_residuals(cfg)
        .iter()
        .all(|&r| r < tolerance)
}

/// Builds the full 13-angle configuration for a loop solution.
///
/// Rejects inputs whose loop residual exceeds the configuration closure
/// tolerance.
pub fn assemble<T: Real>(
    u1: T,
    zeta: T,
    case: CaseSpec,
    branches: (Branch, Branch),
) -> Result<Configuration<T>> {
    let u2 = case.u2_from_u1(u1);
    let s3 = solve(VertexId::V3, u1, zeta, branches.0)?;
    let s4 = solve(VertexId::V4, u2, zeta, branches.1)?;
    let residual = gap(s3.phi, case.phi1_demanded(s4.phi));
    if residual.abs() > tol::scaled::<T>(tol::CONFIG_CLOSURE, 16384.0) {
        return Err(Error::LoopResidual {
            u1: u1.to_f64().unwrap_or(f64::NAN),
            zeta: zeta.to_f64().unwrap_or(f64::NAN),
            residual: residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    let v1 = full_vertex_state(u1, case.mode_v1);
    // v2 drives with φ₂ and partners φ₁; use the solved values so the
    // outer sign patterns hold exactly
    let (o2a, o2b) = match case.mode_v2 {
        crate::degree4::Mode::Mode1 => (-s3.phi, s4.phi),
        crate::degree4::Mode::Mode2 => (s3.phi, -s4.phi),
    };
    Ok(Configuration {
        u1,
        u2,
        phi1: s3.phi,
        phi2: s4.phi,
        psi1: s3.psi,
        psi2: s4.psi,
        zeta,
        kappa1: s3.kappa,
        kappa2: s4.kappa,
        o1a: v1.outer_a,
        o1b: v1.outer_b,
        o2a,
        o2b,
    })
}

/// The straight configuration-space line that folds the sheet in half
/// along the κ₁–ζ–κ₂ diagonal, every other crease flat.
pub fn fold_in_half_configuration<T: Real>(t: T) -> Configuration<T> {
    let mut cfg = Configuration::zero();
    cfg.zeta = t;
    cfg.kappa1 = t;
    cfg.kappa2 = t;
    cfg
}

/// Kernel dimension of the constraint Jacobian at a configuration.
///
/// Finite-differences the twelve closure components over the thirteen
/// angles and counts singular values below the relative threshold. A
/// generic point of a folding mode reports 1; values above 1 mark
/// singular points of the configuration space (the unfolded state
/// reports 5, and C points of the same-mode cases report 2, where the
/// unfolded diagonal contributes a first-order shake).
pub fn tangent_dof<T: Real>(cfg: &Configuration<T>) -> usize {
    let x = cfg.as_array().to_vec();
    let h = T::epsilon().powf(T::of(1.0 / 3.0));
    let jac = central_jacobian(
        |a| {
            let mut arr = [T::zero(); 13];
            arr.copy_from_slice(a);
            constraint_components(&Configuration::from_array(arr))
        },
        &x,
        h,
    );
    let sv = singular_values(&jac);
    13 - rank(&sv, T::of(tol::DOF_SV_REL))
}

/// How a folding mode relates to the unfolded state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Classification {
    /// Folds every crease and passes through the unfolded state.
    NonDegenerate,
    /// Passes through the unfolded state with the diagonal pinned at ζ = 0.
    DegenerateZetaZero,
    /// Never reaches the unfolded state.
    DisconnectedFromOrigin,
    /// Straight line folding only the κ₁–ζ–κ₂ diagonal.
    FoldInHalf,
}

/// One folding mode of the crease pattern.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct FoldingMode {
    pub case: CaseSpec,
    /// Intersection-point identity; `None` for the fold-in-half line.
    pub point_label: Option<PointLabel>,
    /// Sign of the initial driving-angle velocity along the trace.
    pub direction: i8,
    pub classification: Classification,
}

/// One sample of a trace.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct TraceSample<T> {
    pub u1: T,
    pub config: Configuration<T>,
}

/// A folding mode traced through configuration space.
#[derive(Debug, Clone, serde::Serialize)]
pub struct TraceCurve<T> {
    pub case: CaseSpec,
    pub label: Option<PointLabel>,
    pub samples: Vec<TraceSample<T>>,
    pub reaches_origin: bool,
    pub reaches_flat: bool,
    /// Recorded reason when continuation stopped before the range end.
    pub truncated: Option<String>,
}

/// Local re-solve of the loop constraint near a predicted ζ.
///
/// Splits an expanding bracket around `center` into cells, polishes each
/// sign change, and returns the root nearest `prefer`. ζ is treated as
/// unwrapped (the residual is 2π-periodic).
fn local_root<T: Real>(
    u1: T,
    case: CaseSpec,
    branches: (Branch, Branch),
    center: T,
    prefer: T,
) -> Option<T> {
    let mut width = T::of(0.02);
    for _ in 0..7 {
        let cells = 8;
        let step = T::two() * width / T::of(cells as f64);
        let mut best: Option<T> = None;
        let mut prev: Option<(T, T)> = None;
        for i in 0..=cells {
            let z = center - width + step * T::of(i as f64);
            let Ok(r) = loop_residual(u1, z, case, branches) else {
                prev = None;
                continue;
            };
            if r == T::zero() {
                best = Some(z);
                break;
            }
            if let Some((zp, rp)) = prev {
                if rp * r < T::zero() && (rp - r).abs() < T::PI() {
                    let (mut lo, mut hi, mut flo) = (zp, z, rp);
                    for _ in 0..100 {
                        let mid = (lo + hi) * T::half();
                        if mid == lo || mid == hi {
                            break;
                        }
                        match loop_residual(u1, mid, case, branches) {
                            Err(_) => break,
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
                    let root = (lo + hi) * T::half();
                    best = match best {
                        Some(b) if (b - prefer).abs() <= (root - prefer).abs() => Some(b),
                        _ => Some(root),
                    };
                }
            }
            prev = Some((z, r));
        }
        if let Some(root) = best {
            return Some(root);
        }
        width = width * T::of(2.5);
    }
    None
}

/// Law-predicted ζ for a labeled point, used to steer root selection
/// during continuation (values always come from the solver).
fn law_zeta<T: Real>(label: PointLabel, u1: T, case: CaseSpec) -> T {
    match label {
        PointLabel::A => zeta_a_closed_form(u1, case),
        PointLabel::B => zeta_b_closed_form(u1),
        PointLabel::C => T::zero(),
    }
}

fn assemble_labeled<T: Real>(
    u1: T,
    zeta: T,
    case: CaseSpec,
    prev: Option<&Configuration<T>>,
) -> Result<Configuration<T>> {
    let mut best: Option<Configuration<T>> = None;
    for b3 in [Branch::Plus, Branch::Minus] {
        for b4 in [Branch::Plus, Branch::Minus] {
            if let Ok(cfg) = assemble(u1, zeta, case, (b3, b4)) {
                best = match (best, prev) {
                    (None, _) => Some(cfg),
                    (Some(b), Some(p)) => {
                        if cfg.max_circle_dist(p) < b.max_circle_dist(p) {
                            Some(cfg)
                        } else {
                            Some(b)
                        }
                    }
                    (some, None) => some,
                };
            }
        }
    }
    best.ok_or(Error::LoopResidual {
        u1: u1.to_f64().unwrap_or(f64::NAN),
        zeta: zeta.to_f64().unwrap_or(f64::NAN),
        residual: f64::NAN,
    })
}

/// Traces a labeled mode over `u1_range` by continuation, warm-starting
/// each step from the previous ζ. For the fold-in-half mode
/// (`point_label: None`) the range parameterizes the diagonal angle.
pub fn trace_mode<T: Real>(
    mode: &FoldingMode,
    u1_range: (T, T),
    step: T,
) -> Result<TraceCurve<T>> {
    assert!(step > T::zero(), "step must be positive");
    let (start, end) = u1_range;
    let dir = T::of(mode.direction as f64);
    let mut samples = Vec::new();
    let mut truncated = None;

    if mode.point_label.is_none() {
        // fold-in-half line: exact closed form
        let mut t = start;
        loop {
            samples.push(TraceSample {
                u1: t,
                config: fold_in_half_configuration(dir * t),
            });
            if t >= end {
                break;
            }
            t = (t + step).min(end);
        }
        return Ok(TraceCurve {
            case: mode.case,
            label: None,
            samples,
            reaches_origin: start <= T::of(tol::ORIGIN_PROBE_U1),
            reaches_flat: dist(dir * end, T::PI()) <= T::of(tol::FLAT),
            truncated: None,
        });
    }

    let label = mode.point_label.unwrap();
    let case = mode.case;
    // refine a step locally when any angle moves faster than the
    // continuity contract allows (adjacent samples < 5 nominal steps)
    let jump_bound = T::of(4.5) * step;
    let min_substep = step * T::of(1.0 / 64.0);
    let mut prev_u1: Option<T> = None;
    let mut prev_cfg: Option<Configuration<T>> = None;
    let mut prev_zeta: Option<T> = None;
    let mut prev_branches: Option<(Branch, Branch)> = None;
    let mut pending: Vec<T> = Vec::new();
    let mut u1 = start;
    loop {
        pending.push(u1);
        if u1 >= end {
            break;
        }
        u1 = (u1 + step).min(end);
    }
    pending.reverse();
    while let Some(target) = pending.pop() {
        let su1 = dir * target;
        match step_root(su1, case, label, prev_zeta, prev_branches, prev_cfg.as_ref()) {
            Ok((zeta, branches, cfg)) => {
                if let (Some(pu), Some(pc)) = (prev_u1, prev_cfg.as_ref()) {
                    let gap_wide = cfg.max_circle_dist(pc) > jump_bound;
                    if gap_wide && (target - pu) > min_substep {
                        pending.push(target);
                        pending.push((pu + target) * T::half());
                        continue;
                    }
                }
                prev_u1 = Some(target);
                prev_zeta = Some(zeta);
                prev_branches = Some(branches);
                prev_cfg = Some(cfg);
                samples.push(TraceSample { u1: su1, config: cfg });
            }
            Err(e) => {
                truncated = Some(format!("continuation stopped at u1 = {su1}: {e}"));
                break;
            }
        }
    }
    if samples.is_empty() {
        return Err(Error::RootLost {
            label,
            u1: (dir * start).to_f64().unwrap_or(f64::NAN),
        });
    }
    let reaches_origin = mode_connects_to_origin::<T>(case, label);
    let reaches_flat = samples
        .last()
        .map(|s| s.config.all_flat(T::of(tol::FLAT)))
        .unwrap_or(false);
    Ok(TraceCurve {
        case,
        label: Some(label),
        samples,
        reaches_origin,
        reaches_flat,
        truncated,
    })
}

/// One continuation step: find the labeled root at this u₁ and assemble.
fn step_root<T: Real>(
    u1: T,
    case: CaseSpec,
    label: PointLabel,
    prev_zeta: Option<T>,
    prev_branches: Option<(Branch, Branch)>,
    prev_cfg: Option<&Configuration<T>>,
) -> Result<(T, (Branch, Branch), Configuration<T>)> {
    let predicted = law_zeta(label, u1, case);
    if label == PointLabel::C {
        // the C point sits exactly on the ζ = 0 axis
        let pairs = zeta_zero_states(u1, case);
        let mut best: Option<Configuration<T>> = None;
        let mut best_pair = None;
        for pair in pairs {
            if let Ok(cfg) = assemble(u1, T::zero(), case, pair) {
                let better = match (&best, prev_cfg) {
                    (None, _) => true,
                    (Some(b), Some(p)) => cfg.max_circle_dist(p) < b.max_circle_dist(p),
                    (Some(_), None) => false,
                };
                if better {
                    best = Some(cfg);
                    best_pair = Some(pair);
                }
            }
        }
        return match (best, best_pair) {
            (Some(cfg), Some(pair)) => Ok((T::zero(), pair, cfg)),
            _ => Err(Error::RootLost {
                label,
                u1: u1.to_f64().unwrap_or(f64::NAN),
            }),
        };
    }
    // warm start from the previous ζ when available, steered toward the
    // labeled point's law prediction if several roots share the bracket
    let center = prev_zeta.unwrap_or(predicted);
    let mut candidates: Vec<(T, (Branch, Branch))> = Vec::new();
    if let Some(branches) = prev_branches {
        if let Some(z) = local_root(u1, case, branches, center, predicted) {
            candidates.push((z, branches));
        }
    }
    if candidates.is_empty() {
        for b3 in [Branch::Plus, Branch::Minus] {
            for b4 in [Branch::Plus, Branch::Minus] {
                if let Some(z) = local_root(u1, case, (b3, b4), center, predicted) {
                    candidates.push((z, (b3, b4)));
                }
            }
        }
    }
    // direct law probe covers tangential roots that bracketing misses
    for b3 in [Branch::Plus, Branch::Minus] {
        for b4 in [Branch::Plus, Branch::Minus] {
            if let Ok(r) = loop_residual(u1, predicted, case, (b3, b4)) {
                if r.abs() < tol::scaled::<T>(tol::PROBE_RESIDUAL, 4096.0) {
                    candidates.push((predicted, (b3, b4)));
                }
            }
        }
    }
    candidates.sort_by(|a, b| {
        dist(a.0, predicted)
            .partial_cmp(&dist(b.0, predicted))
            .unwrap()
    });
    for (zeta, branches) in candidates {
        if dist(zeta, predicted) > T::of(1e-3) {
            continue;
        }
        if let Ok(cfg) = assemble(u1, zeta, case, branches) {
            return Ok((zeta, branches, cfg));
        }
        // branch bookkeeping may flip at coincidence loci; retry all
        if let Ok(cfg) = assemble_labeled(u1, zeta, case, prev_cfg) {
            return Ok((zeta, branches, cfg));
        }
    }
    Err(Error::RootLost {
        label,
        u1: u1.to_f64().unwrap_or(f64::NAN),
    })
}

/// A hybrid trace with its recorded switch point.
#[derive(Debug, Clone, serde::Serialize)]
pub struct HybridTrace<T> {
    pub curve: TraceCurve<T>,
    /// Driving angle where the A and B point laws intersect.
    pub switch_u1: T,
    /// Common ζ of both laws at the switch.
    pub switch_zeta: T,
}

/// Driving angle at which case 2's A and B points collide:
/// `u₁* = 2·atan(√(√2−1))`.
pub fn hybrid_switch_u1<T: Real>() -> T {
    T::two() * (T::SQRT_2() - T::one()).sqrt().atan()
}

/// The case-2 folding that realizes the iso-area square twist: from the
/// unfolded state along the A curve until it meets the B curve, then
/// along the B curve to the flat state with the diagonal back at ζ = 0.
pub fn hybrid_iso_area_trace<T: Real>(step: T) -> Result<HybridTrace<T>> {
    let case = CaseSpec::CASE2;
    let switch_u1 = hybrid_switch_u1();
    let switch_zeta = zeta_a_closed_form(switch_u1, case);

    let a_mode = FoldingMode {
        case,
        point_label: Some(PointLabel::A),
        direction: 1,
        classification: Classification::NonDegenerate,
    };
    let mut a_part = trace_mode(&a_mode, (step, switch_u1), step)?;
    if a_part.truncated.is_some() {
        return Err(Error::RootLost {
            label: PointLabel::A,
            u1: f64::NAN,
        });
    }
    let b_mode = FoldingMode {
        case,
        point_label: Some(PointLabel::B),
        direction: 1,
        classification: Classification::DisconnectedFromOrigin,
    };
    let b_part = trace_mode(&b_mode, (switch_u1, T::PI()), step)?;
    if b_part.truncated.is_some() {
        return Err(Error::RootLost {
            label: PointLabel::B,
            u1: f64::NAN,
        });
    }
    // the switch sample appears once
    a_part.samples.extend(b_part.samples.into_iter().skip(1));
    let reaches_flat = a_part
        .samples
        .last()
        .map(|s| s.config.all_flat(T::of(tol::FLAT)))
        .unwrap_or(false);
    Ok(HybridTrace {
        curve: TraceCurve {
            case,
            label: None,
            samples: a_part.samples,
            reaches_origin: true,
            reaches_flat,
            truncated: None,
        },
        switch_u1,
        switch_zeta,
    })
}

/// Tests whether a labeled mode's configurations vanish with the driving
/// angle: solve the mode's point at a small probe angle and measure the
/// configuration. Connected modes scale linearly with the probe;
/// disconnected ones sit at finite angles.
fn mode_connects_to_origin<T: Real>(case: CaseSpec, label: PointLabel) -> bool {
    let probe = T::of(tol::ORIGIN_PROBE_U1);
    step_root::<T>(probe, case, label, None, None, None)
        .map(|(_, _, cfg)| cfg.max_norm() < T::of(tol::ORIGIN_CONNECT_NORM))
        .unwrap_or(false)
}

/// Enumerates and classifies the folding modes through the origin.
///
/// Each of the four cases contributes its A, B, and C modes; the
/// fold-in-half line along the diagonal is appended as a degenerate
/// entry. Exactly the four A modes are non-degenerate.
pub fn enumerate_origin_modes<T: Real>() -> Vec<FoldingMode> {
    let mut modes = Vec::new();
    for case in CaseSpec::ALL {
        for label in PointLabel::ALL {
            let classification = match label {
                PointLabel::C => Classification::DegenerateZetaZero,
                _ => {
                    if mode_connects_to_origin::<T>(case, label) {
                        Classification::NonDegenerate
                    } else {
                        Classification::DisconnectedFromOrigin
                    }
                }
            };
            modes.push(FoldingMode {
                case,
                point_label: Some(label),
                direction: 1,
                classification,
            });
        }
    }
    modes.push(FoldingMode {
        case: CaseSpec::CASE1,
        point_label: None,
        direction: 1,
        classification: Classification::FoldInHalf,
    });
    modes
}

/// Number of distinct ζ = 0 configuration-space curves through the
/// origin: the rigid foldings of the plain square twist. The same-mode
/// cases carry one each and the mixed cases two, six in total.
pub fn degenerate_zeta_zero_curve_count<T: Real>() -> usize {
    let probe = T::of(0.9);
    let mut configs: Vec<Configuration<T>> = Vec::new();
    for case in CaseSpec::ALL {
        for pair in zeta_zero_states(probe, case) {
            if let Ok(cfg) = assemble(probe, T::zero(), case, pair) {
                if !configs
                    .iter()
                    .any(|c| c.max_circle_dist(&cfg) < T::of(1e-6))
                {
                    configs.push(cfg);
                }
            }
        }
    }
    configs.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const U1: f64 = 1.6;
    const ZA1: f64 = -1.085462426991604;

    #[test]
    fn assemble_zero_is_zero() {
        let cfg = assemble(
            0.0,
            0.0,
            CaseSpec::CASE1,
            (Branch::Plus, Branch::Plus),
        )
        .unwrap();
        assert_eq!(cfg.max_norm(), 0.0);
        assert!(is_valid(&cfg, 1e-12));
    }

    #[test]
    fn assemble_case1_a_point() {
        let cfg = assemble(U1, ZA1, CaseSpec::CASE1, (Branch::Plus, Branch::Plus)).unwrap();
        assert!((cfg.u2 - 0.8062644582033318).abs() < 1e-12);
        // the A mode has φ₁ = u₂ and φ₂ = u₁
        assert!((cfg.phi1 - cfg.u2).abs() < 1e-10);
        assert!((cfg.phi2 - cfg.u1).abs() < 1e-10);
        for r in vertex_closure_residuals(&cfg) {
            assert!(r < 1e-9, "closure {r:e}");
        }
        // rejected away from the loop solution
        assert!(assemble(U1, 0.3, CaseSpec::CASE1, (Branch::Plus, Branch::Plus)).is_err());
    }

    #[test]
    fn assemble_c_point_is_a_square_twist_state() {
        let cfg = assemble(U1, 0.0, CaseSpec::CASE1, (Branch::Plus, Branch::Minus)).unwrap();
        assert_eq!(cfg.zeta, 0.0);
        assert!(is_valid(&cfg, 1e-9));
        // diagonal and its collinear cut creases stay consistent with a
        // flat diagonal: v3 folds as a degree-4 vertex with ψ₁ = u₁
        assert!((cfg.psi1 - cfg.u1).abs() < 1e-10);
        assert!((cfg.phi1 + cfg.u2).abs() < 1e-10);
    }

    #[test]
    fn mirrored_configurations_stay_valid() {
        let cfg = assemble(U1, ZA1, CaseSpec::CASE1, (Branch::Plus, Branch::Plus)).unwrap();
        let neg = cfg.mirrored();
        assert!(is_valid(&neg, 1e-9));
        assert_eq!(neg.mirrored(), cfg);
    }

    #[test]
    fn tangent_dof_at_key_points() {
        let cfg = assemble(1.0, zeta_a_closed_form(1.0, CaseSpec::CASE1), CaseSpec::CASE1, (Branch::Plus, Branch::Plus)).unwrap();
        assert_eq!(tangent_dof(&cfg), 1);
        let cfg2 = assemble(0.7, zeta_a_closed_form(0.7, CaseSpec::CASE2), CaseSpec::CASE2, (Branch::Plus, Branch::Plus)).unwrap();
        assert_eq!(tangent_dof(&cfg2), 1);
        // the origin is a singular point
        assert_eq!(tangent_dof(&Configuration::<f64>::zero()), 5);
        // the same-mode C point carries a first-order diagonal shake
        let c = assemble(1.0, 0.0, CaseSpec::CASE1, (Branch::Plus, Branch::Minus)).unwrap();
        assert_eq!(tangent_dof(&c), 2);
    }

    #[test]
    fn case1_a_trace_reaches_flat_with_the_zeta_law() {
        let mode = FoldingMode {
            case: CaseSpec::CASE1,
            point_label: Some(PointLabel::A),
            direction: 1,
            classification: Classification::NonDegenerate,
        };
        let trace = trace_mode(&mode, (0.01, PI), 0.01).unwrap();
        assert!(trace.truncated.is_none());
        assert!(trace.reaches_origin);
        assert!(trace.reaches_flat);
        let k = std::f64::consts::SQRT_2 - 2.0;
        let mut prev: Option<&TraceSample<f64>> = None;
        for s in &trace.samples {
            // tangent-half-angle law along the whole trace
            let lhs = (s.config.zeta * 0.5).tan();
            let rhs = k * (s.u1 * 0.5).tan();
            if (s.u1 - PI).abs() > 1e-9 {
                assert!((lhs - rhs).abs() < 1e-8, "law off at u1 = {}", s.u1);
            }
            assert!((s.config.phi1 - s.config.u2).abs() < 1e-8);
            assert!(is_valid(&s.config, 1e-9));
            if let Some(p) = prev {
                assert!(s.config.max_circle_dist(&p.config) < 5.0 * 0.01);
            }
            prev = Some(s);
        }
        // terminal state: everything at 0 or ±π, diagonal folded in half
        let last = &trace.samples.last().unwrap().config;
        assert!(last.all_flat(1e-6));
        assert!((last.zeta.abs() - PI).abs() < 1e-6);
    }

    #[test]
    fn negative_direction_traces_the_other_half_of_the_mode() {
        let mode = FoldingMode {
            case: CaseSpec::CASE1,
            point_label: Some(PointLabel::A),
            direction: -1,
            classification: Classification::NonDegenerate,
        };
        let trace = trace_mode(&mode, (0.05f64, 1.5), 0.05).unwrap();
        assert!(trace.truncated.is_none());
        let k = std::f64::consts::SQRT_2 - 2.0;
        for s in &trace.samples {
            assert!(s.u1 < 0.0);
            assert!(((s.config.zeta * 0.5).tan() - k * (s.u1 * 0.5).tan()).abs() < 1e-8);
            assert!(is_valid(&s.config, 1e-9));
        }
        // the two halves are mountain-valley mirrors of each other
        let plus = trace_mode(
            &FoldingMode {
                direction: 1,
                ..mode
            },
            (0.05, 1.5),
            0.05,
        )
        .unwrap();
        let a = trace.samples[5].config;
        let b = plus.samples[5].config.mirrored();
        assert!(a.max_circle_dist(&b) < 1e-9);
    }

    #[test]
    fn c_trace_stays_on_the_axis() {
        let mode = FoldingMode {
            case: CaseSpec::CASE1,
            point_label: Some(PointLabel::C),
            direction: 1,
            classification: Classification::DegenerateZetaZero,
        };
        let trace = trace_mode(&mode, (0.02, PI), 0.02).unwrap();
        assert!(trace.truncated.is_none());
        for s in &trace.samples {
            assert_eq!(s.config.zeta, 0.0);
            assert!(is_valid(&s.config, 1e-9));
        }
        assert!(trace.reaches_flat);
    }

    #[test]
    fn b_trace_avoids_the_origin() {
        for case in CaseSpec::ALL {
            let mode = FoldingMode {
                case,
                point_label: Some(PointLabel::B),
                direction: 1,
                classification: Classification::DisconnectedFromOrigin,
            };
            let trace = trace_mode(&mode, (0.02, PI), 0.02).unwrap();
            assert!(trace.truncated.is_none(), "{case:?}: {:?}", trace.truncated);
            assert!(!trace.reaches_origin);
            let min_norm = trace
                .samples
                .iter()
                .map(|s| s.config.max_norm())
                .fold(f64::INFINITY, f64::min);
            assert!(min_norm > 0.5, "{case:?}: min norm {min_norm}");
        }
    }

    #[test]
    fn hybrid_switch_matches_a_root_find_on_the_curve_laws() {
        // independent oracle: locate where the A and B curves of case 2
        // cross in the (zeta, y) plane by a bracketed root find on the
        // difference of the curve laws
        let laws = crate::loopsolver::curve_laws(CaseSpec::CASE2);
        let diff = |z: f64| crate::angle::gap(laws.a_curve(z), laws.b_curve(z));
        let z_star = crate::numerics::brent(diff, 1.6, 2.9, 200);
        assert!(diff(z_star).abs() < 1e-12);
        let hybrid = hybrid_iso_area_trace::<f64>(0.05).unwrap();
        assert!((z_star - hybrid.switch_zeta).abs() < 1e-10);
        // and the driving angle follows from the A law at that zeta
        let u_star = crate::numerics::brent(
            |u: f64| zeta_a_closed_form(u, CaseSpec::CASE2) - z_star,
            0.5,
            2.0,
            200,
        );
        assert!((u_star - hybrid.switch_u1).abs() < 1e-10);
    }

    #[test]
    fn hybrid_trace_switch_and_terminus() {
        let hybrid = hybrid_iso_area_trace::<f64>(0.01).unwrap();
        // switch point satisfies both laws
        let za = zeta_a_closed_form(hybrid.switch_u1, CaseSpec::CASE2);
        let zb = zeta_b_closed_form(hybrid.switch_u1);
        assert!((za - zb).abs() < 1e-8);
        assert!((hybrid.switch_zeta - za).abs() < 1e-12);
        assert!((hybrid.switch_u1 - 1.1437177404024206).abs() < 1e-12);
        assert!((hybrid.switch_zeta - 2.287435480804841).abs() < 1e-12);
        // terminus: diagonal back to zero, every other crease at ±π
        let last = hybrid.curve.samples.last().unwrap().config;
        assert!(hybrid.curve.reaches_flat);
        assert!(last.zeta.abs() < 1e-6);
        for a in [last.u1, last.u2, last.phi1, last.phi2, last.kappa1, last.kappa2] {
            assert!((a.abs() - PI).abs() < 1e-6, "{a}");
        }
        for s in &hybrid.curve.samples {
            assert!(is_valid(&s.config, 1e-9));
        }
    }

    #[test]
    fn enumerates_four_nondegenerate_modes() {
        let modes = enumerate_origin_modes::<f64>();
        let non_degenerate = modes
            .iter()
            .filter(|m| m.classification == Classification::NonDegenerate)
            .count();
        assert_eq!(non_degenerate, 4);
        for m in &modes {
            match m.point_label {
                Some(PointLabel::A) => {
                    assert_eq!(m.classification, Classification::NonDegenerate)
                }
                Some(PointLabel::B) => {
                    assert_eq!(m.classification, Classification::DisconnectedFromOrigin)
                }
                Some(PointLabel::C) => {
                    assert_eq!(m.classification, Classification::DegenerateZetaZero)
                }
                None => assert_eq!(m.classification, Classification::FoldInHalf),
            }
        }
        // deterministic across runs
        let again = enumerate_origin_modes::<f64>();
        assert_eq!(modes.len(), again.len());
        assert_eq!(degenerate_zeta_zero_curve_count::<f64>(), 6);
    }

    #[test]
    fn fold_in_half_line_is_valid() {
        for t in [-3.0, -0.5, 0.9, 2.2] {
            let cfg = fold_in_half_configuration(t);
            assert!(is_valid(&cfg, 1e-12));
        }
    }
}
