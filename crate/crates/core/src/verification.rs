//! The invariant and acceptance suite behind `verify`.
//!
//! Each check is deterministic and self-contained; the CLI prints one
//! line per check and fails on any red. The numbered checks mirror the
//! acceptance gate of the test suite; the remaining ones sweep the
//! per-module invariants.

use crate::angle::dist;
use crate::configspace::{
    assemble, enumerate_origin_modes, hybrid_iso_area_trace, tangent_dof, trace_mode,
    vertex_closure_residuals, Classification, Configuration, FoldingMode, TraceCurve,
};
use crate::degree4::{partner_angle, Mode, PairInput};
use crate::degree5::{
    closure_residual, psi_cosine_rhs, psi_from, solve, vertex_residual, Branch, VertexId,
};
use crate::embedding::{build_pattern, embed, is_flat};
use crate::loopsolver::{find_intersections, zeta_b_closed_form, CaseSpec, PointLabel};
use crate::rotation::{fold_about_planar_crease, Mat3};
use crate::sampling::SplitMix64;
use crate::tol;

const SQ2: f64 = std::f64::consts::SQRT_2;
const PI: f64 = std::f64::consts::PI;

/// Outcome of one verification check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: String) -> Self {
        Check {
            name,
            passed,
            detail,
        }
    }
}

/// 50 deterministic driving angles spread over (−π, π) avoiding 0.
fn u1_samples() -> Vec<f64> {
    (0..50)
        .map(|i| -3.1 + 6.2 * (i as f64 + 0.5) / 50.0)
        .filter(|u| u.abs() > 1e-3)
        .collect()
}

fn a_mode(case: CaseSpec) -> FoldingMode {
    FoldingMode {
        case,
        point_label: Some(PointLabel::A),
        direction: 1,
        classification: Classification::NonDegenerate,
    }
}

fn labeled_mode(case: CaseSpec, label: PointLabel) -> FoldingMode {
    FoldingMode {
        case,
        point_label: Some(label),
        direction: 1,
        classification: Classification::NonDegenerate,
    }
}

/// Criterion 1: exactly four non-degenerate folding modes through the
/// unfolded state.
pub fn check_mode_count() -> Check {
    let modes = enumerate_origin_modes::<f64>();
    let n = modes
        .iter()
        .filter(|m| m.classification == Classification::NonDegenerate)
        .count();
    Check::new(
        "mode count: 4 non-degenerate origin modes",
        n == 4,
        format!("found {n}"),
    )
}

/// Criterion 2: the ψ₁ cosine law and the full cut-point identity hold
/// on 1000 random feasible pairs.
pub fn check_psi_oracle() -> Check {
    let mut rng = SplitMix64::new(2024);
    let mut n = 0;
    let mut max_cos = 0.0f64;
    let mut max_vec = 0.0f64;
    while n < 1000 {
        let (u, z) = (rng.angle(), rng.angle());
        let Ok(psi) = psi_from(VertexId::V3, u, z, Branch::Plus) else {
            continue;
        };
        n += 1;
        max_cos = max_cos.max((psi.cos() - psi_cosine_rhs(u, z)).abs());
        for br in [Branch::Plus, Branch::Minus] {
            let s = solve(VertexId::V3, u, z, br).unwrap();
            max_vec = max_vec.max(vertex_residual(VertexId::V3, &s));
        }
    }
    Check::new(
        "psi law: cosine match 1e-12, cut identity 1e-10",
        max_cos < 1e-12 && max_vec < 1e-10,
        format!("max cosine gap {max_cos:.3e}, max identity residual {max_vec:.3e}"),
    )
}

/// Criterion 3: the A point's tangent-half-angle law with coefficient
/// √2−2 (case 1) and √2+2 (case 2) over 50 found points each.
pub fn check_a_point_law() -> Check {
    let mut worst = 0.0f64;
    for (case, k) in [(CaseSpec::CASE1, SQ2 - 2.0), (CaseSpec::CASE2, SQ2 + 2.0)] {
        for u1 in u1_samples() {
            let Ok(points) = find_intersections(u1, case) else {
                return Check::new(
                    "A law: tan(zeta/2) = k tan(u1/2), k in {sqrt2-2, sqrt2+2}",
                    false,
                    format!("intersection search failed at u1 = {u1} ({})", case.name()),
                );
            };
            let a = points.iter().find(|p| p.label == PointLabel::A).unwrap();
            let gap = ((a.zeta * 0.5).tan() - k * (u1 * 0.5).tan()).abs();
            worst = worst.max(gap);
        }
    }
    Check::new(
        "A law: tan(zeta/2) = k tan(u1/2), k in {sqrt2-2, sqrt2+2}",
        worst < tol::LAW_AGREEMENT,
        format!("worst law gap {worst:.3e} over 2x50 samples"),
    )
}

/// Criterion 4: the C point stays on the ζ = 0 axis in all four cases
/// and assembles into a valid rigid square-twist state.
pub fn check_c_degeneracy() -> Check {
    let mut worst_zeta = 0.0f64;
    let mut worst_closure = 0.0f64;
    for case in CaseSpec::ALL {
        for u1 in u1_samples() {
            let Ok(points) = find_intersections(u1, case) else {
                return Check::new(
                    "C degeneracy: |zeta_C| < 1e-9, valid square-twist state",
                    false,
                    format!("intersection search failed at u1 = {u1} ({})", case.name()),
                );
            };
            let c = points.iter().find(|p| p.label == PointLabel::C).unwrap();
            worst_zeta = worst_zeta.max(c.zeta.abs());
            match assemble(u1, c.zeta, case, (c.branch_v3, c.branch_v4)) {
                Ok(cfg) => {
                    for r in vertex_closure_residuals(&cfg) {
                        worst_closure = worst_closure.max(r);
                    }
                }
                Err(_) => worst_closure = f64::INFINITY,
            }
        }
    }
    Check::new(
        "C degeneracy: |zeta_C| < 1e-9, valid square-twist state",
        worst_zeta < tol::C_POINT_ZETA && worst_closure < tol::CONFIG_CLOSURE,
        format!("worst |zeta_C| {worst_zeta:.3e}, worst closure {worst_closure:.3e}"),
    )
}

/// Criterion 5: every case's B trace stays at least 0.5 rad from the
/// origin in max-norm.
pub fn check_b_disconnection() -> Check {
    let mut min_norm = f64::INFINITY;
    for case in CaseSpec::ALL {
        let mode = labeled_mode(case, PointLabel::B);
        let Ok(trace) = trace_mode(&mode, (0.02, PI), 0.02) else {
            return Check::new(
                "B disconnection: min distance to origin > 0.5 rad",
                false,
                format!("B trace failed for case {}", case.name()),
            );
        };
        for s in &trace.samples {
            min_norm = min_norm.min(s.config.max_norm());
        }
    }
    Check::new(
        "B disconnection: min distance to origin > 0.5 rad",
        min_norm > 0.5,
        format!("min max-norm over B traces {min_norm:.6}"),
    )
}

/// Criterion 6: exactly three labeled points at the reference inputs.
pub fn check_intersection_count() -> Check {
    let ok1 = find_intersections(1.6, CaseSpec::CASE1)
        .map(|p| p.len() == 3)
        .unwrap_or(false);
    let ok2 = find_intersections(0.4, CaseSpec::CASE2)
        .map(|p| p.len() == 3)
        .unwrap_or(false);
    Check::new(
        "intersections: exactly 3 labeled points at the reference inputs",
        ok1 && ok2,
        format!("case 1 at u1=1.6: {ok1}; case 2 at u1=0.4: {ok2}"),
    )
}

/// Criterion 7: tangent degree of freedom is 1 at 20 generic trace
/// points; the origin is a singular point.
pub fn check_tangent_dof() -> Check {
    let mut dofs = Vec::new();
    for case in CaseSpec::ALL {
        let trace = match trace_mode(&a_mode(case), (0.3, 2.8), 0.5) {
            Ok(t) => t,
            Err(_) => {
                return Check::new(
                    "tangent DOF: 1 on traces, singular origin",
                    false,
                    format!("A trace failed for case {}", case.name()),
                )
            }
        };
        for s in trace.samples.iter().take(5) {
            dofs.push(tangent_dof(&s.config));
        }
    }
    let origin = tangent_dof(&Configuration::<f64>::zero());
    let all_one = dofs.len() >= 20 && dofs.iter().all(|&d| d == 1);
    Check::new(
        "tangent DOF: 1 on traces, singular origin",
        all_one && origin > 1,
        format!(
            "{} generic points all 1: {all_one}; origin kernel {origin}",
            dofs.len()
        ),
    )
}

/// Criterion 8: every non-degenerate trace ends flat; the diagonal ends
/// folded in half on the pure A modes and back at zero on the hybrid.
pub fn check_flat_endpoints() -> Check {
    let mut detail = String::new();
    let mut ok = true;
    for case in CaseSpec::ALL {
        let trace = match trace_mode(&a_mode(case), (0.01, PI), 0.01) {
            Ok(t) => t,
            Err(_) => {
                return Check::new(
                    "flat endpoints: non-degenerate traces end flat",
                    false,
                    format!("A trace failed for case {}", case.name()),
                )
            }
        };
        let last = trace.samples.last().unwrap().config;
        let flat = is_flat(&last, 1e-6) && trace.truncated.is_none();
        ok &= flat;
        detail.push_str(&format!(
            "case {}: flat {flat}, terminal zeta {:+.6}; ",
            case.name(),
            last.zeta
        ));
        // pure A modes end with the diagonal folded in half
        ok &= (last.zeta.abs() - PI).abs() < 1e-6;
    }
    match hybrid_iso_area_trace::<f64>(0.01) {
        Ok(h) => {
            let last = h.curve.samples.last().unwrap().config;
            let flat = is_flat(&last, 1e-6) && last.zeta.abs() < 1e-6;
            ok &= flat;
            detail.push_str(&format!(
                "hybrid: flat {flat}, terminal zeta {:+.6}",
                last.zeta
            ));
        }
        Err(_) => {
            ok = false;
            detail.push_str("hybrid trace failed");
        }
    }
    Check::new("flat endpoints: non-degenerate traces end flat", ok, detail)
}

/// Criterion 9: the hybrid trajectory exists, switches where both point
/// laws agree, and terminates in the flat iso-area state.
pub fn check_hybrid_trace() -> Check {
    let h = match hybrid_iso_area_trace::<f64>(0.01) {
        Ok(h) => h,
        Err(e) => {
            return Check::new(
                "hybrid: A-then-B trace to the iso-area flat state",
                false,
                format!("trace failed: {e}"),
            )
        }
    };
    let za = crate::loopsolver::zeta_a_closed_form(h.switch_u1, CaseSpec::CASE2);
    let zb = zeta_b_closed_form(h.switch_u1);
    let law_gap = (za - zb).abs().max((h.switch_zeta - za).abs());
    let first = h.curve.samples.first().unwrap().config.max_norm();
    let last = h.curve.samples.last().unwrap().config;
    let square_twist_folded = [last.u1, last.u2, last.phi1, last.phi2]
        .iter()
        .all(|a| (a.abs() - PI).abs() < 1e-6);
    let ok = law_gap < 1e-8 && last.zeta.abs() < 1e-6 && square_twist_folded && first < 0.1;
    Check::new(
        "hybrid: A-then-B trace to the iso-area flat state",
        ok,
        format!(
            "switch u1 {:.9}, law gap {law_gap:.3e}, terminal zeta {:+.3e}",
            h.switch_u1, last.zeta
        ),
    )
}

/// Criterion 10: global embedding closure along every emitted trace.
pub fn check_embedding_closure() -> Check {
    let pattern = build_pattern(1.0f64);
    let diameter = pattern.diameter();
    let mut worst = 0.0f64;
    let mut count = 0usize;
    let mut traces: Vec<TraceCurve<f64>> = Vec::new();
    for case in CaseSpec::ALL {
        for label in PointLabel::ALL {
            if let Ok(t) = trace_mode(&labeled_mode(case, label), (0.05, PI), 0.05) {
                traces.push(t);
            } else {
                return Check::new(
                    "embedding: mismatch < 1e-8 x diameter on all traces",
                    false,
                    format!("{:?} trace failed for case {}", label, case.name()),
                );
            }
        }
    }
    if let Ok(h) = hybrid_iso_area_trace::<f64>(0.05) {
        traces.push(h.curve);
    }
    for t in &traces {
        for s in &t.samples {
            worst = worst.max(embed(&pattern, &s.config).mismatch);
            count += 1;
        }
    }
    Check::new(
        "embedding: mismatch < 1e-8 x diameter on all traces",
        worst < tol::EMBED_MISMATCH_REL * diameter,
        format!("worst mismatch {worst:.3e} over {count} embedded samples"),
    )
}

/// Rotation-algebra invariants: orthogonality, unit determinant, norm
/// preservation, inverse pairs.
pub fn check_rotation_invariants() -> Check {
    let mut rng = SplitMix64::new(7);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let (theta, rho) = (rng.angle(), rng.angle());
        let m = fold_about_planar_crease(theta, rho);
        worst = worst.max(m.orthogonality_defect());
        worst = worst.max((m.det() - 1.0).abs());
        let inv = m * fold_about_planar_crease(theta, -rho);
        worst = worst.max(inv.max_abs_diff(&Mat3::identity()));
    }
    Check::new(
        "rotations: orthogonal, det 1, inverse pairs (1e-12)",
        worst < tol::ROTATION_ORTHO,
        format!("worst defect {worst:.3e}"),
    )
}

/// Degree-4 invariants: round trip, monotonicity, exact sign patterns.
pub fn check_degree4_invariants() -> Check {
    let mut rng = SplitMix64::new(9);
    let mut worst = 0.0f64;
    let mut patterns_exact = true;
    for _ in 0..1000 {
        let a = rng.angle();
        for mode in [Mode::Mode1, Mode::Mode2] {
            let b = partner_angle(a, mode, PairInput::Driving);
            worst = worst.max((partner_angle(b, mode, PairInput::Partner) - a).abs());
            let s = crate::degree4::full_vertex_state(a, mode);
            patterns_exact &= match mode {
                Mode::Mode1 => s.outer_a == -s.partner && s.outer_b == s.driving,
                Mode::Mode2 => s.outer_a == s.partner && s.outer_b == -s.driving,
            };
        }
    }
    Check::new(
        "degree-4: round trip 1e-12, exact mode sign patterns",
        worst < 1e-12 && patterns_exact,
        format!("worst round trip {worst:.3e}, patterns exact {patterns_exact}"),
    )
}

/// Degree-5 invariants: branch symmetry at v3 and five-crease closure at
/// both vertices.
pub fn check_degree5_invariants() -> Check {
    let mut rng = SplitMix64::new(11);
    let mut closure_worst = 0.0f64;
    let mut symmetric = true;
    let mut n = 0;
    while n < 1000 {
        let (u, z) = (rng.angle(), rng.angle());
        let Ok(plus) = psi_from(VertexId::V3, u, z, Branch::Plus) else {
            continue;
        };
        n += 1;
        symmetric &= psi_from(VertexId::V3, u, z, Branch::Minus).unwrap() == -plus;
        for vertex in [VertexId::V3, VertexId::V4] {
            for br in [Branch::Plus, Branch::Minus] {
                if let Ok(s) = solve(vertex, u, z, br) {
                    closure_worst = closure_worst.max(closure_residual(vertex, &s));
                }
            }
        }
    }
    Check::new(
        "degree-5: v3 branch symmetry, closure 1e-10 at both vertices",
        symmetric && closure_worst < tol::VERTEX_CLOSURE,
        format!("closure worst {closure_worst:.3e}, symmetry exact {symmetric}"),
    )
}

/// Loop-solver invariants: three labeled points everywhere, points on
/// their laws, A and B on the u₂ line in the same-mode cases.
pub fn check_loopsolver_invariants() -> Check {
    let mut worst_line = 0.0f64;
    let mut all_three = true;
    for case in CaseSpec::ALL {
        for u1 in u1_samples() {
            match find_intersections(u1, case) {
                Ok(points) => {
                    all_three &= points.len() == 3;
                    if matches!(case, CaseSpec { .. }) && case.mode_v1 == case.mode_v2 {
                        let line = case.u2_from_u1(u1);
                        for p in &points {
                            if p.label != PointLabel::C {
                                let phi1 = crate::degree5::phi_from(
                                    VertexId::V3,
                                    u1,
                                    p.zeta,
                                    p.branch_v3,
                                )
                                .unwrap();
                                worst_line = worst_line.max(dist(phi1, line));
                            }
                        }
                    }
                }
                Err(_) => all_three = false,
            }
        }
    }
    Check::new(
        "loop solver: 3 labeled points, A/B on the u2 line (same-mode)",
        all_three && worst_line < tol::LAW_AGREEMENT,
        format!("all three {all_three}, worst line gap {worst_line:.3e}"),
    )
}

/// Trace invariants: continuity bound and all-sample validity on the
/// four A modes.
pub fn check_trace_invariants() -> Check {
    let step = 0.01f64;
    let mut worst_jump = 0.0f64;
    let mut valid = true;
    for case in CaseSpec::ALL {
        let Ok(trace) = trace_mode(&a_mode(case), (0.01, PI), step) else {
            return Check::new(
                "traces: continuity < 5 steps, every sample valid",
                false,
                format!("A trace failed for case {}", case.name()),
            );
        };
        for w in trace.samples.windows(2) {
            worst_jump = worst_jump.max(w[0].config.max_circle_dist(&w[1].config));
        }
        for s in &trace.samples {
            valid &= vertex_closure_residuals(&s.config).iter().all(|&r| r < 1e-9);
        }
    }
    Check::new(
        "traces: continuity < 5 steps, every sample valid",
        worst_jump < 5.0 * step && valid,
        format!("worst step jump {worst_jump:.4}, all valid {valid}"),
    )
}

/// Diagnostic: distinct ζ = 0 curves through the origin (the plain
/// square twist's rigid foldings). Reported, not gated.
pub fn check_zeta_zero_curves() -> Check {
    let n = crate::configspace::degenerate_zeta_zero_curve_count::<f64>();
    Check::new(
        "diagnostic: distinct zeta = 0 origin curves",
        true,
        format!("found {n} (1 + 1 from the same-mode cases, 2 + 2 from the mixed ones)"),
    )
}

/// Runs the full suite in a fixed order.
pub fn run_all() -> Vec<Check> {
    vec![
        check_mode_count(),
        check_psi_oracle(),
        check_a_point_law(),
        check_c_degeneracy(),
        check_b_disconnection(),
        check_intersection_count(),
        check_tangent_dof(),
        check_flat_endpoints(),
        check_hybrid_trace(),
        check_embedding_closure(),
        check_rotation_invariants(),
        check_degree4_invariants(),
        check_degree5_invariants(),
        check_loopsolver_invariants(),
        check_trace_invariants(),
        check_zeta_zero_curves(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_checks_pass() {
        // the cheap subset; the full suite runs in the acceptance tests
        for c in [
            check_intersection_count(),
            check_rotation_invariants(),
            check_degree4_invariants(),
        ] {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
