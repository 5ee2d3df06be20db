//! Command-line front end: reproduce the intersection diagrams as data,
//! enumerate folding modes, trace and export foldings, and run the
//! verification suite.
//!
//! Exit codes: 0 success, 1 verification or anomaly failure, 2 usage
//! error.

use augtwist::configspace::{
    assemble, enumerate_origin_modes, hybrid_iso_area_trace, trace_mode, Classification,
    FoldingMode, TraceCurve,
};
use augtwist::degree5::{phi_from, VertexId};
use augtwist::embedding::{build_pattern, embed};
use augtwist::export::{self};
use augtwist::loopsolver::{find_intersections, CaseSpec, PointLabel};
use augtwist::verification;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::f64::consts::PI;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "augtwist",
    about = "Rigid-folding kinematics of the augmented square twist",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CaseArg {
    #[value(name = "1")]
    Case1,
    #[value(name = "2")]
    Case2,
    #[value(name = "3a")]
    Case3a,
    #[value(name = "3b")]
    Case3b,
}

impl CaseArg {
    fn spec(self) -> CaseSpec {
        match self {
            CaseArg::Case1 => CaseSpec::CASE1,
            CaseArg::Case2 => CaseSpec::CASE2,
            CaseArg::Case3a => CaseSpec::CASE3A,
            CaseArg::Case3b => CaseSpec::CASE3B,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    A,
    B,
    C,
    Hybrid,
    FoldInHalf,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
struct AngleUnit {
    /// Interpret input angles as degrees instead of radians.
    #[arg(long, global = true)]
    degrees: bool,
}

impl AngleUnit {
    fn to_radians(&self, v: f64) -> f64 {
        if self.degrees {
            v.to_radians()
        } else {
            v
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Table of the A/B/C intersection points at a fixed driving angle.
    Intersections {
        /// Degree-4 mode case: 1, 2, 3a, or 3b.
        #[arg(long)]
        case: CaseArg,
        /// Driving angle u1 (nonzero).
        #[arg(long)]
        u1: f64,
        /// Write CSV here instead of a table on stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        unit: AngleUnit,
    },
    /// CSV of the phi1 branches and the transformed phi2 branches over zeta.
    Curves {
        #[arg(long)]
        case: CaseArg,
        #[arg(long)]
        u1: f64,
        /// Number of zeta samples.
        #[arg(long, default_value_t = 1024)]
        samples: usize,
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        unit: AngleUnit,
    },
    /// Trace a folding mode and emit it as CSV or JSON.
    Trace {
        #[arg(long)]
        case: CaseArg,
        /// Mode to trace: a, b, c, hybrid (case 2), or fold-in-half.
        #[arg(long)]
        mode: ModeArg,
        /// Driving-angle step.
        #[arg(long, default_value_t = 0.01)]
        step: f64,
        /// End of the driving-angle range (default pi).
        #[arg(long)]
        u1_max: Option<f64>,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        unit: AngleUnit,
    },
    /// Classification table of the folding modes through the origin.
    Modes,
    /// Fold a mode at a driving angle and export the 3D state as OBJ.
    Embed {
        #[arg(long)]
        case: CaseArg,
        /// Point label a, b, or c.
        #[arg(long)]
        mode: ModeArg,
        #[arg(long)]
        u1: f64,
        /// Pattern scale (central square side length).
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        /// Output OBJ path.
        #[arg(long)]
        output: PathBuf,
        #[command(flatten)]
        unit: AngleUnit,
    },
    /// Run the full invariant suite; nonzero exit on any failure.
    Verify,
}

/// Entry point returning the process exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders help/version as "errors" with success status
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Intersections {
            case,
            u1,
            output,
            unit,
        } => cmd_intersections(case.spec(), unit.to_radians(u1), output),
        Command::Curves {
            case,
            u1,
            samples,
            output,
            unit,
        } => cmd_curves(case.spec(), unit.to_radians(u1), samples, output),
        Command::Trace {
            case,
            mode,
            step,
            u1_max,
            format,
            output,
            unit,
        } => cmd_trace(
            case.spec(),
            mode,
            unit.to_radians(step),
            u1_max.map(|v| unit.to_radians(v)),
            format,
            output,
        ),
        Command::Modes => cmd_modes(),
        Command::Embed {
            case,
            mode,
            u1,
            scale,
            output,
            unit,
        } => cmd_embed(case.spec(), mode, unit.to_radians(u1), scale, output),
        Command::Verify => cmd_verify(),
    }
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn failure(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_FAILURE
}

fn write_or_print(output: Option<PathBuf>, content: &str) -> i32 {
    match output {
        None => {
            print!("{content}");
            EXIT_OK
        }
        Some(path) => match std::fs::write(&path, content) {
            Ok(()) => EXIT_OK,
            Err(e) => failure(&format!("{}: {e}", path.display())),
        },
    }
}

fn cmd_intersections(case: CaseSpec, u1: f64, output: Option<PathBuf>) -> i32 {
    if u1 == 0.0 {
        return usage_error("u1 = 0 is degenerate; pick a nonzero driving angle");
    }
    let points = match find_intersections(u1, case) {
        Ok(p) => p,
        Err(e) => return failure(&format!("{e}")),
    };
    let mut out = String::from("label,zeta,branch_v3,branch_v4,residual,degenerate\n");
    for p in &points {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            p.label.name(),
            p.zeta,
            p.branch_v3.symbol(),
            p.branch_v4.symbol(),
            p.residual,
            p.degenerate
        ));
    }
    let code = write_or_print(output, &out);
    if code != EXIT_OK {
        return code;
    }
    if points.len() == 3 {
        EXIT_OK
    } else {
        failure(&format!("expected 3 labeled points, found {}", points.len()))
    }
}

fn cmd_curves(case: CaseSpec, u1: f64, samples: usize, output: Option<PathBuf>) -> i32 {
    if u1 == 0.0 {
        return usage_error("u1 = 0 is degenerate; pick a nonzero driving angle");
    }
    if samples < 2 {
        return usage_error("need at least 2 samples");
    }
    let u2 = case.u2_from_u1(u1);
    let mut out =
        String::from("zeta,phi1_plus,phi1_minus,transformed_phi2_plus,transformed_phi2_minus\n");
    let fmt = |v: augtwist::Result<f64>, transform: bool| -> String {
        match v {
            Ok(phi) => {
                let y = if transform {
                    case.phi1_demanded(phi)
                } else {
                    phi
                };
                format!("{y}")
            }
            Err(_) => String::new(), // outside the feasible region
        }
    };
    for i in 0..samples {
        let zeta = -PI + 2.0 * PI * (i as f64) / (samples as f64);
        out.push_str(&format!(
            "{zeta},{},{},{},{}\n",
            fmt(
                phi_from(VertexId::V3, u1, zeta, augtwist::degree5::Branch::Plus),
                false
            ),
            fmt(
                phi_from(VertexId::V3, u1, zeta, augtwist::degree5::Branch::Minus),
                false
            ),
            fmt(
                phi_from(VertexId::V4, u2, zeta, augtwist::degree5::Branch::Plus),
                true
            ),
            fmt(
                phi_from(VertexId::V4, u2, zeta, augtwist::degree5::Branch::Minus),
                true
            ),
        ));
    }
    write_or_print(output, &out)
}

fn labeled_mode(case: CaseSpec, label: PointLabel) -> FoldingMode {
    FoldingMode {
        case,
        point_label: Some(label),
        direction: 1,
        classification: match label {
            PointLabel::A => Classification::NonDegenerate,
            PointLabel::B => Classification::DisconnectedFromOrigin,
            PointLabel::C => Classification::DegenerateZetaZero,
        },
    }
}

fn cmd_trace(
    case: CaseSpec,
    mode: ModeArg,
    step: f64,
    u1_max: Option<f64>,
    format: FormatArg,
    output: Option<PathBuf>,
) -> i32 {
    if step <= 0.0 {
        return usage_error("step must be positive");
    }
    let end = u1_max.unwrap_or(PI);
    if end <= step {
        return usage_error("u1-max must exceed the step");
    }
    let trace: TraceCurve<f64> = match mode {
        ModeArg::Hybrid => {
            if case != CaseSpec::CASE2 {
                return usage_error("the hybrid mode is a case-2 folding; use --case 2");
            }
            match hybrid_iso_area_trace(step) {
                Ok(h) => h.curve,
                Err(e) => return failure(&format!("{e}")),
            }
        }
        ModeArg::FoldInHalf => {
            let m = FoldingMode {
                case,
                point_label: None,
                direction: 1,
                classification: Classification::FoldInHalf,
            };
            match trace_mode(&m, (0.0, end), step) {
                Ok(t) => t,
                Err(e) => return failure(&format!("{e}")),
            }
        }
        ModeArg::A | ModeArg::B | ModeArg::C => {
            let label = match mode {
                ModeArg::A => PointLabel::A,
                ModeArg::B => PointLabel::B,
                _ => PointLabel::C,
            };
            match trace_mode(&labeled_mode(case, label), (step, end), step) {
                Ok(t) => t,
                Err(e) => return failure(&format!("{e}")),
            }
        }
    };
    if let Some(reason) = &trace.truncated {
        eprintln!("warning: {reason}");
    }
    let content = match format {
        FormatArg::Csv => export::trace_csv(&trace),
        FormatArg::Json => export::trace_json(&trace),
    };
    write_or_print(output, &content)
}

fn cmd_modes() -> i32 {
    let modes = enumerate_origin_modes::<f64>();
    println!("case  point  classification");
    for m in &modes {
        println!(
            "{:<5} {:<6} {:?}",
            m.case.name(),
            m.point_label.map(|l| l.name()).unwrap_or("-"),
            m.classification
        );
    }
    let non_degenerate = modes
        .iter()
        .filter(|m| m.classification == Classification::NonDegenerate)
        .count();
    let zeta_zero = augtwist::configspace::degenerate_zeta_zero_curve_count::<f64>();
    println!("non-degenerate modes through the origin: {non_degenerate}");
    println!("distinct zeta = 0 curves through the origin: {zeta_zero}");
    if non_degenerate == 4 {
        EXIT_OK
    } else {
        failure(&format!("expected 4 non-degenerate modes, found {non_degenerate}"))
    }
}

fn cmd_embed(case: CaseSpec, mode: ModeArg, u1: f64, scale: f64, output: PathBuf) -> i32 {
    if u1 == 0.0 {
        return usage_error("u1 = 0 is degenerate; pick a nonzero driving angle");
    }
    if scale <= 0.0 {
        return usage_error("scale must be positive");
    }
    let label = match mode {
        ModeArg::A => PointLabel::A,
        ModeArg::B => PointLabel::B,
        ModeArg::C => PointLabel::C,
        _ => return usage_error("embed takes a point mode: a, b, or c"),
    };
    let points = match find_intersections(u1, case) {
        Ok(p) => p,
        Err(e) => return failure(&format!("{e}")),
    };
    let Some(p) = points.iter().find(|p| p.label == label) else {
        return failure(&format!("no {} point at u1 = {u1}", label.name()));
    };
    let config = match assemble(u1, p.zeta, case, (p.branch_v3, p.branch_v4)) {
        Ok(c) => c,
        Err(e) => return failure(&format!("{e}")),
    };
    let pattern = build_pattern(scale);
    let state = embed(&pattern, &config);
    eprintln!(
        "embedded {} point of case {} at u1 = {u1}: mismatch {:.3e} (diameter {:.3})",
        label.name(),
        case.name(),
        state.mismatch,
        pattern.diameter()
    );
    match export::export_obj(&pattern, &state, &output) {
        Ok(()) => EXIT_OK,
        Err(e) => failure(&format!("{e}")),
    }
}

fn cmd_verify() -> i32 {
    let checks = verification::run_all();
    let mut failed = 0;
    for c in &checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        println!("{status}  {} — {}", c.name, c.detail);
        if !c.passed {
            failed += 1;
        }
    }
    println!("{} checks, {} failed", checks.len(), failed);
    if failed == 0 {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}
