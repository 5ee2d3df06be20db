//! Geometry and trace export: Wavefront OBJ, CSV, and JSON.
//!
//! Numbers are written in shortest round-trip decimal form, so exported
//! traces re-import bit-identically and repeated runs are byte-identical.

use crate::configspace::{Configuration, TraceCurve};
use crate::embedding::{CreasePattern, FoldedState};
use crate::rotation::Vec3;
use crate::scalar::Real;
use crate::{crease::CREASE_ORDER, tol, Error, Result};
use std::fmt::Write as _;
use std::path::Path;

/// Trace serialization format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceFormat {
    Csv,
    Json,
}

/// Metadata block of a JSON trace file.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize, PartialEq)]
pub struct TraceMeta {
    /// Case name: "1", "2", "3a", "3b".
    pub case: String,
    /// Point label "A" | "B" | "C", absent for hybrid or fold-in-half.
    pub label: Option<String>,
    pub reaches_origin: bool,
    pub reaches_flat: bool,
    pub truncated: Option<String>,
}

/// One configuration record of a JSON trace file.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize, PartialEq)]
pub struct TraceRecord<T> {
    pub u1: T,
    pub angles: Configuration<T>,
}

/// JSON trace schema: metadata plus one record per sample.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize, PartialEq)]
pub struct TraceFile<T> {
    pub mode: TraceMeta,
    pub samples: Vec<TraceRecord<T>>,
}

impl<T: Real> TraceFile<T> {
    pub fn from_trace(trace: &TraceCurve<T>) -> Self {
        TraceFile {
            mode: TraceMeta {
                case: trace.case.name().to_string(),
                label: trace.label.map(|l| l.name().to_string()),
                reaches_origin: trace.reaches_origin,
                reaches_flat: trace.reaches_flat,
                truncated: trace.truncated.clone(),
            },
            samples: trace
                .samples
                .iter()
                .map(|s| TraceRecord {
                    u1: s.u1,
                    angles: s.config,
                })
                .collect(),
        }
    }
}

/// CSV header naming the 13 crease columns.
pub fn csv_header() -> String {
    CREASE_ORDER
        .iter()
        .map(|k| k.name())
        .collect::<Vec<_>>()
        .join(",")
}

/// A trace as CSV: fixed header, one row of 13 angles per sample.
pub fn trace_csv<T: Real>(trace: &TraceCurve<T>) -> String {
    let mut out = csv_header();
    out.push('\n');
    for s in &trace.samples {
        let row = s
            .config
            .as_array()
            .iter()
            .map(|a| format!("{a}"))
            .collect::<Vec<_>>()
            .join(",");
        out.push_str(&row);
        out.push('\n');
    }
    out
}

/// A trace as pretty-printed JSON.
pub fn trace_json<T: Real + serde::Serialize>(trace: &TraceCurve<T>) -> String {
    serde_json::to_string_pretty(&TraceFile::from_trace(trace)).expect("trace serialization")
}

fn write_file(path: &Path, content: &str) -> Result<()> {
    std::fs::write(path, content).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Writes a trace to `path` in the requested format.
pub fn export_trace<T: Real + serde::Serialize>(
    trace: &TraceCurve<T>,
    path: &Path,
    format: TraceFormat,
) -> Result<()> {
    let content = match format {
        TraceFormat::Csv => trace_csv(trace),
        TraceFormat::Json => trace_json(trace),
    };
    write_file(path, &content)
}

/// Reads a JSON trace file back.
pub fn import_trace_json<T: Real + serde::de::DeserializeOwned>(path: &Path) -> Result<TraceFile<T>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| Error::Json {
        path: path.display().to_string(),
        source,
    })
}

/// A folded state as Wavefront OBJ text: shared vertices deduplicated,
/// one object per face, faces in their counterclockwise pattern
/// orientation.
pub fn obj_string<T: Real>(pattern: &CreasePattern<T>, state: &FoldedState<T>) -> String {
    let dedup = T::of(tol::OBJ_VERTEX_DEDUP);
    let mut verts: Vec<Vec3<T>> = Vec::new();
    let mut face_indices: Vec<Vec<usize>> = Vec::new();
    for corners in &state.corners {
        let mut idxs = Vec::with_capacity(corners.len());
        for &c in corners {
            let found = verts.iter().position(|v| (*v - c).norm() < dedup);
            let i = match found {
                Some(i) => i,
                None => {
                    verts.push(c);
                    verts.len() - 1
                }
            };
            idxs.push(i + 1); // OBJ is 1-based
        }
        face_indices.push(idxs);
    }
    let mut out = String::new();
    for v in &verts {
        let _ = writeln!(out, "v {} {} {}", v.x, v.y, v.z);
    }
    for (face, idxs) in pattern.faces.iter().zip(&face_indices) {
        let _ = writeln!(out, "o {}", face.name);
        let list = idxs
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(out, "f {list}");
    }
    out
}

/// Writes a folded state to `path` as OBJ.
pub fn export_obj<T: Real>(
    pattern: &CreasePattern<T>,
    state: &FoldedState<T>,
    path: &Path,
) -> Result<()> {
    write_file(path, &obj_string(pattern, state))
}
