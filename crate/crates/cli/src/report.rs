//! JSON report layout. Sections that do not apply to a command are omitted.

use serde::Serialize;

use projclose::{
    AxiomReport, Classification, ClosureTrace, DegenerateShape, DensityReport, HLine, HPoint,
};

use crate::config::RunConfig;

/// Integer coordinates as decimal strings; they may exceed any fixed width.
pub type PointJson = [String; 3];

pub fn point_json(p: &HPoint) -> PointJson {
    p.coords().clone().map(|c| c.to_string())
}

fn line_json(l: &HLine) -> PointJson {
    point_json(l.normal())
}

#[derive(Serialize)]
pub struct Report<'a> {
    pub config: &'a RunConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub density: Option<Vec<DensityRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axioms: Option<AxiomsJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stabilized: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cap_hit: Option<&'static str>,
}

impl<'a> Report<'a> {
    pub fn new(config: &'a RunConfig) -> Self {
        Report {
            config,
            classification: None,
            trace: None,
            density: None,
            axioms: None,
            stabilized: None,
            cap_hit: None,
        }
    }
}

#[derive(Serialize)]
pub struct ClassificationJson {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<usize>,
}

impl From<&Classification> for ClassificationJson {
    fn from(c: &Classification) -> Self {
        ClassificationJson {
            kind: c.kind.as_str(),
            witness: c.witness,
        }
    }
}

#[derive(Serialize)]
pub struct TraceRow {
    pub level: u32,
    pub points: usize,
    pub new_points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ms: Option<f64>,
}

pub fn trace_rows(trace: &ClosureTrace, timing: bool) -> Vec<TraceRow> {
    trace
        .levels
        .iter()
        .map(|l| TraceRow {
            level: l.level,
            points: l.points,
            new_points: l.new_points,
            ms: timing.then_some(l.elapsed.as_secs_f64() * 1e3),
        })
        .collect()
}

#[derive(Serialize)]
pub struct DensityRow {
    pub level: u32,
    pub covering_radius: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_separation: Option<f64>,
}

pub fn density_rows(report: &DensityReport) -> Vec<DensityRow> {
    report
        .levels
        .iter()
        .map(|l| DensityRow {
            level: l.level,
            covering_radius: l.covering_radius,
            min_separation: l.min_separation,
        })
        .collect()
}

#[derive(Serialize)]
pub struct ShapeJson {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<PointJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub apex: Option<PointJson>,
}

impl From<&DegenerateShape> for ShapeJson {
    fn from(s: &DegenerateShape) -> Self {
        let (line, apex) = match s {
            DegenerateShape::CollinearSet { line } => (line.as_ref().map(line_json), None),
            DegenerateShape::LinePlusPoint { line, apex } => {
                (Some(line_json(line)), Some(point_json(apex)))
            }
            DegenerateShape::NotDegenerate => (None, None),
        };
        ShapeJson {
            kind: s.as_str(),
            line,
            apex,
        }
    }
}

#[derive(Serialize)]
pub struct AxiomsJson {
    pub p1_checked: usize,
    pub p1_failures: usize,
    pub p2_checked: usize,
    pub p2_failures: usize,
    pub p2_open: usize,
    pub p3_found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p3_witness: Option<Vec<PointJson>>,
    pub ortho_closed_checked: usize,
    pub ortho_closed_failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degenerate_shape: Option<ShapeJson>,
}

impl AxiomsJson {
    pub fn new(r: &AxiomReport, shape: Option<&DegenerateShape>) -> Self {
        AxiomsJson {
            p1_checked: r.p1_checked,
            p1_failures: r.p1_failures,
            p2_checked: r.p2_checked,
            p2_failures: r.p2_failures,
            p2_open: r.p2_open,
            p3_found: r.p3_found,
            p3_witness: r
                .p3_witness
                .as_ref()
                .map(|q| q.iter().map(point_json).collect()),
            ortho_closed_checked: r.ortho_closed_checked,
            ortho_closed_failures: r.ortho_closed_failures,
            degenerate_shape: shape.map(ShapeJson::from),
        }
    }
}
