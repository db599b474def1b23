//! JSON documents for schedules and dynamic graphs.
//!
//! ```json
//! {"format": "maqaoa-walk/1", "n": 2,
//!  "layers": [{"gamma": [3.14, ...], "beta": [{"u": 0, "w": 2, "angle": 0.785}]}]}
//!
//! {"format": "maqaoa-walk/1", "n": 1,
//!  "steps": [{"time": 4.71, "loops": [{"v": 1, "w": 1.0}], "edges": []}]}
//! ```

use serde::{Deserialize, Serialize};

use crate::ctqw::{DynamicGraph, WeightedGraph};
use crate::maqaoa::{BetaLayer, GammaLayer, Schedule};

use super::CliError;

pub const FORMAT_TAG: &str = "maqaoa-walk/1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleDoc {
    pub format: String,
    pub n: usize,
    pub layers: Vec<LayerDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LayerDoc {
    pub gamma: Vec<f64>,
    pub beta: Vec<EdgeAngleDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeAngleDoc {
    pub u: usize,
    pub w: usize,
    pub angle: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DynamicGraphDoc {
    pub format: String,
    pub n: usize,
    pub steps: Vec<StepDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepDoc {
    pub time: f64,
    #[serde(default)]
    pub loops: Vec<LoopDoc>,
    #[serde(default)]
    pub edges: Vec<EdgeDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopDoc {
    pub v: usize,
    pub w: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub u: usize,
    pub v: usize,
    pub w: f64,
}

fn check_format(tag: &str) -> Result<(), CliError> {
    if tag != FORMAT_TAG {
        return Err(CliError::Json(format!("unsupported format {tag:?}, expected {FORMAT_TAG:?}")));
    }
    Ok(())
}

impl From<&Schedule> for ScheduleDoc {
    fn from(s: &Schedule) -> Self {
        let layers = s
            .layers()
            .iter()
            .map(|(g, b)| LayerDoc {
                gamma: g.angles().to_vec(),
                beta: b.edge_angles().iter().map(|(e, &angle)| EdgeAngleDoc { u: e.u(), w: e.w(), angle }).collect(),
            })
            .collect();
        Self { format: FORMAT_TAG.to_string(), n: s.num_qubits(), layers }
    }
}

impl ScheduleDoc {
    pub fn to_schedule(&self) -> Result<Schedule, CliError> {
        check_format(&self.format)?;
        let layers = self
            .layers
            .iter()
            .map(|l| {
                let g = GammaLayer::new(l.gamma.clone())?;
                let b =
                    BetaLayer::from_triples(self.n, &l.beta.iter().map(|e| (e.u, e.w, e.angle)).collect::<Vec<_>>())?;
                Ok((g, b))
            })
            .collect::<crate::Result<Vec<_>>>()?;
        Ok(Schedule::new(self.n, layers)?)
    }
}

impl From<&DynamicGraph> for DynamicGraphDoc {
    fn from(dg: &DynamicGraph) -> Self {
        let steps = dg
            .steps()
            .iter()
            .map(|s| StepDoc {
                time: s.time,
                loops: s.graph.loops().iter().map(|(&v, &w)| LoopDoc { v, w }).collect(),
                edges: s.graph.edges().iter().map(|(&(u, v), &w)| EdgeDoc { u, v, w }).collect(),
            })
            .collect();
        Self { format: FORMAT_TAG.to_string(), n: dg.num_qubits(), steps }
    }
}

impl DynamicGraphDoc {
    pub fn to_dynamic_graph(&self) -> Result<DynamicGraph, CliError> {
        check_format(&self.format)?;
        let mut dg = DynamicGraph::empty(self.n)?;
        for s in &self.steps {
            let g = WeightedGraph::new(
                self.n,
                s.loops.iter().map(|l| (l.v, l.w)),
                s.edges.iter().map(|e| (e.u, e.v, e.w)),
            )?;
            dg.push(g, s.time)?;
        }
        Ok(dg)
    }
}

/// Either document kind, told apart by its `layers` or `steps` field.
#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Schedule(Schedule),
    DynamicGraph(DynamicGraph),
}

pub fn parse_document(text: &str) -> Result<Document, CliError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| CliError::Json(e.to_string()))?;
    if value.get("layers").is_some() {
        Ok(Document::Schedule(parse_schedule(text)?))
    } else if value.get("steps").is_some() {
        Ok(Document::DynamicGraph(parse_dynamic_graph(text)?))
    } else {
        Err(CliError::Json("document has neither \"layers\" nor \"steps\"".into()))
    }
}

pub fn parse_schedule(text: &str) -> Result<Schedule, CliError> {
    let doc: ScheduleDoc = serde_json::from_str(text).map_err(|e| CliError::Json(e.to_string()))?;
    doc.to_schedule()
}

pub fn parse_dynamic_graph(text: &str) -> Result<DynamicGraph, CliError> {
    let doc: DynamicGraphDoc = serde_json::from_str(text).map_err(|e| CliError::Json(e.to_string()))?;
    doc.to_dynamic_graph()
}

pub fn schedule_to_json(s: &Schedule) -> String {
    let mut out = serde_json::to_string_pretty(&ScheduleDoc::from(s)).expect("plain data serializes");
    out.push('\n');
    out
}

pub fn dynamic_graph_to_json(dg: &DynamicGraph) -> String {
    let mut out = serde_json::to_string_pretty(&DynamicGraphDoc::from(dg)).expect("plain data serializes");
    out.push('\n');
    out
}
