use orient_light::io::DecimalWeights;
use orient_light::reduction::ReducedGraph;
use orient_light::solver::Reduction;
use orient_light::{Graph, Solution};
use serde::{Deserialize, Serialize};
use serde_json::Number;

#[derive(Serialize, Deserialize)]
pub struct CertificateJson {
    pub matching_value: Number,
    pub constant: Number,
    pub offset: Number,
}

/// A solution with 1-based labels.
#[derive(Serialize, Deserialize)]
pub struct SolutionJson {
    pub objective: Number,
    pub light: Vec<usize>,
    pub orientation: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
}

fn number(w: &DecimalWeights, value: i64) -> Number {
    if w.scale == 0 {
        Number::from(value)
    } else {
        let x: f64 = w.format(value).parse().expect("formatted decimal");
        Number::from_f64(x).expect("finite")
    }
}

impl SolutionJson {
    pub fn from_solution(g: &Graph, s: &Solution<i64>, w: &DecimalWeights) -> Self {
        SolutionJson {
            objective: number(w, s.objective),
            light: s.light.iter().map(|v| v + 1).collect(),
            orientation: s.orientation.arcs(g).into_iter().map(|(t, h)| [t + 1, h + 1]).collect(),
            certificate: Some(CertificateJson {
                matching_value: number(w, s.certificate.matching_value),
                constant: number(w, s.certificate.constant),
                offset: number(w, s.certificate.offset),
            }),
        }
    }
}

/// Bookkeeping for a dumped `G'`; ids are 0-based.
#[derive(Serialize)]
pub struct Sidecar<'a> {
    /// Core vertex -> vertex of the padded input graph.
    pub core_to_padded: &'a [usize],
    pub isolated: &'a [usize],
    pub pendant_cycles: Vec<PendantJson>,
    pub reduced: &'a ReducedGraph<i64>,
}

#[derive(Serialize)]
pub struct PendantJson {
    pub anchor: usize,
    pub vertices: [usize; 3],
}

impl<'a> Sidecar<'a> {
    pub fn new(r: &'a Reduction<i64>) -> Self {
        Sidecar {
            core_to_padded: &r.core.to_parent,
            isolated: &r.core.isolated,
            pendant_cycles: r
                .padded
                .added_cycles
                .iter()
                .map(|c| PendantJson {
                    anchor: c.anchor,
                    vertices: c.vertices,
                })
                .collect(),
            reduced: &r.reduced,
        }
    }
}
