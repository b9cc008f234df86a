use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::clsgraph::ClassGraph;
use crate::error::{AtlasError, Result};
use crate::qpoly::Rational;
use crate::weier::WeierstrassModel;

/// A rational as a pair of decimal strings, so big values survive JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for RationalJson {
    fn from(r: &Rational) -> Self {
        RationalJson {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub text: String,
    /// a-invariants of the parsed model.
    pub a: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexReport {
    pub a: Vec<String>,
    pub j: RationalJson,
    pub torsion: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeReport {
    pub u: usize,
    pub v: usize,
    pub ell: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsReport {
    #[serde(rename = "C")]
    pub c: u32,
    #[serde(rename = "C_p")]
    pub c_p: BTreeMap<String, u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmReport {
    pub j: RationalJson,
    #[serde(rename = "dK")]
    pub d_k: i64,
}

/// Everything `classify` and `graph` print about a class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub input: InputEcho,
    pub vertices: Vec<VertexReport>,
    pub edges: Vec<EdgeReport>,
    pub shape: String,
    pub config: Vec<String>,
    pub counts: Vec<CountsReport>,
    pub cm: Option<CmReport>,
    pub table_row: String,
}

pub(crate) fn a_strings(e: &WeierstrassModel) -> Vec<String> {
    e.a_invariants().iter().map(|a| a.to_string()).collect()
}

impl GraphReport {
    pub fn new(input: &str, g: &ClassGraph) -> Result<Self> {
        let cls = g
            .classification
            .as_ref()
            .ok_or_else(|| AtlasError::invariant("class has not been classified"))?;
        Ok(GraphReport {
            input: InputEcho {
                text: input.to_string(),
                a: a_strings(&g.vertices[0].model),
            },
            vertices: g
                .vertices
                .iter()
                .map(|v| VertexReport {
                    a: a_strings(&v.model),
                    j: v.model.j_invariant().into(),
                    torsion: v.torsion.group.to_string(),
                })
                .collect(),
            edges: g
                .edges
                .iter()
                .map(|e| EdgeReport {
                    u: e.u,
                    v: e.v,
                    ell: e.ell,
                })
                .collect(),
            shape: cls.shape.to_string(),
            config: cls.config.labels(),
            counts: g
                .counts()
                .into_iter()
                .map(|c| CountsReport {
                    c: c.c,
                    c_p: c.c_p.into_iter().map(|(p, n)| (p.to_string(), n)).collect(),
                })
                .collect(),
            cm: g.cm.as_ref().map(|r| CmReport {
                j: (&r.j).into(),
                d_k: r.disc_k,
            }),
            table_row: cls.table_row.id(),
        })
    }

    /// Plain-text rendering.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "shape:     {}", self.shape);
        let _ = writeln!(s, "config:    ({})", self.config.join(","));
        let _ = writeln!(s, "table row: {}", self.table_row);
        match &self.cm {
            Some(cm) => {
                let _ = writeln!(s, "cm:        j = {}, d_K = {}", fmt_rational(&cm.j), cm.d_k);
            }
            None => {
                let _ = writeln!(s, "cm:        none");
            }
        }
        let _ = writeln!(s, "vertices:");
        for (i, (v, c)) in self.vertices.iter().zip(&self.counts).enumerate() {
            let cp: Vec<String> = c.c_p.iter().map(|(p, n)| format!("C_{p}={n}")).collect();
            let _ = writeln!(
                s,
                "  {i}: [{}]  j = {}  torsion {}  C={} {}",
                v.a.join(","),
                fmt_rational(&v.j),
                v.torsion,
                c.c,
                cp.join(" ")
            );
        }
        if !self.edges.is_empty() {
            let _ = writeln!(s, "edges:");
            for e in &self.edges {
                let _ = writeln!(s, "  {} -- {}  ({})", e.u, e.v, e.ell);
            }
        }
        s
    }
}

fn fmt_rational(r: &RationalJson) -> String {
    if r.den == "1" {
        r.num.clone()
    } else {
        format!("{}/{}", r.num, r.den)
    }
}

/// Undirected DOT graph: vertices labelled by torsion, edges by degree.
pub fn emit_dot(report: &GraphReport) -> String {
    let mut s = String::from("graph isogeny_class {\n");
    for (i, v) in report.vertices.iter().enumerate() {
        let _ = writeln!(s, "  {i} [label=\"{}\"];", v.torsion);
    }
    for e in &report.edges {
        let _ = writeln!(s, "  {} -- {} [label=\"{}\"];", e.u, e.v, e.ell);
    }
    s.push_str("}\n");
    s
}
