//! Graph JSON: `{"omega":[..],"edges":[{"from":i,"to":j,"weight":"bits"}]}`
//! with 1-indexed vertices. Output lists edges ordered by `(from, to)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::Gf2Vector;
use crate::vwdigraph::{DimensionFunction, VwDigraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDocument {
    pub from: usize,
    pub to: usize,
    pub weight: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub omega: Vec<usize>,
    pub edges: Vec<EdgeDocument>,
}

impl GraphDocument {
    pub fn from_graph(g: &VwDigraph) -> Self {
        Self {
            omega: g.omega().dims().to_vec(),
            edges: g
                .edges()
                .map(|(i, j, w)| EdgeDocument {
                    from: i + 1,
                    to: j + 1,
                    weight: w.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<VwDigraph> {
        let omega = DimensionFunction::new(self.omega.clone())?;
        let m = omega.vertex_count();
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            for v in [e.from, e.to] {
                if v == 0 || v > m {
                    return Err(Error::VertexOutOfRange { vertex: v, count: m });
                }
            }
            let w: Gf2Vector = e.weight.parse()?;
            if w.dim() != omega.dim(e.from - 1) {
                return Err(Error::InvalidGraph(format!(
                    "weight {:?} on {} -> {} must have {} coordinates",
                    e.weight,
                    e.from,
                    e.to,
                    omega.dim(e.from - 1)
                )));
            }
            if e.from == e.to {
                return Err(Error::InvalidGraph(format!("self-loop at {}", e.from)));
            }
            edges.push((e.from - 1, e.to - 1, w));
        }
        VwDigraph::from_edges(omega, edges)
    }
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

pub fn parse_graph(text: &str) -> Result<VwDigraph> {
    serde_json::from_str::<GraphDocument>(text)
        .map_err(parse_error)?
        .to_graph()
}

/// Pretty-printed graph JSON with a trailing newline.
pub fn graph_to_json(g: &VwDigraph) -> String {
    let mut s = serde_json::to_string_pretty(&GraphDocument::from_graph(g))
        .expect("graph documents always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"{
  "omega": [2, 3, 3, 3],
  "edges": [
    {"from": 1, "to": 2, "weight": "10"},
    {"from": 1, "to": 4, "weight": "11"},
    {"from": 4, "to": 3, "weight": "101"},
    {"from": 4, "to": 2, "weight": "111"}
  ]
}"#;

    #[test]
    fn round_trip() {
        let g = parse_graph(SAMPLE).unwrap();
        assert_eq!(g.edge_count(), 4);
        let text = graph_to_json(&g);
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert_eq!(graph_to_json(&parse_graph(&text).unwrap()), text);
    }

    #[test]
    fn edges_are_sorted_on_output() {
        let g = parse_graph(
            r#"{"omega":[1,1,1],"edges":[{"from":3,"to":1,"weight":"1"},{"from":1,"to":2,"weight":"1"}]}"#,
        )
        .unwrap();
        let doc = GraphDocument::from_graph(&g);
        assert_eq!((doc.edges[0].from, doc.edges[1].from), (1, 3));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_graph("{\n  \"omega\": [1,1],\n  \"edges\": [,]\n}").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
    }

    #[test]
    fn semantic_errors() {
        let bad = [
            r#"{"omega":[1,1],"edges":[{"from":1,"to":3,"weight":"1"}]}"#,
            r#"{"omega":[1,1],"edges":[{"from":1,"to":2,"weight":"11"}]}"#,
            r#"{"omega":[1,1],"edges":[{"from":1,"to":2,"weight":"0"}]}"#,
            r#"{"omega":[1,1],"edges":[{"from":1,"to":1,"weight":"1"}]}"#,
            r#"{"omega":[1,1],"edges":[{"from":1,"to":2,"weight":"x"}]}"#,
            r#"{"omega":[0],"edges":[]}"#,
        ];
        for text in bad {
            assert!(parse_graph(text).is_err(), "{text}");
        }
    }
}
