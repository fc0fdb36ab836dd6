use serde::{Deserialize, Serialize};

use super::{
    local_complement, permute_out_weights, reorder_vertices, sigma_k_local_complement,
    sigma_local_complement,
};
use crate::error::Result;
use crate::perm::Permutation;
use crate::vwdigraph::VwDigraph;

/// Serializable operation with 1-based vertices and one-line permutations,
/// e.g. `{"op":"sigma-k-lc","vertex":4,"sigma":[2,3,1],"k":2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Operation {
    Lc { vertex: usize },
    SigmaLc { vertex: usize, sigma: Vec<usize> },
    SigmaKLc { vertex: usize, sigma: Vec<usize>, k: usize },
    PermuteWeights { vertex: usize, sigma: Vec<usize> },
    Reorder { mu: Vec<usize> },
}

fn vertex_index(vertex: usize, g: &VwDigraph) -> Result<usize> {
    let v = vertex.wrapping_sub(1);
    g.omega().check_vertex(v).map_err(|_| crate::error::Error::VertexOutOfRange {
        vertex,
        count: g.vertex_count(),
    })?;
    Ok(v)
}

/// Parses an operation descriptor, reporting syntax errors with positions.
pub fn parse_operation(text: &str) -> Result<Operation> {
    serde_json::from_str(text).map_err(|e| crate::error::Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

impl Operation {
    pub fn apply(&self, g: &VwDigraph) -> Result<VwDigraph> {
        match self {
            Self::Lc { vertex } => local_complement(g, vertex_index(*vertex, g)?),
            Self::SigmaLc { vertex, sigma } => {
                sigma_local_complement(g, vertex_index(*vertex, g)?, &Permutation::from_one_based(sigma)?)
            }
            Self::SigmaKLc { vertex, sigma, k } => sigma_k_local_complement(
                g,
                vertex_index(*vertex, g)?,
                &Permutation::from_one_based(sigma)?,
                *k,
            ),
            Self::PermuteWeights { vertex, sigma } => {
                permute_out_weights(g, vertex_index(*vertex, g)?, &Permutation::from_one_based(sigma)?)
            }
            Self::Reorder { mu } => reorder_vertices(g, &Permutation::from_one_based(mu)?),
        }
    }
}
