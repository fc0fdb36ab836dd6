//! ω-vector weighted digraphs and their vector matrices.
//!
//! Vertices are 0-indexed in this API and 1-indexed in the JSON format.
//! An edge `i -> j` carries a nonzero weight in `GF(2)^ω(i)`; a zero weight
//! means the edge is absent.

mod dag;
mod enumerate;
mod sums;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector, MAX_DIM};

pub use dag::{for_each_dag, is_acyclic_masks, outdegree_census, unit_matrices, DAG_VERTEX_CAP};
pub use enumerate::{enumerate_acyclic, AcyclicDigraphs, DEFAULT_ENUMERATION_BUDGET};
pub use sums::{cycle_sum, fixed_point_free_sum};

/// The dimension function ω: vertex `i` has out-weights in `GF(2)^dims[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimensionFunction(Vec<usize>);

impl DimensionFunction {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Precondition(
                "dimension function needs at least one vertex".into(),
            ));
        }
        if let Some(&d) = dims.iter().find(|&&d| d == 0 || d > MAX_DIM) {
            return Err(Error::InvalidDimension(d));
        }
        Ok(Self(dims))
    }

    pub fn dims(&self) -> &[usize] {
        &self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn dim(&self, vertex: usize) -> usize {
        self.0[vertex]
    }

    pub(crate) fn check_vertex(&self, vertex: usize) -> Result<()> {
        if vertex < self.0.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex,
                count: self.0.len(),
            })
        }
    }
}

impl FromStr for DimensionFunction {
    type Err = Error;

    /// Parses a comma separated list such as `1,2,3`.
    fn from_str(s: &str) -> Result<Self> {
        let dims = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Precondition(format!("invalid dimension list {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(dims)
    }
}

impl fmt::Display for DimensionFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An ω-vector weighted digraph.
///
/// The derived ordering compares weights in row-major order, which for a
/// fixed ω is the lexicographic order of the serialized adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VwDigraph {
    omega: DimensionFunction,
    weights: Vec<Gf2Vector>,
}

impl VwDigraph {
    pub fn empty(omega: DimensionFunction) -> Self {
        let m = omega.vertex_count();
        let weights = (0..m * m)
            .map(|c| Gf2Vector::zero(omega.dim(c / m)).expect("validated dimension"))
            .collect();
        Self { omega, weights }
    }

    /// Builds a graph from `(from, to, weight)` triples (0-indexed vertices).
    pub fn from_edges(
        omega: DimensionFunction,
        edges: impl IntoIterator<Item = (usize, usize, Gf2Vector)>,
    ) -> Result<Self> {
        let mut g = Self::empty(omega);
        for (i, j, w) in edges {
            if !g.weight(i, j)?.is_zero() {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {} -> {}",
                    i + 1,
                    j + 1
                )));
            }
            if w.is_zero() {
                return Err(Error::InvalidGraph(format!(
                    "edge {} -> {} has zero weight",
                    i + 1,
                    j + 1
                )));
            }
            g.set_weight(i, j, w)?;
        }
        Ok(g)
    }

    pub fn omega(&self) -> &DimensionFunction {
        &self.omega
    }

    pub fn vertex_count(&self) -> usize {
        self.omega.vertex_count()
    }

    /// Weight of `i -> j`; the zero vector when the edge is absent.
    pub fn weight(&self, i: usize, j: usize) -> Result<Gf2Vector> {
        self.omega.check_vertex(i)?;
        self.omega.check_vertex(j)?;
        Ok(self.w(i, j))
    }

    #[inline]
    pub(crate) fn w(&self, i: usize, j: usize) -> Gf2Vector {
        self.weights[i * self.vertex_count() + j]
    }

    /// Sets the weight of `i -> j`; a zero weight removes the edge.
    pub fn set_weight(&mut self, i: usize, j: usize, w: Gf2Vector) -> Result<()> {
        self.omega.check_vertex(i)?;
        self.omega.check_vertex(j)?;
        if i == j {
            if w.is_zero() {
                return Ok(());
            }
            return Err(Error::InvalidGraph(format!("self-loop at vertex {}", i + 1)));
        }
        if w.dim() != self.omega.dim(i) {
            return Err(Error::DimensionMismatch {
                left: self.omega.dim(i),
                right: w.dim(),
            });
        }
        let m = self.vertex_count();
        self.weights[i * m + j] = w;
        Ok(())
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        !self.w(i, j).is_zero()
    }

    /// Edges as `(from, to, weight)`, ordered by `(from, to)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Gf2Vector)> + '_ {
        let m = self.vertex_count();
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
            .map(move |(c, w)| (c / m, c % m, *w))
    }

    pub fn edge_count(&self) -> usize {
        self.weights.iter().filter(|w| !w.is_zero()).count()
    }

    pub fn out_neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&w| self.has_edge(v, w)).collect()
    }

    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&u| self.has_edge(u, v)).collect()
    }

    /// Out-neighbour mask of each vertex.
    pub fn support_masks(&self) -> Vec<u64> {
        (0..self.vertex_count())
            .map(|i| {
                (0..self.vertex_count())
                    .filter(|&j| self.has_edge(i, j))
                    .fold(0, |acc, j| acc | (1 << j))
            })
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        is_acyclic_masks(&self.support_masks())
    }

    /// `A_ω(G)`: the weights as a vector matrix with zero diagonal.
    pub fn adjacency_matrix(&self) -> VectorMatrix {
        VectorMatrix {
            omega: self.omega.clone(),
            entries: self.weights.clone(),
        }
    }

    /// `A_ω(G)` plus all-ones vectors on the diagonal; an element of `M_ω`
    /// when the graph is acyclic.
    pub fn to_reduced_matrix(&self) -> Result<VectorMatrix> {
        if !self.is_acyclic() {
            return Err(Error::Cyclic);
        }
        let mut a = self.adjacency_matrix();
        for i in 0..self.vertex_count() {
            a.set(i, i, Gf2Vector::ones(self.omega.dim(i))?)?;
        }
        Ok(a)
    }

    /// Inverse of [`to_reduced_matrix`](Self::to_reduced_matrix).
    pub fn from_vector_matrix(a: &VectorMatrix) -> Result<Self> {
        if !a.is_in_m_omega() {
            return Err(Error::NotInMOmega(
                "some specialization has a principal minor 0".into(),
            ));
        }
        Ok(Self::from_off_diagonal(a))
    }

    /// Reads off-diagonal entries as edge weights without checking membership.
    pub(crate) fn from_off_diagonal(a: &VectorMatrix) -> Self {
        let mut g = Self::empty(a.omega.clone());
        let m = g.vertex_count();
        for i in 0..m {
            for j in 0..m {
                if i != j {
                    g.weights[i * m + j] = a.get(i, j);
                }
            }
        }
        g
    }

    pub(crate) fn weights_mut(&mut self) -> &mut [Gf2Vector] {
        &mut self.weights
    }

    /// Concatenated bit strings of the adjacency matrix in row-major order.
    pub fn serialize_key(&self) -> String {
        self.weights.iter().map(|w| w.to_string()).collect()
    }
}

impl fmt::Display for VwDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ω={}", self.omega)?;
        for (i, j, w) in self.edges() {
            write!(f, " {}->{}:{}", i + 1, j + 1, w)?;
        }
        Ok(())
    }
}

/// Square matrix whose row-`i` entries are vectors in `GF(2)^ω(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VectorMatrix {
    omega: DimensionFunction,
    entries: Vec<Gf2Vector>,
}

impl VectorMatrix {
    pub fn zero(omega: DimensionFunction) -> Self {
        let g = VwDigraph::empty(omega);
        Self {
            omega: g.omega,
            entries: g.weights,
        }
    }

    /// All-ones diagonal, zero elsewhere.
    pub fn unit_diagonal(omega: DimensionFunction) -> Self {
        let mut a = Self::zero(omega);
        let m = a.size();
        for i in 0..m {
            let d = a.omega.dim(i);
            a.entries[i * m + i] = Gf2Vector::ones(d).expect("validated dimension");
        }
        a
    }

    pub fn omega(&self) -> &DimensionFunction {
        &self.omega
    }

    pub fn size(&self) -> usize {
        self.omega.vertex_count()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Gf2Vector {
        self.entries[i * self.size() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Gf2Vector) -> Result<()> {
        self.omega.check_vertex(i)?;
        self.omega.check_vertex(j)?;
        if v.dim() != self.omega.dim(i) {
            return Err(Error::DimensionMismatch {
                left: self.omega.dim(i),
                right: v.dim(),
            });
        }
        let m = self.size();
        self.entries[i * m + j] = v;
        Ok(())
    }

    /// Scalar matrix with entry `(i, j)` equal to coordinate `ks[i]`
    /// (1-indexed) of entry `(i, j)`.
    pub fn specialize(&self, ks: &[usize]) -> Result<Gf2Matrix> {
        let m = self.size();
        if ks.len() != m {
            return Err(Error::DimensionMismatch {
                left: m,
                right: ks.len(),
            });
        }
        let mut rows = vec![0u64; m];
        for (i, row) in rows.iter_mut().enumerate() {
            let k = ks[i];
            if k == 0 || k > self.omega.dim(i) {
                return Err(Error::CoordinateOutOfRange {
                    k,
                    dim: self.omega.dim(i),
                });
            }
            for j in 0..m {
                if self.get(i, j).coord(k) {
                    *row |= 1 << j;
                }
            }
        }
        Ok(Gf2Matrix::from_row_words(m, rows))
    }

    /// 0/1 matrix marking the nonzero entries.
    pub fn support(&self) -> Gf2Matrix {
        let m = self.size();
        let rows = (0..m)
            .map(|i| {
                (0..m)
                    .filter(|&j| !self.get(i, j).is_zero())
                    .fold(0, |acc, j| acc | (1 << j))
            })
            .collect();
        Gf2Matrix::from_row_words(m, rows)
    }

    /// Membership in `M_ω`: every coordinate specialization has all
    /// principal minors equal to 1.
    pub fn is_in_m_omega(&self) -> bool {
        let dims = self.omega.dims();
        let mut ks = vec![1usize; dims.len()];
        loop {
            let spec = self.specialize(&ks).expect("in-range coordinates");
            if !spec.all_principal_minors_one() {
                return false;
            }
            // Odometer over coordinate choices.
            let mut i = 0;
            loop {
                if i == ks.len() {
                    return true;
                }
                if ks[i] < dims[i] {
                    ks[i] += 1;
                    break;
                }
                ks[i] = 1;
                i += 1;
            }
        }
    }
}

/// `|M_ω|` from the out-degree sum over underlying DAGs:
/// `Σ_G Π_i (2^ω(i) - 1)^outdeg(i)`.
pub fn count_m_omega(omega: &DimensionFunction) -> Result<BigUint> {
    let census = outdegree_census(omega.vertex_count())?;
    let factors: Vec<BigUint> = omega
        .dims()
        .iter()
        .map(|&d| (BigUint::one() << d) - BigUint::one())
        .collect();
    let mut total = BigUint::zero();
    for (degs, &count) in census {
        let term = degs
            .iter()
            .zip(&factors)
            .fold(BigUint::from(count), |acc, (&d, f)| acc * f.pow(d as u32));
        total += term;
    }
    Ok(total)
}
