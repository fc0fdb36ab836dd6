//! ω-equivalence: the generating operations, the characteristic-matrix
//! oracle they are checked against, and orbit computation.
//!
//! Vertices are 0-indexed; weight coordinates `k` are 1-indexed.

mod descriptor;
mod oracle;
mod orbit;

use crate::error::{Error, Result};
use crate::gf2::Gf2Vector;
use crate::perm::Permutation;
use crate::vwdigraph::{DimensionFunction, VwDigraph};

pub use descriptor::{parse_operation, Operation};
pub use oracle::matrix_action_oracle;
pub use orbit::{
    count_classes, generating_set, orbit, orbit_with, partition_orbits, OrbitReport,
    DEFAULT_ORBIT_BUDGET,
};

/// One generator of ω-equivalence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    ReorderVertices { mu: Permutation },
    PermuteWeights { vertex: usize, sigma: Permutation },
    SigmaKLc { vertex: usize, sigma: Permutation, k: usize },
}

impl Generator {
    pub fn apply(&self, g: &VwDigraph) -> Result<VwDigraph> {
        match self {
            Self::ReorderVertices { mu } => reorder_vertices(g, mu),
            Self::PermuteWeights { vertex, sigma } => permute_out_weights(g, *vertex, sigma),
            Self::SigmaKLc { vertex, sigma, k } => sigma_k_local_complement(g, *vertex, sigma, *k),
        }
    }
}

fn check_sigma(g: &VwDigraph, v: usize, sigma: &Permutation) -> Result<()> {
    g.omega().check_vertex(v)?;
    if sigma.degree() != g.omega().dim(v) {
        return Err(Error::DegreeMismatch {
            expected: g.omega().dim(v),
            actual: sigma.degree(),
        });
    }
    Ok(())
}

/// Weighted local complementation at `v`: every `u -> w` with
/// `u ∈ N⁻(v)`, `w ∈ N⁺(v)` gets weight `ω(u,w) + ω(u,v)`.
pub fn local_complement(g: &VwDigraph, v: usize) -> Result<VwDigraph> {
    g.omega().check_vertex(v)?;
    let mut out = g.clone();
    let ins = g.in_neighbors(v);
    let outs = g.out_neighbors(v);
    for &u in &ins {
        for &w in outs.iter().filter(|&&w| w != u) {
            out.set_weight(u, w, g.w(u, w).add(&g.w(u, v))?)?;
        }
    }
    Ok(out)
}

/// Local complementation at `v` followed by permuting the coordinates of
/// every out-weight of `v` by `sigma`.
pub fn sigma_local_complement(g: &VwDigraph, v: usize, sigma: &Permutation) -> Result<VwDigraph> {
    check_sigma(g, v, sigma)?;
    let lc = local_complement(g, v)?;
    permute_out_weights(&lc, v, sigma)
}

/// `(σ, k)`-local complementation at `v`.
///
/// With `K = {w ∈ N⁺(v) : ω(v,w)_k = 1}`:
/// * `u -> w` for `u ∈ N⁻(v)`, `w ∈ K` becomes `ω(u,w) + ω(u,v)`;
/// * `v -> w` becomes `σ·ω(v,w)`, plus `e_{σ⁻¹(k)}` when `w ∈ K`, where
///   `e_i` is all ones except coordinate `i`;
/// * every other weight is unchanged.
///
/// An edge is present in the result iff its weight is nonzero.
pub fn sigma_k_local_complement(
    g: &VwDigraph,
    v: usize,
    sigma: &Permutation,
    k: usize,
) -> Result<VwDigraph> {
    check_sigma(g, v, sigma)?;
    let dim = g.omega().dim(v);
    if k == 0 || k > dim {
        return Err(Error::CoordinateOutOfRange { k, dim });
    }
    let correction = Gf2Vector::all_ones_except(dim, sigma.inverse().apply(k - 1) + 1)?;
    let mut out = g.clone();
    let marked: Vec<usize> = g
        .out_neighbors(v)
        .into_iter()
        .filter(|&w| g.w(v, w).coord(k))
        .collect();
    for u in g.in_neighbors(v) {
        for &w in marked.iter().filter(|&&w| w != u) {
            out.set_weight(u, w, g.w(u, w).add(&g.w(u, v))?)?;
        }
    }
    for w in g.out_neighbors(v) {
        let old = g.w(v, w);
        let mut new = old.permute(sigma)?;
        if old.coord(k) {
            new = new.add(&correction)?;
        }
        out.set_weight(v, w, new)?;
    }
    Ok(out)
}

/// Replaces each out-weight of `v` by its coordinate permutation under `sigma`.
pub fn permute_out_weights(g: &VwDigraph, v: usize, sigma: &Permutation) -> Result<VwDigraph> {
    check_sigma(g, v, sigma)?;
    let mut out = g.clone();
    for w in g.out_neighbors(v) {
        out.set_weight(v, w, g.w(v, w).permute(sigma)?)?;
    }
    Ok(out)
}

/// New weight of `p -> q` is the old weight of `μ(p) -> μ(q)`.
pub fn reorder_vertices(g: &VwDigraph, mu: &Permutation) -> Result<VwDigraph> {
    let omega = g.omega();
    let m = omega.vertex_count();
    if mu.degree() != m {
        return Err(Error::DegreeMismatch {
            expected: m,
            actual: mu.degree(),
        });
    }
    if (0..m).any(|i| omega.dim(mu.apply(i)) != omega.dim(i)) {
        return Err(Error::OmegaNotPreserved);
    }
    let mut out = VwDigraph::empty(omega.clone());
    for p in 0..m {
        for q in 0..m {
            if p != q {
                out.set_weight(p, q, g.w(mu.apply(p), mu.apply(q)))?;
            }
        }
    }
    Ok(out)
}

/// True when `mu` maps every vertex to one of the same dimension.
pub fn preserves_omega(omega: &DimensionFunction, mu: &Permutation) -> bool {
    mu.degree() == omega.vertex_count()
        && (0..mu.degree()).all(|i| omega.dim(mu.apply(i)) == omega.dim(i))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::vwdigraph::{enumerate_acyclic, DEFAULT_ENUMERATION_BUDGET};

    pub(crate) fn om(d: &[usize]) -> DimensionFunction {
        DimensionFunction::new(d.to_vec()).unwrap()
    }

    pub(crate) fn v(s: &str) -> Gf2Vector {
        s.parse().unwrap()
    }

    pub(crate) fn p(images: &[usize]) -> Permutation {
        Permutation::from_one_based(images).unwrap()
    }

    pub(crate) fn sample() -> VwDigraph {
        VwDigraph::from_edges(
            om(&[2, 3, 3, 3]),
            [
                (0, 1, v("10")),
                (0, 3, v("11")),
                (3, 2, v("101")),
                (3, 1, v("111")),
            ],
        )
        .unwrap()
    }

    pub(crate) fn sample_sigma() -> VwDigraph {
        VwDigraph::from_edges(
            om(&[2, 3, 3, 3]),
            [
                (0, 1, v("01")),
                (0, 2, v("11")),
                (0, 3, v("11")),
                (3, 2, v("011")),
                (3, 1, v("111")),
            ],
        )
        .unwrap()
    }

    pub(crate) fn sample_sigma_two() -> VwDigraph {
        VwDigraph::from_edges(
            om(&[2, 3, 3, 3]),
            [
                (0, 1, v("01")),
                (0, 3, v("11")),
                (3, 2, v("011")),
                (3, 1, v("100")),
            ],
        )
        .unwrap()
    }

    fn all(d: &[usize]) -> Vec<VwDigraph> {
        enumerate_acyclic(&om(d), DEFAULT_ENUMERATION_BUDGET)
            .unwrap()
            .collect()
    }

    #[test]
    fn sample_local_complement() {
        let lc = local_complement(&sample(), 3).unwrap();
        assert_eq!(lc.weight(0, 2).unwrap(), v("11"));
        assert_eq!(lc.weight(0, 1).unwrap(), v("01"));
        assert_eq!(lc.weight(3, 2).unwrap(), v("101"));
        assert_eq!(lc.weight(3, 1).unwrap(), v("111"));
        assert_eq!(lc.edge_count(), 5);
    }

    #[test]
    fn sample_sigma_variants() {
        let sigma = p(&[2, 3, 1]);
        assert_eq!(
            sigma_local_complement(&sample(), 3, &sigma).unwrap(),
            sample_sigma()
        );
        assert_eq!(
            sigma_k_local_complement(&sample(), 3, &sigma, 2).unwrap(),
            sample_sigma_two()
        );
    }

    #[test]
    fn degenerate_cases_leave_graph_unchanged() {
        let g = sample();
        // v1 has no in-neighbours, v2 and v3 have no out-neighbours.
        for vertex in 0..3 {
            assert_eq!(local_complement(&g, vertex).unwrap(), g);
        }
        let isolated = VwDigraph::from_edges(om(&[2, 3, 1]), [(0, 2, v("01"))]).unwrap();
        assert_eq!(
            sigma_local_complement(&isolated, 1, &p(&[3, 1, 2])).unwrap(),
            isolated
        );
        assert_eq!(
            sigma_local_complement(&g, 3, &Permutation::identity(3)).unwrap(),
            local_complement(&g, 3).unwrap()
        );
    }

    #[test]
    fn one_dimensional_weights_reduce_to_classical_lc() {
        for g in all(&[1, 1, 1]) {
            for vertex in 0..3 {
                let lc = local_complement(&g, vertex).unwrap();
                assert_eq!(local_complement(&lc, vertex).unwrap(), g);
                let id = Permutation::identity(1);
                assert_eq!(sigma_k_local_complement(&g, vertex, &id, 1).unwrap(), lc);
                // Classical: toggle u -> w for u ∈ N⁻, w ∈ N⁺.
                let mut classical = g.support_masks();
                for u in g.in_neighbors(vertex) {
                    for w in g.out_neighbors(vertex) {
                        classical[u] ^= 1 << w;
                    }
                }
                assert_eq!(lc.support_masks(), classical);
            }
        }
    }

    #[test]
    fn identity_k_lc_is_an_involution() {
        for g in all(&[2, 2]) {
            for vertex in 0..2 {
                for k in 1..=2 {
                    let id = Permutation::identity(2);
                    let once = sigma_k_local_complement(&g, vertex, &id, k).unwrap();
                    assert_eq!(sigma_k_local_complement(&once, vertex, &id, k).unwrap(), g);
                }
            }
        }
    }

    #[test]
    fn argument_errors() {
        let g = sample();
        assert!(matches!(
            sigma_k_local_complement(&g, 3, &p(&[2, 1]), 1),
            Err(Error::DegreeMismatch { expected: 3, actual: 2 })
        ));
        assert!(matches!(
            sigma_k_local_complement(&g, 3, &p(&[1, 2, 3]), 4),
            Err(Error::CoordinateOutOfRange { k: 4, dim: 3 })
        ));
        assert!(matches!(
            local_complement(&g, 9),
            Err(Error::VertexOutOfRange { vertex: 9, count: 4 })
        ));
        assert_eq!(
            reorder_vertices(&g, &p(&[2, 1, 3, 4])),
            Err(Error::OmegaNotPreserved)
        );
    }

    #[test]
    fn reorder_examples() {
        let g = sample();
        assert_eq!(reorder_vertices(&g, &Permutation::identity(4)).unwrap(), g);
        let iso = VwDigraph::from_edges(om(&[1, 2, 2]), [(1, 0, v("10"))]).unwrap();
        // v3 is isolated; swapping v2 and v3 moves the edge.
        let swapped = reorder_vertices(&iso, &p(&[1, 3, 2])).unwrap();
        assert_eq!(swapped.weight(2, 0).unwrap(), v("10"));
        let lonely = VwDigraph::empty(om(&[3, 3]));
        assert_eq!(reorder_vertices(&lonely, &p(&[2, 1])).unwrap(), lonely);
        // v2 and v3 of the sample graph are both sinks with ω = 3, but v2 has two
        // in-edges, so swapping them is not a symmetry.
        let mu = p(&[1, 3, 2, 4]);
        assert_ne!(reorder_vertices(&g, &mu).unwrap(), g);
        assert_eq!(
            reorder_vertices(&reorder_vertices(&g, &mu).unwrap(), &mu.inverse()).unwrap(),
            g
        );
    }

    #[test]
    fn permute_out_weights_examples() {
        let g = VwDigraph::from_edges(om(&[2, 1]), [(0, 1, v("10"))]).unwrap();
        let swapped = permute_out_weights(&g, 0, &p(&[2, 1])).unwrap();
        assert_eq!(swapped.weight(0, 1).unwrap(), v("01"));
        let f = sample();
        let s = p(&[2, 3, 1]);
        let there = permute_out_weights(&f, 3, &s).unwrap();
        assert_eq!(permute_out_weights(&there, 3, &s.inverse()).unwrap(), f);
        assert_eq!(permute_out_weights(&f, 3, &Permutation::identity(3)).unwrap(), f);
    }
}
