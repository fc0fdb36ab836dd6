use std::collections::{HashSet, VecDeque};

use super::Generator;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::vwdigraph::{enumerate_acyclic, DimensionFunction, VwDigraph, DEFAULT_ENUMERATION_BUDGET};

pub const DEFAULT_ORBIT_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    /// Lexicographically least member.
    pub canonical: VwDigraph,
    pub size: usize,
    /// All members in increasing order, when requested.
    pub members: Option<Vec<VwDigraph>>,
}

/// Generators of the full ω-equivalence group: transpositions of vertices
/// with equal dimension, adjacent transpositions of each vertex's weight
/// coordinates, and `(id, k)`-local complementation for every vertex and
/// coordinate. Per vertex these realize the adjacent transpositions of
/// `S_{ω(v)}` together with the transpositions `(k, ω(v)+1)`, which generate
/// `S_{ω(v)+1}`.
pub fn generating_set(omega: &DimensionFunction, include_reordering: bool) -> Vec<Generator> {
    let m = omega.vertex_count();
    let mut gens = Vec::new();
    if include_reordering {
        for a in 0..m {
            for b in a + 1..m {
                if omega.dim(a) == omega.dim(b) {
                    gens.push(Generator::ReorderVertices {
                        mu: Permutation::transposition(m, a, b),
                    });
                }
            }
        }
    }
    for vertex in 0..m {
        let d = omega.dim(vertex);
        for i in 0..d.saturating_sub(1) {
            gens.push(Generator::PermuteWeights {
                vertex,
                sigma: Permutation::transposition(d, i, i + 1),
            });
        }
        for k in 1..=d {
            gens.push(Generator::SigmaKLc {
                vertex,
                sigma: Permutation::identity(d),
                k,
            });
        }
    }
    gens
}

fn close(
    start: &VwDigraph,
    gens: &[Generator],
    budget: usize,
    visited: &mut HashSet<VwDigraph>,
) -> Result<Vec<VwDigraph>> {
    let mut members = vec![start.clone()];
    let mut queue = VecDeque::from([start.clone()]);
    visited.insert(start.clone());
    while let Some(g) = queue.pop_front() {
        for gen in gens {
            let image = gen.apply(&g)?;
            if visited.insert(image.clone()) {
                if members.len() >= budget {
                    return Err(Error::OrbitBudgetExceeded {
                        partial: members.len(),
                        limit: budget,
                    });
                }
                members.push(image.clone());
                queue.push_back(image);
            }
        }
    }
    members.sort();
    Ok(members)
}

/// Orbit of `g` under the given generators, by breadth-first closure.
pub fn orbit_with(
    g: &VwDigraph,
    gens: &[Generator],
    budget: usize,
    include_members: bool,
) -> Result<OrbitReport> {
    if !g.is_acyclic() {
        return Err(Error::Cyclic);
    }
    let members = close(g, gens, budget, &mut HashSet::new())?;
    Ok(OrbitReport {
        canonical: members[0].clone(),
        size: members.len(),
        members: include_members.then_some(members),
    })
}

/// ω-equivalence class of `g`.
pub fn orbit(g: &VwDigraph, include_members: bool) -> Result<OrbitReport> {
    let gens = generating_set(g.omega(), true);
    orbit_with(g, &gens, DEFAULT_ORBIT_BUDGET, include_members)
}

/// Splits `graphs` into orbits, in order of first appearance. Members are
/// omitted from the reports.
pub fn partition_orbits(
    graphs: impl IntoIterator<Item = VwDigraph>,
    gens: &[Generator],
    budget: usize,
) -> Result<Vec<OrbitReport>> {
    let mut visited = HashSet::new();
    let mut orbits = Vec::new();
    for g in graphs {
        if visited.contains(&g) {
            continue;
        }
        let members = close(&g, gens, budget, &mut visited)?;
        orbits.push(OrbitReport {
            canonical: members[0].clone(),
            size: members.len(),
            members: None,
        });
    }
    Ok(orbits)
}

/// Number of ω-equivalence classes of acyclic ω-vector weighted digraphs.
pub fn count_classes(omega: &DimensionFunction) -> Result<usize> {
    let graphs = enumerate_acyclic(omega, DEFAULT_ENUMERATION_BUDGET)?;
    let gens = generating_set(omega, true);
    Ok(partition_orbits(graphs, &gens, DEFAULT_ORBIT_BUDGET)?.len())
}

#[cfg(test)]
mod tests {
    use super::super::tests::{sample, om, v};
    use super::*;

    #[test]
    fn empty_graph_is_fixed() {
        for d in [[1usize, 1, 1], [2, 3, 2]] {
            let r = orbit(&VwDigraph::empty(om(&d)), true).unwrap();
            assert_eq!(r.size, 1);
            assert_eq!(r.canonical, VwDigraph::empty(om(&d)));
        }
    }

    #[test]
    fn single_edge_on_two_unit_vertices() {
        let g = VwDigraph::from_edges(om(&[1, 1]), [(0, 1, v("1"))]).unwrap();
        let r = orbit(&g, true).unwrap();
        assert_eq!(r.size, 2);
        let members = r.members.unwrap();
        let other = VwDigraph::from_edges(om(&[1, 1]), [(1, 0, v("1"))]).unwrap();
        assert_eq!(members, vec![other.clone(), g]);
        assert_eq!(r.canonical, other);
    }

    #[test]
    fn two_simplex_weight_classes() {
        // ω = (2, 3): weights 11 and 10 on v1 -> v2 have 0 and 1 zero
        // coordinates, summing to n1 - 1 = 1, so they are equivalent.
        let a = VwDigraph::from_edges(om(&[2, 3]), [(0, 1, v("11"))]).unwrap();
        let b = VwDigraph::from_edges(om(&[2, 3]), [(0, 1, v("10"))]).unwrap();
        let ra = orbit(&a, true).unwrap();
        assert!(ra.members.as_ref().unwrap().contains(&b));
        assert_eq!(ra.canonical, orbit(&b, false).unwrap().canonical);
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_classes(&om(&[1, 2])).unwrap(), 3);
        assert_eq!(count_classes(&om(&[1, 1])).unwrap(), 2);
        assert_eq!(count_classes(&om(&[1, 1, 1])).unwrap(), 5);
        assert_eq!(count_classes(&om(&[4])).unwrap(), 1);
    }

    #[test]
    fn orbit_membership_is_symmetric() {
        let g = sample();
        let omega = g.omega().clone();
        let base = orbit(&g, true).unwrap();
        for gen in generating_set(&omega, true) {
            let image = gen.apply(&g).unwrap();
            let back = orbit(&image, true).unwrap();
            assert!(back.members.as_ref().unwrap().contains(&g));
            assert_eq!(back.canonical, base.canonical);
            assert_eq!(back.size, base.size);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let g = sample();
        let gens = generating_set(g.omega(), true);
        assert!(matches!(
            orbit_with(&g, &gens, 3, false),
            Err(Error::OrbitBudgetExceeded { partial: 3, limit: 3 })
        ));
    }
}
