use super::{is_acyclic_masks, DimensionFunction, VwDigraph};
use crate::error::{Error, Result};
use crate::gf2::Gf2Vector;

pub const DEFAULT_ENUMERATION_BUDGET: u64 = 100_000_000;

/// Streams every acyclic ω-vector weighted digraph exactly once, in
/// increasing lexicographic order of the serialized adjacency matrix.
///
/// Refuses up front when the loose bound `Π_i (2^ω(i))^(m-1)` on the search
/// space exceeds `budget`.
pub fn enumerate_acyclic(omega: &DimensionFunction, budget: u64) -> Result<AcyclicDigraphs> {
    let m = omega.vertex_count();
    let log2: usize = (m - 1) * omega.dims().iter().sum::<usize>();
    if log2 >= 64 || (1u64 << log2) > budget {
        return Err(Error::BudgetExceeded {
            what: "acyclic digraph enumeration",
            estimate: format!("2^{log2}"),
            limit: budget,
        });
    }
    let cells: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let max: Vec<u64> = cells
        .iter()
        .map(|&(i, _)| (1u64 << omega.dim(i)) - 1)
        .collect();
    Ok(AcyclicDigraphs {
        omega: omega.clone(),
        values: vec![0; cells.len()],
        cells,
        max,
        started: false,
        done: false,
    })
}

pub struct AcyclicDigraphs {
    omega: DimensionFunction,
    cells: Vec<(usize, usize)>,
    max: Vec<u64>,
    values: Vec<u64>,
    started: bool,
    done: bool,
}

impl AcyclicDigraphs {
    fn prefix_acyclic(&self, upto: usize) -> bool {
        let mut out = vec![0u64; self.omega.vertex_count()];
        for (c, &(i, j)) in self.cells.iter().enumerate().take(upto + 1) {
            if self.values[c] != 0 {
                out[i] |= 1 << j;
            }
        }
        is_acyclic_masks(&out)
    }

    fn current(&self) -> VwDigraph {
        let mut g = VwDigraph::empty(self.omega.clone());
        let m = self.omega.vertex_count();
        let weights = g.weights_mut();
        for (c, &(i, j)) in self.cells.iter().enumerate() {
            weights[i * m + j] = Gf2Vector::from_packed(self.omega.dim(i), self.values[c])
                .expect("value within dimension");
        }
        g
    }
}

impl Iterator for AcyclicDigraphs {
    type Item = VwDigraph;

    fn next(&mut self) -> Option<VwDigraph> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        // Odometer with the last cell least significant. After a successful
        // increment at `c` every later cell is zero, so the graph is acyclic
        // iff the prefix up to `c` is. A cyclic prefix stays cyclic for every
        // nonzero value at `c`, so we carry immediately.
        let mut c = self.cells.len();
        while c > 0 {
            c -= 1;
            if self.values[c] < self.max[c] {
                self.values[c] += 1;
                if self.prefix_acyclic(c) {
                    return Some(self.current());
                }
            }
            self.values[c] = 0;
        }
        self.done = true;
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vwdigraph::{count_m_omega, VectorMatrix};
    use num_bigint::BigUint;

    fn om(d: &[usize]) -> DimensionFunction {
        DimensionFunction::new(d.to_vec()).unwrap()
    }

    #[test]
    fn small_counts() {
        let count = |d: &[usize]| {
            enumerate_acyclic(&om(d), DEFAULT_ENUMERATION_BUDGET)
                .unwrap()
                .count()
        };
        assert_eq!(count(&[1]), 1);
        assert_eq!(count(&[5]), 1);
        assert_eq!(count(&[1, 1, 1]), 25);
        for n1 in 1..=4 {
            for n2 in 1..=4 {
                assert_eq!(count(&[n1, n2]), (1 << n1) + (1 << n2) - 1);
            }
        }
    }

    #[test]
    fn order_is_lexicographic_and_distinct() {
        let all: Vec<VwDigraph> = enumerate_acyclic(&om(&[2, 1, 2]), DEFAULT_ENUMERATION_BUDGET)
            .unwrap()
            .collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all
            .windows(2)
            .all(|w| w[0].serialize_key() < w[1].serialize_key()));
        assert!(all.iter().all(VwDigraph::is_acyclic));
    }

    #[test]
    fn budget_refusal() {
        let err = enumerate_acyclic(&om(&[8, 8, 8]), 1000).err().unwrap();
        assert!(matches!(err, Error::BudgetExceeded { ref estimate, .. } if estimate == "2^48"));
        assert!(enumerate_acyclic(&om(&[30, 30, 30]), u64::MAX).is_err());
    }

    /// Exhaustive scan of all 2x2 vector matrices over ω = (n1, n2).
    fn scan_m_omega(d: &[usize]) -> Vec<VectorMatrix> {
        let omega = om(d);
        let m = d.len();
        let cells: Vec<(usize, usize)> =
            (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
        let total_bits: usize = cells.iter().map(|&(i, _)| d[i]).sum();
        let mut members = Vec::new();
        for code in 0..(1u64 << total_bits) {
            let mut a = VectorMatrix::zero(omega.clone());
            let mut shift = 0;
            for &(i, j) in &cells {
                let bits = (code >> shift) & ((1 << d[i]) - 1);
                shift += d[i];
                a.set(i, j, Gf2Vector::from_packed(d[i], bits).unwrap())
                    .unwrap();
            }
            if a.is_in_m_omega() {
                members.push(a);
            }
        }
        members
    }

    #[test]
    fn m_omega_scan_matches_enumeration() {
        assert_eq!(scan_m_omega(&[1, 1]).len(), 3);
        for d in [[1usize, 2], [2, 2], [2, 3]] {
            let members = scan_m_omega(&d);
            let graphs: Vec<VwDigraph> = enumerate_acyclic(&om(&d), DEFAULT_ENUMERATION_BUDGET)
                .unwrap()
                .collect();
            assert_eq!(members.len(), graphs.len());
            assert_eq!(
                BigUint::from(graphs.len()),
                count_m_omega(&om(&d)).unwrap()
            );
            for a in &members {
                let g = VwDigraph::from_vector_matrix(a).unwrap();
                assert!(g.is_acyclic());
                assert_eq!(&g.to_reduced_matrix().unwrap(), a);
            }
        }
    }
}
