//! Facet permutations acting on characteristic matrices.
//!
//! For `P = Δ^ω(1) × .. × Δ^ω(m)` with `n = Σ ω(i)`, an acyclic graph `G`
//! corresponds to the `n × (n + m)` characteristic matrix `[I_n | Λ]` where
//! `Λ = A_ω(G) + diag(1..1)` is read with row `(a, c)` (vertex `a`,
//! coordinate `c`) and column `s`. Facet `(s, k)` of the `s`-th simplex owns
//! column `(s, k)` of `I_n` for `k ≤ ω(s)` and column `n + s` for
//! `k = ω(s) + 1`. A facet permutation `σ` of simplex `v` replaces the
//! column of facet `(v, k)` with the column of facet `(v, σ(k))`; row
//! reduction back to `[I_n | Λ']` yields the image graph.

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::perm::Permutation;
use crate::vwdigraph::{VectorMatrix, VwDigraph};

/// Image of `g` under the facet permutation `sigma_full ∈ S_{ω(v)+1}` of the
/// simplex factor at vertex `v`, computed by GF(2) row reduction.
pub fn matrix_action_oracle(
    g: &VwDigraph,
    v: usize,
    sigma_full: &Permutation,
) -> Result<VwDigraph> {
    let omega = g.omega().clone();
    omega.check_vertex(v)?;
    let dims = omega.dims().to_vec();
    if sigma_full.degree() != dims[v] + 1 {
        return Err(Error::DegreeMismatch {
            expected: dims[v] + 1,
            actual: sigma_full.degree(),
        });
    }
    let m = dims.len();
    let n: usize = dims.iter().sum();
    if n > 64 {
        return Err(Error::Precondition(format!(
            "characteristic matrix has {n} rows; at most 64 are supported"
        )));
    }
    let reduced = g.to_reduced_matrix()?;

    let offsets: Vec<usize> = dims
        .iter()
        .scan(0, |acc, &d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect();
    let row = |a: usize, c: usize| offsets[a] + c - 1;

    // Column of facet (s, k), 1 <= k <= ω(s) + 1, as a bit mask over rows.
    let facet_column = |s: usize, k: usize| -> u64 {
        if k <= dims[s] {
            1u64 << row(s, k)
        } else {
            let mut col = 0u64;
            for a in 0..m {
                let entry = reduced.get(a, s);
                for c in 1..=dims[a] {
                    if entry.coord(c) {
                        col |= 1 << row(a, c);
                    }
                }
            }
            col
        }
    };

    let mut left = vec![0u64; n];
    let mut right = vec![0u64; m];
    for s in 0..m {
        for k in 1..=dims[s] + 1 {
            let source = if s == v {
                sigma_full.apply(k - 1) + 1
            } else {
                k
            };
            let col = facet_column(s, source);
            if k <= dims[s] {
                left[row(s, k)] = col;
            } else {
                right[s] = col;
            }
        }
    }

    // P has column c equal to left[c]; build it row-wise and invert.
    let mut p = Gf2Matrix::zero(n);
    for (c, &col) in left.iter().enumerate() {
        for r in 0..n {
            if (col >> r) & 1 == 1 {
                p.set(r, c, true);
            }
        }
    }
    let p_inv = p.inverse()?;

    let mut image = VectorMatrix::zero(omega);
    for (s, &col) in right.iter().enumerate() {
        let transformed: u64 = (0..n)
            .filter(|&r| (p_inv.row_word(r) & col).count_ones() % 2 == 1)
            .fold(0, |acc, r| acc | (1 << r));
        for a in 0..m {
            let mut entry = image.get(a, s);
            for c in 1..=dims[a] {
                entry.set(c, (transformed >> row(a, c)) & 1 == 1);
            }
            image.set(a, s, entry)?;
        }
    }
    VwDigraph::from_vector_matrix(&image)
}
