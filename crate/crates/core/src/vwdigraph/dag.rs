//! Unweighted labeled DAGs.
//!
//! A DAG is stored as one out-neighbour mask per vertex. Every DAG has a
//! unique nonempty set of sources `S`; deleting `S` leaves a DAG on the
//! remaining vertices whose own sources must each receive an edge from `S`.
//! Recursing on that decomposition lists every labeled DAG exactly once.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;

/// Largest vertex count for which DAGs are listed exhaustively.
pub const DAG_VERTEX_CAP: usize = 6;

pub fn for_each_dag(m: usize, f: &mut dyn FnMut(&[u64])) {
    assert!(m < 64);
    layer(full_mask(m), m, f);
}

fn full_mask(m: usize) -> u64 {
    if m == 0 {
        0
    } else {
        u64::MAX >> (64 - m)
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut x = mask;
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let i = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(i)
        }
    })
}

fn layer(rest: u64, m: usize, f: &mut dyn FnMut(&[u64])) {
    if rest == 0 {
        f(&vec![0; m]);
        return;
    }
    let mut sources = rest;
    while sources != 0 {
        let below = rest & !sources;
        let src: Vec<usize> = bits(sources).collect();
        // Subsets of `below`, indexed by their rank among its bits.
        let below_bits: Vec<usize> = bits(below).collect();
        let subsets: Vec<u64> = (0..(1u64 << below_bits.len()))
            .map(|code| {
                below_bits
                    .iter()
                    .enumerate()
                    .filter(|(r, _)| (code >> r) & 1 == 1)
                    .fold(0, |acc, (_, &b)| acc | (1 << b))
            })
            .collect();
        let width = below_bits.len();
        layer(below, m, &mut |inner: &[u64]| {
            let entered = bits(below).fold(0, |acc, v| acc | inner[v]);
            let must_cover = below & !entered;
            let mut g = inner.to_vec();
            let combos = 1u64 << (width * src.len());
            for code in 0..combos {
                let mut covered = 0;
                for (t, &s) in src.iter().enumerate() {
                    let out = subsets[((code >> (t * width)) & ((1 << width) - 1)) as usize];
                    g[s] = out;
                    covered |= out;
                }
                if covered & must_cover == must_cover {
                    f(&g);
                }
            }
        });
        sources = (sources - 1) & rest;
    }
}

pub fn is_acyclic_masks(out: &[u64]) -> bool {
    let m = out.len();
    let mut indeg = vec![0u32; m];
    for &o in out {
        for j in bits(o) {
            indeg[j] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..m).filter(|&i| indeg[i] == 0).collect();
    let mut seen = 0;
    while let Some(i) = stack.pop() {
        seen += 1;
        for j in bits(out[i]) {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                stack.push(j);
            }
        }
    }
    seen == m
}

/// Number of labeled DAGs on `m` vertices grouped by out-degree sequence.
pub fn outdegree_census(m: usize) -> Result<&'static BTreeMap<Vec<u8>, u64>> {
    static CENSUS: [OnceLock<BTreeMap<Vec<u8>, u64>>; DAG_VERTEX_CAP + 1] =
        [const { OnceLock::new() }; DAG_VERTEX_CAP + 1];
    if m > DAG_VERTEX_CAP {
        return Err(Error::BudgetExceeded {
            what: "DAG enumeration",
            estimate: format!("{m} vertices"),
            limit: DAG_VERTEX_CAP as u64,
        });
    }
    Ok(CENSUS[m].get_or_init(|| {
        let mut map = BTreeMap::new();
        for_each_dag(m, &mut |g| {
            let degs: Vec<u8> = g.iter().map(|o| o.count_ones() as u8).collect();
            *map.entry(degs).or_insert(0) += 1;
        });
        map
    }))
}

/// The set `M(n)`: matrices `A(G) + I` for every labeled DAG `G`.
pub fn unit_matrices(n: usize) -> Result<Vec<Gf2Matrix>> {
    if n > DAG_VERTEX_CAP {
        return Err(Error::BudgetExceeded {
            what: "M(n) listing",
            estimate: format!("{n} vertices"),
            limit: DAG_VERTEX_CAP as u64,
        });
    }
    let mut out = Vec::new();
    for_each_dag(n, &mut |g| {
        let rows = g.iter().enumerate().map(|(i, &o)| o | (1 << i)).collect();
        out.push(Gf2Matrix::from_row_words(n, rows));
    });
    Ok(out)
}
