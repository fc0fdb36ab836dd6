//! Closed-form class counts for products of two and three simplices, and
//! explicit orbit partitions of the two group actions behind them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::equiv::{generating_set, partition_orbits, DEFAULT_ORBIT_BUDGET};
use crate::error::{Error, Result};
use crate::gf2::Gf2Vector;
use crate::perm::Permutation;
use crate::vwdigraph::{enumerate_acyclic, DimensionFunction, VwDigraph, DEFAULT_ENUMERATION_BUDGET};

/// Cap on `|X| · (number of group elements applied)` for the oracles.
pub const DEFAULT_ORACLE_BUDGET: u64 = 1_000_000_000;

/// `⌊(n+1)/2⌋`: classes of a single weighted edge out of a vertex of dimension `n`.
fn half(n: u64) -> u64 {
    n.div_ceil(2)
}

fn exact(formula: &'static str, numerator: i128, denominator: i128) -> Result<u64> {
    if numerator % denominator != 0 {
        return Err(Error::InexactDivision {
            formula,
            numerator,
            denominator,
        });
    }
    Ok((numerator / denominator) as u64)
}

fn positive(name: &str, n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::Precondition(format!("{name} must be at least 1")));
    }
    Ok(())
}

/// Classes for `Δ^{n1} × Δ^{n2}`.
pub fn count_two_simplices(n1: u64, n2: u64) -> Result<u64> {
    positive("n1", n1)?;
    positive("n2", n2)?;
    Ok(if n1 == n2 {
        1 + half(n1)
    } else {
        1 + half(n1) + half(n2)
    })
}

/// Classes of two weighted edges out of one vertex of dimension `n1`.
pub fn count_type8(n1: u64) -> Result<u64> {
    positive("n1", n1)?;
    let k = (n1 / 2) as i128;
    if n1.is_multiple_of(2) {
        exact("type8 even", 2 * k * k * k + 9 * k * k + k, 6)
    } else {
        exact("type8 odd", (k + 1) * (k * k + 5 * k + 3), 3)
    }
}

pub fn f_closed(n: u64) -> Result<u64> {
    positive("n", n)?;
    let n = n as i128;
    if n % 2 == 0 {
        exact("f even", n * n * n + 9 * n * n + 2 * n, 24)
    } else {
        exact("f odd", (n + 1) * (n * n + 8 * n + 3), 24)
    }
}

pub fn h_closed(n: u64, m: u64) -> Result<u64> {
    positive("n", n)?;
    positive("m", m)?;
    let (a, b) = (n as i128, m as i128);
    let even_m = a * b * (b * b + 9 * b + 14);
    let odd_m = a * (b * b * b + 9 * b * b + 23 * b + 15);
    match (n % 2, m % 2, m % 4) {
        (0, 0, _) => exact("h even/even", even_m, 48),
        (0, 1, _) => exact("h even/odd", odd_m, 48),
        (1, 0, _) => exact("h odd/even", even_m + 3 * b * (b + 2), 48),
        (1, 1, 1) => exact("h odd/1 mod 4", odd_m + 3 * (b * b + 2 * b - 3), 48),
        _ => exact("h odd/3 mod 4", odd_m + 3 * (b * b + 2 * b + 1), 48),
    }
}

/// Classes of two weighted edges from vertices of dimension `n2` and `n3`
/// into a common target.
pub fn count_type17(n2: u64, n3: u64) -> Result<u64> {
    positive("n2", n2)?;
    positive("n3", n3)?;
    Ok(half(n2) * half(n3))
}

/// Shape families of acyclic digraphs on three vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TripleFamily {
    /// No edges.
    Type1,
    /// One edge.
    Type2,
    /// Two edges with a common source.
    Type8,
    /// A directed path or a transitive triangle.
    Type11And23,
    /// Two edges with a common target.
    Type17,
}

impl TripleFamily {
    pub const ALL: [TripleFamily; 5] = [
        Self::Type1,
        Self::Type2,
        Self::Type8,
        Self::Type11And23,
        Self::Type17,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Type1 => "type1",
            Self::Type2 => "type2",
            Self::Type8 => "type8",
            Self::Type11And23 => "type11_23",
            Self::Type17 => "type17",
        }
    }

    /// Family of an acyclic digraph on three vertices.
    pub fn classify(g: &VwDigraph) -> Result<Self> {
        if g.vertex_count() != 3 {
            return Err(Error::Precondition(format!(
                "expected 3 vertices, found {}",
                g.vertex_count()
            )));
        }
        if !g.is_acyclic() {
            return Err(Error::Cyclic);
        }
        let edges: Vec<(usize, usize)> = g.edges().map(|(i, j, _)| (i, j)).collect();
        Ok(match edges.as_slice() {
            [] => Self::Type1,
            [_] => Self::Type2,
            [(a, _), (b, _)] if a == b => Self::Type8,
            [(_, a), (_, b)] if a == b => Self::Type17,
            _ => Self::Type11And23,
        })
    }
}

impl fmt::Display for TripleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleBranch {
    /// `n1 < n2 < n3`.
    Distinct,
    /// Exactly two dimensions equal.
    TwoEqual,
    /// `n1 = n2 = n3`.
    AllEqual,
}

impl TripleBranch {
    pub fn name(self) -> &'static str {
        match self {
            Self::Distinct => "distinct",
            Self::TwoEqual => "two-equal",
            Self::AllEqual => "all-equal",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleCountBreakdown {
    /// Sum of all `per_type` entries, including 1 for the empty graph.
    pub total: BigUint,
    pub per_type: BTreeMap<TripleFamily, BigUint>,
    pub branch: TripleBranch,
}

/// The piecewise class count for `Δ^{n1} × Δ^{n2} × Δ^{n3}`, split into the
/// terms each shape family contributes.
///
/// The two-equal branch is stated for `n = n1 = n2 < n3`; it is also used
/// for `n1 < n2 = n3` with `n` the repeated dimension and `n3` the other.
pub fn count_three_simplices(n1: u64, n2: u64, n3: u64) -> Result<TripleCountBreakdown> {
    positive("n1", n1)?;
    if !(n1 <= n2 && n2 <= n3) {
        return Err(Error::Precondition(format!(
            "dimensions must satisfy n1 <= n2 <= n3, got ({n1}, {n2}, {n3})"
        )));
    }
    let (type2, type8, type17, type11_23, branch);
    if n1 < n2 && n2 < n3 {
        let ns = [n1, n2, n3];
        type2 = ns.iter().map(|&x| 2 * half(x)).sum::<u64>();
        type8 = ns.iter().map(|&x| f_closed(x)).sum::<Result<u64>>()?;
        type17 = half(n1) * half(n2) + half(n1) * half(n3) + half(n2) * half(n3);
        let mut s = 0;
        for &a in &ns {
            for &b in &ns {
                if a != b {
                    s += h_closed(a, b)?;
                }
            }
        }
        type11_23 = s;
        branch = TripleBranch::Distinct;
    } else if n1 == n3 {
        let n = n1;
        type2 = half(n);
        type8 = f_closed(n)?;
        type17 = half(n) * half(n);
        type11_23 = h_closed(n, n)?;
        branch = TripleBranch::AllEqual;
    } else {
        let (n, other) = if n1 == n2 { (n1, n3) } else { (n2, n1) };
        type2 = half(n) + half(other);
        type8 = f_closed(n)? + f_closed(other)?;
        type17 = half(n) * half(other) + half(n) * half(n);
        type11_23 = h_closed(n, n)? + h_closed(n, other)? + h_closed(other, n)?;
        branch = TripleBranch::TwoEqual;
    }
    let per_type: BTreeMap<TripleFamily, BigUint> = [
        (TripleFamily::Type1, 1),
        (TripleFamily::Type2, type2),
        (TripleFamily::Type8, type8),
        (TripleFamily::Type11And23, type11_23),
        (TripleFamily::Type17, type17),
    ]
    .into_iter()
    .map(|(k, v)| (k, BigUint::from(v)))
    .collect();
    Ok(TripleCountBreakdown {
        total: per_type.values().sum(),
        per_type,
        branch,
    })
}

/// Class counts per shape family, by explicit orbit partition.
pub fn brute_force_breakdown(omega: &DimensionFunction) -> Result<BTreeMap<TripleFamily, usize>> {
    let graphs = enumerate_acyclic(omega, DEFAULT_ENUMERATION_BUDGET)?;
    let gens = generating_set(omega, true);
    let mut out: BTreeMap<TripleFamily, usize> =
        TripleFamily::ALL.iter().map(|&f| (f, 0)).collect();
    for orbit in partition_orbits(graphs, &gens, DEFAULT_ORBIT_BUDGET)? {
        *out.get_mut(&TripleFamily::classify(&orbit.canonical)?).unwrap() += 1;
    }
    Ok(out)
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n as u32).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] as usize != x {
            let parent = self.0[x] as usize;
            self.0[x] = self.0[parent];
            x = parent;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb) as u32;
        }
    }

    fn classes(&mut self) -> usize {
        (0..self.0.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// How one element `σ ∈ S_{n+1}` acts on `GF(2)^n`: the permuted vector,
/// membership in `S_σ`, and the correction vector `e_{σ⁻¹(n+1)}`.
struct FacetAction {
    image: Vec<u64>,
    in_s: Vec<bool>,
    e: u64,
}

impl FacetAction {
    fn new(sigma: &Permutation) -> Self {
        let n = sigma.degree() - 1;
        let bar = sigma.bar();
        let moved = sigma.apply(n) != n;
        let e = if moved {
            Gf2Vector::all_ones_except(n, sigma.inverse().apply(n) + 1)
                .expect("index within dimension")
                .packed()
        } else {
            0
        };
        let mut image = Vec::with_capacity(1 << n);
        let mut in_s = Vec::with_capacity(1 << n);
        for bits in 0..1u64 << n {
            let v = Gf2Vector::from_packed(n, bits).expect("bits within dimension");
            image.push(v.permute(&bar).expect("matching degree").packed());
            in_s.push(!moved || !v.coord(sigma.apply(n) + 1));
        }
        Self { image, in_s, e }
    }

    /// `σ̄(v)`, plus `e` when `v ∉ S_σ`.
    fn act(&self, v: u64) -> u64 {
        if self.in_s[v as usize] {
            self.image[v as usize]
        } else {
            self.image[v as usize] ^ self.e
        }
    }
}

fn check_budget(what: &'static str, set_size: u64, group_elements: u64, limit: u64) -> Result<()> {
    match set_size.checked_mul(group_elements) {
        Some(work) if work <= limit => Ok(()),
        _ => Err(Error::BudgetExceeded {
            what,
            estimate: format!("{set_size} x {group_elements}"),
            limit,
        }),
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Orbit count of `S_{n1+1}` on pairs of nonzero vectors of `GF(2)^{n1}`,
/// acting on each coordinate of the pair by `σ̄(v)`, plus `e_{σ⁻¹(n1+1)}`
/// when `v_{σ(n1+1)} = 1` and `σ` moves `n1+1`.
pub fn burnside_type8_oracle(n1: usize) -> Result<u64> {
    burnside_type8_oracle_with(n1, DEFAULT_ORACLE_BUDGET)
}

pub fn burnside_type8_oracle_with(n1: usize, budget: u64) -> Result<u64> {
    positive("n1", n1 as u64)?;
    if n1 > 16 {
        return Err(Error::Precondition(format!("n1 = {n1} is too large")));
    }
    let nz = (1u64 << n1) - 1;
    check_budget("type8 orbit partition", nz * nz, factorial(n1 as u64 + 1), budget)?;
    let index = |v: u64, w: u64| ((v - 1) * nz + (w - 1)) as usize;
    let mut uf = UnionFind::new((nz * nz) as usize);
    for sigma in Permutation::all(n1 + 1) {
        let action = FacetAction::new(&sigma);
        for v in 1..=nz {
            let v2 = action.act(v);
            for w in 1..=nz {
                uf.union(index(v, w), index(v2, action.act(w)));
            }
        }
    }
    Ok(uf.classes() as u64)
}

/// The `(σ, β)` action on `(u, w, w')`, `u, w` nonzero and `w'` arbitrary.
fn h_action(alpha: &FacetAction, beta: &FacetAction, (u, w, w2): (u64, u64, u64)) -> (u64, u64, u64) {
    if alpha.in_s[u as usize] {
        (alpha.image[u as usize], beta.act(w), beta.act(w2))
    } else {
        (alpha.image[u as usize] ^ alpha.e, beta.act(w), beta.act(w ^ w2))
    }
}

/// Orbit count of `S_{n+1} × S_{m+1}` on
/// `(GF(2)^n ∖ 0) × (GF(2)^m ∖ 0) × GF(2)^m` under the eight-case action.
/// Orbits are joined along `(σ, id)` and `(id, β)` for every `σ` and `β`.
pub fn burnside_h_oracle(n: usize, m: usize) -> Result<u64> {
    burnside_h_oracle_with(n, m, DEFAULT_ORACLE_BUDGET)
}

pub fn burnside_h_oracle_with(n: usize, m: usize, budget: u64) -> Result<u64> {
    positive("n", n as u64)?;
    positive("m", m as u64)?;
    if n > 12 || m > 12 {
        return Err(Error::Precondition(format!("({n}, {m}) is too large")));
    }
    let (nu, nw, nw2) = ((1u64 << n) - 1, (1u64 << m) - 1, 1u64 << m);
    let size = nu * nw * nw2;
    check_budget(
        "h orbit partition",
        size,
        factorial(n as u64 + 1) + factorial(m as u64 + 1),
        budget,
    )?;
    let index = |(u, w, w2): (u64, u64, u64)| (((u - 1) * nw + (w - 1)) * nw2 + w2) as usize;
    let mut uf = UnionFind::new(size as usize);
    let mut join = |alpha: &FacetAction, beta: &FacetAction| {
        for u in 1..=nu {
            for w in 1..=nw {
                for w2 in 0..nw2 {
                    let x = (u, w, w2);
                    uf.union(index(x), index(h_action(alpha, beta, x)));
                }
            }
        }
    };
    let id_n = FacetAction::new(&Permutation::identity(n + 1));
    let id_m = FacetAction::new(&Permutation::identity(m + 1));
    for sigma in Permutation::all(n + 1) {
        join(&FacetAction::new(&sigma), &id_m);
    }
    for beta in Permutation::all(m + 1) {
        join(&id_n, &FacetAction::new(&beta));
    }
    Ok(uf.classes() as u64)
}
