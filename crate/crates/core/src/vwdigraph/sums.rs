//! Permutation-product sums over GF(2) that vanish on `M(n)`.

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::perm::Permutation;

/// `Σ_σ Π_i v[i][σ(i)]` mod 2 over fixed-point-free `σ ∈ S_n`.
pub fn fixed_point_free_sum(v: &Gf2Matrix) -> u8 {
    let n = v.size();
    let mut acc = 0u8;
    for sigma in Permutation::all(n) {
        if (0..n).any(|i| sigma.apply(i) == i) {
            continue;
        }
        if (0..n).all(|i| v.get(i, sigma.apply(i))) {
            acc ^= 1;
        }
    }
    acc
}

/// Sum over all orderings `(a_1, .., a_r)` of `{0..n} \ (b ∪ {i})` of the
/// cyclic product `v[i][a_1] v[a_1][a_2] .. v[a_r][i]`, mod 2.
pub fn cycle_sum(v: &Gf2Matrix, b: &[usize], i: usize) -> Result<u8> {
    let n = v.size();
    if i >= n || b.iter().any(|&x| x >= n) {
        return Err(Error::Precondition(format!(
            "indices must be below {n}"
        )));
    }
    let mut excluded = 1u64 << i;
    for &x in b {
        if x == i {
            return Err(Error::Precondition(format!("{i} belongs to B")));
        }
        if excluded & (1 << x) != 0 {
            return Err(Error::Precondition(format!("repeated element {x} in B")));
        }
        excluded |= 1 << x;
    }
    if b.len() + 2 > n {
        return Err(Error::Precondition(format!(
            "|B| = {} exceeds n - 2 = {}",
            b.len(),
            n as isize - 2
        )));
    }
    let rest: Vec<usize> = (0..n).filter(|&x| excluded & (1 << x) == 0).collect();
    let mut acc = 0u8;
    for order in Permutation::all(rest.len()) {
        let path: Vec<usize> = order.images().iter().map(|&t| rest[t]).collect();
        let mut prev = i;
        let mut prod = true;
        for &a in path.iter().chain(std::iter::once(&i)) {
            if !v.get(prev, a) {
                prod = false;
                break;
            }
            prev = a;
        }
        if prod {
            acc ^= 1;
        }
    }
    Ok(acc)
}
