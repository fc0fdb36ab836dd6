//! Exact counts of permutations by cycle statistics.
//!
//! * `c(n, m)`: permutations of `n` elements with `m` cycles.
//! * `c_d(n, m)`: those whose cycle lengths are all divisible by `d`.
//! * `c(n, m, e)`: those with exactly `e` cycles of even length.
//!
//! Values are memoized per thread; tables only grow.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Default)]
struct Tables {
    c: HashMap<(usize, usize), BigUint>,
    cd_removal: HashMap<(usize, usize, usize), BigUint>,
    cd_two_term: HashMap<(usize, usize, usize), BigUint>,
    ce_removal: HashMap<(usize, usize, usize), BigUint>,
    ce_three_term: HashMap<(usize, usize, usize), BigUint>,
}

thread_local! {
    static TABLES: RefCell<Tables> = RefCell::new(Tables::default());
}

/// `(a)(a+1)..(b-1)` as a big integer; 1 when `a >= b`.
fn falling_range(a: usize, b: usize) -> BigUint {
    (a..b).fold(BigUint::one(), |acc, x| acc * BigUint::from(x))
}

impl Tables {
    fn c(&mut self, n: usize, m: usize) -> BigUint {
        if n == 0 || m == 0 {
            return BigUint::from((n == 0 && m == 0) as u8);
        }
        if m > n {
            return BigUint::zero();
        }
        if let Some(v) = self.c.get(&(n, m)) {
            return v.clone();
        }
        let v = self.c(n - 1, m - 1) + BigUint::from(n - 1) * self.c(n - 1, m);
        self.c.insert((n, m), v.clone());
        v
    }

    /// Remove the cycle through the last element: length `dk` gives
    /// `(n-1)!/(n-dk)!` choices.
    fn cd_removal(&mut self, d: usize, n: usize, m: usize) -> BigUint {
        if n == 0 || m == 0 {
            return BigUint::from((n == 0 && m == 0) as u8);
        }
        if !n.is_multiple_of(d) || m > n / d {
            return BigUint::zero();
        }
        if let Some(v) = self.cd_removal.get(&(d, n, m)) {
            return v.clone();
        }
        let mut v = BigUint::zero();
        for k in 1..=n / d {
            let rest = self.cd_removal(d, n - d * k, m - 1);
            if !rest.is_zero() {
                v += falling_range(n - d * k + 1, n) * rest;
            }
        }
        self.cd_removal.insert((d, n, m), v.clone());
        v
    }

    /// `c_d(N+d, m) = (N+1)^{↑(d-1)} c_d(N, m-1) + N^{↑d} c_d(N, m)`.
    fn cd_two_term(&mut self, d: usize, n: usize, m: usize) -> BigUint {
        if n == 0 || m == 0 {
            return BigUint::from((n == 0 && m == 0) as u8);
        }
        if !n.is_multiple_of(d) || m > n / d {
            return BigUint::zero();
        }
        if let Some(v) = self.cd_two_term.get(&(d, n, m)) {
            return v.clone();
        }
        let base = n - d;
        let v = rising_factorial(base as i64 + 1, d - 1).magnitude().clone()
            * self.cd_two_term(d, base, m - 1)
            + rising_factorial(base as i64, d).magnitude().clone() * self.cd_two_term(d, base, m);
        self.cd_two_term.insert((d, n, m), v.clone());
        v
    }

    /// Cycle through the last element of odd length `2t+1` or even length `2t`.
    fn ce_removal(&mut self, n: usize, m: usize, e: usize) -> BigUint {
        if n == 0 || m == 0 {
            return BigUint::from((n == 0 && m == 0 && e == 0) as u8);
        }
        if m > n || e > m || 2 * e > n {
            return BigUint::zero();
        }
        if let Some(v) = self.ce_removal.get(&(n, m, e)) {
            return v.clone();
        }
        let mut v = BigUint::zero();
        for t in 0..=(n - 1) / 2 {
            let rest = self.ce_removal(n - 2 * t - 1, m - 1, e);
            if !rest.is_zero() {
                v += falling_range(n - 2 * t, n) * rest;
            }
        }
        if e >= 1 {
            for t in 1..=n / 2 {
                let rest = self.ce_removal(n - 2 * t, m - 1, e - 1);
                if !rest.is_zero() {
                    v += falling_range(n - 2 * t + 1, n) * rest;
                }
            }
        }
        self.ce_removal.insert((n, m, e), v.clone());
        v
    }

    /// `c(n,m,e) = c(n-1,m-1,e) + (n-1) c(n-2,m-1,e-1) + (n-1)(n-2) c(n-2,m,e)`.
    fn ce_three_term(&mut self, n: usize, m: usize, e: usize) -> BigUint {
        if n == 0 || m == 0 {
            return BigUint::from((n == 0 && m == 0 && e == 0) as u8);
        }
        if m > n || e > m || 2 * e > n {
            return BigUint::zero();
        }
        if let Some(v) = self.ce_three_term.get(&(n, m, e)) {
            return v.clone();
        }
        let mut v = self.ce_three_term(n - 1, m - 1, e);
        if n >= 2 {
            if e >= 1 {
                v += BigUint::from(n - 1) * self.ce_three_term(n - 2, m - 1, e - 1);
            }
            v += BigUint::from((n - 1) * (n - 2)) * self.ce_three_term(n - 2, m, e);
        }
        self.ce_three_term.insert((n, m, e), v.clone());
        v
    }
}

fn with_tables<T>(f: impl FnOnce(&mut Tables) -> T) -> T {
    TABLES.with(|t| f(&mut t.borrow_mut()))
}

/// Unsigned Stirling number of the first kind.
pub fn stirling_c(n: usize, m: usize) -> BigUint {
    with_tables(|t| t.c(n, m))
}

/// `c_d(n, m)` by the cycle-removal sum.
pub fn c_divisible_by_removal(d: usize, n: usize, m: usize) -> BigUint {
    assert!(d >= 1, "d must be positive");
    with_tables(|t| t.cd_removal(d, n, m))
}

/// `c_d(n, m)` by the two-term recurrence in steps of `d`.
pub fn c_divisible_two_term(d: usize, n: usize, m: usize) -> BigUint {
    assert!(d >= 1, "d must be positive");
    with_tables(|t| t.cd_two_term(d, n, m))
}

/// `c_d(n, m)`. Both recurrences are evaluated and must agree.
pub fn c_divisible(d: usize, n: usize, m: usize) -> BigUint {
    let a = c_divisible_by_removal(d, n, m);
    let b = c_divisible_two_term(d, n, m);
    assert_eq!(a, b, "c_{d}({n},{m}): recurrences disagree");
    a
}

pub fn c_even_marked_by_removal(n: usize, m: usize, e: usize) -> BigUint {
    with_tables(|t| t.ce_removal(n, m, e))
}

pub fn c_even_marked_three_term(n: usize, m: usize, e: usize) -> BigUint {
    with_tables(|t| t.ce_three_term(n, m, e))
}

/// `c(n, m, e)`. Both recurrences are evaluated and must agree.
pub fn c_even_marked(n: usize, m: usize, e: usize) -> BigUint {
    let a = c_even_marked_by_removal(n, m, e);
    let b = c_even_marked_three_term(n, m, e);
    assert_eq!(a, b, "c({n},{m},{e}): recurrences disagree");
    a
}

/// `x (x+1) .. (x+n-1)`; the empty product is 1.
pub fn rising_factorial(x: i64, n: usize) -> num_bigint::BigInt {
    (0..n as i64).fold(num_bigint::BigInt::one(), |acc, i| acc * (x + i))
}

fn factorial(n: usize) -> BigUint {
    falling_range(1, n + 1)
}

pub const IDENTITIES: [&str; 5] = ["rising_d", "all_odd", "some_even", "mandev", "mandev_minus_one"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub max_n: usize,
    /// Number of parameter tuples checked.
    pub checked: usize,
    pub violations: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn pow2(k: usize) -> BigUint {
    BigUint::one() << k
}

/// `Σ_m 2^m Σ_{e ≥ 1} weight(e) c(n, m, e)`.
fn weighted_even_sum(n: usize, weight: impl Fn(usize) -> BigUint) -> BigUint {
    let mut s = BigUint::zero();
    for m in 1..=n {
        for e in 1..=m {
            s += pow2(m) * weight(e) * c_even_marked(n, m, e);
        }
    }
    s
}

/// Checks one named identity for every parameter up to `max_n`.
///
/// `rising_d` uses `d ∈ {1, 2, 3}`, `dn ≤ max_n`, `x ∈ 1..=5`, compared as
/// `(dn)! x^{↑n} = n! Σ_m c_d(dn, m) (xd)^m`.
pub fn verify_identity(identity: &str, max_n: usize) -> Result<IdentityReport> {
    let mut checked = 0;
    let mut violations = Vec::new();
    let mut check = |label: String, lhs: BigUint, rhs: BigUint| {
        checked += 1;
        if lhs != rhs {
            violations.push(format!("{label}: {lhs} != {rhs}"));
        }
    };
    match identity {
        "rising_d" => {
            for d in 1..=3usize {
                for n in 1..=max_n / d {
                    for x in 1..=5usize {
                        let lhs = factorial(d * n) * rising_factorial(x as i64, n).magnitude();
                        let sum: BigUint = (1..=n)
                            .map(|m| c_divisible(d, d * n, m) * BigUint::from(x * d).pow(m as u32))
                            .sum();
                        check(format!("d={d} n={n} x={x}"), lhs, factorial(n) * sum);
                    }
                }
            }
        }
        "all_odd" => {
            for n in 1..=max_n {
                let lhs: BigUint = (1..=n).map(|m| pow2(m) * c_even_marked(n, m, 0)).sum();
                check(format!("n={n}"), lhs, BigUint::from(2u8) * factorial(n));
            }
        }
        "some_even" => {
            for n in 1..=max_n {
                let lhs = weighted_even_sum(n, |_| BigUint::one());
                check(format!("n={n}"), lhs, BigUint::from(n - 1) * factorial(n));
            }
        }
        "mandev" => {
            for n in 1..=max_n {
                let k = n / 2;
                let rhs = if n % 2 == 0 {
                    factorial(n) * BigUint::from(k * k + 2 * k - 1)
                } else {
                    factorial(n) * BigUint::from(k * (k + 3))
                };
                check(format!("n={n}"), weighted_even_sum(n, pow2), rhs);
            }
        }
        "mandev_minus_one" => {
            for n in 1..=max_n {
                let lhs = weighted_even_sum(n, |e| pow2(e) - 1u8);
                let rhs = factorial(n) * BigUint::from(n.div_ceil(2) * (n / 2));
                check(format!("n={n}"), lhs, rhs);
            }
        }
        other => return Err(Error::UnknownIdentity(other.to_string())),
    }
    Ok(IdentityReport {
        identity: identity.to_string(),
        max_n,
        checked,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use proptest::prelude::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    /// Cycle-type census of S_n: (cycles, even cycles, all divisible by d for d = 1..=4).
    fn census(n: usize) -> Vec<(usize, usize, [bool; 4])> {
        Permutation::all(n)
            .map(|p| {
                let lens = p.cycle_lengths();
                let even = lens.iter().filter(|&&l| l % 2 == 0).count();
                let div = [1, 2, 3, 4].map(|d| lens.iter().all(|&l| l % d == 0));
                (lens.len(), even, div)
            })
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(stirling_c(3, 2), big(3));
        assert_eq!(stirling_c(7, 7), big(1));
        assert_eq!(stirling_c(5, 0), big(0));
        assert_eq!(stirling_c(0, 0), big(1));
        assert_eq!(c_divisible(2, 4, 2), big(3));
        for m in 0..=5 {
            assert_eq!(c_divisible(2, 5, m), big(0));
        }
        // Two cycles in S_4: type (3,1) has no even cycle, type (2,2) has two.
        assert_eq!(c_even_marked(4, 2, 0), big(8));
        assert_eq!(c_even_marked(4, 2, 1), big(0));
        assert_eq!(c_even_marked(4, 2, 2), big(3));
        assert_eq!(c_even_marked(5, 2, 3), big(0));
        assert_eq!(rising_factorial(3, 0), 1.into());
        assert_eq!(rising_factorial(2, 3), 24.into());
        assert_eq!(rising_factorial(-2, 3), 0.into());
    }

    #[test]
    fn census_agreement() {
        for n in 0..=7 {
            let data = census(n);
            for m in 0..=n {
                let count = data.iter().filter(|t| t.0 == m).count() as u64;
                assert_eq!(stirling_c(n, m), big(count), "c({n},{m})");
                for d in 1..=4 {
                    let count = data.iter().filter(|t| t.0 == m && t.2[d - 1]).count() as u64;
                    assert_eq!(c_divisible(d, n, m), big(count), "c_{d}({n},{m})");
                }
                for e in 0..=m {
                    let count = data.iter().filter(|t| t.0 == m && t.1 == e).count() as u64;
                    assert_eq!(c_even_marked(n, m, e), big(count), "c({n},{m},{e})");
                }
            }
        }
    }

    #[test]
    fn recurrences_agree_beyond_census() {
        for d in 1..=4 {
            for n in 0..=16 {
                for m in 0..=n {
                    assert_eq!(c_divisible_by_removal(d, n, m), c_divisible_two_term(d, n, m));
                }
            }
        }
        for n in 0..=12 {
            for m in 0..=n {
                let mut total = BigUint::zero();
                for e in 0..=m {
                    let v = c_even_marked_by_removal(n, m, e);
                    assert_eq!(v, c_even_marked_three_term(n, m, e));
                    total += v;
                }
                assert_eq!(total, stirling_c(n, m));
            }
        }
        for n in 0..=12 {
            for m in 0..=n {
                assert_eq!(c_divisible(1, n, m), stirling_c(n, m));
            }
        }
    }

    #[test]
    fn rising_expansion() {
        for n in 0..=8 {
            for x in 1..=5i64 {
                let s: BigUint = (0..=n)
                    .map(|m| stirling_c(n, m) * BigUint::from(x as u64).pow(m as u32))
                    .sum();
                assert_eq!(&s, rising_factorial(x, n).magnitude());
            }
        }
    }

    #[test]
    fn identity_examples() {
        assert_eq!(big(2) * c_even_marked(3, 1, 0) + big(8) * c_even_marked(3, 3, 0), big(12));
        assert_eq!(weighted_even_sum(2, pow2), big(4));
        assert_eq!(c_divisible(2, 2, 1), big(1));
    }

    #[test]
    fn identities_hold() {
        for name in IDENTITIES {
            let r = verify_identity(name, 12).unwrap();
            assert!(r.passed(), "{name}: {:?}", r.violations);
            assert!(r.checked > 0);
        }
        assert!(matches!(verify_identity("nope", 3), Err(Error::UnknownIdentity(_))));
    }

    proptest! {
        #[test]
        fn row_sums_are_factorials(n in 0usize..20) {
            let s: BigUint = (0..=n).map(|m| stirling_c(n, m)).sum();
            prop_assert_eq!(s, factorial(n));
        }

        #[test]
        fn too_many_even_cycles_vanish(n in 0usize..14, m in 0usize..14, e in 0usize..14) {
            prop_assume!(2 * e > n);
            prop_assert!(c_even_marked(n, m, e).is_zero());
        }
    }
}
