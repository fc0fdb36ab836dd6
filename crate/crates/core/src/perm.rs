//! Permutations of `{0, .., n-1}` stored in image form.
//!
//! Externally (JSON, CLI, `Display`) permutations use one-line image notation
//! with 1-indexed points, so the 3-cycle `(1 2 3)` is written `[2,3,1]`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from 0-indexed images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a permutation of 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation from 1-indexed images (one-line notation).
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(format!(
                "{images:?}: images are 1-indexed"
            )));
        }
        Self::from_images(images.iter().map(|&x| x - 1).collect())
    }

    /// Transposition of the 0-indexed points `a` and `b`.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(degree);
        p.images.swap(a, b);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Self { images: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    /// Cycle lengths, one entry per cycle (fixed points included).
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            out.push(len);
        }
        out
    }

    /// The reduction `S_{n+1} -> S_n` used for facet permutations of a simplex:
    /// the point mapped onto the last point `n` is redirected to `self(n)`.
    pub fn bar(&self) -> Self {
        let n = self
            .degree()
            .checked_sub(1)
            .expect("bar reduction needs degree >= 1");
        let images = (0..n)
            .map(|t| {
                let s = self.images[t];
                if s == n {
                    self.images[n]
                } else {
                    s
                }
            })
            .collect();
        Self { images }
    }

    /// All permutations of the given degree in lexicographic image order.
    pub fn all(degree: usize) -> AllPermutations {
        AllPermutations {
            next: Some((0..degree).collect()),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Iterator over `S_n` in lexicographic order (next-permutation algorithm).
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let n = succ.len();
        if n >= 2 {
            let mut i = n - 1;
            while i > 0 && succ[i - 1] >= succ[i] {
                i -= 1;
            }
            if i > 0 {
                let mut j = n - 1;
                while succ[j] <= succ[i - 1] {
                    j -= 1;
                }
                succ.swap(i - 1, j);
                succ[i..].reverse();
                self.next = Some(succ);
            }
        }
        Some(Permutation { images: current })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_symmetric_group() {
        let all: Vec<_> = Permutation::all(4).collect();
        assert_eq!(all.len(), 24);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, all);
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(1).count(), 1);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::from_one_based(&[1, 1]).is_err());
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
        assert!(Permutation::from_one_based(&[1, 3]).is_err());
    }

    #[test]
    fn bar_reduction() {
        // σ = [4,3,1,2] in S_4: σ(1) = 4 is redirected to σ(4) = 2.
        let s = Permutation::from_one_based(&[4, 3, 1, 2]).unwrap();
        assert_eq!(s.bar().one_based(), vec![2, 3, 1]);
        // A permutation fixing the last point restricts.
        let t = Permutation::from_one_based(&[2, 1, 3]).unwrap();
        assert_eq!(t.bar().one_based(), vec![2, 1]);
        // Transposition (k, n+1) reduces to the identity.
        let u = Permutation::transposition(4, 1, 3);
        assert!(u.bar().is_identity());
    }

    #[test]
    fn inverse_and_compose() {
        for p in Permutation::all(4) {
            assert!(p.compose(&p.inverse()).is_identity());
            assert!(p.inverse().compose(&p).is_identity());
        }
        let c = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        assert_eq!(c.cycle_lengths(), vec![3]);
        assert_eq!(c.to_string(), "[2,3,1]");
    }
}
