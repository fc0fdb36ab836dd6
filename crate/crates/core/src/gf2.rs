//! Linear algebra over GF(2).
//!
//! [`Gf2Vector`] packs up to [`MAX_DIM`] coordinates into one machine word.
//! Coordinates are 1-indexed; coordinate `k` of a `dim`-dimensional vector
//! lives at bit `dim - k`, so comparing the packed words of two vectors of
//! equal dimension agrees with comparing their bit strings lexicographically.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const MAX_DIM: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vector {
    dim: u8,
    bits: u64,
}

#[inline]
fn low_mask(dim: usize) -> u64 {
    if dim >= 64 {
        u64::MAX
    } else {
        (1u64 << dim) - 1
    }
}

impl Gf2Vector {
    pub fn zero(dim: usize) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::InvalidDimension(dim));
        }
        Ok(Self {
            dim: dim as u8,
            bits: 0,
        })
    }

    pub fn ones(dim: usize) -> Result<Self> {
        let mut v = Self::zero(dim)?;
        v.bits = low_mask(dim);
        Ok(v)
    }

    /// Vector whose packed word is `bits`; coordinate 1 is the most
    /// significant of the low `dim` bits.
    pub fn from_packed(dim: usize, bits: u64) -> Result<Self> {
        let mut v = Self::zero(dim)?;
        if bits & !low_mask(dim) != 0 {
            return Err(Error::InvalidBitString(format!(
                "{bits:#x} has bits beyond dimension {dim}"
            )));
        }
        v.bits = bits;
        Ok(v)
    }

    pub fn from_coords(coords: &[u8]) -> Result<Self> {
        let mut v = Self::zero(coords.len())?;
        for (i, &c) in coords.iter().enumerate() {
            match c {
                0 => {}
                1 => v.set(i + 1, true),
                _ => return Err(Error::InvalidBitString(format!("{coords:?}"))),
            }
        }
        Ok(v)
    }

    /// The vector with every coordinate 1 except coordinate `k`.
    pub fn all_ones_except(dim: usize, k: usize) -> Result<Self> {
        let mut v = Self::ones(dim)?;
        v.check_coord(k)?;
        v.set(k, false);
        Ok(v)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    #[inline]
    pub fn packed(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    fn check_coord(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.dim() {
            Err(Error::CoordinateOutOfRange { k, dim: self.dim() })
        } else {
            Ok(())
        }
    }

    /// Coordinate `k` (1-indexed). Panics when out of range.
    #[inline]
    pub fn coord(&self, k: usize) -> bool {
        assert!(k >= 1 && k <= self.dim(), "coordinate {k} out of range");
        (self.bits >> (self.dim() - k)) & 1 == 1
    }

    pub fn try_coord(&self, k: usize) -> Result<bool> {
        self.check_coord(k)?;
        Ok(self.coord(k))
    }

    #[inline]
    pub fn set(&mut self, k: usize, value: bool) {
        assert!(k >= 1 && k <= self.dim(), "coordinate {k} out of range");
        let bit = 1u64 << (self.dim() - k);
        if value {
            self.bits |= bit;
        } else {
            self.bits &= !bit;
        }
    }

    /// Coordinatewise sum mod 2.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(Self {
            dim: self.dim,
            bits: self.bits ^ other.bits,
        })
    }

    /// Coordinate permutation with `result_i = self_{sigma(i)}`.
    ///
    /// Under this convention `permute(σ ∘ τ) = permute(σ)` followed by
    /// `permute(τ)`.
    pub fn permute(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.degree() != self.dim() {
            return Err(Error::DegreeMismatch {
                expected: self.dim(),
                actual: sigma.degree(),
            });
        }
        let mut out = Self {
            dim: self.dim,
            bits: 0,
        };
        for i in 1..=self.dim() {
            if self.coord(sigma.apply(i - 1) + 1) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    /// All vectors of the given dimension in increasing lexicographic order.
    pub fn all(dim: usize) -> Result<impl Iterator<Item = Gf2Vector>> {
        Self::zero(dim)?;
        if dim >= 32 {
            return Err(Error::BudgetExceeded {
                what: "vector listing",
                estimate: format!("2^{dim}"),
                limit: 1 << 31,
            });
        }
        Ok((0..(1u64 << dim)).map(move |bits| Self {
            dim: dim as u8,
            bits,
        }))
    }

    pub fn nonzero(dim: usize) -> Result<impl Iterator<Item = Gf2Vector>> {
        Ok(Self::all(dim)?.skip(1))
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 1..=self.dim() {
            f.write_str(if self.coord(k) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Gf2Vector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords: Option<Vec<u8>> = s
            .chars()
            .map(|c| match c {
                '0' => Some(0),
                '1' => Some(1),
                _ => None,
            })
            .collect();
        match coords {
            Some(c) if !c.is_empty() && c.len() <= MAX_DIM => Self::from_coords(&c),
            _ => Err(Error::InvalidBitString(s.to_string())),
        }
    }
}

/// Square matrix over GF(2) of size at most 64, one packed word per row
/// (bit `j` of row `i` is entry `(i, j)`, both 0-indexed).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    n: usize,
    rows: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zero(n: usize) -> Self {
        assert!(n <= 64, "Gf2Matrix supports at most 64 rows");
        Self {
            n,
            rows: vec![0; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.rows[i] = 1 << i;
        }
        m
    }

    pub fn from_rows(rows: &[&[u8]]) -> Result<Self> {
        let n = rows.len();
        let mut m = Self::zero(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            for (j, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 => m.rows[i] |= 1 << j,
                    _ => return Err(Error::InvalidBitString(format!("{row:?}"))),
                }
            }
        }
        Ok(m)
    }

    pub(crate) fn from_row_words(n: usize, rows: Vec<u64>) -> Self {
        debug_assert_eq!(rows.len(), n);
        Self { n, rows }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.rows[i] >> j) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    pub fn row_word(&self, i: usize) -> u64 {
        self.rows[i]
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = Self::zero(self.n);
        for i in 0..self.n {
            let mut acc = 0u64;
            let mut r = self.rows[i];
            while r != 0 {
                let k = r.trailing_zeros() as usize;
                acc ^= other.rows[k];
                r &= r - 1;
            }
            out.rows[i] = acc;
        }
        Ok(out)
    }

    /// Determinant over GF(2) by Gaussian elimination.
    pub fn det(&self) -> u8 {
        let mut rows = self.rows.clone();
        for col in 0..self.n {
            let Some(p) = (col..self.n).find(|&r| (rows[r] >> col) & 1 == 1) else {
                return 0;
            };
            rows.swap(col, p);
            let pivot = rows[col];
            for r in rows.iter_mut().skip(col + 1) {
                if (*r >> col) & 1 == 1 {
                    *r ^= pivot;
                }
            }
        }
        1
    }

    /// Inverse by Gauss-Jordan elimination on `[self | I]`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.rows.clone();
        let mut inv = Self::identity(n).rows;
        for col in 0..n {
            let p = (col..n)
                .find(|&r| (a[r] >> col) & 1 == 1)
                .ok_or(Error::Singular)?;
            a.swap(col, p);
            inv.swap(col, p);
            for r in 0..n {
                if r != col && (a[r] >> col) & 1 == 1 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Ok(Self { n, rows: inv })
    }

    /// Determinant of the principal submatrix on the index set `subset`
    /// (bit `i` set means row/column `i` is kept).
    pub fn principal_minor(&self, subset: u64) -> u8 {
        let idx: Vec<usize> = (0..self.n).filter(|&i| (subset >> i) & 1 == 1).collect();
        let mut sub = Self::zero(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                if self.get(i, j) {
                    sub.rows[a] |= 1 << b;
                }
            }
        }
        sub.det()
    }

    /// True iff every nonempty principal minor equals 1.
    pub fn all_principal_minors_one(&self) -> bool {
        assert!(self.n < 64, "too many principal minors");
        (1..(1u64 << self.n)).all(|s| self.principal_minor(s) == 1)
    }
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
            if i + 1 < self.n {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(s: &str) -> Gf2Vector {
        s.parse().unwrap()
    }

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_one_based(images).unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(v("10").add(&v("11")).unwrap(), v("01"));
        assert_eq!(v("101").add(&v("000")).unwrap(), v("101"));
        assert!(v("0110").add(&v("0110")).unwrap().is_zero());
        assert_eq!(
            v("10").add(&v("101")),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn permute_examples() {
        let cyc = p(&[2, 3, 1]);
        assert_eq!(v("101").permute(&cyc).unwrap(), v("011"));
        assert_eq!(v("111").permute(&cyc).unwrap(), v("111"));
        assert_eq!(v("1101").permute(&Permutation::identity(4)).unwrap(), v("1101"));
        assert!(matches!(
            v("10").permute(&cyc),
            Err(Error::DegreeMismatch { expected: 2, actual: 3 })
        ));
    }

    #[test]
    fn bit_string_round_trip_and_order() {
        assert_eq!(v("100").to_string(), "100");
        assert!(v("011") < v("100"));
        assert!(v("000") < v("001"));
        assert!("".parse::<Gf2Vector>().is_err());
        assert!("10a".parse::<Gf2Vector>().is_err());
        assert_eq!(Gf2Vector::all_ones_except(3, 1).unwrap(), v("011"));
        assert!(Gf2Vector::all_ones_except(3, 4).is_err());
        let listed: Vec<String> = Gf2Vector::all(2).unwrap().map(|x| x.to_string()).collect();
        assert_eq!(listed, ["00", "01", "10", "11"]);
    }

    #[test]
    fn full_word_dimension() {
        let a = Gf2Vector::ones(64).unwrap();
        assert_eq!(a.weight(), 64);
        assert!(a.coord(1) && a.coord(64));
        assert!(a.add(&a).unwrap().is_zero());
        assert!(Gf2Vector::zero(65).is_err());
        assert!(Gf2Vector::zero(0).is_err());
    }

    #[test]
    fn det_examples() {
        for n in 0..8 {
            assert_eq!(Gf2Matrix::identity(n).det(), 1);
        }
        let ones = Gf2Matrix::from_rows(&[&[1, 1], &[1, 1]]).unwrap();
        assert_eq!(ones.det(), 0);
        let p = Gf2Matrix::from_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(p.det(), 1);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Gf2Matrix::identity(4).inverse().unwrap(), Gf2Matrix::identity(4));
        let u = Gf2Matrix::from_rows(&[&[1, 1], &[0, 1]]).unwrap();
        assert_eq!(u.inverse().unwrap(), u);
        let ones = Gf2Matrix::from_rows(&[&[1, 1], &[1, 1]]).unwrap();
        assert_eq!(ones.inverse(), Err(Error::Singular));
    }

    fn all_matrices(n: usize) -> impl Iterator<Item = Gf2Matrix> {
        let cells = n * n;
        (0..(1u64 << cells)).map(move |code| {
            let rows = (0..n).map(|i| (code >> (i * n)) & ((1 << n) - 1)).collect();
            Gf2Matrix::from_row_words(n, rows)
        })
    }

    #[test]
    fn det_iff_invertible_exhaustive() {
        // |GL(3,2)| = 168 and |GL(4,2)| = 20160.
        for (n, expected) in [(3usize, 168usize), (4, 20160)] {
            let mut invertible = 0;
            for m in all_matrices(n) {
                match m.inverse() {
                    Ok(inv) => {
                        assert_eq!(m.det(), 1);
                        assert_eq!(m.mul(&inv).unwrap(), Gf2Matrix::identity(n));
                        assert_eq!(inv.mul(&m).unwrap(), Gf2Matrix::identity(n));
                        invertible += 1;
                    }
                    Err(Error::Singular) => assert_eq!(m.det(), 0),
                    Err(e) => panic!("unexpected error {e}"),
                }
            }
            assert_eq!(invertible, expected);
        }
    }

    fn vec_strategy(dim: usize) -> impl Strategy<Value = Gf2Vector> {
        (0..(1u64 << dim)).prop_map(move |bits| Gf2Vector::from_packed(dim, bits).unwrap())
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    fn invertible_strategy(n: usize) -> impl Strategy<Value = Gf2Matrix> {
        proptest::collection::vec(0..(1u64 << n), n)
            .prop_map(move |rows| Gf2Matrix::from_row_words(n, rows))
            .prop_filter("singular", |m| m.det() == 1)
    }

    proptest! {
        #[test]
        fn add_is_an_elementary_abelian_group(
            (a, b, c) in (1usize..=12).prop_flat_map(|d| (vec_strategy(d), vec_strategy(d), vec_strategy(d)))
        ) {
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
            prop_assert!(a.add(&a).unwrap().is_zero());
        }

        #[test]
        fn permute_composition_order(
            (x, s, t) in (1usize..=8).prop_flat_map(|d| (vec_strategy(d), perm_strategy(d), perm_strategy(d)))
        ) {
            let lhs = x.permute(&s.compose(&t)).unwrap();
            let rhs = x.permute(&s).unwrap().permute(&t).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn random_inverse_multiplies_back(m in invertible_strategy(5)) {
            let inv = m.inverse().unwrap();
            prop_assert_eq!(m.mul(&inv).unwrap(), Gf2Matrix::identity(5));
        }

        #[test]
        fn bit_string_round_trip(x in (1usize..=20).prop_flat_map(vec_strategy)) {
            prop_assert_eq!(x.to_string().parse::<Gf2Vector>().unwrap(), x);
        }
    }
}
