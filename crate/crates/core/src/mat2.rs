//! The sixteen elements of M₂(F₂).

use std::fmt;

use crate::error::{Error, Result};
use crate::f2::F2Matrix;

/// A 2×2 matrix over GF(2).
///
/// `[[a, b], [c, d]]` is stored as the nibble `abcd`, so [`Mat2::index`] runs
/// over `0..16` with `0` the zero matrix and `9` the identity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2(u8);

impl Mat2 {
    pub const ZERO: Mat2 = Mat2(0b0000);
    pub const IDENTITY: Mat2 = Mat2(0b1001);
    /// The Hadamard tableau, swapping X and Z.
    pub const J: Mat2 = Mat2(0b0110);
    /// The facet gate `[[1,1],[1,0]]` (X → Y → Z).
    pub const FACET: Mat2 = Mat2(0b1110);
    pub const FACET_INV: Mat2 = Mat2(0b0111);
    pub const ALL_ONES: Mat2 = Mat2(0b1111);

    pub const fn new(a: u8, b: u8, c: u8, d: u8) -> Mat2 {
        Mat2(((a & 1) << 3) | ((b & 1) << 2) | ((c & 1) << 1) | (d & 1))
    }

    pub const fn from_index(i: u8) -> Mat2 {
        Mat2(i & 0xf)
    }

    pub const fn index(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = Mat2> {
        (0..16u8).map(Mat2)
    }

    /// Entries as `[a, b, c, d]` for `[[a, b], [c, d]]`.
    pub const fn entries(self) -> [u8; 4] {
        [(self.0 >> 3) & 1, (self.0 >> 2) & 1, (self.0 >> 1) & 1, self.0 & 1]
    }

    pub const fn get(self, r: usize, c: usize) -> u8 {
        (self.0 >> (3 - (2 * r + c))) & 1
    }

    pub const fn add(self, other: Mat2) -> Mat2 {
        Mat2(self.0 ^ other.0)
    }

    pub const fn mul(self, other: Mat2) -> Mat2 {
        let [a, b, c, d] = self.entries();
        let [e, f, g, h] = other.entries();
        Mat2::new(
            (a & e) ^ (b & g),
            (a & f) ^ (b & h),
            (c & e) ^ (d & g),
            (c & f) ^ (d & h),
        )
    }

    pub const fn transpose(self) -> Mat2 {
        let [a, b, c, d] = self.entries();
        Mat2::new(a, c, b, d)
    }

    /// The symplectic adjoint `J aᵗ J`, which swaps the diagonal entries.
    pub const fn bar(self) -> Mat2 {
        Mat2::J.mul(self.transpose()).mul(Mat2::J)
    }

    pub const fn det(self) -> u8 {
        let [a, b, c, d] = self.entries();
        (a & d) ^ (b & c)
    }

    pub const fn is_invertible(self) -> bool {
        self.det() == 1
    }

    /// Over GF(2) every invertible 2×2 matrix has determinant one, so the
    /// inverse is the adjugate.
    pub const fn inverse(self) -> Option<Mat2> {
        if !self.is_invertible() {
            return None;
        }
        let [a, b, c, d] = self.entries();
        Some(Mat2::new(d, b, c, a))
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Image of the row vector `(x, z)` under right multiplication.
    #[inline]
    pub const fn apply(self, x: u8, z: u8) -> (u8, u8) {
        let [a, b, c, d] = self.entries();
        ((x & a) ^ (z & c), (x & b) ^ (z & d))
    }

    pub fn to_matrix(self) -> F2Matrix {
        let e = self.entries();
        F2Matrix::from_rows(&[[e[0], e[1]], [e[2], e[3]]]).expect("2x2 rows")
    }

    pub fn from_matrix(m: &F2Matrix) -> Result<Mat2> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                found: m.rows() * m.cols(),
            });
        }
        Ok(Mat2::new(
            m.get(0, 0) as u8,
            m.get(0, 1) as u8,
            m.get(1, 0) as u8,
            m.get(1, 1) as u8,
        ))
    }

    /// Compact form `ab/cd`, e.g. `10/01` for the identity.
    pub fn compact(self) -> String {
        let [a, b, c, d] = self.entries();
        format!("{a}{b}/{c}{d}")
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat2({})", self.compact())
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.entries();
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}
