//! Dense linear algebra over GF(2).
//!
//! Vectors and matrix rows are packed into `u64` words; bit `i` of a row lives
//! in word `i / 64` at position `i % 64`. Vectors are row vectors and matrices
//! act on them from the right.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// A vector over GF(2). Bits at positions `>= len` are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    pub(crate) fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(words_for(len), 0);
        let tail = len % WORD;
        if tail != 0 {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        Self { len, words }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &F2Vector) -> Result<()> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        Ok(())
    }

    /// Inner product `a · bᵗ` over GF(2).
    pub fn dot(&self, other: &F2Vector) -> Result<bool> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        Ok(ones & 1 == 1)
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i) as u8).collect()
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vector(")?;
        for i in 0..self.len {
            write!(f, "{}", self.get(i) as u8)?;
        }
        write!(f, ")")
    }
}

/// A dense matrix over GF(2), stored row-major with each row padded to whole words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from nested rows of 0/1 entries. All rows must have equal length.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for (j, &b) in row.iter().enumerate() {
                if b & 1 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        Ok(m)
    }

    pub fn from_vectors(cols: usize, vectors: &[F2Vector]) -> Result<Self> {
        let mut m = Self::zeros(vectors.len(), cols);
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: v.len(),
                });
            }
            m.row_words_mut(i).copy_from_slice(v.words());
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        (self.data[r * self.stride + c / WORD] >> (c % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        let mask = 1u64 << (c % WORD);
        let w = &mut self.data[r * self.stride + c / WORD];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row(&self, r: usize) -> F2Vector {
        F2Vector::from_words(self.cols, self.row_words(r).to_vec())
    }

    pub fn row_vectors(&self) -> Vec<F2Vector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.data.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    /// `row[dst] ^= row[src]`
    fn xor_row_into(&mut self, src: usize, dst: usize) {
        for w in 0..self.stride {
            let s = self.data[src * self.stride + w];
            self.data[dst * self.stride + w] ^= s;
        }
    }

    pub fn add(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = F2Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    for w in 0..out.stride {
                        out.data[i * out.stride + w] ^= other.data[k * other.stride + w];
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_mul_vector(&self, v: &F2Vector) -> Result<F2Vector> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: v.len(),
            });
        }
        let mut out = vec![0u64; self.stride];
        for k in 0..self.rows {
            if v.get(k) {
                for (o, w) in out.iter_mut().zip(self.row_words(k)) {
                    *o ^= w;
                }
            }
        }
        Ok(F2Vector::from_words(self.cols, out))
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut out = F2Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    out.set(j, i, true);
                }
            }
        }
        out
    }

    /// Reduced row-echelon form together with the rank.
    pub fn rref(&self) -> (F2Matrix, usize) {
        let mut m = self.clone();
        let rank = m.rref_in_place();
        (m, rank)
    }

    fn rref_in_place(&mut self) -> usize {
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(found) = (pivot_row..self.rows).find(|&r| self.get(r, col)) else {
                continue;
            };
            self.swap_rows(found, pivot_row);
            for r in 0..self.rows {
                if r != pivot_row && self.get(r, col) {
                    self.xor_row_into(pivot_row, r);
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    pub fn invert(&self) -> Result<F2Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = F2Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                if self.get(i, j) {
                    aug.set(i, j, true);
                }
            }
            aug.set(i, n + i, true);
        }
        let rank = aug.rref_in_place();
        // The left block has full rank iff its diagonal is all ones after reduction.
        if rank < n || (0..n).any(|i| !aug.get(i, i)) {
            return Err(Error::Singular);
        }
        let mut inv = F2Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if aug.get(i, n + j) {
                    inv.set(i, j, true);
                }
            }
        }
        Ok(inv)
    }

    /// Basis of the right kernel `{ x : M xᵗ = 0 }`, one vector per row.
    pub fn nullspace(&self) -> F2Matrix {
        let (r, rank) = self.rref();
        let mut pivots = Vec::with_capacity(rank);
        for i in 0..rank {
            let p = (0..self.cols).find(|&c| r.get(i, c)).expect("nonzero rref row");
            pivots.push(p);
        }
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = F2Matrix::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, true);
            for (i, &p) in pivots.iter().enumerate() {
                if r.get(i, f) {
                    out.set(k, p, true);
                }
            }
        }
        out
    }

    /// Copies the `rows x cols` submatrix whose top-left corner is `(r0, c0)`.
    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> F2Matrix {
        let mut out = F2Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if self.get(r0 + i, c0 + j) {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    /// Compares rows top to bottom, each row read as a bit string from column 0.
    fn cmp_lex(&self, other: &F2Matrix) -> Ordering {
        (self.rows, self.cols)
            .cmp(&(other.rows, other.cols))
            .then_with(|| {
                for (a, b) in self.data.iter().zip(&other.data) {
                    match a.reverse_bits().cmp(&b.reverse_bits()) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for F2Matrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for F2Matrix {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_lex(other)
    }
}

impl fmt::Display for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            for j in 0..self.cols {
                write!(f, "{}", self.get(i, j) as u8)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Matrix[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, " ")?;
            }
            for j in 0..self.cols {
                write!(f, "{}", self.get(i, j) as u8)?;
            }
        }
        write!(f, "]")
    }
}

/// A subspace of F₂^m, held as its reduced row-echelon basis.
///
/// Two spaces are equal exactly when their bases are equal bit for bit.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RowSpace {
    basis: F2Matrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn from_matrix(m: &F2Matrix) -> Self {
        let (r, rank) = m.rref();
        let basis = r.submatrix(0, 0, rank, m.cols());
        let pivots = (0..rank)
            .map(|i| (0..basis.cols()).find(|&c| basis.get(i, c)).expect("nonzero rref row"))
            .collect();
        Self { basis, pivots }
    }

    pub fn from_vectors(ambient: usize, vectors: &[F2Vector]) -> Result<Self> {
        Ok(Self::from_matrix(&F2Matrix::from_vectors(ambient, vectors)?))
    }

    pub fn zero(ambient: usize) -> Self {
        Self::from_matrix(&F2Matrix::zeros(0, ambient))
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_matrix(&F2Matrix::identity(ambient))
    }

    pub fn basis(&self) -> &F2Matrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    /// Reduces `v` against the basis in place; the remainder is zero iff `v` is in the span.
    fn reduce_words(&self, words: &mut [u64]) {
        for (i, &p) in self.pivots.iter().enumerate() {
            if (words[p / WORD] >> (p % WORD)) & 1 == 1 {
                for (w, b) in words.iter_mut().zip(self.basis.row_words(i)) {
                    *w ^= b;
                }
            }
        }
    }

    pub fn contains(&self, v: &F2Vector) -> Result<bool> {
        if v.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: v.len(),
            });
        }
        Ok(self.contains_words(v.words()))
    }

    pub(crate) fn contains_words(&self, words: &[u64]) -> bool {
        let mut scratch = words.to_vec();
        self.reduce_words(&mut scratch);
        scratch.iter().all(|&w| w == 0)
    }

    pub fn contains_space(&self, other: &RowSpace) -> bool {
        other.ambient_dim() == self.ambient_dim()
            && (0..other.dim()).all(|i| self.contains_words(other.basis.row_words(i)))
    }
}

/// Membership of `v` in the row space of `s`.
pub fn member(v: &F2Vector, s: &RowSpace) -> Result<bool> {
    s.contains(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u8]]) -> F2Matrix {
        F2Matrix::from_rows(rows).unwrap()
    }

    #[test]
    fn rref_examples() {
        let (r, rank) = m(&[&[1, 1], &[0, 1]]).rref();
        assert_eq!((r, rank), (F2Matrix::identity(2), 2));

        let (r, rank) = m(&[&[1, 1], &[1, 1]]).rref();
        assert_eq!(rank, 1);
        assert_eq!(r, m(&[&[1, 1], &[0, 0]]));

        let (r, rank) = F2Matrix::zeros(3, 3).rref();
        assert_eq!((r, rank), (F2Matrix::zeros(3, 3), 0));
    }

    #[test]
    fn member_examples() {
        let full = RowSpace::full(2);
        assert!(member(&F2Vector::from_bits(&[1, 1]), &full).unwrap());
        let z = RowSpace::from_matrix(&m(&[&[0, 1]]));
        assert!(!member(&F2Vector::from_bits(&[1, 0]), &z).unwrap());
        assert!(member(&F2Vector::zeros(2), &z).unwrap());
        assert!(member(&F2Vector::zeros(2), &RowSpace::zero(2)).unwrap());
        assert!(matches!(
            member(&F2Vector::zeros(3), &z),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(F2Matrix::identity(4).invert().unwrap(), F2Matrix::identity(4));
        let a = m(&[&[1, 0], &[1, 1]]);
        assert_eq!(a.invert().unwrap(), a);
        assert_eq!(m(&[&[1, 1], &[1, 1]]).invert(), Err(Error::Singular));
        assert!(F2Matrix::zeros(2, 3).invert().is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let j = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(j.mul(&j).unwrap(), F2Matrix::identity(2));
        let x = m(&[&[1, 1], &[1, 0]]);
        assert_eq!(x.mul(&x).unwrap(), m(&[&[0, 1], &[1, 1]]));
        assert!(x.add(&x).unwrap().is_zero());
        assert!(x.mul(&F2Matrix::zeros(3, 1)).is_err());
        assert!(x.add(&F2Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn wide_rows_cross_word_boundary() {
        let mut a = F2Matrix::zeros(3, 130);
        a.set(0, 0, true);
        a.set(0, 129, true);
        a.set(1, 64, true);
        a.set(2, 129, true);
        let (_, rank) = a.rref();
        assert_eq!(rank, 3);
        let s = RowSpace::from_matrix(&a);
        let mut v = F2Vector::zeros(130);
        v.set(0, true);
        assert!(s.contains(&v).unwrap());
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn nullspace_is_orthogonal() {
        let a = m(&[&[1, 1, 0, 1], &[0, 1, 1, 1]]);
        let k = a.nullspace();
        assert_eq!(k.rows(), 2);
        assert!(a.mul(&k.transpose()).unwrap().is_zero());
    }

    #[test]
    fn lex_order_reads_column_zero_first() {
        let a = m(&[&[1, 0, 0]]);
        let b = m(&[&[0, 1, 1]]);
        assert!(b < a);
    }
}
