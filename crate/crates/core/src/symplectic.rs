//! The symplectic form on F₂^{2n} in interleaved `(x₁, z₁, x₂, z₂, …)` coordinates.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::f2::{F2Matrix, F2Vector};
use crate::mat2::Mat2;

pub(crate) const EVEN_BITS: u64 = 0x5555_5555_5555_5555;

/// Exchanges the x and z bit of every interleaved pair in a word.
#[inline]
pub(crate) const fn swap_pairs(w: u64) -> u64 {
    ((w & EVEN_BITS) << 1) | ((w >> 1) & EVEN_BITS)
}

/// `ω` on packed words in interleaved layout.
#[inline]
pub(crate) fn omega_words(a: &[u64], c: &[u64]) -> bool {
    let ones: u32 = a
        .iter()
        .zip(c)
        .map(|(&x, &y)| (x & swap_pairs(y)).count_ones())
        .sum();
    ones & 1 == 1
}

/// The matrix `J_n`: `n` copies of `J = [[0,1],[1,0]]` on the diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    n: usize,
    jn: F2Matrix,
}

impl SymplecticForm {
    pub fn new(n: usize) -> Self {
        let mut jn = F2Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            jn.set(2 * i, 2 * i + 1, true);
            jn.set(2 * i + 1, 2 * i, true);
        }
        Self { n, jn }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &F2Matrix {
        &self.jn
    }
}

/// `ω(a, c) = a J_n cᵗ`; true iff the corresponding Pauli strings anticommute.
pub fn omega(a: &F2Vector, c: &F2Vector, n: usize) -> Result<bool> {
    for v in [a, c] {
        if v.len() != 2 * n {
            return Err(Error::DimensionMismatch {
                expected: 2 * n,
                found: v.len(),
            });
        }
    }
    Ok(omega_words(a.words(), c.words()))
}

/// Whether `t J_ℓ tᵗ = J_ℓ`.
pub fn is_symplectic(t: &F2Matrix, ell: usize) -> Result<bool> {
    if t.rows() != 2 * ell || t.cols() != 2 * ell {
        return Err(Error::DimensionMismatch {
            expected: 2 * ell,
            found: if t.rows() != 2 * ell { t.rows() } else { t.cols() },
        });
    }
    Ok(gram_is_standard(t))
}

/// Rows `r_i` of a symplectic matrix satisfy `ω(r_i, r_j) = J_{ij}`.
pub(crate) fn gram_is_standard(t: &F2Matrix) -> bool {
    let m = t.rows();
    for i in 0..m {
        for j in i..m {
            let expected = i / 2 == j / 2 && i != j;
            if omega_words(t.row_words(i), t.row_words(j)) != expected {
                return false;
            }
        }
    }
    true
}

/// The six elements of Sp(2, F₂) = GL(2, F₂), in this order:
/// `I`, `J`, `[[1,1],[1,0]]`, `[[0,1],[1,1]]`, `[[1,1],[0,1]]`, `[[1,0],[1,1]]`.
pub fn sp2_elements() -> [Mat2; 6] {
    [
        Mat2::IDENTITY,
        Mat2::J,
        Mat2::FACET,
        Mat2::FACET_INV,
        Mat2::new(1, 1, 0, 1),
        Mat2::new(1, 0, 1, 1),
    ]
}

/// `|Sp(2ℓ, F₂)| = 2^{ℓ²} ∏_{i=1}^{ℓ} (4^i − 1)`.
pub fn sp_order(ell: usize) -> BigUint {
    let mut order = BigUint::from(1u32) << (ell * ell);
    for i in 1..=ell {
        order *= (BigUint::from(1u32) << (2 * i)) - 1u32;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(bits: &[u8]) -> F2Vector {
        F2Vector::from_bits(bits)
    }

    #[test]
    fn omega_examples() {
        assert!(omega(&v(&[1, 0]), &v(&[0, 1]), 1).unwrap());
        assert!(!omega(&v(&[1, 1, 0, 1]), &v(&[1, 1, 0, 1]), 2).unwrap());
        assert!(!omega(&v(&[1, 0, 0, 1]), &v(&[0, 1, 1, 0]), 2).unwrap());
        assert!(omega(&v(&[1, 0]), &v(&[0, 1, 0, 0]), 1).is_err());
    }

    #[test]
    fn omega_matches_matrix_form() {
        let j = SymplecticForm::new(2);
        let a = v(&[1, 1, 0, 1]);
        let c = v(&[0, 1, 1, 1]);
        let ac = j.matrix().left_mul_vector(&c).unwrap();
        assert_eq!(omega(&a, &c, 2).unwrap(), a.dot(&ac).unwrap());
    }

    #[test]
    fn jn_squares_to_identity() {
        let j = SymplecticForm::new(3);
        assert_eq!(j.matrix().mul(j.matrix()).unwrap(), F2Matrix::identity(6));
        assert_eq!(j.matrix().transpose(), *j.matrix());
    }

    #[test]
    fn is_symplectic_examples() {
        assert!(is_symplectic(&F2Matrix::identity(4), 2).unwrap());
        let cnot = F2Matrix::from_rows(&[[1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 1, 0, 1]]).unwrap();
        assert!(is_symplectic(&cnot, 2).unwrap());
        let ones = F2Matrix::from_rows(&[[1, 1], [1, 1]]).unwrap();
        assert!(!is_symplectic(&ones, 1).unwrap());
        assert!(is_symplectic(&ones, 2).is_err());
    }

    #[test]
    fn sp2_elements_are_the_invertible_matrices() {
        let els = sp2_elements();
        assert_eq!(els.len(), 6);
        assert!(els.contains(&Mat2::J));
        for t in els {
            assert!(is_symplectic(&t.to_matrix(), 1).unwrap());
        }
        let mut sorted = els.to_vec();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 6);
    }

    #[test]
    fn sp_order_values() {
        assert_eq!(sp_order(1), BigUint::from(6u32));
        assert_eq!(sp_order(2), BigUint::from(720u32));
        assert_eq!(sp_order(3), BigUint::from(1_451_520u32));
    }
}
