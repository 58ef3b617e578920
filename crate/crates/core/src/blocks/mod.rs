//! Transversal action on ℓ code blocks.
//!
//! A `2ℓ × 2ℓ` tableau is viewed as an `ℓ × ℓ` matrix of 2×2 blocks. On
//! `C^{(ℓ)}` it acts qubit by qubit: the `2ℓ` coordinates belonging to
//! physical qubit `i` of every block are stored contiguously and multiplied
//! on the right by the tableau.

mod family;
mod search;

use std::fmt;

use num_bigint::BigUint;

use crate::code::StabilizerCode;
use crate::endo::{classify, endo_algebra, EndoAlgebra, FamilyCase};
use crate::error::{Error, Result};
use crate::f2::{F2Matrix, F2Vector};
use crate::mat2::Mat2;
use crate::symplectic::gram_is_standard;

pub use family::{
    count_group, reference_order, Auto, ClosedForm, Enumeration, FamilyRegistry, GeneralLinear,
    GroupFamily, MethodRegistry, OrderMethod, Orthogonal, OrthogonalDualNumbers, Symplectic,
    UnitaryF4, UnitaryR8,
};
pub use search::{count_in_algebra, enumerate_in_algebra};

/// Default bound on the number of group elements materialised by [`enumerate_group`].
pub const DEFAULT_ENUMERATION_CAP: u64 = 2_000_000;
/// Default bound on candidate block rows examined while counting.
pub const DEFAULT_NODE_CAP: u64 = 100_000_000;

/// A `2ℓ × 2ℓ` matrix over GF(2) viewed as `ℓ × ℓ` blocks of size 2×2.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockMatrix {
    ell: usize,
    t: F2Matrix,
}

impl BlockMatrix {
    pub fn new(t: F2Matrix) -> Result<Self> {
        if !t.is_square() {
            return Err(Error::DimensionMismatch {
                expected: t.rows(),
                found: t.cols(),
            });
        }
        if !t.rows().is_multiple_of(2) || t.rows() == 0 {
            return Err(Error::OddLength(t.rows()));
        }
        Ok(Self { ell: t.rows() / 2, t })
    }

    pub fn from_blocks(ell: usize, block: impl Fn(usize, usize) -> Mat2) -> Self {
        let mut t = F2Matrix::zeros(2 * ell, 2 * ell);
        for i in 0..ell {
            for j in 0..ell {
                let b = block(i, j);
                for r in 0..2 {
                    for c in 0..2 {
                        if b.get(r, c) == 1 {
                            t.set(2 * i + r, 2 * j + c, true);
                        }
                    }
                }
            }
        }
        Self { ell, t }
    }

    pub fn identity(ell: usize) -> Self {
        Self {
            ell,
            t: F2Matrix::identity(2 * ell),
        }
    }

    /// The block permutation sending block `i` to block `perm[i]`.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let ell = perm.len();
        let mut seen = vec![false; ell];
        for &p in perm {
            if p >= ell || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation")));
            }
        }
        Ok(Self::from_blocks(ell, |i, j| {
            if perm[i] == j {
                Mat2::IDENTITY
            } else {
                Mat2::ZERO
            }
        }))
    }

    /// `diag(m, m, …, m)`.
    pub fn diagonal(ell: usize, m: Mat2) -> Self {
        Self::from_blocks(ell, |i, j| if i == j { m } else { Mat2::ZERO })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn matrix(&self) -> &F2Matrix {
        &self.t
    }

    pub fn into_matrix(self) -> F2Matrix {
        self.t
    }

    pub fn block(&self, i: usize, j: usize) -> Mat2 {
        Mat2::new(
            self.t.get(2 * i, 2 * j) as u8,
            self.t.get(2 * i, 2 * j + 1) as u8,
            self.t.get(2 * i + 1, 2 * j) as u8,
            self.t.get(2 * i + 1, 2 * j + 1) as u8,
        )
    }

    pub fn blocks(&self) -> impl Iterator<Item = ((usize, usize), Mat2)> + '_ {
        (0..self.ell).flat_map(move |i| (0..self.ell).map(move |j| ((i, j), self.block(i, j))))
    }

    pub fn mul(&self, other: &BlockMatrix) -> Result<BlockMatrix> {
        Ok(Self {
            ell: self.ell,
            t: self.t.mul(&other.t)?,
        })
    }

    pub fn invert(&self) -> Result<BlockMatrix> {
        Ok(Self {
            ell: self.ell,
            t: self.t.invert()?,
        })
    }

    /// `D · self · D⁻¹` with `D = diag(r, …, r)`: each block becomes `r t_{ij} r⁻¹`.
    ///
    /// If `self` is transversal for `C · r`, the result is transversal for `C`.
    pub fn conjugate_blocks(&self, r: Mat2) -> Result<BlockMatrix> {
        let inv = r.inverse().ok_or(Error::Singular)?;
        Ok(Self::from_blocks(self.ell, |i, j| r.mul(self.block(i, j)).mul(inv)))
    }

    /// Nonzero-block indicator, row by row.
    pub fn support(&self) -> Vec<Vec<bool>> {
        (0..self.ell)
            .map(|i| (0..self.ell).map(|j| !self.block(i, j).is_zero()).collect())
            .collect()
    }

    /// Whether exactly one block in every block row and column is nonzero,
    /// i.e. the matrix is a block permutation times a block-diagonal matrix.
    pub fn has_permutation_support(&self) -> bool {
        let s = self.support();
        (0..self.ell).all(|i| s[i].iter().filter(|&&b| b).count() == 1)
            && (0..self.ell).all(|j| (0..self.ell).filter(|&i| s[i][j]).count() == 1)
    }

    /// Whether every block is `0` or `I` and the support is a permutation.
    pub fn is_block_permutation(&self) -> bool {
        self.has_permutation_support()
            && self.blocks().all(|(_, b)| b == Mat2::ZERO || b == Mat2::IDENTITY)
    }
}

impl fmt::Display for BlockMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.t, f)
    }
}

impl fmt::Debug for BlockMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BlockMatrix(l={}, {:?})", self.ell, self.t)
    }
}

/// The transversal action of `t` on a vector of `C^{(ℓ)}` in qubit-major layout.
pub fn act_blocks(v: &F2Vector, t: &BlockMatrix) -> Result<F2Vector> {
    let width = 2 * t.ell();
    if !v.len().is_multiple_of(width) {
        return Err(Error::DimensionMismatch {
            expected: width * (v.len() / width + 1),
            found: v.len(),
        });
    }
    let mut out = F2Vector::zeros(v.len());
    for q in 0..v.len() / width {
        let slice = F2Vector::from_bits(&(0..width).map(|b| v.get(q * width + b) as u8).collect::<Vec<_>>());
        let image = t.matrix().left_mul_vector(&slice)?;
        for b in 0..width {
            if image.get(b) {
                out.set(q * width + b, true);
            }
        }
    }
    Ok(out)
}

/// Interleaves `ℓ` vectors of length `2n` into one qubit-major vector.
pub fn interleave_blocks(parts: &[F2Vector]) -> Result<F2Vector> {
    let ell = parts.len();
    let len = parts.first().map_or(0, F2Vector::len);
    let n = len / 2;
    let mut out = F2Vector::zeros(2 * n * ell);
    for (p, v) in parts.iter().enumerate() {
        if v.len() != len {
            return Err(Error::DimensionMismatch {
                expected: len,
                found: v.len(),
            });
        }
        for q in 0..n {
            out.set(q * 2 * ell + 2 * p, v.get(2 * q));
            out.set(q * 2 * ell + 2 * p + 1, v.get(2 * q + 1));
        }
    }
    Ok(out)
}

/// Inverse of [`interleave_blocks`].
pub fn split_blocks(v: &F2Vector, ell: usize) -> Result<Vec<F2Vector>> {
    if ell == 0 || !v.len().is_multiple_of(2 * ell) {
        return Err(Error::DimensionMismatch {
            expected: 2 * ell,
            found: v.len(),
        });
    }
    let n = v.len() / (2 * ell);
    Ok((0..ell)
        .map(|p| {
            let mut part = F2Vector::zeros(2 * n);
            for q in 0..n {
                part.set(2 * q, v.get(q * 2 * ell + 2 * p));
                part.set(2 * q + 1, v.get(q * 2 * ell + 2 * p + 1));
            }
            part
        })
        .collect())
}

/// Whether every block of `t` lies in `a`.
pub fn in_ml_a(t: &BlockMatrix, a: EndoAlgebra) -> bool {
    t.blocks().all(|(_, b)| a.contains(b))
}

/// Brute-force check that `C^{(ℓ)} · t ⊆ C^{(ℓ)}`.
///
/// Each basis vector of `C` is placed in each block position in turn, the
/// tableau is applied, and every output block is tested for membership in `C`.
/// This never consults the endomorphism algebra.
pub fn preserves_l_blocks(c: &StabilizerCode, t: &BlockMatrix) -> bool {
    let ell = t.ell();
    let zero = F2Vector::zeros(2 * c.n());
    let basis = c.space().basis();
    for r in 0..basis.rows() {
        let b = basis.row(r);
        for p in 0..ell {
            let mut parts = vec![zero.clone(); ell];
            parts[p] = b.clone();
            let v = interleave_blocks(&parts).expect("equal lengths");
            let image = act_blocks(&v, t).expect("conforming length");
            let blocks = split_blocks(&image, ell).expect("conforming length");
            if !blocks.iter().all(|w| c.space().contains(w).expect("ambient dimension")) {
                return false;
            }
        }
    }
    true
}

/// `ā = J aᵗ J`.
pub fn bar(a: Mat2) -> Mat2 {
    a.bar()
}

/// Blockwise bar followed by block transposition: `(T̄ᵗ)_{jk} = bar(t_{kj})`.
/// Equals `J_ℓ tᵗ J_ℓ`.
pub fn bar_transpose(t: &BlockMatrix) -> BlockMatrix {
    BlockMatrix::from_blocks(t.ell(), |j, k| t.block(k, j).bar())
}

/// `t · T̄ᵗ = I`. On `M_ℓ(A)` this coincides with the symplectic condition.
pub fn is_unitary_over_a(t: &BlockMatrix) -> bool {
    t.mul(&bar_transpose(t)).expect("square") == BlockMatrix::identity(t.ell())
}

/// Symplectic check on a block matrix.
pub fn is_symplectic_block(t: &BlockMatrix) -> bool {
    gram_is_standard(t.matrix())
}

/// The diagonal transversal Clifford group on `ℓ` blocks of a code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalGroup {
    pub ell: usize,
    pub family_case: FamilyCase,
    /// Canonically ordered elements, when enumerated.
    pub elements: Option<Vec<BlockMatrix>>,
    pub order: BigUint,
}

/// Enumerates `G_C^ℓ = M_ℓ(A) ∩ Sp(2ℓ, F₂)` where `A` is the endomorphism algebra of `c`.
///
/// The order is computed first; if it exceeds `cap` nothing is materialised and
/// the error carries the order (or the closed-form order of the family when
/// even counting is out of reach).
pub fn enumerate_group(c: &StabilizerCode, ell: usize, cap: u64) -> Result<TransversalGroup> {
    let algebra = endo_algebra(c);
    let case = classify(c).case;
    let predicted = match count_in_algebra(algebra, ell, DEFAULT_NODE_CAP) {
        Ok(n) => BigUint::from(n),
        Err(Error::CapExceeded { .. }) => {
            return Err(Error::CapExceeded {
                cap,
                predicted: FamilyRegistry::standard()
                    .by_case(case)
                    .and_then(|f| f.closed_form_order(ell)),
            })
        }
        Err(e) => return Err(e),
    };
    if predicted > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            cap,
            predicted: Some(predicted),
        });
    }
    let elements = enumerate_in_algebra(algebra, ell, cap)?;
    Ok(TransversalGroup {
        ell,
        family_case: case,
        order: BigUint::from(elements.len()),
        elements: Some(elements),
    })
}

/// Order of `G_C^ℓ` without storing elements. Falls back to the family's closed
/// form when the search budget runs out.
pub fn group_order(c: &StabilizerCode, ell: usize, node_cap: u64) -> Result<TransversalGroup> {
    let algebra = endo_algebra(c);
    let case = classify(c).case;
    let order = match count_in_algebra(algebra, ell, node_cap) {
        Ok(n) => BigUint::from(n),
        Err(Error::CapExceeded { .. }) => FamilyRegistry::standard()
            .by_case(case)
            .and_then(|f| f.closed_form_order(ell))
            .ok_or(Error::CapExceeded {
                cap: node_cap,
                predicted: None,
            })?,
        Err(e) => return Err(e),
    };
    Ok(TransversalGroup {
        ell,
        family_case: case,
        elements: None,
        order,
    })
}

/// Parses a tableau: `2ℓ` lines of `2ℓ` characters over `{0, 1}`. Row `i` is
/// the image of the `i`-th generator in the order `X₁, Z₁, …, X_ℓ, Z_ℓ`.
/// Blank lines and `#` comments are ignored.
pub fn parse_tableau(text: &str) -> Result<BlockMatrix> {
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let row = content
            .chars()
            .enumerate()
            .map(|(i, ch)| match ch {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::Parse {
                    line: lineno + 1,
                    column: i + 1,
                    message: format!("unexpected character {ch:?} in tableau"),
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::Parse {
                    line: lineno + 1,
                    column: 1,
                    message: format!("expected {} columns, found {}", first.len(), row.len()),
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Empty);
    }
    BlockMatrix::new(F2Matrix::from_rows(&rows)?)
}

pub fn render_tableau(t: &BlockMatrix) -> String {
    t.to_string()
}

/// Tableaus separated by blank lines, in the order given.
pub fn render_group_dump(elements: &[BlockMatrix]) -> String {
    let mut out = elements
        .iter()
        .map(render_tableau)
        .collect::<Vec<_>>()
        .join("\n\n");
    out.push('\n');
    out
}

pub fn parse_group_dump(text: &str) -> Result<Vec<BlockMatrix>> {
    let mut out = Vec::new();
    let mut current = String::new();
    for line in text.lines().chain(std::iter::once("")) {
        if line.split('#').next().unwrap_or("").trim().is_empty() {
            if !current.is_empty() {
                out.push(parse_tableau(&current)?);
                current.clear();
            }
        } else {
            current.push_str(line);
            current.push('\n');
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::parse_code;
    use crate::endo::AlgebraId;

    fn cnot() -> BlockMatrix {
        parse_tableau("1010\n0100\n0010\n0101").unwrap()
    }

    fn ycy() -> BlockMatrix {
        parse_tableau("1011\n0111\n1110\n1101").unwrap()
    }

    #[test]
    fn block_accessors() {
        let t = cnot();
        assert_eq!(t.ell(), 2);
        assert_eq!(t.block(0, 0), Mat2::IDENTITY);
        assert_eq!(t.block(0, 1), Mat2::new(1, 0, 0, 0));
        assert_eq!(t.block(1, 0), Mat2::new(0, 0, 0, 1));
        assert_eq!(BlockMatrix::from_blocks(2, |i, j| t.block(i, j)), t);
    }

    #[test]
    fn act_blocks_identity_and_swap() {
        let v = F2Vector::from_bits(&[1, 0, 0, 1, 1, 1, 0, 0]);
        assert_eq!(act_blocks(&v, &BlockMatrix::identity(2)).unwrap(), v);
        let swap = BlockMatrix::permutation(&[1, 0]).unwrap();
        let parts = split_blocks(&v, 2).unwrap();
        let swapped = split_blocks(&act_blocks(&v, &swap).unwrap(), 2).unwrap();
        assert_eq!(swapped, vec![parts[1].clone(), parts[0].clone()]);
    }

    #[test]
    fn act_blocks_cnot_copies_x_rows() {
        // n = 2, block 1 holds X₁X₂ and block 2 is empty.
        let x = F2Vector::from_bits(&[1, 0, 1, 0]);
        let v = interleave_blocks(&[x.clone(), F2Vector::zeros(4)]).unwrap();
        assert_eq!(v.to_bits(), vec![1, 0, 0, 0, 1, 0, 0, 0]);
        let out = act_blocks(&v, &cnot()).unwrap();
        assert_eq!(out.to_bits(), vec![1, 0, 1, 0, 1, 0, 1, 0]);
        assert_eq!(split_blocks(&out, 2).unwrap(), vec![x.clone(), x]);
        assert!(act_blocks(&F2Vector::zeros(6), &cnot()).is_err());
    }

    #[test]
    fn block_sum_formula() {
        let t = ycy();
        let a = F2Vector::from_bits(&[1, 0, 0, 1, 1, 1]);
        let b = F2Vector::from_bits(&[0, 1, 1, 1, 0, 0]);
        let out = split_blocks(&act_blocks(&interleave_blocks(&[a.clone(), b.clone()]).unwrap(), &t).unwrap(), 2).unwrap();
        for j in 0..2 {
            let mut expected = crate::endo::act(&a, t.block(0, j)).unwrap();
            expected.xor_assign(&crate::endo::act(&b, t.block(1, j)).unwrap()).unwrap();
            assert_eq!(out[j], expected);
        }
    }

    #[test]
    fn in_ml_a_examples() {
        let a1 = AlgebraId::A1.algebra();
        for id in AlgebraId::ALL {
            assert!(in_ml_a(&BlockMatrix::identity(3), id.algebra()));
        }
        let m = parse_tableau("1110\n1001\n1001\n0111").unwrap();
        assert!(in_ml_a(&m, a1));
        assert!(!in_ml_a(&cnot(), a1));
    }

    #[test]
    fn preserves_l_blocks_examples() {
        let c513 = parse_code("XZZXI\nIXZZX\nXIXZZ\nZXIXZ").unwrap();
        let swap = BlockMatrix::permutation(&[1, 0]).unwrap();
        assert!(preserves_l_blocks(&c513, &swap));
        assert!(preserves_l_blocks(&parse_code("XXXX\nZZZZ").unwrap(), &swap));
        let bad = BlockMatrix::from_blocks(2, |i, j| if i == j { Mat2::new(0, 0, 1, 0) } else { Mat2::ZERO });
        assert!(!preserves_l_blocks(&c513, &bad));
        assert!(preserves_l_blocks(&parse_code("XXXX\nZZZZ").unwrap(), &cnot()));
        assert!(!preserves_l_blocks(&c513, &cnot()));
    }

    #[test]
    fn bar_transpose_examples() {
        assert_eq!(bar_transpose(&BlockMatrix::identity(3)), BlockMatrix::identity(3));
        let x = Mat2::new(1, 1, 0, 1);
        let y = Mat2::new(0, 1, 1, 1);
        let d = BlockMatrix::from_blocks(2, |i, j| match (i, j) {
            (0, 0) => x,
            (1, 1) => y,
            _ => Mat2::ZERO,
        });
        let expected = BlockMatrix::from_blocks(2, |i, j| match (i, j) {
            (0, 0) => x.bar(),
            (1, 1) => y.bar(),
            _ => Mat2::ZERO,
        });
        assert_eq!(bar_transpose(&d), expected);
    }

    #[test]
    fn unitary_examples() {
        assert!(is_unitary_over_a(&cnot()));
        assert!(is_unitary_over_a(&ycy()));
        assert!(!is_unitary_over_a(&BlockMatrix::from_blocks(2, |_, _| Mat2::ZERO)));
    }

    #[test]
    fn tableau_round_trip_and_errors() {
        let t = ycy();
        assert_eq!(parse_tableau(&render_tableau(&t)).unwrap(), t);
        assert!(matches!(parse_tableau("10\n0x"), Err(Error::Parse { line: 2, column: 2, .. })));
        assert!(parse_tableau("101\n010\n001").is_err());
        assert!(parse_tableau("10\n01\n11").is_err());
        assert_eq!(parse_tableau("# nothing"), Err(Error::Empty));
        let dump = render_group_dump(&[cnot(), ycy()]);
        assert_eq!(parse_group_dump(&dump).unwrap(), vec![cnot(), ycy()]);
    }

    #[test]
    fn permutation_validation() {
        assert!(BlockMatrix::permutation(&[0, 0]).is_err());
        assert!(BlockMatrix::permutation(&[2, 0]).is_err());
        assert!(BlockMatrix::permutation(&[2, 0, 1]).unwrap().is_block_permutation());
    }
}
