//! Row-by-row backtracking over `M_ℓ(A) ∩ Sp(2ℓ, F₂)`.
//!
//! A block row of `T` is a `2 × 2ℓ` strip, kept as its two packed rows. `T` is
//! in the group iff every pair of block rows `i, j` satisfies
//! `Σ_k t_{ik} · bar(t_{jk}) = δ_{ij} I`. Candidate rows are the elements of
//! `A^ℓ` meeting the diagonal condition; each level keeps only the candidates
//! orthogonal to every row chosen so far, so the last level is counted without
//! being expanded.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::BlockMatrix;
use crate::endo::EndoAlgebra;
use crate::error::{Error, Result};
use crate::f2::F2Matrix;
use crate::mat2::Mat2;
use crate::symplectic::swap_pairs;

const MAX_ELL: usize = 32;
const MAX_CANDIDATES: u64 = 1 << 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct BlockRow {
    x: u64,
    z: u64,
}

impl BlockRow {
    /// Sort key reading column 0 first.
    fn key(self) -> (u64, u64) {
        (self.x.reverse_bits(), self.z.reverse_bits())
    }
}

#[inline]
fn omega(a: u64, b: u64) -> u8 {
    ((a & swap_pairs(b)).count_ones() & 1) as u8
}

/// `Σ_k a_k · bar(b_k)`, which equals `(R_a J R_bᵗ) J` for the strips `R_a`, `R_b`.
#[inline]
fn gram(a: BlockRow, b: BlockRow) -> Mat2 {
    Mat2::new(
        omega(a.x, b.z),
        omega(a.x, b.x),
        omega(a.z, b.z),
        omega(a.z, b.x),
    )
}

#[inline]
fn orthogonal(a: BlockRow, b: BlockRow) -> bool {
    gram(a, b).is_zero()
}

fn candidate_rows(algebra: EndoAlgebra, ell: usize) -> Result<Vec<BlockRow>> {
    if ell == 0 || ell > MAX_ELL {
        return Err(Error::InvalidArgument(format!("block count must be in 1..={MAX_ELL}, got {ell}")));
    }
    let els = algebra.elements();
    let total = (els.len() as u64).checked_pow(ell as u32).filter(|&t| t <= MAX_CANDIDATES);
    let Some(total) = total else {
        return Err(Error::CapExceeded {
            cap: MAX_CANDIDATES,
            predicted: None,
        });
    };
    let mut rows = Vec::new();
    for mut code in 0..total {
        let mut row = BlockRow { x: 0, z: 0 };
        for k in 0..ell {
            let e = els[(code % els.len() as u64) as usize];
            code /= els.len() as u64;
            let [a, b, c, d] = e.entries().map(u64::from);
            row.x |= (a << (2 * k)) | (b << (2 * k + 1));
            row.z |= (c << (2 * k)) | (d << (2 * k + 1));
        }
        if gram(row, row) == Mat2::IDENTITY {
            rows.push(row);
        }
    }
    rows.sort_by_key(|r| r.key());
    Ok(rows)
}

struct Budget {
    used: AtomicU64,
    cap: u64,
}

impl Budget {
    fn spend(&self, n: u64) -> Result<()> {
        let before = self.used.fetch_add(n, Ordering::Relaxed);
        if before + n > self.cap {
            Err(Error::CapExceeded {
                cap: self.cap,
                predicted: None,
            })
        } else {
            Ok(())
        }
    }
}

fn narrow(chosen: BlockRow, pool: &[BlockRow], budget: &Budget) -> Result<Vec<BlockRow>> {
    budget.spend(pool.len() as u64)?;
    Ok(pool.iter().copied().filter(|&r| orthogonal(chosen, r)).collect())
}

/// `pool` holds the candidates for level `depth`, already orthogonal to all chosen rows.
fn count_from(pool: &[BlockRow], depth: usize, ell: usize, budget: &Budget) -> Result<u64> {
    if depth + 1 == ell {
        return Ok(pool.len() as u64);
    }
    let mut total = 0;
    for &row in pool {
        total += count_from(&narrow(row, pool, budget)?, depth + 1, ell, budget)?;
    }
    Ok(total)
}

/// `|M_ℓ(A) ∩ Sp(2ℓ, F₂)|`, examining at most `node_cap` candidate rows.
pub fn count_in_algebra(algebra: EndoAlgebra, ell: usize, node_cap: u64) -> Result<u64> {
    let rows = candidate_rows(algebra, ell)?;
    let budget = Budget {
        used: AtomicU64::new(0),
        cap: node_cap,
    };
    if ell == 1 {
        return Ok(rows.len() as u64);
    }
    rows.par_iter()
        .map(|&first| count_from(&narrow(first, &rows, &budget)?, 1, ell, &budget))
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

fn materialise(prefix: &[BlockRow], ell: usize) -> BlockMatrix {
    let mut t = F2Matrix::zeros(2 * ell, 2 * ell);
    for (i, row) in prefix.iter().enumerate() {
        for c in 0..2 * ell {
            if (row.x >> c) & 1 == 1 {
                t.set(2 * i, c, true);
            }
            if (row.z >> c) & 1 == 1 {
                t.set(2 * i + 1, c, true);
            }
        }
    }
    BlockMatrix::new(t).expect("square with even size")
}

fn collect_from(
    pool: &[BlockRow],
    prefix: &mut Vec<BlockRow>,
    ell: usize,
    budget: &Budget,
    out: &mut Vec<BlockMatrix>,
) -> Result<()> {
    for &row in pool {
        prefix.push(row);
        if prefix.len() == ell {
            out.push(materialise(prefix, ell));
        } else {
            collect_from(&narrow(row, pool, budget)?, prefix, ell, budget, out)?;
        }
        prefix.pop();
    }
    Ok(())
}

/// All elements of `M_ℓ(A) ∩ Sp(2ℓ, F₂)` in lexicographic order of their rows.
/// Fails once more than `cap` elements have been produced.
pub fn enumerate_in_algebra(algebra: EndoAlgebra, ell: usize, cap: u64) -> Result<Vec<BlockMatrix>> {
    let rows = candidate_rows(algebra, ell)?;
    let budget = Budget {
        used: AtomicU64::new(0),
        cap: u64::MAX,
    };
    let produced = AtomicU64::new(0);
    let chunks: Vec<Vec<BlockMatrix>> = rows
        .par_iter()
        .map(|&first| {
            let mut out = Vec::new();
            let mut prefix = vec![first];
            if ell == 1 {
                out.push(materialise(&prefix, ell));
            } else {
                collect_from(&narrow(first, &rows, &budget)?, &mut prefix, ell, &budget, &mut out)?;
            }
            if produced.fetch_add(out.len() as u64, Ordering::Relaxed) + out.len() as u64 > cap {
                return Err(Error::CapExceeded { cap, predicted: None });
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut elements: Vec<BlockMatrix> = chunks.into_iter().flatten().collect();
    elements.sort();
    Ok(elements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{bar_transpose, in_ml_a};
    use crate::endo::AlgebraId;

    #[test]
    fn gram_matches_block_product() {
        let a = AlgebraId::A0.algebra();
        let rows = candidate_rows(a, 2).unwrap();
        for &r in rows.iter().take(40) {
            for &s in rows.iter().take(40) {
                let t = materialise(&[r, s], 2);
                let prod = t.mul(&bar_transpose(&t)).unwrap();
                assert_eq!(prod.block(0, 1), gram(r, s));
                assert_eq!(prod.block(0, 0), gram(r, r));
            }
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_in_algebra(AlgebraId::A1.algebra(), 1, 1000).unwrap(), 3);
        assert_eq!(count_in_algebra(AlgebraId::A5.algebra(), 2, 1000).unwrap(), 2);
        assert_eq!(count_in_algebra(AlgebraId::A0.algebra(), 2, 1_000_000).unwrap(), 720);
    }

    #[test]
    fn node_cap_is_enforced() {
        let err = count_in_algebra(AlgebraId::A0.algebra(), 3, 1000).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 1000, .. }));
    }

    #[test]
    fn enumeration_is_sorted_and_in_algebra() {
        let a3 = AlgebraId::A3.algebra();
        let els = enumerate_in_algebra(a3, 2, 100).unwrap();
        assert_eq!(els.len(), 16);
        assert!(els.windows(2).all(|w| w[0] < w[1]));
        assert!(els.iter().all(|t| in_ml_a(t, a3)));
        assert!(enumerate_in_algebra(a3, 2, 10).is_err());
    }

    #[test]
    fn rejects_bad_block_counts() {
        assert!(count_in_algebra(AlgebraId::A5.algebra(), 0, 10).is_err());
        assert!(count_in_algebra(AlgebraId::A5.algebra(), 33, 10).is_err());
    }
}
