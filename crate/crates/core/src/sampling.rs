//! Random codes and tableaus for property checks and corpus search.

use rand::Rng;

use crate::blocks::BlockMatrix;
use crate::code::StabilizerCode;
use crate::f2::{F2Matrix, F2Vector, RowSpace};
use crate::mat2::Mat2;
use crate::symplectic::{omega_words, sp2_elements};

pub fn random_vector<R: Rng + ?Sized>(rng: &mut R, len: usize) -> F2Vector {
    F2Vector::from_bits(&(0..len).map(|_| rng.gen_range(0..2u8)).collect::<Vec<_>>())
}

pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> F2Matrix {
    let data: Vec<Vec<u8>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(0..2u8)).collect())
        .collect();
    F2Matrix::from_rows(&data).unwrap_or_else(|_| F2Matrix::zeros(rows, cols))
}

/// A uniformly chosen element of Sp(2, F₂).
pub fn random_sp2<R: Rng + ?Sized>(rng: &mut R) -> Mat2 {
    sp2_elements()[rng.gen_range(0..6)]
}

/// A random isotropic subspace of dimension `dim ≤ n`, grown one commuting,
/// independent vector at a time.
pub fn random_code<R: Rng + ?Sized>(rng: &mut R, n: usize, dim: usize) -> StabilizerCode {
    assert!(dim <= n, "an isotropic subspace of F2^(2n) has dimension at most n");
    let mut gens: Vec<F2Vector> = Vec::with_capacity(dim);
    while gens.len() < dim {
        let v = random_vector(rng, 2 * n);
        if gens.iter().any(|g| omega_words(g.words(), v.words())) {
            continue;
        }
        let span = RowSpace::from_vectors(2 * n, &gens).expect("equal lengths");
        if span.contains(&v).expect("equal lengths") {
            continue;
        }
        gens.push(v);
    }
    StabilizerCode::from_generators(n, &gens).expect("isotropic by construction")
}

/// A random CSS code with `x_checks` X-type generators and up to `z_checks`
/// Z-type generators drawn from the orthogonal complement of the X checks.
pub fn random_css_code<R: Rng + ?Sized>(rng: &mut R, n: usize, x_checks: usize, z_checks: usize) -> StabilizerCode {
    let hx = random_matrix(rng, x_checks, n);
    let kernel = hx.nullspace();
    let mut gens = Vec::new();
    for i in 0..hx.rows() {
        let mut v = F2Vector::zeros(2 * n);
        for q in 0..n {
            v.set(2 * q, hx.get(i, q));
        }
        gens.push(v);
    }
    for _ in 0..z_checks {
        let mut v = F2Vector::zeros(2 * n);
        for r in 0..kernel.rows() {
            if rng.gen_bool(0.5) {
                for q in 0..n {
                    if kernel.get(r, q) {
                        let cur = v.get(2 * q + 1);
                        v.set(2 * q + 1, !cur);
                    }
                }
            }
        }
        gens.push(v);
    }
    StabilizerCode::from_generators(n, &gens).expect("X and Z checks commute")
}

/// A random element of Sp(2ℓ, F₂), built pair by pair: each new row pair is
/// orthogonal to all earlier rows and has `ω(x, z) = 1`.
pub fn random_symplectic<R: Rng + ?Sized>(rng: &mut R, ell: usize) -> BlockMatrix {
    let mut rows: Vec<F2Vector> = Vec::with_capacity(2 * ell);
    for _ in 0..ell {
        let x = loop {
            let v = random_vector(rng, 2 * ell);
            if !v.is_zero() && rows.iter().all(|r| !omega_words(r.words(), v.words())) {
                break v;
            }
        };
        let z = loop {
            let v = random_vector(rng, 2 * ell);
            if omega_words(x.words(), v.words()) && rows.iter().all(|r| !omega_words(r.words(), v.words())) {
                break v;
            }
        };
        rows.push(x);
        rows.push(z);
    }
    BlockMatrix::new(F2Matrix::from_vectors(2 * ell, &rows).expect("equal lengths")).expect("square")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::dual;
    use crate::symplectic::is_symplectic;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn random_codes_are_valid() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..20 {
            let c = random_code(&mut rng, 5, 3);
            assert_eq!(c.space().dim(), 3);
            assert!(dual(&c).contains_space(c.space()));
            let css = random_css_code(&mut rng, 6, 2, 2);
            assert!(css.is_css());
        }
    }

    #[test]
    fn random_symplectic_is_symplectic() {
        let mut rng = StdRng::seed_from_u64(11);
        for ell in 1..=4 {
            let t = random_symplectic(&mut rng, ell);
            assert!(is_symplectic(t.matrix(), ell).unwrap());
        }
    }
}
