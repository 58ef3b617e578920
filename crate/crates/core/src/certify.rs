//! Deciding whether a given tableau is a transversal gate, and the named
//! gates and corollaries built on top of that.

use std::collections::BTreeMap;

use crate::blocks::{enumerate_group, is_symplectic_block, BlockMatrix, DEFAULT_ENUMERATION_CAP};
use crate::code::StabilizerCode;
use crate::endo::{classify, endo_algebra, CodeFamily, EndoAlgebra, FamilyCase};
use crate::error::{Error, Result};
use crate::f2::F2Matrix;
use crate::mat2::Mat2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerdictReason {
    /// In `M_ℓ(A)` and symplectic.
    Accepted { case: FamilyCase },
    /// Block `(row, col)` (0-based) is not in the code's algebra.
    BlockOutsideAlgebra {
        row: usize,
        col: usize,
        block: Mat2,
        algebra: EndoAlgebra,
    },
    /// All blocks lie in the algebra but the tableau is not symplectic.
    NotSymplectic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GateVerdict {
    pub transversal: bool,
    pub reason: VerdictReason,
}

/// Certifies `t` against `G_C^ℓ = M_ℓ(A) ∩ Sp(2ℓ, F₂)`. Blocks are checked in
/// row-major order before the symplectic condition.
pub fn certify_gate(c: &StabilizerCode, t: &BlockMatrix) -> GateVerdict {
    let algebra = endo_algebra(c);
    if let Some(((row, col), block)) = t.blocks().find(|(_, b)| !algebra.contains(*b)) {
        return GateVerdict {
            transversal: false,
            reason: VerdictReason::BlockOutsideAlgebra {
                row,
                col,
                block,
                algebra,
            },
        };
    }
    if !is_symplectic_block(t) {
        return GateVerdict {
            transversal: false,
            reason: VerdictReason::NotSymplectic,
        };
    }
    GateVerdict {
        transversal: true,
        reason: VerdictReason::Accepted {
            case: classify(c).case,
        },
    }
}

/// Like [`certify_gate`] but starting from a raw matrix.
pub fn certify_tableau(c: &StabilizerCode, t: &F2Matrix) -> Result<GateVerdict> {
    Ok(certify_gate(c, &BlockMatrix::new(t.clone())?))
}

/// The CSS-code gate `A[x] + B[I + x]` with `x = [[0,0],[0,1]]` and `B = (A⁻¹)ᵗ`.
/// Invertible `A` yields a transversal gate of every CSS code.
pub fn cnot_tableau_from_gl(a: &F2Matrix) -> Result<BlockMatrix> {
    let b = a.invert()?.transpose();
    let x = Mat2::new(0, 0, 0, 1);
    let one_plus_x = Mat2::new(1, 0, 0, 0);
    Ok(BlockMatrix::from_blocks(a.rows(), |i, j| {
        let mut block = Mat2::ZERO;
        if a.get(i, j) {
            block = block.add(x);
        }
        if b.get(i, j) {
            block = block.add(one_plus_x);
        }
        block
    }))
}

fn from_block_rows(rows: &[&[Mat2]]) -> BlockMatrix {
    BlockMatrix::from_blocks(rows.len(), |i, j| rows[i][j])
}

/// Named tableaus: `cnot`, `ycy` (Y-controlled-Y), `gottesman4` (the
/// four-block gate transversal for every code), `facet`, `facet_inv`,
/// `hadamard`, and the cyclic block shifts `swap_2`, `swap_3`, `swap_4`.
pub fn named_tableaus() -> BTreeMap<String, BlockMatrix> {
    const O: Mat2 = Mat2::ZERO;
    const I: Mat2 = Mat2::IDENTITY;
    let mut out = BTreeMap::new();
    out.insert(
        "cnot".to_string(),
        from_block_rows(&[&[I, Mat2::new(1, 0, 0, 0)], &[Mat2::new(0, 0, 0, 1), I]]),
    );
    out.insert(
        "ycy".to_string(),
        from_block_rows(&[&[I, Mat2::ALL_ONES], &[Mat2::ALL_ONES, I]]),
    );
    out.insert(
        "gottesman4".to_string(),
        from_block_rows(&[&[I, I, I, O], &[O, I, I, I], &[I, O, I, I], &[I, I, O, I]]),
    );
    out.insert("facet".to_string(), BlockMatrix::diagonal(1, Mat2::FACET));
    out.insert("facet_inv".to_string(), BlockMatrix::diagonal(1, Mat2::FACET_INV));
    out.insert("hadamard".to_string(), BlockMatrix::diagonal(1, Mat2::J));
    for ell in 2..=4 {
        let shift: Vec<usize> = (0..ell).map(|i| (i + 1) % ell).collect();
        out.insert(
            format!("swap_{ell}"),
            BlockMatrix::permutation(&shift).expect("cyclic shift"),
        );
    }
    out
}

/// Whether `t` entangles blocks, i.e. is not a block permutation composed with
/// single-block gates.
pub fn is_entangling(t: &BlockMatrix) -> bool {
    !t.has_permutation_support()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntanglingGate {
    pub entangling: bool,
    pub family: CodeFamily,
    /// A transversal entangling two-block gate for the input code.
    pub witness: Option<BlockMatrix>,
}

/// A code has a transversal entangling two-qubit Clifford iff it is equivalent
/// to a CSS or a self-dual code. The witness is CNOT (CSS-like cases) or
/// Y-controlled-Y (self-dual case), carried back to the input code through the
/// classification witness.
pub fn has_entangling_two_qubit_gate(c: &StabilizerCode) -> EntanglingGate {
    let family = classify(c);
    let named = named_tableaus();
    let canonical = match family.case {
        FamilyCase::SelfDualCss | FamilyCase::Css | FamilyCase::SemiSelfDualCss => Some(&named["cnot"]),
        FamilyCase::SelfDual => Some(&named["ycy"]),
        FamilyCase::Gf4Linear | FamilyCase::Generic => None,
    };
    let witness = canonical.map(|g| g.conjugate_blocks(family.witness).expect("invertible witness"));
    EntanglingGate {
        entangling: witness.is_some(),
        family,
        witness,
    }
}

/// For a generic code, confirms by enumeration that `G_C^ℓ` (`ℓ ≤ 3`) is
/// exactly the `ℓ!` block permutations.
pub fn small_gate_triviality(c: &StabilizerCode, ell: usize) -> Result<bool> {
    if !(1..=3).contains(&ell) {
        return Err(Error::InvalidArgument(format!("block count must be 1, 2 or 3, got {ell}")));
    }
    let case = classify(c).case;
    if case != FamilyCase::Generic {
        return Err(Error::NotGeneric(case.index()));
    }
    let group = enumerate_group(c, ell, DEFAULT_ENUMERATION_CAP)?;
    let mut perms = permutations(ell)
        .iter()
        .map(|p| BlockMatrix::permutation(p))
        .collect::<Result<Vec<_>>>()?;
    perms.sort();
    Ok(group.elements.as_deref() == Some(perms.as_slice()))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{is_unitary_over_a, parse_tableau};
    use crate::code::parse_code;
    use crate::endo::AlgebraId;
    use crate::symplectic::is_symplectic;

    fn c422() -> StabilizerCode {
        parse_code("XXXX\nZZZZ").unwrap()
    }
    fn c513() -> StabilizerCode {
        parse_code("XZZXI\nIXZZX\nXIXZZ\nZXIXZ").unwrap()
    }
    fn a3_code() -> StabilizerCode {
        parse_code("XXZZ\nZZXX").unwrap()
    }

    #[test]
    fn certify_examples() {
        let named = named_tableaus();
        assert!(certify_gate(&c422(), &named["cnot"]).transversal);
        assert!(certify_gate(&a3_code(), &named["ycy"]).transversal);
        let v = certify_gate(&c513(), &named["cnot"]);
        assert!(!v.transversal);
        assert_eq!(
            v.reason,
            VerdictReason::BlockOutsideAlgebra {
                row: 0,
                col: 1,
                block: Mat2::new(1, 0, 0, 0),
                algebra: AlgebraId::A1.algebra(),
            }
        );
    }

    #[test]
    fn certify_reports_non_symplectic() {
        let zero = parse_tableau("0000\n0000\n0000\n0000").unwrap();
        let v = certify_gate(&c422(), &zero);
        assert_eq!(v.reason, VerdictReason::NotSymplectic);
        assert!(certify_tableau(&c422(), &F2Matrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn cnot_from_gl_examples() {
        let a = F2Matrix::from_rows(&[[1, 0], [1, 1]]).unwrap();
        let t = cnot_tableau_from_gl(&a).unwrap();
        assert_eq!(t, parse_tableau("1010\n0100\n0010\n0101").unwrap());
        assert!(is_unitary_over_a(&t));
        assert!(is_symplectic(t.matrix(), 2).unwrap());

        assert_eq!(cnot_tableau_from_gl(&F2Matrix::identity(3)).unwrap(), BlockMatrix::identity(3));
        let p = F2Matrix::from_rows(&[[0, 1, 0], [0, 0, 1], [1, 0, 0]]).unwrap();
        assert_eq!(cnot_tableau_from_gl(&p).unwrap(), BlockMatrix::permutation(&[1, 2, 0]).unwrap());
        assert!(cnot_tableau_from_gl(&F2Matrix::from_rows(&[[1, 1], [1, 1]]).unwrap()).is_err());
    }

    #[test]
    fn named_tableau_checks() {
        let named = named_tableaus();
        assert!(!certify_gate(&c513(), &named["ycy"]).transversal);
        for code in [c422(), c513(), a3_code()] {
            assert!(certify_gate(&code, &named["gottesman4"]).transversal);
            assert!(certify_gate(&code, &named["swap_2"]).transversal);
        }
        assert!(certify_gate(&c513(), &named["facet"]).transversal);
        assert!(certify_gate(&c513(), &named["facet_inv"]).transversal);
        assert!(!certify_gate(&c513(), &named["hadamard"]).transversal);
    }

    #[test]
    fn entangling_examples() {
        let e = has_entangling_two_qubit_gate(&c422());
        assert!(e.entangling);
        assert_eq!(e.witness.as_ref(), Some(&named_tableaus()["cnot"]));
        assert!(!has_entangling_two_qubit_gate(&c513()).entangling);
        let e = has_entangling_two_qubit_gate(&a3_code());
        assert!(e.entangling && is_entangling(e.witness.as_ref().unwrap()));
    }

    #[test]
    fn small_gate_triviality_requires_generic() {
        assert_eq!(small_gate_triviality(&c513(), 2), Err(Error::NotGeneric(1)));
        assert!(small_gate_triviality(&c513(), 4).is_err());
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(1), vec![vec![0]]);
    }
}
