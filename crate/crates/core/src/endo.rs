//! The transversal action of M₂(F₂) on codes, endomorphism algebras, and the
//! six-family classification up to local diagonal Clifford equivalence.

use std::fmt;

use crate::code::StabilizerCode;
use crate::error::{Error, Result};
use crate::f2::F2Vector;
use crate::mat2::Mat2;
use crate::symplectic::{sp2_elements, EVEN_BITS};

/// Right-multiplies every interleaved `(x, z)` pair in `words` by `t`.
pub(crate) fn act_words(words: &[u64], t: Mat2) -> Vec<u64> {
    let [a, b, c, d] = t.entries().map(|e| if e == 1 { u64::MAX } else { 0 });
    words
        .iter()
        .map(|&w| {
            let x = w & EVEN_BITS;
            let z = (w >> 1) & EVEN_BITS;
            let nx = (x & a) ^ (z & c);
            let nz = (x & b) ^ (z & d);
            nx | (nz << 1)
        })
        .collect()
}

/// The transversal action `v · t`: each pair `(vᵢ, wᵢ)` becomes `(vᵢ, wᵢ) t`.
pub fn act(v: &F2Vector, t: Mat2) -> Result<F2Vector> {
    if !v.len().is_multiple_of(2) {
        return Err(Error::OddLength(v.len()));
    }
    Ok(F2Vector::from_words(v.len(), act_words(v.words(), t)))
}

/// Whether `C · t ⊆ C`. Checking the basis suffices since the action is linear.
pub fn invariant_under(c: &StabilizerCode, t: Mat2) -> bool {
    let basis = c.space().basis();
    (0..basis.rows()).all(|i| c.space().contains_words(&act_words(basis.row_words(i), t)))
}

/// A subset of M₂(F₂), stored as a 16-bit membership mask indexed by [`Mat2::index`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndoAlgebra(u16);

impl EndoAlgebra {
    pub const fn from_mask(mask: u16) -> Self {
        Self(mask)
    }

    pub fn from_elements(elements: impl IntoIterator<Item = Mat2>) -> Self {
        Self(elements.into_iter().fold(0, |m, e| m | (1 << e.index())))
    }

    pub const fn mask(self) -> u16 {
        self.0
    }

    pub const fn contains(self, t: Mat2) -> bool {
        (self.0 >> t.index()) & 1 == 1
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `log₂ |A|`; meaningful only for closed algebras.
    pub const fn dim(self) -> u32 {
        self.0.count_ones().trailing_zeros()
    }

    /// Elements in increasing [`Mat2::index`] order.
    pub fn elements(self) -> Vec<Mat2> {
        Mat2::all().filter(|&t| self.contains(t)).collect()
    }

    /// Contains 0 and I and is closed under `+` and `×`.
    pub fn is_closed(self) -> bool {
        if !self.contains(Mat2::ZERO) || !self.contains(Mat2::IDENTITY) {
            return false;
        }
        let els = self.elements();
        els.iter()
            .all(|&a| els.iter().all(|&b| self.contains(a.add(b)) && self.contains(a.mul(b))))
    }

    pub fn is_subset_of(self, other: EndoAlgebra) -> bool {
        self.0 & !other.0 == 0
    }
}

impl fmt::Debug for EndoAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let els: Vec<String> = self.elements().iter().map(|e| e.compact()).collect();
        write!(f, "EndoAlgebra{{{}}}", els.join(", "))
    }
}

/// The set `{ t ∈ M₂(F₂) : C · t ⊆ C }`.
///
/// # Panics
/// If the computed set is not closed under `+` and `×`, which would indicate a bug.
pub fn endo_algebra(c: &StabilizerCode) -> EndoAlgebra {
    let a = EndoAlgebra::from_elements(Mat2::all().filter(|&t| invariant_under(c, t)));
    assert!(a.is_closed(), "endomorphism set {a:?} is not an algebra");
    a
}

/// Names for the twelve subalgebras of M₂(F₂).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraId {
    /// All of M₂(F₂).
    A0,
    /// F₂[facet] ≅ F₄.
    A1,
    /// Diagonal matrices ≅ F₂ × F₂.
    A2,
    /// F₂[J] ≅ F₂[x]/(x²).
    A3,
    /// Upper-triangular matrices ≅ R₈.
    A4,
    /// {0, I}.
    A5,
    B0,
    B1,
    B2,
    B3,
    /// Lower-triangular matrices.
    L,
    /// Matrices with an even number of nonzero entries.
    E,
}

const fn mask_of(indices: &[u8]) -> u16 {
    let mut m = 0u16;
    let mut i = 0;
    while i < indices.len() {
        m |= 1 << indices[i];
        i += 1;
    }
    m
}

// Element indices follow Mat2: [[a,b],[c,d]] ↦ 0babcd.
const CATALOG: [(AlgebraId, u16); 12] = [
    (AlgebraId::A0, 0xffff),
    (AlgebraId::A1, mask_of(&[0, 9, 14, 7])),
    (AlgebraId::A2, mask_of(&[0, 9, 8, 1])),
    (AlgebraId::A3, mask_of(&[0, 9, 6, 15])),
    (AlgebraId::A4, mask_of(&[0, 1, 4, 5, 8, 9, 12, 13])),
    (AlgebraId::A5, mask_of(&[0, 9])),
    (AlgebraId::B0, mask_of(&[0, 9, 12, 5])),
    (AlgebraId::B1, mask_of(&[0, 9, 3, 10])),
    (AlgebraId::B2, mask_of(&[0, 9, 13, 4])),
    (AlgebraId::B3, mask_of(&[0, 9, 11, 2])),
    (AlgebraId::L, mask_of(&[0, 1, 2, 3, 8, 9, 10, 11])),
    (AlgebraId::E, mask_of(&[0, 3, 5, 6, 9, 10, 12, 15])),
];

impl AlgebraId {
    pub const ALL: [AlgebraId; 12] = [
        AlgebraId::A0,
        AlgebraId::A1,
        AlgebraId::A2,
        AlgebraId::A3,
        AlgebraId::A4,
        AlgebraId::A5,
        AlgebraId::B0,
        AlgebraId::B1,
        AlgebraId::B2,
        AlgebraId::B3,
        AlgebraId::L,
        AlgebraId::E,
    ];

    pub fn algebra(self) -> EndoAlgebra {
        let (_, mask) = CATALOG.iter().find(|(id, _)| *id == self).expect("catalog is total");
        EndoAlgebra(*mask)
    }

    pub fn case(self) -> FamilyCase {
        match self {
            AlgebraId::A0 => FamilyCase::SelfDualCss,
            AlgebraId::A1 => FamilyCase::Gf4Linear,
            AlgebraId::A2 | AlgebraId::B0 | AlgebraId::B1 => FamilyCase::Css,
            AlgebraId::A3 | AlgebraId::B2 | AlgebraId::B3 => FamilyCase::SelfDual,
            AlgebraId::A4 | AlgebraId::L | AlgebraId::E => FamilyCase::SemiSelfDualCss,
            AlgebraId::A5 => FamilyCase::Generic,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgebraId::A0 => "A0",
            AlgebraId::A1 => "A1",
            AlgebraId::A2 => "A2",
            AlgebraId::A3 => "A3",
            AlgebraId::A4 => "A4",
            AlgebraId::A5 => "A5",
            AlgebraId::B0 => "B0",
            AlgebraId::B1 => "B1",
            AlgebraId::B2 => "B2",
            AlgebraId::B3 => "B3",
            AlgebraId::L => "L",
            AlgebraId::E => "E",
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Catalog lookup by exact element set.
pub fn algebra_id(a: EndoAlgebra) -> Result<AlgebraId> {
    CATALOG
        .iter()
        .find(|(_, mask)| *mask == a.mask())
        .map(|(id, _)| *id)
        .ok_or(Error::NotAnAlgebra(a.mask()))
}

/// `{ r⁻¹ x r : x ∈ a }`.
pub fn conjugate_algebra(a: EndoAlgebra, r: Mat2) -> Result<EndoAlgebra> {
    let inv = r.inverse().ok_or(Error::Singular)?;
    Ok(EndoAlgebra::from_elements(
        a.elements().into_iter().map(|x| inv.mul(x).mul(r)),
    ))
}

/// The six classification outcomes, numbered 0 to 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyCase {
    SelfDualCss = 0,
    Gf4Linear = 1,
    Css = 2,
    SelfDual = 3,
    SemiSelfDualCss = 4,
    Generic = 5,
}

impl FamilyCase {
    pub const ALL: [FamilyCase; 6] = [
        FamilyCase::SelfDualCss,
        FamilyCase::Gf4Linear,
        FamilyCase::Css,
        FamilyCase::SelfDual,
        FamilyCase::SemiSelfDualCss,
        FamilyCase::Generic,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Result<FamilyCase> {
        FamilyCase::ALL
            .get(i)
            .copied()
            .ok_or_else(|| Error::InvalidArgument(format!("family case must be 0..=5, got {i}")))
    }

    pub fn canonical_algebra_id(self) -> AlgebraId {
        match self {
            FamilyCase::SelfDualCss => AlgebraId::A0,
            FamilyCase::Gf4Linear => AlgebraId::A1,
            FamilyCase::Css => AlgebraId::A2,
            FamilyCase::SelfDual => AlgebraId::A3,
            FamilyCase::SemiSelfDualCss => AlgebraId::A4,
            FamilyCase::Generic => AlgebraId::A5,
        }
    }

    pub fn canonical_algebra(self) -> EndoAlgebra {
        self.canonical_algebra_id().algebra()
    }

    /// Code-family label.
    pub fn family_name(self) -> &'static str {
        match self {
            FamilyCase::SelfDualCss => "self-dual CSS",
            FamilyCase::Gf4Linear => "GF(4)",
            FamilyCase::Css => "CSS",
            FamilyCase::SelfDual => "self-dual",
            FamilyCase::SemiSelfDualCss => "semi-self-dual CSS / self-dual semi-CSS",
            FamilyCase::Generic => "generic",
        }
    }
}

impl fmt::Display for FamilyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.index(), self.family_name())
    }
}

/// Result of [`classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeFamily {
    pub case: FamilyCase,
    /// The algebra of the input code.
    pub algebra: EndoAlgebra,
    pub algebra_id: AlgebraId,
    /// `R ∈ Sp(2, F₂)` with `R⁻¹ · algebra · R` equal to the canonical algebra of `case`.
    pub witness: Mat2,
    /// `C · R`, whose algebra is the canonical one.
    pub canonical_code: StabilizerCode,
}

/// Classifies `c` into one of the six families and finds a local diagonal
/// Clifford taking it to the canonical representative. The witness is the
/// first match in [`sp2_elements`] order.
pub fn classify(c: &StabilizerCode) -> CodeFamily {
    let algebra = endo_algebra(c);
    let algebra_id = algebra_id(algebra).expect("every subalgebra of M2(F2) is catalogued");
    let case = algebra_id.case();
    let target = case.canonical_algebra();
    let witness = sp2_elements()
        .into_iter()
        .find(|&r| conjugate_algebra(algebra, r).expect("invertible") == target)
        .expect("each catalogued algebra is conjugate to its canonical representative");
    let canonical_code = c.transform(witness).expect("invertible witness");
    CodeFamily {
        case,
        algebra,
        algebra_id,
        witness,
        canonical_code,
    }
}
