//! The six families of transversal Clifford groups and the ways to compute their orders.
//!
//! Each family implements [`GroupFamily`]; each order computation implements
//! [`OrderMethod`]. Both are looked up by name in a registry so the method can
//! be chosen at runtime.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigUint;

use super::search::count_in_algebra;
use super::DEFAULT_NODE_CAP;
use crate::endo::{EndoAlgebra, FamilyCase};
use crate::error::{Error, Result};
use crate::symplectic::sp_order;

pub trait GroupFamily: Send + Sync {
    fn case(&self) -> FamilyCase;

    /// Registry key.
    fn key(&self) -> &'static str;

    /// Group name at `ℓ` blocks, e.g. `Sp(4,F2)`.
    fn group_name(&self, ell: usize) -> String;

    fn closed_form_order(&self, _ell: usize) -> Option<BigUint> {
        None
    }

    /// Canonical endomorphism algebra whose `M_ℓ(A) ∩ Sp` is this group.
    fn algebra(&self) -> EndoAlgebra {
        self.case().canonical_algebra()
    }
}

fn pow2(e: usize) -> BigUint {
    BigUint::from(1u32) << e
}

pub struct Symplectic;

impl GroupFamily for Symplectic {
    fn case(&self) -> FamilyCase {
        FamilyCase::SelfDualCss
    }
    fn key(&self) -> &'static str {
        "sp"
    }
    fn group_name(&self, ell: usize) -> String {
        format!("Sp({},F2)", 2 * ell)
    }
    fn closed_form_order(&self, ell: usize) -> Option<BigUint> {
        Some(sp_order(ell))
    }
}

/// Unitary group over F₄ with respect to the Frobenius involution.
pub struct UnitaryF4;

impl GroupFamily for UnitaryF4 {
    fn case(&self) -> FamilyCase {
        FamilyCase::Gf4Linear
    }
    fn key(&self) -> &'static str {
        "u-f4"
    }
    fn group_name(&self, ell: usize) -> String {
        format!("U({ell},F4)")
    }
    /// `|U(ℓ, q²)| = q^{ℓ(ℓ−1)/2} ∏_{i=1}^{ℓ} (q^i − (−1)^i)` with `q = 2`.
    fn closed_form_order(&self, ell: usize) -> Option<BigUint> {
        let mut order = pow2(ell * (ell.saturating_sub(1)) / 2);
        for i in 1..=ell {
            order *= if i % 2 == 1 { pow2(i) + 1u32 } else { pow2(i) - 1u32 };
        }
        Some(order)
    }
}

pub struct GeneralLinear;

impl GroupFamily for GeneralLinear {
    fn case(&self) -> FamilyCase {
        FamilyCase::Css
    }
    fn key(&self) -> &'static str {
        "gl"
    }
    fn group_name(&self, ell: usize) -> String {
        format!("GL({ell},F2)")
    }
    fn closed_form_order(&self, ell: usize) -> Option<BigUint> {
        Some((0..ell).map(|i| pow2(ell) - pow2(i)).product())
    }
}

/// Orthogonal group over the dual numbers F₂[x]/(x²).
pub struct OrthogonalDualNumbers;

impl GroupFamily for OrthogonalDualNumbers {
    fn case(&self) -> FamilyCase {
        FamilyCase::SelfDual
    }
    fn key(&self) -> &'static str {
        "o-f2x"
    }
    fn group_name(&self, ell: usize) -> String {
        format!("O({ell},F2[x]/(x^2))")
    }
}

/// Unitary group over the upper-triangular ring R₈.
pub struct UnitaryR8;

impl GroupFamily for UnitaryR8 {
    fn case(&self) -> FamilyCase {
        FamilyCase::SemiSelfDualCss
    }
    fn key(&self) -> &'static str {
        "u-r8"
    }
    fn group_name(&self, ell: usize) -> String {
        format!("U({ell},R8)")
    }
}

pub struct Orthogonal;

impl GroupFamily for Orthogonal {
    fn case(&self) -> FamilyCase {
        FamilyCase::Generic
    }
    fn key(&self) -> &'static str {
        "o-f2"
    }
    fn group_name(&self, ell: usize) -> String {
        format!("O({ell},F2)")
    }
}

#[derive(Clone, Default)]
pub struct FamilyRegistry {
    families: BTreeMap<&'static str, Arc<dyn GroupFamily>>,
}

impl FamilyRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn standard() -> Self {
        let mut r = Self::new();
        r.register(Arc::new(Symplectic));
        r.register(Arc::new(UnitaryF4));
        r.register(Arc::new(GeneralLinear));
        r.register(Arc::new(OrthogonalDualNumbers));
        r.register(Arc::new(UnitaryR8));
        r.register(Arc::new(Orthogonal));
        r
    }

    pub fn register(&mut self, family: Arc<dyn GroupFamily>) {
        self.families.insert(family.key(), family);
    }

    pub fn get(&self, key: &str) -> Option<Arc<dyn GroupFamily>> {
        self.families.get(key).cloned()
    }

    pub fn by_case(&self, case: FamilyCase) -> Option<Arc<dyn GroupFamily>> {
        self.families.values().find(|f| f.case() == case).cloned()
    }

    /// Families ordered by case index.
    pub fn iter(&self) -> impl Iterator<Item = Arc<dyn GroupFamily>> {
        let mut all: Vec<_> = self.families.values().cloned().collect();
        all.sort_by_key(|f| f.case());
        all.into_iter()
    }
}

pub trait OrderMethod: Send + Sync {
    fn name(&self) -> &'static str;
    fn order(&self, family: &dyn GroupFamily, ell: usize) -> Result<BigUint>;
}

/// Counts group elements by backtracking over the family's canonical algebra.
pub struct Enumeration {
    pub node_cap: u64,
}

impl Default for Enumeration {
    fn default() -> Self {
        Self {
            node_cap: DEFAULT_NODE_CAP,
        }
    }
}

impl OrderMethod for Enumeration {
    fn name(&self) -> &'static str {
        "enumerate"
    }
    fn order(&self, family: &dyn GroupFamily, ell: usize) -> Result<BigUint> {
        count_in_algebra(family.algebra(), ell, self.node_cap).map(BigUint::from)
    }
}

/// Closed-form orders; available for Sp, GL and U(ℓ, F₄) only.
pub struct ClosedForm;

impl OrderMethod for ClosedForm {
    fn name(&self) -> &'static str {
        "formula"
    }
    fn order(&self, family: &dyn GroupFamily, ell: usize) -> Result<BigUint> {
        family.closed_form_order(ell).ok_or(Error::OrderUnavailable {
            case: family.case().index(),
            ell,
        })
    }
}

/// Enumeration, falling back to the closed form when the search budget is exhausted.
#[derive(Default)]
pub struct Auto {
    pub enumeration: Enumeration,
}

impl OrderMethod for Auto {
    fn name(&self) -> &'static str {
        "auto"
    }
    fn order(&self, family: &dyn GroupFamily, ell: usize) -> Result<BigUint> {
        match self.enumeration.order(family, ell) {
            Err(Error::CapExceeded { .. }) => ClosedForm.order(family, ell),
            other => other,
        }
    }
}

#[derive(Clone, Default)]
pub struct MethodRegistry {
    methods: BTreeMap<&'static str, Arc<dyn OrderMethod>>,
}

impl MethodRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn standard() -> Self {
        let mut r = Self::new();
        r.register(Arc::new(Enumeration::default()));
        r.register(Arc::new(ClosedForm));
        r.register(Arc::new(Auto::default()));
        r
    }

    pub fn register(&mut self, method: Arc<dyn OrderMethod>) {
        self.methods.insert(method.name(), method);
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn OrderMethod>> {
        self.methods
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.methods.keys().copied()
    }
}

/// Order of the case's group on `ℓ` blocks, by enumeration where feasible and
/// closed form otherwise.
pub fn count_group(case: FamilyCase, ell: usize) -> Result<BigUint> {
    let family = FamilyRegistry::standard()
        .by_case(case)
        .expect("standard registry covers every case");
    match Auto::default().order(family.as_ref(), ell) {
        Err(Error::CapExceeded { .. }) => Err(Error::OrderUnavailable {
            case: case.index(),
            ell,
        }),
        other => other,
    }
}

/// Reference orders for cross-checking, where known.
///
/// For O(ℓ, F₂[x]/(x²)) the order is `|O(ℓ, F₂)| · 2^{ℓ(ℓ+1)/2}`: writing
/// `T = A + xB`, `TTᵗ = I` forces `A` orthogonal and `BAᵗ` symmetric.
pub fn reference_order(case: FamilyCase, ell: usize) -> Option<u64> {
    let row: &[u64] = match case {
        FamilyCase::Generic => &[1, 2, 6, 48, 720, 23040],
        FamilyCase::SelfDual => &[2, 16, 384, 49152],
        FamilyCase::SemiSelfDualCss => &[2, 48, 10752],
        FamilyCase::Css => &[1, 6, 168, 20160, 9_999_360, 20_158_709_760],
        FamilyCase::Gf4Linear => &[3, 18, 648, 77760, 41_057_280, 82_771_476_480],
        FamilyCase::SelfDualCss => &[6, 720, 1_451_520, 47_377_612_800],
    };
    ell.checked_sub(1).and_then(|i| row.get(i)).copied()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_lookup() {
        let reg = FamilyRegistry::standard();
        for case in FamilyCase::ALL {
            let f = reg.by_case(case).unwrap();
            assert_eq!(reg.get(f.key()).unwrap().case(), case);
        }
        assert!(reg.get("nope").is_none());
        let cases: Vec<_> = reg.iter().map(|f| f.case().index()).collect();
        assert_eq!(cases, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn closed_forms_match_reference_rows() {
        let reg = FamilyRegistry::standard();
        for case in [FamilyCase::SelfDualCss, FamilyCase::Gf4Linear, FamilyCase::Css] {
            let f = reg.by_case(case).unwrap();
            for ell in 1..=6 {
                if let Some(expected) = reference_order(case, ell) {
                    assert_eq!(f.closed_form_order(ell).unwrap(), BigUint::from(expected), "{} l={ell}", f.key());
                }
            }
        }
    }

    #[test]
    fn method_registry() {
        let methods = MethodRegistry::standard();
        assert_eq!(methods.names().collect::<Vec<_>>(), vec!["auto", "enumerate", "formula"]);
        assert!(methods.get("magic").is_err());
        let gl = GeneralLinear;
        assert_eq!(methods.get("formula").unwrap().order(&gl, 3).unwrap(), BigUint::from(168u32));
        assert!(methods.get("formula").unwrap().order(&Orthogonal, 3).is_err());
    }

    #[test]
    fn auto_falls_back_to_formula() {
        let tight = Auto {
            enumeration: Enumeration { node_cap: 10 },
        };
        assert_eq!(tight.order(&Symplectic, 3).unwrap(), BigUint::from(1_451_520u32));
        assert!(tight.order(&UnitaryR8, 3).is_err());
    }

    #[test]
    fn count_group_orthogonal_row() {
        let got: Vec<_> = (1..=4).map(|l| count_group(FamilyCase::Generic, l).unwrap()).collect();
        assert_eq!(got, [1u32, 2, 6, 48].map(BigUint::from));
    }
}
