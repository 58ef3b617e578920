//! Classification of qubit stabilizer codes by their diagonal transversal
//! Clifford gates.
//!
//! A code `C ⊆ F₂^{2n}` is classified by its endomorphism algebra: the 2×2
//! matrices over GF(2) whose transversal right action maps `C` into itself.
//! Up to a local diagonal Clifford, that algebra is one of six, and it fixes
//! the group of transversal Cliffords on `ℓ` code blocks:
//!
//! | case | code family | group |
//! |---|---|---|
//! | 0 | self-dual CSS | Sp(2ℓ, F₂) |
//! | 1 | GF(4)-linear | U(ℓ, F₄) |
//! | 2 | CSS | GL(ℓ, F₂) |
//! | 3 | self-dual | O(ℓ, F₂[x]/(x²)) |
//! | 4 | semi-self-dual CSS | U(ℓ, R₈) |
//! | 5 | generic | O(ℓ, F₂) |
//!
//! ```
//! use tclass_core::{code::parse_code, endo::{classify, FamilyCase}};
//!
//! let code = parse_code("XZZXI\nIXZZX\nXIXZZ\nZXIXZ").unwrap();
//! assert_eq!(classify(&code).case, FamilyCase::Gf4Linear);
//! ```

pub mod blocks;
pub mod certify;
pub mod code;
pub mod corpus;
pub mod endo;
pub mod error;
pub mod f2;
pub mod mat2;
pub mod sampling;
pub mod symplectic;

pub use error::{Error, Result};
