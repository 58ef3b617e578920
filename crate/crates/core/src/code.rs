//! Stabilizer codes as isotropic subspaces of F₂^{2n}.

use std::fmt;
use std::str::FromStr;

use crate::endo;
use crate::error::{Error, Result};
use crate::f2::{F2Matrix, F2Vector, RowSpace};
use crate::mat2::Mat2;
use crate::symplectic::{omega_words, swap_pairs};

/// Default upper bound on `n` for brute-force distance computation.
pub const DEFAULT_DISTANCE_MAX_N: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// The `(x, z)` pair; `Y` is `(1, 1)` with the phase dropped.
    pub const fn bits(self) -> (u8, u8) {
        match self {
            Pauli::I => (0, 0),
            Pauli::X => (1, 0),
            Pauli::Z => (0, 1),
            Pauli::Y => (1, 1),
        }
    }

    pub const fn from_bits(x: bool, z: bool) -> Pauli {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (false, true) => Pauli::Z,
            (true, true) => Pauli::Y,
        }
    }

    pub fn from_char(c: char) -> Option<Pauli> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }

    pub const fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliString(Vec<Pauli>);

impl PauliString {
    pub fn new(letters: Vec<Pauli>) -> Self {
        Self(letters)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Pauli] {
        &self.0
    }

    pub fn to_vector(&self) -> F2Vector {
        let mut v = F2Vector::zeros(2 * self.0.len());
        for (i, p) in self.0.iter().enumerate() {
            let (x, z) = p.bits();
            v.set(2 * i, x == 1);
            v.set(2 * i + 1, z == 1);
        }
        v
    }

    pub fn from_vector(v: &F2Vector) -> Result<Self> {
        if !v.len().is_multiple_of(2) {
            return Err(Error::OddLength(v.len()));
        }
        Ok(Self(
            (0..v.len() / 2)
                .map(|i| Pauli::from_bits(v.get(2 * i), v.get(2 * i + 1)))
                .collect(),
        ))
    }

    /// Number of non-identity letters.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&p| p != Pauli::I).count()
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(i, c)| {
                Pauli::from_char(c).ok_or_else(|| Error::Parse {
                    line: 1,
                    column: i + 1,
                    message: format!("unexpected character {c:?}; expected one of I, X, Y, Z"),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(PauliString)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.0 {
            write!(f, "{}", p.as_char())?;
        }
        Ok(())
    }
}

/// An `[[n, k]]` stabilizer code: an `(n − k)`-dimensional ω-isotropic subspace of F₂^{2n}.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StabilizerCode {
    n: usize,
    space: RowSpace,
}

impl StabilizerCode {
    /// Builds a code from generator vectors of length `2n`. Dependent
    /// generators are reduced away; anticommuting ones are rejected, with
    /// 1-based generator indices in the error.
    pub fn from_generators(n: usize, generators: &[F2Vector]) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.len() != 2 * n {
                return Err(Error::DimensionMismatch {
                    expected: 2 * n,
                    found: g.len(),
                });
            }
            for (j, h) in generators.iter().enumerate().skip(i + 1) {
                if omega_words(g.words(), h.words()) {
                    return Err(Error::NonCommuting {
                        first: i + 1,
                        second: j + 1,
                    });
                }
            }
        }
        Ok(Self {
            n,
            space: RowSpace::from_vectors(2 * n, generators)?,
        })
    }

    pub fn from_paulis(generators: &[PauliString]) -> Result<Self> {
        let n = generators.first().ok_or(Error::Empty)?.len();
        let vectors: Vec<_> = generators.iter().map(PauliString::to_vector).collect();
        Self::from_generators(n, &vectors)
    }

    /// Trusted constructor for spaces already known to be isotropic.
    pub(crate) fn from_space_unchecked(n: usize, space: RowSpace) -> Self {
        debug_assert_eq!(space.ambient_dim(), 2 * n);
        Self { n, space }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.n - self.space.dim()
    }

    pub fn space(&self) -> &RowSpace {
        &self.space
    }

    pub fn stabilizers(&self) -> Vec<PauliString> {
        (0..self.space.dim())
            .map(|i| PauliString::from_vector(&self.space.basis().row(i)).expect("even length"))
            .collect()
    }

    /// The code `C · r`, i.e. the image under the transversal single-qubit Clifford with tableau `r`.
    pub fn transform(&self, r: Mat2) -> Result<StabilizerCode> {
        if !r.is_invertible() {
            return Err(Error::Singular);
        }
        let basis = self.space.basis();
        let rows: Vec<F2Vector> = (0..basis.rows())
            .map(|i| F2Vector::from_words(2 * self.n, endo::act_words(basis.row_words(i), r)))
            .collect();
        Ok(Self::from_space_unchecked(
            self.n,
            RowSpace::from_vectors(2 * self.n, &rows)?,
        ))
    }

    /// One stabilizer per line, rendered from the canonical basis.
    pub fn render(&self) -> String {
        self.stabilizers()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn is_css(&self) -> bool {
        endo::invariant_under(self, Mat2::new(1, 0, 0, 0))
    }

    pub fn is_self_dual_code(&self) -> bool {
        endo::invariant_under(self, Mat2::J)
    }

    pub fn is_gf4_linear(&self) -> bool {
        endo::invariant_under(self, Mat2::FACET)
    }
}

/// Parses the `.stab` text format: one Pauli string per line over `{I, X, Y, Z}`,
/// `#` starts a comment, blank lines are skipped.
pub fn parse_code(text: &str) -> Result<StabilizerCode> {
    let mut generators: Vec<(usize, PauliString)> = Vec::new();
    let mut width: Option<usize> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let lead = content.len() - content.trim_start().len();
        let mut letters = Vec::new();
        for (offset, c) in content.trim().chars().enumerate() {
            match Pauli::from_char(c) {
                Some(p) => letters.push(p),
                None => {
                    return Err(Error::Parse {
                        line,
                        column: lead + offset + 1,
                        message: format!("unexpected character {c:?}; expected one of I, X, Y, Z"),
                    })
                }
            }
        }
        match width {
            None => width = Some(letters.len()),
            Some(w) if w != letters.len() => {
                return Err(Error::Parse {
                    line,
                    column: 1,
                    message: format!("expected {w} qubits, found {}", letters.len()),
                })
            }
            Some(_) => {}
        }
        generators.push((line, PauliString(letters)));
    }
    let n = width.ok_or(Error::Empty)?;
    let vectors: Vec<F2Vector> = generators.iter().map(|(_, p)| p.to_vector()).collect();
    StabilizerCode::from_generators(n, &vectors).map_err(|e| match e {
        Error::NonCommuting { first, second } => Error::NonCommuting {
            first: generators[first - 1].0,
            second: generators[second - 1].0,
        },
        other => other,
    })
}

/// The ω-orthogonal complement of `C`.
pub fn dual(c: &StabilizerCode) -> RowSpace {
    // v ⟂ b for all basis rows b iff (b J) · vᵗ = 0.
    let basis = c.space().basis();
    let mut swapped = F2Matrix::zeros(basis.rows(), basis.cols());
    for i in 0..basis.rows() {
        for j in 0..basis.cols() {
            if basis.get(i, j ^ 1) {
                swapped.set(i, j, true);
            }
        }
    }
    RowSpace::from_matrix(&swapped.nullspace())
}

/// Minimum weight of a logical operator, i.e. of a vector in `dual(C) \ C`.
///
/// Candidates are enumerated in order of increasing weight, so the search
/// stops at the first logical found.
pub fn distance(c: &StabilizerCode, max_n: usize) -> Result<usize> {
    let n = c.n();
    let cap = max_n.min(32);
    if n > cap {
        return Err(Error::DistanceCap { n, max: cap });
    }
    if c.k() == 0 {
        return Err(Error::NoLogicalQubits);
    }
    let basis = c.space().basis();
    let checks: Vec<u64> = (0..basis.rows())
        .map(|i| basis.row_words(i).first().copied().map_or(0, swap_pairs))
        .collect();
    let is_logical = |v: u64| {
        checks.iter().all(|&s| (v & s).count_ones() & 1 == 0) && !c.space().contains_words(&[v])
    };

    let mut support = Vec::with_capacity(n);
    for w in 1..=n {
        if search_weight(n, w, 0, &mut support, &is_logical) {
            return Ok(w);
        }
    }
    unreachable!("a code with k > 0 has a logical operator of weight at most n")
}

fn search_weight(
    n: usize,
    remaining: usize,
    start: usize,
    support: &mut Vec<usize>,
    is_logical: &impl Fn(u64) -> bool,
) -> bool {
    if remaining == 0 {
        // Each support qubit takes one of X, Z, Y (pair values 1, 2, 3).
        let w = support.len();
        let total = 3usize.pow(w as u32);
        for mut code in 0..total {
            let mut v = 0u64;
            for &q in support.iter() {
                let letter = (code % 3 + 1) as u64;
                code /= 3;
                v |= letter << (2 * q);
            }
            if is_logical(v) {
                return true;
            }
        }
        return false;
    }
    for q in start..=n - remaining {
        support.push(q);
        let found = search_weight(n, remaining - 1, q + 1, support, is_logical);
        support.pop();
        if found {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIVE_ONE_THREE: &str = "XZZXI\nIXZZX\nXIXZZ\nZXIXZ";

    #[test]
    fn parse_four_two_two() {
        let c = parse_code("XXXX\nZZZZ\n").unwrap();
        assert_eq!((c.n(), c.space().dim(), c.k()), (4, 2, 2));
    }

    #[test]
    fn duplicate_generators_are_reduced() {
        let c = parse_code("XXXX\nXXXX").unwrap();
        assert_eq!((c.space().dim(), c.k()), (1, 3));
    }

    #[test]
    fn anticommuting_generators_name_their_lines() {
        let err = parse_code("# header\nXZ\n\nZI\n").unwrap_err();
        assert_eq!(err, Error::NonCommuting { first: 2, second: 4 });
    }

    #[test]
    fn bad_character_reports_position() {
        let err = parse_code("XXXX\n  ZZAZ").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 5, .. }), "{err:?}");
        assert!(matches!(parse_code("XX\nXXX"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(parse_code("# nothing\n\n"), Err(Error::Empty));
    }

    #[test]
    fn comments_and_whitespace() {
        let c = parse_code("  XXXX  # x check\n\n ZZZZ\n").unwrap();
        assert_eq!(c, parse_code("XXXX\nZZZZ").unwrap());
    }

    #[test]
    fn dual_examples() {
        let c = parse_code("XXXX\nZZZZ").unwrap();
        let d = dual(&c);
        assert_eq!(d.dim(), 6);
        assert!(d.contains_space(c.space()));

        let lagrangian = parse_code("XX\nZZ").unwrap();
        assert_eq!(dual(&lagrangian), *lagrangian.space());

        let trivial = StabilizerCode::from_generators(1, &[]).unwrap();
        assert_eq!(dual(&trivial), RowSpace::full(2));
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distance(&parse_code("XXXX\nZZZZ").unwrap(), 14).unwrap(), 2);
        assert_eq!(distance(&parse_code(FIVE_ONE_THREE).unwrap(), 14).unwrap(), 3);
        let six = parse_code("XXXXII\nIIXXXX\nZZZZII\nIIZZZZ\nIYIYIY").unwrap();
        assert_eq!(distance(&six, 14).unwrap(), 2);
    }

    #[test]
    fn distance_errors() {
        assert_eq!(distance(&parse_code("XX\nZZ").unwrap(), 14), Err(Error::NoLogicalQubits));
        assert_eq!(
            distance(&parse_code(FIVE_ONE_THREE).unwrap(), 4),
            Err(Error::DistanceCap { n: 5, max: 4 })
        );
    }

    #[test]
    fn predicates() {
        let c422 = parse_code("XXXX\nZZZZ").unwrap();
        assert_eq!((c422.is_css(), c422.is_self_dual_code(), c422.is_gf4_linear()), (true, true, true));
        let c513 = parse_code(FIVE_ONE_THREE).unwrap();
        assert_eq!((c513.is_css(), c513.is_self_dual_code(), c513.is_gf4_linear()), (false, false, true));
        let a3 = parse_code("XXZZ\nZZXX").unwrap();
        assert_eq!((a3.is_css(), a3.is_self_dual_code(), a3.is_gf4_linear()), (false, true, false));
    }

    #[test]
    fn render_round_trips() {
        let c = parse_code(FIVE_ONE_THREE).unwrap();
        assert_eq!(parse_code(&c.render()).unwrap(), c);
    }

    #[test]
    fn pauli_string_encoding() {
        let p: PauliString = "IXZY".parse().unwrap();
        assert_eq!(p.to_vector().to_bits(), vec![0, 0, 1, 0, 0, 1, 1, 1]);
        assert_eq!(PauliString::from_vector(&p.to_vector()).unwrap(), p);
        assert_eq!(p.weight(), 3);
    }
}
