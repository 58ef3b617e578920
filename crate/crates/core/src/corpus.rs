//! Built-in reference codes with their known classifications.

use crate::code::{parse_code, StabilizerCode};
use crate::endo::FamilyCase;

#[derive(Clone, Copy, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub stab_text: &'static str,
    pub expected_case: FamilyCase,
    pub note: &'static str,
}

impl CorpusEntry {
    pub fn code(&self) -> StabilizerCode {
        parse_code(self.stab_text).expect("corpus entries are valid codes")
    }
}

const ENTRIES: &[CorpusEntry] = &[
    CorpusEntry {
        name: "422",
        stab_text: "XXXX\nZZZZ\n",
        expected_case: FamilyCase::SelfDualCss,
        note: "[[4,2,2]] code",
    },
    CorpusEntry {
        name: "513",
        stab_text: "XZZXI\nIXZZX\nXIXZZ\nZXIXZ\n",
        expected_case: FamilyCase::Gf4Linear,
        note: "[[5,1,3]] code, standard cyclic generators",
    },
    CorpusEntry {
        name: "self-dual-4",
        stab_text: "XXZZ\nZZXX\n",
        expected_case: FamilyCase::SelfDual,
        note: "4-qubit self-dual non-CSS code with algebra A3",
    },
    CorpusEntry {
        name: "622",
        stab_text: "XXXXII\nIIXXXX\nZZZZII\nIIZZZZ\n",
        expected_case: FamilyCase::SelfDualCss,
        note: "[[6,2,2]] code",
    },
    CorpusEntry {
        name: "612",
        stab_text: "XXXXII\nIIXXXX\nZZZZII\nIIZZZZ\nIYIYIY\n",
        expected_case: FamilyCase::SemiSelfDualCss,
        note: "[[6,2,2]] with its second logical qubit fixed by IYIYIY; algebra E",
    },
    CorpusEntry {
        name: "generic",
        stab_text: GENERIC_TEXT,
        expected_case: FamilyCase::Generic,
        note: "random [[5,1]] code with trivial algebra (seed 2024)",
    },
];

// Found by `sampling::random_code(&mut ChaCha8Rng::seed_from_u64(GENERIC_SEED), 5, 4)`,
// redrawn until the algebra is {0, I} and the distance is at least 2; see the reproduction test in tests/corpus.rs.
pub const GENERIC_SEED: u64 = 2024;
const GENERIC_TEXT: &str = "XIXZX\nZIIXI\nIXYIY\nIZXII\n";

pub fn corpus() -> &'static [CorpusEntry] {
    ENTRIES
}

pub fn corpus_entry(name: &str) -> Option<&'static CorpusEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}
