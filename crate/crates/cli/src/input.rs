//! Loading codes and tableaus from files, the built-in corpus, or named gates.

use std::fs;

use tclass_core::blocks::{parse_tableau, BlockMatrix};
use tclass_core::certify::named_tableaus;
use tclass_core::code::{parse_code, StabilizerCode};
use tclass_core::corpus::corpus_entry;

use crate::CliError;

/// `corpus:NAME` selects a built-in code; anything else is a `.stab` path.
pub fn load_code(spec: &str) -> Result<StabilizerCode, CliError> {
    if let Some(name) = spec.strip_prefix("corpus:") {
        return corpus_entry(name)
            .map(|e| e.code())
            .ok_or_else(|| CliError::Input(format!("no corpus entry named {name:?}")));
    }
    let text = fs::read_to_string(spec).map_err(|e| CliError::Input(format!("{spec}: {e}")))?;
    parse_code(&text).map_err(|e| CliError::Input(format!("{spec}: {e}")))
}

/// `named:NAME` selects a built-in tableau; anything else is a tableau file.
pub fn load_tableau(spec: &str) -> Result<BlockMatrix, CliError> {
    if let Some(name) = spec.strip_prefix("named:") {
        return named_tableaus()
            .remove(name)
            .ok_or_else(|| CliError::Input(format!("no named tableau {name:?}")));
    }
    let text = fs::read_to_string(spec).map_err(|e| CliError::Input(format!("{spec}: {e}")))?;
    parse_tableau(&text).map_err(|e| CliError::Input(format!("{spec}: {e}")))
}
