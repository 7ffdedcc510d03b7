//! The bundled table corpus.
//!
//! Tables are compiled into the library. Setting `BLOCKGRAPH_CORPUS` to a
//! directory makes [`load`] read `<dir>/<file>.json` from disk instead.

use std::path::PathBuf;

use crate::chartab::{parse_table, CharacterTable, SyntaxError, TableError};

/// Environment variable naming a directory that replaces the bundled tables.
pub const CORPUS_ENV: &str = "BLOCKGRAPH_CORPUS";

macro_rules! bundle {
    ($($file:literal),* $(,)?) => {
        &[$(($file, include_str!(concat!("../corpus/", $file, ".json")))),*]
    };
}

static BUNDLED: &[(&str, &str)] = bundle!(
    "C2", "C6", "C12", "S3", "S4", "A4", "D8", "Q8", "SL2_3", "A5", "S5", "A6", "L2_7", "L2_11",
    "Sz8", "J1", "L5_2",
);

/// File stems of the bundled tables.
pub fn names() -> impl Iterator<Item = &'static str> {
    BUNDLED.iter().map(|(n, _)| *n)
}

/// Raw text of a bundled table.
pub fn bundled_text(name: &str) -> Option<&'static str> {
    BUNDLED.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// The corpus directory override, if set.
pub fn override_dir() -> Option<PathBuf> {
    std::env::var_os(CORPUS_ENV).map(PathBuf::from)
}

/// Loads and validates a table by file stem, honouring the override.
pub fn load(name: &str) -> Result<CharacterTable, TableError> {
    if let Some(dir) = override_dir() {
        let path = dir.join(format!("{name}.json"));
        let bytes = std::fs::read(&path).map_err(|e| SyntaxError {
            message: format!("cannot read {}: {e}", path.display()),
        })?;
        return parse_table(&bytes);
    }
    let text = bundled_text(name).ok_or_else(|| SyntaxError {
        message: format!("no bundled table named {name:?}"),
    })?;
    parse_table(text.as_bytes())
}
