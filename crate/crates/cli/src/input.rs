//! Resolving table arguments to bytes.

use std::path::Path;

use blockgraph::corpus;

use crate::commands::CliError;

/// Reads a table argument. An existing file is read as is; otherwise the
/// file stem names a table in the corpus (so `corpus/A5.json`, `A5.json` and
/// `A5` all resolve to the bundled A5 table). `BLOCKGRAPH_CORPUS` replaces
/// the bundled corpus with a directory.
pub fn table_bytes(arg: &str) -> Result<Vec<u8>, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read(path).map_err(|e| CliError::usage(format!("cannot read {arg}: {e}")));
    }
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .ok_or_else(|| CliError::usage(format!("no such table: {arg}")))?;
    if let Some(dir) = corpus::override_dir() {
        let file = dir.join(format!("{stem}.json"));
        return std::fs::read(&file)
            .map_err(|e| CliError::usage(format!("cannot read {}: {e}", file.display())));
    }
    corpus::bundled_text(stem)
        .map(|t| t.as_bytes().to_vec())
        .ok_or_else(|| CliError::usage(format!("no such file or bundled table: {arg}")))
}

pub fn file_bytes(arg: &str) -> Result<Vec<u8>, CliError> {
    std::fs::read(arg).map_err(|e| CliError::usage(format!("cannot read {arg}: {e}")))
}
