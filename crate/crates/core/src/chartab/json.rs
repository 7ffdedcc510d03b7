//! The JSON table format.
//!
//! ```json
//! {
//!   "name": "S3",
//!   "order": 6,
//!   "classes": [{"size": 1, "order": 1, "label": "1a"}, ...],
//!   "irr": [[1, 1, 1], [2, 0, -1], ...]
//! }
//! ```
//!
//! Entries are JSON integers or strings in the cyclotomic text syntax. An
//! optional `"provenance"` string records where the data came from. The
//! printer is deterministic, and printing a parsed canonical document
//! reproduces it byte for byte.

use std::fmt::Write as _;

use serde::Deserialize;

use super::{CharacterTable, ConjClass, SyntaxError, TableError};
use crate::cyclotomic::Cyclotomic;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    name: String,
    order: u64,
    #[serde(default)]
    provenance: Option<String>,
    classes: Vec<ClassDoc>,
    irr: Vec<Vec<Entry>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassDoc {
    size: u64,
    order: u64,
    #[serde(default)]
    label: Option<String>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

/// Parses a document into a canonically ordered but unvalidated table.
pub fn parse_document(bytes: &[u8]) -> Result<CharacterTable, SyntaxError> {
    let doc: Document = serde_json::from_slice(bytes).map_err(|e| SyntaxError {
        message: e.to_string(),
    })?;
    let mut irr = Vec::with_capacity(doc.irr.len());
    for (i, row) in doc.irr.into_iter().enumerate() {
        let mut out = Vec::with_capacity(row.len());
        for (j, entry) in row.into_iter().enumerate() {
            out.push(match entry {
                Entry::Int(v) => Cyclotomic::from_int(v),
                Entry::Text(s) => s.parse().map_err(|e| SyntaxError {
                    message: format!("entry [{i}][{j}] {s:?}: {e}"),
                })?,
            });
        }
        irr.push(out);
    }
    let classes = doc
        .classes
        .into_iter()
        .map(|c| ConjClass {
            size: c.size,
            element_order: c.order,
            label: c.label,
        })
        .collect();
    let mut t = CharacterTable::new_unchecked(doc.name, doc.order, classes, irr);
    t.provenance = doc.provenance;
    Ok(t)
}

/// Parses and validates a document.
pub fn parse_table(bytes: &[u8]) -> Result<CharacterTable, TableError> {
    let t = parse_document(bytes)?;
    let violations = t.validate();
    if violations.is_empty() {
        Ok(t)
    } else {
        Err(super::ValidationError {
            name: t.name,
            violations,
        }
        .into())
    }
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn entry(v: &Cyclotomic) -> String {
    match v.to_integer().and_then(|i| i64::try_from(i).ok()) {
        Some(i) => i.to_string(),
        None => quote(&v.to_string()),
    }
}

/// Canonical text of a table.
pub fn print_table(t: &CharacterTable) -> String {
    let mut s = String::new();
    s.push_str("{\n");
    let _ = writeln!(s, "  \"name\": {},", quote(&t.name));
    let _ = writeln!(s, "  \"order\": {},", t.order);
    if let Some(p) = &t.provenance {
        let _ = writeln!(s, "  \"provenance\": {},", quote(p));
    }
    s.push_str("  \"classes\": [\n");
    for (i, c) in t.classes.iter().enumerate() {
        let _ = write!(
            s,
            "    {{\"size\": {}, \"order\": {}",
            c.size, c.element_order
        );
        if let Some(l) = &c.label {
            let _ = write!(s, ", \"label\": {}", quote(l));
        }
        s.push('}');
        s.push_str(if i + 1 < t.classes.len() { ",\n" } else { "\n" });
    }
    s.push_str("  ],\n  \"irr\": [\n");
    for (i, row) in t.irr.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(entry).collect();
        let _ = write!(s, "    [{}]", cells.join(", "));
        s.push_str(if i + 1 < t.irr.len() { ",\n" } else { "\n" });
    }
    s.push_str("  ]\n}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const S3: &str = r#"{
  "name": "S3",
  "order": 6,
  "classes": [
    {"size": 1, "order": 1, "label": "1a"},
    {"size": 3, "order": 2, "label": "2a"},
    {"size": 2, "order": 3, "label": "3a"}
  ],
  "irr": [
    [1, 1, 1],
    [1, -1, 1],
    [2, 0, -1]
  ]
}
"#;

    #[test]
    fn round_trip_is_bitwise() {
        let t = parse_table(S3.as_bytes()).unwrap();
        assert_eq!(print_table(&t), S3);
        assert_eq!(t.degrees(), vec![1, 1, 2]);
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_table(b"{"), Err(TableError::Syntax(_))));
        let bad = S3.replace("[2, 0, -1]", "[2, 0, \"E(\"]");
        assert!(matches!(
            parse_table(bad.as_bytes()),
            Err(TableError::Syntax(_))
        ));
        let bad = S3.replace("\"order\": 6", "\"order\": 6, \"extra\": 1");
        assert!(matches!(
            parse_table(bad.as_bytes()),
            Err(TableError::Syntax(_))
        ));
    }

    #[test]
    fn validation_errors_name_the_relation() {
        let bad = S3.replace("[1, -1, 1]", "[1, -1, 2]");
        match parse_table(bad.as_bytes()) {
            Err(TableError::Validation(e)) => {
                assert!(e
                    .violations
                    .iter()
                    .any(|v| v.relation() == "row orthogonality"));
            }
            other => panic!("expected a validation error, got {other:?}"),
        }
    }

    #[test]
    fn cyclotomic_entries_are_quoted() {
        let doc = r#"{"name": "C3", "order": 3,
            "classes": [{"size": 1, "order": 1}, {"size": 1, "order": 3}, {"size": 1, "order": 3}],
            "irr": [[1, 1, 1], [1, "E(3)", "E(3)^2"], [1, "E(3)^2", "E(3)"]]}"#;
        let t = parse_table(doc.as_bytes()).unwrap();
        let text = print_table(&t);
        assert!(text.contains("\"-1-E(3)\""), "{text}");
        assert_eq!(print_table(&parse_table(text.as_bytes()).unwrap()), text);
    }
}
