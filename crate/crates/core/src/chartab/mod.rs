//! Ordinary character tables: data model, canonical ordering and validation.
//!
//! A table is only handed to downstream code after [`CharacterTable::new`]
//! (or [`parse_table`]) has put it in canonical order and checked every
//! relation listed in [`Violation`]. [`CharacterTable::new_unchecked`] exists
//! for diagnostics and for building deliberately broken inputs.

mod equiv;
mod json;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::arith;
use crate::cyclotomic::Cyclotomic;

pub use equiv::{find_match, TableMatch};
pub use json::{parse_document, parse_table, print_table};

/// A conjugacy class: its size, the order of its elements and an optional
/// label such as `"3a"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConjClass {
    pub size: u64,
    pub element_order: u64,
    pub label: Option<String>,
}

impl ConjClass {
    pub fn new(size: u64, element_order: u64) -> Self {
        ConjClass {
            size,
            element_order,
            label: None,
        }
    }

    pub fn labelled(size: u64, element_order: u64, label: impl Into<String>) -> Self {
        ConjClass {
            size,
            element_order,
            label: Some(label.into()),
        }
    }

    fn is_identity(&self) -> bool {
        self.size == 1 && self.element_order == 1
    }
}

/// A relation that a character table fails to satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The matrix is not square with one column per class.
    Shape {
        rows: usize,
        columns: usize,
        classes: usize,
    },
    /// No class of size 1 and element order 1.
    NoIdentityClass,
    /// No row with every entry equal to 1.
    NoTrivialCharacter,
    /// A value at the identity class is not a positive integer.
    BadDegree {
        row: usize,
    },
    SizeSum {
        order: u64,
        sum: u64,
    },
    DegreeSum {
        order: u64,
        sum: BigInt,
    },
    RowOrthogonality {
        first: usize,
        second: usize,
    },
    ColumnOrthogonality {
        first: usize,
        second: usize,
    },
    /// `|K|·χ(g_K)/χ(1)` is not an algebraic integer.
    CentralCharacter {
        row: usize,
        class: usize,
    },
    /// A value lives in a cyclotomic field not contained in `Q(ζ_o)` with `o`
    /// the element order of its class.
    Conductor {
        row: usize,
        class: usize,
        conductor: u64,
    },
}

impl Violation {
    /// Short name of the violated relation.
    pub fn relation(&self) -> &'static str {
        match self {
            Violation::Shape { .. } => "shape",
            Violation::NoIdentityClass => "identity class",
            Violation::NoTrivialCharacter => "trivial character",
            Violation::BadDegree { .. } => "degree",
            Violation::SizeSum { .. } => "size sum",
            Violation::DegreeSum { .. } => "degree sum",
            Violation::RowOrthogonality { .. } => "row orthogonality",
            Violation::ColumnOrthogonality { .. } => "column orthogonality",
            Violation::CentralCharacter { .. } => "central character integrality",
            Violation::Conductor { .. } => "conductor",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape { rows, columns, classes } => {
                write!(f, "shape: {rows} rows and {columns} columns for {classes} classes")
            }
            Violation::NoIdentityClass => write!(f, "identity class: none of size 1 and order 1"),
            Violation::NoTrivialCharacter => write!(f, "trivial character: no all-ones row"),
            Violation::BadDegree { row } => {
                write!(f, "degree: row {row} has no positive integer degree")
            }
            Violation::SizeSum { order, sum } => {
                write!(f, "size sum: class sizes add up to {sum}, not {order}")
            }
            Violation::DegreeSum { order, sum } => {
                write!(f, "degree sum: squared degrees add up to {sum}, not {order}")
            }
            Violation::RowOrthogonality { first, second } => {
                write!(f, "row orthogonality: rows {first} and {second}")
            }
            Violation::ColumnOrthogonality { first, second } => {
                write!(f, "column orthogonality: columns {first} and {second}")
            }
            Violation::CentralCharacter { row, class } => write!(
                f,
                "central character integrality: row {row} at class {class} is not an algebraic integer"
            ),
            Violation::Conductor { row, class, conductor } => write!(
                f,
                "conductor: row {row} at class {class} has conductor {conductor}, \
                 which does not divide the element order"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("table {name:?} failed validation: {}", join(.violations))]
pub struct ValidationError {
    pub name: String,
    pub violations: Vec<Violation>,
}

fn join(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed table document: {message}")]
pub struct SyntaxError {
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Validation(#[from] ValidationError),
}

/// The ordinary character table of a finite group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    name: String,
    order: u64,
    classes: Vec<ConjClass>,
    irr: Vec<Vec<Cyclotomic>>,
    exponent: u64,
    provenance: Option<String>,
}

impl CharacterTable {
    /// Canonically orders and validates a table.
    pub fn new(
        name: impl Into<String>,
        order: u64,
        classes: Vec<ConjClass>,
        irr: Vec<Vec<Cyclotomic>>,
    ) -> Result<Self, ValidationError> {
        let t = Self::new_unchecked(name, order, classes, irr);
        let violations = t.validate();
        if violations.is_empty() {
            Ok(t)
        } else {
            Err(ValidationError {
                name: t.name,
                violations,
            })
        }
    }

    /// Canonically orders a table without checking any relation beyond its
    /// shape. Use [`validate`](Self::validate) before trusting the result.
    pub fn new_unchecked(
        name: impl Into<String>,
        order: u64,
        classes: Vec<ConjClass>,
        irr: Vec<Vec<Cyclotomic>>,
    ) -> Self {
        let exponent = classes
            .iter()
            .map(|c| c.element_order.max(1))
            .fold(1, arith::lcm);
        let mut t = CharacterTable {
            name: name.into(),
            order,
            classes,
            irr,
            exponent,
            provenance: None,
        };
        if t.is_well_shaped() {
            t.canonicalize();
        }
        t
    }

    pub fn with_provenance(mut self, note: impl Into<String>) -> Self {
        self.provenance = Some(note.into());
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn irr(&self) -> &[Vec<Cyclotomic>] {
        &self.irr
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.irr[i]
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// `χ(1)` for row `i`; rows of a validated table always have one.
    pub fn degree(&self, i: usize) -> u64 {
        self.irr[i][0]
            .to_integer()
            .and_then(|d| d.to_u64())
            .expect("validated tables have integral degrees")
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.irr.len()).map(|i| self.degree(i)).collect()
    }

    /// `|C_G(g_K)| = |G| / |K|`.
    pub fn centralizer_order(&self, class: usize) -> u64 {
        self.order / self.classes[class].size
    }

    /// Ascending prime divisors of `|G|`.
    pub fn prime_divisors(&self) -> Vec<u64> {
        arith::prime_divisors(self.order)
    }

    fn is_well_shaped(&self) -> bool {
        let n = self.classes.len();
        n > 0 && self.irr.len() == n && self.irr.iter().all(|r| r.len() == n)
    }

    /// Identity class first, then by element order, class size and the sorted
    /// multiset of column values; trivial character first, then by degree and
    /// the lexicographic value sequence. Remaining ties keep input order.
    fn canonicalize(&mut self) {
        let n = self.classes.len();
        let column_key = |j: usize| {
            let mut vals: Vec<&Cyclotomic> = self.irr.iter().map(|r| &r[j]).collect();
            vals.sort();
            (
                !self.classes[j].is_identity(),
                self.classes[j].element_order,
                self.classes[j].size,
                vals,
            )
        };
        let keys: Vec<_> = (0..n).map(column_key).collect();
        let mut cols: Vec<usize> = (0..n).collect();
        cols.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        let classes = cols.iter().map(|&j| self.classes[j].clone()).collect();
        let mut irr: Vec<Vec<Cyclotomic>> = self
            .irr
            .iter()
            .map(|r| cols.iter().map(|&j| r[j].clone()).collect())
            .collect();
        irr.sort_by(|a, b| row_order(a, b));
        self.classes = classes;
        self.irr = irr;
    }

    /// Every relation the table violates; empty for a valid table.
    pub fn validate(&self) -> Vec<Violation> {
        if !self.is_well_shaped() {
            return vec![Violation::Shape {
                rows: self.irr.len(),
                columns: self.irr.first().map_or(0, Vec::len),
                classes: self.classes.len(),
            }];
        }
        let mut out = Vec::new();
        let n = self.classes.len();
        if !self.classes[0].is_identity() {
            out.push(Violation::NoIdentityClass);
        }
        if !self.irr[0].iter().all(Cyclotomic::is_one) {
            out.push(Violation::NoTrivialCharacter);
        }
        let sum: u64 = self.classes.iter().map(|c| c.size).sum();
        if sum != self.order {
            out.push(Violation::SizeSum {
                order: self.order,
                sum,
            });
        }
        let degrees: Vec<Option<BigInt>> = self
            .irr
            .iter()
            .map(|r| r[0].to_integer().filter(|d| d.is_positive()))
            .collect();
        for (row, d) in degrees.iter().enumerate() {
            if d.is_none() {
                out.push(Violation::BadDegree { row });
            }
        }
        let deg_sum: BigInt = degrees.iter().flatten().map(|d| d * d).sum();
        if deg_sum != BigInt::from(self.order) {
            out.push(Violation::DegreeSum {
                order: self.order,
                sum: deg_sum,
            });
        }
        for (row, r) in self.irr.iter().enumerate() {
            for (class, v) in r.iter().enumerate() {
                if self.classes[class].element_order % v.conductor() != 0 {
                    out.push(Violation::Conductor {
                        row,
                        class,
                        conductor: v.conductor(),
                    });
                }
            }
        }
        // Central characters, only meaningful with integral degrees.
        for (row, d) in degrees.iter().enumerate() {
            let Some(d) = d else { continue };
            for class in 0..n {
                let scaled = self.irr[row][class].scale(&BigInt::from(self.classes[class].size));
                if scaled.div_int(d).is_err() {
                    out.push(Violation::CentralCharacter { row, class });
                }
            }
        }
        out.extend(self.row_orthogonality());
        out.extend(self.column_orthogonality());
        out
    }

    fn row_orthogonality(&self) -> Vec<Violation> {
        let n = self.irr.len();
        let conj: Vec<Vec<Cyclotomic>> = self
            .irr
            .iter()
            .map(|r| r.iter().map(Cyclotomic::conj).collect())
            .collect();
        let sizes: Vec<BigInt> = self.classes.iter().map(|c| BigInt::from(c.size)).collect();
        let order = Cyclotomic::from_int(self.order);
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        pairs
            .par_iter()
            .filter_map(|&(i, j)| {
                let s: Cyclotomic = (0..n)
                    .map(|k| (&self.irr[i][k] * &conj[j][k]).scale(&sizes[k]))
                    .sum();
                let expected = if i == j {
                    order.clone()
                } else {
                    Cyclotomic::zero()
                };
                (s != expected).then_some(Violation::RowOrthogonality {
                    first: i,
                    second: j,
                })
            })
            .collect()
    }

    fn column_orthogonality(&self) -> Vec<Violation> {
        let n = self.irr.len();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        pairs
            .par_iter()
            .filter_map(|&(k, l)| {
                let s: Cyclotomic = self.irr.iter().map(|r| &r[k] * &r[l].conj()).sum();
                let expected = if k == l {
                    Cyclotomic::from_int(self.centralizer_order(k))
                } else {
                    Cyclotomic::zero()
                };
                (s != expected).then_some(Violation::ColumnOrthogonality {
                    first: k,
                    second: l,
                })
            })
            .collect()
    }

    /// Labels each class by element order and a letter, `"1a"`, `"2a"`,
    /// `"2b"`, …, in column order.
    pub fn assign_default_labels(&mut self) {
        let mut seen: std::collections::HashMap<u64, usize> = std::collections::HashMap::new();
        for c in &mut self.classes {
            let n = seen.entry(c.element_order).or_insert(0);
            c.label = Some(format!("{}{}", c.element_order, letters(*n)));
            *n += 1;
        }
    }

    /// Index of the row equal to the complex conjugate of row `i`.
    pub fn conjugate_row(&self, i: usize) -> Option<usize> {
        let target: Vec<Cyclotomic> = self.irr[i].iter().map(Cyclotomic::conj).collect();
        self.irr.iter().position(|r| *r == target)
    }
}

/// `0 → "a"`, …, `25 → "z"`, `26 → "aa"`, …
fn letters(mut n: usize) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'a' + (n % 26) as u8);
        if n < 26 {
            break;
        }
        n = n / 26 - 1;
    }
    out.reverse();
    String::from_utf8(out).expect("ascii")
}

fn row_order(a: &[Cyclotomic], b: &[Cyclotomic]) -> Ordering {
    let trivial = |r: &[Cyclotomic]| r.iter().all(Cyclotomic::is_one);
    let degree = |r: &[Cyclotomic]| r[0].to_integer().unwrap_or_else(BigInt::zero);
    trivial(b)
        .cmp(&trivial(a))
        .then_with(|| degree(a).cmp(&degree(b)))
        .then_with(|| a.cmp(b))
}

/// A tiny helper for hand-written tables: every entry given in the text
/// syntax of [`Cyclotomic`].
pub fn rows_from_text(rows: &[&[&str]]) -> Vec<Vec<Cyclotomic>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|s| s.parse().expect("valid cyclotomic literal"))
                .collect()
        })
        .collect()
}

impl fmt::Display for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", print_table(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> CharacterTable {
        CharacterTable::new(
            "S3",
            6,
            vec![
                ConjClass::new(1, 1),
                ConjClass::new(3, 2),
                ConjClass::new(2, 3),
            ],
            rows_from_text(&[&["1", "1", "1"], &["1", "-1", "1"], &["2", "0", "-1"]]),
        )
        .unwrap()
    }

    fn c6() -> (Vec<ConjClass>, Vec<Vec<Cyclotomic>>) {
        let classes = [1u64, 6, 3, 2, 3, 6]
            .iter()
            .map(|&o| ConjClass::new(1, o))
            .collect();
        let irr = (0..6)
            .map(|i| {
                (0..6)
                    .map(|j| Cyclotomic::root(6, i * j).unwrap())
                    .collect()
            })
            .collect();
        (classes, irr)
    }

    #[test]
    fn cyclic_group_of_order_six_is_valid() {
        let (classes, irr) = c6();
        let t = CharacterTable::new("C6", 6, classes, irr).unwrap();
        assert!(t.validate().is_empty());
        assert_eq!(t.exponent(), 6);
        assert_eq!(t.classes()[0].element_order, 1);
        assert_eq!(t.classes()[1].element_order, 2);
    }

    #[test]
    fn size_sum_is_checked() {
        let t = CharacterTable::new_unchecked(
            "bad",
            6,
            vec![
                ConjClass::new(1, 1),
                ConjClass::new(2, 2),
                ConjClass::new(2, 3),
            ],
            rows_from_text(&[&["1", "1", "1"], &["1", "-1", "1"], &["2", "0", "-1"]]),
        );
        let v = t.validate();
        assert!(
            v.contains(&Violation::SizeSum { order: 6, sum: 5 }),
            "{v:?}"
        );
    }

    #[test]
    fn duplicated_trivial_row_breaks_row_orthogonality() {
        let t = CharacterTable::new_unchecked(
            "bad",
            6,
            vec![
                ConjClass::new(1, 1),
                ConjClass::new(3, 2),
                ConjClass::new(2, 3),
            ],
            rows_from_text(&[&["1", "1", "1"], &["1", "-1", "1"], &["1", "1", "1"]]),
        );
        assert!(t
            .validate()
            .iter()
            .any(|v| v.relation() == "row orthogonality"));
    }

    #[test]
    fn canonical_order_puts_trivial_row_and_identity_first() {
        let t = CharacterTable::new(
            "S3",
            6,
            vec![
                ConjClass::new(2, 3),
                ConjClass::new(1, 1),
                ConjClass::new(3, 2),
            ],
            rows_from_text(&[&["-1", "2", "0"], &["1", "1", "-1"], &["1", "1", "1"]]),
        )
        .unwrap();
        assert_eq!(t, s3());
        assert_eq!(t.degrees(), vec![1, 1, 2]);
    }

    #[test]
    fn prime_divisors_of_order() {
        assert_eq!(s3().prime_divisors(), vec![2, 3]);
    }

    #[test]
    fn conjugation_permutes_rows() {
        let (classes, irr) = c6();
        let t = CharacterTable::new("C6", 6, classes, irr).unwrap();
        let mut images: Vec<usize> = (0..6).map(|i| t.conjugate_row(i).unwrap()).collect();
        images.sort();
        assert_eq!(images, (0..6).collect::<Vec<_>>());
    }
}
