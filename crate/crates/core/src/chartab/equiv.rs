//! Equivalence of character tables up to reordering rows and columns.

use std::collections::HashMap;

use super::CharacterTable;
use crate::cyclotomic::Cyclotomic;

/// A bijection between two tables: `rows[i]` and `columns[k]` are the
/// positions in the second table of row `i` and class `k` of the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableMatch {
    pub rows: Vec<usize>,
    pub columns: Vec<usize>,
}

fn sorted_column(t: &CharacterTable, k: usize) -> Vec<Cyclotomic> {
    let mut col: Vec<Cyclotomic> = t.irr().iter().map(|row| row[k].clone()).collect();
    col.sort();
    col
}

/// Finds a row and column bijection under which the two tables agree in
/// class sizes, element orders and every character value, if one exists.
///
/// Columns are matched by backtracking over classes with the same size,
/// element order and multiset of values; for each full column matching the
/// rows are then compared as a set.
pub fn find_match(a: &CharacterTable, b: &CharacterTable) -> Option<TableMatch> {
    let n = a.class_count();
    if n != b.class_count() || a.order() != b.order() {
        return None;
    }
    let key = |t: &CharacterTable, k: usize| {
        let c = &t.classes()[k];
        (c.element_order, c.size, sorted_column(t, k))
    };
    let keys_a: Vec<_> = (0..n).map(|k| key(a, k)).collect();
    let keys_b: Vec<_> = (0..n).map(|k| key(b, k)).collect();
    let candidates: Vec<Vec<usize>> = keys_a
        .iter()
        .map(|ka| (0..n).filter(|&j| keys_b[j] == *ka).collect())
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }
    let b_rows: HashMap<&[Cyclotomic], usize> = b
        .irr()
        .iter()
        .enumerate()
        .map(|(i, r)| (r.as_slice(), i))
        .collect();

    let mut columns = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search(0, a, b, &candidates, &b_rows, &mut columns, &mut used)
}

fn search(
    k: usize,
    a: &CharacterTable,
    b: &CharacterTable,
    candidates: &[Vec<usize>],
    b_rows: &HashMap<&[Cyclotomic], usize>,
    columns: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> Option<TableMatch> {
    if k == columns.len() {
        return match_rows(a, b, b_rows, columns);
    }
    for &j in &candidates[k] {
        if used[j] {
            continue;
        }
        used[j] = true;
        columns[k] = j;
        if let Some(m) = search(k + 1, a, b, candidates, b_rows, columns, used) {
            return Some(m);
        }
        used[j] = false;
    }
    None
}

fn match_rows(
    a: &CharacterTable,
    b: &CharacterTable,
    b_rows: &HashMap<&[Cyclotomic], usize>,
    columns: &[usize],
) -> Option<TableMatch> {
    let n = columns.len();
    let mut rows = Vec::with_capacity(n);
    let mut hit = vec![false; n];
    for row in a.irr() {
        // The row of b whose entry at columns[k] is row[k] for every k.
        let mut permuted = vec![Cyclotomic::zero(); b.class_count()];
        for (k, v) in row.iter().enumerate() {
            permuted[columns[k]] = v.clone();
        }
        let &i = b_rows.get(permuted.as_slice())?;
        if std::mem::replace(&mut hit[i], true) {
            return None;
        }
        rows.push(i);
    }
    Some(TableMatch {
        rows,
        columns: columns.to_vec(),
    })
}
