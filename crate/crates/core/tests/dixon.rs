mod common;

use std::collections::BTreeSet;

use blockgraph::blocks::block_partition;
use blockgraph::chartab::{find_match, CharacterTable};
use blockgraph::tablegen::{conjugacy_classes, dixon_table};

use common::{dixon_groups, load};

/// Blocks as sets of rows, translated through a table match.
fn blocks_under(t: &CharacterTable, p: u64, rows: &[usize]) -> BTreeSet<BTreeSet<usize>> {
    block_partition(t, p)
        .unwrap()
        .blocks
        .iter()
        .map(|b| b.rows.iter().map(|&r| rows[r]).collect())
        .collect()
}

#[test]
fn generated_tables_match_the_bundled_ones() {
    for (name, group) in dixon_groups() {
        let generated = dixon_table(name, &group.group).unwrap();
        assert!(generated.validate().is_empty(), "{name}");
        assert_eq!(
            generated.class_count(),
            conjugacy_classes(&group.group).len()
        );
        let bundled = load(name);
        let m = find_match(&generated, &bundled).unwrap_or_else(|| panic!("{name}: no match"));
        for p in generated.prime_divisors() {
            assert_eq!(
                blocks_under(&generated, p, &m.rows),
                blocks_under(&bundled, p, &(0..bundled.class_count()).collect::<Vec<_>>()),
                "{name}, p = {p}"
            );
        }
    }
}

#[test]
fn degrees_of_small_examples() {
    let groups = dixon_groups();
    let degrees = |name: &str| {
        let g = &groups.iter().find(|(n, _)| *n == name).unwrap().1;
        dixon_table(name, &g.group).unwrap().degrees()
    };
    assert_eq!(degrees("S3"), vec![1, 1, 2]);
    assert_eq!(degrees("A5"), vec![1, 3, 3, 4, 5]);
    assert_eq!(degrees("SL2_3"), vec![1, 1, 1, 2, 2, 2, 3]);
}
