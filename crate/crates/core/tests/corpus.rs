mod common;

use std::collections::BTreeSet;

use blockgraph::arith::valuation;
use blockgraph::blocks::{block_partition, p_regular_class_count, partitions_over_all_ideals};
use blockgraph::chartab::print_table;
use blockgraph::corpus;
use blockgraph::cyclotomic::Cyclotomic;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use common::{lie_tables, load};

#[test]
fn every_bundled_table_validates() {
    for name in corpus::names() {
        let t = load(name);
        assert!(t.validate().is_empty(), "{name}: {:?}", t.validate());
        assert_eq!(t.irr().len(), t.class_count());
    }
}

#[test]
fn print_then_parse_is_bitwise_identity() {
    for name in corpus::names() {
        let text = corpus::bundled_text(name).unwrap();
        assert_eq!(print_table(&load(name)), text, "{name}");
    }
}

#[test]
fn complex_conjugation_permutes_rows() {
    for name in corpus::names() {
        let t = load(name);
        let images: BTreeSet<usize> = (0..t.class_count())
            .map(|i| t.conjugate_row(i).expect("conjugate is a row"))
            .collect();
        assert_eq!(images.len(), t.class_count(), "{name}");
    }
}

#[test]
fn block_partition_is_independent_of_the_ideal() {
    for name in corpus::names() {
        let t = load(name);
        for p in t.prime_divisors() {
            let all = partitions_over_all_ideals(&t, p).unwrap();
            assert!(!all.is_empty());
            assert!(
                all.iter().all(|b| *b == all[0]),
                "{name}, p = {p}: {} ideals",
                all.len()
            );
        }
    }
}

#[test]
fn defect_zero_blocks_are_singletons_of_full_p_part() {
    for name in corpus::names() {
        let t = load(name);
        for p in t.prime_divisors() {
            let full = valuation(t.order(), p);
            let partition = block_partition(&t, p).unwrap();
            let mut covered = BTreeSet::new();
            for block in &partition.blocks {
                let singleton_full =
                    block.rows.len() == 1 && valuation(t.degree(block.rows[0]), p) == full;
                assert_eq!(
                    block.defect == 0,
                    singleton_full,
                    "{name}, p = {p}, {:?}",
                    block.rows
                );
                for &r in &block.rows {
                    assert!(covered.insert(r), "{name}: row {r} in two blocks");
                }
            }
            assert_eq!(covered.len(), t.class_count());
            assert!(partition.principal().rows.contains(&0));
        }
    }
}

#[test]
fn block_count_is_bounded_by_regular_classes() {
    for name in corpus::names() {
        let t = load(name);
        for p in t.prime_divisors() {
            let blocks = block_partition(&t, p).unwrap().blocks.len();
            assert!(blocks <= p_regular_class_count(&t, p), "{name}, p = {p}");
        }
    }
}

#[test]
fn steinberg_row_is_a_defect_zero_block() {
    for (name, s) in lie_tables() {
        let t = load(name);
        let degree = s.steinberg_degree().to_u64().unwrap();
        let rows: Vec<usize> = (0..t.class_count())
            .filter(|&i| t.degree(i) == degree)
            .collect();
        assert_eq!(rows.len(), 1, "{name} as {s}");
        let partition = block_partition(&t, s.p()).unwrap();
        let block = &partition.blocks[partition.block_of(rows[0]).unwrap()];
        assert_eq!(
            (block.rows.as_slice(), block.defect),
            (&rows[..], 0),
            "{name} as {s}"
        );
    }
}

/// Class of S5 containing each class of A5: same element order, and the
/// size either equal or doubled.
fn fusion(
    a5: &blockgraph::chartab::CharacterTable,
    s5: &blockgraph::chartab::CharacterTable,
) -> Vec<usize> {
    a5.classes()
        .iter()
        .map(|c| {
            s5.classes()
                .iter()
                .position(|d| {
                    d.element_order == c.element_order && (d.size == c.size || d.size == 2 * c.size)
                })
                .expect("every A5 class lies in an S5 class")
        })
        .collect()
}

/// Multiplicities of the irreducibles of A5 in the restriction of row `chi` of S5.
fn restriction(
    a5: &blockgraph::chartab::CharacterTable,
    s5: &blockgraph::chartab::CharacterTable,
    fus: &[usize],
    chi: usize,
) -> Vec<i64> {
    (0..a5.class_count())
        .map(|psi| {
            let sum: Cyclotomic = (0..a5.class_count())
                .map(|k| {
                    let size = BigInt::from(a5.classes()[k].size);
                    (&s5.row(chi)[fus[k]] * &a5.row(psi)[k].conj()).scale(&size)
                })
                .sum();
            let n = sum.to_integer().expect("inner products are rational");
            (n / BigInt::from(a5.order())).to_i64().unwrap()
        })
        .collect()
}

#[test]
fn principal_block_of_s5_covers_that_of_a5() {
    let (a5, s5) = (load("A5"), load("S5"));
    let fus = fusion(&a5, &s5);
    for p in [2, 3, 5] {
        let b0_a5 = block_partition(&a5, p).unwrap().principal().rows.clone();
        let b0_s5 = block_partition(&s5, p).unwrap().principal().rows.clone();
        for chi in 0..s5.class_count() {
            let mult = restriction(&a5, &s5, &fus, chi);
            let hits_b0 = mult
                .iter()
                .enumerate()
                .any(|(psi, &m)| m > 0 && b0_a5.contains(&psi));
            if b0_s5.contains(&chi) {
                // B₀(A5) is S5-stable, so it is the only block B₀(S5) covers.
                for (psi, &m) in mult.iter().enumerate() {
                    assert!(
                        m == 0 || b0_a5.contains(&psi),
                        "p = {p}: S5 row {chi} → A5 row {psi}"
                    );
                }
            } else if p != 3 {
                // For p = 2, 5 the centralizer of a Sylow p-subgroup of A5
                // lies in A5, so B₀(S5) is the unique block covering B₀(A5).
                // For p = 3 the sign character also covers it.
                assert!(!hits_b0, "p = {p}: S5 row {chi} outside B₀ covers B₀(A5)");
            }
        }
    }
}
