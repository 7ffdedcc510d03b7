//! Fixtures shared by the integration tests.
#![allow(dead_code)]

use blockgraph::chartab::CharacterTable;
use blockgraph::lietype::{Family, GenericLieGroup};
use blockgraph::tablegen::{PermGroup, DEFAULT_BOUND};

pub const NILPOTENT: &[&str] = &["C2", "C6", "C12", "D8", "Q8"];
pub const NON_NILPOTENT: &[&str] = &["S3", "S4", "A4", "SL2_3", "A5", "S5", "A6", "L2_7"];

pub fn load(name: &str) -> CharacterTable {
    blockgraph::corpus::load(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Bundled simple groups of Lie type with a descriptor for each
/// isomorphism `name ≅ descriptor`.
pub fn lie_tables() -> Vec<(&'static str, GenericLieGroup)> {
    let g = |f, n, q| GenericLieGroup::new(f, n, q).unwrap();
    vec![
        ("A5", g(Family::A, 1, 4)),
        ("A5", g(Family::A, 1, 5)),
        ("A6", g(Family::A, 1, 9)),
        ("L2_7", g(Family::A, 1, 7)),
        ("L2_7", g(Family::A, 2, 2)),
        ("L2_11", g(Family::A, 1, 11)),
        ("Sz8", g(Family::Suzuki, 2, 8)),
        ("L5_2", g(Family::A, 4, 2)),
    ]
}

/// `SL(2,3)` acting on the eight non-zero vectors of `F_3²`.
fn sl2_3_generators() -> Vec<Vec<u32>> {
    let points: Vec<(u32, u32)> = (0..3)
        .flat_map(|a| (0..3).map(move |b| (a, b)))
        .filter(|&v| v != (0, 0))
        .collect();
    let act = |m: [[u32; 2]; 2]| -> Vec<u32> {
        points
            .iter()
            .map(|&(a, b)| {
                let image = (
                    (m[0][0] * a + m[0][1] * b) % 3,
                    (m[1][0] * a + m[1][1] * b) % 3,
                );
                points.iter().position(|&p| p == image).unwrap() as u32
            })
            .collect()
    };
    vec![act([[1, 1], [0, 1]]), act([[0, 2], [1, 0]])]
}

/// Permutation generators of the small groups with hand-entered tables.
pub fn dixon_groups() -> Vec<(&'static str, PermGroup)> {
    let groups: Vec<(&str, usize, Vec<Vec<u32>>)> = vec![
        ("S3", 3, vec![vec![1, 2, 0], vec![1, 0, 2]]),
        ("A4", 4, vec![vec![1, 2, 0, 3], vec![1, 0, 3, 2]]),
        ("S4", 4, vec![vec![1, 2, 3, 0], vec![1, 0, 2, 3]]),
        ("A5", 5, vec![vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]]),
        ("SL2_3", 8, sl2_3_generators()),
    ];
    groups
        .into_iter()
        .map(|(name, degree, gens)| (name, PermGroup::new(degree, gens, DEFAULT_BOUND).unwrap()))
        .collect()
}
