//! p-blocks of ordinary characters.
//!
//! Two irreducible characters lie in the same p-block exactly when their
//! central characters `ω_χ(K) = |K|·χ(g_K)/χ(1)` agree modulo a maximal ideal
//! above `p` at every class. Each row is fingerprinted by the reduced values,
//! and rows with equal fingerprints are grouped.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::arith;
use crate::chartab::CharacterTable;
use crate::cyclotomic::{Cyclotomic, CyclotomicError, FiniteFieldElt, ReductionContext};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("row index {row} out of range")]
    NoSuchRow { row: usize },
    #[error(transparent)]
    Arithmetic(#[from] CyclotomicError),
}

/// The values `ω_χ(K)`, one per class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralCharacter {
    pub values: Vec<Cyclotomic>,
}

pub fn central_character(t: &CharacterTable, row: usize) -> Result<CentralCharacter, BlockError> {
    let chi = t.irr().get(row).ok_or(BlockError::NoSuchRow { row })?;
    let degree = chi[0].to_integer().ok_or(CyclotomicError::DivisionByZero)?;
    let values = chi
        .iter()
        .zip(t.classes())
        .map(|(v, c)| v.scale(&BigInt::from(c.size)).div_int(&degree))
        .collect::<Result<_, _>>()?;
    Ok(CentralCharacter { values })
}

/// Central characters of every row, computed once and shared across primes.
pub fn central_characters(t: &CharacterTable) -> Result<Vec<CentralCharacter>, BlockError> {
    (0..t.irr().len())
        .into_par_iter()
        .map(|i| central_character(t, i))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Row indices in increasing order.
    pub rows: Vec<usize>,
    pub defect: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPartition {
    pub prime: u64,
    /// Blocks ordered by their smallest row.
    pub blocks: Vec<Block>,
    pub principal_index: usize,
}

impl BlockPartition {
    pub fn principal(&self) -> &Block {
        &self.blocks[self.principal_index]
    }

    /// Index of the block containing `row`.
    pub fn block_of(&self, row: usize) -> Option<usize> {
        self.blocks
            .iter()
            .position(|b| b.rows.binary_search(&row).is_ok())
    }
}

pub fn block_partition(t: &CharacterTable, p: u64) -> Result<BlockPartition, BlockError> {
    let omegas = central_characters(t)?;
    partition_from_central(t, &omegas, p)
}

/// Like [`block_partition`], reusing precomputed central characters.
pub fn partition_from_central(
    t: &CharacterTable,
    omegas: &[CentralCharacter],
    p: u64,
) -> Result<BlockPartition, BlockError> {
    if !arith::is_prime(p) {
        return Err(BlockError::NotPrime(p));
    }
    let ctx = ReductionContext::new(t.exponent(), p)?;
    partition_in_context(t, omegas, &ctx)
}

/// Partition with respect to the maximal ideal fixed by `ctx`.
pub fn partition_in_context(
    t: &CharacterTable,
    omegas: &[CentralCharacter],
    ctx: &ReductionContext,
) -> Result<BlockPartition, BlockError> {
    let p = ctx.characteristic();
    let fingerprints: Vec<Vec<FiniteFieldElt>> = omegas
        .par_iter()
        .map(|w| {
            w.values
                .iter()
                .map(|v| ctx.reduce(v))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;

    let mut index: HashMap<&[FiniteFieldElt], usize> = HashMap::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (row, fp) in fingerprints.iter().enumerate() {
        let slot = *index.entry(fp.as_slice()).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[slot].push(row);
    }

    let full = arith::valuation(t.order(), p);
    let blocks = groups
        .into_iter()
        .map(|rows| {
            let min = rows
                .iter()
                .map(|&r| arith::valuation(t.degree(r), p))
                .min()
                .unwrap_or(0);
            Block {
                rows,
                defect: full - min,
            }
        })
        .collect();
    // Row 0 is the trivial character and is seen first, so it opens block 0.
    Ok(BlockPartition {
        prime: p,
        blocks,
        principal_index: 0,
    })
}

/// The partition computed once for every maximal ideal over `p`, i.e. every
/// irreducible factor of `Φ_{m′}` mod `p`. Block membership does not depend
/// on the ideal, so all entries are equal; this is the exhaustive check.
pub fn partitions_over_all_ideals(
    t: &CharacterTable,
    p: u64,
) -> Result<Vec<BlockPartition>, BlockError> {
    if !arith::is_prime(p) {
        return Err(BlockError::NotPrime(p));
    }
    let omegas = central_characters(t)?;
    ReductionContext::all_ideals(t.exponent(), p)?
        .par_iter()
        .map(|ctx| partition_in_context(t, &omegas, ctx))
        .collect()
}

/// Rows of the principal p-block.
pub fn principal_block_rows(t: &CharacterTable, p: u64) -> Result<Vec<usize>, BlockError> {
    Ok(block_partition(t, p)?.principal().rows.clone())
}

/// Number of classes whose element order is prime to `p`.
pub fn p_regular_class_count(t: &CharacterTable, p: u64) -> usize {
    t.classes()
        .iter()
        .filter(|c| c.element_order % p != 0)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::{rows_from_text, ConjClass};

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

    fn c2() -> CharacterTable {
        CharacterTable::new(
            "C2",
            2,
            vec![ConjClass::new(1, 1), ConjClass::new(1, 2)],
            rows_from_text(&[&["1", "1"], &["1", "-1"]]),
        )
        .unwrap()
    }

    #[test]
    fn central_characters_of_s3() {
        let t = s3();
        let triv = central_character(&t, 0).unwrap();
        assert_eq!(triv.values, vec![1.into(), 3.into(), 2.into()]);
        let w = central_character(&t, 2).unwrap();
        assert_eq!(w.values, vec![1.into(), 0.into(), (-1).into()]);
        assert!(matches!(
            central_character(&t, 3),
            Err(BlockError::NoSuchRow { row: 3 })
        ));
    }

    #[test]
    fn c2_has_one_block_at_two() {
        let b = block_partition(&c2(), 2).unwrap();
        assert_eq!(
            b.blocks,
            vec![Block {
                rows: vec![0, 1],
                defect: 1
            }]
        );
    }

    #[test]
    fn s3_blocks() {
        let t = s3();
        assert_eq!(principal_block_rows(&t, 3).unwrap(), vec![0, 1, 2]);
        let b2 = block_partition(&t, 2).unwrap();
        assert_eq!(
            b2.blocks,
            vec![
                Block {
                    rows: vec![0, 1],
                    defect: 1
                },
                Block {
                    rows: vec![2],
                    defect: 0
                }
            ]
        );
        assert_eq!(b2.block_of(2), Some(1));
    }

    #[test]
    fn primes_not_dividing_the_order_give_singletons() {
        let b = block_partition(&s3(), 5).unwrap();
        assert_eq!(b.blocks.len(), 3);
        assert!(b
            .blocks
            .iter()
            .all(|blk| blk.rows.len() == 1 && blk.defect == 0));
    }

    #[test]
    fn composite_modulus_is_rejected() {
        assert_eq!(block_partition(&s3(), 4), Err(BlockError::NotPrime(4)));
    }
}
