//! The block graph of a finite group.
//!
//! Vertices are the primes dividing `|G|`; `p` and `q` are adjacent when the
//! principal p-block and the principal q-block share an irreducible character
//! other than the trivial one.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::blocks::{self, BlockError, BlockPartition};
use crate::chartab::CharacterTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{0} does not divide the group order")]
    VertexNotFound(u64),
    #[error(transparent)]
    Blocks(#[from] BlockError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Lowest nontrivial row in both principal blocks.
    pub row: usize,
    pub degree: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockGraph {
    vertices: Vec<u64>,
    edges: BTreeMap<(u64, u64), Witness>,
    partitions: Vec<BlockPartition>,
}

pub fn build_block_graph(t: &CharacterTable) -> Result<BlockGraph, GraphError> {
    let vertices = t.prime_divisors();
    let omegas = blocks::central_characters(t)?;
    let partitions: Vec<BlockPartition> = vertices
        .par_iter()
        .map(|&p| blocks::partition_from_central(t, &omegas, p))
        .collect::<Result<_, _>>()?;
    Ok(BlockGraph::from_partitions(t, partitions))
}

impl BlockGraph {
    /// Assembles the graph from principal blocks already computed, one
    /// partition per prime divisor in ascending order.
    pub fn from_partitions(t: &CharacterTable, partitions: Vec<BlockPartition>) -> Self {
        let vertices: Vec<u64> = partitions.iter().map(|b| b.prime).collect();
        let mut edges = BTreeMap::new();
        for (i, a) in partitions.iter().enumerate() {
            for b in &partitions[i + 1..] {
                let other = &b.principal().rows;
                let common = a
                    .principal()
                    .rows
                    .iter()
                    .find(|&&r| r != 0 && other.contains(&r));
                if let Some(&row) = common {
                    edges.insert(
                        (a.prime, b.prime),
                        Witness {
                            row,
                            degree: t.degree(row),
                        },
                    );
                }
            }
        }
        BlockGraph {
            vertices,
            edges,
            partitions,
        }
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    /// Edges as ordered pairs `(p, q)` with `p < q`, with their witnesses.
    pub fn edges(&self) -> impl Iterator<Item = ((u64, u64), Witness)> + '_ {
        self.edges.iter().map(|(&e, &w)| (e, w))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn partitions(&self) -> &[BlockPartition] {
        &self.partitions
    }

    pub fn partition(&self, p: u64) -> Option<&BlockPartition> {
        self.partitions.iter().find(|b| b.prime == p)
    }

    pub fn has_edge(&self, p: u64, q: u64) -> bool {
        self.edges.contains_key(&(p.min(q), p.max(q)))
    }

    pub fn witness(&self, p: u64, q: u64) -> Option<Witness> {
        self.edges.get(&(p.min(q), p.max(q))).copied()
    }

    pub fn is_complete(&self) -> bool {
        self.missing_edges().is_empty()
    }

    /// Pairs of vertices that are not adjacent.
    pub fn missing_edges(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for (i, &p) in self.vertices.iter().enumerate() {
            for &q in &self.vertices[i + 1..] {
                if !self.has_edge(p, q) {
                    out.push((p, q));
                }
            }
        }
        out
    }

    /// All triangles through `p`, each sorted, in lexicographic order.
    pub fn triangles_containing(&self, p: u64) -> Result<Vec<[u64; 3]>, GraphError> {
        if !self.vertices.contains(&p) {
            return Err(GraphError::VertexNotFound(p));
        }
        let nbrs: Vec<u64> = self
            .vertices
            .iter()
            .copied()
            .filter(|&q| q != p && self.has_edge(p, q))
            .collect();
        let mut out = Vec::new();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if self.has_edge(a, b) {
                    let mut tri = [p, a, b];
                    tri.sort_unstable();
                    out.push(tri);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Graphviz rendering; edges are labelled with the witness degree.
    pub fn export_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "graph {} {{",
            serde_json::to_string(name).expect("string")
        );
        for v in &self.vertices {
            let _ = writeln!(s, "  {v} [label=\"{v}\"];");
        }
        for ((p, q), w) in &self.edges {
            let _ = writeln!(s, "  {p} -- {q} [label=\"{}\"];", w.degree);
        }
        s.push_str("}\n");
        s
    }
}

/// Outcome of the triangle-at-2 test on the table of `G/S(G)`, where `S(G)`
/// is the largest solvable normal subgroup of `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolvabilityReport {
    /// Whether 2 is a vertex at all; if not, no triangle can contain it.
    pub two_divides_order: bool,
    pub triangles: Vec<[u64; 3]>,
    /// True when there is no triangle through 2, which certifies that `G` is
    /// solvable.
    pub solvable: bool,
}

pub fn solvability_criterion(quotient: &CharacterTable) -> Result<SolvabilityReport, GraphError> {
    if quotient.order() % 2 != 0 {
        return Ok(SolvabilityReport {
            two_divides_order: false,
            triangles: vec![],
            solvable: true,
        });
    }
    let g = build_block_graph(quotient)?;
    let triangles = g.triangles_containing(2)?;
    Ok(SolvabilityReport {
        two_divides_order: true,
        solvable: triangles.is_empty(),
        triangles,
    })
}
