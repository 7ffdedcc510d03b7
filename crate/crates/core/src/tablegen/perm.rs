//! Permutations in 0-based one-line notation and permutation groups.

use serde::{Deserialize, Serialize};

use super::{enumerate, Group, GroupElement, HashIndex, TablegenError};

/// `images[i]` is the image of point `i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn new(images: Vec<u32>) -> Result<Self, String> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let slot = seen
                .get_mut(i as usize)
                .ok_or_else(|| format!("point {i} out of range"))?;
            if *slot {
                return Err(format!("point {i} repeated"));
            }
            *slot = true;
        }
        Ok(Perm(images))
    }

    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }
}

impl GroupElement for Perm {
    type Index = HashIndex<Perm>;

    /// `self` first, then `rhs`.
    fn mul(&self, rhs: &Self) -> Self {
        Perm(self.0.iter().map(|&i| rhs.0[i as usize]).collect())
    }

    fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm(inv)
    }
}

/// The JSON input format: `{"degree": n, "generators": [[...], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PermGroupDocument {
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

/// A permutation group given by generators, enumerated up to a bound.
pub struct PermGroup {
    pub degree: usize,
    pub generators: Vec<Perm>,
    pub group: Group<Perm>,
}

impl PermGroup {
    pub fn new(
        degree: usize,
        generators: Vec<Vec<u32>>,
        bound: usize,
    ) -> Result<Self, TablegenError> {
        let gens = generators
            .into_iter()
            .enumerate()
            .map(|(index, g)| {
                if g.len() != degree {
                    return Err(TablegenError::BadGenerator {
                        index,
                        reason: format!("has {} points, expected {degree}", g.len()),
                    });
                }
                Perm::new(g).map_err(|reason| TablegenError::BadGenerator { index, reason })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let group = enumerate(Perm::identity(degree), &gens, bound)?;
        Ok(PermGroup {
            degree,
            generators: gens,
            group,
        })
    }

    pub fn from_json(bytes: &[u8], bound: usize) -> Result<Self, TablegenError> {
        let doc: PermGroupDocument =
            serde_json::from_slice(bytes).map_err(|e| TablegenError::Syntax(e.to_string()))?;
        Self::new(doc.degree, doc.generators, bound)
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }
}
