//! Character tables from generators, by the Dixon–Schneider method.
//!
//! The group is enumerated by breadth-first closure, conjugacy classes are
//! found as orbits under conjugation by the generators, and the table is then
//! computed over a prime field and lifted to cyclotomic values (see
//! [`dixon_table`]). This is a brute-force oracle for small groups, not a
//! replacement for stabilizer-chain methods.

mod dixon;
mod perm;

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

pub use dixon::{dixon_table, dixon_table_with};
pub use perm::{Perm, PermGroup, PermGroupDocument};

/// Default cap on the number of enumerated elements.
pub const DEFAULT_BOUND: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TablegenError {
    #[error("group has more than {bound} elements")]
    SizeExceeded { bound: usize },
    #[error("invalid generator {index}: {reason}")]
    BadGenerator { index: usize, reason: String },
    #[error("malformed group document: {0}")]
    Syntax(String),
    #[error("class matrices did not separate the characters (internal error)")]
    NotSplit,
    #[error("computed table failed validation: {0}")]
    Invalid(String),
}

/// Element → position lookup used during enumeration. Most element types use
/// [`HashIndex`]; compact encodings can use a direct array instead.
pub trait ElementIndex<E>: Send + Sync {
    fn get(&self, e: &E) -> Option<u32>;
    fn insert(&mut self, e: E, position: u32);
}

/// Hash-map backed [`ElementIndex`].
pub struct HashIndex<E>(HashMap<E, u32>);

impl<E> Default for HashIndex<E> {
    fn default() -> Self {
        HashIndex(HashMap::new())
    }
}

impl<E: Eq + Hash + Send + Sync> ElementIndex<E> for HashIndex<E> {
    fn get(&self, e: &E) -> Option<u32> {
        self.0.get(e).copied()
    }

    fn insert(&mut self, e: E, position: u32) {
        self.0.insert(e, position);
    }
}

/// A concrete element of a finite group. Products compose left to right.
pub trait GroupElement: Clone + Eq + Hash + Send + Sync + Debug {
    type Index: ElementIndex<Self> + Default;

    fn mul(&self, rhs: &Self) -> Self;
    fn inverse(&self) -> Self;
}

/// A fully enumerated finite group. The identity sits at position 0.
pub struct Group<E: GroupElement> {
    elements: Vec<E>,
    index: E::Index,
    generators: Vec<E>,
}

impl<E: GroupElement> Group<E> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn position(&self, e: &E) -> Option<usize> {
        self.index.get(e).map(|i| i as usize)
    }

    fn pos(&self, e: &E) -> usize {
        self.position(e).expect("products stay in the group")
    }

    fn is_identity(&self, e: &E) -> bool {
        *e == self.elements[0]
    }
}

/// Closes `generators` under multiplication.
pub fn enumerate<E: GroupElement>(
    identity: E,
    generators: &[E],
    bound: usize,
) -> Result<Group<E>, TablegenError> {
    let mut index = E::Index::default();
    index.insert(identity.clone(), 0);
    let mut elements = vec![identity];
    let mut next = 0;
    while next < elements.len() {
        for g in generators {
            let h = elements[next].mul(g);
            if index.get(&h).is_none() {
                if elements.len() >= bound {
                    return Err(TablegenError::SizeExceeded { bound });
                }
                index.insert(h.clone(), elements.len() as u32);
                elements.push(h);
            }
        }
        next += 1;
    }
    Ok(Group {
        elements,
        index,
        generators: generators.to_vec(),
    })
}

/// Conjugacy classes with sizes, element orders and power maps.
#[derive(Debug, Clone)]
pub struct Classes {
    /// Position of a representative of each class.
    pub representatives: Vec<usize>,
    pub sizes: Vec<u64>,
    pub orders: Vec<u64>,
    /// `power_maps[k][j]` is the class of `g_k^j` for `0 ≤ j < orders[k]`.
    pub power_maps: Vec<Vec<usize>>,
    /// Class of each element, by position.
    pub class_of: Vec<u32>,
}

impl Classes {
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    /// Class containing the inverses of class `k`.
    pub fn inverse_class(&self, k: usize) -> usize {
        let o = self.orders[k] as usize;
        self.power_maps[k][(o - 1) % o]
    }
}

/// Orbits of the group on itself under conjugation by the generators,
/// numbered in order of discovery (so the identity class is class 0).
pub fn conjugacy_classes<E: GroupElement>(g: &Group<E>) -> Classes {
    const UNSET: u32 = u32::MAX;
    let n = g.order();
    let gens: Vec<(E, E)> = g
        .generators
        .iter()
        .map(|x| (x.inverse(), x.clone()))
        .collect();
    let mut class_of = vec![UNSET; n];
    let mut representatives = Vec::new();
    let mut sizes = Vec::new();
    let mut queue = Vec::new();
    for start in 0..n {
        if class_of[start] != UNSET {
            continue;
        }
        let id = representatives.len() as u32;
        representatives.push(start);
        class_of[start] = id;
        queue.clear();
        queue.push(start);
        let mut head = 0;
        while head < queue.len() {
            let x = &g.elements[queue[head]];
            head += 1;
            for (inv, gen) in &gens {
                let y = g.pos(&inv.mul(x).mul(gen));
                if class_of[y] == UNSET {
                    class_of[y] = id;
                    queue.push(y);
                }
            }
        }
        sizes.push(queue.len() as u64);
    }
    let mut orders = Vec::with_capacity(sizes.len());
    let mut power_maps = Vec::with_capacity(sizes.len());
    for &r in &representatives {
        let x = &g.elements[r];
        let mut map = vec![0usize];
        let mut y = x.clone();
        while !g.is_identity(&y) {
            map.push(class_of[g.pos(&y)] as usize);
            y = y.mul(x);
        }
        orders.push(map.len() as u64);
        power_maps.push(map);
    }
    Classes {
        representatives,
        sizes,
        orders,
        power_maps,
        class_of,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: &[u32]) -> Perm {
        Perm::new(images.to_vec()).unwrap()
    }

    #[test]
    fn cyclic_group_of_order_three() {
        let g = enumerate(Perm::identity(3), &[perm(&[1, 2, 0])], DEFAULT_BOUND).unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn a5_from_a_five_cycle_and_a_three_cycle() {
        let g = enumerate(
            Perm::identity(5),
            &[perm(&[1, 2, 3, 4, 0]), perm(&[1, 2, 0, 3, 4])],
            DEFAULT_BOUND,
        )
        .unwrap();
        assert_eq!(g.order(), 60);
        let c = conjugacy_classes(&g);
        let mut sizes = c.sizes.clone();
        sizes.sort();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
        assert_eq!(c.sizes[0], 1);
        let mut orders = c.orders.clone();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 3, 5, 5]);
    }

    #[test]
    fn s3_and_c2_classes() {
        let s3 = enumerate(
            Perm::identity(3),
            &[perm(&[1, 2, 0]), perm(&[1, 0, 2])],
            100,
        )
        .unwrap();
        let c = conjugacy_classes(&s3);
        let mut by_order: Vec<(u64, u64)> = c.orders.iter().copied().zip(c.sizes.clone()).collect();
        by_order.sort();
        assert_eq!(by_order, vec![(1, 1), (2, 3), (3, 2)]);
        for k in 0..c.len() {
            assert_eq!(c.orders[c.inverse_class(k)], c.orders[k]);
        }
        let c2 = enumerate(Perm::identity(2), &[perm(&[1, 0])], 100).unwrap();
        assert_eq!(conjugacy_classes(&c2).sizes, vec![1, 1]);
    }

    #[test]
    fn bound_is_enforced() {
        let mut ten_cycle: Vec<u32> = (1..10).collect();
        ten_cycle.push(0);
        let swap = perm(&[1, 0, 2, 3, 4, 5, 6, 7, 8, 9]);
        let r = enumerate(Perm::identity(10), &[swap, perm(&ten_cycle)], DEFAULT_BOUND);
        assert_eq!(
            r.err(),
            Some(TablegenError::SizeExceeded {
                bound: DEFAULT_BOUND
            })
        );
    }
}
