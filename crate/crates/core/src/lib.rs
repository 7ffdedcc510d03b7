//! Principal p-blocks, block graphs and Lie-type number theory for finite
//! groups, computed exactly from ordinary character tables.

pub mod arith;
pub mod blocks;
pub mod chartab;
pub mod corpus;
pub mod cyclotomic;
pub mod graph;
pub mod lietype;
pub mod tablegen;
