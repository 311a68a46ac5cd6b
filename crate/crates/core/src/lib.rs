//! Exact evaluation of the multivariate Tutte polynomial of binary matroids
//! and of the partition functions it specializes to: random-cluster,
//! Potts/Ising, hypergraph Potts, binary code weight enumerators and the
//! cycle index of permutation groups.
//!
//! Alongside the evaluators the crate carries the constructions that relate
//! these quantities: matroid duality, series and parallel extensions, a
//! randomized hypergraph-to-matroid reduction, and the embedding of binary
//! codes into permutation groups. Every identity between them can be checked
//! exactly at desk scale.

pub mod cli;
pub mod codes;
pub mod error;
pub mod gadgets;
pub mod gf2;
pub mod groups;
pub mod hypergraph;
pub mod interval;
pub mod matroid;
pub mod partition;
pub mod rational;
pub mod reductions;
pub mod weights;

pub use error::{Error, Result};
pub use gf2::Gf2Matrix;
pub use hypergraph::Hypergraph;
pub use interval::Interval;
pub use matroid::{BinaryMatroid, Element, Graph};
pub use rational::Rational;
pub use weights::WeightMap;
