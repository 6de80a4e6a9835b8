//! Bipartite permutation graphs and their hereditary subclasses.
//!
//! The crate covers graph generators and the named families, letter-graph
//! and Parikh-word codecs (including a constructive encoder into
//! `floor(n/2) + 1` letters), recognisers for the classes, induced subgraph
//! isomorphism solvers for linear forests and P5-free bipartite graphs,
//! neighbourhood parameters, and the universal graphs with a verifier that
//! checks universality against exhaustive catalogues.

pub mod error;
pub mod graph;
pub mod isi;
pub mod letters;
pub mod parameters;
pub mod recognition;
pub mod universal;

pub use error::{Error, Result};
pub use graph::{disjoint_union, Embedding, Graph};
