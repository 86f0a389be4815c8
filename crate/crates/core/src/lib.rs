//! Wiener index tooling for unicyclic bipartite graphs.
//!
//! The crate computes distances, transmissions and Wiener indices on small
//! bitset graphs, builds the onion, broom and minimum-extremal families with
//! their closed-form values, enumerates unicyclic bipartite graphs with given
//! part sizes up to isomorphism, and checks the extremal claims about them by
//! exhaustive search.

pub mod canon;
pub mod cli;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod random;
pub mod verify;

pub use canon::{CanonicalForm, CANONICAL_MAX_VERTICES};
pub use error::{Error, Graph6Error, Graph6ErrorKind, GraphError, ParamError};
pub use graph::{Bipartition, DistanceMatrix, Graph, MAX_VERTICES};
