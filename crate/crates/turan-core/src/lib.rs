//! Bitset-backed simple graphs on up to 64 vertices, with the machinery
//! needed for exact extremal-graph experiments: canonical labeling,
//! subgraph-copy counting, parametric extremal constructions, and
//! isomorph-free exhaustive enumeration by canonical augmentation.
//!
//! The crate is `no_std` (with `alloc`); everything here is a pure
//! function over immutable value types, so all of it is safe to call
//! from any number of threads. IO, parallel search drivers, and the CLI
//! live in the companion `turan` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod canon;
pub mod construct;
pub mod count;
pub mod enumerate;
pub mod g6;
pub mod graph;

pub use canon::{automorphism_count, canonical_form, canonical_labeling, CanonicalForm};
pub use construct::{binomial, formula_value, Construction, FormulaId};
pub use count::{CountError, PatternSpec};
pub use g6::{from_graph6, to_graph6, Graph6Error};
pub use graph::{Bipartition, Graph, GraphError, MAX_VERTICES};
