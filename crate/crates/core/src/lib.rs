//! Exact star coloring and star-criticality for small graphs.
//!
//! - [`graph`]: bit-row adjacency graphs on at most 64 vertices.
//! - [`graph6`], [`edgelist`]: interchange formats.
//! - [`patterns`]: forbidden induced patterns, `P4` subgraphs, star graphs.
//! - [`coloring`]: star coloring checks and the exact `chi`/`chi_s` solvers.
//! - [`criticality`]: direct criticality and the pattern characterizations.
//! - [`families`]: horn, double-horn, cone-over-`C5` and standard graphs.
//! - [`enumerate`], [`verify`], [`bounds`]: isomorphism-free enumeration of
//!   small graphs and exhaustive claim checking.

pub mod bounds;
pub mod coloring;
pub mod criticality;
pub mod edgelist;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod patterns;
pub mod verify;

pub use coloring::{chromatic_number, star_chromatic_number, Coloring};
pub use graph::{Edge, Graph, GraphError};
pub use patterns::{PatternKind, PatternWitness};
