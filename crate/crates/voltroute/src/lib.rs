//! Oblivious routing along electric flows on weighted undirected graphs.
//!
//! The library is organized around the pipeline a router deployment would
//! follow:
//!
//! * [`graph`] — graph representation, incidence/Laplacian operators,
//!   spectral and combinatorial quantities, generators, edge-list I/O.
//! * [`solver`] — applying the Laplacian pseudo-inverse exactly (dense
//!   oracle) and approximately (truncated power series, plain and
//!   degree-normalized), plus 1→1 operator norms.
//! * [`routing`] — the electric routing operator, per-vertex potential
//!   tables and the forward rule, congestion, and competitive-ratio bounds.
//! * [`walk`] — the electric walk: the distribution over paths induced by
//!   a unit flow, with sampling, exact enumeration, and stability metrics.
//! * [`cutting`] — the concurrent flow-cutting decomposition of a unit
//!   flow's potential embedding, path decompositions, and edge-removal
//!   robustness experiments.
//! * [`sim`] — a deterministic simulator of the synchronous message-passing
//!   protocol that computes routing tables distributedly.
//! * [`json`] — report serialization with fixed-precision floats.

pub mod cutting;
pub mod graph;
pub mod json;
pub mod routing;
pub mod sim;
pub mod solver;
pub mod walk;

mod error;

pub use error::{Error, Result};
pub use graph::{EdgeVector, VertexVector, WeightedGraph};
