//! Matching-k-covers of simple undirected graphs.
//!
//! A matching-k-cover is a family of k matchings whose union touches every
//! vertex. For k ≥ 2 one exists exactly when every stable set `S` satisfies
//! `|S| ≤ k·|N(S)|`; [`cover::solve`] either builds the k matchings or returns
//! a stable set violating that bound, and [`cover::min_k`] finds the least
//! such k. The equivalent k-star-packing and (1,k)-factor formulations,
//! minimum-weight covers, ℓ-bounded covers and a few richer covering
//! families live in [`factor`] and [`variants`]; [`oracle`] holds the
//! exhaustive reference implementations used to test all of them.

pub mod cover;
pub mod error;
pub mod factor;
pub mod gen;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod variants;

pub use cover::{
    min_k, solve, star_decompose, verify_certificate, verify_cover, MatchingDecomposition,
    MinKResult, Outcome, SolveResult, StableSetCertificate,
};
pub use error::{Error, Result};
pub use graph::{
    is_stable, line_graph, neighborhood, parse_graph, Edge, EdgeId, Graph, LBounds, Vertex,
    VertexSet, WeightMap,
};
