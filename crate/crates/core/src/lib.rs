//! Exact counting of spanning trees and uprooted spanning trees of labeled
//! graphs.
//!
//! Counts come from reduced-Laplacian determinants computed with
//! fraction-free elimination over big integers ([`kirchhoff`]), including the
//! marked-edge variant that counts trees through a chosen edge. The
//! [`census`] module tabulates uprooted trees of complete graphs, complete
//! bipartite graphs and `K_n` minus an edge three ways: closed forms,
//! determinants and brute-force enumeration ([`oracle`]). [`identities`]
//! checks the summation identities behind the closed forms in exact
//! rationals.

pub mod census;
pub mod error;
pub mod exact;
pub mod graph;
pub mod identities;
pub mod kirchhoff;
pub mod linalg;
pub mod oracle;

pub use census::{CensusKey, CensusTable, Family, Grain, Method};
pub use error::{Error, Result};
pub use graph::{complete_bipartite, complete_graph, EdgeRef, Graph};
pub use kirchhoff::{count_spanning_trees, count_spanning_trees_with_edge, count_uprooted_all_roots};
pub use linalg::{det_bareiss, det_linear_in_x, IntMatrix, LinPoly, MarkedMatrix};
