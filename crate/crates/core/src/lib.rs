//! Constructive ℓ-vertex-rankings of d-degenerate graphs.
//!
//! An ℓ-vertex-ranking colours the vertices with positive integers so that
//! every path with at most ℓ edges either has distinct endpoint colours or an
//! interior vertex coloured strictly above its endpoints. The crate provides:
//!
//! * [`graph`]: adjacency storage, degeneracy orders, orientations, power
//!   graphs and the endpoint-pair multigraph used to order the first phase.
//! * [`paths`]: enumeration of short undirected paths and the three
//!   path-to-vertex assignments (`rho`, `gamma`, `tau`) with their load bounds.
//! * [`verify`]: violation search and the validity predicate.
//! * [`layering`] and [`ranking`]: the two-phase randomized algorithm and the
//!   high-degree splitting reduction.
//! * [`exact`]: a branch-and-bound solver for the ranking number of small graphs.
//! * [`generators`], [`io`], [`harness`]: instances, file formats and
//!   experiment orchestration.

pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod io;
pub mod layering;
pub mod paths;
pub mod ranking;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{DegeneracyOrder, Graph, MultigraphGStar, Orientation, PowerGraph};
pub use layering::{compute_layering, Layering};
pub use paths::{EndpointMap, PathFamily, PathLimits, UPath};
pub use ranking::{rank_bounded_degree, rank_degenerate, Ranking};
pub use verify::{find_violations, is_valid_ranking, RankedColouring, Violation};

/// `log2(n)` clamped below at 1, the logarithm used in every parameter formula.
pub fn log2_clamped(n: usize) -> f64 {
    if n < 2 {
        1.0
    } else {
        (n as f64).log2().max(1.0)
    }
}
