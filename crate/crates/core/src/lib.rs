//! Pseudocodeword analysis of Tanner graphs.
//!
//! Builds the fundamental cone of a parity-check representation, enumerates
//! its irreducible pseudocodewords, computes pseudo-weights and bounds,
//! classifies pseudocodewords as good or bad with exact linear programming,
//! relates them to stopping sets and computation trees, and compares
//! iterative decoders against ML on the same graphs.

pub mod classify;
pub mod cli;
pub mod comptree;
pub mod decode;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod lift;
pub mod linalg;
pub mod lp;
pub mod polytope;
pub mod stopping;
pub mod weights;

pub use error::{Error, Result};
pub use graph::{Codebook, TannerGraph};
