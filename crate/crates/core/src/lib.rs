//! Exact construction and verification of cospectral graph pairs by swapping
//! glued edge sets between two "cousin" vertex sets.
//!
//! Everything is computed in exact rational arithmetic: characteristic
//! polynomials, the generalized characteristic polynomial `φ_G(λ, r)`, and
//! the similarity `𝒮 = diag((1/m)·J − Î, I)` that carries one matrix of a
//! constructed pair to the other.

pub mod census;
pub mod construct;
pub mod cousins;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod linalg;
mod serde_util;
pub mod spectra;

pub use construct::{check_hypotheses, parse_plan, swap_construct, verify_similarity, HypothesisReport, SwapPlan};
pub use cousins::{classify_pair, find_involution, CousinClassification, CousinFlag, SwapInvolution};
pub use error::{Error, Result};
pub use graph::{Graph, VertexMap};
pub use linalg::{BiPoly, ExactMatrix, Rational, UniPoly};
pub use spectra::{cospectral, MatrixKind, SpectralPolynomial};
