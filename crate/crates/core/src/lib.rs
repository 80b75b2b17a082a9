//! Exact-arithmetic toolkit for qutrit state-independent contextuality (SIC).
//!
//! The crate generates the root-of-unity ray families `(1,0,0)…(1,q^i,q^j)`
//! for `q = e^{2πi/k}`, builds their exclusivity (orthogonality) graphs, and
//! decides contextuality questions with certificates:
//!
//! * [`cyclo`]: exact arithmetic in the k-th cyclotomic field, including a
//!   zero test via cyclotomic-polynomial divisibility.
//! * [`rays`]: the parameterized ray family and exact projector algebra.
//! * [`xgraph`]: exclusivity graphs with bitset adjacency and exports.
//! * [`combinat`]: exact maximum (weighted) independent set, maximal
//!   independent set enumeration, and chromatic number.
//! * [`fraccolor`]: exact fractional chromatic number by rational linear
//!   programming with primal/dual certificates and a:b-coloring extraction.
//! * [`sicval`]: SIC verdicts, weighted noncontextuality inequalities, and
//!   full per-k reports.

pub mod combinat;
pub mod cyclo;
pub mod fraccolor;
pub mod rays;
mod ser;
pub mod sicval;
pub mod xgraph;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("capacity exceeded: {0}")]
    CapacityExceeded(String),
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
