//! Root data of type A(m−1, n−1) for an arbitrary parity diagram, the
//! supermatrix realization of `sl(m|n)`, the Casimir element and the
//! co-supercommutators of the current and loop superalgebras.

mod diagram;
mod matrix;
mod roots;
mod tensor;

pub use diagram::ParityDiagram;
pub use matrix::{Decomposition, GlElem, SuperMatrixAlg};
pub use roots::{root_height, Root, RootInfo, RootSummary, RootSystem};
pub use tensor::{casimir_summands, w_summands, Bialgebra, Cobracket, Laurent2, LoopTensor, LoopUnit};

use thiserror::Error;

/// Errors raised while building root data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootDataError {
    /// A character outside `E`, `O`, `0`, `1`.
    #[error("unexpected character {found:?} at position {position}")]
    Parse {
        /// 0-based character position.
        position: usize,
        /// The offending character.
        found: char,
    },
    /// Fewer than two basis vectors.
    #[error("a diagram needs at least 2 entries, got {0}")]
    TooShort(usize),
    /// Counts that do not describe a superalgebra.
    #[error("invalid parity counts (even {n_even}, odd {n_odd}); both must be at least 1")]
    InvalidCounts {
        /// Requested number of even entries.
        n_even: usize,
        /// Requested number of odd entries.
        n_odd: usize,
    },
    /// The invariant form is degenerate where it must not be.
    #[error("degenerate invariant form on {0}")]
    DegeneratePairing(String),
    /// A matrix outside `sl(m|n)`.
    #[error("matrix does not lie in the span of the Chevalley basis")]
    NotInSubalgebra,
}
