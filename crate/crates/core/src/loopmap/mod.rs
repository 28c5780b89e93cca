//! The quantum loop superalgebra side: scalar series (`G`, q-numbers, the
//! Cartan currents `ψ`, `φ`) and the map `Φ` from loop generators into the
//! truncated Yangian, together with checks of the loop relations on images.

mod phi;
mod scalar;

use thiserror::Error;

pub use phi::{cartan_mul, LoopCheck, LoopGenerator, LoopInstance, LoopKind, LoopMap, LoopRelationId};
pub use scalar::{
    check_ge_identity, divided_exp, g_coefficients, g_series, hbar_over_q_difference, ordering_count, partitions,
    q_difference, qnumber_series, sqrt_hbar_over_q_difference, to_hpoly, Current, CurrentExpansion, CurrentTerm,
    GeReport, LoopCartanPoly, Sign, HBAR, V,
};

use crate::exact::SeriesError;
use crate::yangian::YangianError;

/// Errors raised by the loop module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoopError {
    /// A series order below the minimum.
    #[error("series order must be at least {min}, got {got}")]
    Order {
        /// Smallest accepted order.
        min: u32,
        /// Requested order.
        got: u32,
    },
    /// The parity factor `−1` leaves the quotients without a removable zero.
    #[error("parity factor -1 is outside the admissible range of the exchange identity")]
    InadmissibleParity,
    /// The diagram has an odd vertex with an odd neighbour.
    #[error("diagram {diagram}: odd vertex {vertex} has an odd neighbour")]
    Constraint {
        /// Diagram in E/O notation.
        diagram: String,
        /// The offending vertex (1-based).
        vertex: usize,
    },
    /// The relation does not apply to the given indices.
    #[error("relation instance {0} does not apply")]
    Inapplicable(String),
    /// A generator string could not be parsed or names a missing vertex.
    #[error("unknown loop generator `{0}`")]
    UnknownGenerator(String),
    /// Series arithmetic failed.
    #[error(transparent)]
    Series(#[from] SeriesError),
    /// Yangian arithmetic failed.
    #[error(transparent)]
    Yangian(#[from] YangianError),
}
