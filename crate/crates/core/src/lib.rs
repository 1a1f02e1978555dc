//! Exact combinatorics for polynomial modules of the general linear Lie
//! superalgebra gl(m|n) relative to an arbitrary Borel subalgebra.
//!
//! * [`partitions`]: partitions, skew shapes, strips, interlacing.
//! * [`borel`]: δ/ε words, the order `<_b`, highest weights `λ^b`.
//! * [`tableaux`]: `b`-semistandard tableaux and their enumeration.
//! * [`branching`]: one-step branching, Gelfand-Tsetlin chains, dimensions.
//! * [`lr`]: Littlewood-Richardson coefficients and the multiplicity check.
//! * [`verify`]: super Kostka numbers and the counting identities.

pub mod borel;
pub mod branching;
pub mod error;
pub mod lr;
pub mod partitions;
pub mod tableaux;
pub mod verify;

pub use borel::{BorelSequence, Letter, Symbol, Weight};
pub use error::{Error, Result};
pub use partitions::{Partition, SkewShape, StripKind};
pub use tableaux::{Content, Format, Tableau};
pub use branching::{BranchingChain, ChainStep};
pub use verify::KostkaTable;
