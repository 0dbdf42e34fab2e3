//! Exact enumeration of pattern-avoiding inversion sequences.
//!
//! * [`sequence`]: inversion sequences, patterns, containment and the
//!   one-value-below-each-maximum characterisation of `I(201,210)`.
//! * [`oracle`]: brute-force counting by pruned backtracking.
//! * [`succession`]: labelled succession rules counted by dynamic programming.
//! * [`series`]: truncated power series, the closed form for `I(201,210)`, and
//!   residual checks of the algebraic and functional equations.

pub mod error;
pub mod oracle;
pub mod sequence;
pub mod series;
pub mod succession;
pub mod word;

pub use error::{Error, Result};
pub use oracle::BigCount;
pub use sequence::{Basis, InversionSequence, Pattern, StructureProfile};
pub use succession::SystemId;
