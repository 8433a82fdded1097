//! Exact counting, optimization and small-n exhaustive search for
//! generalized Turan problems `ex(n, H, F)`.
//!
//! Counts are exact big integers throughout. Patterns and hosts can be
//! given either as concrete [`Graph`]s (at most 64 vertices) or as
//! [`BlowupSpec`]s whose class sizes may be astronomically large.

mod arith;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod hom;
pub mod optimizer;
pub mod oracle;
pub mod serde_big;
pub mod verifiers;

pub use constructions::{BlowupSpec, GraphExpr};
pub use error::{Error, Result};
pub use graph::{BigCount, Graph};
pub use graph6::{graph6_decode, graph6_encode};
