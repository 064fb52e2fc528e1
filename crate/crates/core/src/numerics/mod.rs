//! High-precision numerical evaluation.

pub mod eval;
pub mod fixed;
pub mod mzv;

pub use eval::{verify_identity, Evaluator, Expr, Residual};
pub use fixed::BigComplex;
pub use mzv::{mzv_naive, mzv_value, naive_tail_bound};
