//! Exact and numerical computation with refined symmetric multiple zeta
//! values.
//!
//! Words over the two letters `e0`, `e1` are written as strings of `0` and
//! `1`; indices as comma-separated positive integers (`"3,2"`), with
//! `ζ(k1,…,kd) = Σ_{0<m1<…<md} m1^{-k1}…md^{-kd}` so that an index is
//! admissible when its last part is at least 2.

pub mod config;
pub mod error;
pub mod index;
pub mod numerics;
pub mod rational;
pub mod regularization;
pub mod relations;
pub mod rsmzv;
pub mod suites;
pub mod tpoly;
pub mod word;
pub mod zsymbol;

pub use error::{Error, Result};
pub use index::{Index, IndexPoly};
pub use rational::Q;
pub use tpoly::TPoly;
pub use word::{Word, WordPoly};
pub use zsymbol::{ZSymbol, ZetaMonomial};
