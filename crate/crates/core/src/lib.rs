//! Exact computations with twisted Lie algebras, their Chevalley–Eilenberg and
//! Quillen complexes, and the projection-category combinatorics behind
//! generalized configuration spaces.

pub mod acceptance;
pub mod caps;
pub mod cli;
pub mod error;
pub mod io;
pub mod liealg;
pub mod linalg;
pub mod models;
pub mod partitions;
pub mod perm;
pub mod poly;
pub mod projcat;
pub mod random;
pub mod repstab;
pub mod twisted;

pub use error::{Error, Result};
