//! Exact-arithmetic computations around the affine Weyl group of a simple
//! root system at an odd prime level `p`: alcove geometry and linkage
//! orbits, Weyl's dimension formula and its block-level analogues for the
//! `B2` minimal nilpotent orbit, Kazhdan-Lusztig polynomials with
//! length-truncated cell graphs, and hyperplane-configuration searches in
//! extended Dynkin diagrams.
//!
//! Everything is exact: weights and pairings are integers, dimensions are
//! arbitrary-precision integers, alcove sample points are rationals. All
//! values are immutable after construction and every operation is a pure
//! function, so the whole crate is safe for concurrent use (the
//! Kazhdan-Lusztig memo table serializes its inserts internally).

pub mod affine;
pub mod dims;
pub mod error;
pub mod rootsys;

pub use error::{Error, Result};
pub use rootsys::{build_root_system, RootSystem, ShiftedWeight, TypeLabel};
