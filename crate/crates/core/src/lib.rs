//! Exact lattice-path combinatorics on Young diagrams.
//!
//! Every box `(i, j)` of a Young diagram is filled with the number of
//! north/east lattice paths from the lowest box of column `j` to the
//! rightmost box of row `i`. This crate builds that array with arbitrary
//! precision integers, certifies that every contiguous square block with a
//! unit lower-right entry has determinant one (both by exact elimination and
//! by enumerating non-intersecting path systems), and constructs the integral
//! orthonormal basis of the bilinear form given by the Durfee-square block.
//!
//! Indices are 1-based and matrix-wise throughout: rows increase downward,
//! columns increase rightward.

pub mod closedforms;
pub mod error;
pub mod gram;
pub mod lgv;
pub mod matrix;
pub mod partition;
pub mod patharray;
pub mod report;
pub mod sweep;

pub use error::{Error, Result};
pub use matrix::ExactMatrix;
pub use partition::{enumerate_partitions, BoxCoord, Partition};
pub use patharray::{path_count_array, LatticePath, PathCountArray};
pub use report::{Check, IdentityInstance, VerificationReport};
