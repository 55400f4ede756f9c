//! Exact row reduction over Q and GF(p), null-space bases, and nilpotent
//! matrices row equivalent to any singular square matrix.
//!
//! ```
//! use nilpotent_rref::{format::parse_matrix, witness::witness};
//!
//! let t = parse_matrix("Q\n3 3\n1 0 2\n0 1 3\n0 0 0\n").unwrap();
//! let cert = witness(&t).unwrap();
//! assert_eq!(cert.index, 3);
//! assert_eq!(cert.rref_common, t);
//! ```

pub mod cli;
pub mod error;
pub mod format;
pub mod kernel;
pub mod matrix;
pub mod scalar;
pub mod witness;

pub use error::{Error, Result};
pub use kernel::{extend_to_basis, null_space_basis, same_null_space, ExtensionBasis, KernelBasis};
pub use matrix::{is_rref, rref, Matrix, RowOp, RowScript, RrefResult};
pub use scalar::{Field, FieldKind, Scalar};
pub use witness::{nilpotent_index, witness, NilpotentIndex, WitnessCertificate};
