//! Exact combinatorics of Schur–Weyl duality on `(C^d)^{⊗n}`: symmetric group
//! characters, Littlewood–Richardson and Kronecker coefficients, character
//! polynomials and shifted Schur functions, together with a brute-force
//! tensor oracle that builds the underlying operators at small scale.

pub mod characters;
pub mod coefficients;
pub mod error;
pub mod json;
pub mod linalg;
pub mod oracle;
pub mod partition;
pub mod symfunc;
pub mod verify;
pub mod werner;

pub use error::{Error, Result};
pub use linalg::Rational;
pub use partition::{Partition, SkewShape};
