//! Exact synthesis of single-qubit unitaries over Z[1/√2, i] into circuits
//! over {H, T, T†, P, P†, Z, X, Y} with minimal Hadamard and T counts.
//!
//! The pipeline is [`ring`] arithmetic, [`unitary`] matrices, and
//! [`synthesis`], which peels one Hadamard per step off a unitary until its
//! denominator exponent drops to 3 and finishes from a lookup table.
//! [`verifier`] re-checks the descent step exhaustively over residues mod 8.

pub mod cli;
pub mod error;
pub mod json;
pub mod ring;
pub mod synthesis;
pub mod unitary;
pub mod verifier;

pub use error::{Error, Result};
pub use ring::{GdeValue, RealZSqrt2, RingScalar, Sde, ZOmega};
pub use synthesis::{Circuit, Gate, GateCounts, LookupTable, OptimalityCertificate};
pub use unitary::{RingState, RingUnitary};
