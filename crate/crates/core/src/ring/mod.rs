//! Exact arithmetic in Z[ω] and Z[1/√2, i].
//!
//! `ω = e^{iπ/4}` and `√2 = ω − ω³`. Valuations are taken in base `√2` unless
//! a name says otherwise; [`GdeValue`] carries the infinite valuation of zero.

mod gde;
mod real;
mod scalar;
mod zomega;

pub use gde::{gde_base2, GdeValue};
pub use real::RealZSqrt2;
pub use scalar::{RingScalar, Sde};
pub use zomega::ZOmega;

pub(crate) use zomega::parse_decimal;
