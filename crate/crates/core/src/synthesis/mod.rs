//! Exact synthesis: descent on `sde_measure`, a lookup table for the
//! residual unitaries with `sde_measure ≤ 3`, and optimality certificates.
//!
//! Circuits are stored in matrix-product order; their text form is in
//! application order (see [`Circuit`]).

mod brute;
mod certify;
mod circuit;
mod descent;
mod gate;
mod table;

pub use brute::{brute_force_min_counts, hadamard_weight, min_weight, reachable_classes, t_weight};
pub use certify::{certify_optimality, extension_witness, t_from_witness, OptimalityCertificate};
pub use circuit::{normalize_ht, Circuit, GateCounts};
pub use descent::{prepare_state, reduce_step, synthesize, Synthesis, SynthesisOptions};
pub use gate::Gate;
pub use table::{
    enumerate_sde_le3, LookupTable, TableEntry, TableStats, TABLE_FORMAT, TABLE_MAX_SDE,
    TABLE_VERSION,
};
