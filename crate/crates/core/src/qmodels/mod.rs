//! Noncommutative examples in floating point: the noncommutative torus and
//! the quantum disc behind the residues on `SU_q(2)`.

pub mod disc;
pub mod suq2;
pub mod torus;

pub use disc::{disc_represent, tau0_dn, tau0_up, tau1, DiscError, QuantumDiscElement};
pub use suq2::{paired_combination, suq2_residue_cancellation, Suq2DiracSpec};
pub use torus::{torus_trace_identity, FormalSeries, TorusElement, TorusError};
