//! Exact spectral computations for Dirac operators with torsion.
//!
//! The crate evaluates Wodzicki residues of the form `𝒲(P D |D|^{-n})` at a
//! point, using exact Clifford arithmetic and a truncated symbol calculus, and
//! checks the resulting torsion functional on several finite and
//! noncommutative model geometries.

pub mod almostcommutative;
pub mod clifford;
pub mod coeff;
pub mod oracle;
pub mod parallel;
pub mod qmodels;
pub mod random;
pub mod residue;
pub mod scalar;
pub mod symcalc;
pub mod torsion;
pub mod verify;

pub use clifford::{Blade, GammaWord, Multivector};
pub use coeff::{CMatrix, Coefficient};
pub use residue::ResidueValue;
pub use scalar::{Gaussian, Rational};
