//! Numerical Clifford-algebra machinery for Dirac spinors.
//!
//! The crate builds the Weyl-basis gamma matrices and the 16-element basis
//! of the spacetime Clifford algebra, computes the five bilinear covariants
//! of a Dirac spinor, and extracts helicity from the proportionality of the
//! axial and current slash matrices. On top of that sit two verification
//! pipelines: the recovery of the quantum-mechanical helicity eigenvalue
//! equations from the bilinear relation, and the reconstruction of the
//! monolayer-graphene vertex Hamiltonian from a block partial trace of the
//! restricted axial slash matrix.

pub mod bilinears;
pub mod clifford;
pub mod error;
pub mod graphene;
pub mod numerics;
pub mod spinors;
pub mod theorem;

pub use bilinears::{BilinearSet, HelicityResult, SlashPair};
pub use clifford::{CliffordBasis, GammaSet};
pub use error::Error;
pub use spinors::{DiracSpinor, PhaseOffset, TwoSpinor, UnitMomentum};
pub use theorem::{Handedness, TheoremReport};
