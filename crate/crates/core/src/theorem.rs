//! The main result as an executable check: starting from a pure-handed
//! spinor and the proportionality `K = h J` of its slash matrices, recover
//! the quantum-mechanical eigenvalue equations of the helicity operator
//! together with the projector identities that link the two.
//!
//! The implication is enforced structurally: every check starts from the
//! bilinear data and produces eigenvalue statements, never the reverse.

use crate::bilinears::{extract_helicity, slash_pair, HelicityResult};
use crate::clifford::{GammaSet, PAULI_X, PAULI_Y, PAULI_Z};
use crate::error::Error;
use crate::numerics::{max_diff, outer2, CMat2, CVec2, C64, MAT2_ID};
use crate::spinors::{
    left_handed, right_handed, DiracSpinor, PhaseOffset, TwoSpinor, UnitMomentum,
};

/// Which chiral half of the Dirac spinor is populated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Handedness {
    Right,
    Left,
}

impl Handedness {
    /// The helicity eigenvalue this handedness corresponds to.
    pub fn sign(&self) -> f64 {
        match self {
            Handedness::Right => 1.0,
            Handedness::Left => -1.0,
        }
    }
}

/// The spin projection along a direction of motion: Hermitian, traceless,
/// squares to the identity, eigenvalues exactly +1 and -1.
#[derive(Debug, Clone, PartialEq)]
pub struct HelicityOperator {
    pub matrix: CMat2,
    pub direction: UnitMomentum,
}

/// Builds `sigma . p` from the Pauli matrices and the Cartesian components
/// of the direction.
pub fn helicity_operator(p: &UnitMomentum) -> HelicityOperator {
    let [px, py, pz] = p.unit_vector();
    let matrix =
        PAULI_X * C64::new(px, 0.0) + PAULI_Y * C64::new(py, 0.0) + PAULI_Z * C64::new(pz, 0.0);
    HelicityOperator {
        matrix,
        direction: *p,
    }
}

fn self_projector(phi: &TwoSpinor) -> CMat2 {
    let v = phi.to_vector();
    outer2(&v, &v)
}

/// Max-norm residuals of the four projector identities, in the order
/// `P(phi_R) = (1 + sigma.p)/2`, `P(phi_R^C) = (1 - sigma.p)/2`,
/// `P(phi_L^C) = (1 + sigma.p)/2`, `P(phi_L) = (1 - sigma.p)/2`.
pub fn projector_identities(p: &UnitMomentum, off: PhaseOffset) -> [f64; 4] {
    let sp = helicity_operator(p).matrix;
    let half = C64::new(0.5, 0.0);
    let plus = (MAT2_ID + sp) * half;
    let minus = (MAT2_ID - sp) * half;

    let r = right_handed(p);
    let l = left_handed(p, off);
    [
        max_diff(&self_projector(&r), &plus),
        max_diff(&self_projector(&r.charge_conj()), &minus),
        max_diff(&self_projector(&l.charge_conj()), &plus),
        max_diff(&self_projector(&l), &minus),
    ]
}

fn eigen_defect(sp: &CMat2, phi: &TwoSpinor, eigenvalue: f64) -> f64 {
    let v = phi.to_vector();
    let defect: CVec2 = sp * v - v * C64::new(eigenvalue, 0.0);
    defect.norm()
}

/// Euclidean norms of the eigenvalue-equation defects for the four states,
/// in the order `phi_R (+1)`, `phi_L (-1)`, `phi_R^C (-1)`, `phi_L^C (+1)`.
pub fn eigen_equations(p: &UnitMomentum, off: PhaseOffset) -> [f64; 4] {
    let sp = helicity_operator(p).matrix;
    let r = right_handed(p);
    let l = left_handed(p, off);
    [
        eigen_defect(&sp, &r, 1.0),
        eigen_defect(&sp, &l, -1.0),
        eigen_defect(&sp, &r.charge_conj(), -1.0),
        eigen_defect(&sp, &l.charge_conj(), 1.0),
    ]
}

/// Everything one direction-plus-handedness case produces: the extracted
/// helicity, the four eigenvalue defects, and the two projector identities
/// belonging to the chosen handedness.
#[derive(Debug, Clone, PartialEq)]
pub struct TheoremReport {
    pub direction: UnitMomentum,
    pub delta_phi: PhaseOffset,
    pub handedness: Handedness,
    pub extracted: HelicityResult,
    pub eigen_residuals: [f64; 4],
    pub projector_residuals: [f64; 2],
    pub passed: bool,
}

impl TheoremReport {
    /// Largest residual across the helicity fit, eigenvalue defects,
    /// projector identities and the deviation of `h` from its expected sign.
    pub fn max_residual(&self) -> f64 {
        let mut worst = self
            .extracted
            .residual
            .max((self.extracted.h - self.handedness.sign()).abs());
        for r in self.eigen_residuals {
            worst = worst.max(r);
        }
        for r in self.projector_residuals {
            worst = worst.max(r);
        }
        worst
    }
}

/// Runs the full chain for one case: builds the pure-handed spinor (the
/// opposite chiral half zeroed), extracts `h` from the slash matrices,
/// then evaluates the eigenvalue equations and the projector identities.
///
/// Propagates [`Error::NotProportional`] / [`Error::ZeroCurrent`] from the
/// extraction; neither can occur for these states, so an error here is
/// itself a falsification.
pub fn verify_main_result(
    p: &UnitMomentum,
    off: PhaseOffset,
    handedness: Handedness,
    tol: f64,
) -> Result<TheoremReport, Error> {
    let gs = GammaSet::weyl();
    let psi = match handedness {
        Handedness::Right => DiracSpinor::from_chiral(&right_handed(p), &TwoSpinor::ZERO),
        Handedness::Left => DiracSpinor::from_chiral(&TwoSpinor::ZERO, &left_handed(p, off)),
    };
    let extracted = extract_helicity(&slash_pair(&psi, &gs), tol)?;

    let eigen_residuals = eigen_equations(p, off);
    let all_projectors = projector_identities(p, off);
    let projector_residuals = match handedness {
        Handedness::Right => [all_projectors[0], all_projectors[1]],
        Handedness::Left => [all_projectors[2], all_projectors[3]],
    };

    let sign_defect = (extracted.h - handedness.sign()).abs();
    let passed = extracted.residual <= tol
        && sign_defect <= tol
        && eigen_residuals.iter().all(|&r| r <= tol)
        && projector_residuals.iter().all(|&r| r <= tol);

    Ok(TheoremReport {
        direction: *p,
        delta_phi: off,
        handedness,
        extracted,
        eigen_residuals,
        projector_residuals,
        passed,
    })
}
