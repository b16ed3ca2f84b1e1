//! The monolayer-graphene vertex Hamiltonian, its relation to the planar
//! helicity operator, and its reconstruction from the restricted axial
//! slash matrix through a block partial trace.

use std::f64::consts::{FRAC_PI_2, TAU};

use crate::bilinears::block_form_axial;
use crate::clifford::GammaSet;
use crate::error::Error;
use crate::numerics::{block_partial_trace, CMat2, CMat4, C64};
use crate::spinors::{
    left_handed, right_handed, DiracSpinor, PhaseOffset, TwoSpinor, UnitMomentum,
};

/// Physical scale of the vertex Hamiltonian. Only the product
/// `hbar * v_f` enters any formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrapheneParams {
    hbar: f64,
    v_f: f64,
}

impl GrapheneParams {
    pub fn new(hbar: f64, v_f: f64) -> Result<Self, Error> {
        if hbar <= 0.0 || v_f <= 0.0 || !hbar.is_finite() || !v_f.is_finite() {
            return Err(Error::InvalidScale { hbar, v_f });
        }
        Ok(GrapheneParams { hbar, v_f })
    }

    /// Unit scale `hbar = v_f = 1`.
    pub fn unit() -> Self {
        GrapheneParams {
            hbar: 1.0,
            v_f: 1.0,
        }
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn v_f(&self) -> f64 {
        self.v_f
    }

    pub fn energy_scale(&self) -> f64 {
        self.hbar * self.v_f
    }
}

impl Default for GrapheneParams {
    fn default() -> Self {
        GrapheneParams::unit()
    }
}

/// In-plane wavevector of a charge carrier near a lattice vertex.
/// Components are expected to be finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarWavevector {
    pub kx: f64,
    pub ky: f64,
}

impl PlanarWavevector {
    pub fn new(kx: f64, ky: f64) -> Self {
        PlanarWavevector { kx, ky }
    }

    pub fn magnitude(&self) -> f64 {
        self.kx.hypot(self.ky)
    }

    fn ensure_nonzero(&self) -> Result<f64, Error> {
        let mag = self.magnitude();
        if mag < 1e-12 * 1.0f64.max(self.kx.abs()).max(self.ky.abs()) {
            return Err(Error::ZeroWavevector);
        }
        Ok(mag)
    }
}

/// The vertex Hamiltonian
/// `H(k) = hbar v_f [[0, kx - i ky], [kx + i ky, 0]]`,
/// equal to `hbar v_f |k| (sigma . k-hat)`: eigenvalues `+-hbar v_f |k|`,
/// the Dirac cone.
pub fn hamiltonian(k: &PlanarWavevector, params: &GrapheneParams) -> CMat2 {
    let s = params.energy_scale();
    CMat2::new(
        C64::new(0.0, 0.0),
        C64::new(s * k.kx, -s * k.ky),
        C64::new(s * k.kx, s * k.ky),
        C64::new(0.0, 0.0),
    )
}

/// Lifts the planar direction into the spherical parameterization:
/// `theta = pi/2` and `phi = atan2(ky, kx)` wrapped into `[0, 2 pi)`.
pub fn to_unit_momentum(k: &PlanarWavevector) -> Result<UnitMomentum, Error> {
    k.ensure_nonzero()?;
    let phi = k.ky.atan2(k.kx).rem_euclid(TAU);
    UnitMomentum::new(FRAC_PI_2, phi)
}

/// The axial slash matrix of a spinor whose right-handed half vanishes:
/// `K = 2 [[0, -P(phi_L^C)], [-P(phi_L), 0]]`. The diagonal blocks are
/// zero by construction.
pub fn restricted_axial_slash(p: &UnitMomentum, off: PhaseOffset) -> CMat4 {
    let psi = DiracSpinor::from_chiral(&TwoSpinor::ZERO, &left_handed(p, off));
    block_form_axial(&psi)
}

fn reconstruct(k: &PlanarWavevector, off: PhaseOffset, prefactor: f64) -> Result<CMat2, Error> {
    let p = to_unit_momentum(k)?;
    let gs = GammaSet::weyl();
    let m = gs.gamma5() * restricted_axial_slash(&p, off) * gs.gamma(0);
    Ok(block_partial_trace(&m) * C64::new(prefactor, 0.0))
}

/// Reconstructs the vertex Hamiltonian from the restricted axial slash
/// matrix: `(hbar v_f |k| / 2) ptr(g5 K g0)`, which reproduces
/// [`hamiltonian`] for every wavevector and phase offset.
///
/// The prefactor carries `|k|` in the numerator; see
/// [`direction_only_reconstruction`] for the inverse-magnitude reading.
pub fn trace_reconstruction(
    k: &PlanarWavevector,
    off: PhaseOffset,
    params: &GrapheneParams,
) -> Result<CMat2, Error> {
    let mag = k.ensure_nonzero()?;
    reconstruct(k, off, params.energy_scale() * mag / 2.0)
}

/// The same trace expression with the prefactor `hbar v_f / (2 |k|)`. It
/// reproduces the direction-only operator `hbar v_f (sigma . k-hat)`
/// instead of the Hamiltonian, dropping the dispersion; the two readings
/// differ by exactly `|k|^2`.
pub fn direction_only_reconstruction(
    k: &PlanarWavevector,
    off: PhaseOffset,
    params: &GrapheneParams,
) -> Result<CMat2, Error> {
    let mag = k.ensure_nonzero()?;
    reconstruct(k, off, params.energy_scale() / (2.0 * mag))
}

/// Reconstruction through the right-handed restriction (left half zeroed)
/// instead. Reproduces the negated Hamiltonian, so the choice of projector
/// pair matters only up to an overall sign. The phase offset plays no role
/// here: it belongs to the left-handed solution.
pub fn right_restricted_reconstruction(
    k: &PlanarWavevector,
    params: &GrapheneParams,
) -> Result<CMat2, Error> {
    let mag = k.ensure_nonzero()?;
    let p = to_unit_momentum(k)?;
    let psi = DiracSpinor::from_chiral(&right_handed(&p), &TwoSpinor::ZERO);
    let gs = GammaSet::weyl();
    let m = gs.gamma5() * block_form_axial(&psi) * gs.gamma(0);
    Ok(block_partial_trace(&m) * C64::new(params.energy_scale() * mag / 2.0, 0.0))
}
