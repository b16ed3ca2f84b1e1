//! Error type shared by all modules.

use thiserror::Error;

/// Errors reported by the spinor and helicity operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Direction angles must be finite with `theta` in `[0, pi]`.
    #[error(
        "invalid direction: theta = {theta}, phi = {phi} (need finite angles, theta in [0, pi])"
    )]
    InvalidDirection { theta: f64, phi: f64 },

    /// A projector was requested for a spinor that is not normalized.
    #[error("spinor is not normalized: squared norm {norm_sq} deviates from 1 by more than {tol}")]
    NotNormalized { norm_sq: f64, tol: f64 },

    /// The current slash matrix vanishes, so no helicity can be extracted.
    #[error("probability current vanishes; helicity is undefined for the zero state")]
    ZeroCurrent,

    /// The state has no well-defined bilinear helicity: either the axial
    /// slash matrix is not a real multiple of the current slash matrix, or
    /// the proportionality constant is not a unit eigenvalue. Carries the
    /// least-squares diagnostics for reporting.
    #[error("no unit bilinear helicity: best fit h = {h}, residual = {residual}")]
    NotProportional { h: f64, residual: f64 },

    /// The planar wavevector is too close to zero to define a direction.
    #[error("wavevector magnitude is below the zero threshold")]
    ZeroWavevector,

    /// Graphene scale parameters must be strictly positive.
    #[error("scale parameters must be positive: hbar = {hbar}, v_f = {v_f}")]
    InvalidScale { hbar: f64, v_f: f64 },
}
