//! Momentum-space 2-spinors, chiral assembly of 4-spinors, the Dirac
//! adjoint, charge conjugation, and projection operators.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::GammaSet;
use crate::error::Error;
use crate::numerics::{cis, outer2, CMat2, CRow4, CVec2, CVec4, C64, IM, TOL};

/// A direction on the unit sphere in spherical polar coordinates,
/// `theta` in `[0, pi]` and `phi` in `[0, 2*pi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitMomentum {
    theta: f64,
    phi: f64,
}

impl UnitMomentum {
    /// Validates the polar angle and wraps the azimuth into `[0, 2*pi)`.
    /// At the poles the azimuth is retained as given (wrapped, not zeroed).
    pub fn new(theta: f64, phi: f64) -> Result<Self, Error> {
        if !theta.is_finite() || !phi.is_finite() || !(0.0..=PI).contains(&theta) {
            return Err(Error::InvalidDirection { theta, phi });
        }
        let mut phi = phi.rem_euclid(TAU);
        if phi >= TAU {
            phi = 0.0;
        }
        Ok(UnitMomentum { theta, phi })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// The Cartesian unit vector `(sin t cos p, sin t sin p, cos t)`.
    pub fn unit_vector(&self) -> [f64; 3] {
        let (st, ct) = (self.theta.sin(), self.theta.cos());
        let (sp, cp) = (self.phi.sin(), self.phi.cos());
        [st * cp, st * sp, ct]
    }
}

/// Arbitrary phase offset carried by the left-handed solution relative to
/// the right-handed one. Enters as a global factor `exp(-i delta_phi / 2)`,
/// so no verification outcome depends on it.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PhaseOffset {
    pub delta_phi: f64,
}

impl PhaseOffset {
    pub const NONE: PhaseOffset = PhaseOffset { delta_phi: 0.0 };

    pub fn new(delta_phi: f64) -> Self {
        PhaseOffset { delta_phi }
    }
}

/// Two-component complex spinor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoSpinor {
    pub c0: C64,
    pub c1: C64,
}

impl TwoSpinor {
    pub const ZERO: TwoSpinor = TwoSpinor {
        c0: C64::new(0.0, 0.0),
        c1: C64::new(0.0, 0.0),
    };

    pub fn new(c0: C64, c1: C64) -> Self {
        TwoSpinor { c0, c1 }
    }

    pub fn from_vector(v: &CVec2) -> Self {
        TwoSpinor { c0: v[0], c1: v[1] }
    }

    pub fn to_vector(&self) -> CVec2 {
        CVec2::new(self.c0, self.c1)
    }

    pub fn norm_sq(&self) -> f64 {
        self.c0.norm_sqr() + self.c1.norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Hermitian inner product `<self|other>`.
    pub fn inner(&self, other: &TwoSpinor) -> C64 {
        self.c0.conj() * other.c0 + self.c1.conj() * other.c1
    }

    pub fn scaled(&self, z: C64) -> Self {
        TwoSpinor {
            c0: self.c0 * z,
            c1: self.c1 * z,
        }
    }

    /// Charge conjugation `|phi> -> -i s_y |phi>*`, i.e.
    /// `(c0, c1) -> (-conj(c1), conj(c0))`. Norm-preserving; applying it
    /// twice negates the spinor.
    pub fn charge_conj(&self) -> TwoSpinor {
        TwoSpinor {
            c0: -self.c1.conj(),
            c1: self.c0.conj(),
        }
    }

    /// Projection operator `|phi><phi|` for a normalized spinor: Hermitian,
    /// idempotent, trace 1. Fails with [`Error::NotNormalized`] when the
    /// squared norm deviates from 1 by more than the crate tolerance.
    pub fn projector(&self) -> Result<CMat2, Error> {
        let norm_sq = self.norm_sq();
        if (norm_sq - 1.0).abs() > TOL {
            return Err(Error::NotNormalized { norm_sq, tol: TOL });
        }
        let v = self.to_vector();
        Ok(outer2(&v, &v))
    }
}

/// Four-component Dirac spinor with components `(a, b, c, d)`; the upper
/// pair is the right-handed (chiral) block, the lower pair the left-handed
/// block in the Weyl basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracSpinor {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub d: C64,
}

impl DiracSpinor {
    pub const ZERO: DiracSpinor = DiracSpinor {
        a: C64::new(0.0, 0.0),
        b: C64::new(0.0, 0.0),
        c: C64::new(0.0, 0.0),
        d: C64::new(0.0, 0.0),
    };

    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Self {
        DiracSpinor { a, b, c, d }
    }

    /// Stacks a right-handed and a left-handed 2-spinor into `(a, b, c, d)`.
    pub fn from_chiral(right: &TwoSpinor, left: &TwoSpinor) -> Self {
        DiracSpinor {
            a: right.c0,
            b: right.c1,
            c: left.c0,
            d: left.c1,
        }
    }

    /// Inverse of [`DiracSpinor::from_chiral`]; exact round trip.
    pub fn split_chiral(&self) -> (TwoSpinor, TwoSpinor) {
        (
            TwoSpinor::new(self.a, self.b),
            TwoSpinor::new(self.c, self.d),
        )
    }

    pub fn from_vector(v: &CVec4) -> Self {
        DiracSpinor {
            a: v[0],
            b: v[1],
            c: v[2],
            d: v[3],
        }
    }

    pub fn to_vector(&self) -> CVec4 {
        CVec4::new(self.a, self.b, self.c, self.d)
    }

    pub fn norm_sq(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr() + self.c.norm_sqr() + self.d.norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scaled(&self, z: C64) -> Self {
        DiracSpinor {
            a: self.a * z,
            b: self.b * z,
            c: self.c * z,
            d: self.d * z,
        }
    }

    /// Dirac adjoint `psi-bar = psi^dagger g0` as a row vector. For the
    /// Weyl `g0` this is `(conj c, conj d, conj a, conj b)`.
    pub fn dirac_adjoint(&self, gs: &GammaSet) -> CRow4 {
        self.to_vector().adjoint() * gs.gamma(0)
    }

    /// Charge conjugation `|psi> -> -i g2 |psi>*`. Equals the block form
    /// `(C |phi_L>, -C |phi_R>)` built from the 2-spinor operator.
    pub fn charge_conj(&self, gs: &GammaSet) -> DiracSpinor {
        let conj = CVec4::new(self.a.conj(), self.b.conj(), self.c.conj(), self.d.conj());
        DiracSpinor::from_vector(&(gs.gamma(2) * conj * (-IM)))
    }

    /// Deterministic pseudo-random normalized spinor; the same seed yields
    /// a bit-identical result.
    pub fn random(seed: u64) -> DiracSpinor {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let mut parts = [0.0f64; 8];
            for p in parts.iter_mut() {
                *p = rng.random_range(-1.0..1.0);
            }
            let norm_sq: f64 = parts.iter().map(|x| x * x).sum();
            if norm_sq > 1e-3 {
                let n = norm_sq.sqrt();
                return DiracSpinor {
                    a: C64::new(parts[0] / n, parts[1] / n),
                    b: C64::new(parts[2] / n, parts[3] / n),
                    c: C64::new(parts[4] / n, parts[5] / n),
                    d: C64::new(parts[6] / n, parts[7] / n),
                };
            }
        }
    }
}

/// The right-handed (positive-helicity) momentum-space eigenspinor
/// `(cos(t/2) e^{-i p/2}, sin(t/2) e^{i p/2})`.
pub fn right_handed(p: &UnitMomentum) -> TwoSpinor {
    let half = 0.5 * p.theta();
    TwoSpinor {
        c0: cis(-0.5 * p.phi()) * half.cos(),
        c1: cis(0.5 * p.phi()) * half.sin(),
    }
}

/// The left-handed (negative-helicity) momentum-space eigenspinor
/// `(sin(t/2) e^{-i p/2}, -cos(t/2) e^{i p/2})`, carrying the offset as a
/// global factor `exp(-i delta_phi / 2)`.
pub fn left_handed(p: &UnitMomentum, off: PhaseOffset) -> TwoSpinor {
    let half = 0.5 * p.theta();
    let base = TwoSpinor {
        c0: cis(-0.5 * p.phi()) * half.sin(),
        c1: -cis(0.5 * p.phi()) * half.cos(),
    };
    base.scaled(cis(-0.5 * off.delta_phi))
}
