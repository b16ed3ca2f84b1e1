//! The five bilinear covariants of a Dirac spinor, the axial/current slash
//! matrices, their hand-expanded and block forms, and helicity extraction
//! from the proportionality of the two slash matrices.

use crate::clifford::GammaSet;
use crate::error::Error;
use crate::numerics::{from_blocks, max_norm, outer2, CMat2, CMat4, C64, IM, MAT2_ZERO, ZERO};
use crate::spinors::{DiracSpinor, TwoSpinor};

/// Default acceptance tolerance for the helicity residual; looser than the
/// arithmetic tolerance to absorb accumulation over 16-entry sums.
pub const DEFAULT_HELICITY_TOL: f64 = 1e-10;

/// The five bilinear covariants of one spinor: scalar, probability current,
/// moment-density tensor, axial (spin-projection) vector, pseudo-scalar.
///
/// For finite spinors the scalar, current, axial and tensor components are
/// real and the pseudo-scalar is purely imaginary; the tensor grid is
/// antisymmetric. Both facts are numerical invariants checked by
/// [`BilinearSet::reality_residual`] and
/// [`BilinearSet::antisymmetry_residual`].
#[derive(Debug, Clone, PartialEq)]
pub struct BilinearSet {
    /// Scalar covariant (psi-bar psi).
    pub scalar: C64,
    /// Vector covariant with contravariant index: `current[a] = psi-bar g^a psi`.
    pub current: [C64; 4],
    /// Tensor covariant `psi-bar i g^a g^b psi` for `a != b`, zero on the
    /// diagonal (the six independent components appear twice with opposite
    /// signs).
    pub tensor: [[C64; 4]; 4],
    /// Axial vector covariant with covariant index: `axial[a] = psi-bar g5 g_a psi`.
    pub axial: [C64; 4],
    /// Pseudo-scalar covariant (psi-bar g5 psi).
    pub pseudo_scalar: C64,
}

impl BilinearSet {
    /// Largest violation of the reality pattern: imaginary parts of the
    /// scalar, current, axial and tensor components plus the real part of
    /// the pseudo-scalar.
    pub fn reality_residual(&self) -> f64 {
        let mut worst = self.scalar.im.abs().max(self.pseudo_scalar.re.abs());
        for a in 0..4 {
            worst = worst.max(self.current[a].im.abs());
            worst = worst.max(self.axial[a].im.abs());
            for b in 0..4 {
                worst = worst.max(self.tensor[a][b].im.abs());
            }
        }
        worst
    }

    /// Largest violation of `tensor[a][b] = -tensor[b][a]`.
    pub fn antisymmetry_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for a in 0..4 {
            for b in 0..4 {
                worst = worst.max((self.tensor[a][b] + self.tensor[b][a]).norm());
            }
        }
        worst
    }
}

/// The slash matrices `K = K_a g^a` and `J = J^a g_a`. Both are
/// anti-block-diagonal for every spinor, as the expanded form makes
/// explicit.
#[derive(Debug, Clone, PartialEq)]
pub struct SlashPair {
    pub axial_slash: CMat4,
    pub current_slash: CMat4,
}

/// Helicity extracted from `K = h J` by least squares, with the max-norm
/// residual of `K - h J`. Accepted results have `|h| = 1` up to tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HelicityResult {
    pub h: f64,
    pub residual: f64,
}

fn sandwich(psi: &DiracSpinor, gs: &GammaSet, m: &CMat4) -> C64 {
    (psi.dirac_adjoint(gs) * m * psi.to_vector())[(0, 0)]
}

/// Computes all five covariants by the literal sandwich `psi-bar A psi`.
/// Normalization is not required; every field scales as `|lambda|^2` under
/// `psi -> lambda psi`.
pub fn compute(psi: &DiracSpinor, gs: &GammaSet) -> BilinearSet {
    let bar = psi.dirac_adjoint(gs);
    let v = psi.to_vector();
    let scalar = (bar * v)[(0, 0)];

    let mut current = [ZERO; 4];
    let mut axial = [ZERO; 4];
    for a in 0..4 {
        current[a] = sandwich(psi, gs, gs.gamma(a));
        axial[a] = sandwich(psi, gs, &(gs.gamma5() * gs.lower(a)));
    }

    let mut tensor = [[ZERO; 4]; 4];
    for (a, row) in tensor.iter_mut().enumerate() {
        for (b, entry) in row.iter_mut().enumerate() {
            if a != b {
                *entry = sandwich(psi, gs, &(gs.gamma(a) * gs.gamma(b) * IM));
            }
        }
    }

    let pseudo_scalar = sandwich(psi, gs, gs.gamma5());

    BilinearSet {
        scalar,
        current,
        tensor,
        axial,
        pseudo_scalar,
    }
}

/// Contracts the axial and current covariants with the gamma matrices:
/// `K = sum_a K_a g^a`, `J = sum_a J^a g_a` (index lowering through the
/// metric).
pub fn slash_pair(psi: &DiracSpinor, gs: &GammaSet) -> SlashPair {
    let mut axial_slash = CMat4::zeros();
    let mut current_slash = CMat4::zeros();
    for a in 0..4 {
        let k_a = sandwich(psi, gs, &(gs.gamma5() * gs.lower(a)));
        let j_a = sandwich(psi, gs, gs.gamma(a));
        axial_slash += gs.gamma(a) * k_a;
        current_slash += gs.lower(a) * j_a;
    }
    SlashPair {
        axial_slash,
        current_slash,
    }
}

/// Builds the same two matrices directly from the sixteen closed-form
/// entries of the hand-expanded proportionality equation, with zero
/// diagonal blocks. Serves as an oracle for [`slash_pair`]: the two routes
/// agree entrywise for every spinor.
pub fn expanded_slash_pair(psi: &DiracSpinor) -> SlashPair {
    let (a, b, c, d) = (psi.a, psi.b, psi.c, psi.d);
    let (ca, cb, cc, cd) = (a.conj(), b.conj(), c.conj(), d.conj());
    let two = C64::new(2.0, 0.0);

    let k_tr = CMat2::new(
        two * (ca * a - cd * d),
        two * (cb * a + cd * c),
        two * (ca * b + cc * d),
        two * (cb * b - cc * c),
    );
    let k_bl = CMat2::new(
        two * (cb * b - cc * c),
        -two * (cb * a + cd * c),
        -two * (ca * b + cc * d),
        two * (ca * a - cd * d),
    );
    let j_tr = CMat2::new(
        two * (ca * a + cd * d),
        two * (cb * a - cd * c),
        two * (ca * b - cc * d),
        two * (cb * b + cc * c),
    );
    let j_bl = CMat2::new(
        two * (cb * b + cc * c),
        -two * (cb * a - cd * c),
        -two * (ca * b - cc * d),
        two * (ca * a + cd * d),
    );

    SlashPair {
        axial_slash: from_blocks(&MAT2_ZERO, &k_tr, &k_bl, &MAT2_ZERO),
        current_slash: from_blocks(&MAT2_ZERO, &j_tr, &j_bl, &MAT2_ZERO),
    }
}

fn unnormalized_projector(phi: &TwoSpinor) -> CMat2 {
    let v = phi.to_vector();
    outer2(&v, &v)
}

/// The axial slash matrix written as outer products of the chiral halves
/// and their charge conjugates:
/// `K = 2 [[0, P_R - P_LC], [P_RC - P_L, 0]]`.
pub fn block_form_axial(psi: &DiracSpinor) -> CMat4 {
    let (r, l) = psi.split_chiral();
    let two = C64::new(2.0, 0.0);
    let tr = (unnormalized_projector(&r) - unnormalized_projector(&l.charge_conj())) * two;
    let bl = (unnormalized_projector(&r.charge_conj()) - unnormalized_projector(&l)) * two;
    from_blocks(&MAT2_ZERO, &tr, &bl, &MAT2_ZERO)
}

/// The current slash matrix in the same block language:
/// `J = 2 [[0, P_R + P_LC], [P_L + P_RC, 0]]`.
pub fn block_form_current(psi: &DiracSpinor) -> CMat4 {
    let (r, l) = psi.split_chiral();
    let two = C64::new(2.0, 0.0);
    let tr = (unnormalized_projector(&r) + unnormalized_projector(&l.charge_conj())) * two;
    let bl = (unnormalized_projector(&l) + unnormalized_projector(&r.charge_conj())) * two;
    from_blocks(&MAT2_ZERO, &tr, &bl, &MAT2_ZERO)
}

/// Least-squares fit of the real scalar `h` in `K = h J` over all sixteen
/// entries, `h = Re<J, K> / <J, J>` in the Frobenius inner product. Robust
/// at parameter points where individual entries vanish.
///
/// Accepted results have residual at most `tol` *and* `h` within `tol` of
/// `+1` or `-1`. The unit-helicity gate matters: states of the form
/// `(phi, alpha C phi)` satisfy `K = h J` exactly with
/// `h = (1 - |alpha|^2) / (1 + |alpha|^2)` strictly inside `(-1, 1)`, yet
/// carry no helicity in the eigenvalue sense. Such states are rejected as
/// [`Error::NotProportional`] with the fit diagnostics attached, the same
/// answer given to genuinely non-proportional pairs.
///
/// Returns [`Error::ZeroCurrent`] when `J` vanishes.
pub fn extract_helicity(sp: &SlashPair, tol: f64) -> Result<HelicityResult, Error> {
    if max_norm(&sp.current_slash) < tol {
        return Err(Error::ZeroCurrent);
    }
    let mut num = 0.0f64;
    let mut den = 0.0f64;
    for (j, k) in sp.current_slash.iter().zip(sp.axial_slash.iter()) {
        num += (j.conj() * k).re;
        den += j.norm_sqr();
    }
    let h = num / den;
    let residual = max_norm(&(sp.axial_slash - sp.current_slash * C64::new(h, 0.0)));
    if residual <= tol && (h.abs() - 1.0).abs() <= tol {
        Ok(HelicityResult { h, residual })
    } else {
        Err(Error::NotProportional { h, residual })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{max_diff, Blocks, MAT2_ID, TOL};
    use crate::spinors::{left_handed, right_handed, PhaseOffset, UnitMomentum};
    use proptest::prelude::*;

    /// Straight-line re-derivation with hand-written complex arithmetic and
    /// entrywise Weyl matrices. Independent of nalgebra, of `GammaSet`, and
    /// of every code path under test.
    mod oracle {
        pub type Z = (f64, f64);
        pub const O: Z = (0.0, 0.0);
        const L: Z = (1.0, 0.0);
        const N: Z = (-1.0, 0.0);
        const I: Z = (0.0, 1.0);
        const M: Z = (0.0, -1.0);

        pub fn add(x: Z, y: Z) -> Z {
            (x.0 + y.0, x.1 + y.1)
        }
        pub fn mul(x: Z, y: Z) -> Z {
            (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0)
        }
        pub fn conj(x: Z) -> Z {
            (x.0, -x.1)
        }
        pub fn scale(s: f64, x: Z) -> Z {
            (s * x.0, s * x.1)
        }

        pub type M4 = [[Z; 4]; 4];

        pub fn gamma(a: usize) -> M4 {
            match a {
                0 => [[O, O, L, O], [O, O, O, L], [L, O, O, O], [O, L, O, O]],
                1 => [[O, O, O, L], [O, O, L, O], [O, N, O, O], [N, O, O, O]],
                2 => [[O, O, O, M], [O, O, I, O], [O, I, O, O], [M, O, O, O]],
                3 => [[O, O, L, O], [O, O, O, N], [N, O, O, O], [O, L, O, O]],
                _ => unreachable!(),
            }
        }

        pub fn gamma5() -> M4 {
            [[N, O, O, O], [O, N, O, O], [O, O, L, O], [O, O, O, L]]
        }

        pub fn matmul(x: &M4, y: &M4) -> M4 {
            let mut out = [[O; 4]; 4];
            for (i, row) in out.iter_mut().enumerate() {
                for (j, cell) in row.iter_mut().enumerate() {
                    for k in 0..4 {
                        *cell = add(*cell, mul(x[i][k], y[k][j]));
                    }
                }
            }
            out
        }

        /// psi-bar A psi with psi-bar = conj(psi)^T gamma0.
        pub fn sandwich(psi: &[Z; 4], a: &M4) -> Z {
            let g0 = gamma(0);
            let mut bar = [O; 4];
            for (j, b) in bar.iter_mut().enumerate() {
                for i in 0..4 {
                    *b = add(*b, mul(conj(psi[i]), g0[i][j]));
                }
            }
            let mut out = O;
            for i in 0..4 {
                for j in 0..4 {
                    out = add(out, mul(bar[i], mul(a[i][j], psi[j])));
                }
            }
            out
        }

        pub struct Covariants {
            pub scalar: Z,
            pub current: [Z; 4],
            pub axial: [Z; 4],
            pub pseudo_scalar: Z,
            pub axial_slash: M4,
            pub current_slash: M4,
        }

        pub fn covariants(psi: &[Z; 4]) -> Covariants {
            let eta = [1.0, -1.0, -1.0, -1.0];
            let identity = {
                let mut m = [[O; 4]; 4];
                for (i, row) in m.iter_mut().enumerate() {
                    row[i] = L;
                }
                m
            };
            let scalar = sandwich(psi, &identity);
            let pseudo_scalar = sandwich(psi, &gamma5());

            let mut current = [O; 4];
            let mut axial = [O; 4];
            let mut axial_slash = [[O; 4]; 4];
            let mut current_slash = [[O; 4]; 4];
            for a in 0..4 {
                current[a] = sandwich(psi, &gamma(a));
                let mut lower = gamma(a);
                for row in lower.iter_mut() {
                    for cell in row.iter_mut() {
                        *cell = scale(eta[a], *cell);
                    }
                }
                axial[a] = sandwich(psi, &matmul(&gamma5(), &lower));
                for i in 0..4 {
                    for j in 0..4 {
                        axial_slash[i][j] = add(axial_slash[i][j], mul(axial[a], gamma(a)[i][j]));
                        current_slash[i][j] =
                            add(current_slash[i][j], mul(current[a], lower[i][j]));
                    }
                }
            }

            Covariants {
                scalar,
                current,
                axial,
                pseudo_scalar,
                axial_slash,
                current_slash,
            }
        }
    }

    const ZEROC: C64 = C64::new(0.0, 0.0);
    const ONEC: C64 = C64::new(1.0, 0.0);

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn to_oracle(psi: &DiracSpinor) -> [oracle::Z; 4] {
        [
            (psi.a.re, psi.a.im),
            (psi.b.re, psi.b.im),
            (psi.c.re, psi.c.im),
            (psi.d.re, psi.d.im),
        ]
    }

    fn oracle_mat_diff(m: &CMat4, o: &oracle::M4) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                let z = m[(i, j)];
                worst = worst.max((z.re - o[i][j].0).abs().max((z.im - o[i][j].1).abs()));
            }
        }
        worst
    }

    #[test]
    fn basis_spinor_covariants_match_frozen_values() {
        // Values frozen from the straight-line oracle.
        let psi = DiracSpinor::new(ONEC, ZEROC, ZEROC, ZEROC);
        let reference = oracle::covariants(&to_oracle(&psi));
        assert_eq!(reference.scalar, oracle::O);
        assert_eq!(
            reference.current,
            [(1.0, 0.0), oracle::O, oracle::O, (-1.0, 0.0)]
        );

        let gs = GammaSet::weyl();
        let set = compute(&psi, &gs);
        assert!((set.scalar).norm() <= TOL);
        assert!((set.current[0] - ONEC).norm() <= TOL);
        assert!(set.current[1].norm() <= TOL);
        assert!(set.current[2].norm() <= TOL);
        assert!((set.current[3] + ONEC).norm() <= TOL);
    }

    #[test]
    fn mixed_state_scalar_is_one() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let psi = DiracSpinor::new(c(s, 0.0), ZEROC, c(s, 0.0), ZEROC);
        let set = compute(&psi, &GammaSet::weyl());
        assert!((set.scalar - ONEC).norm() <= TOL);
        let reference = oracle::covariants(&to_oracle(&psi));
        assert!((reference.scalar.0 - 1.0).abs() <= TOL);
    }

    #[test]
    fn zero_spinor_has_zero_covariants() {
        let set = compute(&DiracSpinor::ZERO, &GammaSet::weyl());
        assert_eq!(set.scalar, ZEROC);
        assert_eq!(set.current, [ZEROC; 4]);
        assert_eq!(set.axial, [ZEROC; 4]);
        assert_eq!(set.pseudo_scalar, ZEROC);
        let sp = slash_pair(&DiracSpinor::ZERO, &GammaSet::weyl());
        assert_eq!(max_norm(&sp.axial_slash), 0.0);
        assert_eq!(max_norm(&sp.current_slash), 0.0);
    }

    #[test]
    fn slash_blocks_of_right_handed_basis_spinor() {
        let psi = DiracSpinor::new(ONEC, ZEROC, ZEROC, ZEROC);
        let sp = slash_pair(&psi, &GammaSet::weyl());
        let expected = CMat2::new(c(2.0, 0.0), ZEROC, ZEROC, ZEROC);
        assert!(max_diff(&Blocks::split(&sp.axial_slash).tr, &expected) <= TOL);
        assert!(max_diff(&Blocks::split(&sp.current_slash).tr, &expected) <= TOL);
    }

    #[test]
    fn expanded_entries_for_basis_spinors() {
        let e3 = DiracSpinor::new(ZEROC, ZEROC, ZEROC, ONEC);
        let sp = expanded_slash_pair(&e3);
        let expected = CMat2::new(c(-2.0, 0.0), ZEROC, ZEROC, ZEROC);
        assert_eq!(Blocks::split(&sp.axial_slash).tr, expected);

        let e1 = DiracSpinor::new(ZEROC, ONEC, ZEROC, ZEROC);
        let sp1 = expanded_slash_pair(&e1);
        let expected1 = CMat2::new(ZEROC, ZEROC, ZEROC, c(2.0, 0.0));
        assert_eq!(Blocks::split(&sp1.axial_slash).tr, expected1);
    }

    #[test]
    fn expanded_entries_for_mixed_state() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let psi = DiracSpinor::new(c(s, 0.0), ZEROC, c(s, 0.0), ZEROC);
        let sp = expanded_slash_pair(&psi);
        let k_bl = CMat2::new(c(-1.0, 0.0), ZEROC, ZEROC, c(1.0, 0.0));
        assert!(max_diff(&Blocks::split(&sp.axial_slash).bl, &k_bl) <= TOL);
        assert!(max_diff(&Blocks::split(&sp.current_slash).bl, &MAT2_ID) <= TOL);
    }

    #[test]
    fn definition_route_matches_oracle_and_expansion() {
        let gs = GammaSet::weyl();
        for seed in 0..200 {
            let psi = DiracSpinor::random(seed);
            let sp = slash_pair(&psi, &gs);
            let exp = expanded_slash_pair(&psi);
            assert!(max_diff(&sp.axial_slash, &exp.axial_slash) <= TOL);
            assert!(max_diff(&sp.current_slash, &exp.current_slash) <= TOL);

            let reference = oracle::covariants(&to_oracle(&psi));
            assert!(oracle_mat_diff(&sp.axial_slash, &reference.axial_slash) <= TOL);
            assert!(oracle_mat_diff(&sp.current_slash, &reference.current_slash) <= TOL);
        }
    }

    #[test]
    fn block_forms_match_slash_matrices() {
        let gs = GammaSet::weyl();
        let e0 = DiracSpinor::new(ONEC, ZEROC, ZEROC, ZEROC);
        assert!(
            max_diff(
                &block_form_axial(&e0),
                &expanded_slash_pair(&e0).axial_slash
            ) <= TOL
        );
        assert_eq!(max_norm(&block_form_axial(&DiracSpinor::ZERO)), 0.0);

        for seed in 0..200 {
            let psi = DiracSpinor::random(seed);
            let sp = slash_pair(&psi, &gs);
            assert!(max_diff(&block_form_axial(&psi), &sp.axial_slash) <= TOL);
            assert!(max_diff(&block_form_current(&psi), &sp.current_slash) <= TOL);
        }
    }

    #[test]
    fn covariants_match_oracle_componentwise() {
        let gs = GammaSet::weyl();
        for seed in 0..200 {
            let psi = DiracSpinor::random(seed);
            let set = compute(&psi, &gs);
            let reference = oracle::covariants(&to_oracle(&psi));
            assert!((set.scalar.re - reference.scalar.0).abs() <= TOL);
            assert!((set.pseudo_scalar.im - reference.pseudo_scalar.1).abs() <= TOL);
            for a in 0..4 {
                assert!((set.current[a].re - reference.current[a].0).abs() <= TOL);
                assert!((set.axial[a].re - reference.axial[a].0).abs() <= TOL);
            }
        }
    }

    #[test]
    fn reality_and_antisymmetry_hold_for_random_spinors() {
        let gs = GammaSet::weyl();
        for seed in 0..200 {
            let psi = DiracSpinor::random(seed);
            let set = compute(&psi, &gs);
            assert!(set.reality_residual() <= TOL);
            assert!(set.antisymmetry_residual() <= TOL);
            // the time component of the current is the squared norm
            assert!((set.current[0].re - psi.norm_sq()).abs() <= TOL);
            assert!(set.current[0].re >= 0.0);
        }
    }

    #[test]
    fn helicity_of_pure_states() {
        let gs = GammaSet::weyl();
        let right = DiracSpinor::new(ONEC, ZEROC, ZEROC, ZEROC);
        let res = extract_helicity(&slash_pair(&right, &gs), DEFAULT_HELICITY_TOL).unwrap();
        assert!((res.h - 1.0).abs() <= 1e-10);
        assert!(res.residual <= 1e-12);

        let left = DiracSpinor::new(ZEROC, ZEROC, c(0.6, 0.0), c(0.0, 0.8));
        let res = extract_helicity(&slash_pair(&left, &gs), DEFAULT_HELICITY_TOL).unwrap();
        assert!((res.h + 1.0).abs() <= 1e-10);
        assert!(res.residual <= 1e-12);
    }

    #[test]
    fn mixed_state_is_not_proportional() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let psi = DiracSpinor::new(c(s, 0.0), ZEROC, c(s, 0.0), ZEROC);
        let err = extract_helicity(&slash_pair(&psi, &GammaSet::weyl()), DEFAULT_HELICITY_TOL);
        match err {
            Err(Error::NotProportional { residual, .. }) => assert!(residual > 0.1),
            other => panic!("expected NotProportional, got {other:?}"),
        }
    }

    #[test]
    fn partially_polarized_states_are_rejected_despite_proportionality() {
        // psi = (phi, alpha C phi) gives K = h J exactly with
        // h = (1 - |alpha|^2) / (1 + |alpha|^2); no unit helicity exists.
        let gs = GammaSet::weyl();
        let phi = TwoSpinor::new(c(0.6, 0.2), c(-0.3, 0.7));
        for alpha in [c(1.0, 0.0), c(0.5, -0.5), c(2.0, 1.0)] {
            let psi = DiracSpinor::from_chiral(&phi, &phi.charge_conj().scaled(alpha));
            let expected_h = (1.0 - alpha.norm_sqr()) / (1.0 + alpha.norm_sqr());
            match extract_helicity(&slash_pair(&psi, &gs), DEFAULT_HELICITY_TOL) {
                Err(Error::NotProportional { h, residual }) => {
                    assert!((h - expected_h).abs() <= 1e-10, "alpha={alpha}, h={h}");
                    assert!(residual <= 1e-12, "proportionality itself is exact");
                }
                other => panic!("expected rejection for alpha={alpha}, got {other:?}"),
            }
        }
    }

    #[test]
    fn zero_state_has_no_current() {
        let err = extract_helicity(
            &slash_pair(&DiracSpinor::ZERO, &GammaSet::weyl()),
            DEFAULT_HELICITY_TOL,
        );
        assert_eq!(err, Err(Error::ZeroCurrent));
    }

    #[test]
    fn momentum_space_states_have_phase_independent_helicity() {
        let gs = GammaSet::weyl();
        let p = UnitMomentum::new(1.2, 0.4).unwrap();
        for dphi in [0.0, 1.0, std::f64::consts::PI] {
            let off = PhaseOffset::new(dphi);
            let right = DiracSpinor::from_chiral(&right_handed(&p), &TwoSpinor::ZERO);
            let left = DiracSpinor::from_chiral(&TwoSpinor::ZERO, &left_handed(&p, off));
            let hr = extract_helicity(&slash_pair(&right, &gs), DEFAULT_HELICITY_TOL).unwrap();
            let hl = extract_helicity(&slash_pair(&left, &gs), DEFAULT_HELICITY_TOL).unwrap();
            assert!((hr.h - 1.0).abs() <= 1e-10);
            assert!((hl.h + 1.0).abs() <= 1e-10);
        }
    }

    proptest! {
        #[test]
        fn covariants_scale_quadratically(seed in 0u64..500, re in -2.0f64..2.0, im in -2.0f64..2.0) {
            let lambda = c(re, im);
            prop_assume!(lambda.norm() > 1e-3);
            let gs = GammaSet::weyl();
            let psi = DiracSpinor::random(seed);
            let scaled = compute(&psi.scaled(lambda), &gs);
            let base = compute(&psi, &gs);
            let factor = lambda.norm_sqr();
            prop_assert!((scaled.scalar - base.scalar * factor).norm() <= 1e-10);
            for a in 0..4 {
                prop_assert!((scaled.current[a] - base.current[a] * factor).norm() <= 1e-10);
                prop_assert!((scaled.axial[a] - base.axial[a] * factor).norm() <= 1e-10);
            }
            prop_assert!((scaled.pseudo_scalar - base.pseudo_scalar * factor).norm() <= 1e-10);
        }

        #[test]
        fn helicity_is_scale_invariant(seed in 0u64..500, re in -2.0f64..2.0, im in -2.0f64..2.0) {
            let lambda = c(re, im);
            prop_assume!(lambda.norm() > 0.1);
            let gs = GammaSet::weyl();
            let (r, _) = DiracSpinor::random(seed).split_chiral();
            let psi = DiracSpinor::from_chiral(&r, &TwoSpinor::ZERO);
            prop_assume!(psi.norm() > 0.1);
            let base = extract_helicity(&slash_pair(&psi, &gs), DEFAULT_HELICITY_TOL).unwrap();
            let scaled =
                extract_helicity(&slash_pair(&psi.scaled(lambda), &gs), DEFAULT_HELICITY_TOL)
                    .unwrap();
            prop_assert!((scaled.h - base.h).abs() <= 1e-9);
        }

        #[test]
        fn slash_matrices_are_anti_block_diagonal(seed in 0u64..500) {
            let sp = slash_pair(&DiracSpinor::random(seed), &GammaSet::weyl());
            for m in [&sp.axial_slash, &sp.current_slash] {
                let blocks = Blocks::split(m);
                prop_assert!(max_norm(&blocks.tl) <= TOL);
                prop_assert!(max_norm(&blocks.br) <= TOL);
            }
        }
    }
}
