//! Fixed-size complex matrix and vector arithmetic used by every other
//! module. No physics knowledge lives here; the heavy lifting is delegated
//! to `nalgebra` with `num_complex::Complex64` entries.

use nalgebra::{Dim, Matrix, Matrix1x4, Matrix2, Matrix4, RawStorage, Vector2, Vector4};
use num_complex::Complex64;

/// Complex scalar used throughout the crate.
pub type C64 = Complex64;
/// Dense complex 2x2 matrix.
pub type CMat2 = Matrix2<C64>;
/// Dense complex 4x4 matrix.
pub type CMat4 = Matrix4<C64>;
/// Complex column 2-vector.
pub type CVec2 = Vector2<C64>;
/// Complex column 4-vector.
pub type CVec4 = Vector4<C64>;
/// Complex row 4-vector (the shape of a Dirac adjoint).
pub type CRow4 = Matrix1x4<C64>;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const IM: C64 = C64::new(0.0, 1.0);

/// Default tolerance for matrix equality assertions (max-norm of the
/// entrywise difference). Single configurable constant for the whole crate.
pub const TOL: f64 = 1e-12;

pub const MAT2_ZERO: CMat2 = CMat2::new(ZERO, ZERO, ZERO, ZERO);
pub const MAT2_ID: CMat2 = CMat2::new(ONE, ZERO, ZERO, ONE);

/// Conjugate transpose of a 2x2 matrix.
pub fn dagger2(m: &CMat2) -> CMat2 {
    m.adjoint()
}

/// Conjugate transpose of a 4x4 matrix.
pub fn dagger4(m: &CMat4) -> CMat4 {
    m.adjoint()
}

/// Outer product `|u><v|` of two 2-vectors: `result[i][j] = u[i] * conj(v[j])`.
pub fn outer2(u: &CVec2, v: &CVec2) -> CMat2 {
    u * v.adjoint()
}

/// Outer product `|u><v|` of two 4-vectors.
pub fn outer4(u: &CVec4, v: &CVec4) -> CMat4 {
    u * v.adjoint()
}

/// The four 2x2 blocks of a 4x4 matrix. Recomposition via [`Blocks::compose`]
/// reproduces the original matrix exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Blocks {
    pub tl: CMat2,
    pub tr: CMat2,
    pub bl: CMat2,
    pub br: CMat2,
}

impl Blocks {
    pub fn split(m: &CMat4) -> Self {
        Blocks {
            tl: m.fixed_view::<2, 2>(0, 0).into_owned(),
            tr: m.fixed_view::<2, 2>(0, 2).into_owned(),
            bl: m.fixed_view::<2, 2>(2, 0).into_owned(),
            br: m.fixed_view::<2, 2>(2, 2).into_owned(),
        }
    }

    pub fn compose(&self) -> CMat4 {
        from_blocks(&self.tl, &self.tr, &self.bl, &self.br)
    }
}

/// Builds a 4x4 matrix from four 2x2 blocks laid out `[[tl, tr], [bl, br]]`.
pub fn from_blocks(tl: &CMat2, tr: &CMat2, bl: &CMat2, br: &CMat2) -> CMat4 {
    #[rustfmt::skip]
    let m = CMat4::new(
        tl[(0, 0)], tl[(0, 1)], tr[(0, 0)], tr[(0, 1)],
        tl[(1, 0)], tl[(1, 1)], tr[(1, 0)], tr[(1, 1)],
        bl[(0, 0)], bl[(0, 1)], br[(0, 0)], br[(0, 1)],
        bl[(1, 0)], bl[(1, 1)], br[(1, 0)], br[(1, 1)],
    );
    m
}

/// Sum of the two diagonal 2x2 blocks (partial trace over the block index).
/// Preserves the scalar trace: `tr(m) == tr(block_partial_trace(m))`.
pub fn block_partial_trace(m: &CMat4) -> CMat2 {
    let b = Blocks::split(m);
    b.tl + b.br
}

/// Largest entry modulus, i.e. the max-norm used by all equality assertions.
pub fn max_norm<R, C, S>(m: &Matrix<C64, R, C, S>) -> f64
where
    R: Dim,
    C: Dim,
    S: RawStorage<C64, R, C>,
{
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Max-norm of the entrywise difference of two matrices of equal shape.
pub fn max_diff<R, C, S>(a: &Matrix<C64, R, C, S>, b: &Matrix<C64, R, C, S>) -> f64
where
    R: Dim,
    C: Dim,
    S: RawStorage<C64, R, C>,
{
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// True when every entry has finite real and imaginary parts.
pub fn all_finite<R, C, S>(m: &Matrix<C64, R, C, S>) -> bool
where
    R: Dim,
    C: Dim,
    S: RawStorage<C64, R, C>,
{
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

/// `e^{i x}` as a complex scalar.
pub fn cis(x: f64) -> C64 {
    C64::new(x.cos(), x.sin())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn dagger_of_identity_is_identity() {
        assert_eq!(dagger2(&MAT2_ID), MAT2_ID);
        assert_eq!(dagger4(&CMat4::identity()), CMat4::identity());
    }

    #[test]
    fn dagger_fixes_hermitian_sigma_y() {
        let sigma_y = CMat2::new(ZERO, c(0.0, -1.0), IM, ZERO);
        assert_eq!(dagger2(&sigma_y), sigma_y);
    }

    #[test]
    fn dagger_conjugates_and_transposes() {
        let m = CMat2::new(ZERO, IM, ZERO, ZERO);
        let expected = CMat2::new(ZERO, ZERO, c(0.0, -1.0), ZERO);
        assert_eq!(dagger2(&m), expected);
    }

    #[test]
    fn outer_basis_vectors() {
        let e0 = CVec2::new(ONE, ZERO);
        let e1 = CVec2::new(ZERO, ONE);
        assert_eq!(outer2(&e0, &e0), CMat2::new(ONE, ZERO, ZERO, ZERO));
        assert_eq!(outer2(&e0, &e1), CMat2::new(ZERO, ONE, ZERO, ZERO));
    }

    #[test]
    fn outer_general_components() {
        let a = c(0.3, -0.4);
        let b = c(0.5, 0.7);
        let u = CVec2::new(a, b);
        let m = outer2(&u, &u);
        assert_eq!(m[(0, 0)], a * a.conj());
        assert_eq!(m[(0, 1)], a * b.conj());
        assert_eq!(m[(1, 0)], b * a.conj());
        assert_eq!(m[(1, 1)], b * b.conj());
    }

    #[test]
    fn outer_four_dimensional() {
        let u = CVec4::new(c(1.0, 0.0), c(0.0, 1.0), c(-0.5, 0.0), c(0.0, 0.0));
        let v = CVec4::new(c(0.0, 0.0), c(2.0, 0.0), c(0.0, -1.0), c(1.0, 1.0));
        let m = outer4(&u, &v);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m[(i, j)], u[i] * v[j].conj());
            }
        }
    }

    #[test]
    fn partial_trace_of_identity() {
        let two_id = MAT2_ID * c(2.0, 0.0);
        assert_eq!(block_partial_trace(&CMat4::identity()), two_id);
    }

    #[test]
    fn partial_trace_cancels_opposite_blocks() {
        let a = CMat2::new(c(1.0, 2.0), c(3.0, -1.0), c(0.5, 0.0), c(-2.0, 4.0));
        let m = from_blocks(&a, &MAT2_ZERO, &MAT2_ZERO, &(-a));
        assert_eq!(block_partial_trace(&m), MAT2_ZERO);
    }

    #[test]
    fn partial_trace_adds_diagonal_blocks() {
        let p = CMat2::new(c(1.0, 0.0), c(0.0, 2.0), c(3.0, 0.0), c(0.0, -1.0));
        let q = CMat2::new(c(-1.0, 1.0), c(2.0, 2.0), c(0.0, 0.0), c(5.0, 0.5));
        let m = from_blocks(&p, &q, &q, &q);
        assert_eq!(block_partial_trace(&m), p + q);
    }

    #[test]
    fn blocks_recompose_exactly() {
        let m = CMat4::from_fn(|i, j| c((i * 4 + j) as f64, (i as f64) - (j as f64)));
        assert_eq!(Blocks::split(&m).compose(), m);
    }

    #[test]
    fn partial_trace_preserves_scalar_trace() {
        let m = CMat4::from_fn(|i, j| c((i + 2 * j) as f64 * 0.25, (i as f64) * 0.5 - j as f64));
        let lhs: C64 = m.trace();
        let rhs: C64 = block_partial_trace(&m).trace();
        assert!((lhs - rhs).norm() <= TOL);
    }

    fn arb_c64() -> impl Strategy<Value = C64> {
        (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| C64::new(re, im))
    }

    fn arb_mat4() -> impl Strategy<Value = CMat4> {
        proptest::collection::vec(arb_c64(), 16).prop_map(|v| CMat4::from_fn(|i, j| v[4 * i + j]))
    }

    proptest! {
        #[test]
        fn dagger_is_an_involution(m in arb_mat4()) {
            prop_assert_eq!(dagger4(&dagger4(&m)), m);
        }

        #[test]
        fn outer_self_is_idempotent_for_unit_vectors(z0 in arb_c64(), z1 in arb_c64()) {
            let norm = (z0.norm_sqr() + z1.norm_sqr()).sqrt();
            prop_assume!(norm > 1e-3);
            let u = CVec2::new(z0 / norm, z1 / norm);
            let p = outer2(&u, &u);
            prop_assert!(max_diff(&(p * p), &p) <= TOL);
        }

        #[test]
        fn partial_trace_is_linear(a in arb_mat4(), b in arb_mat4(), al in arb_c64(), be in arb_c64()) {
            let lhs = block_partial_trace(&(a * al + b * be));
            let rhs = block_partial_trace(&a) * al + block_partial_trace(&b) * be;
            prop_assert!(max_diff(&lhs, &rhs) <= TOL);
        }
    }
}
