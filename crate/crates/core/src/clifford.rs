//! Weyl-basis gamma matrices, the chirality matrix, the Minkowski metric,
//! and the 16-element matrix basis of the spacetime Clifford algebra.

use nalgebra::DMatrix;

use crate::numerics::{from_blocks, CMat2, CMat4, C64, IM, MAT2_ID, MAT2_ZERO, ONE, ZERO};

pub const PAULI_X: CMat2 = CMat2::new(ZERO, ONE, ONE, ZERO);
pub const PAULI_Y: CMat2 = CMat2::new(ZERO, C64::new(0.0, -1.0), IM, ZERO);
pub const PAULI_Z: CMat2 = CMat2::new(ONE, ZERO, ZERO, C64::new(-1.0, 0.0));
pub const PAULI: [CMat2; 3] = [PAULI_X, PAULI_Y, PAULI_Z];

/// The four gamma matrices in the Weyl (chiral) basis, the chirality matrix
/// `gamma5 = i g0 g1 g2 g3`, and the metric signature `(+,-,-,-)`.
///
/// Invariants (verified by the test suite, exact for the Weyl basis):
/// `{g^a, g^b} = 2 eta^{ab} 1`, `(g0)^2 = 1`, `(g^i)^2 = -1`, and
/// `gamma5 = blockdiag(-1, 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaSet {
    gammas: [CMat4; 4],
    gamma5: CMat4,
    metric_diag: [f64; 4],
}

impl GammaSet {
    /// Builds the Weyl representation: `g0 = [[0, 1], [1, 0]]` and
    /// `g^i = [[0, s_i], [-s_i, 0]]` in 2x2 blocks.
    pub fn weyl() -> Self {
        let g0 = from_blocks(&MAT2_ZERO, &MAT2_ID, &MAT2_ID, &MAT2_ZERO);
        let spatial = |s: &CMat2| from_blocks(&MAT2_ZERO, s, &(-s), &MAT2_ZERO);
        let gammas = [g0, spatial(&PAULI_X), spatial(&PAULI_Y), spatial(&PAULI_Z)];
        let gamma5 = gammas[0] * gammas[1] * gammas[2] * gammas[3] * IM;
        GammaSet {
            gammas,
            gamma5,
            metric_diag: [1.0, -1.0, -1.0, -1.0],
        }
    }

    /// The contravariant gamma matrix `g^a`, `a` in `0..=3`.
    pub fn gamma(&self, a: usize) -> &CMat4 {
        assert!(a < 4, "gamma index out of range: {a}");
        &self.gammas[a]
    }

    pub fn gamma5(&self) -> &CMat4 {
        &self.gamma5
    }

    /// Metric component `eta^{ab}` (diagonal, signature `(+,-,-,-)`).
    pub fn metric(&self, a: usize, b: usize) -> f64 {
        assert!(a < 4 && b < 4, "metric index out of range: ({a}, {b})");
        if a == b {
            self.metric_diag[a]
        } else {
            0.0
        }
    }

    /// Covariant gamma matrix `g_a = eta_{ab} g^b`, so `g_0 = g^0` and
    /// `g_i = -g^i`.
    pub fn lower(&self, a: usize) -> CMat4 {
        assert!(a < 4, "gamma index out of range: {a}");
        self.gammas[a] * C64::new(self.metric_diag[a], 0.0)
    }
}

/// Anti-commutator `{a, b} = ab + ba`.
pub fn anticommutator(a: &CMat4, b: &CMat4) -> CMat4 {
    a * b + b * a
}

/// One element of the 16-dimensional matrix basis: an ordered product of
/// distinct gamma matrices with strictly increasing indices.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisElement {
    pub label: String,
    /// Number of gamma factors: 0 scalar, 1 vector, 2 tensor, 3 axial
    /// vector, 4 pseudo-scalar.
    pub grade: usize,
    pub matrix: CMat4,
}

/// The full 16-element basis, graded 1/4/6/4/1.
///
/// The pseudo-scalar element is stored as the product `g0 g1 g2 g3` itself;
/// its relation to the chirality matrix (`g0 g1 g2 g3 = -i gamma5`) is an
/// assertion in the tests, not an identification.
#[derive(Debug, Clone, PartialEq)]
pub struct CliffordBasis {
    pub elements: Vec<BasisElement>,
}

impl CliffordBasis {
    /// Enumerates ordered products over index subsets of `{0,1,2,3}`,
    /// grouped by grade. Increasing-index products fix the sign ambiguity.
    pub fn build(gs: &GammaSet) -> Self {
        let mut elements = Vec::with_capacity(16);
        for grade in 0..=4 {
            for subset in 0u8..16 {
                if (subset.count_ones() as usize) != grade {
                    continue;
                }
                let mut matrix = CMat4::identity();
                let mut label = String::new();
                for a in 0..4 {
                    if subset & (1 << a) != 0 {
                        matrix *= gs.gamma(a);
                        label.push_str(&format!("g{a}"));
                    }
                }
                if label.is_empty() {
                    label.push('1');
                }
                elements.push(BasisElement {
                    label,
                    grade,
                    matrix,
                });
            }
        }
        CliffordBasis { elements }
    }

    /// Number of elements per grade; `[1, 4, 6, 4, 1]` for a valid basis.
    pub fn grade_counts(&self) -> [usize; 5] {
        let mut counts = [0usize; 5];
        for el in &self.elements {
            counts[el.grade] += 1;
        }
        counts
    }

    /// Magnitude of the determinant of the 16x16 matrix whose columns are
    /// the flattened basis elements. Nonzero iff the 16 matrices are
    /// linearly independent over the complex numbers.
    pub fn flattened_det_magnitude(&self) -> f64 {
        let m = DMatrix::from_fn(16, 16, |row, col| {
            self.elements[col].matrix[(row / 4, row % 4)]
        });
        m.determinant().norm()
    }

    /// Linear independence check with the given determinant tolerance.
    pub fn is_linearly_independent(&self, tol: f64) -> bool {
        self.elements.len() == 16 && self.flattened_det_magnitude() > tol
    }
}
