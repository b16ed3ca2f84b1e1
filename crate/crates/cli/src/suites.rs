//! The verification suites behind `helicity verify`.
//!
//! Every suite is a pure function of its configuration: cases are generated
//! in a fixed order from the seed and grid sizes, so reports are
//! reproducible byte for byte.

use std::f64::consts::{PI, TAU};

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use helicity_core::bilinears::{
    block_form_axial, block_form_current, compute as bilinear_set, expanded_slash_pair, slash_pair,
};
use helicity_core::clifford::{anticommutator, CliffordBasis, GammaSet};
use helicity_core::graphene::{
    direction_only_reconstruction, hamiltonian, right_restricted_reconstruction,
    trace_reconstruction, GrapheneParams, PlanarWavevector,
};
use helicity_core::numerics::{from_blocks, max_diff, max_norm, CMat4, C64, MAT2_ID, MAT2_ZERO};
use helicity_core::theorem::{verify_main_result, Handedness};
use helicity_core::{DiracSpinor, Error, PhaseOffset, UnitMomentum};

use crate::report::{CaseRecord, ConfigEcho, SuiteReport, F17};

/// Number of seeded random spinors per bilinears run.
pub const SPINOR_CASES: usize = 1000;
/// Number of random planar wavevectors per graphene run.
pub const WAVEVECTOR_CASES: usize = 100;
/// Tolerance of the basis linear-independence determinant check.
const RANK_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Clifford,
    Bilinears,
    Theorem,
    Graphene,
    All,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Clifford => "clifford",
            Suite::Bilinears => "bilinears",
            Suite::Theorem => "theorem",
            Suite::Graphene => "graphene",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub suite: Suite,
    pub grid_theta: usize,
    pub grid_phi: usize,
    pub delta_phi_samples: usize,
    pub seed: u64,
    pub tolerance: f64,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.grid_theta < 2 || self.grid_phi < 2 {
            return Err(format!(
                "grid sizes must be at least 2, got {}x{}",
                self.grid_theta, self.grid_phi
            ));
        }
        if self.delta_phi_samples < 1 {
            return Err("delta-phi-samples must be positive".to_string());
        }
        if self.tolerance <= 0.0 || !self.tolerance.is_finite() {
            return Err(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            ));
        }
        Ok(())
    }

    fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            suite: self.suite.name().to_string(),
            grid_theta: self.grid_theta,
            grid_phi: self.grid_phi,
            delta_phi_samples: self.delta_phi_samples,
            seed: self.seed,
            tolerance: F17(self.tolerance),
            spinor_cases: SPINOR_CASES,
            wavevector_cases: WAVEVECTOR_CASES,
        }
    }
}

/// Runs the configured suite and assembles the report.
pub fn run(cfg: &RunConfig) -> SuiteReport {
    let cases = match cfg.suite {
        Suite::Clifford => clifford_cases(cfg),
        Suite::Bilinears => bilinears_cases(cfg),
        Suite::Theorem => theorem_cases(cfg),
        Suite::Graphene => graphene_cases(cfg),
        Suite::All => {
            let mut cases = clifford_cases(cfg);
            cases.extend(bilinears_cases(cfg));
            cases.extend(theorem_cases(cfg));
            cases.extend(graphene_cases(cfg));
            cases
        }
    };
    SuiteReport::new(cfg.echo(), cases)
}

fn clifford_cases(cfg: &RunConfig) -> Vec<CaseRecord> {
    let gs = GammaSet::weyl();
    let tol = cfg.tolerance;
    let mut cases = Vec::new();

    for a in 0..4 {
        for b in 0..4 {
            let lhs = anticommutator(gs.gamma(a), gs.gamma(b));
            let rhs = CMat4::identity() * C64::new(2.0 * gs.metric(a, b), 0.0);
            let residual = max_diff(&lhs, &rhs);
            cases.push(
                CaseRecord::new(
                    "clifford",
                    format!("anticommutator_{a}{b}"),
                    residual <= tol,
                    residual,
                )
                .metric("metric_component", gs.metric(a, b)),
            );
        }
    }

    let chirality = from_blocks(&(-MAT2_ID), &MAT2_ZERO, &MAT2_ZERO, &MAT2_ID);
    let residual = max_diff(gs.gamma5(), &chirality);
    cases.push(CaseRecord::new(
        "clifford",
        "gamma5_block_form".to_string(),
        residual <= tol,
        residual,
    ));

    let residual = max_diff(&(gs.gamma5() * gs.gamma5()), &CMat4::identity());
    cases.push(CaseRecord::new(
        "clifford",
        "gamma5_square".to_string(),
        residual <= tol,
        residual,
    ));

    for a in 0..4 {
        let residual = max_norm(&anticommutator(gs.gamma5(), gs.gamma(a)));
        cases.push(CaseRecord::new(
            "clifford",
            format!("gamma5_anticommutes_{a}"),
            residual <= tol,
            residual,
        ));
    }

    for a in 0..4 {
        let expected = gs.gamma(a) * C64::new(gs.metric(a, a), 0.0);
        let residual = max_diff(&gs.lower(a), &expected);
        cases.push(CaseRecord::new(
            "clifford",
            format!("lower_index_{a}"),
            residual <= tol,
            residual,
        ));
    }

    let basis = CliffordBasis::build(&gs);
    let residual = max_diff(
        &basis.elements[15].matrix,
        &(gs.gamma5() * C64::new(0.0, -1.0)),
    );
    cases.push(CaseRecord::new(
        "clifford",
        "pseudo_scalar_factor".to_string(),
        residual <= tol,
        residual,
    ));

    let counts = basis.grade_counts();
    let counts_ok = counts == [1, 4, 6, 4, 1];
    let mut case = CaseRecord::new(
        "clifford",
        "grade_counts".to_string(),
        counts_ok,
        if counts_ok { 0.0 } else { 1.0 },
    );
    for (grade, count) in counts.iter().enumerate() {
        case = case.metric(&format!("grade_{grade}"), *count as f64);
    }
    cases.push(case);

    let det = basis.flattened_det_magnitude();
    let independent = basis.is_linearly_independent(RANK_TOL);
    cases.push(
        CaseRecord::new(
            "clifford",
            "basis_rank".to_string(),
            independent,
            if independent { 0.0 } else { 1.0 },
        )
        .metric("det_magnitude", det),
    );

    cases
}

fn bilinears_cases(cfg: &RunConfig) -> Vec<CaseRecord> {
    let gs = GammaSet::weyl();
    let tol = cfg.tolerance;
    let mut cases = Vec::with_capacity(SPINOR_CASES);

    for i in 0..SPINOR_CASES as u64 {
        let psi = DiracSpinor::random(cfg.seed.wrapping_add(i));
        let sp = slash_pair(&psi, &gs);
        let expanded = expanded_slash_pair(&psi);
        let expansion_residual = max_diff(&sp.axial_slash, &expanded.axial_slash)
            .max(max_diff(&sp.current_slash, &expanded.current_slash));
        let block_residual = max_diff(&block_form_axial(&psi), &sp.axial_slash)
            .max(max_diff(&block_form_current(&psi), &sp.current_slash));
        let set = bilinear_set(&psi, &gs);
        let reality_residual = set.reality_residual();
        let antisymmetry_residual = set.antisymmetry_residual();

        let worst = expansion_residual
            .max(block_residual)
            .max(reality_residual)
            .max(antisymmetry_residual);

        cases.push(
            CaseRecord::new("bilinears", format!("spinor_{i:04}"), worst <= tol, worst)
                .metric("a_re", psi.a.re)
                .metric("a_im", psi.a.im)
                .metric("b_re", psi.b.re)
                .metric("b_im", psi.b.im)
                .metric("c_re", psi.c.re)
                .metric("c_im", psi.c.im)
                .metric("d_re", psi.d.re)
                .metric("d_im", psi.d.im)
                .metric("expansion_residual", expansion_residual)
                .metric("block_residual", block_residual)
                .metric("reality_residual", reality_residual)
                .metric("antisymmetry_residual", antisymmetry_residual),
        );
    }

    cases
}

fn theorem_cases(cfg: &RunConfig) -> Vec<CaseRecord> {
    let tol = cfg.tolerance;
    let mut cases = Vec::new();

    for i in 0..cfg.grid_theta {
        let theta = PI * i as f64 / (cfg.grid_theta - 1) as f64;
        for j in 0..cfg.grid_phi {
            let phi = TAU * j as f64 / cfg.grid_phi as f64;
            let p = UnitMomentum::new(theta, phi).expect("grid angles are valid");
            for k in 0..cfg.delta_phi_samples {
                let dphi = TAU * k as f64 / cfg.delta_phi_samples as f64;
                let off = PhaseOffset::new(dphi);
                for (handedness, tag) in [(Handedness::Right, "r"), (Handedness::Left, "l")] {
                    let id = format!("t{i:03}_p{j:03}_d{k}_{tag}");
                    let case = match verify_main_result(&p, off, handedness, tol) {
                        Ok(report) => {
                            let mut case = CaseRecord::new(
                                "theorem",
                                id,
                                report.passed,
                                report.max_residual(),
                            )
                            .metric("h", report.extracted.h)
                            .metric("fit_residual", report.extracted.residual)
                            .metric(
                                "sign_defect",
                                (report.extracted.h - handedness.sign()).abs(),
                            )
                            .metric("projector_1", report.projector_residuals[0])
                            .metric("projector_2", report.projector_residuals[1]);
                            for (n, r) in report.eigen_residuals.iter().enumerate() {
                                case = case.metric(&format!("eigen_f{}", n + 1), *r);
                            }
                            case
                        }
                        Err(Error::NotProportional { h, residual }) => {
                            CaseRecord::new("theorem", id, false, residual)
                                .metric("h", h)
                                .metric("fit_residual", residual)
                        }
                        Err(_) => CaseRecord::new("theorem", id, false, f64::MAX),
                    };
                    cases.push(
                        case.metric("theta", theta)
                            .metric("phi", phi)
                            .metric("delta_phi", dphi),
                    );
                }
            }
        }
    }

    cases
}

fn graphene_cases(cfg: &RunConfig) -> Vec<CaseRecord> {
    let tol = cfg.tolerance;
    let params = GrapheneParams::unit();
    let gs = GammaSet::weyl();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut cases = Vec::new();

    for i in 0..WAVEVECTOR_CASES {
        let k = loop {
            let candidate =
                PlanarWavevector::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
            if candidate.magnitude() > 1e-3 {
                break candidate;
            }
        };
        let h_matrix = hamiltonian(&k, &params);
        let lambda = params.energy_scale() * k.magnitude();
        let eigenvalue_residual = h_matrix
            .trace()
            .norm()
            .max(((-h_matrix.determinant()).sqrt().norm() - lambda).abs());
        let k_sq = k.magnitude() * k.magnitude();

        // recorded only, never gated: how far the right-handed restriction
        // sits from the negated Hamiltonian
        let right_restriction_residual = right_restricted_reconstruction(&k, &params)
            .map(|m| max_diff(&m, &(-h_matrix)))
            .unwrap_or(f64::MAX);

        for j in 0..cfg.delta_phi_samples {
            let dphi = TAU * j as f64 / cfg.delta_phi_samples as f64;
            let off = PhaseOffset::new(dphi);

            let reconstruction_residual = trace_reconstruction(&k, off, &params)
                .map(|m| max_diff(&m, &h_matrix))
                .unwrap_or(f64::MAX);

            // full reading = direction-only reading * |k|^2
            let prefactor_consistency_residual = match (
                trace_reconstruction(&k, off, &params),
                direction_only_reconstruction(&k, off, &params),
            ) {
                (Ok(full), Ok(direction_only)) => {
                    max_diff(&full, &(direction_only * C64::new(k_sq, 0.0)))
                }
                _ => f64::MAX,
            };

            // block partial trace identity: ptr(g5 K g0) = 2 sigma.k-hat
            let ptr_residual = {
                let p = helicity_core::graphene::to_unit_momentum(&k).expect("nonzero");
                let m = gs.gamma5()
                    * helicity_core::graphene::restricted_axial_slash(&p, off)
                    * gs.gamma(0);
                let ptr = helicity_core::numerics::block_partial_trace(&m);
                let expected =
                    helicity_core::theorem::helicity_operator(&p).matrix * C64::new(2.0, 0.0);
                max_diff(&ptr, &expected)
            };

            let worst = reconstruction_residual
                .max(eigenvalue_residual)
                .max(prefactor_consistency_residual)
                .max(ptr_residual);

            cases.push(
                CaseRecord::new("graphene", format!("k{i:03}_d{j}"), worst <= tol, worst)
                    .metric("kx", k.kx)
                    .metric("ky", k.ky)
                    .metric("delta_phi", dphi)
                    .metric("reconstruction_residual", reconstruction_residual)
                    .metric("eigenvalue_residual", eigenvalue_residual)
                    .metric("prefactor_ratio", k_sq)
                    .metric(
                        "prefactor_consistency_residual",
                        prefactor_consistency_residual,
                    )
                    .metric("ptr_identity_residual", ptr_residual)
                    .metric("right_restriction_residual", right_restriction_residual),
            );
        }
    }

    cases
}
