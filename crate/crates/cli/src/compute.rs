//! The `compute` command: bilinear covariants, slash matrices and helicity
//! for one user-supplied spinor.

use serde::Serialize;
use std::fmt::Write as _;

use helicity_core::bilinears::{compute as bilinear_set, extract_helicity, slash_pair};
use helicity_core::clifford::GammaSet;
use helicity_core::numerics::{CMat4, C64};
use helicity_core::spinors::DiracSpinor;
use helicity_core::Error;

use crate::report::F17;

#[derive(Serialize)]
struct ComplexOut {
    re: F17,
    im: F17,
}

impl From<C64> for ComplexOut {
    fn from(z: C64) -> Self {
        ComplexOut {
            re: F17(z.re),
            im: F17(z.im),
        }
    }
}

type MatOut = Vec<Vec<ComplexOut>>;

fn mat_out(m: &CMat4) -> MatOut {
    (0..4)
        .map(|i| (0..4).map(|j| ComplexOut::from(m[(i, j)])).collect())
        .collect()
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
enum HelicityOut {
    Ok { h: F17, residual: F17 },
    NotProportional { h: F17, residual: F17 },
    ZeroCurrent,
}

#[derive(Serialize)]
struct ComputeReport {
    spinor: Vec<ComplexOut>,
    norm: F17,
    bilinears: BilinearsOut,
    axial_slash: MatOut,
    current_slash: MatOut,
    helicity: HelicityOut,
}

#[derive(Serialize)]
struct BilinearsOut {
    scalar: ComplexOut,
    current: Vec<ComplexOut>,
    tensor: Vec<Vec<ComplexOut>>,
    axial: Vec<ComplexOut>,
    pseudo_scalar: ComplexOut,
}

pub struct ComputeOutcome {
    pub rendered: String,
    pub accepted: bool,
}

/// Runs the full computation and renders it as JSON or plain text.
pub fn run_compute(psi: &DiracSpinor, tolerance: f64, json: bool) -> ComputeOutcome {
    let gs = GammaSet::weyl();
    let set = bilinear_set(psi, &gs);
    let sp = slash_pair(psi, &gs);
    let helicity = extract_helicity(&sp, tolerance);
    let accepted = helicity.is_ok();

    let rendered = if json {
        let report = ComputeReport {
            spinor: [psi.a, psi.b, psi.c, psi.d]
                .into_iter()
                .map(ComplexOut::from)
                .collect(),
            norm: F17(psi.norm()),
            bilinears: BilinearsOut {
                scalar: set.scalar.into(),
                current: set.current.into_iter().map(ComplexOut::from).collect(),
                tensor: set
                    .tensor
                    .iter()
                    .map(|row| row.iter().copied().map(ComplexOut::from).collect())
                    .collect(),
                axial: set.axial.into_iter().map(ComplexOut::from).collect(),
                pseudo_scalar: set.pseudo_scalar.into(),
            },
            axial_slash: mat_out(&sp.axial_slash),
            current_slash: mat_out(&sp.current_slash),
            helicity: match &helicity {
                Ok(res) => HelicityOut::Ok {
                    h: F17(res.h),
                    residual: F17(res.residual),
                },
                Err(Error::NotProportional { h, residual }) => HelicityOut::NotProportional {
                    h: F17(*h),
                    residual: F17(*residual),
                },
                Err(_) => HelicityOut::ZeroCurrent,
            },
        };
        let mut s = serde_json::to_string_pretty(&report).expect("report serialization");
        s.push('\n');
        s
    } else {
        render_text(psi, &set, &sp, &helicity)
    };

    ComputeOutcome { rendered, accepted }
}

fn fmt_c(z: C64) -> String {
    format!(
        "{}{}{}i",
        z.re,
        if z.im < 0.0 { "-" } else { "+" },
        z.im.abs()
    )
}

fn render_text(
    psi: &DiracSpinor,
    set: &helicity_core::BilinearSet,
    sp: &helicity_core::SlashPair,
    helicity: &Result<helicity_core::HelicityResult, Error>,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "spinor (a, b, c, d):");
    for (name, z) in [("a", psi.a), ("b", psi.b), ("c", psi.c), ("d", psi.d)] {
        let _ = writeln!(out, "  {name} = {}", fmt_c(z));
    }
    let _ = writeln!(out, "norm = {}", psi.norm());
    let _ = writeln!(out, "scalar omega_1 = {}", fmt_c(set.scalar));
    let _ = writeln!(out, "pseudo-scalar omega_2 = {}", fmt_c(set.pseudo_scalar));
    for a in 0..4 {
        let _ = writeln!(out, "current J^{a} = {}", fmt_c(set.current[a]));
    }
    for a in 0..4 {
        let _ = writeln!(out, "axial K_{a} = {}", fmt_c(set.axial[a]));
    }
    let _ = writeln!(out, "tensor S^ab (a < b):");
    for a in 0..4 {
        for b in (a + 1)..4 {
            let _ = writeln!(out, "  S^{a}{b} = {}", fmt_c(set.tensor[a][b]));
        }
    }
    for (name, m) in [
        ("axial slash K", &sp.axial_slash),
        ("current slash J", &sp.current_slash),
    ] {
        let _ = writeln!(out, "{name}:");
        for i in 0..4 {
            let row: Vec<String> = (0..4).map(|j| fmt_c(m[(i, j)])).collect();
            let _ = writeln!(out, "  [{}]", row.join(", "));
        }
    }
    match helicity {
        Ok(res) => {
            let _ = writeln!(
                out,
                "helicity: h = {} (residual {:.3e})",
                res.h, res.residual
            );
        }
        Err(Error::NotProportional { h, residual }) => {
            let _ = writeln!(
                out,
                "helicity: none (no unit helicity; best fit h = {h}, residual = {residual:.3e})"
            );
        }
        Err(_) => {
            let _ = writeln!(out, "helicity: undefined (current vanishes)");
        }
    }
    out
}
