//! Analysis reports in a human-readable layout and a line-oriented machine
//! format.
//!
//! Machine records, in order: `VARS`, `N`, `IDEAL`, one `GEN` per minimal
//! generator, `ALGDIM`, one `MONO` per basis monomial (graded order), then
//! for each degree with nonzero derivations `DEG a1 .. an : dim` followed by
//! one `DER a1 .. an : i` per basis derivation `∂_{α,e_i^*}`, then `TORUS`,
//! one `ROOT a1 .. an : dim` per nonzero degree, `LIEDIM`, `SYMMETRIES`, one
//! `PERM` per symmetry in 1-based one-line notation, and `ROUNDTRIP ok|fail`.

use std::fmt::Write;

use crate::algebra::{AutWeightReport, QuotientAlgebra, WeightDecomposition};
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::lattice::{ExponentVector, Permutation};
use crate::parse::{render_monomial, render_with, variable_names, IdealSource};
use crate::reconstruct::{reconstruct_ideal, RestrictedWeightData};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub variables: Vec<String>,
    pub ideal: MonomialIdeal,
    pub basis: Vec<ExponentVector>,
    pub decomposition: WeightDecomposition,
    pub aut: AutWeightReport,
    pub symmetries: Vec<Permutation>,
    pub roundtrip_ok: bool,
}

impl AnalysisReport {
    pub fn algebra_dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ideal_text(&self) -> String {
        render_with(&self.ideal, &self.variables)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let names = &self.variables;
        let _ = writeln!(out, "ideal: ({})", self.ideal_text());
        let _ = writeln!(out, "variables: {}", names.join(" "));
        let _ = writeln!(out, "algebra dimension: {}", self.algebra_dim());
        let basis: Vec<String> = self
            .basis
            .iter()
            .map(|m| render_monomial(m, names))
            .collect();
        let _ = writeln!(out, "monomial basis: {}", basis.join(", "));
        let _ = writeln!(out, "weight decomposition of the derivation algebra:");
        for (alpha, space) in &self.decomposition.spaces {
            let kind = if alpha.is_nonneg() { "inner" } else { "outer" };
            let basis: Vec<String> = space.basis.iter().map(ToString::to_string).collect();
            let _ = writeln!(
                out,
                "  {alpha:<12} {kind}  dim {}  {}",
                space.dim(),
                basis.join(", ")
            );
        }
        let _ = writeln!(out, "identity component of the automorphism group:");
        let _ = writeln!(out, "  torus rank: {}", self.aut.torus_rank);
        let roots: Vec<String> = self
            .aut
            .roots
            .iter()
            .map(|(a, d)| format!("{a}:{d}"))
            .collect();
        let roots = if roots.is_empty() {
            "none".to_string()
        } else {
            roots.join(" ")
        };
        let _ = writeln!(out, "  roots: {roots}");
        let _ = writeln!(out, "  Lie algebra dimension: {}", self.aut.lie_dim);
        let _ = writeln!(
            out,
            "variable permutations preserving the ideal: {}",
            self.symmetries.len()
        );
        for sigma in &self.symmetries {
            let _ = writeln!(out, "  {sigma}");
        }
        let _ = writeln!(
            out,
            "round trip: {}",
            if self.roundtrip_ok { "ok" } else { "FAILED" }
        );
        out
    }

    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "VARS {}", self.variables.join(" "));
        let _ = writeln!(out, "N {}", self.ideal.n());
        let _ = writeln!(out, "IDEAL {}", self.ideal_text());
        for g in self.ideal.generators() {
            let _ = writeln!(out, "GEN {}", g.to_record());
        }
        let _ = writeln!(out, "ALGDIM {}", self.algebra_dim());
        for m in &self.basis {
            let _ = writeln!(out, "MONO {}", m.to_record());
        }
        for (alpha, space) in &self.decomposition.spaces {
            let _ = writeln!(out, "DEG {} : {}", alpha.to_record(), space.dim());
            for d in &space.basis {
                let i = d
                    .unit_index()
                    .expect("weight space bases use unit covectors");
                let _ = writeln!(out, "DER {} : {}", alpha.to_record(), i + 1);
            }
        }
        let _ = writeln!(out, "TORUS {}", self.aut.torus_rank);
        for (alpha, d) in &self.aut.roots {
            let _ = writeln!(out, "ROOT {} : {d}", alpha.to_record());
        }
        let _ = writeln!(out, "LIEDIM {}", self.aut.lie_dim);
        let _ = writeln!(out, "SYMMETRIES {}", self.symmetries.len());
        for sigma in &self.symmetries {
            let images: Vec<String> = sigma.images().iter().map(|j| (j + 1).to_string()).collect();
            let _ = writeln!(out, "PERM {}", images.join(" "));
        }
        let _ = writeln!(
            out,
            "ROUNDTRIP {}",
            if self.roundtrip_ok { "ok" } else { "fail" }
        );
        out
    }
}

pub fn analyze_ideal(ideal: &MonomialIdeal, variables: Vec<String>) -> Result<AnalysisReport> {
    let algebra = QuotientAlgebra::new(ideal.clone())?;
    let decomposition = algebra.weight_decomposition();
    let aut = AutWeightReport::from_decomposition(&decomposition, algebra.dim());
    let data = RestrictedWeightData::from_decomposition(&decomposition);
    let roundtrip_ok = reconstruct_ideal(&data).as_ref() == Ok(ideal);
    Ok(AnalysisReport {
        variables,
        ideal: ideal.clone(),
        basis: algebra.basis().to_vec(),
        decomposition,
        aut,
        symmetries: ideal.perm_symmetries(),
        roundtrip_ok,
    })
}

pub fn analyze(source: &IdealSource) -> Result<AnalysisReport> {
    analyze_ideal(&source.ideal()?, source.variables.clone())
}

/// Report with canonical variable names.
pub fn analyze_canonical(ideal: &MonomialIdeal) -> Result<AnalysisReport> {
    analyze_ideal(ideal, variable_names(ideal.n()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_source;

    #[test]
    fn machine_report_for_cubic() {
        let report = analyze(&parse_source("x^3").unwrap()).unwrap();
        let expected = "\
VARS x
N 1
IDEAL x^3
GEN 3
ALGDIM 3
MONO 0
MONO 1
MONO 2
DEG 0 : 1
DER 0 : 1
DEG 1 : 1
DER 1 : 1
TORUS 1
ROOT 1 : 1
LIEDIM 2
SYMMETRIES 1
PERM 1
ROUNDTRIP ok
";
        assert_eq!(report.render_machine(), expected);
    }

    #[test]
    fn text_report_mentions_everything() {
        let report = analyze(&parse_source("y^3, x*y, x^3").unwrap()).unwrap();
        let text = report.render_text();
        assert!(text.contains("ideal: (y^3, x*y, x^3)"));
        assert!(text.contains("algebra dimension: 5"));
        assert!(text.contains("monomial basis: 1, x, y, x^2, y^2"));
        assert!(text.contains("(-1,2)"));
        assert!(text.contains("Lie algebra dimension: 6"));
        assert!(text.contains("round trip: ok"));
    }
}
