//! The full pipeline for one pair `b ⊆ a` and its JSON report.

use serde::{Deserialize, Serialize};

use crate::decomp::{DecompositionReport, Verdict};
use crate::error::{Error, Result};
use crate::hom::HomSubquotient;
use crate::lab::{decide_two_primes, ring_text, LabOptions};
use crate::local::LocalRing;
use crate::monomial::MonomialIdeal;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomSummary {
    pub numerator: String,
    pub denominator: String,
    pub basis: Vec<String>,
    pub length: usize,
    pub base_length: usize,
    pub mu: usize,
    pub generators: Vec<String>,
    pub cyclic: bool,
    pub free: bool,
    pub annihilator: String,
    pub non_free_witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub prime: u64,
    pub verdict: Verdict,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub ring: String,
    pub variables: Vec<String>,
    pub relations: String,
    pub a: String,
    pub b: String,
    pub dim: usize,
    pub depth_zero: bool,
    /// Known when the generators of `a` (or the spec's sop) form a system
    /// of parameters.
    pub cohen_macaulay: Option<bool>,
    pub gamma_generators: Vec<String>,
    pub stabilization_index: u32,
    pub hom: HomSummary,
    pub decomposable: bool,
    pub decomposition: DecompositionReport,
    pub cross_check: CrossCheck,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

/// Analyze `Hom(R/a, R/b)`. Both ideals are taken modulo the defining
/// ideal and must have finite colength with `b ⊆ a`.
pub fn analyze(
    ring: &LocalRing,
    a: &MonomialIdeal,
    b: &MonomialIdeal,
    sop_hint: Option<&crate::local::ParameterSystem>,
    opts: LabOptions,
) -> Result<AnalysisReport> {
    let aa = ring.extend(a)?;
    let bb = ring.extend(b)?;
    if !aa.contains_ideal(&bb)? {
        return Err(Error::Precondition(format!(
            "b = {} is not contained in a = {}",
            ring.fmt_ideal(b),
            ring.fmt_ideal(a)
        )));
    }
    let q = HomSubquotient::from_ideals(ring, a, b)?;
    let names = ring.names();
    let cohen_macaulay = match ring.validate_sop(a.gens().to_vec()) {
        Ok(ps) => Some(ps.is_cohen_macaulay()?),
        Err(_) => sop_hint.map(|ps| ps.is_cohen_macaulay()).transpose()?,
    };
    let gamma = ring.gamma_m()?;
    let gamma_generators = if gamma == *ring.defining() {
        Vec::new()
    } else {
        names.format_monomials(gamma.gens())
    };
    let hom = HomSummary {
        numerator: ring.fmt_ideal(q.numerator()),
        denominator: ring.fmt_ideal(q.denominator()),
        basis: names.format_monomials(&q.basis()?),
        length: q.length()?,
        base_length: q.base_length()?,
        mu: q.minimal_generator_count(),
        generators: names.format_monomials(&q.generators()),
        cyclic: q.is_cyclic(),
        free: q.is_free_over_base()?,
        annihilator: ring.fmt_ideal(&q.annihilator()?),
        non_free_witness: q.non_free_annihilator_witness()?.map(|y| ring.fmt_monomial(&y)),
    };
    let (first, second) = decide_two_primes(&q, opts)?;
    let cross_check = CrossCheck { prime: second.prime, verdict: second.verdict, agrees: first.verdict == second.verdict };
    Ok(AnalysisReport {
        ring: ring_text(ring),
        variables: names.names().to_vec(),
        relations: ring.fmt_ideal(ring.defining()),
        a: ring.fmt_ideal(a),
        b: ring.fmt_ideal(b),
        dim: ring.dim(),
        depth_zero: ring.depth_is_zero()?,
        cohen_macaulay,
        gamma_generators,
        stabilization_index: ring.stabilization_index()?,
        hom,
        decomposable: first.verdict == Verdict::Decomposable,
        decomposition: first,
        cross_check,
        timing_ms: None,
    })
}
