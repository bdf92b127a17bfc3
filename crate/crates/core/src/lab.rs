//! Executable checks of the structural results: the Rees endpoint, the
//! dimension-one decomposition and non-freeness theorems with their explicit
//! splittings, the higher-dimensional power searches, the colon identity,
//! radical transfer, and the lattice classifier.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::decomp::field::next_prime_above;
use crate::decomp::{decide, DecideOptions, DecompositionReport, Verdict};
use crate::error::{Error, Result};
use crate::hom::{build_hom, HomSubquotient, InnerIdeal};
use crate::local::{LocalRing, NonCmPower, ParameterSystem};
use crate::monomial::{Monomial, MonomialIdeal};

/// Settings shared by every check that calls the decomposition engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct LabOptions {
    /// Starting prime; `None` lets the engine pick the smallest valid one.
    pub prime: Option<u64>,
    pub decide: DecideOptions,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub statement: String,
    pub instance: String,
    pub parameters: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub witnesses: Vec<DecompositionReport>,
    pub passed: bool,
}

impl TheoremReport {
    fn new(statement: &str, instance: String) -> Self {
        TheoremReport {
            statement: statement.into(),
            instance,
            parameters: BTreeMap::new(),
            checks: Vec::new(),
            witnesses: Vec::new(),
            passed: true,
        }
    }

    fn param(&mut self, key: &str, value: Value) {
        self.parameters.insert(key.into(), value);
    }

    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.passed &= passed;
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    fn absorb(&mut self, prefix: &str, other: TheoremReport) {
        for c in other.checks {
            self.check(&format!("{prefix}{}", c.name), c.passed, c.detail);
        }
        self.witnesses.extend(other.witnesses);
    }

    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// `k[x,y]/(x^2, xy^3)`.
pub fn ring_text(ring: &LocalRing) -> String {
    format!("k[{}]/{}", ring.names().names().join(","), ring.fmt_ideal(ring.defining()))
}

fn sop_text(ps: &ParameterSystem) -> String {
    let r = ps.ring();
    format!("{} sop ({})", ring_text(r), r.names().format_monomials(ps.params()).join(", "))
}

/// Run the engine on a Hom module, choosing a large enough prime.
pub fn decide_module(q: &HomSubquotient, opts: LabOptions) -> Result<DecompositionReport> {
    let pres = q.presentation(opts.prime.unwrap_or(2))?;
    decide(&pres, opts.decide)
}

/// Verdicts over the engine's prime and the next prime above it.
pub fn decide_two_primes(q: &HomSubquotient, opts: LabOptions) -> Result<(DecompositionReport, DecompositionReport)> {
    let first = decide_module(q, opts)?;
    let second = decide_module(q, LabOptions { prime: Some(next_prime_above(first.prime)), ..opts })?;
    Ok((first, second))
}

fn colength(i: &MonomialIdeal) -> Result<usize> {
    i.length()
}

fn require_dim1_depth0(ring: &LocalRing) -> Result<()> {
    if ring.dim() != 1 {
        return Err(Error::Precondition(format!("dimension one required, ring has dimension {}", ring.dim())));
    }
    if !ring.depth_is_zero()? {
        return Err(Error::Precondition("depth zero required".into()));
    }
    Ok(())
}

fn require_parameter(ring: &LocalRing, u: &Monomial, what: &str) -> Result<()> {
    ring.validate_sop(vec![u.clone()]).map(|_| ()).map_err(|_| {
        Error::Precondition(format!("{what} = {} is not a parameter", ring.fmt_monomial(u)))
    })
}

/// For a Cohen–Macaulay ring, `Hom(R/a, R/b)` is free of rank one over
/// `R/a` for every parameter ideal `b ⊆ a` generated by powers.
pub fn verify_rees(ps: &ParameterSystem, inner: &InnerIdeal) -> Result<TheoremReport> {
    if !ps.is_cohen_macaulay()? {
        return Err(Error::Precondition("ring is not Cohen-Macaulay".into()));
    }
    let ring = ps.ring();
    let q = build_hom(ps, inner)?;
    let mut rep = TheoremReport::new("rees", sop_text(ps));
    rep.param("b", json!(ring.fmt_ideal(q.denominator())));
    let len = q.length()?;
    let base = q.base_length()?;
    rep.param("length", json!(len));
    rep.check("cyclic", q.is_cyclic(), format!("mu = {}", q.minimal_generator_count()));
    rep.check("free", q.is_free_over_base()?, format!("length {len}, base length {base}"));
    rep.check("length equals length(R/a)", len == base, format!("{len} vs {base}"));
    Ok(rep)
}

/// The dimension-one decomposition theorem for `b = c·a^{n+1}`, including
/// the two ideal identities behind the splitting
/// `Q ≅ (ca^n + I)/(b + I) ⊕ ((I : a) + b + I)/(b + I)`.
///
/// `n` defaults to the stabilization index; any larger value is also valid.
pub fn verify_thm_dim1(
    ring: &LocalRing,
    a: &Monomial,
    c: &Monomial,
    n: Option<u32>,
    opts: LabOptions,
) -> Result<TheoremReport> {
    require_dim1_depth0(ring)?;
    require_parameter(ring, a, "a")?;
    let n_min = ring.stabilization_index()?;
    let n = n.unwrap_or(n_min);
    if n < n_min {
        return Err(Error::Precondition(format!("n = {n} is below the stabilization index {n_min}")));
    }
    let can = c.mul(&a.pow(n)?)?;
    let b = can.mul(a)?;
    require_parameter(ring, &b, "b")?;

    let i = ring.defining();
    let bb = ring.extend(&MonomialIdeal::principal(b.clone()))?;
    let can_i = ring.extend(&MonomialIdeal::principal(can.clone()))?;
    let ann_a = i.colon_monomial(a)?;
    let q = HomSubquotient::from_ideals(ring, &MonomialIdeal::principal(a.clone()), &MonomialIdeal::principal(b.clone()))?;

    let mut rep = TheoremReport::new(
        "dim-one-decomposition",
        format!("{} a = {} c = {}", ring_text(ring), ring.fmt_monomial(a), ring.fmt_monomial(c)),
    );
    rep.param("n", json!(n));
    rep.param("stabilization_index", json!(n_min));
    rep.param("c", json!(ring.fmt_monomial(c)));
    rep.param("b", json!(ring.fmt_monomial(&b)));

    let lhs = bb.colon_monomial(a)?;
    let rhs = can_i.sum(&ann_a)?;
    rep.check(
        "sum",
        lhs == rhs,
        format!("(b + I : a) = {}, c a^n + (I : a) = {}", ring.fmt_ideal(&lhs), ring.fmt_ideal(&rhs)),
    );
    let right_top = ann_a.sum(&bb)?;
    let meet = can_i.intersect(&right_top)?;
    rep.check(
        "int",
        meet == bb,
        format!("(c a^n + I) ∩ ((I : a) + b + I) = {}, b + I = {}", ring.fmt_ideal(&meet), ring.fmt_ideal(&bb)),
    );
    let len_b = colength(&bb)?;
    let left = len_b - colength(&can_i)?;
    let right = len_b - colength(&right_top)?;
    let total = q.length()?;
    rep.param("summand_lengths", json!([left, right]));
    rep.param("length", json!(total));
    rep.check("summands nonzero", left > 0 && right > 0, format!("lengths {left} and {right}"));
    rep.check("lengths add", left + right == total, format!("{left} + {right} vs {total}"));

    let d = decide_module(&q, opts)?;
    rep.check("engine decomposable", d.verdict == Verdict::Decomposable, format!("{:?} via {:?}", d.verdict, d.method));
    rep.witnesses.push(d);
    Ok(rep)
}

/// Parameters of degree at most 3 in graded order.
pub fn monomial_parameters(ring: &LocalRing) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = (1..=3).flat_map(|deg| monomials_of_degree(ring.nvars(), deg)).collect();
    out.sort();
    out.retain(|m| ring.validate_sop(vec![m.clone()]).is_ok());
    out
}

fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() + 1 == nvars {
            cur.push(left);
            out.push(Monomial::from_exponents(cur.clone()).expect("within variable bound"));
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(nvars, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if nvars > 0 {
        rec(nvars, deg, &mut Vec::new(), &mut out);
    }
    out
}

/// The dimension-one non-freeness theorem with `a = a_0^n` for the first
/// monomial parameter `a_0` and `b = c·a^2`.
pub fn verify_thm_nonfree(ring: &LocalRing, c: &Monomial, opts: LabOptions) -> Result<TheoremReport> {
    require_dim1_depth0(ring)?;
    let n = ring.stabilization_index()?;
    let a0 = monomial_parameters(ring)
        .into_iter()
        .next()
        .ok_or_else(|| Error::Precondition("no monomial parameter of degree at most 3".into()))?;
    verify_thm_nonfree_with(ring, &a0.pow(n)?, c, opts)
}

/// As [`verify_thm_nonfree`] for an explicit parameter `a ∈ m^n`.
pub fn verify_thm_nonfree_with(ring: &LocalRing, a: &Monomial, c: &Monomial, opts: LabOptions) -> Result<TheoremReport> {
    require_dim1_depth0(ring)?;
    let n = ring.stabilization_index()?;
    require_parameter(ring, a, "a")?;
    if a.degree() < u64::from(n) {
        return Err(Error::Precondition(format!("a = {} is not in m^{n}", ring.fmt_monomial(a))));
    }
    let ca = c.mul(a)?;
    let b = ca.mul(a)?;
    require_parameter(ring, &b, "b")?;

    let bb = ring.extend(&MonomialIdeal::principal(b.clone()))?;
    let ca_i = ring.extend(&MonomialIdeal::principal(ca.clone()))?;
    let gamma = ring.gamma_m()?;
    let q = HomSubquotient::from_ideals(ring, &MonomialIdeal::principal(a.clone()), &MonomialIdeal::principal(b.clone()))?;

    let mut rep = TheoremReport::new(
        "dim-one-nonfree",
        format!("{} a = {} c = {}", ring_text(ring), ring.fmt_monomial(a), ring.fmt_monomial(c)),
    );
    rep.param("n", json!(n));
    rep.param("a", json!(ring.fmt_monomial(a)));
    rep.param("b", json!(ring.fmt_monomial(&b)));

    let lhs = bb.colon_monomial(a)?;
    let rhs = ca_i.sum(&gamma)?;
    rep.check("sum", lhs == rhs, format!("(b + I : a) = {}, (ca) + Γ = {}", ring.fmt_ideal(&lhs), ring.fmt_ideal(&rhs)));
    let right_top = gamma.sum(&bb)?;
    let meet = ca_i.intersect(&right_top)?;
    rep.check("int", meet == bb, format!("(ca + I) ∩ (Γ + b + I) = {}", ring.fmt_ideal(&meet)));
    let len_b = colength(&bb)?;
    let left = len_b - colength(&ca_i)?;
    let right = len_b - colength(&right_top)?;
    let total = q.length()?;
    rep.param("summand_lengths", json!([left, right]));
    rep.check("summands nonzero", left > 0 && right > 0, format!("lengths {left} and {right}"));
    rep.check("lengths add", left + right == total, format!("{left} + {right} vs {total}"));

    let d = decide_module(&q, opts)?;
    rep.check("engine decomposable", d.verdict == Verdict::Decomposable, format!("{:?} via {:?}", d.verdict, d.method));
    rep.witnesses.push(d);
    let free = q.is_free_over_base()?;
    rep.check("not free", !free, format!("length {} over base length {}", total, q.base_length()?));

    // y ∈ Γ outside (a) kills the summand (ca)/(ca^2).
    let a_i = ring.extend(&MonomialIdeal::principal(a.clone()))?;
    let mut witness = None;
    for y in gamma.gens() {
        if !a_i.contains(y)? && bb.contains(&y.mul(&ca)?)? {
            witness = Some(y.clone());
            break;
        }
    }
    match &witness {
        Some(y) => {
            rep.param("annihilator_witness", json!(ring.fmt_monomial(y)));
            rep.check("annihilator witness", true, format!("{} ∈ Γ \\ (a) kills (ca)/(ca^2)", ring.fmt_monomial(y)));
        }
        None => rep.check("annihilator witness", false, "no generator of Γ outside (a) kills (ca)/(ca^2)"),
    }
    Ok(rep)
}

/// If `Hom(R/J, N)` decomposes then so does `Hom(R/I, N)` for `J ⊆ I` with
/// equal radicals; `N = R/n_ideal`.
pub fn check_radical_transfer(
    ring: &LocalRing,
    j: &MonomialIdeal,
    i: &MonomialIdeal,
    n_ideal: &MonomialIdeal,
    opts: LabOptions,
) -> Result<TheoremReport> {
    let jj = ring.extend(j)?;
    let ii = ring.extend(i)?;
    if !ii.contains_ideal(&jj)? {
        return Err(Error::Precondition("J is not contained in I".into()));
    }
    if jj.radical() != ii.radical() {
        return Err(Error::Precondition("I and J have different radicals".into()));
    }
    let mut rep = TheoremReport::new(
        "radical-transfer",
        format!("{} J = {} I = {} N = R/{}", ring_text(ring), ring.fmt_ideal(j), ring.fmt_ideal(i), ring.fmt_ideal(n_ideal)),
    );
    let qj = HomSubquotient::from_ideals(ring, j, n_ideal)?;
    let qi = HomSubquotient::from_ideals(ring, i, n_ideal)?;
    let dj = decide_module(&qj, opts)?;
    let di = decide_module(&qi, opts)?;
    rep.param("source_decomposable", json!(dj.verdict == Verdict::Decomposable));
    if dj.verdict == Verdict::Decomposable {
        rep.check(
            "transfer",
            di.verdict == Verdict::Decomposable,
            format!("Hom(R/J, N) decomposable, Hom(R/I, N) {:?}", di.verdict),
        );
    } else {
        rep.check("transfer", true, "Hom(R/J, N) indecomposable; nothing to transfer");
    }
    rep.witnesses.push(dj);
    rep.witnesses.push(di);
    Ok(rep)
}

/// Exponents `n_1..n_d` from the induction in the higher-dimensional
/// decomposition theorem, with the non-CM powers chosen on the way.
fn decomposable_exponents(ps: &ParameterSystem) -> Result<(Vec<u32>, Vec<NonCmPower>)> {
    if ps.len() == 1 {
        let ring = ps.ring();
        require_dim1_depth0(ring)?;
        return Ok((vec![ring.stabilization_index()? + 1], Vec::new()));
    }
    let step = ps.find_non_cm_power()?;
    let sub = ps.drop_power(step.index, step.exponent)?;
    let (mut exps, mut trail) = decomposable_exponents(&sub)?;
    exps.insert(step.index, step.exponent);
    trail.insert(0, step);
    Ok((exps, trail))
}

fn trail_json(trail: &[NonCmPower]) -> Value {
    json!(trail.iter().map(|s| json!({"i": s.index + 1, "s": s.exponent})).collect::<Vec<_>>())
}

/// Follow the induction for decomposability in dimension `d`: find a non-CM
/// power `a_i^{s}`, recurse on `R/(a_i^s)`, and finish in dimension one with
/// `n + 1` for the stabilization index `n`. The assembled module and the
/// radical-transfer step are re-checked by the engine.
pub fn search_decomposable_powers(ps: &ParameterSystem, opts: LabOptions) -> Result<TheoremReport> {
    if ps.is_cohen_macaulay()? {
        return Err(Error::Precondition("ring is Cohen-Macaulay".into()));
    }
    let ring = ps.ring();
    let (exps, trail) = decomposable_exponents(ps)?;
    let mut rep = TheoremReport::new("decomposable-powers", sop_text(ps));
    rep.param("exponents", json!(exps));
    rep.param("non_cm_steps", trail_json(&trail));

    let q = build_hom(ps, &InnerIdeal::Powers(exps.clone()))?;
    let d = decide_module(&q, opts)?;
    rep.check("engine decomposable", d.verdict == Verdict::Decomposable, format!("{:?} via {:?}", d.verdict, d.method));
    rep.witnesses.push(d);

    if let Some(first) = trail.first() {
        // The induction produces Hom(R/J, N) with J = (a_i^{n_i}, other a_j).
        let mut jgens = ps.params().to_vec();
        jgens[first.index] = jgens[first.index].pow(first.exponent)?;
        let j = MonomialIdeal::minimalize(ring.nvars(), jgens)?;
        let a = MonomialIdeal::minimalize(ring.nvars(), ps.params().to_vec())?;
        let b = MonomialIdeal::minimalize(ring.nvars(), ps.powers(&exps)?)?;
        let sub = check_radical_transfer(ring, &j, &a, &b, opts)?;
        let source = sub.parameters.get("source_decomposable") == Some(&json!(true));
        rep.check("induction module decomposable", source, format!("Hom(R/{}, R/b)", ring.fmt_ideal(&j)));
        rep.absorb("radical ", sub);
    }
    Ok(rep)
}

fn nonfree_exponents(ps: &ParameterSystem) -> Result<(Vec<u32>, Vec<u32>, Vec<NonCmPower>)> {
    if ps.len() == 1 {
        let ring = ps.ring();
        require_dim1_depth0(ring)?;
        let n = ring.stabilization_index()?;
        return Ok((vec![n], vec![2 * n], Vec::new()));
    }
    let step = ps.find_non_cm_power()?;
    let sub = ps.drop_power(step.index, step.exponent)?;
    let (mut small, mut big, mut trail) = nonfree_exponents(&sub)?;
    small.insert(step.index, step.exponent);
    big.insert(step.index, step.exponent);
    trail.insert(0, step);
    Ok((small, big, trail))
}

/// The induction for non-freeness: dimension one uses `n_1` = stabilization
/// index and `N_1 = 2 n_1`; each non-CM power step fixes `N_i = n_i`.
pub fn search_nonfree_powers(ps: &ParameterSystem, opts: LabOptions) -> Result<TheoremReport> {
    if ps.is_cohen_macaulay()? {
        return Err(Error::Precondition("ring is Cohen-Macaulay".into()));
    }
    let ring = ps.ring();
    let (small, big, trail) = nonfree_exponents(ps)?;
    let mut rep = TheoremReport::new("nonfree-powers", sop_text(ps));
    rep.param("n", json!(small));
    rep.param("N", json!(big));
    rep.param("non_cm_steps", trail_json(&trail));
    rep.check("n <= N", small.iter().zip(&big).all(|(a, b)| a <= b), format!("{small:?} vs {big:?}"));

    let a = MonomialIdeal::minimalize(ring.nvars(), ps.powers(&small)?)?;
    let b = MonomialIdeal::minimalize(ring.nvars(), ps.powers(&big)?)?;
    let q = HomSubquotient::from_ideals(ring, &a, &b)?;
    let d = decide_module(&q, opts)?;
    rep.check("engine decomposable", d.verdict == Verdict::Decomposable, format!("{:?} via {:?}", d.verdict, d.method));
    rep.witnesses.push(d);
    let free = q.is_free_over_base()?;
    rep.check("not free", !free, format!("length {} over base length {}", q.length()?, q.base_length()?));
    if let Some(y) = q.non_free_annihilator_witness()? {
        rep.param("annihilator_witness", json!(ring.fmt_monomial(&y)));
    }
    Ok(rep)
}

/// Search for a non-CM power and confirm the quotient is not CM.
pub fn verify_non_cm_power(ps: &ParameterSystem) -> Result<TheoremReport> {
    let step = ps.find_non_cm_power()?;
    let mut rep = TheoremReport::new("non-cm-power", sop_text(ps));
    rep.param("i", json!(step.index + 1));
    rep.param("s", json!(step.exponent));
    let sub = ps.drop_power(step.index, step.exponent)?;
    rep.check("quotient not CM", !sub.is_cohen_macaulay()?, ring_text(sub.ring()));
    Ok(rep)
}

/// Random instances of the colon identity over small monomial rings.
pub fn colon_identity_suite(seed: u64, count: usize) -> Result<TheoremReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = TheoremReport::new("colon-identity", format!("{count} random instances, seed {seed}"));
    let mut failures = 0usize;
    for k in 0..count {
        let nv = rng.gen_range(2..=3);
        let ring = loop {
            let gens: Vec<Monomial> = (0..rng.gen_range(1..=3)).map(|_| random_monomial(&mut rng, nv, 3, true)).collect();
            let Ok(i) = MonomialIdeal::minimalize(nv, gens) else { continue };
            if let Ok(r) = LocalRing::with_standard_names(i) {
                break r;
            }
        };
        let l = if rng.gen_bool(0.25) {
            MonomialIdeal::unit(nv)
        } else {
            let gens: Vec<Monomial> = (0..rng.gen_range(1..=2)).map(|_| random_monomial(&mut rng, nv, 2, false)).collect();
            MonomialIdeal::minimalize(nv, gens)?
        };
        let a = random_monomial(&mut rng, nv, 2, true);
        let b = random_monomial(&mut rng, nv, 2, false);
        let p = rng.gen_range(1..=2);
        let q = rng.gen_range(p..=3);
        let r = rng.gen_range(q..=4);
        let (lhs, rhs) = ring.colon_identity_sides(&l, &a, &b, p, q, r)?;
        if lhs != rhs {
            failures += 1;
            rep.check(
                &format!("instance {k}"),
                false,
                format!(
                    "{} L = {} a = {} b = {} (p,q,r) = ({p},{q},{r}): {} vs {}",
                    ring_text(&ring),
                    ring.fmt_ideal(&l),
                    ring.fmt_monomial(&a),
                    ring.fmt_monomial(&b),
                    ring.fmt_ideal(&lhs),
                    ring.fmt_ideal(&rhs)
                ),
            );
        }
    }
    rep.param("instances", json!(count));
    rep.param("failures", json!(failures));
    rep.check("all instances agree", failures == 0, format!("{failures} of {count} failed"));
    Ok(rep)
}

fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, max_exp: u32, nonconstant: bool) -> Monomial {
    loop {
        let exps: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect();
        if !nonconstant || exps.iter().any(|&e| e > 0) {
            return Monomial::from_exponents(exps).expect("within variable bound");
        }
    }
}

/// Lattice-point classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GridClass {
    FreeCyclic,
    CyclicNonfree,
    IndecomposableNoncyclic,
    Decomposable,
}

impl GridClass {
    pub const ALL: [GridClass; 4] =
        [GridClass::FreeCyclic, GridClass::CyclicNonfree, GridClass::IndecomposableNoncyclic, GridClass::Decomposable];

    pub fn label(self) -> &'static str {
        match self {
            GridClass::FreeCyclic => "FREE_CYCLIC",
            GridClass::CyclicNonfree => "CYCLIC_NONFREE",
            GridClass::IndecomposableNoncyclic => "INDECOMPOSABLE_NONCYCLIC",
            GridClass::Decomposable => "DECOMPOSABLE",
        }
    }

    /// One-character glyph for terminal grids.
    pub fn glyph(self) -> char {
        match self {
            GridClass::FreeCyclic => 'F',
            GridClass::CyclicNonfree => 'c',
            GridClass::IndecomposableNoncyclic => 'i',
            GridClass::Decomposable => 'D',
        }
    }

    pub fn is_cyclic(self) -> bool {
        matches!(self, GridClass::FreeCyclic | GridClass::CyclicNonfree)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridPoint {
    pub t: Vec<u32>,
    pub class: GridClass,
    pub mu: usize,
    pub free: bool,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridClassification {
    pub ring: String,
    pub sop: Vec<String>,
    pub max: u32,
    pub points: Vec<GridPoint>,
}

impl GridClassification {
    pub fn dims(&self) -> usize {
        self.sop.len()
    }

    pub fn class_at(&self, t: &[u32]) -> Option<GridClass> {
        self.points.iter().find(|p| p.t == t).map(|p| p.class)
    }
}

/// Class of `Hom(R/a, R/(a_1^{t_1}, ..., a_d^{t_d}))`. Cyclic modules over a
/// local ring are indecomposable, so the engine only runs when `μ ≥ 2`.
pub fn classify_point(ps: &ParameterSystem, t: &[u32], opts: LabOptions) -> Result<GridPoint> {
    let q = build_hom(ps, &InnerIdeal::Powers(t.to_vec()))?;
    let mu = q.minimal_generator_count();
    let free = q.is_free_over_base()?;
    let class = if mu == 1 {
        if free {
            GridClass::FreeCyclic
        } else {
            GridClass::CyclicNonfree
        }
    } else {
        match decide_module(&q, opts)?.verdict {
            Verdict::Decomposable => GridClass::Decomposable,
            Verdict::Indecomposable => GridClass::IndecomposableNoncyclic,
        }
    };
    Ok(GridPoint { t: t.to_vec(), class, mu, free, length: q.length()? })
}

/// Every point of `[1, max]^d` in lexicographic order.
pub fn classify_grid(ps: &ParameterSystem, max: u32, opts: LabOptions) -> Result<GridClassification> {
    let d = ps.len();
    let mut points = Vec::new();
    if max > 0 && d > 0 {
        let mut t = vec![1u32; d];
        loop {
            points.push(classify_point(ps, &t, opts)?);
            let mut k = d;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                if t[k] < max {
                    t[k] += 1;
                    t[k + 1..].iter_mut().for_each(|e| *e = 1);
                    break;
                }
                if k == 0 {
                    k = usize::MAX;
                    break;
                }
            }
            if k == usize::MAX {
                break;
            }
        }
    }
    let ring = ps.ring();
    Ok(GridClassification {
        ring: ring_text(ring),
        sop: ring.names().format_monomials(ps.params()),
        max,
        points,
    })
}

/// Ring families and seeded random rings used by the suites.
pub mod corpus {
    use super::*;

    /// `k[x,y]/(x^2, xy^m)`.
    pub fn line_ring(m: u32) -> LocalRing {
        LocalRing::parse(&["x", "y"], &format!("(x^2, xy^{m})")).expect("valid ring")
    }

    /// The lattice family of `k[x,y]/(x^2, xy^m)` uses the parameter `y^2`,
    /// so the point `t` is `Hom(R/(y^2), R/(y^{2t}))`.
    pub fn line_sop(m: u32) -> ParameterSystem {
        line_ring(m).parse_sop(&["y^2"]).expect("valid sop")
    }

    /// `k[x,y,z]/(x^2, xyz)` with parameters `y, z`.
    pub fn plane_sop() -> ParameterSystem {
        LocalRing::parse(&["x", "y", "z"], "(x^2, xyz)")
            .and_then(|r| r.parse_sop(&["y", "z"]))
            .expect("valid sop")
    }

    /// `k[x,y,z,w]/(x^2, xyzw)` with parameters `y, z, w`.
    pub fn four_var_sop() -> ParameterSystem {
        LocalRing::parse(&["x", "y", "z", "w"], "(x^2, xyzw)")
            .and_then(|r| r.parse_sop(&["y", "z", "w"]))
            .expect("valid sop")
    }

    /// `k[x,y,z]/(x^2, xyz, y^{n1})`, of dimension one with parameter `z`.
    pub fn s_ring(n1: u32) -> LocalRing {
        LocalRing::parse(&["x", "y", "z"], &format!("(x^2, xyz, y^{n1})")).expect("valid ring")
    }

    /// A dimension-one, depth-zero ring with a chosen monomial parameter.
    #[derive(Clone, Debug)]
    pub struct Dim1Instance {
        pub name: String,
        pub ring: LocalRing,
        pub parameter: Monomial,
    }

    /// Seeded random rings in 2 or 3 variables of dimension one and depth
    /// zero that have a variable as parameter.
    pub fn random_dim1_depth0(seed: u64, count: usize) -> Vec<Dim1Instance> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let nv = rng.gen_range(2..=3);
            let gens: Vec<Monomial> = (0..rng.gen_range(2..=4)).map(|_| random_monomial(&mut rng, nv, 3, true)).collect();
            let Ok(i) = MonomialIdeal::minimalize(nv, gens) else { continue };
            let Ok(ring) = LocalRing::with_standard_names(i) else { continue };
            if ring.dim() != 1 || !ring.depth_is_zero().unwrap_or(false) {
                continue;
            }
            let vars: Vec<Monomial> = (0..nv).map(|k| Monomial::var(nv, k)).collect();
            let Some(parameter) = vars.into_iter().find(|v| ring.validate_sop(vec![v.clone()]).is_ok()) else {
                continue;
            };
            if ring.stabilization_index().map_or(true, |n| n > 8) {
                continue;
            }
            out.push(Dim1Instance { name: format!("random-{}", out.len()), ring, parameter });
        }
        out
    }

    /// The `k[x,y]/(x^2, xy^m)` family for `m = 2..6`, the `S_{n1}` family for `n1 = 2..6`,
    /// and `random` seeded random rings.
    pub fn dim1_corpus(seed: u64, random: usize) -> Vec<Dim1Instance> {
        let mut out = Vec::new();
        for m in 2..=6 {
            let ring = line_ring(m);
            let parameter = ring.monomial("y").expect("declared variable");
            out.push(Dim1Instance { name: format!("line-m{m}"), ring, parameter });
        }
        for n1 in 2..=6 {
            let ring = s_ring(n1);
            let parameter = ring.monomial("z").expect("declared variable");
            out.push(Dim1Instance { name: format!("s-{n1}"), ring, parameter });
        }
        out.extend(random_dim1_depth0(seed, random));
        out
    }

    /// Multipliers `c` of degree at most 2 for which `c·a^k` stays a
    /// parameter: `1` first, then a seeded sample of the rest.
    pub fn sample_multipliers(inst: &Dim1Instance, seed: u64, count: usize) -> Vec<Monomial> {
        let nv = inst.ring.nvars();
        let mut rest: Vec<Monomial> = (1..=2).flat_map(|d| monomials_of_degree(nv, d)).collect();
        rest.sort();
        rest.retain(|c| c.mul(&inst.parameter).is_ok_and(|b| inst.ring.validate_sop(vec![b]).is_ok()));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rest.shuffle(&mut rng);
        let mut out = vec![Monomial::one(nv)];
        out.extend(rest.into_iter().take(count.saturating_sub(1)));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::corpus::*;
    use super::*;

    fn opts() -> LabOptions {
        LabOptions::default()
    }

    fn m(r: &LocalRing, s: &str) -> Monomial {
        r.monomial(s).unwrap()
    }

    #[test]
    fn rees_on_cm_rings() {
        let r = LocalRing::parse(&["x", "y"], "(x^2)").unwrap();
        let sop = r.parse_sop(&["y"]).unwrap();
        let rep = verify_rees(&sop, &InnerIdeal::Powers(vec![3])).unwrap();
        assert!(rep.passed, "{rep:?}");
        assert_eq!(rep.parameters["length"], json!(2));
        let r = LocalRing::parse(&["x", "y"], "(0)").unwrap();
        let sop = r.parse_sop(&["x", "y"]).unwrap();
        let rep = verify_rees(&sop, &InnerIdeal::Powers(vec![2, 5])).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.parameters["length"], json!(1));
        assert!(verify_rees(&sop, &InnerIdeal::Powers(vec![1, 1])).unwrap().passed);
    }

    #[test]
    fn rees_rejects_non_cm() {
        let sop = line_sop(3);
        assert!(matches!(verify_rees(&sop, &InnerIdeal::Powers(vec![2])), Err(Error::Precondition(_))));
    }

    #[test]
    fn dim1_theorem_examples() {
        let r = line_ring(3);
        let rep = verify_thm_dim1(&r, &m(&r, "y"), &m(&r, "1"), None, opts()).unwrap();
        assert!(rep.passed, "{rep:#?}");
        assert_eq!(rep.parameters["n"], json!(4));
        assert_eq!(rep.parameters["b"], json!("y^5"));

        let r = line_ring(2);
        let rep = verify_thm_dim1(&r, &m(&r, "y"), &m(&r, "1"), None, opts()).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.parameters["b"], json!("y^4"));
    }

    #[test]
    fn dim1_theorem_on_s2_with_larger_n() {
        let r = s_ring(2);
        let rep = verify_thm_dim1(&r, &m(&r, "z"), &m(&r, "1"), Some(4), opts()).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.parameters["b"], json!("z^5"));
        assert_eq!(rep.parameters["stabilization_index"], json!(3));
        assert!(verify_thm_dim1(&r, &m(&r, "z"), &m(&r, "1"), Some(2), opts()).is_err());
    }

    #[test]
    fn dim1_theorem_rejects_cm() {
        let r = LocalRing::parse(&["x", "y"], "(x^2)").unwrap();
        let err = verify_thm_dim1(&r, &m(&r, "y"), &m(&r, "1"), None, opts()).unwrap_err();
        assert_eq!(err, Error::Precondition("depth zero required".into()));
    }

    #[test]
    fn nonfree_theorem_examples() {
        let r = line_ring(3);
        let rep = verify_thm_nonfree(&r, &m(&r, "1"), opts()).unwrap();
        assert!(rep.passed, "{rep:#?}");
        assert_eq!(rep.parameters["a"], json!("y^4"));
        assert_eq!(rep.parameters["b"], json!("y^8"));
        assert_eq!(rep.parameters["annihilator_witness"], json!("x"));
        let r = line_ring(2);
        let rep = verify_thm_nonfree(&r, &m(&r, "1"), opts()).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.parameters["b"], json!("y^6"));
    }

    #[test]
    fn radical_transfer_examples() {
        let r = line_ring(3);
        let rep = check_radical_transfer(&r, &r.ideal("(y^6)").unwrap(), &r.ideal("(y^2)").unwrap(), &r.ideal("(y^6)").unwrap(), opts());
        // J = N: Hom(R/(y^6), R/(y^6)) = R/(y^6) is cyclic.
        assert!(rep.unwrap().passed);
        let rep = check_radical_transfer(&r, &r.ideal("(y^4)").unwrap(), &r.ideal("(y^2)").unwrap(), &r.ideal("(y^8)").unwrap(), opts())
            .unwrap();
        assert!(rep.passed);
        assert_eq!(rep.parameters["source_decomposable"], json!(true));
        assert!(check_radical_transfer(&r, &r.ideal("(y^2)").unwrap(), &r.ideal("(y^4)").unwrap(), &r.ideal("(y^8)").unwrap(), opts())
            .is_err());
    }

    #[test]
    fn decomposable_power_search() {
        let rep = search_decomposable_powers(&plane_sop(), opts()).unwrap();
        assert!(rep.passed, "{rep:#?}");
        assert_eq!(rep.parameters["exponents"], json!([2, 4]));
        let rep = search_decomposable_powers(&four_var_sop(), opts()).unwrap();
        assert!(rep.passed, "{rep:#?}");
        assert_eq!(rep.parameters["exponents"], json!([2, 2, 5]));
    }

    #[test]
    fn nonfree_power_search() {
        let rep = search_nonfree_powers(&line_ring(3).parse_sop(&["y"]).unwrap(), opts()).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.parameters["n"], json!([4]));
        assert_eq!(rep.parameters["N"], json!([8]));
        let rep = search_nonfree_powers(&plane_sop(), opts()).unwrap();
        assert!(rep.passed, "{rep:#?}");
    }

    #[test]
    fn colon_identity_random() {
        let rep = colon_identity_suite(7, 40).unwrap();
        assert!(rep.passed, "{:?}", rep.failed_checks());
    }

    #[test]
    fn line_family_classes() {
        let sop = line_sop(5);
        assert!(classify_point(&sop, &[2], opts()).unwrap().class.is_cyclic());
        assert_eq!(classify_point(&sop, &[3], opts()).unwrap().class, GridClass::IndecomposableNoncyclic);
        assert_eq!(classify_point(&sop, &[4], opts()).unwrap().class, GridClass::Decomposable);
    }

    #[test]
    fn plane_border_is_free_cyclic() {
        assert_eq!(classify_point(&plane_sop(), &[1, 7], opts()).unwrap().class, GridClass::FreeCyclic);
    }

    #[test]
    fn grid_order_and_empty_grid() {
        let g = classify_grid(&plane_sop(), 2, opts()).unwrap();
        let ts: Vec<Vec<u32>> = g.points.iter().map(|p| p.t.clone()).collect();
        assert_eq!(ts, vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        assert!(classify_grid(&plane_sop(), 0, opts()).unwrap().points.is_empty());
    }

    #[test]
    fn random_corpus_is_dim1_depth0() {
        for inst in random_dim1_depth0(3, 5) {
            assert_eq!(inst.ring.dim(), 1);
            assert!(inst.ring.depth_is_zero().unwrap());
        }
    }
}
