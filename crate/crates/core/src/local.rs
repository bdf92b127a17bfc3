//! Monomial quotient rings `k[x]/I`, read as stand-ins for the local rings
//! `k[[x]]/I`, together with parameter systems and the depth-type tests the
//! Hom computations rely on.
//!
//! For monomial data every invariant used here (colons, intersections,
//! socles, saturations, lengths) is the same in the polynomial quotient and
//! in its completion at the homogeneous maximal ideal.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::text::VarNames;

/// Default iteration cap for [`LocalRing::stabilization_index`].
pub const STABILIZATION_CAP: u32 = 4096;

/// Default cap on the power `s` tried per parameter by
/// [`ParameterSystem::find_non_cm_power`].
pub const NON_CM_POWER_CAP: u32 = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalRing {
    names: VarNames,
    defining: MonomialIdeal,
    dim: i32,
}

impl LocalRing {
    pub fn new(names: VarNames, defining: MonomialIdeal) -> Result<Self> {
        if names.len() != defining.nvars() {
            return Err(Error::AmbientMismatch { expected: names.len(), found: defining.nvars() });
        }
        if defining.is_unit() {
            return Err(Error::ZeroRing);
        }
        let dim = defining.dimension();
        Ok(LocalRing { names, defining, dim })
    }

    /// Ring over the standard variable names `x, y, z, ...`.
    pub fn with_standard_names(defining: MonomialIdeal) -> Result<Self> {
        Self::new(VarNames::standard(defining.nvars())?, defining)
    }

    /// Parse `relations` (an ideal in text syntax) over the given variables.
    pub fn parse(vars: &[&str], relations: &str) -> Result<Self> {
        let names = VarNames::new(vars.iter().copied())?;
        let defining = names.parse_ideal(relations)?;
        Self::new(names, defining)
    }

    pub fn names(&self) -> &VarNames {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.defining.nvars()
    }

    pub fn defining(&self) -> &MonomialIdeal {
        &self.defining
    }

    pub fn maximal_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::maximal(self.nvars())
    }

    pub fn dim(&self) -> usize {
        // A nonzero ring has dimension >= 0.
        self.dim as usize
    }

    pub fn monomial(&self, text: &str) -> Result<Monomial> {
        self.names.parse_monomial(text)
    }

    pub fn ideal(&self, text: &str) -> Result<MonomialIdeal> {
        self.names.parse_ideal(text)
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        self.names.format_monomial(m)
    }

    pub fn fmt_ideal(&self, i: &MonomialIdeal) -> String {
        self.names.format_ideal(i)
    }

    /// `I + J` as a ring ideal.
    pub fn extend(&self, j: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.defining.sum(j)
    }

    /// The ring `R/J`; for the cyclic module `M = R/J` this is `R/ann(M)`,
    /// the ring through which all module questions are answered.
    pub fn annihilator_reduce(&self, j: &MonomialIdeal) -> Result<LocalRing> {
        let defining = self.extend(j)?;
        if defining.is_unit() {
            return Err(Error::Precondition("I + J is the unit ideal: the module is zero".into()));
        }
        LocalRing::new(self.names.clone(), defining)
    }

    pub fn quotient_by(&self, u: &Monomial) -> Result<LocalRing> {
        self.annihilator_reduce(&MonomialIdeal::principal(u.clone()))
    }

    /// `I + (params)` has finite colength and the count equals `dim R`.
    pub fn validate_sop(&self, params: Vec<Monomial>) -> Result<ParameterSystem> {
        for p in &params {
            if p.nvars() != self.nvars() {
                return Err(Error::AmbientMismatch { expected: self.nvars(), found: p.nvars() });
            }
        }
        if params.len() != self.dim() {
            return Err(Error::NotParameterSystem(format!(
                "expected {} parameters for a ring of dimension {}, got {}",
                self.dim(),
                self.dim(),
                params.len()
            )));
        }
        let ideal = self.extend(&MonomialIdeal::minimalize(self.nvars(), params.clone())?)?;
        if !ideal.is_finite_colength() {
            return Err(Error::NotParameterSystem(format!(
                "{} does not have finite colength",
                self.fmt_ideal(&ideal)
            )));
        }
        Ok(ParameterSystem { ring: self.clone(), params, ideal })
    }

    pub fn parse_sop(&self, texts: &[&str]) -> Result<ParameterSystem> {
        let params = texts.iter().map(|t| self.monomial(t)).collect::<Result<Vec<_>>>()?;
        self.validate_sop(params)
    }

    /// A monomial `v ∉ I` with `u·v ∈ I`, if `u` is a zero-divisor.
    pub fn zero_divisor_witness(&self, u: &Monomial) -> Result<Option<Monomial>> {
        if self.defining.contains(u)? {
            return Err(Error::ZeroElement);
        }
        let colon = self.defining.colon_monomial(u)?;
        Ok(colon.gens().iter().find(|g| !self.defining.contains_unchecked(g)).cloned())
    }

    /// `(I : u) = I`.
    pub fn is_regular_element(&self, u: &Monomial) -> Result<bool> {
        Ok(self.zero_divisor_witness(u)?.is_none())
    }

    /// Regular on `R`, then on `R/(u_1)`, and so on. The empty sequence is
    /// regular.
    pub fn is_regular_sequence(&self, seq: &[Monomial]) -> Result<bool> {
        let mut ring = self.clone();
        for (k, u) in seq.iter().enumerate() {
            if !ring.is_regular_element(u)? {
                return Ok(false);
            }
            if k + 1 < seq.len() {
                ring = ring.quotient_by(u)?;
            }
        }
        Ok(true)
    }

    /// Socle `(I : m)`.
    pub fn socle_ideal(&self) -> Result<MonomialIdeal> {
        self.defining.colon(&self.maximal_ideal())
    }

    /// A nonzero socle monomial, first in canonical order.
    pub fn socle_witness(&self) -> Result<Option<Monomial>> {
        let soc = self.socle_ideal()?;
        Ok(self.nonzero_monomials(&soc)?.into_iter().next())
    }

    pub fn depth_is_zero(&self) -> Result<bool> {
        Ok(self.socle_ideal()? != self.defining)
    }

    /// `(I : m^∞)`; `Γ_m(R)` is this ideal modulo `I`.
    pub fn gamma_m(&self) -> Result<MonomialIdeal> {
        self.defining.saturation(&self.maximal_ideal())
    }

    /// Monomials of `K` not in `I`, for an ideal `K ⊇ I` with `K/I` of
    /// finite length (for example `Γ_m`). Found by walking up from the
    /// generators of `K`.
    pub fn nonzero_monomials(&self, k: &MonomialIdeal) -> Result<Vec<Monomial>> {
        let mut seen = BTreeSet::new();
        let mut stack: Vec<Monomial> =
            k.gens().iter().filter(|g| !self.defining.contains_unchecked(g)).cloned().collect();
        while let Some(u) = stack.pop() {
            if !seen.insert(u.clone()) {
                continue;
            }
            if seen.len() > crate::monomial::DEFAULT_LENGTH_CAP {
                return Err(Error::InfiniteColength);
            }
            for i in 0..self.nvars() {
                let mut v = u.clone();
                v.bump(i)?;
                if !self.defining.contains_unchecked(&v) && !seen.contains(&v) {
                    stack.push(v);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    pub fn stabilization_index(&self) -> Result<u32> {
        self.stabilization_index_capped(STABILIZATION_CAP)
    }

    /// Smallest `n ≥ 0` with `(m^n + I) ∩ (I : m^∞) ⊆ I`, i.e.
    /// `m^n R ∩ Γ_m(R) = 0`.
    pub fn stabilization_index_capped(&self, cap: u32) -> Result<u32> {
        let sat = self.gamma_m()?;
        let n = self.nvars();
        for k in 0..=cap {
            let mk = self.extend(&MonomialIdeal::maximal_power(n, k))?;
            if self.defining.contains_ideal(&mk.intersect(&sat)?)? {
                return Ok(k);
            }
        }
        Err(Error::SearchExhausted(format!("stabilization index exceeds {cap}")))
    }

    /// Both sides of the colon identity
    /// `(b a^r L : a^p) = a^{r-q} (b a^q L : a^p) + (0 :_L a^p)` for the
    /// submodule `L` of `R` given by a monomial ideal, as ideals between `I`
    /// and `L + I`.
    pub fn colon_identity_sides(
        &self,
        l: &MonomialIdeal,
        a: &Monomial,
        b: &Monomial,
        p: u32,
        q: u32,
        r: u32,
    ) -> Result<(MonomialIdeal, MonomialIdeal)> {
        if !(1 <= p && p <= q && q <= r) {
            return Err(Error::Precondition(format!("need 1 <= p <= q <= r, got ({p}, {q}, {r})")));
        }
        let i = &self.defining;
        let lt = self.extend(l)?;
        let ap = a.pow(p)?;
        // (b a^e L :_L a^p) computed inside R, then intersected with L.
        let colon_in_l = |e: u32| -> Result<MonomialIdeal> {
            let bael = lt.mul_monomial(&b.mul(&a.pow(e)?)?)?.sum(i)?;
            lt.intersect(&bael.colon_monomial(&ap)?)
        };
        let lhs = colon_in_l(r)?;
        let ann = lt.intersect(&i.colon_monomial(&ap)?)?;
        let rhs = colon_in_l(q)?
            .mul_monomial(&a.pow(r - q)?)?
            .sum(i)?
            .sum(&ann)?;
        Ok((lhs, rhs))
    }

    pub fn colon_identity_check(
        &self,
        l: &MonomialIdeal,
        a: &Monomial,
        b: &Monomial,
        p: u32,
        q: u32,
        r: u32,
    ) -> Result<bool> {
        let (lhs, rhs) = self.colon_identity_sides(l, a, b, p, q, r)?;
        Ok(lhs == rhs)
    }
}

/// A validated system of parameters `a_1, ..., a_d` of a [`LocalRing`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterSystem {
    ring: LocalRing,
    params: Vec<Monomial>,
    ideal: MonomialIdeal,
}

/// Result of the non-Cohen–Macaulay power search: `R/(a_index^exponent)` is
/// not Cohen–Macaulay. `index` is 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonCmPower {
    pub index: usize,
    pub exponent: u32,
}

impl ParameterSystem {
    pub fn ring(&self) -> &LocalRing {
        &self.ring
    }

    pub fn params(&self) -> &[Monomial] {
        &self.params
    }

    /// `(a_1, ..., a_d) + I`.
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    /// Cohen–Macaulay iff the parameters form a regular sequence; the
    /// answer does not depend on the chosen system.
    pub fn is_cohen_macaulay(&self) -> Result<bool> {
        self.ring.is_regular_sequence(&self.params)
    }

    /// Length of the longest regular prefix of the parameters, a lower bound
    /// for the depth.
    pub fn depth_lower_bound(&self) -> Result<usize> {
        let mut ring = self.ring.clone();
        for (k, u) in self.params.iter().enumerate() {
            if !ring.is_regular_element(u)? {
                return Ok(k);
            }
            ring = ring.quotient_by(u)?;
        }
        Ok(self.params.len())
    }

    /// Parameters raised to the given exponents.
    pub fn powers(&self, exps: &[u32]) -> Result<Vec<Monomial>> {
        if exps.len() != self.params.len() {
            return Err(Error::Precondition(format!(
                "expected {} exponents, got {}",
                self.params.len(),
                exps.len()
            )));
        }
        self.params.iter().zip(exps).map(|(a, &t)| a.pow(t)).collect()
    }

    /// The ring `R/(a_index^s)` with the remaining parameters as its system.
    pub fn drop_power(&self, index: usize, s: u32) -> Result<ParameterSystem> {
        let ring = self.ring.quotient_by(&self.params[index].pow(s)?)?;
        let rest: Vec<Monomial> = self
            .params
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != index)
            .map(|(_, m)| m.clone())
            .collect();
        ring.validate_sop(rest)
    }

    pub fn find_non_cm_power(&self) -> Result<NonCmPower> {
        self.find_non_cm_power_capped(NON_CM_POWER_CAP)
    }

    /// Search for `(i, s)` with `R/(a_i^s)` not Cohen–Macaulay, trying a
    /// regular parameter first and then powers `s = 1, 2, ...` in order.
    pub fn find_non_cm_power_capped(&self, cap: u32) -> Result<NonCmPower> {
        if self.ring.dim() < 2 {
            return Err(Error::Precondition("dimension at least two required".into()));
        }
        if self.is_cohen_macaulay()? {
            return Err(Error::Precondition("ring is Cohen-Macaulay".into()));
        }
        for (index, a) in self.params.iter().enumerate() {
            if self.ring.is_regular_element(a)? {
                return Ok(NonCmPower { index, exponent: 1 });
            }
        }
        for exponent in 1..=cap {
            for index in 0..self.params.len() {
                if !self.drop_power(index, exponent)?.is_cohen_macaulay()? {
                    return Ok(NonCmPower { index, exponent });
                }
            }
        }
        Err(Error::SearchExhausted(format!(
            "every R/(a_i^s) with s <= {cap} is Cohen-Macaulay; needs manual review"
        )))
    }
}
