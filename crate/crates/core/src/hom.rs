//! `Hom_R(R/a, R/b)` realized as the monomial subquotient `(B : a) / B`
//! with `B = I + b`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::decomp::field::{check_prime, PrimeFieldMatrix};
use crate::error::{Error, Result};
use crate::local::{LocalRing, ParameterSystem};
use crate::monomial::{Monomial, MonomialIdeal};

/// Default cap on the number of basis elements of a presentation.
pub const PRESENTATION_CAP: usize = 512;

/// How the smaller parameter ideal `b ⊆ a` is specified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InnerIdeal {
    /// Exponents `t_1..t_d` applied to the parameters of `a`.
    Powers(Vec<u32>),
    /// Explicit parameter monomials.
    Monomials(Vec<Monomial>),
}

/// The module `C / B` for monomial ideals `B ⊆ C`, acted on by the Artinian
/// base ring `S = R/(a + I)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomSubquotient {
    ring: LocalRing,
    outer: MonomialIdeal,
    numerator: MonomialIdeal,
    denominator: MonomialIdeal,
    base: LocalRing,
}

impl HomSubquotient {
    /// `Hom_R(R/a, R/b)` for arbitrary monomial ideals with `I + a` and
    /// `I + b` of finite colength.
    pub fn from_ideals(ring: &LocalRing, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<Self> {
        let outer = ring.extend(a)?;
        let denominator = ring.extend(b)?;
        if !outer.is_finite_colength() || !denominator.is_finite_colength() {
            return Err(Error::Precondition("I + a and I + b must have finite colength".into()));
        }
        if outer.is_unit() {
            return Err(Error::Precondition("a + I is the unit ideal".into()));
        }
        let numerator = denominator.colon(&outer)?;
        let base = LocalRing::new(ring.names().clone(), outer.clone())?;
        Ok(HomSubquotient { ring: ring.clone(), outer, numerator, denominator, base })
    }

    pub fn ring(&self) -> &LocalRing {
        &self.ring
    }

    /// `a + I`.
    pub fn outer(&self) -> &MonomialIdeal {
        &self.outer
    }

    /// `C = (B : a)`.
    pub fn numerator(&self) -> &MonomialIdeal {
        &self.numerator
    }

    /// `B = I + b`.
    pub fn denominator(&self) -> &MonomialIdeal {
        &self.denominator
    }

    /// `S = R/(a + I)`.
    pub fn base(&self) -> &LocalRing {
        &self.base
    }

    /// `B ⊆ C`, `a·C ⊆ B`, and `S` Artinian.
    pub fn check_invariants(&self) -> Result<()> {
        if !self.numerator.contains_ideal(&self.denominator)? {
            return Err(Error::Internal("denominator not contained in numerator".into()));
        }
        if !self.denominator.contains_ideal(&self.outer.product(&self.numerator)?)? {
            return Err(Error::Internal("a·C not contained in B".into()));
        }
        if !self.base.defining().is_finite_colength() {
            return Err(Error::Internal("base ring is not Artinian".into()));
        }
        Ok(())
    }

    /// Monomials of `C` outside `B`, in canonical order.
    pub fn basis(&self) -> Result<Vec<Monomial>> {
        self.numerator.basis_over(&self.denominator, crate::monomial::DEFAULT_LENGTH_CAP)
    }

    pub fn length(&self) -> Result<usize> {
        Ok(self.basis()?.len())
    }

    pub fn base_length(&self) -> Result<usize> {
        self.base.defining().length()
    }

    /// Minimal generators of `C` that are nonzero modulo `B`.
    pub fn generators(&self) -> Vec<Monomial> {
        self.numerator
            .gens()
            .iter()
            .filter(|g| !self.denominator.contains_unchecked(g))
            .cloned()
            .collect()
    }

    /// Minimal number of generators. Distinct monomials are independent, so
    /// this is the number of generators of `C` surviving modulo `m·C + B`.
    pub fn minimal_generator_count(&self) -> usize {
        self.generators().len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.minimal_generator_count() == 1
    }

    /// Free over `S` iff `length(Q) = μ(Q)·length(S)`: the minimal free cover
    /// `S^μ → Q` is onto, so equal lengths force an isomorphism.
    pub fn is_free_over_base(&self) -> Result<bool> {
        Ok(self.length()? == self.minimal_generator_count() * self.base_length()?)
    }

    /// `ann_R(Q) = (B : C)`.
    pub fn annihilator(&self) -> Result<MonomialIdeal> {
        self.denominator.colon(&self.numerator)
    }

    /// A monomial nonzero in `S` that kills `Q`, first in canonical order.
    /// A nonzero module with such an element cannot be free over `S`.
    pub fn non_free_annihilator_witness(&self) -> Result<Option<Monomial>> {
        if self.numerator == self.denominator {
            return Ok(None);
        }
        let ann = self.annihilator()?;
        Ok(self
            .base
            .defining()
            .standard_monomials()?
            .into_iter()
            .find(|u| ann.contains_unchecked(u)))
    }

    pub fn presentation(&self, prime: u64) -> Result<FinitePresentation> {
        self.presentation_capped(prime, PRESENTATION_CAP)
    }

    /// k-linear realization: the monomial basis and one 0/1 matrix per
    /// variable, column `u` holding the image `x_i·u`.
    pub fn presentation_capped(&self, prime: u64, cap: usize) -> Result<FinitePresentation> {
        check_prime(prime)?;
        let basis = self.basis()?;
        if basis.len() > cap {
            return Err(Error::CapExceeded(format!(
                "module length {} exceeds presentation cap {cap}",
                basis.len()
            )));
        }
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let n = basis.len();
        let mut actions = Vec::with_capacity(self.ring.nvars());
        for var in 0..self.ring.nvars() {
            let mut x = PrimeFieldMatrix::zeros(n, n, prime);
            for (col, u) in basis.iter().enumerate() {
                let mut v = u.clone();
                v.bump(var)?;
                if let Some(&row) = index.get(&v) {
                    x.set(row, col, 1);
                }
            }
            actions.push(x);
        }
        Ok(FinitePresentation { basis, actions, prime })
    }
}

/// Build `Hom_R(R/a, R/b)` for a parameter system generating `a` and a
/// parameter ideal `b ⊆ a`.
pub fn build_hom(sop: &ParameterSystem, inner: &InnerIdeal) -> Result<HomSubquotient> {
    let ring = sop.ring();
    let b_params = match inner {
        InnerIdeal::Powers(t) => {
            if t.contains(&0) {
                return Err(Error::Precondition("exponents must be positive".into()));
            }
            sop.powers(t)?
        }
        InnerIdeal::Monomials(ms) => ms.clone(),
    };
    for g in &b_params {
        if !sop.ideal().contains(g)? {
            return Err(Error::Precondition(format!(
                "b is not contained in a: {} ∉ {}",
                ring.fmt_monomial(g),
                ring.fmt_ideal(sop.ideal())
            )));
        }
    }
    ring.validate_sop(b_params.clone())?;
    let a = MonomialIdeal::minimalize(ring.nvars(), sop.params().to_vec())?;
    let b = MonomialIdeal::minimalize(ring.nvars(), b_params)?;
    let q = HomSubquotient::from_ideals(ring, &a, &b)?;
    q.check_invariants()?;
    Ok(q)
}

/// A finite-length module given by a basis and commuting nilpotent action
/// matrices over `F_p` (column `j` of an action is the image of basis
/// vector `j`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinitePresentation {
    basis: Vec<Monomial>,
    actions: Vec<PrimeFieldMatrix>,
    prime: u64,
}

impl FinitePresentation {
    /// Presentation from arbitrary action matrices; basis elements are
    /// labelled `x^0, x^1, ...` in a one-variable ambient.
    pub fn from_actions(n: usize, actions: Vec<PrimeFieldMatrix>, prime: u64) -> Result<Self> {
        check_prime(prime)?;
        for a in &actions {
            if a.rows() != n || a.cols() != n || a.prime() != prime {
                return Err(Error::Precondition("action matrix has wrong shape or prime".into()));
            }
        }
        for (i, a) in actions.iter().enumerate() {
            for b in &actions[i + 1..] {
                if !a.commutes_with(b) {
                    return Err(Error::Precondition("action matrices do not commute".into()));
                }
            }
        }
        let basis = (0..n)
            .map(|k| Monomial::from_exponents(vec![k as u32]))
            .collect::<Result<Vec<_>>>()?;
        Ok(FinitePresentation { basis, actions, prime })
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn actions(&self) -> &[PrimeFieldMatrix] {
        &self.actions
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// Same module structure over another prime field. Only 0/1 actions
    /// have a prime-independent meaning, so anything else is rejected.
    pub fn with_prime(&self, prime: u64) -> Result<Self> {
        check_prime(prime)?;
        if self.actions.iter().any(|a| a.entries().iter().any(|&v| v > 1)) {
            return Err(Error::Precondition("only 0/1 action matrices can change prime".into()));
        }
        let actions = self
            .actions
            .iter()
            .map(|a| PrimeFieldMatrix::from_entries(a.rows(), a.cols(), prime, a.entries().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Ok(FinitePresentation { basis: self.basis.clone(), actions, prime })
    }

    /// Restriction to a subset of basis indices spanning a submodule.
    pub fn restrict(&self, block: &[usize]) -> FinitePresentation {
        let m = block.len();
        let actions = self
            .actions
            .iter()
            .map(|a| {
                let mut r = PrimeFieldMatrix::zeros(m, m, self.prime);
                for (i, &bi) in block.iter().enumerate() {
                    for (j, &bj) in block.iter().enumerate() {
                        r.set(i, j, a.get(bi, bj));
                    }
                }
                r
            })
            .collect();
        FinitePresentation {
            basis: block.iter().map(|&i| self.basis[i].clone()).collect(),
            actions,
            prime: self.prime,
        }
    }

    pub fn actions_commute(&self) -> bool {
        self.actions
            .iter()
            .enumerate()
            .all(|(i, a)| self.actions[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    pub fn actions_nilpotent(&self) -> bool {
        self.actions.iter().all(PrimeFieldMatrix::is_nilpotent)
    }
}
