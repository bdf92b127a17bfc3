//! Monomials and monomial ideals in a fixed polynomial ambient.
//!
//! Everything here is field independent: a monomial ideal is determined by
//! its minimal generators, and every operation is combinatorics on exponent
//! vectors.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported number of ambient variables.
pub const MAX_VARS: usize = 8;

/// Default cap on the number of standard monomials enumerated by
/// [`MonomialIdeal::standard_monomials`].
pub const DEFAULT_LENGTH_CAP: usize = 1_000_000;

/// A monomial `x_1^{e_1} ... x_n^{e_n}`; the zero vector is the monomial 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables(exps.len()));
        }
        Ok(Monomial { exps })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Bitmask of the variables occurring in the monomial.
    pub fn support(&self) -> u32 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |mask, (i, _)| mask | (1 << i))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_ambient(self.nvars(), other.nvars())?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    pub fn pow(&self, k: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<_>>()?;
        Some(Monomial { exps })
    }

    /// `self / gcd(self, other)`: the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a.saturating_sub(*b)).collect(),
        }
    }

    pub fn squarefree_part(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| e.min(1)).collect(),
        }
    }

    /// Multiply by one variable in place.
    pub fn bump(&mut self, index: usize) -> Result<()> {
        let e = &mut self.exps[index];
        *e = e.checked_add(1).ok_or(Error::ExponentOverflow)?;
        Ok(())
    }
}

impl Ord for Monomial {
    /// Canonical graded order: lower degree first; within a degree the
    /// lexicographically larger exponent vector comes first, so that
    /// `x^2 < xy < y^2`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn check_ambient(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::AmbientMismatch { expected, found })
    }
}

/// A monomial ideal stored by its minimal generators in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![Monomial::one(nvars)] }
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(nvars: usize) -> Self {
        Self::minimalize_unchecked(nvars, (0..nvars).map(|i| Monomial::var(nvars, i)).collect())
    }

    /// `m^k`: all monomials of degree `k`.
    pub fn maximal_power(nvars: usize, k: u32) -> Self {
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(Monomial { exps: cur.clone() });
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
        }
        if nvars == 0 {
            return Self::unit(0);
        }
        rec(0, k, &mut cur, &mut out);
        Self::minimalize_unchecked(nvars, out)
    }

    pub fn principal(m: Monomial) -> Self {
        MonomialIdeal { nvars: m.nvars(), gens: vec![m] }
    }

    /// Minimal generating set of the ideal generated by `gens`.
    pub fn minimalize(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables(nvars));
        }
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            check_ambient(nvars, g.nvars())?;
        }
        Ok(Self::minimalize_unchecked(nvars, gens))
    }

    fn minimalize_unchecked(nvars: usize, mut gens: Vec<Monomial>) -> Self {
        // After sorting by degree a generator can only be divided by an
        // earlier one.
        gens.sort();
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        MonomialIdeal { nvars, gens: kept }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    fn check(&self, other: &MonomialIdeal) -> Result<()> {
        check_ambient(self.nvars, other.nvars)
    }

    pub fn contains(&self, u: &Monomial) -> Result<bool> {
        check_ambient(self.nvars, u.nvars())?;
        Ok(self.contains_unchecked(u))
    }

    pub(crate) fn contains_unchecked(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check(other)?;
        Ok(other.gens.iter().all(|g| self.contains_unchecked(g)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        Ok(Self::minimalize_unchecked(
            self.nvars,
            self.gens.iter().chain(&other.gens).cloned().collect(),
        ))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                prods.push(g.mul(h)?);
            }
        }
        Ok(Self::minimalize_unchecked(self.nvars, prods))
    }

    pub fn mul_monomial(&self, u: &Monomial) -> Result<MonomialIdeal> {
        self.product(&MonomialIdeal::principal(u.clone()))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                lcms.push(g.lcm(h));
            }
        }
        Ok(Self::minimalize_unchecked(self.nvars, lcms))
    }

    /// `(self : u)` for a single monomial.
    pub fn colon_monomial(&self, u: &Monomial) -> Result<MonomialIdeal> {
        check_ambient(self.nvars, u.nvars())?;
        Ok(Self::minimalize_unchecked(
            self.nvars,
            self.gens.iter().map(|h| h.colon(u)).collect(),
        ))
    }

    /// `(self : other) = ∩_{g} (self : g)` over the generators of `other`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let mut gens = other.gens.iter();
        let first = gens.next().ok_or(Error::ColonByZero)?;
        let mut acc = self.colon_monomial(first)?;
        for g in gens {
            acc = acc.intersect(&self.colon_monomial(g)?)?;
        }
        Ok(acc)
    }

    /// `(self : other^∞)`, by iterating the colon until it stabilizes.
    pub fn saturation(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut cur = self.clone();
        loop {
            let next = cur.colon(other)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    pub fn radical(&self) -> MonomialIdeal {
        Self::minimalize_unchecked(
            self.nvars,
            self.gens.iter().map(Monomial::squarefree_part).collect(),
        )
    }

    /// Krull dimension of `k[x]/self`; `-1` for the unit ideal.
    pub fn dimension(&self) -> i32 {
        let supports: Vec<u32> = self.gens.iter().map(Monomial::support).collect();
        (0u32..(1 << self.nvars))
            .filter(|s| supports.iter().all(|g| g & !s != 0))
            .map(|s| s.count_ones() as i32)
            .max()
            .unwrap_or(-1)
    }

    /// Exponent of the smallest pure power of each variable among the
    /// generators, if every variable has one.
    fn pure_power_bounds(&self) -> Option<Vec<u32>> {
        let mut bounds = vec![None; self.nvars];
        for g in &self.gens {
            let s = g.support();
            if s.count_ones() == 1 {
                let i = s.trailing_zeros() as usize;
                let e = g.exps[i];
                bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
            } else if s == 0 {
                return Some(vec![0; self.nvars]);
            }
        }
        bounds.into_iter().collect()
    }

    pub fn is_finite_colength(&self) -> bool {
        self.pure_power_bounds().is_some()
    }

    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        self.standard_monomials_capped(DEFAULT_LENGTH_CAP)
    }

    /// All monomials outside the ideal, in canonical order.
    pub fn standard_monomials_capped(&self, cap: usize) -> Result<Vec<Monomial>> {
        let bounds = self.pure_power_bounds().ok_or(Error::InfiniteColength)?;
        let mut out = Vec::new();
        if bounds.contains(&0) {
            return Ok(out);
        }
        let mut cur = vec![0u32; self.nvars];
        'outer: loop {
            let m = Monomial { exps: cur.clone() };
            if !self.contains_unchecked(&m) {
                if out.len() == cap {
                    return Err(Error::LengthCapExceeded { cap });
                }
                out.push(m);
            }
            for i in 0..self.nvars {
                cur[i] += 1;
                if cur[i] < bounds[i] {
                    continue 'outer;
                }
                cur[i] = 0;
            }
            break;
        }
        out.sort();
        Ok(out)
    }

    pub fn length(&self) -> Result<usize> {
        self.length_capped(DEFAULT_LENGTH_CAP)
    }

    pub fn length_capped(&self, cap: usize) -> Result<usize> {
        self.standard_monomials_capped(cap).map(|s| s.len())
    }

    /// Monomials lying in `self` but not in `inner`, i.e. a k-basis of
    /// `self / inner`. `inner` must have finite colength.
    pub fn basis_over(&self, inner: &MonomialIdeal, cap: usize) -> Result<Vec<Monomial>> {
        self.check(inner)?;
        Ok(inner
            .standard_monomials_capped(cap)?
            .into_iter()
            .filter(|u| self.contains_unchecked(u))
            .collect())
    }
}
