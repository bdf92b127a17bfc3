//! Text syntax for monomials and ideals over a list of named variables.
//!
//! Monomials are products of `var^exp` factors (`^1` optional, `*`
//! separators allowed), `1` is the empty monomial: `x^2`, `xy^3`, `xyz`.
//! Ideals are comma separated monomial lists in parentheses: `(x^2, xy^3)`.
//! `(0)` and `()` denote the zero ideal.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, MAX_VARS};

/// Ordered, distinct, alphabetic variable names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarNames(Vec<String>);

const DEFAULT_NAMES: [&str; MAX_VARS] = ["x", "y", "z", "w", "u", "v", "s", "t"];

impl VarNames {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().all(|c| c.is_ascii_alphabetic()) {
                return Err(Error::Parse(format!("variable name {n:?} is not alphabetic")));
            }
            if names[..i].contains(n) {
                return Err(Error::Parse(format!("duplicate variable {n:?}")));
            }
        }
        Ok(VarNames(names))
    }

    /// `x, y, z, w, ...` for up to eight variables.
    pub fn standard(nvars: usize) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables(nvars));
        }
        Self::new(DEFAULT_NAMES[..nvars].iter().copied())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    /// Longest variable name matching a prefix of `s`.
    fn match_var(&self, s: &str) -> Option<(usize, usize)> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, n)| s.starts_with(n.as_str()))
            .max_by_key(|(_, n)| n.len())
            .map(|(i, n)| (i, n.len()))
    }

    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        let mut exps = vec![0u32; self.len()];
        if s == "1" {
            return Monomial::from_exponents(exps);
        }
        let mut rest = s.as_str();
        while !rest.is_empty() {
            rest = rest.strip_prefix('*').unwrap_or(rest);
            let (var, len) = self
                .match_var(rest)
                .ok_or_else(|| Error::Parse(format!("undeclared variable at {rest:?} in {text:?}")))?;
            rest = &rest[len..];
            let mut exp = 1u32;
            if let Some(after) = rest.strip_prefix('^') {
                let digits = after.chars().take_while(char::is_ascii_digit).count();
                if digits == 0 {
                    return Err(Error::Parse(format!("missing exponent in {text:?}")));
                }
                exp = after[..digits]
                    .parse()
                    .map_err(|_| Error::Parse(format!("exponent too large in {text:?}")))?;
                rest = &after[digits..];
            }
            exps[var] = exps[var].checked_add(exp).ok_or(Error::ExponentOverflow)?;
        }
        Monomial::from_exponents(exps)
    }

    pub fn parse_ideal(&self, text: &str) -> Result<MonomialIdeal> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        if inner.is_empty() || inner == "0" {
            return Ok(MonomialIdeal::zero(self.len()));
        }
        let gens = inner
            .split(',')
            .map(|g| self.parse_monomial(g))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(self.len(), gens)
    }

    /// Whitespace or comma separated monomials, as in ring files.
    pub fn parse_monomial_list(&self, text: &str) -> Result<Vec<Monomial>> {
        text.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| self.parse_monomial(t))
            .collect()
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        // Multi-letter names need explicit separators to re-parse.
        let sep = if self.0.iter().any(|n| n.len() > 1) { "*" } else { "" };
        let mut out = String::new();
        for (name, &e) in self.0.iter().zip(m.exponents()) {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push_str(sep);
            }
            out.push_str(name);
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        out
    }

    pub fn format_ideal(&self, i: &MonomialIdeal) -> String {
        if i.is_zero() {
            return "(0)".into();
        }
        let parts: Vec<String> = i.gens().iter().map(|g| self.format_monomial(g)).collect();
        format!("({})", parts.join(", "))
    }

    pub fn format_monomials(&self, ms: &[Monomial]) -> Vec<String> {
        ms.iter().map(|m| self.format_monomial(m)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_juxtaposed_factors() {
        let v = VarNames::standard(3).unwrap();
        assert_eq!(v.parse_monomial("xy^3").unwrap().exponents(), &[1, 3, 0]);
        assert_eq!(v.parse_monomial("xyz").unwrap().exponents(), &[1, 1, 1]);
        assert_eq!(v.parse_monomial("x*x^2").unwrap().exponents(), &[3, 0, 0]);
        assert!(v.parse_monomial("1").unwrap().is_one());
        assert!(v.parse_monomial("xq").is_err());
        assert!(v.parse_monomial("x^").is_err());
    }

    #[test]
    fn parses_ideals() {
        let v = VarNames::standard(2).unwrap();
        let i = v.parse_ideal("(x^2, xy^2, y^2)").unwrap();
        assert_eq!(v.format_ideal(&i), "(x^2, y^2)");
        assert!(v.parse_ideal("(0)").unwrap().is_zero());
        assert!(v.parse_ideal("()").unwrap().is_zero());
        assert!(v.parse_ideal("(1)").unwrap().is_unit());
    }

    #[test]
    fn rejects_bad_names() {
        assert!(VarNames::new(["x", "x"]).is_err());
        assert!(VarNames::new(["x1"]).is_err());
    }

    #[test]
    fn multi_letter_names_round_trip() {
        let v = VarNames::new(["a", "ab"]).unwrap();
        let m = v.parse_monomial("ab^2*a").unwrap();
        assert_eq!(m.exponents(), &[1, 2]);
        assert_eq!(v.parse_monomial(&v.format_monomial(&m)).unwrap(), m);
    }
}
