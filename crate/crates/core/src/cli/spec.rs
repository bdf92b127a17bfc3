//! Ring-spec files.
//!
//! ```text
//! # comment
//! ring x y z
//! relations x^2 xyz
//! sop y z
//! prime 101
//! seed 7
//! ```
//!
//! `ring` is required; every other section is optional and appears at most
//! once.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::local::{LocalRing, ParameterSystem};
use crate::monomial::MonomialIdeal;
use crate::text::VarNames;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    pub vars: Vec<String>,
    pub relations: Vec<String>,
    pub sop: Option<Vec<String>>,
    pub prime: Option<u64>,
    pub seed: Option<u64>,
}

fn line_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

impl RingSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let mut vars: Option<(usize, Vec<String>)> = None;
        let mut relations: Option<(usize, Vec<String>)> = None;
        let mut sop: Option<(usize, Vec<String>)> = None;
        let mut prime = None;
        let mut seed = None;
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut words = content.split_whitespace();
            let key = words.next().expect("non-empty line");
            let rest: Vec<String> = words.flat_map(|w| w.split(',')).filter(|w| !w.is_empty()).map(String::from).collect();
            let dup = |seen: bool| if seen { Err(line_err(line, format!("duplicate section `{key}`"))) } else { Ok(()) };
            match key {
                "ring" => {
                    dup(vars.is_some())?;
                    vars = Some((line, rest));
                }
                "relations" => {
                    dup(relations.is_some())?;
                    relations = Some((line, rest));
                }
                "sop" => {
                    dup(sop.is_some())?;
                    sop = Some((line, rest));
                }
                "prime" | "seed" => {
                    dup(if key == "prime" { prime.is_some() } else { seed.is_some() })?;
                    let [v] = rest.as_slice() else {
                        return Err(line_err(line, format!("`{key}` takes one integer")));
                    };
                    let v: u64 = v.parse().map_err(|_| line_err(line, format!("`{v}` is not an integer")))?;
                    if key == "prime" {
                        prime = Some(v);
                    } else {
                        seed = Some(v);
                    }
                }
                other => return Err(line_err(line, format!("unknown key `{other}`"))),
            }
        }
        let (vline, vars) = vars.ok_or_else(|| Error::Parse("missing `ring` line".into()))?;
        let names = VarNames::new(vars.clone()).map_err(|e| line_err(vline, e))?;
        for (line, items) in relations.iter().chain(sop.iter()) {
            for item in items {
                names.parse_monomial(item).map_err(|e| line_err(*line, e))?;
            }
        }
        Ok(RingSpec {
            vars,
            relations: relations.map(|r| r.1).unwrap_or_default(),
            sop: sop.map(|s| s.1),
            prime,
            seed,
        })
    }

    pub fn read(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("ring {}\n", self.vars.join(" "));
        if !self.relations.is_empty() {
            let _ = writeln!(out, "relations {}", self.relations.join(" "));
        }
        if let Some(sop) = &self.sop {
            let _ = writeln!(out, "sop {}", sop.join(" "));
        }
        if let Some(p) = self.prime {
            let _ = writeln!(out, "prime {p}");
        }
        if let Some(s) = self.seed {
            let _ = writeln!(out, "seed {s}");
        }
        out
    }

    pub fn names(&self) -> Result<VarNames> {
        VarNames::new(self.vars.clone())
    }

    pub fn ring(&self) -> Result<LocalRing> {
        let names = self.names()?;
        let gens = self.relations.iter().map(|r| names.parse_monomial(r)).collect::<Result<Vec<_>>>()?;
        let defining = MonomialIdeal::minimalize(names.len(), gens)?;
        LocalRing::new(names, defining)
    }

    pub fn sop(&self, ring: &LocalRing) -> Result<Option<ParameterSystem>> {
        let Some(texts) = &self.sop else { return Ok(None) };
        let refs: Vec<&str> = texts.iter().map(String::as_str).collect();
        ring.parse_sop(&refs).map(Some)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_line_spec() {
        let s = RingSpec::parse("ring x y\nrelations x^2 xy^3\nsop y^2").unwrap();
        let r = s.ring().unwrap();
        assert_eq!(r.fmt_ideal(r.defining()), "(x^2, xy^3)");
        assert_eq!(s.sop(&r).unwrap().unwrap().len(), 1);
    }

    #[test]
    fn parses_comments_and_options() {
        let s = RingSpec::parse("# plane\nring x y z  # vars\n\nrelations x^2, xyz\nsop y z\nprime 101\nseed 3\n").unwrap();
        assert_eq!(s.relations, ["x^2", "xyz"]);
        assert_eq!(s.prime, Some(101));
        assert_eq!(s.seed, Some(3));
    }

    #[test]
    fn reports_line_numbers() {
        let e = RingSpec::parse("ring x x").unwrap_err();
        assert!(e.to_string().contains("line 1") && e.to_string().contains("duplicate variable"), "{e}");
        let e = RingSpec::parse("ring x y\nrelations x^2 q").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        let e = RingSpec::parse("ring x\nring y").unwrap_err();
        assert!(e.to_string().contains("line 2: duplicate section"), "{e}");
        let e = RingSpec::parse("ring x\ncolour red").unwrap_err();
        assert!(e.to_string().contains("unknown key"), "{e}");
        assert!(RingSpec::parse("relations x").is_err());
    }

    #[test]
    fn round_trips() {
        let s = RingSpec::parse("ring x y z\nrelations x^2 xyz\nsop y z\nseed 9").unwrap();
        assert_eq!(RingSpec::parse(&s.serialize()).unwrap(), s);
    }
}
