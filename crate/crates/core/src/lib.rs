//! Exact computation of `Hom_R(R/a, R/b)` for monomial quotient rings and
//! monomial parameter ideals `b ⊆ a`, with cyclicity, freeness and
//! decomposability decided by certificates that can be re-checked.

pub mod cli;
pub mod decomp;
pub mod error;
pub mod hom;
pub mod lab;
pub mod local;
pub mod monomial;
pub mod text;

pub use decomp::{DecideOptions, DecompositionReport, Method, PrimeFieldMatrix, Verdict, Witness};
pub use error::{Error, Result};
pub use hom::{build_hom, FinitePresentation, HomSubquotient, InnerIdeal};
pub use local::{LocalRing, NonCmPower, ParameterSystem};
pub use monomial::{Monomial, MonomialIdeal};
pub use text::VarNames;
