//! Exhaustive idempotent search over `F_2`, independent of the algebraic
//! engine and used to cross-check it on small modules.

use crate::decomp::engine::{commutant, Verdict};
use crate::error::{Error, Result};
use crate::hom::FinitePresentation;

/// Largest commutant dimension the oracle will enumerate.
pub const ORACLE_CAP: usize = 16;

/// Enumerate all `2^r` elements of `End(M)` over `F_2` and report whether
/// one of them is an idempotent other than 0 and 1.
pub fn brute_force_idempotent_oracle(pres: &FinitePresentation) -> Result<Verdict> {
    let pres = pres.with_prime(2)?;
    let a = commutant(&pres)?;
    let r = a.dim();
    if r > ORACLE_CAP {
        return Err(Error::CapExceeded(format!("commutant dimension {r} exceeds oracle cap {ORACLE_CAP}")));
    }
    let basis = a.basis();
    let mut cur = crate::decomp::field::PrimeFieldMatrix::zeros(pres.dim(), pres.dim(), 2);
    // Gray code: step k toggles basis element trailing_zeros(k).
    for k in 1u64..(1u64 << r) {
        let bit = k.trailing_zeros() as usize;
        cur = cur.add(&basis[bit]);
        if !cur.is_identity() && cur.is_idempotent() {
            return Ok(Verdict::Decomposable);
        }
    }
    Ok(Verdict::Indecomposable)
}
