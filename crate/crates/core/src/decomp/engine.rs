//! Decomposability of a finite module `M` over `F_p[x_1..x_n]` from its
//! action matrices.
//!
//! `M` decomposes iff `End(M)` has an idempotent other than 0 and 1. The
//! engine tries, in order: disconnected supports of the action graph, then
//! the semisimple quotient `End(M)/rad` (commutative: Frobenius-fixed
//! elements; otherwise Fitting splits of random endomorphisms). Every
//! positive answer carries an idempotent or block partition that is
//! re-verified against the actions before it is returned.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::decomp::algebra::{linear_relation, roots_in_prime_field, StructAlgebra};
use crate::decomp::field::{self, next_prime_above, Echelon, PrimeFieldMatrix, SparseEchelon};
use crate::error::{Error, Result};
use crate::hom::FinitePresentation;

/// Largest module dimension for which the commutant is computed.
pub const COMMUTANT_CAP: usize = 160;

/// Default number of random endomorphisms tried in the noncommutative case.
pub const DEFAULT_ATTEMPTS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Decomposable,
    Indecomposable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Components,
    Frobenius,
    Fitting,
    BruteForce,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Basis indices split into blocks with no action between them.
    Components { blocks: Vec<Vec<usize>> },
    /// A nontrivial idempotent endomorphism and the dimensions of its
    /// image and kernel.
    Idempotent { idempotent: PrimeFieldMatrix, image_dim: usize, kernel_dim: usize },
    /// `End(M)/rad` is a field of the given degree over `F_p`, so `End(M)`
    /// is local.
    LocalEndomorphismRing { residue_degree: usize },
    /// Wedderburn theory forces a splitting but no idempotent was found
    /// within the search budget.
    Pending,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub verdict: Verdict,
    /// Number of indecomposable summands, when known.
    pub summand_count: Option<usize>,
    pub witness: Witness,
    pub method: Method,
    pub prime: u64,
    /// Dimension of `End(M)`, when it was computed.
    pub commutant_dim: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecideOptions {
    pub seed: u64,
    pub attempts: usize,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions { seed: 0, attempts: DEFAULT_ATTEMPTS }
    }
}

/// Blocks of basis indices connected by nonzero action entries, each sorted,
/// ordered by smallest index.
pub fn connected_components(pres: &FinitePresentation) -> Vec<Vec<usize>> {
    let n = pres.dim();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for a in pres.actions() {
        for r in 0..n {
            for c in 0..n {
                if a.get(r, c) != 0 {
                    let (x, y) = (find(&mut parent, r), find(&mut parent, c));
                    if x != y {
                        parent[x.max(y)] = x.min(y);
                    }
                }
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut root_block = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if root_block[r] == usize::MAX {
            root_block[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[root_block[r]].push(i);
    }
    blocks
}

/// `End(M)` as a subspace of `n × n` matrices, kept in reduced echelon form
/// over the row-major flattening.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    n: usize,
    p: u64,
    space: Echelon,
}

impl EndAlgebra {
    pub fn dim(&self) -> usize {
        self.space.rank()
    }

    pub fn module_dim(&self) -> usize {
        self.n
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn basis(&self) -> Vec<PrimeFieldMatrix> {
        self.space.rows().iter().map(|r| self.to_matrix(r)).collect()
    }

    fn to_matrix(&self, flat: &[u64]) -> PrimeFieldMatrix {
        PrimeFieldMatrix::from_entries(self.n, self.n, self.p, flat.to_vec()).expect("square flattening")
    }

    pub fn contains(&self, m: &PrimeFieldMatrix) -> bool {
        self.space.contains(m.entries())
    }

    pub fn coords(&self, m: &PrimeFieldMatrix) -> Option<Vec<u64>> {
        self.space.coords(m.entries())
    }

    /// `Σ c_i b_i`.
    pub fn element(&self, coords: &[u64]) -> PrimeFieldMatrix {
        let mut flat = vec![0u64; self.n * self.n];
        for (c, row) in coords.iter().zip(self.space.rows()) {
            if *c == 0 {
                continue;
            }
            for (a, &b) in flat.iter_mut().zip(row) {
                if b != 0 {
                    *a = field::add(*a, field::mul(*c, b, self.p), self.p);
                }
            }
        }
        self.to_matrix(&flat)
    }

    /// Structure constants in the echelon basis; fails if the span is not
    /// closed under products or does not contain the identity.
    pub fn structure(&self) -> Result<StructAlgebra> {
        let basis = self.basis();
        let d = basis.len();
        let mut table = Vec::with_capacity(d * d);
        for bi in &basis {
            for bj in &basis {
                let c = self
                    .coords(&bi.mul(bj))
                    .ok_or_else(|| Error::Internal("commutant is not closed under products".into()))?;
                table.push(c.into_iter().enumerate().filter(|t| t.1 != 0).collect());
            }
        }
        let one = self
            .coords(&PrimeFieldMatrix::identity(self.n, self.p))
            .ok_or_else(|| Error::Internal("commutant does not contain the identity".into()))?;
        Ok(StructAlgebra::from_sparse(self.p, d, table, one))
    }
}

/// Solve `[φ, X_i] = 0` for all actions as a sparse linear system in the
/// `n²` entries of `φ`.
pub fn commutant(pres: &FinitePresentation) -> Result<EndAlgebra> {
    let n = pres.dim();
    if n > COMMUTANT_CAP {
        return Err(Error::CapExceeded(format!("module dimension {n} exceeds commutant cap {COMMUTANT_CAP}")));
    }
    let p = pres.prime();
    let mut sys = SparseEchelon::new(n * n, p);
    for x in pres.actions() {
        let mut col_nz: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
        let mut row_nz: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
        for r in 0..n {
            for c in 0..n {
                let v = x.get(r, c);
                if v != 0 {
                    col_nz[c].push((r, v));
                    row_nz[r].push((c, v));
                }
            }
        }
        // (φX - Xφ)_{rc} = Σ_k φ_{rk} X_{kc} - Σ_k X_{rk} φ_{kc}
        for r in 0..n {
            for c in 0..n {
                let terms = col_nz[c]
                    .iter()
                    .map(|&(k, v)| (r * n + k, v))
                    .chain(row_nz[r].iter().map(|&(k, v)| (k * n + c, field::neg(v, p))));
                sys.insert(terms);
            }
        }
    }
    let space = Echelon::from_rows(n * n, p, sys.null_space());
    Ok(EndAlgebra { n, p, space })
}

/// The Jacobson radical of `End(M)`, as coordinate vectors in the basis of
/// `A`, together with the matrices they represent.
pub fn algebra_radical(a: &EndAlgebra) -> Result<Vec<PrimeFieldMatrix>> {
    let s = a.structure()?;
    let rad = s.radical()?;
    Ok(rad.rows().iter().map(|c| a.element(c)).collect())
}

/// Number of simple factors of a commutative semisimple algebra.
pub fn count_field_factors(d: &StructAlgebra) -> Result<usize> {
    Ok(d.frobenius_fixed_space()?.len())
}

/// Fitting decomposition `M = im φ^n ⊕ ker φ^n` for an endomorphism `φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FittingSplit {
    pub image: Vec<Vec<u64>>,
    pub kernel: Vec<Vec<u64>>,
    /// Projection onto the image along the kernel.
    pub idempotent: PrimeFieldMatrix,
}

/// `None` when `φ` is nilpotent or invertible (the split is trivial).
pub fn fitting_split(pres: &FinitePresentation, phi: &PrimeFieldMatrix) -> Result<Option<FittingSplit>> {
    if !pres.actions().iter().all(|x| x.commutes_with(phi)) {
        return Err(Error::NotInCommutant);
    }
    let n = pres.dim();
    let psi = phi.pow(n as u64);
    let image = psi.image();
    if image.is_empty() || image.len() == n {
        return Ok(None);
    }
    let kernel = psi.kernel();
    let mut cols = image.clone();
    cols.extend(kernel.iter().cloned());
    let t = PrimeFieldMatrix::from_columns(n, pres.prime(), &cols);
    let t_inv = t.inverse().ok_or_else(|| Error::Internal("Fitting pieces do not span".into()))?;
    let mut proj = PrimeFieldMatrix::zeros(n, n, pres.prime());
    for i in 0..image.len() {
        proj.set(i, i, 1);
    }
    let idempotent = t.mul(&proj).mul(&t_inv);
    Ok(Some(FittingSplit { image, kernel, idempotent }))
}

fn lagrange_idempotent(z: &PrimeFieldMatrix, roots: &[u64]) -> PrimeFieldMatrix {
    let p = z.prime();
    let n = z.rows();
    let lam = roots[0];
    let mut e = PrimeFieldMatrix::identity(n, p);
    for &mu in &roots[1..] {
        let mut f = z.clone();
        f.add_scaled(&PrimeFieldMatrix::identity(n, p), field::neg(mu, p));
        e = e.mul(&f).scale(field::inv(field::sub(lam, mu, p), p));
    }
    e
}

/// From an element `φ` of `End(M)`, try to produce a nontrivial idempotent:
/// first a Fitting split, then Berlekamp on the semisimple part of `φ`.
fn idempotent_from(pres: &FinitePresentation, phi: &PrimeFieldMatrix) -> Result<Option<PrimeFieldMatrix>> {
    if let Some(split) = fitting_split(pres, phi)? {
        return Ok(Some(split.idempotent));
    }
    let n = pres.dim();
    let p = pres.prime();
    // ψ = φ^{p^k} with p^k ≥ n kills the nilpotent part.
    let mut psi = phi.clone();
    let mut pk = 1u64;
    while pk < n as u64 {
        psi = psi.pow(p);
        pk = pk.saturating_mul(p);
    }
    // Krylov basis 1, ψ, ψ², ... of F_p[ψ].
    let mut span = Echelon::new(n * n, p);
    let mut powers: Vec<PrimeFieldMatrix> = Vec::new();
    let mut cur = PrimeFieldMatrix::identity(n, p);
    while span.insert(cur.entries().to_vec()) {
        powers.push(cur.clone());
        cur = cur.mul(&psi);
    }
    let d = powers.len();
    if d <= 1 {
        return Ok(None);
    }
    let flat: Vec<Vec<u64>> = powers.iter().map(|m| m.entries().to_vec()).collect();
    // Frobenius g ↦ g^p on F_p[ψ] as a d × d matrix in the power basis.
    let frob_cols: Vec<Vec<u64>> = powers
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let img = m.pow(p);
            let mut c = coords_in(&flat, img.entries(), p);
            c[i] = field::sub(c[i], 1, p);
            c
        })
        .collect();
    let fixed = PrimeFieldMatrix::from_columns(d, p, &frob_cols).kernel();
    let Some(z_coords) = fixed.into_iter().find(|v| v[1..].iter().any(|&c| c != 0)) else {
        return Ok(None);
    };
    let mut z = PrimeFieldMatrix::zeros(n, n, p);
    for (c, m) in z_coords.iter().zip(&powers) {
        z.add_scaled(m, *c);
    }
    let roots = roots_in_prime_field(&matrix_min_poly(&z), p);
    if roots.len() < 2 {
        return Ok(None);
    }
    Ok(Some(lagrange_idempotent(&z, &roots)))
}

fn coords_in(seq: &[Vec<u64>], target: &[u64], p: u64) -> Vec<u64> {
    let poly = linear_relation(seq, target, p);
    // t^m = Σ c_i t^i gives target = Σ -poly_i seq_i for the lower terms.
    poly[..seq.len()].iter().map(|&c| field::neg(c, p)).collect()
}

fn matrix_min_poly(z: &PrimeFieldMatrix) -> Vec<u64> {
    let n = z.rows();
    let p = z.prime();
    let mut span = Echelon::new(n * n, p);
    let mut seq = Vec::new();
    let mut cur = PrimeFieldMatrix::identity(n, p);
    while span.insert(cur.entries().to_vec()) {
        seq.push(cur.entries().to_vec());
        cur = cur.mul(z);
    }
    linear_relation(&seq, cur.entries(), p)
}

/// Newton-style lift of an idempotent modulo a nilpotent ideal.
fn lift_idempotent(e: PrimeFieldMatrix) -> Result<PrimeFieldMatrix> {
    let mut e = e;
    for _ in 0..64 {
        let e2 = e.mul(&e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = e2.mul(&e);
        e = e2.scale(3).sub(&e3.scale(2));
    }
    Err(Error::Internal("idempotent lift did not converge".into()))
}

fn idempotent_witness(e: PrimeFieldMatrix) -> Witness {
    let image_dim = e.rank();
    let kernel_dim = e.rows() - image_dim;
    Witness::Idempotent { idempotent: e, image_dim, kernel_dim }
}

/// Re-check a report against the module: idempotents must be nontrivial and
/// commute with every action, blocks must partition the basis and be
/// invariant.
pub fn verify_report(pres: &FinitePresentation, report: &DecompositionReport) -> Result<()> {
    let bad = |m: &str| Err(Error::Internal(format!("decomposition witness rejected: {m}")));
    match &report.witness {
        Witness::Components { blocks } => {
            let mut seen = vec![false; pres.dim()];
            for &i in blocks.iter().flatten() {
                if i >= seen.len() || seen[i] {
                    return bad("blocks do not partition the basis");
                }
                seen[i] = true;
            }
            if blocks.len() < 2 || blocks.iter().any(Vec::is_empty) || !seen.iter().all(|&s| s) {
                return bad("fewer than two nonempty blocks");
            }
            let mut owner = vec![0; pres.dim()];
            for (b, blk) in blocks.iter().enumerate() {
                for &i in blk {
                    owner[i] = b;
                }
            }
            for a in pres.actions() {
                for r in 0..pres.dim() {
                    for c in 0..pres.dim() {
                        if a.get(r, c) != 0 && owner[r] != owner[c] {
                            return bad("action crosses blocks");
                        }
                    }
                }
            }
        }
        Witness::Idempotent { idempotent: e, image_dim, kernel_dim } => {
            if !e.is_idempotent() || e.is_zero() || e.is_identity() {
                return bad("not a nontrivial idempotent");
            }
            if !pres.actions().iter().all(|x| x.commutes_with(e)) {
                return bad("idempotent is not a module map");
            }
            if e.rank() != *image_dim || image_dim + kernel_dim != pres.dim() {
                return bad("image and kernel dimensions are wrong");
            }
        }
        Witness::LocalEndomorphismRing { .. } | Witness::Pending => {}
    }
    let expect_decomposable = !matches!(report.witness, Witness::LocalEndomorphismRing { .. });
    if expect_decomposable != (report.verdict == Verdict::Decomposable) {
        return bad("verdict does not match witness");
    }
    Ok(())
}

/// Decide decomposability over the presentation's prime. Requires
/// `p > dim End(M)` whenever the algebraic route is needed.
pub fn is_decomposable(pres: &FinitePresentation, opts: DecideOptions) -> Result<DecompositionReport> {
    let report = decide_inner(pres, opts)?;
    verify_report(pres, &report)?;
    Ok(report)
}

fn decide_inner(pres: &FinitePresentation, opts: DecideOptions) -> Result<DecompositionReport> {
    let n = pres.dim();
    if n == 0 {
        return Err(Error::Precondition("the zero module has no decomposition verdict".into()));
    }
    let p = pres.prime();
    let blocks = connected_components(pres);
    if blocks.len() >= 2 {
        let mut count = Some(0);
        for blk in &blocks {
            let sub = pres.restrict(blk);
            let c = match is_decomposable(&sub, opts) {
                Ok(r) => r.summand_count,
                Err(Error::PrimeTooSmall { .. }) | Err(Error::CapExceeded(_)) => None,
                Err(e) => return Err(e),
            };
            count = match (count, c) {
                (Some(a), Some(b)) => Some(a + b),
                _ => None,
            };
        }
        return Ok(DecompositionReport {
            verdict: Verdict::Decomposable,
            summand_count: count,
            witness: Witness::Components { blocks },
            method: Method::Components,
            prime: p,
            commutant_dim: None,
        });
    }

    let a = commutant(pres)?;
    let dim = a.dim();
    if p <= dim as u64 {
        return Err(Error::PrimeTooSmall { prime: p, dim });
    }
    let alg = a.structure()?;
    let rad = alg.radical()?;
    let (d, cols) = alg.quotient(&rad);
    let report = |verdict, summand_count, witness, method| DecompositionReport {
        verdict,
        summand_count,
        witness,
        method,
        prime: p,
        commutant_dim: Some(dim),
    };

    if d.is_commutative() {
        let fixed = d.frobenius_fixed_space()?;
        let r = fixed.len();
        if r == 1 {
            return Ok(report(
                Verdict::Indecomposable,
                Some(1),
                Witness::LocalEndomorphismRing { residue_degree: d.dim() },
                Method::Frobenius,
            ));
        }
        let one_span = Echelon::from_rows(d.dim(), p, [d.one().to_vec()]);
        let z = fixed
            .into_iter()
            .find(|v| !one_span.contains(v))
            .ok_or_else(|| Error::Internal("no non-scalar Frobenius-fixed element".into()))?;
        let roots = roots_in_prime_field(&d.min_poly(&z), p);
        // Lift z to A along the complement columns, then to a matrix.
        let mut lifted = vec![0u64; dim];
        for (&c, &v) in cols.iter().zip(&z) {
            lifted[c] = v;
        }
        let zm = a.element(&lifted);
        // z is semisimple only modulo the radical; remove its nilpotent part
        // before interpolating.
        let mut zs = zm;
        let mut pk = 1u64;
        while pk < n as u64 {
            zs = zs.pow(p);
            pk = pk.saturating_mul(p);
        }
        let e = lift_idempotent(lagrange_idempotent(&zs, &roots))?;
        return Ok(report(Verdict::Decomposable, Some(r), idempotent_witness(e), Method::Frobenius));
    }

    // Noncommutative semisimple quotient: M has a repeated summand.
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.attempts {
        let coords: Vec<u64> = (0..dim).map(|_| rng.gen_range(0..p)).collect();
        if let Some(e) = idempotent_from(pres, &a.element(&coords))? {
            return Ok(report(Verdict::Decomposable, None, idempotent_witness(e), Method::Fitting));
        }
    }
    let basis = a.basis();
    for i in 0..dim {
        for j in i..dim {
            let phi = if i == j { basis[i].clone() } else { basis[i].add(&basis[j]) };
            if let Some(e) = idempotent_from(pres, &phi)? {
                return Ok(report(Verdict::Decomposable, None, idempotent_witness(e), Method::Fitting));
            }
        }
    }
    Ok(report(Verdict::Decomposable, None, Witness::Pending, Method::Fitting))
}

/// Choose a prime large enough for the commutant, then decide. The prime
/// starts at `pres.prime()` and moves to the smallest prime above the
/// commutant dimension when needed.
pub fn decide(pres: &FinitePresentation, opts: DecideOptions) -> Result<DecompositionReport> {
    let mut cur = pres.clone();
    for _ in 0..8 {
        match is_decomposable(&cur, opts) {
            Err(Error::PrimeTooSmall { dim, .. }) => cur = cur.with_prime(next_prime_above(dim as u64))?,
            other => return other,
        }
    }
    Err(Error::Internal("prime selection did not stabilize".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::{build_hom, InnerIdeal};
    use crate::local::LocalRing;

    fn line(t: u32, p: u64) -> FinitePresentation {
        let r = LocalRing::parse(&["x", "y"], "(x^2, xy^3)").unwrap();
        let sop = r.parse_sop(&["y^2"]).unwrap();
        build_hom(&sop, &InnerIdeal::Powers(vec![t])).unwrap().presentation(p).unwrap()
    }

    fn jordan(n: usize, p: u64) -> PrimeFieldMatrix {
        let mut m = PrimeFieldMatrix::zeros(n, n, p);
        for i in 0..n.saturating_sub(1) {
            m.set(i + 1, i, 1);
        }
        m
    }

    #[test]
    fn components_split_blocks() {
        let x = PrimeFieldMatrix::from_rows(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 0, 0]], 5).unwrap();
        let pres = FinitePresentation::from_actions(3, vec![x], 5).unwrap();
        assert_eq!(connected_components(&pres), vec![vec![0, 1], vec![2]]);
        let r = decide(&pres, DecideOptions::default()).unwrap();
        assert_eq!(r.method, Method::Components);
        assert_eq!(r.summand_count, Some(2));
    }

    #[test]
    fn zero_action_commutant_is_full_matrix_algebra() {
        let pres = FinitePresentation::from_actions(2, vec![PrimeFieldMatrix::zeros(2, 2, 5)], 5).unwrap();
        assert_eq!(commutant(&pres).unwrap().dim(), 4);
        assert_eq!(decide(&pres, DecideOptions::default()).unwrap().verdict, Verdict::Decomposable);
    }

    #[test]
    fn single_jordan_block_is_local() {
        let pres = FinitePresentation::from_actions(4, vec![jordan(4, 7)], 7).unwrap();
        let a = commutant(&pres).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(algebra_radical(&a).unwrap().len(), 3);
        let r = is_decomposable(&pres, DecideOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Indecomposable);
        assert_eq!(r.witness, Witness::LocalEndomorphismRing { residue_degree: 1 });
    }

    #[test]
    fn glued_jordan_blocks_need_idempotent() {
        // J_2 ⊕ J_2 after a change of basis that mixes the blocks.
        let p = 11;
        let j = jordan(2, p);
        let mut x = PrimeFieldMatrix::zeros(4, 4, p);
        for i in 0..2 {
            for k in 0..2 {
                x.set(i, k, j.get(i, k));
                x.set(i + 2, k + 2, j.get(i, k));
            }
        }
        let t = PrimeFieldMatrix::from_rows(&[vec![1, 2, 3, 1], vec![0, 1, 3, 5], vec![0, 0, 1, 4], vec![0, 0, 0, 1]], p)
            .unwrap();
        let y = t.mul(&x).mul(&t.inverse().unwrap());
        let pres = FinitePresentation::from_actions(4, vec![y], p).unwrap();
        assert_eq!(connected_components(&pres).len(), 1);
        let r = decide(&pres, DecideOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Decomposable);
        assert_eq!(r.method, Method::Fitting);
        assert!(matches!(r.witness, Witness::Idempotent { image_dim: 2, .. }));
    }

    #[test]
    fn distinct_jordan_sizes_use_frobenius() {
        // J_1 ⊕ J_2, mixed so the components shortcut does not apply.
        let p = 11;
        let x = PrimeFieldMatrix::from_rows(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 0, 0]], p).unwrap();
        let t = PrimeFieldMatrix::from_rows(&[vec![1, 0, 1], vec![0, 1, 0], vec![1, 1, 2]], p).unwrap();
        let y = t.mul(&x).mul(&t.inverse().unwrap());
        let pres = FinitePresentation::from_actions(3, vec![y], p).unwrap();
        let r = decide(&pres, DecideOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Decomposable);
        assert_eq!(r.method, Method::Frobenius);
        assert_eq!(r.summand_count, Some(2));
    }

    #[test]
    fn hom_family_verdicts() {
        let r2 = decide(&line(2, 101), DecideOptions::default()).unwrap();
        assert_eq!(r2.verdict, Verdict::Indecomposable);
        let r3 = decide(&line(3, 101), DecideOptions::default()).unwrap();
        assert_eq!(r3.verdict, Verdict::Decomposable);
        assert_eq!(r3.summand_count, Some(2));
    }

    #[test]
    fn small_prime_is_rejected_then_raised() {
        let pres = line(2, 2);
        assert!(matches!(is_decomposable(&pres, DecideOptions::default()), Err(Error::PrimeTooSmall { .. })));
        let r = decide(&pres, DecideOptions::default()).unwrap();
        assert!(r.prime > r.commutant_dim.unwrap() as u64);
    }

    #[test]
    fn fitting_split_rejects_non_module_maps() {
        let pres = FinitePresentation::from_actions(2, vec![jordan(2, 5)], 5).unwrap();
        let phi = PrimeFieldMatrix::from_rows(&[vec![1, 0], vec![0, 0]], 5).unwrap();
        assert_eq!(fitting_split(&pres, &phi).unwrap_err(), Error::NotInCommutant);
    }
}
