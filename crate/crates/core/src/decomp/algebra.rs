//! Finite-dimensional associative algebras over `F_p` given by structure
//! constants: trace-form radical, semisimple quotient, and the Frobenius
//! kernel that counts field factors.

use crate::decomp::field::{self, Echelon, PrimeFieldMatrix};
use crate::error::{Error, Result};

/// Sparse structure constants: `b_i · b_j = Σ_k c_ijk b_k`.
#[derive(Clone, Debug)]
pub struct StructAlgebra {
    dim: usize,
    p: u64,
    table: Vec<Vec<(usize, u64)>>,
    one: Vec<u64>,
}

impl StructAlgebra {
    /// Build from a dense product table `products[i][j] = coords(b_i b_j)`
    /// and the coordinates of the identity.
    pub fn new(p: u64, products: Vec<Vec<Vec<u64>>>, one: Vec<u64>) -> Result<Self> {
        let dim = one.len();
        if products.len() != dim || products.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim)) {
            return Err(Error::Precondition("structure table has the wrong shape".into()));
        }
        let table = products
            .into_iter()
            .flatten()
            .map(|v| v.into_iter().enumerate().map(|(k, c)| (k, c % p)).filter(|t| t.1 != 0).collect())
            .collect();
        let alg = StructAlgebra { dim, p, table, one: one.into_iter().map(|c| c % p).collect() };
        let unit_ok = (0..dim).all(|i| {
            let e = alg.basis_vector(i);
            alg.mul(&alg.one, &e) == e && alg.mul(&e, &alg.one) == e
        });
        if !unit_ok {
            return Err(Error::Precondition("given identity is not a two-sided unit".into()));
        }
        Ok(alg)
    }

    pub(crate) fn from_sparse(p: u64, dim: usize, table: Vec<Vec<(usize, u64)>>, one: Vec<u64>) -> Self {
        StructAlgebra { dim, p, table, one }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn one(&self) -> &[u64] {
        &self.one
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u64> {
        let mut e = vec![0; self.dim];
        e[i] = 1;
        e
    }

    pub fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut out = vec![0u64; self.dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let s = field::mul(xi, yj, p);
                for &(k, c) in &self.table[i * self.dim + j] {
                    out[k] = (out[k] + s * c) % p;
                }
            }
        }
        out
    }

    pub fn pow(&self, x: &[u64], mut e: u64) -> Vec<u64> {
        let mut base = x.to_vec();
        let mut acc = self.one.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| {
            (i + 1..self.dim).all(|j| {
                let mut a = self.table[i * self.dim + j].clone();
                let mut b = self.table[j * self.dim + i].clone();
                a.sort_unstable();
                b.sort_unstable();
                a == b
            })
        })
    }

    /// Matrix of `y ↦ x·y` in the basis.
    pub fn left_matrix(&self, x: &[u64]) -> PrimeFieldMatrix {
        let cols: Vec<Vec<u64>> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        PrimeFieldMatrix::from_columns(self.dim, self.p, &cols)
    }

    /// Gram matrix of `(x, y) ↦ trace(L_x L_y) = trace(L_{xy})`.
    pub fn trace_form(&self) -> PrimeFieldMatrix {
        let p = self.p;
        let d = self.dim;
        // t_k = trace(L_{b_k}) = Σ_j c_{kjj}
        let traces: Vec<u64> = (0..d)
            .map(|k| {
                (0..d).fold(0, |t, j| {
                    let c = self.table[k * d + j].iter().find(|e| e.0 == j).map_or(0, |e| e.1);
                    field::add(t, c, p)
                })
            })
            .collect();
        let mut g = PrimeFieldMatrix::zeros(d, d, p);
        for i in 0..d {
            for j in 0..d {
                let v = self.table[i * d + j]
                    .iter()
                    .fold(0, |s, &(k, c)| field::add(s, field::mul(c, traces[k], p), p));
                g.set(i, j, v);
            }
        }
        g
    }

    /// Jacobson radical as the kernel of the trace form. Valid when
    /// `p > dim`: elements of the kernel have `trace(L_z^k) = 0` for all
    /// `k ≤ dim`, which forces `L_z` nilpotent by Newton's identities.
    /// The result is checked to be a nilpotent two-sided ideal with a
    /// nondegenerate quotient form.
    pub fn radical(&self) -> Result<Echelon> {
        if self.p <= self.dim as u64 {
            return Err(Error::PrimeTooSmall { prime: self.p, dim: self.dim });
        }
        let g = self.trace_form();
        let rad = Echelon::from_rows(self.dim, self.p, g.kernel());
        self.verify_radical(&rad)?;
        Ok(rad)
    }

    fn verify_radical(&self, rad: &Echelon) -> Result<()> {
        for r in rad.rows() {
            for i in 0..self.dim {
                let e = self.basis_vector(i);
                if !rad.contains(&self.mul(&e, r)) || !rad.contains(&self.mul(r, &e)) {
                    return Err(Error::Internal("trace-form kernel is not an ideal".into()));
                }
            }
        }
        // rad^k shrinks to zero within dim steps.
        let mut power: Vec<Vec<u64>> = rad.rows().to_vec();
        for _ in 0..=self.dim {
            if power.is_empty() {
                break;
            }
            let mut next = Echelon::new(self.dim, self.p);
            for x in &power {
                for r in rad.rows() {
                    next.insert(self.mul(x, r));
                }
            }
            power = next.into_rows();
        }
        if !power.is_empty() {
            return Err(Error::Internal("trace-form kernel is not nilpotent".into()));
        }
        let (quot, _) = self.quotient(rad);
        if quot.dim > 0 && quot.trace_form().inverse().is_none() {
            return Err(Error::Internal("quotient trace form is degenerate".into()));
        }
        Ok(())
    }

    /// `A / ideal`, with basis the standard vectors at the non-pivot columns
    /// of `ideal`. Returns the quotient and those columns (which also give
    /// the lift of a quotient element back to `A`).
    pub fn quotient(&self, ideal: &Echelon) -> (StructAlgebra, Vec<usize>) {
        let cols = ideal.complement_columns();
        let project = |v: Vec<u64>| -> Vec<u64> {
            let mut w = v;
            ideal.reduce(&mut w);
            cols.iter().map(|&c| w[c]).collect()
        };
        let s = cols.len();
        let mut table = Vec::with_capacity(s * s);
        for &ci in &cols {
            for &cj in &cols {
                let prod = project(self.mul(&self.basis_vector(ci), &self.basis_vector(cj)));
                table.push(prod.into_iter().enumerate().filter(|t| t.1 != 0).collect());
            }
        }
        let one = project(self.one.clone());
        (StructAlgebra::from_sparse(self.p, s, table, one), cols)
    }

    /// Basis of `{ x : x^p = x }`; for a commutative semisimple algebra its
    /// dimension is the number of field factors.
    pub fn frobenius_fixed_space(&self) -> Result<Vec<Vec<u64>>> {
        if !self.is_commutative() {
            return Err(Error::NonCommutative);
        }
        let p = self.p;
        let cols: Vec<Vec<u64>> = (0..self.dim)
            .map(|k| {
                let e = self.basis_vector(k);
                let mut f = self.pow(&e, p);
                f[k] = field::sub(f[k], 1, p);
                f
            })
            .collect();
        Ok(PrimeFieldMatrix::from_columns(self.dim, p, &cols).kernel())
    }

    /// Monic minimal polynomial of `x`, coefficients from degree 0 up.
    pub fn min_poly(&self, x: &[u64]) -> Vec<u64> {
        let mut powers = Echelon::new(self.dim, self.p);
        let mut cur = self.one.clone();
        let mut seq: Vec<Vec<u64>> = Vec::new();
        loop {
            if !powers.insert(cur.clone()) {
                break;
            }
            seq.push(cur.clone());
            cur = self.mul(&cur, x);
        }
        linear_relation(&seq, &cur, self.p)
    }
}

/// Express `target` as a combination of `seq` and return the monic
/// polynomial `t^m - Σ c_i t^i` (coefficients low to high).
pub(crate) fn linear_relation(seq: &[Vec<u64>], target: &[u64], p: u64) -> Vec<u64> {
    // Solve Σ c_i seq_i = target via the kernel of [seq | -target].
    let n = target.len();
    let m = seq.len();
    let mut cols: Vec<Vec<u64>> = seq.to_vec();
    cols.push(target.iter().map(|&v| field::neg(v, p)).collect());
    let mat = PrimeFieldMatrix::from_columns(n, p, &cols);
    let ker = mat.kernel();
    let v = ker
        .into_iter()
        .find(|v| v[m] != 0)
        .expect("target lies in the span of the sequence");
    let s = field::inv(v[m], p);
    let mut poly: Vec<u64> = v[..m].iter().map(|&c| field::neg(field::mul(c, s, p), p)).collect();
    poly.push(1);
    poly
}

/// Roots in `F_p` of a polynomial, by evaluation.
pub fn roots_in_prime_field(poly: &[u64], p: u64) -> Vec<u64> {
    (0..p)
        .filter(|&c| poly.iter().rev().fold(0, |acc, &a| field::add(field::mul(acc, c, p), a, p)) == 0)
        .collect()
}
