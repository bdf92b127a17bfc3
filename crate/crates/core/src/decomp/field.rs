//! Dense matrices and row reduction over a prime field `F_p`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Primes are kept below 2^31 so that products of residues fit in a `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime_above(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime(c) {
        c += 1;
    }
    c
}

pub fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) && p <= MAX_PRIME {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

#[inline]
pub fn add(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

#[inline]
pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b) % p
}

#[inline]
pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

#[inline]
pub fn neg(a: u64, p: u64) -> u64 {
    (p - a) % p
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue.
pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow(a, p - 2, p)
}

/// Reduce an integer (possibly negative) into `[0, p)`.
pub fn reduce(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

/// Row-major matrix with entries reduced modulo `p`.
///
/// Serialized as `{"prime": p, "rows": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "MatrixRepr", try_from = "MatrixRepr")]
pub struct PrimeFieldMatrix {
    rows: usize,
    cols: usize,
    p: u64,
    entries: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    prime: u64,
    rows: Vec<Vec<u64>>,
}

impl From<PrimeFieldMatrix> for MatrixRepr {
    fn from(m: PrimeFieldMatrix) -> Self {
        MatrixRepr { prime: m.p, rows: m.to_row_lists() }
    }
}

impl TryFrom<MatrixRepr> for PrimeFieldMatrix {
    type Error = Error;

    fn try_from(r: MatrixRepr) -> Result<Self> {
        check_prime(r.prime)?;
        let cols = r.rows.first().map_or(0, Vec::len);
        if r.rows.iter().any(|row| row.len() != cols) {
            return Err(Error::Parse("ragged matrix rows".into()));
        }
        PrimeFieldMatrix::from_entries(r.rows.len(), cols, r.prime, r.rows.concat())
    }
}

impl PrimeFieldMatrix {
    pub fn zeros(rows: usize, cols: usize, p: u64) -> Self {
        PrimeFieldMatrix { rows, cols, p, entries: vec![0; rows * cols] }
    }

    pub fn identity(n: usize, p: u64) -> Self {
        let mut m = Self::zeros(n, n, p);
        for i in 0..n {
            m.entries[i * n + i] = 1 % p;
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, p: u64, entries: Vec<u64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Precondition(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let entries = entries.into_iter().map(|e| e % p).collect();
        Ok(PrimeFieldMatrix { rows, cols, p, entries })
    }

    pub fn from_rows(rows: &[Vec<i64>], p: u64) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Precondition("ragged rows".into()));
        }
        let entries = rows.iter().flatten().map(|&v| reduce(v, p)).collect();
        Ok(PrimeFieldMatrix { rows: r, cols: c, p, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows, self.p)
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0).count()
    }

    pub fn mul(&self, other: &PrimeFieldMatrix) -> PrimeFieldMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let p = self.p;
        let mut out = Self::zeros(self.rows, other.cols, p);
        for i in 0..self.rows {
            let dst = i * other.cols;
            for k in 0..self.cols {
                let a = self.entries[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                for (j, &b) in other.row(k).iter().enumerate() {
                    if b != 0 {
                        let e = &mut out.entries[dst + j];
                        *e = (*e + a * b) % p;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &PrimeFieldMatrix) -> PrimeFieldMatrix {
        self.zip_with(other, add)
    }

    pub fn sub(&self, other: &PrimeFieldMatrix) -> PrimeFieldMatrix {
        self.zip_with(other, sub)
    }

    fn zip_with(&self, other: &PrimeFieldMatrix, f: fn(u64, u64, u64) -> u64) -> PrimeFieldMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| f(a, b, self.p)).collect();
        PrimeFieldMatrix { rows: self.rows, cols: self.cols, p: self.p, entries }
    }

    pub fn scale(&self, s: u64) -> PrimeFieldMatrix {
        let entries = self.entries.iter().map(|&a| mul(a, s % self.p, self.p)).collect();
        PrimeFieldMatrix { rows: self.rows, cols: self.cols, p: self.p, entries }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, other: &PrimeFieldMatrix, s: u64) {
        let p = self.p;
        for (a, &b) in self.entries.iter_mut().zip(&other.entries) {
            if b != 0 {
                *a = (*a + s * b) % p;
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> PrimeFieldMatrix {
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows, self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn transpose(&self) -> PrimeFieldMatrix {
        let mut out = Self::zeros(self.cols, self.rows, self.p);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    pub fn commutes_with(&self, other: &PrimeFieldMatrix) -> bool {
        self.mul(other) == other.mul(self)
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows as u64).is_zero()
    }

    pub fn trace(&self) -> u64 {
        (0..self.rows.min(self.cols)).fold(0, |t, i| add(t, self.get(i, i), self.p))
    }

    pub fn rank(&self) -> usize {
        Echelon::from_rows(self.cols, self.p, (0..self.rows).map(|r| self.row(r).to_vec())).rank()
    }

    /// Basis of `{ v : self · v = 0 }`.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        Echelon::from_rows(self.cols, self.p, (0..self.rows).map(|r| self.row(r).to_vec())).null_space()
    }

    /// Basis of the column space.
    pub fn image(&self) -> Vec<Vec<u64>> {
        self.transpose().row_space()
    }

    /// Reduced echelon basis of the row space.
    pub fn row_space(&self) -> Vec<Vec<u64>> {
        Echelon::from_rows(self.cols, self.p, (0..self.rows).map(|r| self.row(r).to_vec())).into_rows()
    }

    pub fn inverse(&self) -> Option<PrimeFieldMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let p = self.p;
        let mut aug: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| u64::from(i == j)));
                r
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| aug[r][col] != 0)?;
            aug.swap(col, piv);
            let s = inv(aug[col][col], p);
            for v in aug[col].iter_mut() {
                *v = mul(*v, s, p);
            }
            for r in 0..n {
                if r != col && aug[r][col] != 0 {
                    let f = aug[r][col];
                    let (pr, rr) = if r < col {
                        let (lo, hi) = aug.split_at_mut(col);
                        (&hi[0], &mut lo[r])
                    } else {
                        let (lo, hi) = aug.split_at_mut(r);
                        (&lo[col], &mut hi[0])
                    };
                    for (a, &b) in rr.iter_mut().zip(pr.iter()) {
                        *a = sub(*a, mul(f, b, p), p);
                    }
                }
            }
        }
        let entries = aug.into_iter().flat_map(|r| r[n..].to_vec()).collect();
        Some(PrimeFieldMatrix { rows: n, cols: n, p, entries })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(n: usize, p: u64, cols: &[Vec<u64>]) -> PrimeFieldMatrix {
        let mut m = Self::zeros(n, cols.len(), p);
        for (j, c) in cols.iter().enumerate() {
            for (i, &v) in c.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Row-major residues, for serialization.
    pub fn to_row_lists(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
}

/// A subspace of `F_p^n` kept as a reduced row echelon basis.
///
/// Each basis row has a 1 in its pivot column and zeros in every other
/// pivot column, so the coordinates of a member vector are its entries at
/// the pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    n: usize,
    p: u64,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(n: usize, p: u64) -> Self {
        Echelon { n, p, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows(n: usize, p: u64, rows: impl IntoIterator<Item = Vec<u64>>) -> Self {
        let mut e = Self::new(n, p);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn into_rows(self) -> Vec<Vec<u64>> {
        self.rows
    }

    /// Reduce `v` against the basis; the result is zero iff `v` is a member.
    pub fn reduce(&self, v: &mut [u64]) {
        let p = self.p;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let f = v[pc];
            if f != 0 {
                for (a, &b) in v.iter_mut().zip(row) {
                    if b != 0 {
                        *a = sub(*a, mul(f, b, p), p);
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Coordinates of a member vector in the echelon basis.
    pub fn coords(&self, v: &[u64]) -> Option<Vec<u64>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    /// Insert `v`; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let p = self.p;
        for x in v.iter_mut() {
            *x %= p;
        }
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let s = inv(v[pc], p);
        for x in v.iter_mut() {
            *x = mul(*x, s, p);
        }
        for row in self.rows.iter_mut() {
            let f = row[pc];
            if f != 0 {
                for (a, &b) in row.iter_mut().zip(&v) {
                    if b != 0 {
                        *a = sub(*a, mul(f, b, p), p);
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, v);
        true
    }

    /// Basis of the solutions of `row · x = 0` for every basis row.
    pub fn null_space(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let mut is_pivot = vec![false; self.n];
        for &pc in &self.pivots {
            is_pivot[pc] = true;
        }
        (0..self.n)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![0u64; self.n];
                x[f] = 1;
                for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                    x[pc] = neg(row[f], p);
                }
                x
            })
            .collect()
    }

    /// Standard basis vectors completing this subspace to the whole space.
    pub fn complement_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.n];
        for &pc in &self.pivots {
            is_pivot[pc] = true;
        }
        (0..self.n).filter(|&c| !is_pivot[c]).collect()
    }
}

/// Sparse row echelon form for large, very sparse homogeneous systems.
///
/// Rows are sorted `(column, value)` lists; each stored row is monic at its
/// leading column.
#[derive(Debug)]
pub struct SparseEchelon {
    n: usize,
    p: u64,
    by_lead: std::collections::BTreeMap<usize, Vec<(usize, u64)>>,
}

impl SparseEchelon {
    pub fn new(n: usize, p: u64) -> Self {
        SparseEchelon { n, p, by_lead: Default::default() }
    }

    pub fn rank(&self) -> usize {
        self.by_lead.len()
    }

    fn axpy(a: &[(usize, u64)], f: u64, b: &[(usize, u64)], p: u64) -> Vec<(usize, u64)> {
        // a - f*b
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ca = a.get(i).map_or(usize::MAX, |e| e.0);
            let cb = b.get(j).map_or(usize::MAX, |e| e.0);
            if ca < cb {
                out.push(a[i]);
                i += 1;
            } else if cb < ca {
                out.push((cb, neg(mul(f, b[j].1, p), p)));
                j += 1;
            } else {
                let v = sub(a[i].1, mul(f, b[j].1, p), p);
                if v != 0 {
                    out.push((ca, v));
                }
                i += 1;
                j += 1;
            }
        }
        out
    }

    /// Insert a row given as unsorted `(column, value)` terms.
    pub fn insert(&mut self, terms: impl IntoIterator<Item = (usize, u64)>) -> bool {
        let p = self.p;
        let mut row: Vec<(usize, u64)> = Vec::new();
        let mut raw: Vec<(usize, u64)> = terms.into_iter().map(|(c, v)| (c, v % p)).collect();
        raw.sort_by_key(|t| t.0);
        for (c, v) in raw {
            match row.last_mut() {
                Some(last) if last.0 == c => last.1 = add(last.1, v, p),
                _ => row.push((c, v)),
            }
        }
        row.retain(|t| t.1 != 0);
        loop {
            let Some(&(lead, lv)) = row.first() else {
                return false;
            };
            match self.by_lead.get(&lead) {
                Some(piv) => row = Self::axpy(&row, lv, piv, p),
                None => {
                    let s = inv(lv, p);
                    for t in row.iter_mut() {
                        t.1 = mul(t.1, s, p);
                    }
                    self.by_lead.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// Basis of the solution space, as dense vectors.
    pub fn null_space(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let free: Vec<usize> = (0..self.n).filter(|c| !self.by_lead.contains_key(c)).collect();
        let mut out = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = vec![0u64; self.n];
            x[f] = 1;
            // Back substitution from the last pivot column down.
            for (&lead, row) in self.by_lead.iter().rev() {
                let mut s = 0;
                for &(c, v) in &row[1..] {
                    if x[c] != 0 {
                        s = add(s, mul(v, x[c], p), p);
                    }
                }
                x[lead] = neg(s, p);
            }
            out.push(x);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(101) && !is_prime(1) && !is_prime(91));
        assert_eq!(next_prime_above(4), 5);
        assert_eq!(next_prime_above(5), 7);
        assert!(check_prime(12).is_err());
    }

    #[test]
    fn inverse_and_rank() {
        let p = 7;
        let m = PrimeFieldMatrix::from_rows(&[vec![1, 2], vec![3, 4]], p).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(m.rank(), 2);
        let s = PrimeFieldMatrix::from_rows(&[vec![1, 2], vec![2, 4]], p).unwrap();
        assert!(s.inverse().is_none());
        assert_eq!(s.rank(), 1);
        let k = s.kernel();
        assert_eq!(k.len(), 1);
        assert_eq!(add(k[0][0], mul(2, k[0][1], p), p), 0);
    }

    #[test]
    fn echelon_coordinates() {
        let p = 5;
        let e = Echelon::from_rows(3, p, [vec![1, 1, 0], vec![0, 1, 1]]);
        assert_eq!(e.rank(), 2);
        let v = vec![1, 3, 2]; // (1,1,0) + 2*(0,1,1)
        let c = e.coords(&v).unwrap();
        let mut rebuilt = vec![0; 3];
        for (coef, row) in c.iter().zip(e.rows()) {
            for (r, &b) in rebuilt.iter_mut().zip(row) {
                *r = add(*r, mul(*coef, b, p), p);
            }
        }
        assert_eq!(rebuilt, v);
        assert!(e.coords(&[1, 0, 0]).is_none());
    }

    #[test]
    fn sparse_matches_dense() {
        let p = 11;
        let rows = vec![vec![1u64, 0, 3, 0, 2], vec![0, 4, 0, 1, 0], vec![1, 4, 3, 1, 2], vec![0, 0, 5, 5, 0]];
        let dense = Echelon::from_rows(5, p, rows.clone());
        let mut sparse = SparseEchelon::new(5, p);
        for r in &rows {
            sparse.insert(r.iter().enumerate().map(|(c, &v)| (c, v)));
        }
        assert_eq!(sparse.rank(), dense.rank());
        for x in sparse.null_space() {
            for r in &rows {
                let dot = r.iter().zip(&x).fold(0, |s, (&a, &b)| add(s, mul(a, b, p), p));
                assert_eq!(dot, 0);
            }
        }
        assert_eq!(sparse.null_space().len(), 5 - dense.rank());
    }
}
