//! Dense linear algebra over a prime field F_p with p < 256.
//!
//! Entries are stored row-major as bytes. Elimination always pivots on the
//! first nonzero entry in column order, so every basis derived from these
//! routines (kernels, normal forms, generator choices) is reproducible.

use std::fmt;

use crate::error::{Error, Result};

/// The prime field F_p, with a precomputed inverse table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u8,
    inv: Vec<u8>,
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Fp {
    pub fn new(p: u32) -> Result<Self> {
        if p >= 256 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        let mut inv = vec![0u8; p as usize];
        for a in 1..p {
            for b in 1..p {
                if a * b % p == 1 {
                    inv[a as usize] = b as u8;
                    break;
                }
            }
        }
        Ok(Fp { p: p as u8, inv })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p as u32
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        ((a as u32 + b as u32) % self.p as u32) as u8
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        ((a as u32 + self.p as u32 - b as u32) % self.p as u32) as u8
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u32 * b as u32) % self.p as u32) as u8
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    /// Multiplicative inverse; `a` must be nonzero.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    pub fn reduce(&self, a: i64) -> u8 {
        a.rem_euclid(self.p as i64) as u8
    }

    pub fn pow(&self, a: u8, mut e: u64) -> u8 {
        let mut base = a;
        let mut acc = 1u8;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `dst += c * src`, entrywise.
    pub fn axpy(&self, dst: &mut [u8], c: u8, src: &[u8]) {
        if c == 0 {
            return;
        }
        let p = self.p as u32;
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                *d = ((*d as u32 + c as u32 * s as u32) % p) as u8;
            }
        }
    }

    pub fn scale(&self, v: &mut [u8], c: u8) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }
}

/// A dense matrix over F_p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixGFp {
    field: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl fmt::Debug for MatrixGFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixGFp<{}>[{}x{}]", self.field.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl MatrixGFp {
    pub fn zeros(field: &Fp, rows: usize, cols: usize) -> Self {
        MatrixGFp {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Fp, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from integer rows, reducing every entry mod p.
    pub fn from_rows<R: AsRef<[i64]>>(field: &Fp, cols: usize, rows: &[R]) -> Result<Self> {
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            for (j, &e) in r.iter().enumerate() {
                m.set(i, j, field.reduce(e));
            }
        }
        Ok(m)
    }

    /// Builds a matrix whose rows are the given residue vectors.
    pub fn from_residue_rows(field: &Fp, cols: usize, rows: &[Vec<u8>]) -> Self {
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row length");
            m.row_mut(i).copy_from_slice(r);
        }
        m
    }

    /// Builds a matrix whose columns are the given residue vectors.
    pub fn from_columns(field: &Fp, rows: usize, cols: &[Vec<u8>]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, &e) in c.iter().enumerate() {
                m.set(i, j, e);
            }
        }
        m
    }

    pub fn field(&self) -> &Fp {
        &self.field
    }

    pub fn prime(&self) -> u32 {
        self.field.p()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        debug_assert!((v as u32) < self.field.p());
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [u8] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u8> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&e| e == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &MatrixGFp) -> Result<MatrixGFp> {
        if self.cols != other.rows || self.field != other.field {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = vec![0u8; other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a != 0 {
                    self.field.axpy(&mut acc, a, other.row(k));
                }
            }
            out.row_mut(i).copy_from_slice(&acc);
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.cols, "vector length");
        let p = self.field.p();
        (0..self.rows)
            .map(|r| {
                let s: u32 = self
                    .row(r)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u32 * b as u32 % p)
                    .sum();
                (s % p) as u8
            })
            .collect()
    }

    /// Reduced row-echelon form and its pivot columns.
    pub fn rref(&self) -> (MatrixGFp, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(r) = (pr..self.rows).find(|&r| self.get(r, c) != 0) else {
                continue;
            };
            if r != pr {
                for j in 0..self.cols {
                    self.data.swap(r * self.cols + j, pr * self.cols + j);
                }
            }
            let inv = f.inv(self.get(pr, c));
            f.scale(self.row_mut(pr), inv);
            let pivot_row = self.row(pr).to_vec();
            for r in 0..self.rows {
                if r != pr {
                    let e = self.get(r, c);
                    if e != 0 {
                        f.axpy(self.row_mut(r), f.neg(e), &pivot_row);
                    }
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{v : self * v = 0}`, one vector per
    /// free column in increasing column order.
    pub fn kernel_basis(&self) -> Vec<Vec<u8>> {
        let (r, pivots) = self.rref();
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u8; self.cols];
                v[free] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(i, free));
                }
                v
            })
            .collect()
    }
}

/// A subspace of F_p^n held as a reduced echelon basis that grows one
/// vector at a time.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: Fp,
    len: usize,
    /// Rows in reduced form; `pivots[i]` is the pivot column of `rows[i]`.
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
    pivot_of_col: Vec<Option<usize>>,
}

impl EchelonBasis {
    pub fn new(field: &Fp, len: usize) -> Self {
        EchelonBasis {
            field: field.clone(),
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_of_col: vec![None; len],
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_of_col[col].is_some()
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Reduces `v` in place against the basis; the result has zeros in all
    /// pivot columns and is the canonical representative of `v` modulo
    /// the subspace.
    pub fn reduce(&self, v: &mut [u8]) {
        debug_assert_eq!(v.len(), self.len);
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let e = v[pc];
            if e != 0 {
                self.field.axpy(v, self.field.neg(e), row);
            }
        }
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&e| e == 0)
    }

    /// Adds `v` to the span. Returns false if it was already contained.
    pub fn insert(&mut self, v: &[u8]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(pc) = w.iter().position(|&e| e != 0) else {
            return false;
        };
        let inv = self.field.inv(w[pc]);
        self.field.scale(&mut w, inv);
        // keep the basis fully reduced
        for row in self.rows.iter_mut() {
            let e = row[pc];
            if e != 0 {
                self.field.axpy(row, self.field.neg(e), &w);
            }
        }
        let idx = self.rows.len();
        self.rows.push(w);
        self.pivots.push(pc);
        self.pivot_of_col[pc] = Some(idx);
        true
    }

    /// Solves `v = sum c_i rows[i]` when `v` lies in the span; returns the
    /// coefficients in insertion order.
    pub fn coordinates(&self, v: &[u8]) -> Option<Vec<u8>> {
        let mut w = v.to_vec();
        let mut coords = vec![0u8; self.rows.len()];
        for (i, (row, &pc)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let e = w[pc];
            if e != 0 {
                coords[i] = e;
                self.field.axpy(&mut w, self.field.neg(e), row);
            }
        }
        w.iter().all(|&e| e == 0).then_some(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u32) -> Fp {
        Fp::new(p).unwrap()
    }

    #[test]
    fn rejects_non_primes() {
        assert_eq!(Fp::new(4), Err(Error::InvalidPrime(4)));
        assert_eq!(Fp::new(1), Err(Error::InvalidPrime(1)));
        assert_eq!(Fp::new(257), Err(Error::InvalidPrime(257)));
        assert!(Fp::new(251).is_ok());
    }

    #[test]
    fn rref_identity() {
        let id = MatrixGFp::identity(&f(2), 2);
        let (r, piv) = id.rref();
        assert_eq!(r, id);
        assert_eq!(piv, vec![0, 1]);
    }

    #[test]
    fn rref_duplicate_rows() {
        let m = MatrixGFp::from_rows(&f(2), 2, &[[1, 1], [1, 1]]).unwrap();
        let (r, piv) = m.rref();
        assert_eq!(r, MatrixGFp::from_rows(&f(2), 2, &[[1, 1], [0, 0]]).unwrap());
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn rref_scales_unit() {
        let m = MatrixGFp::from_rows(&f(3), 1, &[[2]]).unwrap();
        let (r, piv) = m.rref();
        assert_eq!(r.get(0, 0), 1);
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(MatrixGFp::zeros(&f(2), 3, 3).rank(), 0);
        assert_eq!(MatrixGFp::identity(&f(5), 4).rank(), 4);
        let m = MatrixGFp::from_rows(&f(2), 2, &[[1, 1], [1, 1]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(MatrixGFp::identity(&f(2), 2).kernel_basis().is_empty());
        assert_eq!(MatrixGFp::zeros(&f(2), 1, 3).kernel_basis().len(), 3);
        let m = MatrixGFp::from_rows(&f(2), 2, &[[1, 1]]).unwrap();
        assert_eq!(m.kernel_basis(), vec![vec![1, 1]]);
    }

    #[test]
    fn kernel_over_f5() {
        let m = MatrixGFp::from_rows(&f(5), 3, &[[1, 2, 3]]).unwrap();
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 2);
        for v in ker {
            assert!(m.mul_vec(&v).iter().all(|&e| e == 0));
        }
    }

    #[test]
    fn echelon_basis_coordinates() {
        let fp = f(3);
        let mut b = EchelonBasis::new(&fp, 3);
        assert!(b.insert(&[1, 2, 0]));
        assert!(b.insert(&[0, 1, 1]));
        assert!(!b.insert(&[1, 0, 1])); // = first + second
        // 2*(1,2,0) + 2*(0,1,1)
        let target = [2, 0, 2];
        let c = b.coordinates(&target).expect("in span");
        let mut back = vec![0u8; 3];
        for (ci, row) in c.iter().zip(b.basis()) {
            fp.axpy(&mut back, *ci, row);
        }
        assert_eq!(back, target.to_vec());
        assert!(b.coordinates(&[0, 0, 1]).is_none());
        assert!(b.contains(&[2, 1, 0]));
        assert!(!b.contains(&[0, 0, 1]));
    }

    fn arb_matrix() -> impl Strategy<Value = (u32, usize, usize, Vec<i64>)> {
        (prop::sample::select(vec![2u32, 3, 5]), 1usize..7, 1usize..7).prop_flat_map(
            |(p, r, c)| {
                (
                    Just(p),
                    Just(r),
                    Just(c),
                    prop::collection::vec(0i64..p as i64, r * c),
                )
            },
        )
    }

    fn build(p: u32, r: usize, c: usize, data: &[i64]) -> MatrixGFp {
        let rows: Vec<Vec<i64>> = data.chunks(c).map(|ch| ch.to_vec()).collect();
        assert_eq!(rows.len(), r);
        MatrixGFp::from_rows(&f(p), c, &rows).unwrap()
    }

    proptest! {
        #[test]
        fn rank_nullity((p, r, c, data) in arb_matrix()) {
            let m = build(p, r, c, &data);
            prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
        }

        #[test]
        fn kernel_vectors_vanish((p, r, c, data) in arb_matrix()) {
            let m = build(p, r, c, &data);
            for v in m.kernel_basis() {
                prop_assert!(m.mul_vec(&v).iter().all(|&e| e == 0));
            }
        }

        #[test]
        fn rref_idempotent((p, r, c, data) in arb_matrix()) {
            let m = build(p, r, c, &data);
            let (once, piv) = m.rref();
            let (twice, piv2) = once.rref();
            prop_assert_eq!(once, twice);
            prop_assert_eq!(piv, piv2);
        }

        #[test]
        fn echelon_basis_matches_rank((p, r, c, data) in arb_matrix()) {
            let m = build(p, r, c, &data);
            let mut b = EchelonBasis::new(m.field(), c);
            for i in 0..m.rows() {
                b.insert(m.row(i));
            }
            prop_assert_eq!(b.dim(), m.rank());
        }
    }
}
