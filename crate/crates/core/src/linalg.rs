//! Dense matrices over a prime field and exact Gaussian elimination.
//!
//! Pivots are always the first nonzero entry at or below the current row, so
//! every echelon form, kernel basis and complement produced here is a pure
//! function of the input.

use crate::field::PrimeField;
use crate::par::{self, Strategy};

/// Below this many entries elimination stays on the calling thread.
const PARALLEL_THRESHOLD: usize = 1 << 14;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self { p: field.modulus(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % m.p;
        }
        m
    }

    /// Entries are reduced modulo `p`.
    pub fn from_rows(field: PrimeField, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        let p = field.modulus();
        let data = data.into_iter().map(|x| x % p).collect();
        Self { p, rows, cols, data }
    }

    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &x) in col.iter().enumerate() {
                m.data[i * m.cols + j] = x % m.p;
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p).expect("matrix modulus is prime")
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u64) {
        self.data[i * self.cols + j] = x % self.p;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Row-major entries.
    pub fn data(&self) -> &[u64] {
        &self.data
    }

    pub fn to_row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix { p: self.p, rows: self.cols, cols: self.rows, data: vec![0; self.data.len()] };
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        assert_eq!(self.p, rhs.p);
        let p = self.p;
        let mut out = vec![0u64; self.rows * rhs.cols];
        for i in 0..self.rows {
            let orow = &mut out[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let rrow = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                for (o, &b) in orow.iter_mut().zip(rrow) {
                    *o = (*o + a * b) % p;
                }
            }
        }
        Matrix { p, rows: self.rows, cols: rhs.cols, data: out }
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| (acc + a * b) % self.p)
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| (a + b) % self.p).collect();
        self.with_data(data)
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a + self.p - b) % self.p)
            .collect();
        self.with_data(data)
    }

    pub fn scale(&self, s: u64) -> Matrix {
        let s = s % self.p;
        let data = self.data.iter().map(|a| a * s % self.p).collect();
        self.with_data(data)
    }

    fn with_data(&self, data: Vec<u64>) -> Matrix {
        Matrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.field(), self.rows);
        let mut base = self.clone();
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

    /// Kronecker product `self ⊗ rhs`: entry `((i, k), (j, l))` sits at row
    /// `i * rhs.rows + k`, column `j * rhs.cols + l`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut data = vec![0u64; rows * cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        data[(i * rhs.rows + k) * cols + j * rhs.cols + l] = a * rhs.get(k, l) % self.p;
                    }
                }
            }
        }
        Matrix { p: self.p, rows, cols, data }
    }

    pub fn block_diag(&self, rhs: &Matrix) -> Matrix {
        let mut m = Matrix { p: self.p, rows: self.rows + rhs.rows, cols: self.cols + rhs.cols, data: Vec::new() };
        m.data = vec![0; m.rows * m.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.data[i * m.cols + j] = self.get(i, j);
            }
        }
        for i in 0..rhs.rows {
            for j in 0..rhs.cols {
                m.data[(self.rows + i) * m.cols + self.cols + j] = rhs.get(i, j);
            }
        }
        m
    }

    /// Horizontal concatenation.
    pub fn hstack(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let p = blocks.first().map_or(2, |b| b.p);
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for b in blocks {
                assert_eq!(b.rows, rows);
                data.extend_from_slice(b.row(i));
            }
        }
        Matrix { p, rows, cols, data }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    pub fn echelon(&self) -> Echelon {
        self.echelon_with(Strategy::default())
    }

    /// Reduced row echelon form. Zero rows are dropped.
    pub fn echelon_with(&self, strategy: Strategy) -> Echelon {
        let mut m = self.clone();
        let pivots = rref_in_place(&mut m, strategy);
        m.data.truncate(pivots.len() * m.cols);
        m.rows = pivots.len();
        Echelon { reduced: m, pivots }
    }

    /// Basis of `{ v : self · v = 0 }`, one vector per free column in
    /// ascending column order, with a 1 in that column.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let ech = self.echelon();
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for &c in &ech.pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&j| !is_pivot[j])
            .map(|free| {
                let mut v = vec![0u64; self.cols];
                v[free] = 1 % p;
                for (k, &pc) in ech.pivots.iter().enumerate() {
                    v[pc] = (p - ech.reduced.get(k, free)) % p;
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::hstack(&[self, &Matrix::identity(self.field(), n)]);
        let ech = aug.echelon();
        if ech.pivots.len() < n || (n > 0 && ech.pivots[n - 1] >= n) {
            return None;
        }
        let mut inv = Matrix::zeros(self.field(), n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = ech.reduced.get(i, n + j);
            }
        }
        Some(inv)
    }
}

/// Output of [`Matrix::echelon`]: the nonzero rows of the reduced row echelon
/// form and their pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

fn rref_in_place(m: &mut Matrix, strategy: Strategy) -> Vec<usize> {
    let p = m.p;
    let cols = m.cols;
    let strategy = if m.data.len() >= PARALLEL_THRESHOLD { strategy } else { Strategy::Sequential };
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == m.rows {
            break;
        }
        let Some(piv) = (r..m.rows).find(|&i| m.data[i * cols + col] != 0) else {
            continue;
        };
        if piv != r {
            for j in 0..cols {
                m.data.swap(piv * cols + j, r * cols + j);
            }
        }
        let inv = crate::field::pow_mod(m.data[r * cols + col], p - 2, p);
        for x in &mut m.data[r * cols..(r + 1) * cols] {
            *x = *x * inv % p;
        }
        let pivot_row: Vec<u64> = m.data[r * cols..(r + 1) * cols].to_vec();
        par::for_each_chunk_mut(strategy, &mut m.data, cols, |i, row| {
            if i == r {
                return;
            }
            let f = row[col];
            if f == 0 {
                return;
            }
            let nf = p - f;
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(col) {
                if y != 0 {
                    *x = (*x + nf * y) % p;
                }
            }
        });
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// A subspace of `F_p^n` held as a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    p: u64,
}

impl Subspace {
    pub fn spanned_by(field: PrimeField, ambient: usize, vectors: &[Vec<u64>]) -> Self {
        let data: Vec<u64> = vectors
            .iter()
            .flat_map(|v| {
                assert_eq!(v.len(), ambient);
                v.iter().copied()
            })
            .collect();
        let m = Matrix::from_rows(field, vectors.len(), ambient, data);
        let ech = m.echelon();
        Self {
            ambient,
            basis: ech.reduced.to_row_vecs(),
            pivots: ech.pivots,
            p: field.modulus(),
        }
    }

    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Self::spanned_by(field, ambient, &[])
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its component along the basis; zero on every pivot column.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut out = v.to_vec();
        for (b, &pc) in self.basis.iter().zip(&self.pivots) {
            let f = out[pc];
            if f == 0 {
                continue;
            }
            for (x, &y) in out.iter_mut().zip(b) {
                *x = (*x + (p - f) * y) % p;
            }
        }
        out
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[u64]) -> Option<Vec<u64>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    /// Columns not hit by a pivot; the standard vectors on these columns span
    /// a complement.
    pub fn complement_columns(&self) -> Vec<usize> {
        let mut hit = vec![false; self.ambient];
        for &c in &self.pivots {
            hit[c] = true;
        }
        (0..self.ambient).filter(|&j| !hit[j]).collect()
    }

    pub fn quotient(&self) -> Quotient {
        Quotient { complement: self.complement_columns(), sub: self.clone() }
    }
}

/// `F_p^n / S` with basis the images of the standard vectors on the
/// non-pivot columns of `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    sub: Subspace,
    complement: Vec<usize>,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.sub
    }

    pub fn complement_columns(&self) -> &[usize] {
        &self.complement
    }

    /// Quotient coordinates of the class of `v`.
    pub fn project(&self, v: &[u64]) -> Vec<u64> {
        let r = self.sub.reduce(v);
        self.complement.iter().map(|&j| r[j]).collect()
    }

    /// The endomorphism induced by `m`, which must preserve the subspace.
    pub fn induced(&self, m: &Matrix) -> Matrix {
        let n = self.sub.ambient;
        let field = m.field();
        let columns: Vec<Vec<u64>> = self
            .complement
            .iter()
            .map(|&j| {
                let mut e = vec![0u64; n];
                e[j] = 1;
                self.project(&m.apply(&e))
            })
            .collect();
        Matrix::from_columns(field, self.dim(), &columns)
    }
}
