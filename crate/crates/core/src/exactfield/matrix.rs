use std::fmt;

use super::field::PrimeField;
use crate::error::{Error, Result};

/// Dense row-major matrix over a prime field.
///
/// Empty shapes (`0 x n`, `n x 0`) are legal and stand for zero maps between
/// zero and non-zero spaces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// Output of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Output of [`Matrix::solve`]: one particular solution and a basis of the
/// homogeneous solutions (as columns).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub particular: Matrix,
    pub nullspace: Matrix,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}x{} mod {}](", self.rows, self.cols, self.field.modulus())?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.field.to_signed(self.get(r, c)))?;
            }
        }
        write!(f, ")")
    }
}

impl Matrix {
    pub fn new(field: PrimeField, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        let p = field.modulus();
        let data = data.into_iter().map(|x| x % p).collect();
        Matrix { field, rows, cols, data }
    }

    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.modulus();
        }
        m
    }

    /// Builds a matrix from signed integer rows. An empty slice gives `0 x 0`.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&x| field.from_i64(x)));
        }
        Matrix { field, rows: r, cols: c, data }
    }

    /// Builds a `len x k` matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, len: usize, columns: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(field, len, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), len, "column length mismatch");
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn column_vector(field: PrimeField, v: &[u64]) -> Self {
        Matrix::new(field, v.len(), 1, v.to_vec())
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: u64) {
        self.data[r * self.cols + c] = x % self.field.modulus();
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u64>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn check_field(&self, other: &Matrix) {
        assert_eq!(self.field, other.field, "matrices over different fields");
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.check_field(other);
        assert_eq!(
            self.cols, other.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let p = self.field.modulus();
        let mut out = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            let out_row = &mut out[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in out_row.iter_mut().zip(brow) {
                    *o = (*o + a * b) % p;
                }
            }
        }
        Matrix { field: self.field, rows: self.rows, cols: other.cols, data: out }
    }

    /// `self * v` for a plain coordinate vector.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let p = self.field.modulus();
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + a * b) % p)
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.check_field(other);
        assert_eq!(self.shape(), other.shape(), "shape mismatch in add");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.check_field(other);
        assert_eq!(self.shape(), other.shape(), "shape mismatch in sub");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(self.field.neg(1 % self.field.modulus()))
    }

    pub fn scale(&self, s: u64) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    /// `self + s * other`
    pub fn add_scaled(&self, other: &Matrix, s: u64) -> Matrix {
        self.check_field(other);
        assert_eq!(self.shape(), other.shape());
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, f.mul(b, s)))
            .collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> u64 {
        assert!(self.is_square());
        (0..self.rows).fold(0, |acc, i| self.field.add(acc, self.get(i, i)))
    }

    /// Horizontal concatenation; all blocks must share a row count.
    pub fn hstack(field: PrimeField, rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            out.write_block(0, off, b);
            off += b.cols;
        }
        out
    }

    /// Vertical concatenation; all blocks must share a column count.
    pub fn vstack(field: PrimeField, cols: usize, blocks: &[&Matrix]) -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            out.write_block(off, 0, b);
            off += b.rows;
        }
        out
    }

    pub fn block_diag(field: PrimeField, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.write_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    pub fn write_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            let src = &block.data[r * block.cols..(r + 1) * block.cols];
            let start = (r0 + r) * self.cols + c0;
            self.data[start..start + block.cols].copy_from_slice(src);
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        let mut out = Matrix::zeros(self.field, rows, cols);
        for r in 0..rows {
            let start = (r0 + r) * self.cols + c0;
            out.data[r * cols..(r + 1) * cols].copy_from_slice(&self.data[start..start + cols]);
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for r in 0..self.rows {
                out.data[r * cols.len() + j] = self.get(r, c);
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows.len(), self.cols);
        for (i, &r) in rows.iter().enumerate() {
            out.data[i * self.cols..(i + 1) * self.cols].copy_from_slice(self.row(r));
        }
        out
    }

    /// Reduced row-echelon form with deterministic pivoting: the first
    /// non-zero entry, scanning columns left to right and rows top to bottom.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let p = f.modulus();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if piv != row {
                for c in 0..m.cols {
                    m.data.swap(piv * m.cols + c, row * m.cols + c);
                }
            }
            let inv = f.inv(m.get(row, col));
            for c in col..m.cols {
                let i = row * m.cols + c;
                m.data[i] = f.mul(m.data[i], inv);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                let neg = p - factor;
                for c in col..m.cols {
                    let src = m.data[row * m.cols + c];
                    if src != 0 {
                        let i = r * m.cols + c;
                        m.data[i] = (m.data[i] + neg * src) % p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { reduced: m, rank: pivots.len(), pivots }
    }

    pub fn rank(&self) -> usize {
        // Eliminate along the shorter side.
        if self.rows > self.cols {
            self.transpose().rref().rank
        } else {
            self.rref().rank
        }
    }

    /// Columns form a basis of `{ v : self * v = 0 }`.
    pub fn kernel_basis(&self) -> Matrix {
        let Rref { reduced, pivots, .. } = self.rref();
        kernel_from_rref(&reduced, &pivots, self.cols)
    }

    /// Solves `self * X = b` for a (possibly multi-column) right-hand side.
    /// Returns `Ok(None)` when the system is inconsistent.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Solution>> {
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: A has {} rows but b has {}",
                self.rows, b.rows
            )));
        }
        self.check_field(b);
        let f = self.field;
        let aug = Matrix::hstack(f, self.rows, &[self, b]);
        let Rref { reduced, pivots, .. } = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut particular = Matrix::zeros(f, self.cols, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                particular.set(pc, j, reduced.get(r, self.cols + j));
            }
        }
        let a_part = reduced.block(0, 0, reduced.rows, self.cols);
        let nullspace = kernel_from_rref(&a_part, &pivots, self.cols);
        Ok(Some(Solution { particular, nullspace }))
    }

    /// Unique solution of `self * X = b`, if one exists and is unique.
    pub fn solve_unique(&self, b: &Matrix) -> Option<Matrix> {
        let sol = self.solve(b).ok()??;
        (sol.nullspace.cols == 0).then_some(sol.particular)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let id = Matrix::identity(self.field, self.rows);
        self.solve_unique(&id)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn determinant(&self) -> u64 {
        assert!(self.is_square());
        let f = self.field;
        let mut m = self.clone();
        let n = m.rows;
        let mut det = 1 % f.modulus();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| m.get(r, col) != 0) else {
                return 0;
            };
            if piv != col {
                for c in 0..n {
                    m.data.swap(piv * n + c, col * n + c);
                }
                det = f.neg(det);
            }
            let pv = m.get(col, col);
            det = f.mul(det, pv);
            let inv = f.inv(pv);
            for r in col + 1..n {
                let factor = f.mul(m.get(r, col), inv);
                if factor == 0 {
                    continue;
                }
                for c in col..n {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(col, c)));
                    m.data[r * n + c] = v;
                }
            }
        }
        det
    }

    /// Basis (as columns) of the column space, taken from the pivot columns.
    pub fn column_space(&self) -> Matrix {
        let pivots = self.rref().pivots;
        self.select_columns(&pivots)
    }

    /// A matrix `q` with `q * self = 0` whose rows span the left null space;
    /// `q` is the projection onto `target / image(self)`.
    pub fn cokernel_projection(&self) -> Matrix {
        self.transpose().kernel_basis().transpose()
    }

    /// Some right inverse `s` of a surjective matrix (`self * s = 1`).
    pub fn right_inverse(&self) -> Option<Matrix> {
        let id = Matrix::identity(self.field, self.rows);
        self.solve(&id).ok().flatten().map(|s| s.particular)
    }

    /// Some left inverse `t` of an injective matrix (`t * self = 1`).
    pub fn left_inverse(&self) -> Option<Matrix> {
        self.transpose().right_inverse().map(|m| m.transpose())
    }
}

fn kernel_from_rref(reduced: &Matrix, pivots: &[usize], cols: usize) -> Matrix {
    let f = reduced.field;
    let mut is_pivot = vec![false; cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    let mut basis = Matrix::zeros(f, cols, free.len());
    for (j, &fc) in free.iter().enumerate() {
        basis.set(fc, j, 1);
        for (r, &pc) in pivots.iter().enumerate() {
            basis.set(pc, j, f.neg(reduced.get(r, fc)));
        }
    }
    basis
}

/// Incremental row-space tracker: keeps an echelon basis and answers
/// membership / independence queries without re-reducing from scratch.
#[derive(Debug, Clone)]
pub struct SpanBuilder {
    field: PrimeField,
    len: usize,
    // (pivot column, normalised row)
    rows: Vec<(usize, Vec<u64>)>,
}

impl SpanBuilder {
    pub fn new(field: PrimeField, len: usize) -> Self {
        SpanBuilder { field, len, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [u64]) {
        let f = self.field;
        for (pc, row) in &self.rows {
            let c = v[*pc];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns `true` if it was independent of the current span.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.len);
        let f = self.field;
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[pc]);
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                for (x, &r) in row.iter_mut().zip(&w) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        self.rows.push((pc, w));
        true
    }
}
