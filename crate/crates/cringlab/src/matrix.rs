//! Dense matrices over an exact field, with deterministic row reduction.
//!
//! Pivoting is always "first nonzero entry in column order", so every
//! derived object (kernel bases, echelon forms, chosen sections) is
//! reproducible bit for bit across runs.

use crate::field::{Field, Scalar};
use std::fmt;

/// Dense matrix, row-major. Shape errors in internal compositions are
/// programming errors and panic; file loading validates shapes up front.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Outcome of an exact linear solve.
pub enum SolveOutcome {
    /// One exact solution (free variables set to zero).
    Solution(Vec<Scalar>),
    /// Row combination `y` with `y^T A = 0` and `y^T b != 0`, proving the
    /// system inconsistent.
    Infeasible(Vec<Scalar>),
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Matrix {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        for s in &data {
            assert_eq!(s.field(), field, "matrix entry field mismatch");
        }
        Matrix { field, rows, cols, data }
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds from rows of integers; convenient for fixtures and tests.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for v in *row {
                data.push(field.from_i64(*v));
            }
        }
        Matrix { field, rows: r, cols: c, data }
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field);
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "add shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sub shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| a.neg()).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a.mul(s)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "mul shape mismatch: {}x{} * {}x{}", self.rows, self.cols, other.rows, other.cols);
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Kronecker product; row/column index of the result is
    /// `(i1 * other.rows + i2, j1 * other.cols + j2)`, i.e. the left factor
    /// is the major index. This is the fixed tensor-basis convention used
    /// everywhere in the crate.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "kron field mismatch");
        let mut out = Matrix::zeros(self.field, self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.get(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i1 * other.rows + i2, j1 * other.cols + j2, a.mul(b));
                    }
                }
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack shape mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn from_columns(field: Field, rows: usize, cols: &[Vec<Scalar>]) -> Matrix {
        let mut out = Matrix::zeros(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                out.set(i, j, v.clone());
            }
        }
        out
    }

    /// Select a subset of columns, in the given order.
    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, idx.len());
        for (jo, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                out.set(i, jo, self.get(i, j).clone());
            }
        }
        out
    }

    /// Reduced row echelon form. Returns `(rref, pivot_columns, transform)`
    /// where `transform * self == rref` and `transform` is invertible.
    pub fn rref(&self) -> (Matrix, Vec<usize>, Matrix) {
        let mut m = self.clone();
        let mut t = Matrix::identity(self.field, self.rows);
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            // first nonzero entry at or below `row`
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                m.swap_rows(p, row);
                t.swap_rows(p, row);
            }
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            m.scale_row(row, &inv);
            t.scale_row(row, &inv);
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let f = m.get(r, col).clone();
                    m.sub_scaled_row(r, row, &f);
                    t.sub_scaled_row(r, row, &f);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots, t)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for j in 0..self.cols {
            let v = self.get(r, j).mul(s);
            self.set(r, j, v);
        }
    }

    /// row[r] -= f * row[src]
    fn sub_scaled_row(&mut self, r: usize, src: usize, f: &Scalar) {
        for j in 0..self.cols {
            let v = self.get(r, j).sub(&f.mul(self.get(src, j)));
            self.set(r, j, v);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, returned as the columns of a matrix.
    /// Deterministic: free variables in increasing column order, each basis
    /// vector has a 1 in "its" free coordinate.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots, _) = self.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivot_set[*j]).collect();
        let mut out = Matrix::zeros(self.field, self.cols, free.len());
        for (k, &fcol) in free.iter().enumerate() {
            out.set(fcol, k, self.field.one());
            for (prow, &pcol) in pivots.iter().enumerate() {
                out.set(pcol, k, r.get(prow, fcol).neg());
            }
        }
        out
    }

    /// Solves `self * x = b` exactly for a single column `b`.
    pub fn solve(&self, b: &[Scalar]) -> SolveOutcome {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let bm = Matrix::from_columns(self.field, self.rows, &[b.to_vec()]);
        let aug = self.hstack(&bm);
        let (r, pivots, t) = aug.rref();
        // a pivot in the last column certifies inconsistency
        if let Some(k) = pivots.iter().position(|&p| p == self.cols) {
            return SolveOutcome::Infeasible(t.row(k));
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = r.get(prow, self.cols).clone();
        }
        SolveOutcome::Solution(x)
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    /// Two-sided inverse, if the matrix is square and nonsingular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let (r, pivots, t) = self.rref();
        if pivots.len() != self.rows {
            return None;
        }
        debug_assert_eq!(r, Matrix::identity(self.field, self.rows));
        Some(t)
    }

    /// True when every column of `other` lies in the column space of `self`.
    pub fn columns_contain(&self, other: &Matrix) -> bool {
        assert_eq!(self.rows, other.rows, "ambient dimension mismatch");
        self.hstack(other).rank() == self.rank()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn mul_identity() {
        let a = Matrix::from_i64(q(), &[&[1, 2], &[3, 4]]);
        let id = Matrix::identity(q(), 2);
        assert_eq!(a.mul(&id), a);
        assert_eq!(id.mul(&a), a);
    }

    #[test]
    fn kernel_of_zero_and_identity() {
        // zero map on k^3 has a 3-dimensional kernel
        let z = Matrix::zeros(q(), 3, 3);
        assert_eq!(z.kernel_basis().cols(), 3);
        // identity on k^3 has a 0-dimensional kernel
        let id = Matrix::identity(q(), 3);
        assert_eq!(id.kernel_basis().cols(), 0);
    }

    #[test]
    fn kernel_of_rank_one_map() {
        // [[1,1],[2,2]] over Q: kernel spanned by (1,-1)
        let a = Matrix::from_i64(q(), &[&[1, 1], &[2, 2]]);
        let k = a.kernel_basis();
        assert_eq!(k.cols(), 1);
        let v = k.column(0);
        // normalize: the free coordinate is the second one, so v = (-1, 1)
        assert_eq!(v[0], q().from_i64(-1));
        assert_eq!(v[1], q().from_i64(1));
        assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn rank_of_dependent_rows() {
        // [[1,2],[2,4]] has rank 1
        let a = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]);
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn rank_nullity() {
        let a = Matrix::from_i64(q(), &[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(a.rank() + a.kernel_basis().cols(), a.cols());
    }

    #[test]
    fn solve_two_by_two() {
        // {x+y=1, x-y=0} over Q -> (1/2, 1/2)
        let a = Matrix::from_i64(q(), &[&[1, 1], &[1, -1]]);
        let b = vec![q().one(), q().zero()];
        match a.solve(&b) {
            SolveOutcome::Solution(x) => {
                assert_eq!(x[0], q().parse("1/2").unwrap());
                assert_eq!(x[1], q().parse("1/2").unwrap());
            }
            SolveOutcome::Infeasible(_) => panic!("expected a solution"),
        }
    }

    #[test]
    fn solve_infeasible_with_certificate() {
        // {x=0, x=1} is inconsistent; the certificate y satisfies
        // y^T A = 0 and y^T b != 0.
        let a = Matrix::from_i64(q(), &[&[1], &[1]]);
        let b = vec![q().zero(), q().one()];
        match a.solve(&b) {
            SolveOutcome::Solution(_) => panic!("expected infeasible"),
            SolveOutcome::Infeasible(y) => {
                let ym = Matrix::from_columns(q(), 2, &[y]).transpose();
                assert!(ym.mul(&a).is_zero());
                let yb = ym.mul(&Matrix::from_columns(q(), 2, &[b]));
                assert!(!yb.is_zero());
            }
        }
    }

    #[test]
    fn solve_trivial_gf2() {
        // x = 0 over GF(2)
        let f = Field::prime(2).unwrap();
        let a = Matrix::identity(f, 1);
        match a.solve(&[f.zero()]) {
            SolveOutcome::Solution(x) => assert_eq!(x, vec![f.zero()]),
            _ => panic!(),
        }
    }

    #[test]
    fn kron_identities() {
        // id2 (x) id3 = id6
        let a = Matrix::identity(q(), 2);
        let b = Matrix::identity(q(), 3);
        assert_eq!(a.kron(&b), Matrix::identity(q(), 6));
    }

    #[test]
    fn inverse_round_trip() {
        let a = Matrix::from_i64(q(), &[&[1, 2], &[3, 5]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(q(), 2));
        assert_eq!(inv.mul(&a), Matrix::identity(q(), 2));
        let s = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]);
        assert!(s.inverse().is_none());
    }

    #[test]
    fn transform_tracks_rref() {
        let a = Matrix::from_i64(q(), &[&[0, 1, 2], &[3, 4, 5], &[3, 5, 7]]);
        let (r, _, t) = a.rref();
        assert_eq!(t.mul(&a), r);
    }

    #[test]
    fn zero_dimensional_edge_cases() {
        let a = Matrix::zeros(q(), 0, 3);
        assert_eq!(a.rank(), 0);
        assert_eq!(a.kernel_basis().cols(), 3);
        let b = Matrix::zeros(q(), 3, 0);
        assert_eq!(b.rank(), 0);
        assert_eq!(b.kernel_basis().cols(), 0);
        match b.solve(&[q().zero(), q().zero(), q().zero()]) {
            SolveOutcome::Solution(x) => assert!(x.is_empty()),
            _ => panic!(),
        }
    }
}
