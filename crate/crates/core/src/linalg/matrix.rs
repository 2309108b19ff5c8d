use std::fmt;

use super::subspace::Subspace;
use super::vector::{self, Vector};
use super::LinalgError;
use crate::scalars::{FieldDescriptor, Scalar};

/// Row-major dense matrix of exact scalars.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixE {
    field: FieldDescriptor,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl MatrixE {
    pub fn zeros(field: FieldDescriptor, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, entries: vec![Scalar::zero(field); rows * cols] }
    }

    pub fn identity(field: FieldDescriptor, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_rows(field: FieldDescriptor, rows: &[Vector]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, found: r.len() });
            }
            for x in r {
                if x.field() != field {
                    return Err(LinalgError::FieldMismatch(field, x.field()));
                }
                entries.push(x.clone());
            }
        }
        Ok(Self { field, rows: rows.len(), cols, entries })
    }

    /// Matrix whose j-th column is `columns[j]`; each column has length `rows`.
    pub fn from_columns(field: FieldDescriptor, rows: usize, columns: &[Vector]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(LinalgError::DimensionMismatch { expected: rows, found: c.len() });
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> Vector {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + &(a * b);
                        out.set(i, j, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        let mut out = vector::zeros(self.field, self.rows);
        for (i, o) in out.iter_mut().enumerate() {
            for (j, x) in v.iter().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() && !x.is_zero() {
                    *o = &*o + &(a * x);
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Self, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Ok(Self { field: self.field, rows: self.rows, cols: self.cols, entries })
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let entries = self.entries.iter().map(|x| c * x).collect();
        Self { field: self.field, rows: self.rows, cols: self.cols, entries }
    }

    /// `self - c * I` for a square matrix.
    pub fn shift(&self, c: &Scalar) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let v = m.get(i, i) - c;
            m.set(i, i, v);
        }
        m
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one(self.field));
        }
        let (r, pivots) = rref(&aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(LinalgError::Singular);
        }
        let mut inv = Self::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    /// Entries flattened row-major; used for Krylov dependence tests.
    fn flat(&self) -> Vector {
        self.entries.clone()
    }
}

impl fmt::Debug for MatrixE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixE {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form with first-nonzero pivoting. Returns the reduced
/// matrix (same shape, zero rows at the bottom) and the pivot columns.
pub fn rref(m: &MatrixE) -> (MatrixE, Vec<usize>) {
    let mut rows = m.row_vectors();
    let pivots = rref_rows(&mut rows, m.cols);
    let mut out = MatrixE::zeros(m.field, m.rows, m.cols);
    for (i, r) in rows.iter().enumerate() {
        for (j, x) in r.iter().enumerate() {
            out.set(i, j, x.clone());
        }
    }
    (out, pivots)
}

/// In-place RREF on a list of rows. Rows past the rank become zero.
pub(crate) fn rref_rows(rows: &mut [Vector], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            rows[r] = vector::scale(&inv, &rows[r]);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = -&row[c];
                vector::axpy(row, &f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Null space `{v : m v = 0}`.
pub fn kernel(m: &MatrixE) -> Subspace {
    let (r, pivots) = rref(m);
    let n = m.cols;
    let field = m.field;
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vector::zeros(field, n);
        v[free] = Scalar::one(field);
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -r.get(i, free);
        }
        basis.push(v);
    }
    Subspace::span(field, n, &basis).expect("kernel vectors have ambient length")
}

/// Monic minimal polynomial of a square matrix, coefficients in ascending
/// degree order (the last entry is 1).
pub fn minimal_polynomial(m: &MatrixE) -> Result<Vector, LinalgError> {
    if m.rows != m.cols {
        return Err(LinalgError::DimensionMismatch { expected: m.rows, found: m.cols });
    }
    let field = m.field;
    let n = m.rows;
    let mut powers = vec![MatrixE::identity(field, n)];
    loop {
        let k = powers.len();
        let next = powers[k - 1].mul(m)?;
        // Solve sum_{i<k} c_i M^i = -M^k.
        let mut columns: Vec<Vector> = powers.iter().map(MatrixE::flat).collect();
        columns.push(next.flat());
        let system = MatrixE::from_columns(field, n * n, &columns)?;
        let ker = kernel(&system);
        if let Some(v) = ker.basis().iter().find(|v| !v[k].is_zero()) {
            let lead = v[k].clone();
            return Ok(v.iter().map(|x| x / &lead).collect());
        }
        powers.push(next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rationals()
    }

    fn mat(rows: &[&[i64]]) -> MatrixE {
        let rows: Vec<Vector> =
            rows.iter().map(|r| r.iter().map(|&x| Scalar::from_i64(q(), x)).collect()).collect();
        MatrixE::from_rows(q(), &rows).unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = MatrixE::identity(q(), 2);
        assert_eq!(rref(&id), (id.clone(), vec![0, 1]));
        assert_eq!(rref(&mat(&[&[0, 1], &[1, 0]])).0, id);

        let f = FieldDescriptor::rational_functions();
        let e = Scalar::eta(f).unwrap();
        let one = Scalar::one(f);
        let m = MatrixE::from_rows(f, &[vec![e.clone(), e], vec![one.clone(), one.clone()]]).unwrap();
        let (r, p) = rref(&m);
        assert_eq!(p, vec![0]);
        assert_eq!(r.row(0), vec![one.clone(), one]);
        assert!(vector::is_zero(&r.row(1)));
    }

    #[test]
    fn kernels() {
        assert_eq!(kernel(&MatrixE::zeros(q(), 3, 3)).dim(), 3);
        assert_eq!(kernel(&MatrixE::identity(q(), 3)).dim(), 0);
        let m = mat(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 2);
        for v in k.basis() {
            assert!(vector::is_zero(&m.mul_vec(v).unwrap()));
        }
    }

    #[test]
    fn inverse_and_minpoly() {
        let m = mat(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).inverse(), Err(LinalgError::Singular));

        // diag(1, 1, 0): minimal polynomial T^2 - T.
        let d = mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
        let mp = minimal_polynomial(&d).unwrap();
        let expect: Vector = [0, -1, 1].iter().map(|&x| Scalar::from_i64(q(), x)).collect();
        assert_eq!(mp, expect);
    }
}
