use std::fmt;

use super::matrix::{kernel, rref_rows, MatrixE};
use super::vector::{self, Vector};
use super::LinalgError;
use crate::scalars::{FieldDescriptor, Scalar};

/// A subspace of `F^n` stored by its unique RREF basis, so equal subspaces
/// compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldDescriptor,
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldDescriptor, ambient_dim: usize) -> Self {
        Self { field, ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: FieldDescriptor, ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim).map(|i| vector::unit(field, ambient_dim, i)).collect();
        Self { field, ambient_dim, basis, pivots: (0..ambient_dim).collect() }
    }

    pub fn span(field: FieldDescriptor, ambient_dim: usize, vectors: &[Vector]) -> Result<Self, LinalgError> {
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(LinalgError::DimensionMismatch { expected: ambient_dim, found: v.len() });
            }
            if let Some(x) = v.iter().find(|x| x.field() != field) {
                return Err(LinalgError::FieldMismatch(field, x.field()));
            }
        }
        let mut rows: Vec<Vector> = vectors.iter().filter(|v| !vector::is_zero(v)).cloned().collect();
        let pivots = rref_rows(&mut rows, ambient_dim);
        rows.truncate(pivots.len());
        Ok(Self { field, ambient_dim, basis: rows, pivots })
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    /// Remainder of `v` after eliminating against the basis pivots. Zero iff
    /// `v` lies in the subspace.
    pub fn residual(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = -&r[p];
                vector::axpy(&mut r, &c, b);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient_dim && vector::is_zero(&self.residual(v))
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check(other)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::span(self.field, self.ambient_dim, &all)
    }

    /// Extend by extra vectors.
    pub fn extend(&self, vectors: &[Vector]) -> Result<Self, LinalgError> {
        let mut all = self.basis.clone();
        all.extend(vectors.iter().cloned());
        Self::span(self.field, self.ambient_dim, &all)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field, self.ambient_dim));
        }
        // Solve sum a_i u_i - sum b_j w_j = 0 and map kernel vectors back.
        let k = self.dim();
        let mut columns = self.basis.clone();
        columns.extend(other.basis.iter().map(|w| vector::neg(w)));
        let system = MatrixE::from_columns(self.field, self.ambient_dim, &columns)?;
        let ker = kernel(&system);
        let vectors: Vec<Vector> = ker
            .basis()
            .iter()
            .map(|c| {
                let mut acc = vector::zeros(self.field, self.ambient_dim);
                for (coef, u) in c[..k].iter().zip(&self.basis) {
                    vector::axpy(&mut acc, coef, u);
                }
                acc
            })
            .collect();
        Self::span(self.field, self.ambient_dim, &vectors)
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }

    /// Image under a linear map.
    pub fn image(&self, m: &MatrixE) -> Result<Self, LinalgError> {
        if m.cols() != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient_dim, found: m.cols() });
        }
        let vs: Result<Vec<Vector>, _> = self.basis.iter().map(|b| m.mul_vec(b)).collect();
        Self::span(self.field, m.rows(), &vs?)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) ", self.dim(), self.ambient_dim)?;
        f.debug_list().entries(&self.basis).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rationals()
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Scalar::from_i64(q(), x)).collect()
    }

    #[test]
    fn lattice_operations() {
        let a = Subspace::span(q(), 3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let b = Subspace::span(q(), 3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        let i = a.intersection(&b).unwrap();
        assert_eq!(i, Subspace::span(q(), 3, &[v(&[0, 2, 0])]).unwrap());
        assert!(a.sum(&b).unwrap().is_full());
        assert_eq!(a.intersection(&a).unwrap(), a);
        assert!(a.contains(&v(&[3, -1, 0])));
        assert!(!a.contains(&v(&[0, 0, 1])));
        let c = Subspace::span(q(), 2, &[]).unwrap();
        assert_eq!(a.sum(&c), Err(LinalgError::AmbientMismatch(3, 2)));
    }

    #[test]
    fn canonical_basis() {
        let a = Subspace::span(q(), 3, &[v(&[2, 4, 0]), v(&[1, 1, 1])]).unwrap();
        let b = Subspace::span(q(), 3, &[v(&[0, 1, -1]), v(&[3, 5, 1])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coordinates(&v(&[1, 1, 1])), Some(v(&[1, 1])));
    }
}
