//! Commutative algebras given by structure constants on a labeled basis.

pub mod format;
mod ideals;
mod morphism;

pub use ideals::{enumerate_ideals_diagonalizable, IdealEnumeration};
pub use morphism::{find_homomorphism, LinearMapE};

use thiserror::Error;

use crate::linalg::{vector, LinalgError, MatrixE, Subspace, Vector};
use crate::scalars::{FieldDescriptor, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("structure constants are not symmetric at ({0}, {1})")]
    NotCommutative(usize, usize),
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("no homomorphism extends the given generator images: {0}")]
    Inconsistent(String),
    #[error("the generators do not generate the algebra (closure has dim {closure} of {dim})")]
    NotGenerating { closure: usize, dim: usize },
    #[error("generator {0} does not act semisimply")]
    NotSemisimple(usize),
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("invalid basis label `{0}`")]
    BadLabel(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Finite-dimensional commutative algebra: `sc[i][j]` holds the coordinates of
/// `b_i * b_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    field: FieldDescriptor,
    eta: Option<Scalar>,
    labels: Vec<String>,
    sc: Vec<Vec<Vector>>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", format::write_algebra(self, &[]))
    }
}

impl Algebra {
    /// Build from the products of basis pairs `(i, j, b_i*b_j)`; each unordered
    /// pair may appear once, omitted pairs are zero.
    pub fn from_products(
        field: FieldDescriptor,
        eta: Option<Scalar>,
        labels: Vec<String>,
        products: Vec<(usize, usize, Vector)>,
    ) -> Result<Self, AlgebraError> {
        let n = labels.len();
        let mut sc = vec![vec![vector::zeros(field, n); n]; n];
        let mut seen = vec![vec![false; n]; n];
        for (i, j, v) in products {
            if i >= n || j >= n {
                return Err(AlgebraError::DimensionMismatch { expected: n, found: i.max(j) + 1 });
            }
            if v.len() != n {
                return Err(AlgebraError::DimensionMismatch { expected: n, found: v.len() });
            }
            if seen[i][j] && sc[i][j] != v {
                return Err(AlgebraError::NotCommutative(i, j));
            }
            seen[i][j] = true;
            seen[j][i] = true;
            sc[i][j] = v.clone();
            sc[j][i] = v;
        }
        Ok(Self { field, eta, labels, sc })
    }

    /// The zero-dimensional algebra.
    pub fn zero(field: FieldDescriptor, eta: Option<Scalar>) -> Self {
        Self { field, eta, labels: Vec::new(), sc: Vec::new() }
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    /// The value of eta the constants were written with: the indeterminate in
    /// generic mode, a constant when specialized, `None` when irrelevant.
    pub fn eta(&self) -> Option<&Scalar> {
        self.eta.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &Vector {
        &self.sc[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        vector::unit(self.field, self.dim(), i)
    }

    pub fn zero_vector(&self) -> Vector {
        vector::zeros(self.field, self.dim())
    }

    pub fn scalar(&self, n: i64) -> Scalar {
        Scalar::from_i64(self.field, n)
    }

    /// Vector from `(coefficient, label)` pairs.
    pub fn vector(&self, terms: &[(Scalar, &str)]) -> Result<Vector, AlgebraError> {
        let mut v = self.zero_vector();
        for (c, name) in terms {
            let i = self.label_index(name).ok_or_else(|| AlgebraError::UnknownLabel(name.to_string()))?;
            v[i] = &v[i] + c;
        }
        Ok(v)
    }

    fn check_len(&self, v: &[Scalar]) -> Result<(), AlgebraError> {
        if v.len() != self.dim() {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim(), found: v.len() });
        }
        Ok(())
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector, AlgebraError> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let prod = &self.sc[i][j];
                if !vector::is_zero(prod) {
                    vector::axpy(&mut out, &(xi * yj), prod);
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `y -> x*y`.
    pub fn adjoint(&self, x: &[Scalar]) -> Result<MatrixE, AlgebraError> {
        self.check_len(x)?;
        let n = self.dim();
        let cols: Result<Vec<Vector>, _> = (0..n).map(|j| self.multiply(x, &self.basis_vector(j))).collect();
        Ok(MatrixE::from_columns(self.field, n, &cols?)?)
    }

    pub fn span(&self, vectors: &[Vector]) -> Result<Subspace, AlgebraError> {
        Ok(Subspace::span(self.field, self.dim(), vectors)?)
    }

    /// Smallest subspace containing `seeds` and closed under products.
    pub fn subalgebra_closure(&self, seeds: &[Vector]) -> Result<Subspace, AlgebraError> {
        let mut space = self.span(seeds)?;
        loop {
            let basis = space.basis();
            let mut new = Vec::new();
            for i in 0..basis.len() {
                for j in 0..=i {
                    let p = self.multiply(&basis[i], &basis[j])?;
                    if !space.contains(&p) {
                        new.push(p);
                    }
                }
            }
            if new.is_empty() {
                return Ok(space);
            }
            space = space.extend(&new)?;
        }
    }

    /// Smallest ideal containing `seeds`.
    pub fn ideal_closure(&self, seeds: &[Vector]) -> Result<Subspace, AlgebraError> {
        let mut space = self.span(seeds)?;
        loop {
            let mut new = Vec::new();
            for v in space.basis() {
                for k in 0..self.dim() {
                    let p = self.multiply(v, &self.basis_vector(k))?;
                    if !space.contains(&p) {
                        new.push(p);
                    }
                }
            }
            if new.is_empty() {
                return Ok(space);
            }
            space = space.extend(&new)?;
        }
    }

    pub fn is_ideal(&self, r: &Subspace) -> Result<bool, AlgebraError> {
        Ok(self.ideal_closure(r.basis())? == *r)
    }

    /// Quotient by an ideal on the complement basis of non-pivot coordinates,
    /// with the projection map.
    pub fn quotient(&self, r: &Subspace) -> Result<(Algebra, LinearMapE), AlgebraError> {
        if r.ambient_dim() != self.dim() {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim(), found: r.ambient_dim() });
        }
        if !self.is_ideal(r)? {
            return Err(AlgebraError::NotAnIdeal);
        }
        let keep: Vec<usize> = (0..self.dim()).filter(|c| !r.pivots().contains(c)).collect();
        let project = |v: &[Scalar]| -> Vector {
            let res = r.residual(v);
            keep.iter().map(|&c| res[c].clone()).collect()
        };
        let m = keep.len();
        let columns: Vec<Vector> = (0..self.dim()).map(|j| project(&self.basis_vector(j))).collect();
        let pi = LinearMapE::new(MatrixE::from_columns(self.field, m, &columns)?);
        let mut products = Vec::new();
        for a in 0..m {
            for b in 0..=a {
                products.push((a, b, project(&self.sc[keep[a]][keep[b]])));
            }
        }
        let labels = keep.iter().map(|&c| self.labels[c].clone()).collect();
        let q = Algebra::from_products(self.field, self.eta.clone(), labels, products)?;
        for i in 0..self.dim() {
            for j in 0..=i {
                let lhs = pi.apply(&self.sc[i][j])?;
                let rhs = q.multiply(&pi.apply(&self.basis_vector(i))?, &pi.apply(&self.basis_vector(j))?)?;
                if lhs != rhs {
                    return Err(AlgebraError::NotAnIdeal);
                }
            }
        }
        Ok((q, pi))
    }

    /// The multiplicative identity, if one exists.
    pub fn find_unit(&self) -> Result<Option<Vector>, AlgebraError> {
        let n = self.dim();
        if n == 0 {
            return Ok(None);
        }
        // Unknowns u_k: sum_k u_k (b_k b_i)_l = delta_il for all i, l.
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            for l in 0..n {
                let mut row: Vector = (0..n).map(|k| self.sc[k][i][l].clone()).collect();
                row.push(if i == l { Scalar::one(self.field) } else { Scalar::zero(self.field) });
                rows.push(row);
            }
        }
        let aug = MatrixE::from_rows(self.field, &rows)?;
        let (red, pivots) = crate::linalg::rref(&aug);
        if pivots.last() == Some(&n) {
            return Ok(None);
        }
        let mut u = self.zero_vector();
        for (i, &p) in pivots.iter().enumerate() {
            u[p] = red.get(i, n).clone();
        }
        Ok(Some(u))
    }

    /// Direct sum on the concatenated basis.
    pub fn direct_sum(&self, other: &Algebra) -> Result<Algebra, AlgebraError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch(self.field, other.field).into());
        }
        let (n, m) = (self.dim(), other.dim());
        let embed = |v: &Vector, offset: usize| -> Vector {
            let mut out = vector::zeros(self.field, n + m);
            for (k, x) in v.iter().enumerate() {
                out[offset + k] = x.clone();
            }
            out
        };
        let mut products = Vec::new();
        for i in 0..n {
            for j in 0..=i {
                products.push((i, j, embed(&self.sc[i][j], 0)));
            }
        }
        for i in 0..m {
            for j in 0..=i {
                products.push((n + i, n + j, embed(&other.sc[i][j], n)));
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let eta = self.eta.clone().or_else(|| other.eta.clone());
        Algebra::from_products(self.field, eta, labels, products)
    }

    /// Rename the basis; labels must be distinct and of the same count.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Algebra, AlgebraError> {
        if labels.len() != self.dim() {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim(), found: labels.len() });
        }
        self.labels = labels;
        Ok(self)
    }

    /// Render a vector as `c*label + ...`.
    pub fn format_vector(&self, v: &[Scalar]) -> String {
        format::format_vector(self, v)
    }
}

/// An algebra with designated generating axes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentedAlgebra {
    pub algebra: Algebra,
    pub generators: Vec<Vector>,
}

impl PresentedAlgebra {
    /// Checks that the generators generate.
    pub fn new(algebra: Algebra, generators: Vec<Vector>) -> Result<Self, AlgebraError> {
        let closure = algebra.subalgebra_closure(&generators)?;
        if !closure.is_full() {
            return Err(AlgebraError::NotGenerating { closure: closure.dim(), dim: algebra.dim() });
        }
        Ok(Self { algebra, generators })
    }

    /// Quotient together with the generator images.
    pub fn quotient(&self, r: &Subspace) -> Result<(PresentedAlgebra, LinearMapE), AlgebraError> {
        let (q, pi) = self.algebra.quotient(r)?;
        let gens: Result<Vec<Vector>, _> = self.generators.iter().map(|g| pi.apply(g)).collect();
        Ok((PresentedAlgebra { algebra: q, generators: gens? }, pi))
    }

    /// Generator images with zeros and repeats removed, in first-seen order.
    pub fn distinct_axes(&self) -> Vec<Vector> {
        let mut out: Vec<Vector> = Vec::new();
        for g in &self.generators {
            if !vector::is_zero(g) && !out.contains(g) {
                out.push(g.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rationals()
    }

    /// 1A + 1A on basis a, b.
    fn two_idempotents() -> Algebra {
        let a = vec![Scalar::one(q()), Scalar::zero(q())];
        let b = vec![Scalar::zero(q()), Scalar::one(q())];
        Algebra::from_products(q(), None, vec!["a".into(), "b".into()], vec![(0, 0, a), (1, 1, b)]).unwrap()
    }

    #[test]
    fn unit_and_closures() {
        let alg = two_idempotents();
        let u = alg.find_unit().unwrap().unwrap();
        assert!(alg.adjoint(&u).unwrap().is_identity());
        let a = alg.basis_vector(0);
        assert_eq!(alg.subalgebra_closure(&[a.clone()]).unwrap().dim(), 1);
        assert_eq!(alg.subalgebra_closure(&[]).unwrap().dim(), 0);
        assert_eq!(alg.ideal_closure(&[u]).unwrap().dim(), 2);
        let (quo, pi) = alg.quotient(&alg.span(&[a]).unwrap()).unwrap();
        assert_eq!(quo.dim(), 1);
        assert_eq!(quo.labels(), ["b".to_string()]);
        assert!(pi.is_surjective());
    }

    #[test]
    fn not_an_ideal() {
        let alg = two_idempotents();
        let r = alg.span(&[vec![Scalar::one(q()), Scalar::one(q())]]).unwrap();
        assert_eq!(alg.quotient(&r).unwrap_err(), AlgebraError::NotAnIdeal);
    }

    #[test]
    fn zero_algebra_has_no_unit() {
        let alg = Algebra::from_products(q(), None, vec!["x".into()], vec![]).unwrap();
        assert_eq!(alg.find_unit().unwrap(), None);
    }
}
