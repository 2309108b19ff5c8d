//! Coordinate vectors as plain `Vec<Scalar>` plus helpers.

use crate::scalars::{FieldDescriptor, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zeros(field: FieldDescriptor, n: usize) -> Vector {
    vec![Scalar::zero(field); n]
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit(field: FieldDescriptor, n: usize, i: usize) -> Vector {
    let mut v = zeros(field, n);
    v[i] = Scalar::one(field);
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len(), "vector lengths differ");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len(), "vector lengths differ");
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Scalar, v: &[Scalar]) -> Vector {
    if c.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| c * x).collect()
}

pub fn neg(v: &[Scalar]) -> Vector {
    v.iter().map(|x| -x).collect()
}

/// `acc += c * v` in place.
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(c * x);
        }
    }
}

/// Linear combination `sum c_i v_i`. All vectors must have length `n`.
pub fn combine(field: FieldDescriptor, n: usize, terms: &[(Scalar, &[Scalar])]) -> Vector {
    let mut acc = zeros(field, n);
    for (c, v) in terms {
        axpy(&mut acc, c, v);
    }
    acc
}
