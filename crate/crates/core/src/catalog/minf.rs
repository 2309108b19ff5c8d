//! The infinite-dimensional algebra at eta = 1/2 with basis `a_i` (i in Z)
//! and `p_k` (k > 0), stored sparsely. `p_0` is read as 0.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::report::Check;
use crate::scalars::{FieldDescriptor, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sym {
    A(i64),
    P(u64),
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sym::A(i) => write!(f, "a_{i}"),
            Sym::P(k) => write!(f, "p_{k}"),
        }
    }
}

/// Finitely supported vector; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseVector {
    field: FieldDescriptor,
    terms: BTreeMap<Sym, Scalar>,
}

impl fmt::Debug for SparseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SparseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(s, c)| format!("({c})*{s}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl SparseVector {
    pub fn zero(field: FieldDescriptor) -> Self {
        Self { field, terms: BTreeMap::new() }
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn a(field: FieldDescriptor, i: i64) -> Self {
        Self::zero(field).plus(&Scalar::one(field), Sym::A(i))
    }

    /// `p_k` for `k > 0`, zero for `k = 0`.
    pub fn p(field: FieldDescriptor, k: u64) -> Self {
        Self::zero(field).plus(&Scalar::one(field), Sym::P(k))
    }

    /// Add `c * sym`, reading `p_0` as zero.
    pub fn plus(mut self, c: &Scalar, sym: Sym) -> Self {
        self.add_term(c, sym);
        self
    }

    fn add_term(&mut self, c: &Scalar, sym: Sym) {
        if c.is_zero() || sym == Sym::P(0) {
            return;
        }
        let entry = self.terms.entry(sym).or_insert_with(|| Scalar::zero(c.field()));
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&sym);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, sym: Sym) -> Scalar {
        self.terms.get(&sym).cloned().unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Sym, &Scalar)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(c, *s);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Scalar::from_i64(self.field, -1)))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.field);
        for (s, x) in &self.terms {
            out.add_term(&(c * x), *s);
        }
        out
    }

    /// `sum c_i v_i`.
    pub fn combo(field: FieldDescriptor, parts: &[(Scalar, &SparseVector)]) -> Self {
        parts.iter().fold(Self::zero(field), |acc, (c, v)| acc.add(&v.scale(c)))
    }
}

fn frac(f: FieldDescriptor, n: i64, d: i64) -> Scalar {
    Scalar::from_ratio(f, n, d)
}

fn basis_product(f: FieldDescriptor, x: Sym, y: Sym) -> SparseVector {
    let z = SparseVector::zero(f);
    match (x, y) {
        (Sym::A(i), Sym::A(j)) => z
            .plus(&Scalar::one(f), Sym::P(i.abs_diff(j)))
            .plus(&frac(f, 1, 2), Sym::A(i))
            .plus(&frac(f, 1, 2), Sym::A(j)),
        (Sym::A(i), Sym::P(k)) | (Sym::P(k), Sym::A(i)) => {
            let k = k as i64;
            z.plus(&frac(f, 1, 2), Sym::P(k as u64))
                .plus(&frac(f, -1, 4), Sym::A(i))
                .plus(&frac(f, 1, 8), Sym::A(i - k))
                .plus(&frac(f, 1, 8), Sym::A(i + k))
        }
        (Sym::P(k), Sym::P(l)) => z
            .plus(&frac(f, -1, 4), Sym::P(k))
            .plus(&frac(f, -1, 4), Sym::P(l))
            .plus(&frac(f, 1, 8), Sym::P(k + l))
            .plus(&frac(f, 1, 8), Sym::P(k.abs_diff(l))),
    }
}

/// Bilinear product.
pub fn inf_multiply(x: &SparseVector, y: &SparseVector) -> SparseVector {
    let f = x.field;
    let mut out = SparseVector::zero(f);
    for (sx, cx) in &x.terms {
        for (sy, cy) in &y.terms {
            let c = cx * cy;
            for (s, v) in basis_product(f, *sx, *sy).terms {
                out.add_term(&(&c * &v), s);
            }
        }
    }
    out
}

/// `x_k = p_k + (a_{i+k} + a_{i-k})/4`, a 1-eigenvector of `a_i`.
pub fn x_vec(f: FieldDescriptor, i: i64, k: u64) -> SparseVector {
    let q = frac(f, 1, 4);
    SparseVector::p(f, k).plus(&q, Sym::A(i + k as i64)).plus(&q, Sym::A(i - k as i64))
}

/// `z_k = p_k + a_i/2 - (a_{i+k} + a_{i-k})/4`, a 0-eigenvector of `a_i`.
pub fn z_vec(f: FieldDescriptor, i: i64, k: u64) -> SparseVector {
    let q = frac(f, -1, 4);
    SparseVector::p(f, k)
        .plus(&frac(f, 1, 2), Sym::A(i))
        .plus(&q, Sym::A(i + k as i64))
        .plus(&q, Sym::A(i - k as i64))
}

/// `w_k = a_{i+k} - a_{i-k}`, a 1/2-eigenvector of `a_i`.
pub fn w_vec(f: FieldDescriptor, i: i64, k: u64) -> SparseVector {
    SparseVector::a(f, i + k as i64).plus(&Scalar::from_i64(f, -1), Sym::A(i - k as i64))
}

/// Split `v` into its 1-, 0- and 1/2-eigencomponents for `a_i`, using the
/// basis `a_i, x_k, z_k, w_k`.
pub fn decompose(v: &SparseVector, i: i64) -> [SparseVector; 3] {
    let f = v.field;
    let mut c1 = SparseVector::zero(f);
    let mut c0 = SparseVector::zero(f);
    let mut ch = SparseVector::zero(f);
    let half = frac(f, 1, 2);
    let ai = SparseVector::a(f, i);
    for (s, c) in &v.terms {
        match *s {
            Sym::A(j) if j == i => c1 = c1.add(&ai.scale(c)),
            Sym::A(j) => {
                // a_{i±k} = (x_k - z_k) + a_i/2 ± w_k/2
                let k = j.abs_diff(i);
                let sign = if j > i { half.clone() } else { -&half };
                c1 = c1.add(&x_vec(f, i, k).scale(c)).add(&ai.scale(&(c * &half)));
                c0 = c0.sub(&z_vec(f, i, k).scale(c));
                ch = ch.add(&w_vec(f, i, k).scale(&(c * &sign)));
            }
            Sym::P(k) => {
                // p_k = (x_k + z_k)/2 - a_i/4
                let h = c * &half;
                c1 = c1.add(&x_vec(f, i, k).scale(&h)).add(&ai.scale(&(c * &frac(f, -1, 4))));
                c0 = c0.add(&z_vec(f, i, k).scale(&h));
            }
        }
    }
    [c1, c0, ch]
}

/// Verdicts for the axis `a_i` on the window `k = 1..=window`.
#[derive(Debug, Clone)]
pub struct InfAxisReport {
    pub checks: Vec<Check>,
    /// Observed fusion table on labels `1, 0, 1/2`.
    pub observed: [[BTreeSet<usize>; 3]; 3],
}

impl InfAxisReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Eigenvector identities for `a_i` and fusion of their products against
/// `1*0 = {}`, `1*1 = {1}`, `0*0 = {0}`, `x*1/2 = {1/2}`, `1/2*1/2 = {1, 0}`.
pub fn inf_axis_check(i: i64, window: u64) -> InfAxisReport {
    inf_axis_check_in(FieldDescriptor::rationals(), i, window)
}

pub fn inf_axis_check_in(f: FieldDescriptor, i: i64, window: u64) -> InfAxisReport {
    let mut checks = Vec::new();
    let ai = SparseVector::a(f, i);
    let half = frac(f, 1, 2);
    let mut eig = |name: String, v: &SparseVector, lambda: &Scalar| {
        let diff = inf_multiply(&ai, v).sub(&v.scale(lambda));
        checks.push(Check::from_residual(name, &diff));
    };
    eig(format!("a_{i}*a_{i}=a_{i}"), &ai, &Scalar::one(f));
    let mut vectors: Vec<(usize, String, SparseVector)> = vec![(0, format!("a_{i}"), ai.clone())];
    for k in 1..=window {
        let (x, z, w) = (x_vec(f, i, k), z_vec(f, i, k), w_vec(f, i, k));
        eig(format!("x_{k} in E_1"), &x, &Scalar::one(f));
        eig(format!("z_{k} in E_0"), &z, &Scalar::zero(f));
        eig(format!("w_{k} in E_1/2"), &w, &half);
        vectors.push((0, format!("x_{k}"), x));
        vectors.push((1, format!("z_{k}"), z));
        vectors.push((2, format!("w_{k}"), w));
    }
    let allowed = |s: usize, t: usize| -> BTreeSet<usize> {
        match (s.min(t), s.max(t)) {
            (0, 0) => [0].into(),
            (1, 1) => [1].into(),
            (0, 1) => BTreeSet::new(),
            (2, 2) => [0, 1].into(),
            _ => [2].into(),
        }
    };
    let mut observed: [[BTreeSet<usize>; 3]; 3] = Default::default();
    for (n, (s, name_u, u)) in vectors.iter().enumerate() {
        for (t, name_v, v) in &vectors[n..] {
            let prod = inf_multiply(u, v);
            let parts = decompose(&prod, i);
            let ok = allowed(*s, *t);
            let mut bad = SparseVector::zero(f);
            for (label, part) in parts.iter().enumerate() {
                if !part.is_zero() {
                    observed[*s][*t].insert(label);
                    observed[*t][*s].insert(label);
                    if !ok.contains(&label) {
                        bad = bad.add(part);
                    }
                }
            }
            checks.push(Check::from_residual(format!("fusion {name_u}*{name_v}"), &bad));
        }
    }
    InfAxisReport { checks, observed }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rationals()
    }

    #[test]
    fn basic_products() {
        let f = q();
        let a0 = SparseVector::a(f, 0);
        assert_eq!(inf_multiply(&a0, &a0), a0);
        let a1 = SparseVector::a(f, 1);
        let expect = SparseVector::p(f, 1).plus(&frac(f, 1, 2), Sym::A(0)).plus(&frac(f, 1, 2), Sym::A(1));
        assert_eq!(inf_multiply(&a0, &a1), expect);
        let p1 = SparseVector::p(f, 1);
        let pp = SparseVector::p(f, 1).scale(&frac(f, -1, 2)).plus(&frac(f, 1, 8), Sym::P(2));
        assert_eq!(inf_multiply(&p1, &p1), pp);
    }

    #[test]
    fn decomposition_reassembles() {
        let f = q();
        let v = SparseVector::a(f, 3).plus(&frac(f, 2, 3), Sym::P(2)).plus(&Scalar::one(f), Sym::A(-1));
        let [c1, c0, ch] = decompose(&v, 1);
        assert_eq!(c1.add(&c0).add(&ch), v);
    }

    #[test]
    fn window_two_passes() {
        assert!(inf_axis_check(0, 2).all_hold());
        assert!(inf_axis_check(-3, 2).all_hold());
    }
}
