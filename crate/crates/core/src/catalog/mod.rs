//! Named 2-generated algebras of Jordan and associative type.
//!
//! Basis orders (labels in parentheses):
//!
//! | name          | basis                                  | generators          |
//! |---------------|----------------------------------------|---------------------|
//! | 1A            | a_0                                    | a_0, a_0            |
//! | hat1A         | a, b                                   | a, a+b              |
//! | 2B            | a_0, a_1                               | a_0, a_1            |
//! | hat2B         | a, s_0, s_1                            | a+s_0, a+s_1        |
//! | 3C            | a_m1, a_0, a_1                         | a_0, a_1            |
//! | hat3C         | qh, ah_m1, ah_0, ah_1                  | ah_0, ah_1          |
//! | bar4NPminus   | a_m1, a_0, a_1, s                      | a_0, a_1+s          |
//! | bar4NP        | a_m1, a_0, a_1, s_0, s_1               | a_0+s_0, a_1+s_1    |
//! | bar4NPprime   | qh, ah_m1, ah_0, ah_1, s               | ah_0, ah_1+s        |
//! | 4NP           | qh, ah_m1, ah_0, ah_1, s_0, s_1        | ah_0+s_0, ah_1+s_1  |
//!
//! The `x` variants exist only at eta = -1 and are quotients of their parent:
//! `3Cx`, `bar4NPminus_x` and `bar4NP_x` by the line of `a_m1+a_0+a_1`;
//! `hat3Cx`, `bar4NPprime_x` and `4NP_x` by the line of `qh`.

pub mod minf;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, PresentedAlgebra};
use crate::linalg::Vector;
use crate::scalars::{FieldDescriptor, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("eta = {0} is not allowed (eta must differ from 0 and 1)")]
    BadEta(String),
    #[error("{0} exists only at eta = -1")]
    NameRequiresEtaMinusOne(CatalogName),
    #[error("{0} is infinite-dimensional; use the sparse interface")]
    Infinite(CatalogName),
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("eta and field disagree")]
    FieldMismatch,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogName {
    OneA,
    HatOneA,
    TwoB,
    HatTwoB,
    ThreeC,
    ThreeCx,
    HatThreeC,
    HatThreeCx,
    Bar4NPminus,
    Bar4NP,
    Bar4NPprime,
    FourNP,
    Bar4NPminusX,
    Bar4NPx,
    Bar4NPprimeX,
    FourNPx,
    Minf,
}

use CatalogName::*;

impl CatalogName {
    pub const ALL: [CatalogName; 17] = [
        OneA, HatOneA, TwoB, HatTwoB, ThreeC, ThreeCx, HatThreeC, HatThreeCx, Bar4NPminus, Bar4NP,
        Bar4NPprime, FourNP, Bar4NPminusX, Bar4NPx, Bar4NPprimeX, FourNPx, Minf,
    ];

    /// Rows of Table 5, in table order.
    pub const TABLE5: [CatalogName; 10] =
        [OneA, HatOneA, TwoB, HatTwoB, ThreeC, HatThreeC, Bar4NPminus, Bar4NP, Bar4NPprime, FourNP];

    /// Rows of Table 6, in table order.
    pub const TABLE6: [CatalogName; 6] = [ThreeCx, HatThreeCx, Bar4NPminusX, Bar4NPx, Bar4NPprimeX, FourNPx];

    pub fn as_str(&self) -> &'static str {
        match self {
            OneA => "1A",
            HatOneA => "hat1A",
            TwoB => "2B",
            HatTwoB => "hat2B",
            ThreeC => "3C",
            ThreeCx => "3Cx",
            HatThreeC => "hat3C",
            HatThreeCx => "hat3Cx",
            Bar4NPminus => "bar4NPminus",
            Bar4NP => "bar4NP",
            Bar4NPprime => "bar4NPprime",
            FourNP => "4NP",
            Bar4NPminusX => "bar4NPminus_x",
            Bar4NPx => "bar4NP_x",
            Bar4NPprimeX => "bar4NPprime_x",
            FourNPx => "4NP_x",
            Minf => "Minf",
        }
    }

    pub fn requires_eta_minus_one(&self) -> bool {
        matches!(self, ThreeCx | HatThreeCx | Bar4NPminusX | Bar4NPx | Bar4NPprimeX | FourNPx)
    }

    /// Whether the algebra is associative-type (eta plays no role).
    pub fn is_associative_type(&self) -> bool {
        matches!(self, OneA | HatOneA | TwoB | HatTwoB)
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CatalogName {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .iter()
            .find(|n| n.as_str() == s)
            .copied()
            .ok_or_else(|| CatalogError::UnknownName(s.to_string()))
    }
}

/// Small builder: structure constants by label.
struct Table {
    field: FieldDescriptor,
    labels: Vec<String>,
    products: Vec<(usize, usize, Vector)>,
}

impl Table {
    fn new(field: FieldDescriptor, labels: &[&str]) -> Self {
        Self { field, labels: labels.iter().map(|s| s.to_string()).collect(), products: Vec::new() }
    }

    fn idx(&self, l: &str) -> usize {
        self.labels.iter().position(|x| x == l).expect("catalog label")
    }

    fn vec(&self, terms: &[(Scalar, &str)]) -> Vector {
        let mut v = vec![Scalar::zero(self.field); self.labels.len()];
        for (c, l) in terms {
            let i = self.idx(l);
            v[i] = &v[i] + c;
        }
        v
    }

    fn set(&mut self, x: &str, y: &str, terms: &[(Scalar, &str)]) {
        let v = self.vec(terms);
        self.products.push((self.idx(x), self.idx(y), v));
    }

    fn finish(self, eta: Option<Scalar>) -> Algebra {
        Algebra::from_products(self.field, eta, self.labels, self.products).expect("catalog table")
    }
}

fn one_a(f: FieldDescriptor, eta: &Scalar) -> Algebra {
    let mut t = Table::new(f, &["a_0"]);
    t.set("a_0", "a_0", &[(Scalar::one(f), "a_0")]);
    t.finish(Some(eta.clone()))
}

fn two_b(f: FieldDescriptor, eta: &Scalar, labels: [&str; 2]) -> Algebra {
    let mut t = Table::new(f, &labels);
    for l in labels {
        t.set(l, l, &[(Scalar::one(f), l)]);
    }
    t.finish(Some(eta.clone()))
}

fn three_c(f: FieldDescriptor, eta: &Scalar) -> Algebra {
    let names = ["a_m1", "a_0", "a_1"];
    let mut t = Table::new(f, &names);
    let half_eta = eta / &Scalar::from_i64(f, 2);
    for (k, i) in names.iter().enumerate() {
        t.set(i, i, &[(Scalar::one(f), i)]);
        for (l, j) in names.iter().enumerate().skip(k + 1) {
            let other = names[3 - k - l];
            t.set(i, j, &[(half_eta.clone(), i), (half_eta.clone(), j), (-&half_eta, other)]);
        }
    }
    t.finish(Some(eta.clone()))
}

fn hat_three_c(f: FieldDescriptor, eta: &Scalar) -> Algebra {
    let names = ["ah_m1", "ah_0", "ah_1"];
    let mut all = vec!["qh"];
    all.extend(names);
    let mut t = Table::new(f, &all);
    let ep1 = eta + &Scalar::one(f);
    let two = Scalar::from_i64(f, 2);
    t.set("qh", "qh", &[(ep1.clone(), "qh")]);
    for n in names {
        t.set("qh", n, &[(ep1.clone(), n)]);
        t.set(n, n, &[(Scalar::one(f), n)]);
    }
    let c_sum = &ep1 / &two;
    let c_other = (Scalar::one(f) - eta) / two;
    let minus_half = Scalar::from_ratio(f, -1, 2);
    for k in 0..3 {
        for l in k + 1..3 {
            let other = names[3 - k - l];
            t.set(
                names[k],
                names[l],
                &[
                    (minus_half.clone(), "qh"),
                    (c_sum.clone(), names[k]),
                    (c_sum.clone(), names[l]),
                    (c_other.clone(), other),
                ],
            );
        }
    }
    t.finish(Some(eta.clone()))
}

fn relabel(alg: Algebra, labels: &[&str]) -> Algebra {
    alg.with_labels(labels.iter().map(|s| s.to_string()).collect()).expect("label count")
}

/// Algebras whose generators are fixed vectors of the direct sum.
fn presented(alg: Algebra, gens: &[&[&str]]) -> PresentedAlgebra {
    let f = alg.field();
    let generators = gens
        .iter()
        .map(|g| {
            let terms: Vec<(Scalar, &str)> = g.iter().map(|l| (Scalar::one(f), *l)).collect();
            alg.vector(&terms).expect("catalog label")
        })
        .collect();
    PresentedAlgebra::new(alg, generators).expect("catalog generators generate")
}

/// The designated presentation of a named algebra. `eta` must lie in `field`
/// (the indeterminate in generic mode).
pub fn build(name: CatalogName, field: FieldDescriptor, eta: &Scalar) -> Result<PresentedAlgebra, CatalogError> {
    if eta.field() != field {
        return Err(CatalogError::FieldMismatch);
    }
    if eta.is_zero() || eta.is_one() {
        return Err(CatalogError::BadEta(eta.to_string()));
    }
    let f = field;
    let minus_one = Scalar::from_i64(f, -1);
    if name.requires_eta_minus_one() && *eta != minus_one {
        return Err(CatalogError::NameRequiresEtaMinusOne(name));
    }
    let sum_line = |p: &PresentedAlgebra, labels: &[&str]| -> Result<PresentedAlgebra, CatalogError> {
        let terms: Vec<(Scalar, &str)> = labels.iter().map(|l| (Scalar::one(f), *l)).collect();
        let r = p.algebra.span(&[p.algebra.vector(&terms)?])?;
        Ok(p.quotient(&r)?.0)
    };
    let p = match name {
        OneA => presented(one_a(f, eta), &[&["a_0"], &["a_0"]]),
        HatOneA => {
            let alg = relabel(one_a(f, eta).direct_sum(&one_a(f, eta))?, &["a", "b"]);
            presented(alg, &[&["a"], &["a", "b"]])
        }
        TwoB => presented(two_b(f, eta, ["a_0", "a_1"]), &[&["a_0"], &["a_1"]]),
        HatTwoB => {
            let alg = relabel(one_a(f, eta).direct_sum(&two_b(f, eta, ["a_0", "a_1"]))?, &["a", "s_0", "s_1"]);
            presented(alg, &[&["a", "s_0"], &["a", "s_1"]])
        }
        ThreeC => presented(three_c(f, eta), &[&["a_0"], &["a_1"]]),
        HatThreeC => presented(hat_three_c(f, eta), &[&["ah_0"], &["ah_1"]]),
        Bar4NPminus => {
            let alg = relabel(three_c(f, eta).direct_sum(&one_a(f, eta))?, &["a_m1", "a_0", "a_1", "s"]);
            presented(alg, &[&["a_0"], &["a_1", "s"]])
        }
        Bar4NP => {
            let alg = relabel(
                three_c(f, eta).direct_sum(&two_b(f, eta, ["s_0", "s_1"]))?,
                &["a_m1", "a_0", "a_1", "s_0", "s_1"],
            );
            presented(alg, &[&["a_0", "s_0"], &["a_1", "s_1"]])
        }
        Bar4NPprime => {
            let alg = relabel(
                hat_three_c(f, eta).direct_sum(&one_a(f, eta))?,
                &["qh", "ah_m1", "ah_0", "ah_1", "s"],
            );
            presented(alg, &[&["ah_0"], &["ah_1", "s"]])
        }
        FourNP => {
            let alg = hat_three_c(f, eta).direct_sum(&two_b(f, eta, ["s_0", "s_1"]))?;
            presented(alg, &[&["ah_0", "s_0"], &["ah_1", "s_1"]])
        }
        ThreeCx => sum_line(&build(ThreeC, f, eta)?, &["a_m1", "a_0", "a_1"])?,
        Bar4NPminusX => sum_line(&build(Bar4NPminus, f, eta)?, &["a_m1", "a_0", "a_1"])?,
        Bar4NPx => sum_line(&build(Bar4NP, f, eta)?, &["a_m1", "a_0", "a_1"])?,
        HatThreeCx => sum_line(&build(HatThreeC, f, eta)?, &["qh"])?,
        Bar4NPprimeX => sum_line(&build(Bar4NPprime, f, eta)?, &["qh"])?,
        FourNPx => sum_line(&build(FourNP, f, eta)?, &["qh"])?,
        Minf => return Err(CatalogError::Infinite(name)),
    };
    Ok(p)
}

/// Build in `Q(eta)` with eta generic.
pub fn build_generic(name: CatalogName) -> Result<PresentedAlgebra, CatalogError> {
    let f = FieldDescriptor::rational_functions();
    build(name, f, &Scalar::eta(f).expect("generic"))
}

/// Build over Q at a rational eta value.
pub fn build_at(name: CatalogName, eta: &Scalar) -> Result<PresentedAlgebra, CatalogError> {
    build(name, eta.field(), eta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for n in CatalogName::ALL {
            assert_eq!(n.as_str().parse::<CatalogName>().unwrap(), n);
        }
        assert!("5A".parse::<CatalogName>().is_err());
    }

    #[test]
    fn three_c_product() {
        let p = build_generic(ThreeC).unwrap();
        let a = &p.algebra;
        let prod = a.multiply(&p.generators[0], &p.generators[1]).unwrap();
        let f = a.field();
        let h = &Scalar::eta(f).unwrap() / &Scalar::from_i64(f, 2);
        let expect = a.vector(&[(h.clone(), "a_0"), (h.clone(), "a_1"), (-h, "a_m1")]).unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn eta_checks() {
        let q = FieldDescriptor::rationals();
        assert!(matches!(build_at(ThreeCx, &Scalar::from_i64(q, 3)), Err(CatalogError::NameRequiresEtaMinusOne(_))));
        assert!(matches!(build_at(ThreeC, &Scalar::one(q)), Err(CatalogError::BadEta(_))));
        assert_eq!(build_at(ThreeCx, &Scalar::from_i64(q, -1)).unwrap().algebra.dim(), 2);
        assert!(matches!(build_generic(Minf), Err(CatalogError::Infinite(_))));
    }

    #[test]
    fn dimensions() {
        let dims = [1, 2, 2, 3, 3, 4, 4, 5, 5, 6];
        for (n, d) in CatalogName::TABLE5.iter().zip(dims) {
            assert_eq!(build_generic(*n).unwrap().algebra.dim(), d, "{n}");
        }
    }
}
