//! Seeded property suites shared by the `properties` and `acceptance` targets.
#![allow(dead_code)]

use axial::algebra::PresentedAlgebra;
use axial::catalog::{build, CatalogName};
use axial::fusion::{eigenspaces, enclosure, jordan_phi, miyamoto_involutions, projection_via_polynomial, FusionRule};
use axial::linalg::{vector, MatrixE, Subspace, Vector};
use axial::scalars::{FieldDescriptor, Scalar};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

pub const CASES: u32 = 200;

pub const TABLE5_NAMES: [&str; 10] =
    ["1A", "hat1A", "2B", "hat2B", "3C", "hat3C", "bar4NPminus", "bar4NP", "bar4NPprime", "4NP"];
pub const TABLE6_NAMES: [&str; 6] = ["3Cx", "hat3Cx", "bar4NPminus_x", "bar4NP_x", "bar4NPprime_x", "4NP_x"];

pub fn runner(seed: u8, cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]))
}

/// Field and eta: generic over Q, a rational value, a value in F_7, or -1.
#[derive(Debug, Clone, Copy)]
pub struct Setting {
    pub kind: u8,
    pub n: i64,
    pub d: i64,
}

impl Setting {
    pub fn resolve(&self) -> Option<(FieldDescriptor, Scalar)> {
        let (f, eta) = match self.kind % 4 {
            0 => {
                let f = FieldDescriptor::rational_functions();
                (f, Scalar::eta(f).ok()?)
            }
            1 => {
                let f = FieldDescriptor::rationals();
                (f, Scalar::from_ratio(f, self.n, self.d))
            }
            2 => {
                let f = FieldDescriptor::new(7, false).ok()?;
                if self.d % 7 == 0 {
                    return None;
                }
                (f, Scalar::from_ratio(f, self.n, self.d))
            }
            _ => {
                let f = FieldDescriptor::rationals();
                (f, Scalar::from_i64(f, -1))
            }
        };
        if eta.is_zero() || eta.is_one() {
            return None;
        }
        Some((f, eta))
    }
}

pub fn setting() -> impl Strategy<Value = Setting> {
    (0u8..4, -9i64..10, 1i64..6).prop_map(|(kind, n, d)| Setting { kind, n, d })
}

/// A small random scalar `(a + b*eta) / c`.
pub fn scalar(f: FieldDescriptor, eta: &Scalar, (a, b, c): (i64, i64, i64)) -> Scalar {
    let base = &Scalar::from_i64(f, a) + &(&Scalar::from_i64(f, b) * eta);
    &base * &Scalar::from_ratio(f, 1, c)
}

pub fn coeffs(len: usize) -> impl Strategy<Value = Vec<(i64, i64, i64)>> {
    prop::collection::vec((-4i64..5, -2i64..3, 1i64..4), len)
}

pub fn random_vector(f: FieldDescriptor, eta: &Scalar, n: usize, c: &[(i64, i64, i64)]) -> Vector {
    (0..n).map(|i| scalar(f, eta, c[i % c.len()])).collect()
}

pub struct Instance {
    pub name: &'static str,
    pub eta: Scalar,
    pub presented: PresentedAlgebra,
    pub rule: FusionRule,
}

/// A catalog algebra for `pick`, restricted to `names` (the `x` variants are
/// included when eta = -1).
pub fn instance(s: &Setting, pick: usize, names: &[&'static str]) -> Option<Instance> {
    let (f, eta) = s.resolve()?;
    let minus_one = eta == Scalar::from_i64(f, -1);
    let pool: Vec<&'static str> = if minus_one && names.len() == TABLE5_NAMES.len() {
        names.iter().chain(TABLE6_NAMES.iter()).copied().collect()
    } else {
        names.to_vec()
    };
    let name = pool[pick % pool.len()];
    let presented = build(name.parse::<CatalogName>().ok()?, f, &eta).ok()?;
    let rule = jordan_phi(&[], &eta).ok()?;
    Some(Instance { name, eta, presented, rule })
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

fn run<S: Strategy>(
    seed: u8,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner(seed, CASES).run(&strategy, test).map_err(|e| e.to_string())
}

fn instance_input() -> impl Strategy<Value = (Setting, usize, Vec<(i64, i64, i64)>, Vec<(i64, i64, i64)>)> {
    (setting(), 0usize..64, coeffs(7), coeffs(7))
}

/// `xy = yx` for random elements of random catalog algebras.
pub fn commutativity() -> Result<(), String> {
    run(11, instance_input(), |(s, pick, cx, cy)| {
        let Some(inst) = instance(&s, pick, &TABLE5_NAMES) else { return Ok(()) };
        let alg = &inst.presented.algebra;
        let f = alg.field();
        let x = random_vector(f, &inst.eta, alg.dim(), &cx);
        let y = random_vector(f, &inst.eta, alg.dim(), &cy);
        let xy = alg.multiply(&x, &y).unwrap();
        let yx = alg.multiply(&y, &x).unwrap();
        check(xy == yx, || format!("{}: xy != yx", inst.name))
    })
}

/// Every Miyamoto map of every enclosure axis is multiplicative and squares
/// to the identity.
pub fn miyamoto_automorphism() -> Result<(), String> {
    run(12, instance_input(), |(s, pick, cx, cy)| {
        let Some(inst) = instance(&s, pick, &TABLE5_NAMES) else { return Ok(()) };
        let alg = &inst.presented.algebra;
        let f = alg.field();
        let x = random_vector(f, &inst.eta, alg.dim(), &cx);
        let y = random_vector(f, &inst.eta, alg.dim(), &cy);
        let axes = enclosure(&inst.presented, &inst.rule, 64).unwrap();
        let a = &axes[pick % axes.len()];
        for tau in miyamoto_involutions(alg, a, &inst.rule).unwrap() {
            let lhs = tau.mul_vec(&alg.multiply(&x, &y).unwrap()).unwrap();
            let rhs = alg.multiply(&tau.mul_vec(&x).unwrap(), &tau.mul_vec(&y).unwrap()).unwrap();
            check(lhs == rhs, || format!("{}: tau(xy) != tau(x)tau(y)", inst.name))?;
            check(tau.mul(&tau).unwrap().is_identity(), || format!("{}: tau^2 != 1", inst.name))?;
            let image: Vec<Vector> = axes.iter().map(|b| tau.mul_vec(b).unwrap()).collect();
            check(image.iter().all(|b| axes.contains(b)), || format!("{}: tau does not permute the enclosure", inst.name))?;
        }
        Ok(())
    })
}

/// The projections of an axis are orthogonal idempotents summing to the
/// identity, and `a * pr_s(v) = lambda_s pr_s(v)`.
pub fn projection_resolution() -> Result<(), String> {
    run(13, instance_input(), |(s, pick, cv, _)| {
        let Some(inst) = instance(&s, pick, &TABLE5_NAMES) else { return Ok(()) };
        let alg = &inst.presented.algebra;
        let (f, n) = (alg.field(), alg.dim());
        let axes = enclosure(&inst.presented, &inst.rule, 64).unwrap();
        let a = &axes[pick % axes.len()];
        let prs: Vec<MatrixE> =
            (0..inst.rule.len()).map(|s| projection_via_polynomial(alg, a, &inst.rule, s).unwrap()).collect();
        let mut total = MatrixE::zeros(f, n, n);
        for pr in &prs {
            total = total.add(pr).unwrap();
        }
        check(total.is_identity(), || format!("{}: sum of projections != 1", inst.name))?;
        for (i, p) in prs.iter().enumerate() {
            for (j, q) in prs.iter().enumerate() {
                let pq = p.mul(q).unwrap();
                let ok = if i == j { pq == *p } else { pq.is_zero() };
                check(ok, || format!("{}: pr_{i} pr_{j} wrong", inst.name))?;
            }
        }
        let v = random_vector(f, &inst.eta, n, &cv);
        for (s, pr) in prs.iter().enumerate() {
            let w = pr.mul_vec(&v).unwrap();
            let aw = alg.multiply(a, &w).unwrap();
            check(aw == vector::scale(inst.rule.lambda(s), &w), || format!("{}: a pr_{s}(v) != lambda pr_{s}(v)", inst.name))?;
        }
        Ok(())
    })
}

/// `a(xy) = x(ay)` for `x` in `E_1(a) + E_0(a)`, in hat2B and 4NP.
pub fn seress() -> Result<(), String> {
    run(14, instance_input(), |(s, pick, cx, cy)| {
        let Some(inst) = instance(&s, pick, &["hat2B", "4NP"]) else { return Ok(()) };
        let alg = &inst.presented.algebra;
        let (f, n) = (alg.field(), alg.dim());
        let axes = enclosure(&inst.presented, &inst.rule, 64).unwrap();
        let a = &axes[pick % axes.len()];
        let spaces = eigenspaces(alg, a, &inst.rule).unwrap();
        let (one, zero) = (inst.rule.label_index("1").unwrap(), inst.rule.label_index("0").unwrap());
        let e10 = spaces[one].sum(&spaces[zero]).unwrap();
        let mut x = vector::zeros(f, n);
        for (k, b) in e10.basis().iter().enumerate() {
            vector::axpy(&mut x, &scalar(f, &inst.eta, cx[k % cx.len()]), b);
        }
        let y = random_vector(f, &inst.eta, n, &cy);
        let lhs = alg.multiply(a, &alg.multiply(&x, &y).unwrap()).unwrap();
        let rhs = alg.multiply(&x, &alg.multiply(a, &y).unwrap()).unwrap();
        check(lhs == rhs, || format!("{}: a(xy) != x(ay)", inst.name))
    })
}

/// `dim(U+W) + dim(U∩W) = dim U + dim W`.
pub fn modular_law() -> Result<(), String> {
    let strategy = (setting(), 1usize..8, 0usize..6, 0usize..6, coeffs(48), coeffs(48));
    run(15, strategy, |(s, n, ku, kw, cu, cw)| {
        let Some((f, eta)) = s.resolve() else { return Ok(()) };
        let make = |k: usize, c: &[(i64, i64, i64)]| -> Vec<Vector> {
            (0..k)
                .map(|i| {
                    let mut v = random_vector(f, &eta, n, &c[i * n..]);
                    // Sparse entries make dependencies and intersections common.
                    for (j, e) in v.iter_mut().enumerate() {
                        if c[(i * n + j) % c.len()].2 == 1 {
                            *e = Scalar::zero(f);
                        }
                    }
                    v
                })
                .collect()
        };
        let u = Subspace::span(f, n, &make(ku, &cu)).unwrap();
        let w = Subspace::span(f, n, &make(kw, &cw)).unwrap();
        let sum = u.sum(&w).unwrap();
        let meet = u.intersection(&w).unwrap();
        check(sum.dim() + meet.dim() == u.dim() + w.dim(), || format!("{} + {} != {} + {}", sum.dim(), meet.dim(), u.dim(), w.dim()))?;
        check(meet.is_subspace_of(&u) && meet.is_subspace_of(&w), || "meet not contained".into())?;
        check(u.is_subspace_of(&sum) && w.is_subspace_of(&sum), || "sum does not contain".into())
    })
}

pub const SUITES: [(&str, fn() -> Result<(), String>); 5] = [
    ("commutativity", commutativity),
    ("miyamoto_automorphism_involution", miyamoto_automorphism),
    ("projection_resolution_of_identity", projection_resolution),
    ("seress_hat2B_4NP", seress),
    ("subspace_modular_law", modular_law),
];
