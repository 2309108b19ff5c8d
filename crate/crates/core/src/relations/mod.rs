//! Identities among the axes `a_i`, the elements `p_{i,j}`, `x_i`, `z_i`, `q`,
//! `r`, checked exactly in a host algebra.

mod proprod2;

pub use proprod2::{verify_proprod2, Proprod2Report};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{find_homomorphism, Algebra, AlgebraError, PresentedAlgebra};
use crate::fusion::{eigenspaces, jordan_phi, miyamoto, FusionError, FusionRule};
use crate::linalg::{vector, MatrixE, Subspace, Vector};
use crate::report::Check;
use crate::scalars::{Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationsError {
    #[error("axis chain has no a_{0}")]
    ChainTooShort(i64),
    #[error("the host needs two generators")]
    NeedTwoGenerators,
    #[error("{0} vanishes at this eta")]
    PoleAtSpecialization(String),
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Which reading of `p_{i,j}` to use. The display in the source reads
/// `a_j a_{i+j} - eta (a_i + a_{i+j})`; the reading consistent with its later
/// uses replaces `a_i` by `a_j` inside the bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PReading {
    Literal,
    Corrected,
}

/// The axes `a_i = (tau_1 tau_0)^k (a_0 or a_1)` of a 2-generated Jordan-type
/// algebra, for `i` in `[-k, k+1]`.
#[derive(Debug, Clone)]
pub struct AxisChain {
    pub host: PresentedAlgebra,
    pub eta: Scalar,
    pub rule: FusionRule,
    pub tau0: MatrixE,
    pub tau1: MatrixE,
    axes: BTreeMap<i64, Vector>,
    /// `tau_0(a_i) = a_{-i}` and `tau_1(a_i) = a_{2-i}` on stored indices.
    pub consistency: Vec<Check>,
}

fn jordan_signs(rule: &FusionRule) -> Vec<Scalar> {
    let f = rule.field();
    vec![Scalar::one(f), Scalar::one(f), Scalar::from_i64(f, -1)]
}

impl AxisChain {
    pub fn new(host: PresentedAlgebra, eta: &Scalar, k: i64) -> Result<Self, RelationsError> {
        if host.generators.len() < 2 {
            return Err(RelationsError::NeedTwoGenerators);
        }
        if Scalar::from_i64(eta.field(), 2).is_zero() {
            return Err(RelationsError::PoleAtSpecialization("2".into()));
        }
        let rule = jordan_phi(&[], eta)?;
        let alg = &host.algebra;
        let signs = jordan_signs(&rule);
        let tau0 = miyamoto(alg, &host.generators[0], &rule, &signs)?;
        let tau1 = miyamoto(alg, &host.generators[1], &rule, &signs)?;
        let rho = tau1.mul(&tau0).map_err(AlgebraError::from)?;
        let rho_inv = tau0.mul(&tau1).map_err(AlgebraError::from)?;
        let mut axes = BTreeMap::new();
        let (mut even, mut odd) = (host.generators[0].clone(), host.generators[1].clone());
        for step in 0..=k {
            axes.insert(2 * step, even.clone());
            axes.insert(2 * step + 1, odd.clone());
            even = rho.mul_vec(&even).map_err(AlgebraError::from)?;
            odd = rho.mul_vec(&odd).map_err(AlgebraError::from)?;
        }
        let (mut even, mut odd) = (host.generators[0].clone(), host.generators[1].clone());
        for step in 1..=k {
            even = rho_inv.mul_vec(&even).map_err(AlgebraError::from)?;
            odd = rho_inv.mul_vec(&odd).map_err(AlgebraError::from)?;
            axes.insert(-2 * step, even.clone());
            axes.insert(-2 * step + 1, odd.clone());
        }
        axes.retain(|i, _| (-k..=k + 1).contains(i));
        let mut consistency = Vec::new();
        for (&i, v) in &axes {
            if let Some(t) = axes.get(&-i) {
                let img = tau0.mul_vec(v).map_err(AlgebraError::from)?;
                consistency.push(Check::compare(format!("tau_0(a_{i})=a_{}", -i), alg, &img, t));
            }
            if let Some(t) = axes.get(&(2 - i)) {
                let img = tau1.mul_vec(v).map_err(AlgebraError::from)?;
                consistency.push(Check::compare(format!("tau_1(a_{i})=a_{}", 2 - i), alg, &img, t));
            }
        }
        Ok(Self { host, eta: eta.clone(), rule, tau0, tau1, axes, consistency })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.host.algebra
    }

    pub fn a(&self, i: i64) -> Result<&Vector, RelationsError> {
        self.axes.get(&i).ok_or(RelationsError::ChainTooShort(i))
    }

    pub fn indices(&self) -> Vec<i64> {
        self.axes.keys().copied().collect()
    }

    fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector, RelationsError> {
        Ok(self.algebra().multiply(x, y)?)
    }

    fn s(&self, n: i64) -> Scalar {
        Scalar::from_i64(self.eta.field(), n)
    }

    /// Linear combination of host vectors.
    fn combo(&self, parts: &[(Scalar, &Vector)]) -> Vector {
        let terms: Vec<(Scalar, &[Scalar])> = parts.iter().map(|(c, v)| (c.clone(), v.as_slice())).collect();
        vector::combine(self.eta.field(), self.algebra().dim(), &terms)
    }

    pub fn p(&self, i: i64, j: i64, reading: PReading) -> Result<Vector, RelationsError> {
        let aj = self.a(j)?;
        let aij = self.a(i + j)?;
        let inner = match reading {
            PReading::Corrected => aj,
            PReading::Literal => self.a(i)?,
        };
        let prod = self.mul(aj, aij)?;
        let e = &self.eta;
        Ok(self.combo(&[(self.s(1), &prod), (-e, inner), (-e, aij)]))
    }

    pub fn x(&self, i: i64) -> Result<Vector, RelationsError> {
        let p = self.p(i, 0, PReading::Corrected)?;
        let h = &self.eta / &self.s(2);
        Ok(self.combo(&[(self.s(1), &p), (h.clone(), self.a(i)?), (h, self.a(-i)?)]))
    }

    pub fn z(&self, i: i64) -> Result<Vector, RelationsError> {
        let p = self.p(i, 0, PReading::Corrected)?;
        let h = (&self.eta - &self.s(1)) / self.s(2);
        Ok(self.combo(&[(self.s(1), &p), (self.eta.clone(), self.a(0)?), (h.clone(), self.a(i)?), (h, self.a(-i)?)]))
    }
}

/// `p_{i,j}`, `x_i`, `z_i` with the checks `a_0 x_i = x_i`, `a_0 z_i = 0` and
/// the formula for `a_0 p_{i,0}`.
#[derive(Debug, Clone)]
pub struct PXZ {
    pub p: Vector,
    pub x: Vector,
    pub z: Vector,
    pub checks: Vec<Check>,
}

pub fn p_x_z(chain: &AxisChain, i: i64, j: i64) -> Result<PXZ, RelationsError> {
    let alg = chain.algebra();
    let a0 = chain.a(0)?;
    let p = chain.p(i, j, PReading::Corrected)?;
    let x = chain.x(i)?;
    let z = chain.z(i)?;
    let e = &chain.eta;
    let one = chain.s(1);
    let pi0 = chain.p(i, 0, PReading::Corrected)?;
    let rhs = chain.combo(&[
        (&one - e, &pi0),
        (-(e * e), a0),
        ((e - &(e * e)) / chain.s(2), chain.a(i)?),
        ((e - &(e * e)) / chain.s(2), chain.a(-i)?),
    ]);
    let checks = vec![
        Check::compare(format!("a_0*x_{i}=x_{i}"), alg, &chain.mul(a0, &x)?, &x),
        Check::compare(format!("a_0*z_{i}=0"), alg, &chain.mul(a0, &z)?, &alg.zero_vector()),
        Check::compare(
            format!("a_0*p_{{{i},0}}=(1-eta)p_{{{i},0}}-eta^2*a_0+(eta-eta^2)/2*(a_{i}+a_{})", -i),
            alg,
            &chain.mul(a0, &pi0)?,
            &rhs,
        ),
    ];
    Ok(PXZ { p, x, z, checks })
}

/// Both readings of `p_{i,j}` tested against the eigenvector claims for
/// `x_i` and `z_i`: only a reading under which both hold is consistent.
pub fn p_reading_checks(chain: &AxisChain, i: i64) -> Result<Vec<Check>, RelationsError> {
    let alg = chain.algebra();
    let a0 = chain.a(0)?;
    let e = &chain.eta;
    let mut out = Vec::new();
    for (reading, tag) in [(PReading::Corrected, "corrected"), (PReading::Literal, "literal")] {
        // p_{i,0} under this reading, then x_i and z_i from it.
        let p = chain.p(i, 0, reading)?;
        let h = e / &chain.s(2);
        let x = chain.combo(&[(chain.s(1), &p), (h.clone(), chain.a(i)?), (h, chain.a(-i)?)]);
        let g = (e - &chain.s(1)) / chain.s(2);
        let z = chain.combo(&[(chain.s(1), &p), (e.clone(), a0), (g.clone(), chain.a(i)?), (g, chain.a(-i)?)]);
        out.push(Check::compare(format!("{tag}: a_0*x_{i}=x_{i}"), alg, &chain.mul(a0, &x)?, &x));
        out.push(Check::compare(format!("{tag}: a_0*z_{i}=0"), alg, &chain.mul(a0, &z)?, &alg.zero_vector()));
    }
    Ok(out)
}

/// The three product formulas for `p_1 p_1` and `a_0 p_{2,1}`, plus the
/// eigenvector identities they come from.
pub fn verify_prod1(chain: &AxisChain) -> Result<Vec<Check>, RelationsError> {
    let alg = chain.algebra();
    let e = &chain.eta;
    let s = |n: i64| chain.s(n);
    let a0 = chain.a(0)?;
    let (a1, am1, a2, am2) = (chain.a(1)?, chain.a(-1)?, chain.a(2)?, chain.a(-2)?);
    let p1 = chain.p(1, 0, PReading::Corrected)?;
    let p20 = chain.p(2, 0, PReading::Corrected)?;
    let p21 = chain.p(2, 1, PReading::Corrected)?;
    let a0p21 = chain.mul(a0, &p21)?;
    let two_e_m1 = &(&s(2) * e) - &s(1);
    let e2 = e * e;

    let lhs1 = chain.mul(&p1, &p1)?;
    let c_a = e * &(&two_e_m1 * &two_e_m1) / s(2);
    let c_pair = &(&s(3) * e) * &(&(e - &s(1)) * &two_e_m1) / s(4);
    let rhs1 = chain.combo(&[
        (&two_e_m1 / &s(2), &a0p21),
        (-(&e2 / &s(2)), &p21),
        (-(&e2 - e), &p20),
        ((&(&(&s(8) * &e2) - &(&s(12) * e)) + &s(3)) / s(2), &p1),
        (c_a, a0),
        (c_pair.clone(), a1),
        (c_pair, am1),
    ]);

    let em1 = e - &s(1);
    let c11 = -(&em1 * &two_e_m1 / s(2));
    let c22 = &em1 * &em1 / s(2);
    let rhs2 = chain.combo(&[
        (s(1), &p21),
        (em1.clone(), &p20),
        (-&two_e_m1, &p1),
        (-&e2, a0),
        (c11.clone(), a1),
        (c11, am1),
        (c22.clone(), a2),
        (c22, am2),
    ]);

    let c11 = -(e * &two_e_m1 / s(2));
    let c22 = &e2 / &s(2);
    let rhs3 = chain.combo(&[
        (e.clone(), &p20),
        (-&two_e_m1, &p1),
        (-&e2, a0),
        (c11.clone(), a1),
        (c11, am1),
        (c22.clone(), a2),
        (c22, am2),
    ]);

    let x1 = chain.x(1)?;
    let z1 = chain.z(1)?;
    let xx = chain.mul(&x1, &x1)?;
    let zz = chain.mul(&z1, &z1)?;
    let xz = chain.mul(&x1, &z1)?;
    let zero = alg.zero_vector();
    Ok(vec![
        Check::compare("a_0(x_1x_1-z_1z_1)=x_1x_1", alg, &chain.mul(a0, &vector::sub(&xx, &zz))?, &xx),
        Check::compare("a_0(x_1x_1-x_1z_1)=x_1x_1-x_1z_1", alg, &chain.mul(a0, &vector::sub(&xx, &xz))?, &vector::sub(&xx, &xz)),
        Check::compare("a_0(x_1z_1-z_1z_1)=0", alg, &chain.mul(a0, &vector::sub(&xz, &zz))?, &zero),
        Check::compare("prod1 (1): p_1p_1", alg, &lhs1, &rhs1),
        Check::compare("prod1 (2): a_0p_{2,1}", alg, &a0p21, &rhs2),
        Check::compare("prod1 (3): a_0p_{2,1}", alg, &a0p21, &rhs3),
    ])
}

/// `q` as defined before its claimed eigen-relations.
pub fn q_element(chain: &AxisChain) -> Result<Vector, RelationsError> {
    let e = &chain.eta;
    let s = |n: i64| chain.s(n);
    let p20 = chain.p(2, 0, PReading::Corrected)?;
    let p1 = chain.p(1, 0, PReading::Corrected)?;
    let ratio = (e + &s(1))
        .checked_div(&(e - &s(1)))
        .map_err(|_| RelationsError::PoleAtSpecialization("eta-1".into()))?;
    Ok(chain.combo(&[
        (s(1), &p20),
        (-ratio, &p1),
        (e - &s(1), chain.a(2)?),
        (-e, chain.a(-1)?),
        (s(-1), chain.a(1)?),
        (s(-1), chain.a(0)?),
    ]))
}

/// `r = p_{2,0} - (eta-2)/eta * v + eta a_2 - (eta-1) a_{-1} + a_1 + a_0`
/// with `v = a_0` as printed, or `v = p_1` for the corrected element.
pub fn r_element(chain: &AxisChain, literal: bool) -> Result<Vector, RelationsError> {
    let e = &chain.eta;
    let s = |n: i64| chain.s(n);
    let p20 = chain.p(2, 0, PReading::Corrected)?;
    let p1 = chain.p(1, 0, PReading::Corrected)?;
    let v = if literal { chain.a(0)?.clone() } else { p1 };
    let c = -(e - &s(2)).checked_div(e).map_err(|_| RelationsError::PoleAtSpecialization("eta".into()))?;
    Ok(chain.combo(&[
        (s(1), &p20),
        (c, &v),
        (e.clone(), chain.a(2)?),
        (-(e - &s(1)), chain.a(-1)?),
        (s(1), chain.a(1)?),
        (s(1), chain.a(0)?),
    ]))
}

/// Report from [`verify_chain_relations`]. `checks` are the identities that
/// must hold; `literal` records readings that are printed differently.
#[derive(Debug, Clone)]
pub struct ChainRelationsReport {
    pub checks: Vec<Check>,
    pub literal: Vec<Check>,
}

impl ChainRelationsReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

pub fn verify_chain_relations(chain: &AxisChain) -> Result<ChainRelationsReport, RelationsError> {
    let alg = chain.algebra();
    let e = &chain.eta;
    let s = |n: i64| chain.s(n);
    for (d, name) in [(e - &s(1), "eta-1"), (e.clone(), "eta")] {
        if d.is_zero() {
            return Err(RelationsError::PoleAtSpecialization(name.into()));
        }
    }
    let mut checks = Vec::new();
    let mut literal = Vec::new();
    let rel = chain.combo(&[(s(1), chain.a(2)?), (s(-1), chain.a(-2)?), (s(1), chain.a(1)?), (s(-1), chain.a(-1)?)]);
    checks.push(Check::compare("a_2-a_{-2}+a_1-a_{-1}=0", alg, &rel, &alg.zero_vector()));

    let q = q_element(chain)?;
    let ratio = (e + &s(1)) / (e - &s(1));
    let r = r_element(chain, false)?;
    let r_lit = r_element(chain, true)?;
    for i in [-1, 0, 1, 2] {
        let ai = chain.a(i)?;
        checks.push(Check::compare(
            format!("q*a_{i}=(eta+1)/(eta-1)*a_{i}"),
            alg,
            &chain.mul(&q, ai)?,
            &vector::scale(&ratio, ai),
        ));
        checks.push(Check::compare(format!("r*a_{i}=r"), alg, &chain.mul(&r, ai)?, &r));
        literal.push(Check::compare(format!("r(printed)*a_{i}=r(printed)"), alg, &chain.mul(&r_lit, ai)?, &r_lit));
    }

    let p10 = chain.p(1, 0, PReading::Corrected)?;
    for i in 1..=3 {
        if chain.a(1 + i).is_err() {
            break;
        }
        let p1i = chain.p(1, i, PReading::Corrected)?;
        checks.push(Check::compare(format!("p_{{1,{i}}}=p_{{1,0}}"), alg, &p1i, &p10));
        let pi0 = chain.p(i, 0, PReading::Corrected)?;
        literal.push(Check::compare(format!("p_{{1,{i}}}=p_{{{i},0}}"), alg, &p1i, &pi0));
    }
    Ok(ChainRelationsReport { checks, literal })
}

/// The four cells `E_i(g0) ∩ E_j(g1)`, `i, j ∈ {1, 0}`, in the order
/// 11, 10, 01, 00, with checks on their shape.
#[derive(Debug, Clone)]
pub struct LemquoGrid {
    pub cells: [Subspace; 4],
    pub checks: Vec<Check>,
}

impl LemquoGrid {
    pub fn dims(&self) -> [usize; 4] {
        [self.cells[0].dim(), self.cells[1].dim(), self.cells[2].dim(), self.cells[3].dim()]
    }
}

/// Expects the 4NP basis `qh, ah_m1, ah_0, ah_1, s_0, s_1`.
pub fn verify_lemquo_grid(p: &PresentedAlgebra, eta: &Scalar) -> Result<LemquoGrid, RelationsError> {
    let alg = &p.algebra;
    let rule = jordan_phi(&[], eta)?;
    let e0 = eigenspaces(alg, &p.generators[0], &rule)?;
    let e1 = eigenspaces(alg, &p.generators[1], &rule)?;
    let cell = |i: usize, j: usize| -> Result<Subspace, RelationsError> {
        Ok(e0[i].intersection(&e1[j]).map_err(AlgebraError::from)?)
    };
    // Labels are ordered 1, 0, eta.
    let cells = [cell(0, 0)?, cell(0, 1)?, cell(1, 0)?, cell(1, 1)?];
    let f = alg.field();
    let mut checks = Vec::new();
    let names = ["11", "10", "01", "00"];
    for (c, name) in cells.iter().zip(names) {
        if c.dim() == 1 {
            let closure = alg.ideal_closure(c.basis())?;
            let ok = closure == *c;
            checks.push(if ok {
                Check::pass(format!("cell {name} is an ideal"))
            } else {
                Check::fail(format!("cell {name} is an ideal"), format!("ideal closure has dim {}", closure.dim()))
            });
        }
    }
    let one = Scalar::one(f);
    let m1 = Scalar::from_i64(f, -1);
    let expect = |terms: &[(Scalar, &str)]| -> Result<Subspace, RelationsError> {
        Ok(alg.span(&[alg.vector(terms)?])?)
    };
    let r = expect(&[(one.clone(), "qh"), (m1.clone(), "ah_m1"), (m1.clone(), "ah_0"), (m1, "ah_1")])?;
    let same = |name: &str, got: &Subspace, want: &Subspace| {
        if got == want {
            Check::pass(name.to_string())
        } else {
            Check::fail(name.to_string(), format!("{got:?}"))
        }
    };
    checks.push(same("cell 11 = F(qh-ah_m1-ah_0-ah_1)", &cells[0], &r));
    checks.push(same("cell 10 = F s_0", &cells[1], &expect(&[(one.clone(), "s_0")])?));
    checks.push(same("cell 01 = F s_1", &cells[2], &expect(&[(one.clone(), "s_1")])?));
    let want00 = if *eta == Scalar::from_i64(f, -1) {
        expect(&[(one, "qh")])?
    } else {
        Subspace::zero(f, alg.dim())
    };
    checks.push(same("cell 00 = F qh if eta=-1, else 0", &cells[3], &want00));
    Ok(LemquoGrid { cells, checks })
}

/// `a(xy) = x(ay)` for `x` in `E_1(a) + E_0(a)` and every basis vector `y`.
pub fn seress_check(alg: &Algebra, a: &[Scalar], rule: &FusionRule) -> Result<Check, RelationsError> {
    let spaces = eigenspaces(alg, a, rule)?;
    let (one, zero) = (rule.label_index("1"), rule.label_index("0"));
    let mut xs = Vec::new();
    for idx in [one, zero].into_iter().flatten() {
        xs.extend(spaces[idx].basis().iter().cloned());
    }
    for x in &xs {
        for k in 0..alg.dim() {
            let y = alg.basis_vector(k);
            let lhs = alg.multiply(a, &alg.multiply(x, &y)?)?;
            let rhs = alg.multiply(x, &alg.multiply(a, &y)?)?;
            if lhs != rhs {
                return Ok(Check::fail("seress", alg.format_vector(&vector::sub(&lhs, &rhs))));
            }
        }
    }
    Ok(Check::pass("seress"))
}

/// The flip `theta` swapping the generators, and `theta(a_i) = a_{1-i}`.
pub fn flip_checks(chain: &AxisChain) -> Result<Vec<Check>, RelationsError> {
    let g = &chain.host.generators;
    let alg = chain.algebra();
    let theta = match find_homomorphism(&chain.host, alg, &[g[1].clone(), g[0].clone()]) {
        Ok(t) => t,
        Err(AlgebraError::Inconsistent(m)) => return Ok(vec![Check::fail("flip exists", m)]),
        Err(e) => return Err(e.into()),
    };
    let mut out = vec![Check::pass("flip exists")];
    for i in chain.indices() {
        if let Ok(t) = chain.a(1 - i) {
            let img = theta.apply(chain.a(i)?)?;
            out.push(Check::compare(format!("theta(a_{i})=a_{}", 1 - i), alg, &img, t));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, build_generic, CatalogName};
    use crate::scalars::FieldDescriptor;

    fn generic_chain() -> AxisChain {
        let eta = Scalar::eta(FieldDescriptor::rational_functions()).unwrap();
        AxisChain::new(build_generic(CatalogName::FourNP).unwrap(), &eta, 3).unwrap()
    }

    #[test]
    fn chain_is_consistent_and_readings_split() {
        let c = generic_chain();
        assert!(c.consistency.iter().all(|x| x.holds));
        let r = p_reading_checks(&c, 1).unwrap();
        assert!(r[..2].iter().all(|x| x.holds));
        assert!(r[2..].iter().any(|x| !x.holds));
        assert!(p_x_z(&c, 2, 0).unwrap().checks.iter().all(|x| x.holds));
        assert!(matches!(c.a(9), Err(RelationsError::ChainTooShort(9))));
    }

    #[test]
    fn prod1_and_chain_relations() {
        let c = generic_chain();
        for chk in verify_prod1(&c).unwrap() {
            assert!(chk.holds, "{chk}");
        }
        let rels = verify_chain_relations(&c).unwrap();
        assert!(rels.all_hold(), "{:?}", rels.checks.iter().find(|x| !x.holds));
        assert!(rels.literal.iter().any(|x| !x.holds));
        assert!(flip_checks(&c).unwrap().iter().all(|x| x.holds));
    }

    #[test]
    fn lemquo_grid_generic_and_minus_one() {
        let eta = Scalar::eta(FieldDescriptor::rational_functions()).unwrap();
        let g = verify_lemquo_grid(&build_generic(CatalogName::FourNP).unwrap(), &eta).unwrap();
        assert_eq!(g.dims(), [1, 1, 1, 0]);
        assert!(g.checks.iter().all(|x| x.holds), "{:?}", g.checks);
        let f = FieldDescriptor::rationals();
        let m1 = Scalar::from_i64(f, -1);
        let g = verify_lemquo_grid(&build(CatalogName::FourNP, f, &m1).unwrap(), &m1).unwrap();
        assert_eq!(g.dims(), [1, 1, 1, 1]);
        assert!(g.checks.iter().all(|x| x.holds), "{:?}", g.checks);
    }
}
