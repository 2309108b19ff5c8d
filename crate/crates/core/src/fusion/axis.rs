use super::{FusionError, FusionRule, LabelSet};
use crate::algebra::{Algebra, PresentedAlgebra};
use crate::linalg::{kernel, minimal_polynomial, vector, MatrixE, Subspace, Vector};
use crate::scalars::Scalar;

pub const DEFAULT_ENCLOSURE_CAP: usize = 64;

/// A product of eigenvectors leaving the allowed eigenspaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionViolation {
    pub s: usize,
    pub t: usize,
    /// Labels `u` outside `s * t` with a nonzero component; empty when the
    /// axis is not semisimple and components cannot be separated.
    pub outside: Vec<usize>,
    pub witness: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxisReport {
    pub is_idempotent: bool,
    /// Monic minimal polynomial of `ad(a)`, ascending coefficients.
    pub minimal_polynomial: Vector,
    /// Whether the minimal polynomial is a product of distinct factors
    /// `T - lambda_s`.
    pub splits_over_rule: bool,
    /// `lambda_s` for labels with a nonzero eigenspace.
    pub eigenvalues_found: Vec<Scalar>,
    pub eigenspaces: Vec<Subspace>,
    pub eigenspace_dims: Vec<usize>,
    pub semisimple: bool,
    pub fusion_violations: Vec<FusionViolation>,
    /// Observed `s * t`: labels with a nonzero component in some product.
    pub minimal_fusion: Vec<Vec<LabelSet>>,
}

impl AxisReport {
    pub fn is_axis(&self) -> bool {
        self.is_idempotent && self.semisimple && self.fusion_violations.is_empty()
    }
}

/// Eigenspaces `ker(ad(a) - lambda_s)` in label order.
pub fn eigenspaces(alg: &Algebra, a: &[Scalar], rule: &FusionRule) -> Result<Vec<Subspace>, FusionError> {
    let ad = alg.adjoint(a)?;
    Ok(rule.eigenvalues().iter().map(|l| kernel(&ad.shift(l))).collect())
}

/// Change of basis from coordinates to eigen-coordinates; columns of the
/// inverse are concatenated eigenbases.
fn eigen_decomposer(spaces: &[Subspace], n: usize) -> Result<(MatrixE, Vec<usize>), FusionError> {
    let field = spaces[0].field();
    let mut columns = Vec::new();
    let mut owner = Vec::new();
    for (s, e) in spaces.iter().enumerate() {
        for b in e.basis() {
            columns.push(b.clone());
            owner.push(s);
        }
    }
    let p = MatrixE::from_columns(field, n, &columns)?;
    Ok((p.inverse()?, owner))
}

fn components(decomp: &MatrixE, owner: &[usize], v: &[Scalar]) -> Result<LabelSet, FusionError> {
    let c = decomp.mul_vec(v)?;
    let mut out = LabelSet::new();
    for (k, x) in c.iter().enumerate() {
        if !x.is_zero() {
            out.insert(owner[k]);
        }
    }
    Ok(out)
}

pub fn verify_axis(alg: &Algebra, a: &[Scalar], rule: &FusionRule) -> Result<AxisReport, FusionError> {
    let n = alg.dim();
    let m = rule.len();
    let is_idempotent = alg.multiply(a, a)? == a;
    let ad = alg.adjoint(a)?;
    let minpoly = minimal_polynomial(&ad)?;
    let spaces: Vec<Subspace> = rule.eigenvalues().iter().map(|l| kernel(&ad.shift(l))).collect();
    let dims: Vec<usize> = spaces.iter().map(Subspace::dim).collect();
    // Labels with equal eigenvalues share a kernel; count each value once.
    let mut distinct_total = 0;
    let mut found = Vec::new();
    for s in 0..m {
        let first = (0..s).all(|t| rule.lambda(t) != rule.lambda(s));
        if first && dims[s] > 0 {
            distinct_total += dims[s];
            found.push(rule.lambda(s).clone());
        }
    }
    let semisimple = distinct_total == n && rule.check_injective().is_ok();
    let splits_over_rule = semisimple && minpoly.len() == found.len() + 1;

    let mut violations = Vec::new();
    let mut observed = vec![vec![LabelSet::new(); m]; m];
    let decomposer = if semisimple && n > 0 { Some(eigen_decomposer(&spaces, n)?) } else { None };
    for s in 0..m {
        for t in s..m {
            let allowed = rule.star(s, t);
            let allowed_space = allowed
                .iter()
                .try_fold(Subspace::zero(alg.field(), n), |acc, &u| acc.sum(&spaces[u]))?;
            let mut reported = false;
            for x in spaces[s].basis() {
                for y in spaces[t].basis() {
                    let p = alg.multiply(x, y)?;
                    if vector::is_zero(&p) {
                        continue;
                    }
                    match &decomposer {
                        Some((d, owner)) => {
                            let comps = components(d, owner, &p)?;
                            let outside: Vec<usize> = comps.difference(allowed).copied().collect();
                            observed[s][t].extend(comps);
                            if !outside.is_empty() && !reported {
                                violations.push(FusionViolation { s, t, outside, witness: p });
                                reported = true;
                            }
                        }
                        None => {
                            if !allowed_space.contains(&p) && !reported {
                                violations.push(FusionViolation { s, t, outside: Vec::new(), witness: p });
                                reported = true;
                            }
                        }
                    }
                }
            }
            observed[t][s] = observed[s][t].clone();
        }
    }
    Ok(AxisReport {
        is_idempotent,
        minimal_polynomial: minpoly,
        splits_over_rule,
        eigenvalues_found: found,
        eigenspaces: spaces,
        eigenspace_dims: dims,
        semisimple,
        fusion_violations: violations,
        minimal_fusion: observed,
    })
}

/// `pr_s = prod_{t != s} (ad(a) - lambda_t) / (lambda_s - lambda_t)`.
pub fn projection_via_polynomial(
    alg: &Algebra,
    a: &[Scalar],
    rule: &FusionRule,
    s: usize,
) -> Result<MatrixE, FusionError> {
    rule.check_injective()?;
    let n = alg.dim();
    let ad = alg.adjoint(a)?;
    let mut total = 0;
    for l in rule.eigenvalues() {
        total += kernel(&ad.shift(l)).dim();
    }
    if total != n {
        return Err(FusionError::NotSemisimple);
    }
    let ls = rule.lambda(s);
    let mut pr = MatrixE::identity(alg.field(), n);
    for t in (0..rule.len()).filter(|&t| t != s) {
        let lt = rule.lambda(t);
        let factor = ad.shift(lt).scale(&(ls - lt).inv()?);
        pr = pr.mul(&factor)?;
    }
    Ok(pr)
}

/// `sum_s sign(s) pr_s`, checked to be an automorphism.
pub fn miyamoto(alg: &Algebra, a: &[Scalar], rule: &FusionRule, signs: &[Scalar]) -> Result<MatrixE, FusionError> {
    if !rule.signs_compatible(signs) {
        return Err(FusionError::SignsNotCompatible);
    }
    let n = alg.dim();
    let mut tau = MatrixE::zeros(alg.field(), n, n);
    for (s, sign) in signs.iter().enumerate() {
        if sign.is_zero() {
            continue;
        }
        tau = tau.add(&projection_via_polynomial(alg, a, rule, s)?.scale(sign))?;
    }
    let map = crate::algebra::LinearMapE::new(tau);
    if !map.is_multiplicative(alg, alg)? {
        return Err(FusionError::NotAutomorphism);
    }
    Ok(map.matrix)
}

/// One Miyamoto map per non-trivial grading of the rule.
pub fn miyamoto_involutions(alg: &Algebra, a: &[Scalar], rule: &FusionRule) -> Result<Vec<MatrixE>, FusionError> {
    rule.gradings().iter().map(|g| miyamoto(alg, a, rule, g)).collect()
}

/// Close the distinct nonzero generators under all Miyamoto maps.
pub fn enclosure(p: &PresentedAlgebra, rule: &FusionRule, cap: usize) -> Result<Vec<Vector>, FusionError> {
    let alg = &p.algebra;
    let mut axes = p.distinct_axes();
    if axes.len() > cap {
        return Err(FusionError::CapExceeded(cap));
    }
    let mut taus: Vec<Vec<MatrixE>> = Vec::new();
    let mut i = 0;
    while i < axes.len() {
        taus.push(miyamoto_involutions(alg, &axes[i], rule)?);
        // Apply every known map to every known axis until nothing new appears.
        let mut changed = true;
        while changed {
            changed = false;
            for t in taus.iter().flatten() {
                let mut j = 0;
                while j < axes.len() {
                    let img = t.mul_vec(&axes[j])?;
                    if !axes.contains(&img) {
                        axes.push(img);
                        if axes.len() > cap {
                            return Err(FusionError::CapExceeded(cap));
                        }
                        changed = true;
                    }
                    j += 1;
                }
            }
        }
        i += 1;
    }
    Ok(axes)
}

/// The Table 5 columns: enclosure size, axial dimension, dimension and the
/// eigenspace dimensions of every enclosure axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantRecord {
    pub enclosure_size: usize,
    pub adim: usize,
    pub vdim: usize,
    /// One entry per enclosure axis, in label order.
    pub edims: Vec<Vec<usize>>,
}

impl InvariantRecord {
    /// Distinct edim tuples, largest first.
    pub fn distinct_edims(&self) -> Vec<Vec<usize>> {
        let mut out = self.edims.clone();
        out.sort_by(|a, b| b.cmp(a));
        out.dedup();
        out
    }
}

pub fn invariants(p: &PresentedAlgebra, rule: &FusionRule) -> Result<InvariantRecord, FusionError> {
    let axes = enclosure(p, rule, DEFAULT_ENCLOSURE_CAP)?;
    let adim = p.algebra.span(&axes)?.dim();
    let edims = axes
        .iter()
        .map(|a| Ok(eigenspaces(&p.algebra, a, rule)?.iter().map(Subspace::dim).collect()))
        .collect::<Result<Vec<_>, FusionError>>()?;
    Ok(InvariantRecord { enclosure_size: axes.len(), adim, vdim: p.algebra.dim(), edims })
}

/// Least subspace containing `seeds` and closed under products and the
/// projections `pr_s^a` of every axis. When the axes lie in the generated
/// subalgebra the result must coincide with it; that is checked.
pub fn decomposition_closure(
    alg: &Algebra,
    seeds: &[Vector],
    axes: &[Vector],
    rule: &FusionRule,
) -> Result<Subspace, FusionError> {
    let mut projections = Vec::new();
    for a in axes {
        for s in 0..rule.len() {
            projections.push(projection_via_polynomial(alg, a, rule, s)?);
        }
    }
    let mut space = alg.span(seeds)?;
    loop {
        let mut grown = alg.subalgebra_closure(space.basis())?;
        for pr in &projections {
            grown = grown.sum(&grown.image(pr)?)?;
        }
        if grown == space {
            break;
        }
        space = grown;
    }
    let generated = alg.subalgebra_closure(seeds)?;
    if axes.iter().all(|a| generated.contains(a)) && generated != space {
        return Err(FusionError::ClosureMismatch);
    }
    Ok(space)
}
