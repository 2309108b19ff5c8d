use super::{AlgebraError, PresentedAlgebra};
use crate::fusion::{eigenspaces, miyamoto_involutions, FusionError, FusionRule};
use crate::linalg::{vector, Subspace, Vector};

/// Ideals found from common eigenspaces of the first two generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealEnumeration {
    /// Distinct ideals, sorted by dimension, then basis.
    pub ideals: Vec<Subspace>,
    /// The nonzero cells `E_s(g0) ∩ E_t(g1)` with their label pair.
    pub cells: Vec<((usize, usize), Subspace)>,
    /// True when every nonzero cell at every recursion level is a line, so
    /// each ideal is a sum of cells and the list is complete.
    pub complete: bool,
}

fn semisimple_spaces(p: &PresentedAlgebra, g: usize, rule: &FusionRule) -> Result<Vec<Subspace>, AlgebraError> {
    let spaces = eigenspaces(&p.algebra, &p.generators[g], rule).map_err(into_algebra)?;
    if spaces.iter().map(Subspace::dim).sum::<usize>() != p.algebra.dim() {
        return Err(AlgebraError::NotSemisimple(g));
    }
    Ok(spaces)
}

fn into_algebra(e: FusionError) -> AlgebraError {
    match e {
        FusionError::Algebra(a) => a,
        FusionError::Linalg(l) => AlgebraError::Linalg(l),
        FusionError::Scalar(s) => AlgebraError::Scalar(s),
        other => AlgebraError::Inconsistent(other.to_string()),
    }
}

/// Enumerate ideals of a 2-generated algebra whose generators act
/// semisimply: every sum of common eigenspace cells is tested, and ideals
/// containing `g1 - tau_{g0}(g1)` are found by quotienting by its ideal
/// closure and recursing.
pub fn enumerate_ideals_diagonalizable(
    p: &PresentedAlgebra,
    rule: &FusionRule,
) -> Result<IdealEnumeration, AlgebraError> {
    let alg = &p.algebra;
    let n = alg.dim();
    let field = alg.field();
    if p.generators.len() < 2 {
        return Err(AlgebraError::DimensionMismatch { expected: 2, found: p.generators.len() });
    }
    let mut ideals: Vec<Subspace> = vec![Subspace::zero(field, n), Subspace::full(field, n)];
    if n == 0 {
        ideals.truncate(1);
        return Ok(IdealEnumeration { ideals, cells: Vec::new(), complete: true });
    }
    let e0 = semisimple_spaces(p, 0, rule)?;
    let e1 = semisimple_spaces(p, 1, rule)?;
    let mut cells = Vec::new();
    for (s, a) in e0.iter().enumerate() {
        for (t, b) in e1.iter().enumerate() {
            let c = a.intersection(b)?;
            if !c.is_zero() {
                cells.push(((s, t), c));
            }
        }
    }
    let mut complete = cells.iter().all(|(_, c)| c.dim() == 1);

    let push = |ideals: &mut Vec<Subspace>, r: Subspace| {
        if !ideals.contains(&r) {
            ideals.push(r);
        }
    };
    for mask in 1u64..(1u64 << cells.len()) {
        let mut sum = Subspace::zero(field, n);
        for (k, (_, c)) in cells.iter().enumerate() {
            if mask >> k & 1 == 1 {
                sum = sum.sum(c)?;
            }
        }
        if alg.is_ideal(&sum)? {
            push(&mut ideals, sum);
        }
    }

    // Ideals containing g1 - tau(g1) for each Miyamoto map tau of g0.
    let taus = miyamoto_involutions(alg, &p.generators[0], rule).map_err(into_algebra)?;
    for tau in taus {
        let d: Vector = vector::sub(&p.generators[1], &tau.mul_vec(&p.generators[1])?);
        if vector::is_zero(&d) {
            continue;
        }
        let base = alg.ideal_closure(&[d])?;
        push(&mut ideals, base.clone());
        if base.is_full() {
            continue;
        }
        let (quo, pi) = p.quotient(&base)?;
        if quo.distinct_axes().len() < 2 || quo.generators.iter().any(|g| vector::is_zero(g)) {
            // The generators collapsed; the quotient is generated by one axis.
            let sub = enumerate_single_axis(&quo, rule)?;
            complete &= sub.complete;
            for j in sub.ideals {
                push(&mut ideals, lift(&base, &pi, &j)?);
            }
            continue;
        }
        let sub = enumerate_ideals_diagonalizable(&quo, rule)?;
        complete &= sub.complete;
        for j in sub.ideals {
            push(&mut ideals, lift(&base, &pi, &j)?);
        }
    }
    ideals.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| format!("{a:?}").cmp(&format!("{b:?}"))));
    Ok(IdealEnumeration { ideals, cells, complete })
}

/// Ideals of an algebra generated by a single axis: sums of its eigenspaces.
fn enumerate_single_axis(p: &PresentedAlgebra, rule: &FusionRule) -> Result<IdealEnumeration, AlgebraError> {
    let alg = &p.algebra;
    let n = alg.dim();
    let field = alg.field();
    let mut ideals = vec![Subspace::zero(field, n), Subspace::full(field, n)];
    let Some(axis) = p.distinct_axes().into_iter().next() else {
        ideals.dedup();
        return Ok(IdealEnumeration { ideals, cells: Vec::new(), complete: true });
    };
    let spaces = eigenspaces(alg, &axis, rule).map_err(into_algebra)?;
    let cells: Vec<((usize, usize), Subspace)> =
        spaces.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(s, c)| ((s, s), c)).collect();
    let complete = cells.iter().all(|(_, c)| c.dim() == 1);
    for mask in 1u64..(1u64 << cells.len()) {
        let mut sum = Subspace::zero(field, n);
        for (k, (_, c)) in cells.iter().enumerate() {
            if mask >> k & 1 == 1 {
                sum = sum.sum(c)?;
            }
        }
        if alg.is_ideal(&sum)? && !ideals.contains(&sum) {
            ideals.push(sum);
        }
    }
    ideals.dedup();
    Ok(IdealEnumeration { ideals, cells, complete })
}

/// Preimage of an ideal `j` of `A/base` under the projection.
fn lift(base: &Subspace, pi: &super::LinearMapE, j: &Subspace) -> Result<Subspace, AlgebraError> {
    // Quotient coordinates are the non-pivot coordinates of `base`.
    let n = base.ambient_dim();
    let keep: Vec<usize> = (0..n).filter(|c| !base.pivots().contains(c)).collect();
    debug_assert_eq!(keep.len(), pi.target_dim());
    let mut vectors: Vec<Vector> = base.basis().to_vec();
    for v in j.basis() {
        let mut w = vector::zeros(base.field(), n);
        for (k, &c) in keep.iter().enumerate() {
            w[c] = v[k].clone();
        }
        vectors.push(w);
    }
    Ok(Subspace::span(base.field(), n, &vectors)?)
}
