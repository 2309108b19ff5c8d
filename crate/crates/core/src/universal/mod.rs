//! Bounded-size truncations of the universal object: canonical magma terms
//! with unary projection symbols, modulo instances of the defining relations.
//!
//! Dimensions coming out of [`truncated_quotient`] are upper bounds. The image
//! dimensions reported by [`truncated_hom_onto`] are exact lower bounds.

mod quotient;
mod terms;

pub use quotient::{Reduction, TruncatedQuotient};
pub use terms::{enumerate_terms, term_counts, MagmaTerm, Node, TermSpace, UnaryLabel, DEFAULT_TERM_GUARD};

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraError, PresentedAlgebra};
use crate::fusion::{projection_via_polynomial, FusionError, FusionRule};
use crate::linalg::{vector, MatrixE, Subspace, Vector};
use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniversalError {
    #[error("{count} terms exceed the guard of {guard}")]
    BoundTooLarge { count: u128, guard: usize },
    #[error("{0}")]
    BadArguments(String),
    #[error("relation family ({family}) does not vanish: {relation} evaluates to {witness}")]
    TargetViolatesRelations { family: u8, relation: String, witness: String },
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Which relation families to impose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Families {
    /// Projections: families (1)-(4).
    Decomposition,
    /// Adds (5): `x_i` acts on the `s`-part by `lambda_s`.
    Axial,
    /// Adds (6): the generators are idempotent.
    AxialAlgebra,
}

impl std::str::FromStr for Families {
    type Err = UniversalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "decomposition" => Ok(Families::Decomposition),
            "axial" => Ok(Families::Axial),
            "axial_algebra" | "axial-algebra" => Ok(Families::AxialAlgebra),
            other => Err(UniversalError::BadArguments(format!("unknown relation set {other}"))),
        }
    }
}

/// Sparse linear combination of term ids.
pub type Combination = Vec<(u32, Scalar)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationInstance {
    pub family: u8,
    pub combination: Combination,
}

/// The unary symbols `(s, j)` for `n` decompositions, in a fixed order.
pub fn unary_symbols(rule: &FusionRule, n: usize) -> Vec<UnaryLabel> {
    (0..n).flat_map(|j| (0..rule.len()).map(move |s| UnaryLabel { s, j })).collect()
}

/// Generating relation instances whose terms all fit in `space`. Closure
/// under products with terms and under the unary maps happens in
/// [`Truncation::quotient`].
pub fn relation_instances(rule: &FusionRule, space: &TermSpace, families: Families) -> Vec<RelationInstance> {
    let f = rule.field();
    let one = Scalar::one(f);
    let mone = Scalar::from_i64(f, -1);
    let n = space.generators();
    let m = rule.len();
    let bound = space.bound();
    let upto = |k: usize| 0..space.count_up_to(k) as u32;
    let phi = |s: usize, j: usize, x: u32| space.unary_id(UnaryLabel { s, j }, x);
    let mut out = Vec::new();
    let mut push = |family: u8, combination: Combination| out.push(RelationInstance { family, combination });

    if bound >= 2 {
        for j in 0..n {
            for x in upto(bound - 1) {
                let mut c = vec![(x, one.clone())];
                c.extend((0..m).filter_map(|s| phi(s, j, x)).map(|y| (y, mone.clone())));
                push(1, c);
            }
        }
    }
    if bound >= 4 {
        for j in 0..n {
            for s in 0..m {
                for t in 0..m {
                    let allowed = rule.star(s, t);
                    for u in (0..m).filter(|u| !allowed.contains(u)) {
                        for x in upto(bound - 3) {
                            let Some(px) = phi(s, j, x) else { continue };
                            for y in upto(bound - 3 - space.size(x)) {
                                let Some(py) = phi(t, j, y) else { continue };
                                if py < px {
                                    continue;
                                }
                                if let Some(w) = space.prod_id(px, py).and_then(|z| phi(u, j, z)) {
                                    push(2, vec![(w, one.clone())]);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    if bound >= 3 {
        for j in 0..n {
            for s in 0..m {
                for x in upto(bound - 2) {
                    let Some(px) = phi(s, j, x) else { continue };
                    if let Some(ppx) = phi(s, j, px) {
                        push(3, vec![(ppx, one.clone()), (px, mone.clone())]);
                    }
                    for t in (0..m).filter(|&t| t != s) {
                        if let Some(w) = phi(t, j, px) {
                            push(4, vec![(w, one.clone())]);
                        }
                    }
                }
            }
        }
        if families >= Families::Axial {
            for i in 0..n {
                let xi = space.gen_id(i);
                for s in 0..m {
                    for x in upto(bound - 2) {
                        let Some(px) = phi(s, i, x) else { continue };
                        if let Some(w) = space.prod_id(xi, px) {
                            push(5, vec![(w, one.clone()), (px, -rule.lambda(s))]);
                        }
                    }
                }
            }
        }
    }
    if families >= Families::AxialAlgebra && bound >= 2 {
        for i in 0..n {
            let xi = space.gen_id(i);
            if let Some(w) = space.prod_id(xi, xi) {
                push(6, vec![(w, one.clone()), (xi, mone.clone())]);
            }
        }
    }
    out
}

/// Render a combination with its terms.
pub fn describe(space: &TermSpace, c: &[(u32, Scalar)]) -> String {
    let parts: Vec<String> = c.iter().map(|(id, s)| format!("({s})*{}", space.term(*id))).collect();
    parts.join(" + ")
}

/// Terms of size at most `bound` with `n` generators and the generating
/// relation instances for `rule`.
#[derive(Debug, Clone)]
pub struct Truncation {
    pub rule: FusionRule,
    pub families: Families,
    pub space: TermSpace,
    pub relations: Vec<RelationInstance>,
}

impl Truncation {
    pub fn new(rule: &FusionRule, n: usize, bound: usize, families: Families, guard: usize) -> Result<Self, UniversalError> {
        let space = enumerate_terms(n, &unary_symbols(rule, n), bound, guard)?;
        let relations = relation_instances(rule, &space, families);
        Ok(Self { rule: rule.clone(), families, space, relations })
    }

    pub fn family_counts(&self) -> [usize; 6] {
        let mut c = [0; 6];
        for r in &self.relations {
            c[r.family as usize - 1] += 1;
        }
        c
    }

    pub fn quotient(&self) -> Result<TruncatedQuotient, UniversalError> {
        self.quotient_with(&self.relations)
    }

    /// Quotient by the ideal generated (within the bound) by `relations`.
    pub fn quotient_with(&self, relations: &[RelationInstance]) -> Result<TruncatedQuotient, UniversalError> {
        quotient::eliminate(&self.space, relations, Reduction::for_field(self.rule.field()))
    }
}

/// Truncate and reduce in one step.
pub fn truncated_quotient(
    n: usize,
    rule: &FusionRule,
    bound: usize,
    families: Families,
) -> Result<TruncatedQuotient, UniversalError> {
    Truncation::new(rule, n, bound, families, DEFAULT_TERM_GUARD)?.quotient()
}

/// Exact evaluation of every term in a target, with values interned.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub values: Vec<Vector>,
    /// `term_value[id]` indexes `values`.
    pub term_value: Vec<u32>,
}

impl Evaluation {
    pub fn value(&self, id: u32) -> &Vector {
        &self.values[self.term_value[id as usize] as usize]
    }
}

/// Evaluate all terms: generators to the target generators, `(s, i)` to the
/// projection onto the `s`-eigenspace of the `i`-th generator, products to
/// products.
pub fn evaluate(space: &TermSpace, rule: &FusionRule, target: &PresentedAlgebra) -> Result<Evaluation, UniversalError> {
    let alg = &target.algebra;
    if target.generators.len() != space.generators() {
        return Err(UniversalError::BadArguments(format!(
            "target has {} generators, truncation has {}",
            target.generators.len(),
            space.generators()
        )));
    }
    if rule.field() != alg.field() {
        return Err(UniversalError::BadArguments("fusion rule and target live over different fields".into()));
    }
    let mut projections: HashMap<UnaryLabel, MatrixE> = HashMap::new();
    for &b in space.symbols() {
        let pr = match projection_via_polynomial(alg, &target.generators[b.j], rule, b.s) {
            Ok(pr) => pr,
            Err(FusionError::NotSemisimple) => {
                return Err(UniversalError::TargetViolatesRelations {
                    family: 1,
                    relation: format!("x{} - sum of its projections", b.j + 1),
                    witness: "generator is not semisimple with the rule's eigenvalues".into(),
                })
            }
            Err(e) => return Err(e.into()),
        };
        projections.insert(b, pr);
    }
    let mut values: Vec<Vector> = Vec::new();
    let mut intern: HashMap<Vector, u32> = HashMap::new();
    let mut id_of = |v: Vector, values: &mut Vec<Vector>| -> u32 {
        *intern.entry(v.clone()).or_insert_with(|| {
            values.push(v);
            (values.len() - 1) as u32
        })
    };
    let mut term_value = Vec::with_capacity(space.len());
    let mut prod_cache: HashMap<(u32, u32), u32> = HashMap::new();
    let mut unary_cache: HashMap<(UnaryLabel, u32), u32> = HashMap::new();
    for id in 0..space.len() as u32 {
        let vid = match space.node(id) {
            Node::Gen(a) => id_of(target.generators[a].clone(), &mut values),
            Node::Unary(b, t) => {
                let tv = term_value[t as usize];
                match unary_cache.get(&(b, tv)) {
                    Some(&v) => v,
                    None => {
                        let img = projections[&b].mul_vec(&values[tv as usize]).map_err(AlgebraError::from)?;
                        let v = id_of(img, &mut values);
                        unary_cache.insert((b, tv), v);
                        v
                    }
                }
            }
            Node::Prod(x, y) => {
                let (xv, yv) = (term_value[x as usize], term_value[y as usize]);
                let key = (xv.min(yv), xv.max(yv));
                match prod_cache.get(&key) {
                    Some(&v) => v,
                    None => {
                        let img = alg.multiply(&values[xv as usize], &values[yv as usize])?;
                        let v = id_of(img, &mut values);
                        prod_cache.insert(key, v);
                        v
                    }
                }
            }
        };
        term_value.push(vid);
    }
    Ok(Evaluation { values, term_value })
}

/// Verdict of [`truncated_hom_onto`].
#[derive(Debug, Clone)]
pub struct HomReport {
    pub relations_checked: usize,
    pub distinct_values: usize,
    /// `image_dims[k-1]`: dimension of the image of terms of size <= k.
    pub image_dims: Vec<usize>,
    pub target_dim: usize,
}

impl HomReport {
    pub fn surjective(&self) -> bool {
        self.image_dims.last().copied() == Some(self.target_dim)
    }
}

impl fmt::Display for HomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.image_dims.iter().map(|d| d.to_string()).collect();
        write!(
            f,
            "relations_checked={} relations_vanish=true image_dims={} target_dim={} surjective={}",
            self.relations_checked,
            dims.join(","),
            self.target_dim,
            self.surjective()
        )
    }
}

/// Check that every generating relation instance vanishes in `target` and
/// report the image of each size layer.
pub fn truncated_hom_onto(trunc: &Truncation, target: &PresentedAlgebra) -> Result<HomReport, UniversalError> {
    let ev = evaluate(&trunc.space, &trunc.rule, target)?;
    let alg = &target.algebra;
    let f = alg.field();
    let mut seen: HashSet<(u8, Vec<(u32, Scalar)>)> = HashSet::new();
    for r in &trunc.relations {
        let key: Vec<(u32, Scalar)> = r.combination.iter().map(|(id, c)| (ev.term_value[*id as usize], c.clone())).collect();
        if !seen.insert((r.family, key)) {
            continue;
        }
        let terms: Vec<(Scalar, &[Scalar])> = r.combination.iter().map(|(id, c)| (c.clone(), ev.value(*id).as_slice())).collect();
        let v = vector::combine(f, alg.dim(), &terms);
        if !vector::is_zero(&v) {
            return Err(UniversalError::TargetViolatesRelations {
                family: r.family,
                relation: describe(&trunc.space, &r.combination),
                witness: alg.format_vector(&v),
            });
        }
    }
    let mut image = Subspace::zero(f, alg.dim());
    let mut counted = vec![false; ev.values.len()];
    let mut image_dims = Vec::new();
    for k in 1..=trunc.space.bound() {
        for id in trunc.space.ids_of_size(k) {
            let vid = ev.term_value[id as usize] as usize;
            if counted[vid] || image.is_full() {
                continue;
            }
            counted[vid] = true;
            if !image.contains(&ev.values[vid]) {
                image = image.extend(std::slice::from_ref(&ev.values[vid])).map_err(AlgebraError::from)?;
            }
        }
        image_dims.push(image.dim());
    }
    Ok(HomReport {
        relations_checked: trunc.relations.len(),
        distinct_values: ev.values.len(),
        image_dims,
        target_dim: alg.dim(),
    })
}
