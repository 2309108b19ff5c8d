//! Fusion rules and everything computed from axes: eigenspaces, fusion
//! verification, projections, Miyamoto maps, enclosures and invariants.

mod axis;

pub use axis::{
    decomposition_closure, eigenspaces, enclosure, invariants, miyamoto, miyamoto_involutions,
    projection_via_polynomial, verify_axis, AxisReport, FusionViolation, InvariantRecord,
    DEFAULT_ENCLOSURE_CAP,
};

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::linalg::LinalgError;
use crate::scalars::{parse_scalar, FieldDescriptor, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("axis does not act semisimply with eigenvalues in the rule")]
    NotSemisimple,
    #[error("eigenvalue {0} is repeated among the labels")]
    RepeatedEigenvalue(String),
    #[error("sign assignment is not compatible with the fusion table")]
    SignsNotCompatible,
    #[error("the sign map is not an algebra automorphism")]
    NotAutomorphism,
    #[error("enclosure did not stabilize within {0} axes")]
    CapExceeded(usize),
    #[error("decomposition closure differs from the generated subalgebra")]
    ClosureMismatch,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

pub type LabelSet = BTreeSet<usize>;

/// A finite label set with eigenvalues and a symmetric table `s * t ⊆ S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRule {
    name: String,
    labels: Vec<String>,
    lambda: Vec<Scalar>,
    star: Vec<Vec<LabelSet>>,
}

impl FusionRule {
    /// `star` lists unordered pairs; omitted pairs fuse to the empty set.
    pub fn new(
        name: &str,
        labels: Vec<String>,
        lambda: Vec<Scalar>,
        star: Vec<(usize, usize, LabelSet)>,
    ) -> Result<Self, FusionError> {
        let n = labels.len();
        if lambda.len() != n || n == 0 {
            return Err(FusionError::BadParameter("one eigenvalue per label required".into()));
        }
        let field = lambda[0].field();
        if lambda.iter().any(|l| l.field() != field) {
            return Err(FusionError::BadParameter("eigenvalues live in different fields".into()));
        }
        let mut table = vec![vec![LabelSet::new(); n]; n];
        let mut seen = vec![vec![false; n]; n];
        for (s, t, set) in star {
            if s >= n || t >= n || set.iter().any(|&u| u >= n) {
                return Err(FusionError::BadParameter("label index out of range".into()));
            }
            if seen[s][t] && table[s][t] != set {
                return Err(FusionError::BadParameter(format!(
                    "table is not symmetric at ({}, {})",
                    labels[s], labels[t]
                )));
            }
            seen[s][t] = true;
            seen[t][s] = true;
            table[s][t] = set.clone();
            table[t][s] = set;
        }
        Ok(Self { name: name.to_string(), labels, lambda, star: table })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> FieldDescriptor {
        self.lambda[0].field()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn lambda(&self, s: usize) -> &Scalar {
        &self.lambda[s]
    }

    pub fn eigenvalues(&self) -> &[Scalar] {
        &self.lambda
    }

    pub fn star(&self, s: usize, t: usize) -> &LabelSet {
        &self.star[s][t]
    }

    /// Fails if two labels share an eigenvalue.
    pub fn check_injective(&self) -> Result<(), FusionError> {
        for i in 0..self.len() {
            for j in 0..i {
                if self.lambda[i] == self.lambda[j] {
                    return Err(FusionError::RepeatedEigenvalue(self.lambda[i].to_string()));
                }
            }
        }
        Ok(())
    }

    /// Whether `signs` (one per label) respects the table:
    /// `sign(s) sign(t) = sign(u)` for every `u` in `s * t`.
    pub fn signs_compatible(&self, signs: &[Scalar]) -> bool {
        signs.len() == self.len()
            && (0..self.len()).all(|s| {
                (0..self.len()).all(|t| self.star[s][t].iter().all(|&u| &signs[s] * &signs[t] == signs[u]))
            })
    }

    /// All non-trivial `±1` gradings of the table.
    pub fn gradings(&self) -> Vec<Vec<Scalar>> {
        let f = self.field();
        let n = self.len();
        let mut out = Vec::new();
        for mask in 1u64..(1u64 << n) {
            let signs: Vec<Scalar> =
                (0..n).map(|i| Scalar::from_i64(f, if mask >> i & 1 == 1 { -1 } else { 1 })).collect();
            if self.signs_compatible(&signs) {
                out.push(signs);
            }
        }
        out
    }

    /// Render in the rule file format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (l, v) in self.labels.iter().zip(&self.lambda) {
            let _ = writeln!(out, "label {l} = {v}");
        }
        for s in 0..self.len() {
            for t in s..self.len() {
                let names: Vec<&str> = self.star[s][t].iter().map(|&u| self.labels[u].as_str()).collect();
                let _ = writeln!(out, "star {} {} = {{{}}}", self.labels[s], self.labels[t], names.join(","));
            }
        }
        out
    }

    /// Parse `label <name> = <scalar>` and `star <s> <t> = {<u>,...}` lines.
    pub fn parse(text: &str, field: FieldDescriptor, eta: Option<&Scalar>) -> Result<Self, FusionError> {
        let err = |line: usize, message: String| FusionError::Parse { line, message };
        let mut labels = Vec::new();
        let mut lambda = Vec::new();
        let mut star = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (lhs, rhs) = line.split_once('=').ok_or_else(|| err(line_no, "expected `=`".into()))?;
            let words: Vec<&str> = lhs.split_whitespace().collect();
            match words.as_slice() {
                ["label", name] => {
                    if labels.iter().any(|l: &String| l == name) {
                        return Err(err(line_no, format!("duplicate label `{name}`")));
                    }
                    labels.push(name.to_string());
                    lambda.push(parse_scalar(rhs.trim(), field, eta).map_err(|e| err(line_no, e.to_string()))?);
                }
                ["star", s, t] => {
                    let idx = |x: &str| {
                        labels.iter().position(|l| l == x).ok_or_else(|| err(line_no, format!("unknown label `{x}`")))
                    };
                    let body = rhs
                        .trim()
                        .strip_prefix('{')
                        .and_then(|b| b.strip_suffix('}'))
                        .ok_or_else(|| err(line_no, "expected `{...}`".into()))?;
                    let mut set = LabelSet::new();
                    for part in body.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                        set.insert(idx(part)?);
                    }
                    star.push((idx(s)?, idx(t)?, set));
                }
                _ => return Err(err(line_no, format!("cannot parse `{line}`"))),
            }
        }
        Self::new("custom", labels, lambda, star)
    }
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn set(items: &[usize]) -> LabelSet {
    items.iter().copied().collect()
}

fn check_eta(eta: &Scalar, what: &str) -> Result<(), FusionError> {
    let f = eta.field();
    if eta.is_zero() || *eta == Scalar::one(f) {
        return Err(FusionError::BadParameter(format!("{what} must differ from 0 and 1")));
    }
    Ok(())
}

/// Ising rule on labels `1, 0, 1/4, 1/32`.
pub fn ising(field: FieldDescriptor) -> Result<FusionRule, FusionError> {
    let lambda = vec![
        Scalar::one(field),
        Scalar::zero(field),
        Scalar::from_ratio(field, 1, 4),
        Scalar::from_ratio(field, 1, 32),
    ];
    let (one, zero, q, t) = (0, 1, 2, 3);
    let rule = FusionRule::new(
        "ising",
        labels(&["1", "0", "1/4", "1/32"]),
        lambda,
        vec![
            (one, one, set(&[one])),
            (zero, zero, set(&[zero])),
            (one, q, set(&[q])),
            (zero, q, set(&[q])),
            (one, t, set(&[t])),
            (zero, t, set(&[t])),
            (q, q, set(&[one, zero])),
            (q, t, set(&[t])),
            (t, t, set(&[one, zero, q])),
        ],
    )?;
    rule.check_injective()?;
    Ok(rule)
}

/// Majorana type `(xi, eta)` on labels `1, 0, xi, eta`.
pub fn majorana(xi: &Scalar, eta: &Scalar) -> Result<FusionRule, FusionError> {
    check_eta(xi, "xi")?;
    check_eta(eta, "eta")?;
    if xi == eta {
        return Err(FusionError::BadParameter("xi must differ from eta".into()));
    }
    let f = eta.field();
    let (one, zero, x, e) = (0, 1, 2, 3);
    FusionRule::new(
        "majorana",
        labels(&["1", "0", "xi", "eta"]),
        vec![Scalar::one(f), Scalar::zero(f), xi.clone(), eta.clone()],
        vec![
            (one, one, set(&[one])),
            (zero, zero, set(&[zero])),
            (one, x, set(&[x])),
            (zero, x, set(&[x])),
            (one, e, set(&[e])),
            (zero, e, set(&[e])),
            (x, x, set(&[one, zero])),
            (x, e, set(&[e])),
            (e, e, set(&[one, zero, x])),
        ],
    )
}

/// `F_Phi(eta)` on labels `1, 0, eta`; `phi` is a subset of `{"0", "1"}`.
pub fn jordan_phi(phi: &[&str], eta: &Scalar) -> Result<FusionRule, FusionError> {
    check_eta(eta, "eta")?;
    let f = eta.field();
    let (one, zero, e) = (0, 1, 2);
    let mut phi_set = LabelSet::new();
    for p in phi {
        match *p {
            "1" => phi_set.insert(one),
            "0" => phi_set.insert(zero),
            other => return Err(FusionError::BadParameter(format!("Phi may only contain 0 and 1, got `{other}`"))),
        };
    }
    let name = match (phi_set.contains(&zero), phi_set.contains(&one)) {
        (false, false) => "jordan_phi()".to_string(),
        (true, false) => "jordan_phi(0)".to_string(),
        (false, true) => "jordan_phi(1)".to_string(),
        (true, true) => "jordan_phi(0,1)".to_string(),
    };
    FusionRule::new(
        &name,
        labels(&["1", "0", "eta"]),
        vec![Scalar::one(f), Scalar::zero(f), eta.clone()],
        vec![
            (one, one, set(&[one])),
            (zero, zero, set(&[zero])),
            (one, zero, phi_set),
            (one, e, set(&[e])),
            (zero, e, set(&[e])),
            (e, e, set(&[one, zero])),
        ],
    )
}

/// Jordan type `eta`: `F_Phi(eta)` with `Phi` empty.
pub fn jordan(eta: &Scalar) -> Result<FusionRule, FusionError> {
    let mut r = jordan_phi(&[], eta)?;
    r.name = "jordan".into();
    Ok(r)
}

/// Associative type on labels `1, 0` with `0 * 1 = {0, 1}`.
pub fn associative(field: FieldDescriptor) -> FusionRule {
    FusionRule::new(
        "associative",
        labels(&["1", "0"]),
        vec![Scalar::one(field), Scalar::zero(field)],
        vec![(0, 0, set(&[0])), (1, 1, set(&[1])), (0, 1, set(&[0, 1]))],
    )
    .expect("static table")
}

/// A built-in rule by name: `jordan`, `jordan_phi(...)`, `associative`,
/// `ising` or `majorana:<xi>`. `Ok(None)` when the name is not built in.
pub fn named_rule(spec: &str, field: FieldDescriptor, eta: Option<&Scalar>) -> Result<Option<FusionRule>, FusionError> {
    let need_eta = || eta.cloned().ok_or_else(|| FusionError::BadParameter(format!("rule {spec} needs a value of eta")));
    let rule = match spec {
        "jordan" => jordan(&need_eta()?)?,
        "associative" => associative(field),
        "ising" => ising(field)?,
        s if s.starts_with("jordan_phi(") && s.ends_with(')') => {
            let inner = &s["jordan_phi(".len()..s.len() - 1];
            let phi: Vec<&str> = inner.split(',').map(str::trim).filter(|x| !x.is_empty()).collect();
            jordan_phi(&phi, &need_eta()?)?
        }
        s if s.starts_with("majorana:") => {
            let xi = crate::scalars::parse_scalar(&s["majorana:".len()..], field, eta)?;
            majorana(&xi, &need_eta()?)?
        }
        _ => return Ok(None),
    };
    Ok(Some(rule))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qe() -> FieldDescriptor {
        FieldDescriptor::rational_functions()
    }

    #[test]
    fn builtin_tables() {
        let eta = Scalar::eta(qe()).unwrap();
        let j = jordan_phi(&[], &eta).unwrap();
        assert!(j.star(1, 0).is_empty());
        assert_eq!(*j.star(2, 2), set(&[0, 1]));
        let i = ising(qe()).unwrap();
        assert_eq!(*i.star(2, 2), set(&[0, 1]));
        let a = associative(qe());
        assert_eq!(*a.star(1, 0), set(&[0, 1]));
        assert!(jordan(&Scalar::one(qe())).is_err());
        assert!(majorana(&eta, &eta).is_err());
    }

    #[test]
    fn jordan_grading_negates_eta() {
        let eta = Scalar::eta(qe()).unwrap();
        let g = jordan_phi(&["0", "1"], &eta).unwrap().gradings();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0][2], Scalar::from_i64(qe(), -1));
        assert!(associative(qe()).gradings().is_empty());
    }

    #[test]
    fn rule_text_round_trip() {
        let eta = Scalar::eta(qe()).unwrap();
        let j = jordan_phi(&["1"], &eta).unwrap();
        let parsed = FusionRule::parse(&j.to_text(), qe(), None).unwrap();
        assert_eq!(parsed.labels(), j.labels());
        assert_eq!(parsed.eigenvalues(), j.eigenvalues());
        for s in 0..3 {
            for t in 0..3 {
                assert_eq!(parsed.star(s, t), j.star(s, t));
            }
        }
    }
}
