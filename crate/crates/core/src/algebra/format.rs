//! Text format for presented algebras:
//!
//! ```text
//! algebra dim=2 char=0 eta=generic
//! basis a b
//! sc a a = 1*a
//! sc a b = (eta/2)*a + (eta/2)*b
//! gens 1*a;1*b
//! ```
//!
//! Omitted `sc` pairs are zero. `eta=none` marks algebras whose constants do
//! not involve eta.

use std::fmt::Write as _;

use super::{Algebra, AlgebraError, PresentedAlgebra};
use crate::linalg::{vector, Vector};
use crate::scalars::{parse_scalar, FieldDescriptor, Scalar};

fn valid_label(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && s != "eta"
}

fn scalar_text(c: &Scalar) -> String {
    let s = c.to_string();
    if s.chars().all(|ch| ch.is_ascii_digit()) {
        s
    } else {
        format!("({s})")
    }
}

pub fn format_vector(alg: &Algebra, v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(alg.labels())
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| format!("{}*{l}", scalar_text(c)))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// Serialize; `generators` may be empty.
pub fn write_algebra(alg: &Algebra, generators: &[Vector]) -> String {
    let f = alg.field();
    let eta = if f.generic_eta() {
        "generic".to_string()
    } else {
        alg.eta().map_or("none".to_string(), |e| e.to_string())
    };
    let mut out = String::new();
    let _ = writeln!(out, "algebra dim={} char={} eta={eta}", alg.dim(), f.characteristic());
    let _ = writeln!(out, "basis {}", alg.labels().join(" "));
    for i in 0..alg.dim() {
        for j in i..alg.dim() {
            let p = alg.basis_product(i, j);
            if !vector::is_zero(p) {
                let _ = writeln!(out, "sc {} {} = {}", alg.labels()[i], alg.labels()[j], format_vector(alg, p));
            }
        }
    }
    if !generators.is_empty() {
        let gens: Vec<String> = generators.iter().map(|g| format_vector(alg, g)).collect();
        let _ = writeln!(out, "gens {}", gens.join(";"));
    }
    out
}

pub fn write_presented(p: &PresentedAlgebra) -> String {
    write_algebra(&p.algebra, &p.generators)
}

/// Split `text` at top-level `+`/`-` signs that start a new term.
fn split_terms(text: &str) -> Vec<String> {
    let mut terms = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    let mut prev: Option<char> = None;
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        let is_sign = (ch == '+' || ch == '-') && depth == 0;
        let after_operator = matches!(prev, None | Some('*' | '/' | '^' | '('));
        if is_sign && !after_operator && !cur.trim().is_empty() {
            terms.push(cur.trim().to_string());
            cur.clear();
            if ch == '-' {
                cur.push('-');
            }
        } else if !(is_sign && ch == '+' && cur.trim().is_empty()) {
            cur.push(ch);
        }
        if !ch.is_whitespace() {
            prev = Some(ch);
        }
    }
    if !cur.trim().is_empty() {
        terms.push(cur.trim().to_string());
    }
    terms
}

/// Parse `c*label + ...` (or `0`) against the labels of `alg`.
pub fn parse_vector(
    alg_labels: &[String],
    field: FieldDescriptor,
    eta: Option<&Scalar>,
    text: &str,
) -> Result<Vector, String> {
    let mut v = vector::zeros(field, alg_labels.len());
    let text = text.trim();
    if text == "0" {
        return Ok(v);
    }
    for term in split_terms(text) {
        let (coeff_text, label) = match term.rfind('*') {
            Some(k) if valid_label(term[k + 1..].trim()) => (term[..k].trim().to_string(), term[k + 1..].trim()),
            _ => {
                let (sign, rest) = match term.strip_prefix('-') {
                    Some(r) => ("-1", r.trim()),
                    None => ("1", term.as_str()),
                };
                (sign.to_string(), rest)
            }
        };
        let idx = alg_labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| format!("unknown basis label `{label}`"))?;
        let c = parse_scalar(&coeff_text, field, eta).map_err(|e| e.to_string())?;
        v[idx] = &v[idx] + &c;
    }
    Ok(v)
}

/// Parse the header, basis, structure constants and optional generators.
pub fn parse_algebra(text: &str) -> Result<(Algebra, Vec<Vector>), AlgebraError> {
    let err = |line: usize, message: String| AlgebraError::Parse { line, message };
    let mut header: Option<(usize, FieldDescriptor, Option<Scalar>)> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut products: Vec<(usize, usize, Vector)> = Vec::new();
    let mut gens: Vec<Vector> = Vec::new();

    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match kw {
            "algebra" => {
                let mut dim = None;
                let mut ch = None;
                let mut eta_text = None;
                for part in rest.split_whitespace() {
                    match part.split_once('=') {
                        Some(("dim", v)) => dim = v.parse::<usize>().ok(),
                        Some(("char", v)) => ch = v.parse::<u64>().ok(),
                        Some(("eta", v)) => eta_text = Some(v.to_string()),
                        _ => return Err(err(line_no, format!("bad header field `{part}`"))),
                    }
                }
                let (Some(dim), Some(ch), Some(eta_text)) = (dim, ch, eta_text) else {
                    return Err(err(line_no, "header needs dim=, char= and eta=".into()));
                };
                let generic = eta_text == "generic";
                let field = FieldDescriptor::new(ch, generic).map_err(|e| err(line_no, e.to_string()))?;
                let eta = match eta_text.as_str() {
                    "generic" => Some(Scalar::eta(field).expect("generic field")),
                    "none" => None,
                    t => Some(parse_scalar(t, field, None).map_err(|e| err(line_no, e.to_string()))?),
                };
                header = Some((dim, field, eta));
            }
            "basis" => {
                let (dim, _, _) = header.as_ref().ok_or_else(|| err(line_no, "basis before header".into()))?;
                let names: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if names.len() != *dim {
                    return Err(err(line_no, format!("expected {dim} basis labels, found {}", names.len())));
                }
                for (i, n) in names.iter().enumerate() {
                    if !valid_label(n) {
                        return Err(err(line_no, format!("invalid basis label `{n}`")));
                    }
                    if names[..i].contains(n) {
                        return Err(err(line_no, format!("duplicate basis label `{n}`")));
                    }
                }
                labels = Some(names);
            }
            "sc" => {
                let (_, field, eta) = header.as_ref().ok_or_else(|| err(line_no, "sc before header".into()))?;
                let names = labels.as_ref().ok_or_else(|| err(line_no, "sc before basis".into()))?;
                let (lhs, rhs) = rest.split_once('=').ok_or_else(|| err(line_no, "sc line needs `=`".into()))?;
                let pair: Vec<&str> = lhs.split_whitespace().collect();
                if pair.len() != 2 {
                    return Err(err(line_no, "sc line needs two basis labels".into()));
                }
                let idx = |s: &str| {
                    names.iter().position(|l| l == s).ok_or_else(|| err(line_no, format!("unknown basis label `{s}`")))
                };
                let (i, j) = (idx(pair[0])?, idx(pair[1])?);
                let v = parse_vector(names, *field, eta.as_ref(), rhs).map_err(|m| err(line_no, m))?;
                if products.iter().any(|(a, b, _)| (*a, *b) == (i, j) || (*a, *b) == (j, i)) {
                    return Err(err(line_no, "duplicate sc pair".into()));
                }
                products.push((i, j, v));
            }
            "gens" => {
                let (_, field, eta) = header.as_ref().ok_or_else(|| err(line_no, "gens before header".into()))?;
                let names = labels.as_ref().ok_or_else(|| err(line_no, "gens before basis".into()))?;
                for part in rest.split(';') {
                    gens.push(parse_vector(names, *field, eta.as_ref(), part).map_err(|m| err(line_no, m))?);
                }
            }
            other => return Err(err(line_no, format!("unknown keyword `{other}`"))),
        }
    }
    let (_, field, eta) = header.ok_or_else(|| err(0, "missing header".into()))?;
    let labels = labels.ok_or_else(|| err(0, "missing basis line".into()))?;
    let alg = Algebra::from_products(field, eta, labels, products)?;
    Ok((alg, gens))
}

/// Parse a file that must carry a `gens` line generating the algebra.
pub fn parse_presented(text: &str) -> Result<PresentedAlgebra, AlgebraError> {
    let (alg, gens) = parse_algebra(text)?;
    if gens.is_empty() {
        return Err(AlgebraError::Parse { line: 0, message: "missing gens line".into() });
    }
    PresentedAlgebra::new(alg, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "algebra dim=2 char=0 eta=generic
basis a b
sc a a = 1*a
sc a b = (eta/2)*a + (eta/2)*b
sc b b = b
gens 1*a;b
";

    #[test]
    fn round_trip() {
        let p = parse_presented(SAMPLE).unwrap();
        assert_eq!(p.algebra.dim(), 2);
        let text = write_presented(&p);
        assert_eq!(parse_presented(&text).unwrap(), p);
        assert_eq!(write_presented(&parse_presented(&text).unwrap()), text);
    }

    #[test]
    fn vector_terms() {
        let f = FieldDescriptor::rational_functions();
        let labels = vec!["a".to_string(), "b".to_string()];
        let v = parse_vector(&labels, f, None, "-a - (eta-1)/2*b + 2*a").unwrap();
        assert_eq!(v[0], Scalar::one(f));
        assert_eq!(v[1], parse_scalar("(1-eta)/2", f, None).unwrap());
        assert!(parse_vector(&labels, f, None, "3*c").is_err());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = SAMPLE.replace("sc b b = b", "sc b c = b");
        match parse_algebra(&bad) {
            Err(AlgebraError::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("{other:?}"),
        }
    }
}
