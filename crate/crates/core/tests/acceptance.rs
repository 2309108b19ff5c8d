//! Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
//! throughout.

mod support;

use std::process::ExitCode;
use std::time::Instant;

use axial::algebra::{enumerate_ideals_diagonalizable, find_homomorphism, PresentedAlgebra};
use axial::catalog::{build, build_generic, CatalogName};
use axial::fusion::{associative, invariants, jordan_phi, verify_axis, FusionRule, InvariantRecord};
use axial::linalg::{Subspace, Vector};
use axial::relations::{verify_prod1, verify_proprod2, verify_chain_relations, AxisChain};
use axial::scalars::{FieldDescriptor, Scalar};
use axial::universal::{truncated_hom_onto, Families, Truncation, DEFAULT_TERM_GUARD};

type Verdict = Result<String, String>;

type Row = (usize, usize, usize, &'static [[usize; 3]]);

const TABLE5: [(&str, Row); 10] = [
    ("1A", (1, 1, 1, &[[1, 0, 0]])),
    ("hat1A", (2, 2, 2, &[[2, 0, 0], [1, 1, 0]])),
    ("2B", (2, 2, 2, &[[1, 1, 0]])),
    ("hat2B", (2, 2, 3, &[[2, 1, 0]])),
    ("3C", (3, 3, 3, &[[1, 1, 1]])),
    ("hat3C", (3, 3, 4, &[[2, 1, 1]])),
    ("bar4NPminus", (6, 4, 4, &[[2, 1, 1], [1, 2, 1]])),
    ("bar4NP", (6, 4, 5, &[[2, 2, 1]])),
    ("bar4NPprime", (6, 4, 5, &[[3, 1, 1], [2, 2, 1]])),
    ("4NP", (6, 4, 6, &[[3, 2, 1]])),
];

const TABLE6: [(&str, Row); 6] = [
    ("3Cx", (3, 2, 2, &[[1, 0, 1]])),
    ("hat3Cx", (3, 3, 3, &[[2, 0, 1]])),
    ("bar4NPminus_x", (6, 3, 3, &[[2, 0, 1], [1, 1, 1]])),
    ("bar4NP_x", (6, 4, 4, &[[2, 1, 1]])),
    ("bar4NPprime_x", (6, 4, 4, &[[3, 0, 1], [2, 1, 1]])),
    ("4NP_x", (6, 4, 5, &[[3, 1, 1]])),
];

fn qeta() -> (FieldDescriptor, Scalar) {
    let f = FieldDescriptor::rational_functions();
    (f, Scalar::eta(f).unwrap())
}

fn minus_one() -> (FieldDescriptor, Scalar) {
    let f = FieldDescriptor::rationals();
    (f, Scalar::from_i64(f, -1))
}

fn named(name: &str, (f, eta): &(FieldDescriptor, Scalar)) -> PresentedAlgebra {
    build(name.parse::<CatalogName>().unwrap(), *f, eta).unwrap()
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

fn row_matches(rec: &InvariantRecord, row: &Row) -> bool {
    let edims: Vec<Vec<usize>> = row.3.iter().map(|e| e.to_vec()).collect();
    (rec.enclosure_size, rec.adim, rec.vdim) == (row.0, row.1, row.2) && rec.distinct_edims() == edims
}

fn table(rows: &[(&str, Row)], setting: &(FieldDescriptor, Scalar)) -> Verdict {
    let rule = jordan_phi(&[], &setting.1).map_err(e)?;
    for (name, row) in rows {
        let rec = invariants(&named(name, setting), &rule).map_err(e)?;
        if !row_matches(&rec, row) {
            return Err(format!("{name}: got {rec:?}"));
        }
    }
    Ok(format!("{} rows", rows.len()))
}

fn criterion1() -> Verdict {
    table(&TABLE5, &qeta())
}

fn criterion2() -> Verdict {
    table(&TABLE6, &minus_one())
}

fn criterion3() -> Verdict {
    let mut checked = 0;
    let assoc = ["1A", "hat1A", "2B", "hat2B"];
    for (names, setting) in [(TABLE5.map(|r| r.0).to_vec(), qeta()), (TABLE6.map(|r| r.0).to_vec(), minus_one())] {
        let jordan = jordan_phi(&[], &setting.1).map_err(e)?;
        for name in names {
            let p = named(name, &setting);
            let mut rules: Vec<(&str, FusionRule)> = vec![("jordan_phi()", jordan.clone())];
            if assoc.contains(&name) {
                rules.push(("associative", associative(setting.0)));
            }
            for (rule_name, rule) in &rules {
                for (k, g) in p.generators.iter().enumerate() {
                    let rep = verify_axis(&p.algebra, g, rule).map_err(e)?;
                    let ok = rep.is_idempotent && rep.semisimple && rep.fusion_violations.is_empty();
                    if !ok || !rep.is_axis() {
                        return Err(format!("{name} generator {k} under {rule_name}: {rep:?}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} generator checks"))
}

/// Order of `q`'s axes that `p`'s axes map to under an isomorphism, if any.
fn isomorphic(p: &PresentedAlgebra, q: &PresentedAlgebra) -> Option<Vec<usize>> {
    let (pa, qa) = (p.distinct_axes(), q.distinct_axes());
    if p.algebra.dim() != q.algebra.dim() || pa.len() != qa.len() {
        return None;
    }
    let src = PresentedAlgebra::new(p.algebra.clone(), pa.clone()).ok()?;
    let orders: Vec<Vec<usize>> = if qa.len() == 2 { vec![vec![0, 1], vec![1, 0]] } else { vec![(0..qa.len()).collect()] };
    orders.into_iter().find(|ord| {
        let images: Vec<Vector> = ord.iter().map(|&i| qa[i].clone()).collect();
        find_homomorphism(&src, &q.algebra, &images).map(|m| m.is_bijective()).unwrap_or(false)
    })
}

fn classify(p: &PresentedAlgebra, candidates: &[(&'static str, PresentedAlgebra)]) -> Result<&'static str, String> {
    let hits: Vec<&str> = candidates.iter().filter(|(_, c)| isomorphic(p, c).is_some()).map(|(n, _)| *n).collect();
    match hits.as_slice() {
        [one] => Ok(one),
        _ => Err(format!("quotient of dim {} matches {hits:?}", p.algebra.dim())),
    }
}

fn four_np_vectors<'a>(p: &'a PresentedAlgebra, eta: &Scalar) -> impl Fn(&str) -> Vector + 'a {
    let a = &p.algebra;
    let f = a.field();
    let c = move |n: i64| Scalar::from_i64(f, n);
    let eta1 = eta + &c(1);
    move |which: &str| match which {
        "r" => a.vector(&[(c(1), "qh"), (c(-1), "ah_0"), (c(-1), "ah_1"), (c(-1), "ah_m1")]).unwrap(),
        "ah1-ah0" => a.vector(&[(c(1), "ah_1"), (c(-1), "ah_0")]).unwrap(),
        "ahm1-ah0" => a.vector(&[(c(1), "ah_m1"), (c(-1), "ah_0")]).unwrap(),
        "qh-(eta+1)ah0" => a.vector(&[(c(1), "qh"), (-eta1.clone(), "ah_0")]).unwrap(),
        "ah1-ahm1" => a.vector(&[(c(1), "ah_1"), (c(-1), "ah_m1")]).unwrap(),
        label => a.vector(&[(c(1), label)]).unwrap(),
    }
}

fn criterion4() -> Verdict {
    let setting = qeta();
    let p = named("4NP", &setting);
    let v = four_np_vectors(&p, &setting.1);
    let bullets: [(&str, &[&str]); 8] = [
        ("bar4NP", &["r"]),
        ("bar4NPprime", &["s_0"]),
        ("bar4NPprime", &["s_1"]),
        ("bar4NPminus", &["s_0", "r"]),
        ("bar4NPminus", &["s_1", "r"]),
        ("hat3C", &["s_0", "s_1"]),
        ("3C", &["s_0", "s_1", "r"]),
        ("hat2B", &["ah1-ah0", "ahm1-ah0", "qh-(eta+1)ah0"]),
    ];
    let mut swapped = Vec::new();
    for (name, seeds) in &bullets {
        let seeds: Vec<Vector> = seeds.iter().map(|s| v(s)).collect();
        let ideal = p.algebra.ideal_closure(&seeds).map_err(e)?;
        if ideal != p.algebra.span(&seeds).map_err(e)? {
            return Err(format!("span of {seeds:?} is not an ideal"));
        }
        let (q, _) = p.quotient(&ideal).map_err(e)?;
        let target = named(name, &setting);
        match isomorphic(&q, &target) {
            Some(ord) if ord == [0, 1] => {}
            Some(_) => swapped.push(*name),
            None => return Err(format!("4NP/ideal is not isomorphic to {name}")),
        }
    }
    Ok(format!("6 statements, 8 quotients; generator order swapped for {swapped:?}"))
}

fn criterion5() -> Verdict {
    let p = build_generic(CatalogName::HatTwoB).map_err(e)?;
    let en = enumerate_ideals_diagonalizable(&p, &associative(p.algebra.field())).map_err(e)?;
    if en.ideals.len() != 8 || !en.complete {
        return Err(format!("{} ideals, complete={}", en.ideals.len(), en.complete));
    }
    let (qf, eta) = qeta();
    let candidates: Vec<(&str, PresentedAlgebra)> =
        ["1A", "hat1A", "2B", "hat2B"].iter().map(|n| (*n, named(n, &(qf, eta.clone())))).collect();
    let mut classes = std::collections::BTreeSet::new();
    for r in en.ideals.iter().filter(|r| !r.is_full()) {
        let (q, _) = p.quotient(r).map_err(e)?;
        classes.insert(classify(&q, &candidates)?);
    }
    if classes.len() != 4 {
        return Err(format!("classes {classes:?}"));
    }
    Ok(format!("8 ideals, classes {classes:?}"))
}

fn subset_spans(p: &PresentedAlgebra, v: &dyn Fn(&str) -> Vector, extra: &[&str]) -> Result<Vec<Subspace>, String> {
    let base = ["s_0", "s_1", "r"];
    (0..8u8)
        .map(|mask| {
            let mut seeds: Vec<Vector> = (0..3).filter(|k| mask >> k & 1 == 1).map(|k| v(base[k])).collect();
            seeds.extend(extra.iter().map(|s| v(s)));
            p.algebra.span(&seeds).map_err(e)
        })
        .collect()
}

fn criterion6() -> Verdict {
    let generic = qeta();
    let p = named("4NP", &generic);
    let rule = jordan_phi(&[], &generic.1).map_err(e)?;
    let v = four_np_vectors(&p, &generic.1);
    let en = enumerate_ideals_diagonalizable(&p, &rule).map_err(e)?;
    if !en.complete {
        return Err("ideal enumeration incomplete".into());
    }
    let total = en.ideals.len();
    let d = v("ah1-ahm1");
    let mut avoiding: Vec<Subspace> = en.ideals.iter().filter(|r| !r.contains(&d)).cloned().collect();
    let mut expected = subset_spans(&p, &v, &[])?;
    avoiding.sort_by_key(|r| format!("{r:?}"));
    expected.sort_by_key(|r| format!("{r:?}"));
    if avoiding != expected {
        return Err(format!("{} ideals avoid a_1 - a_-1", avoiding.len()));
    }
    let candidates: Vec<(&str, PresentedAlgebra)> = TABLE5.iter().map(|(n, _)| (*n, named(n, &generic))).collect();
    let mut classes = std::collections::BTreeSet::new();
    for r in en.ideals.iter().filter(|r| !r.is_full()) {
        classes.insert(classify(&p.quotient(r).map_err(e)?.0, &candidates)?);
    }
    if classes.len() != 10 {
        return Err(format!("Table 5 classes reached: {classes:?}"));
    }

    let at = minus_one();
    let p = named("4NP", &at);
    let rule = jordan_phi(&[], &at.1).map_err(e)?;
    let v = four_np_vectors(&p, &at.1);
    let en = enumerate_ideals_diagonalizable(&p, &rule).map_err(e)?;
    let candidates: Vec<(&str, PresentedAlgebra)> = TABLE6.iter().map(|(n, _)| (*n, named(n, &at))).collect();
    let mut classes6 = std::collections::BTreeSet::new();
    for r in subset_spans(&p, &v, &["qh"])? {
        if !en.ideals.contains(&r) {
            return Err(format!("R + Fqh of dim {} is not among the ideals at eta = -1", r.dim()));
        }
        classes6.insert(classify(&p.quotient(&r).map_err(e)?.0, &candidates)?);
    }
    if classes6.len() != 6 {
        return Err(format!("Table 6 classes reached: {classes6:?}"));
    }
    Ok(format!("{total} ideals, 8 avoid a_1 - a_-1, 10 Table 5 classes; 6 Table 6 classes at eta = -1"))
}

fn criterion7() -> Verdict {
    let (_, eta) = qeta();
    let chain = AxisChain::new(build_generic(CatalogName::FourNP).map_err(e)?, &eta, 3).map_err(e)?;
    let mut checks = chain.consistency.clone();
    checks.extend(verify_prod1(&chain).map_err(e)?);
    let rels = verify_chain_relations(&chain).map_err(e)?;
    checks.extend(rels.checks);
    match checks.iter().find(|c| !c.holds) {
        Some(c) => Err(format!("{}: {:?}", c.name, c.witness)),
        None => Ok(format!("{} identities", checks.len())),
    }
}

fn criterion8() -> Verdict {
    let rep = verify_proprod2(8);
    match rep.checks.iter().find(|c| !c.holds) {
        Some(c) => Err(format!("{}: {:?}", c.name, c.witness)),
        None => Ok(format!("{} identities in the window", rep.checks.len())),
    }
}

fn criterion9() -> Verdict {
    let (qf, eta) = qeta();
    let q = FieldDescriptor::rationals();
    let cases = [
        ("hat2B", associative(q), build(CatalogName::HatTwoB, q, &Scalar::from_i64(q, 3)).map_err(e)?),
        ("4NP", jordan_phi(&[], &eta).map_err(e)?, build(CatalogName::FourNP, qf, &eta).map_err(e)?),
    ];
    let mut notes = Vec::new();
    for (name, rule, target) in cases {
        let mut previous: Option<Vec<usize>> = None;
        for n in 1..=6 {
            let trunc = Truncation::new(&rule, 2, n, Families::AxialAlgebra, DEFAULT_TERM_GUARD).map_err(e)?;
            let dims = trunc.quotient().map_err(e)?.dims;
            if let Some(prev) = &previous {
                if dims.iter().zip(prev).any(|(now, before)| now > before) {
                    return Err(format!("{name}: bounds grew from {prev:?} to {dims:?}"));
                }
            }
            if n == 6 {
                let rep = truncated_hom_onto(&trunc, &target).map_err(|err| format!("{name}: {err}"))?;
                if !rep.surjective() {
                    return Err(format!("{name}: {rep}"));
                }
                if dims.iter().zip(&rep.image_dims).any(|(bound, image)| bound < image) {
                    return Err(format!("{name}: bound {dims:?} below image {:?}", rep.image_dims));
                }
                notes.push(format!("{name} bounds {dims:?} image {:?}", rep.image_dims));
            }
            previous = Some(dims);
        }
    }
    Ok(notes.join("; "))
}

fn criterion10() -> Verdict {
    let mut done = Vec::new();
    for (name, suite) in support::SUITES {
        suite().map_err(|err| format!("{name}: {err}"))?;
        done.push(name);
    }
    Ok(format!("{} suites x {} cases", done.len(), support::CASES))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("Table 5 at generic eta", criterion1),
        ("Table 6 at eta = -1", criterion2),
        ("catalog generators are axes", criterion3),
        ("quotients of 4NP", criterion4),
        ("ideals of hat2B", criterion5),
        ("ideals of 4NP", criterion6),
        ("prod1 and the relations in 4NP", criterion7),
        ("proprod2 in Minf, window 8", criterion8),
        ("universal truncations at N = 6", criterion9),
        ("property suites", criterion10),
    ];
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {:>2} PASS {title} ({detail}) [{secs:.2}s]", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {title}: {why} [{secs:.2}s]", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
