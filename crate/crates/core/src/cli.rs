//! The `axial` command line. Every command returns a [`CommandOutcome`]
//! whose report has one `key=value` record per line.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::algebra::format::{parse_presented, parse_vector, write_presented};
use crate::algebra::{enumerate_ideals_diagonalizable, find_homomorphism, AlgebraError, PresentedAlgebra};
use crate::catalog::minf::inf_axis_check;
use crate::catalog::{build, CatalogName};
use crate::fusion::{invariants, jordan_phi, named_rule, verify_axis, FusionRule};
use crate::linalg::Vector;
use crate::relations::{
    flip_checks, p_reading_checks, p_x_z, seress_check, verify_lemquo_grid, verify_prod1, verify_proprod2,
    verify_chain_relations, AxisChain,
};
use crate::report::Check;
use crate::scalars::{parse_scalar, FieldDescriptor, Scalar};
use crate::universal::{truncated_hom_onto, Families, Truncation, UniversalError, DEFAULT_TERM_GUARD};

/// Exit code and report of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    /// 0 success, 1 a mathematical check failed, 2 usage or I/O error.
    pub exit_code: i32,
    pub report: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Math(String),
}

type Outcome = Result<(String, bool), Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

#[derive(Parser, Debug)]
#[command(name = "axial", about = "Exact computations with axial algebras", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct FieldArgs {
    /// `generic` or an exact scalar such as `-1` or `3/5`.
    #[arg(long, default_value = "generic", allow_hyphen_values = true)]
    eta: String,
    /// Characteristic of the base field (0 or a prime).
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
}

#[derive(Args, Debug, Clone)]
struct RuleArg {
    /// jordan, jordan_phi(), jordan_phi(0), jordan_phi(1), jordan_phi(0,1),
    /// associative, ising, majorana:<xi> or a rule file.
    #[arg(long, default_value = "jordan_phi()")]
    rule: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List or build named algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Check axes or the computational lemmas.
    Verify {
        #[command(subcommand)]
        what: VerifyAction,
    },
    /// Print a fusion rule.
    Fusion {
        #[command(subcommand)]
        action: FusionAction,
    },
    /// Enclosure size, axial dimension, dimension and eigenspace dimensions.
    Invariants {
        algebra: String,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        rule: RuleArg,
    },
    /// Quotient by the ideal generated by `;`-separated vectors.
    Quotient {
        algebra: String,
        #[arg(long)]
        ideal: String,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Ideals spanned by common eigenvectors of the two generators.
    Ideals {
        algebra: String,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        rule: RuleArg,
    },
    /// Generator-preserving homomorphism from one algebra to another.
    Hom {
        source: String,
        target: String,
        /// Images of the source generators in the target, `;`-separated.
        #[arg(long)]
        images: Option<String>,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Bounded truncations of the universal object.
    Universal {
        #[command(subcommand)]
        action: UniversalAction,
    },
    /// Reproduce the tables of quotients of 4NP.
    Tables {
        #[arg(long, default_value = "generic", allow_hyphen_values = true)]
        eta: String,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Build {
        name: String,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyAction {
    Axis {
        algebra: String,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        rule: RuleArg,
    },
    Lemmas {
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        field: FieldArgs,
        /// Window for the checks in Minf.
        #[arg(long, default_value_t = 8)]
        window: i64,
    },
}

#[derive(Subcommand, Debug)]
enum FusionAction {
    Table {
        rule: String,
        #[command(flatten)]
        field: FieldArgs,
    },
}

#[derive(Subcommand, Debug)]
enum UniversalAction {
    Expand {
        #[arg(long, default_value = "jordan_phi()")]
        fusion: String,
        #[arg(long, default_value_t = 2)]
        gens: usize,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        target: Option<String>,
        /// decomposition, axial or axial_algebra.
        #[arg(long, default_value = "axial_algebra")]
        relations: String,
        #[command(flatten)]
        field: FieldArgs,
    },
}

/// Parse `argv` (including the program name) and run the command.
pub fn run<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return CommandOutcome { exit_code: code, report: e.to_string() };
        }
    };
    match dispatch(cli.command) {
        Ok((report, ok)) => CommandOutcome { exit_code: if ok { 0 } else { 1 }, report },
        Err(Failure::Usage(m)) => CommandOutcome { exit_code: 2, report: format!("error={m:?}\n") },
        Err(Failure::Math(m)) => CommandOutcome { exit_code: 1, report: format!("failure={m:?}\n") },
    }
}

/// Field and eta of a command-line `--eta`/`--char` pair.
fn field_and_eta(args: &FieldArgs) -> Result<(FieldDescriptor, Scalar), Failure> {
    let generic = args.eta == "generic";
    let f = FieldDescriptor::new(args.characteristic, generic).map_err(usage)?;
    let eta = if generic { Scalar::eta(f).map_err(usage)? } else { parse_scalar(&args.eta, f, None).map_err(usage)? };
    Ok((f, eta))
}

/// Either a catalog name built at `--eta`/`--char`, or an algebra file.
/// Returns the algebra and the eta to use with it, if any.
fn load(spec: &str, args: &FieldArgs) -> Result<(PresentedAlgebra, Option<Scalar>), Failure> {
    if let Ok(name) = spec.parse::<CatalogName>() {
        let (f, eta) = field_and_eta(args)?;
        let p = build(name, f, &eta).map_err(usage)?;
        return Ok((p, Some(eta)));
    }
    let text = fs::read_to_string(spec).map_err(|e| usage(format!("{spec}: {e}")))?;
    let p = parse_presented(&text).map_err(|e| usage(format!("{spec}: {e}")))?;
    let f = p.algebra.field();
    let eta = if args.eta != "generic" {
        Some(parse_scalar(&args.eta, f, p.algebra.eta()).map_err(usage)?)
    } else if f.generic_eta() {
        Some(Scalar::eta(f).map_err(usage)?)
    } else {
        p.algebra.eta().cloned()
    };
    Ok((p, eta))
}

fn rule_for(spec: &str, field: FieldDescriptor, eta: Option<&Scalar>) -> Result<FusionRule, Failure> {
    if let Some(rule) = named_rule(spec, field, eta).map_err(usage)? {
        return Ok(rule);
    }
    let text = fs::read_to_string(spec).map_err(|e| usage(format!("{spec}: {e}")))?;
    FusionRule::parse(&text, field, eta).map_err(usage)
}

fn parse_vectors(p: &PresentedAlgebra, eta: Option<&Scalar>, text: &str) -> Result<Vec<Vector>, Failure> {
    let alg = &p.algebra;
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_vector(alg.labels(), alg.field(), eta, s).map_err(usage))
        .collect()
}

fn write_or_return(text: String, output: &Option<PathBuf>, summary: &mut String) -> Result<(), Failure> {
    match output {
        Some(path) => {
            fs::write(path, &text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let _ = writeln!(summary, "written={:?}", path.display().to_string());
        }
        None => summary.push_str(&text),
    }
    Ok(())
}

fn dims(v: &[usize]) -> String {
    v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Catalog { action: CatalogAction::List } => {
            let mut out = String::new();
            for name in CatalogName::ALL {
                let _ = writeln!(
                    out,
                    "name={} eta={} type={}",
                    name.as_str(),
                    if name.requires_eta_minus_one() { "-1" } else { "any" },
                    if name.is_associative_type() { "associative" } else { "jordan" }
                );
            }
            Ok((out, true))
        }
        Command::Catalog { action: CatalogAction::Build { name, field, output } } => {
            let n: CatalogName = name.parse().map_err(usage)?;
            let (f, eta) = field_and_eta(&field)?;
            let p = build(n, f, &eta).map_err(usage)?;
            let mut out = String::new();
            write_or_return(write_presented(&p), &output, &mut out)?;
            Ok((out, true))
        }
        Command::Verify { what: VerifyAction::Axis { algebra, field, rule } } => verify_axes(&algebra, &field, &rule.rule),
        Command::Verify { what: VerifyAction::Lemmas { algebra, field, window } } => lemmas(&algebra, &field, window),
        Command::Fusion { action: FusionAction::Table { rule, field } } => {
            let (f, eta) = field_and_eta(&field)?;
            let r = rule_for(&rule, f, Some(&eta))?;
            let mut out = format!("rule={} labels={}\n", r.name(), r.labels().join(","));
            for s in 0..r.len() {
                let _ = writeln!(out, "label={} lambda={}", r.labels()[s], r.lambda(s));
            }
            for s in 0..r.len() {
                for t in s..r.len() {
                    let prod: Vec<&str> = r.star(s, t).iter().map(|&u| r.labels()[u].as_str()).collect();
                    let _ = writeln!(out, "s={} t={} product={{{}}}", r.labels()[s], r.labels()[t], prod.join(","));
                }
            }
            Ok((out, true))
        }
        Command::Invariants { algebra, field, rule } => {
            let (p, eta) = load(&algebra, &field)?;
            let r = rule_for(&rule.rule, p.algebra.field(), eta.as_ref())?;
            let rec = invariants(&p, &r).map_err(|e| Failure::Math(e.to_string()))?;
            Ok((format!("name={algebra} {}\n", invariant_fields(&rec)), true))
        }
        Command::Quotient { algebra, ideal, output, field } => {
            let (p, eta) = load(&algebra, &field)?;
            let seeds = parse_vectors(&p, eta.as_ref(), &ideal)?;
            let closure = p.algebra.ideal_closure(&seeds).map_err(|e| Failure::Math(e.to_string()))?;
            let (q, _) = p.quotient(&closure).map_err(|e| Failure::Math(e.to_string()))?;
            let mut out = format!("ideal_dim={} quotient_dim={}\n", closure.dim(), q.algebra.dim());
            write_or_return(write_presented(&q), &output, &mut out)?;
            Ok((out, true))
        }
        Command::Ideals { algebra, field, rule } => {
            let (p, eta) = load(&algebra, &field)?;
            let r = rule_for(&rule.rule, p.algebra.field(), eta.as_ref())?;
            let en = enumerate_ideals_diagonalizable(&p, &r).map_err(|e| Failure::Math(e.to_string()))?;
            let mut out = format!("count={} complete={}\n", en.ideals.len(), en.complete);
            for (k, i) in en.ideals.iter().enumerate() {
                let basis: Vec<String> = i.basis().iter().map(|v| p.algebra.format_vector(v)).collect();
                let _ = writeln!(out, "ideal={k} dim={} basis={:?}", i.dim(), basis.join("; "));
            }
            Ok((out, true))
        }
        Command::Hom { source, target, images, field } => {
            let (src, _) = load(&source, &field)?;
            let (dst, eta) = load(&target, &field)?;
            let imgs = match images {
                Some(t) => parse_vectors(&dst, eta.as_ref(), &t)?,
                None => dst.generators.clone(),
            };
            match find_homomorphism(&src, &dst.algebra, &imgs) {
                Ok(h) => Ok((
                    format!(
                        "exists=true rank={} kernel_dim={} surjective={} injective={} bijective={}\n",
                        h.rank(),
                        h.kernel().dim(),
                        h.is_surjective(),
                        h.is_injective(),
                        h.is_bijective()
                    ),
                    true,
                )),
                Err(e @ (AlgebraError::Inconsistent(_) | AlgebraError::NotGenerating { .. })) => {
                    Ok((format!("exists=false reason={:?}\n", e.to_string()), false))
                }
                Err(e) => Err(usage(e)),
            }
        }
        Command::Universal { action: UniversalAction::Expand { fusion, gens, size, target, relations, field } } => {
            universal_expand(&fusion, gens, size, target.as_deref(), &relations, &field)
        }
        Command::Tables { eta, characteristic } => tables(&eta, characteristic),
    }
}

fn invariant_fields(rec: &crate::fusion::InvariantRecord) -> String {
    let edims: Vec<String> = rec.distinct_edims().iter().map(|e| format!("({})", dims(e))).collect();
    format!("enclosure={} adim={} vdim={} edims={}", rec.enclosure_size, rec.adim, rec.vdim, edims.join(";"))
}

fn verify_axes(algebra: &str, field: &FieldArgs, rule: &str) -> Outcome {
    let (p, eta) = load(algebra, field)?;
    let r = rule_for(rule, p.algebra.field(), eta.as_ref())?;
    let mut out = String::new();
    let mut ok = true;
    for (k, g) in p.generators.iter().enumerate() {
        let rep = verify_axis(&p.algebra, g, &r).map_err(|e| Failure::Math(e.to_string()))?;
        ok &= rep.is_axis();
        let _ = writeln!(
            out,
            "generator={k} vector={:?} idempotent={} semisimple={} eigenspace_dims={} violations={} axis={}",
            p.algebra.format_vector(g),
            rep.is_idempotent,
            rep.semisimple,
            dims(&rep.eigenspace_dims),
            rep.fusion_violations.len(),
            rep.is_axis()
        );
        for v in &rep.fusion_violations {
            let _ = writeln!(
                out,
                "violation generator={k} s={} t={} outside={} witness={:?}",
                r.labels()[v.s],
                r.labels()[v.t],
                v.outside.iter().map(|&u| r.labels()[u].clone()).collect::<Vec<_>>().join(","),
                p.algebra.format_vector(&v.witness)
            );
        }
    }
    Ok((out, ok))
}

fn emit(out: &mut String, group: &str, checks: &[Check], ok: &mut bool, required: bool) {
    for c in checks {
        if required {
            *ok &= c.holds;
        }
        let _ = writeln!(out, "group={group} {c}");
    }
}

fn lemmas(algebra: &str, field: &FieldArgs, window: i64) -> Outcome {
    let mut out = String::new();
    let mut ok = true;
    if algebra == "Minf" {
        if window < 2 {
            return Err(usage("window must be at least 2"));
        }
        let rep = verify_proprod2(window);
        emit(&mut out, "proprod2", &rep.checks, &mut ok, true);
        emit(&mut out, "printed", &rep.literal, &mut ok, false);
        let axis = inf_axis_check(0, window as u64);
        emit(&mut out, "minf_axis", &axis.checks, &mut ok, true);
        return Ok((out, ok));
    }
    let (p, eta) = load(algebra, field)?;
    let eta = eta.ok_or_else(|| usage("the lemmas need a value of eta"))?;
    let math = |e: crate::relations::RelationsError| Failure::Math(e.to_string());
    let chain = AxisChain::new(p.clone(), &eta, 3).map_err(math)?;
    emit(&mut out, "chain", &chain.consistency, &mut ok, true);
    let readings = p_reading_checks(&chain, 1).map_err(math)?;
    let (good, printed): (Vec<Check>, Vec<Check>) = readings.into_iter().partition(|c| c.name.starts_with("corrected"));
    emit(&mut out, "pxz", &good, &mut ok, true);
    emit(&mut out, "printed", &printed, &mut ok, false);
    for i in [1, 2] {
        emit(&mut out, "pxz", &p_x_z(&chain, i, 0).map_err(math)?.checks, &mut ok, true);
    }
    emit(&mut out, "prod1", &verify_prod1(&chain).map_err(math)?, &mut ok, true);
    match verify_chain_relations(&chain) {
        Ok(rep) => {
            emit(&mut out, "relations", &rep.checks, &mut ok, true);
            emit(&mut out, "printed", &rep.literal, &mut ok, false);
        }
        Err(crate::relations::RelationsError::PoleAtSpecialization(d)) => {
            let _ = writeln!(out, "group=relations skipped={:?}", format!("{d} vanishes"));
        }
        Err(e) => return Err(math(e)),
    }
    emit(&mut out, "flip", &flip_checks(&chain).map_err(math)?, &mut ok, true);
    let rule = jordan_phi(&[], &eta).map_err(usage)?;
    for (k, g) in p.generators.iter().enumerate() {
        let c = seress_check(&p.algebra, g, &rule).map_err(math)?;
        emit(&mut out, &format!("seress{k}"), &[c], &mut ok, true);
    }
    if p.algebra.labels() == ["qh", "ah_m1", "ah_0", "ah_1", "s_0", "s_1"] {
        let grid = verify_lemquo_grid(&p, &eta).map_err(math)?;
        let _ = writeln!(out, "group=lemquo cells=11,10,01,00 dims={}", dims(&grid.dims()));
        emit(&mut out, "lemquo", &grid.checks, &mut ok, true);
    }
    Ok((out, ok))
}

fn universal_expand(
    fusion: &str,
    gens: usize,
    size: usize,
    target: Option<&str>,
    relations: &str,
    field: &FieldArgs,
) -> Outcome {
    let families: Families = relations.parse().map_err(usage)?;
    let (target, f, eta) = match target {
        Some(t) => {
            let (p, eta) = load(t, field)?;
            let f = p.algebra.field();
            (Some(p), f, eta)
        }
        None => {
            let (f, eta) = field_and_eta(field)?;
            (None, f, Some(eta))
        }
    };
    let rule = rule_for(fusion, f, eta.as_ref())?;
    let trunc = Truncation::new(&rule, gens, size, families, DEFAULT_TERM_GUARD).map_err(usage)?;
    let counts: Vec<usize> = (1..=size).map(|k| trunc.space.ids_of_size(k).len()).collect();
    let mut out = format!("terms={} size_counts={}\n", trunc.space.len(), dims(&counts));
    let fc = trunc.family_counts();
    let _ = writeln!(
        out,
        "relations={} family1={} family2={} family3={} family4={} family5={} family6={}",
        trunc.relations.len(),
        fc[0],
        fc[1],
        fc[2],
        fc[3],
        fc[4],
        fc[5]
    );
    let q = trunc.quotient().map_err(usage)?;
    let red = &q.reduction;
    let _ = writeln!(
        out,
        "quotient_dims={} dimension_bound={} rank={} prime={} eta_sample={} exact_field={}",
        dims(&q.dims),
        q.dimension_bound(),
        q.rank,
        red.prime,
        red.eta.map(|e| e.to_string()).unwrap_or_else(|| "none".into()),
        red.exact
    );
    let mut ok = true;
    if let Some(p) = target {
        match truncated_hom_onto(&trunc, &p) {
            Ok(rep) => {
                let _ = writeln!(out, "hom {rep}");
                ok = rep.surjective();
            }
            Err(UniversalError::TargetViolatesRelations { family, relation, witness }) => {
                let _ = writeln!(
                    out,
                    "hom relations_vanish=false family={family} relation={relation:?} witness={witness:?}"
                );
                ok = false;
            }
            Err(e) => return Err(usage(e)),
        }
    }
    Ok((out, ok))
}

fn tables(eta: &str, characteristic: u64) -> Outcome {
    let args = FieldArgs { eta: eta.to_string(), characteristic };
    let (f, e) = field_and_eta(&args)?;
    let minus_one = !f.generic_eta() && e == Scalar::from_i64(f, -1);
    let (table, names): (u8, &[CatalogName]) =
        if minus_one { (6, &CatalogName::TABLE6) } else { (5, &CatalogName::TABLE5) };
    let rule = jordan_phi(&[], &e).map_err(usage)?;
    let mut out = String::new();
    for &n in names {
        let p = build(n, f, &e).map_err(usage)?;
        let rec = invariants(&p, &rule).map_err(|x| Failure::Math(x.to_string()))?;
        let _ = writeln!(out, "table={table} name={} {}", n.as_str(), invariant_fields(&rec));
    }
    Ok((out, true))
}
