//! `lieconf` command-line front end.
//!
//! Every command builds a JSON value; `--format table` renders that same
//! value, so both formats carry identical numbers.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use lieconf::conformal::report::{exceptional_report, global_report, table2_report};
use lieconf::conformal::{
    ap_check, search_sl_irreducible, search_so_irreducible, solve_levels, table1_scan,
    CandidateLevel,
};
use lieconf::embed::{
    dual_pair_branching, load_catalog, resolve_case, BranchingCase, Catalog, DualPairFamily,
};
use lieconf::liealg::{algebra, AlgebraType, SimpleAlgebra, Weight};
use lieconf::number::{fmt_q, parse_rational};
use lieconf::parse::{parse_factor_spec, parse_weight};
use lieconf::qseries::{character, verify_identity, Identity, Model};
use lieconf::reps::{
    casimir, dynkin_index, freudenthal_weights, tensor_decompose, weyl_dim, Convention,
    Decomposition,
};
use lieconf::{Error, Result};

#[derive(Parser)]
#[command(
    name = "lieconf",
    version,
    about = "Exact Lie theory for conformal embeddings"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// JSON catalog of branching cases; entries override the built-in ones.
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Structure constants of a simple Lie algebra.
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// Irreducible modules.
    Rep {
        #[command(subcommand)]
        cmd: RepCmd,
    },
    /// Orthocomplement branchings.
    Branch {
        #[command(subcommand)]
        cmd: BranchCmd,
    },
    /// Candidate levels and the conformality criterion.
    Conformal {
        #[command(subcommand)]
        cmd: ConformalCmd,
    },
    /// Classification drivers.
    Classify {
        #[command(subcommand)]
        cmd: ClassifyCmd,
    },
    /// Characters and q-series identities.
    Qseries {
        #[command(subcommand)]
        cmd: QseriesCmd,
    },
}

#[derive(Subcommand)]
enum AlgebraCmd {
    Info { ty: String },
}

#[derive(Subcommand)]
enum RepCmd {
    /// Weyl dimension of L(WEIGHT).
    Dim { ty: String, weight: String },
    /// Casimir eigenvalue (lambda, lambda + 2 rho) in the normalized form.
    Casimir { ty: String, weight: String },
    /// Dynkin index of L(WEIGHT).
    Index {
        ty: String,
        weight: String,
        #[arg(long, default_value = "normalized")]
        convention: String,
    },
    /// All weights of L(WEIGHT) with multiplicities.
    Weights { ty: String, weight: String },
    /// Decomposition of L(W1) x L(W2).
    Tensor { ty: String, w1: String, w2: String },
}

#[derive(Subcommand)]
enum BranchCmd {
    /// Orthocomplement of a classical dual pair (slsl, spsp, soso, spso, BB, CC, sosum).
    DualPair { family: String, n: usize, m: usize },
}

#[derive(Subcommand)]
enum ConformalCmd {
    /// Non-zero levels equating the central charges.
    Solve {
        #[arg(long, conflicts_with_all = ["ambient", "factors"])]
        case: Option<String>,
        #[arg(long, requires = "factors")]
        ambient: Option<String>,
        #[arg(long, requires = "ambient")]
        factors: Option<String>,
    },
    /// Evaluates the criterion at one level.
    Check {
        #[arg(long)]
        case: String,
        #[arg(long, allow_hyphen_values = true)]
        level: String,
    },
}

#[derive(Subcommand)]
enum ClassifyCmd {
    /// The five dual-pair rows for 2 <= n, m <= 6.
    Table2,
    /// Simple subalgebras of so(V) with V irreducible.
    SoIrreducible,
    /// Simple subalgebras of sl(V) with V irreducible.
    SlIrreducible {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Root-lattice fundamental weights of Dynkin index below one.
    Table1 {
        ty: String,
        #[arg(long, default_value_t = 3)]
        coord_bound: i64,
    },
    /// Levels for the non-equal-rank maximal subalgebras of the exceptional algebras.
    Exceptional,
    /// Every built-in case at its candidate level.
    Global,
}

#[derive(Subcommand)]
enum QseriesCmd {
    /// Expansion of a character (sl2_m32, sl2_m4, weyl_m3, delta).
    Char {
        model: String,
        l: i64,
        #[arg(long, default_value_t = 20)]
        order: i64,
    },
    /// Checks an identity (delta_eta, eq92, kw, thm92) coefficientwise.
    Verify {
        ident: String,
        #[arg(long, default_value_t = 50)]
        order: i64,
    },
}

/// A command's result: the JSON value, an optional hand-written table
/// rendering, and whether the verification it ran succeeded.
struct Output {
    json: Value,
    text: Option<String>,
    ok: bool,
}

impl Output {
    fn new(json: Value) -> Self {
        Output {
            json,
            text: None,
            ok: true,
        }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serialisable")
}

fn algebra_arg(s: &str) -> Result<(AlgebraType, std::sync::Arc<SimpleAlgebra>)> {
    let ty: AlgebraType = s.parse()?;
    Ok((ty, algebra(ty)))
}

fn coords(w: &Weight) -> Value {
    json!(w.to_integral().unwrap_or_default())
}

fn weight_args(ty: &str, weight: &str) -> Result<(std::sync::Arc<SimpleAlgebra>, Weight)> {
    let (t, alg) = algebra_arg(ty)?;
    let w = parse_weight(t, weight)?;
    if !w.is_dominant_integral() {
        return Err(Error::NotDominant(format!("{t}[{weight}]")));
    }
    Ok((alg, w))
}

fn decomposition_json(d: &Decomposition) -> Value {
    let rows: Vec<Value> = d
        .components()
        .into_iter()
        .map(|(weights, mult)| {
            let key: Vec<i64> = weights.concat();
            let labels: Vec<String> = weights
                .iter()
                .map(|w| lieconf::liealg::omega_string(w))
                .collect();
            json!({
                "highest": weights,
                "module": format!("L({})", labels.join(" ; ")),
                "dim": d.component_dim(&key).to_string(),
                "mult": mult,
            })
        })
        .collect();
    Value::Array(rows)
}

fn case_json(case: &BranchingCase) -> Value {
    let indices: Vec<String> = case.sub.factors.iter().map(|f| fmt_q(&f.index)).collect();
    json!({
        "label": case.label,
        "ambient": case.ambient.to_string(),
        "subalgebra": case.sub.notation(),
        "indices": indices,
        "level": case.level.as_ref().map(fmt_q),
        "p": decomposition_json(&case.p),
    })
}

fn levels_json(levels: &[CandidateLevel]) -> Value {
    Value::Array(
        levels
            .iter()
            .map(|c| {
                json!({
                    "level": c.value.to_string(),
                    "critical": c.is_critical(),
                    "critical_factors": c.critical_factors,
                    "ambient_critical": c.ambient_critical,
                })
            })
            .collect(),
    )
}

fn load(cli: &Cli) -> Result<Catalog> {
    let mut catalog = Catalog::builtin();
    if let Some(path) = &cli.catalog {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
        catalog.extend(load_catalog(&text)?);
    }
    Ok(catalog)
}

fn all_ok(rows: &Value) -> bool {
    rows.as_array()
        .map(|a| {
            a.iter()
                .all(|r| r.get("status").and_then(Value::as_str) != Some("fail"))
        })
        .unwrap_or(true)
}

fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Algebra {
            cmd: AlgebraCmd::Info { ty },
        } => {
            let (t, alg) = algebra_arg(ty)?;
            Ok(Output::new(json!({
                "type": t.to_string(),
                "rank": alg.rank(),
                "dim": alg.dim(),
                "dual_coxeter": alg.dual_coxeter(),
                "positive_roots": alg.roots().len(),
                "cartan": alg.cartan(),
                "highest_root": alg.theta_int(),
                "highest_short_root": alg.theta_short_int(),
                "rho": alg.rho_int(),
                "note": alg.isomorphism_note(),
            })))
        }
        Command::Rep { cmd } => rep(cmd),
        Command::Branch {
            cmd: BranchCmd::DualPair { family, n, m },
        } => {
            let family: DualPairFamily = family.parse()?;
            Ok(Output::new(case_json(&dual_pair_branching(
                family, *n, *m,
            )?)))
        }
        Command::Conformal { cmd } => conformal(cli, cmd),
        Command::Classify { cmd } => classify(cli, cmd),
        Command::Qseries { cmd } => qseries(cmd),
    }
}

fn rep(cmd: &RepCmd) -> Result<Output> {
    match cmd {
        RepCmd::Dim { ty, weight } => {
            let (alg, w) = weight_args(ty, weight)?;
            Ok(Output::new(json!({
                "type": ty, "weight": coords(&w), "dim": weyl_dim(&alg, &w)?.to_string(),
            })))
        }
        RepCmd::Casimir { ty, weight } => {
            let (alg, w) = weight_args(ty, weight)?;
            Ok(Output::new(json!({
                "type": ty, "weight": coords(&w), "casimir": fmt_q(&casimir(&alg, &w)?),
            })))
        }
        RepCmd::Index {
            ty,
            weight,
            convention,
        } => {
            let (alg, w) = weight_args(ty, weight)?;
            let conv: Convention = convention.parse()?;
            Ok(Output::new(json!({
                "type": ty,
                "weight": coords(&w),
                "convention": convention.to_ascii_lowercase(),
                "index": fmt_q(&dynkin_index(&alg, &w, conv)?),
            })))
        }
        RepCmd::Weights { ty, weight } => {
            let (alg, w) = weight_args(ty, weight)?;
            let ws = freudenthal_weights(&alg, &w)?;
            let mut rows: Vec<(&Vec<i64>, u64)> = ws.iter().collect();
            rows.sort();
            Ok(Output::new(Value::Array(
                rows.into_iter()
                    .map(|(w, m)| json!({ "weight": w, "mult": m }))
                    .collect(),
            )))
        }
        RepCmd::Tensor { ty, w1, w2 } => {
            let (alg, a) = weight_args(ty, w1)?;
            let b = parse_weight(alg.ty(), w2)?;
            Ok(Output::new(decomposition_json(&tensor_decompose(
                &alg, &a, &b,
            )?)))
        }
    }
}

fn conformal(cli: &Cli, cmd: &ConformalCmd) -> Result<Output> {
    match cmd {
        ConformalCmd::Solve {
            case,
            ambient,
            factors,
        } => {
            let (amb, sub) = match (case, ambient, factors) {
                (Some(label), _, _) => {
                    let c = resolve_case(label, &load(cli)?)?;
                    (c.ambient, c.sub)
                }
                (None, Some(a), Some(f)) => (a.parse()?, parse_factor_spec(f)?),
                _ => {
                    return Err(Error::Invalid(
                        "give --case LABEL or --ambient TYPE --factors SPEC".into(),
                    ))
                }
            };
            let levels = solve_levels(&algebra(amb), &sub)?;
            Ok(Output::new(json!({
                "ambient": amb.to_string(),
                "subalgebra": sub.notation(),
                "levels": levels_json(&levels),
            })))
        }
        ConformalCmd::Check { case, level } => {
            let c = resolve_case(case, &load(cli)?)?;
            let k = parse_rational(level)?;
            let report = ap_check(&c, &k);
            let mut json = to_value(&report);
            json.as_object_mut()
                .expect("object")
                .insert("label".into(), json!(c.label));
            let verdict = if report.all_balanced {
                "balanced"
            } else if report.critical_factors.is_empty() {
                "not balanced"
            } else {
                "critical"
            };
            let mut text = format!("{} at k = {}: {verdict}\n", c.label, fmt_q(&k));
            text.push_str(&render(&json["per_component"]));
            Ok(Output {
                ok: report.all_balanced,
                text: Some(text),
                json,
            })
        }
    }
}

fn classify(cli: &Cli, cmd: &ClassifyCmd) -> Result<Output> {
    let json = match cmd {
        ClassifyCmd::Table2 => to_value(&table2_report()?),
        ClassifyCmd::SoIrreducible => to_value(&search_so_irreducible()),
        ClassifyCmd::SlIrreducible { max_rank } => {
            if *max_rank > 12 {
                return Err(Error::Invalid(format!("max_rank {max_rank} exceeds 12")));
            }
            to_value(&search_sl_irreducible(*max_rank))
        }
        ClassifyCmd::Table1 { ty, coord_bound } => {
            let (t, alg) = algebra_arg(ty)?;
            if !(0..=6).contains(coord_bound) {
                return Err(Error::Invalid(format!(
                    "coord_bound {coord_bound} outside 0..=6"
                )));
            }
            let found: Vec<String> = table1_scan(&alg, *coord_bound)
                .iter()
                .map(|w| w.omega_string())
                .collect();
            json!({ "type": t.to_string(), "coord_bound": coord_bound, "weights": found })
        }
        ClassifyCmd::Exceptional => to_value(&exceptional_report()?),
        ClassifyCmd::Global => to_value(&global_report(&load(cli)?)?),
    };
    Ok(Output {
        ok: all_ok(&json),
        text: None,
        json,
    })
}

fn qseries(cmd: &QseriesCmd) -> Result<Output> {
    let check_order = |order: i64| {
        if (1..=400).contains(&order) {
            Ok(())
        } else {
            Err(Error::Invalid(format!("order {order} outside 1..=400")))
        }
    };
    match cmd {
        QseriesCmd::Char { model, l, order } => {
            check_order(*order)?;
            let model: Model = model.parse()?;
            let s = character(model, *l, *order)?;
            let terms: Vec<Value> = s
                .terms()
                .map(|(e, c)| json!({ "exponent": fmt_q(&e), "coeff": fmt_q(c) }))
                .collect();
            let json = json!({
                "model": model.to_string(),
                "l": l,
                "order": order,
                "series": s.to_string(),
                "terms": terms,
            });
            Ok(Output {
                text: Some(format!("{}\n", s)),
                ok: true,
                json,
            })
        }
        QseriesCmd::Verify { ident, order } => {
            check_order(*order)?;
            let which: Identity = ident.parse()?;
            let v = verify_identity(which, *order)?;
            let text = match &v.mismatch {
                None => format!("{which}: verified to q^{order}\n"),
                Some(e) => format!("{which}: fails at q^{}\n", fmt_q(e)),
            };
            Ok(Output {
                ok: v.holds,
                text: Some(text),
                json: to_value(&v),
            })
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            items.iter().map(cell).collect::<Vec<_>>().join(", ")
        }
        other => other.to_string(),
    }
}

fn table(rows: &[Map<String, Value>]) -> String {
    let headers: Vec<&String> = rows[0].keys().collect();
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            headers
                .iter()
                .map(|h| r.get(*h).map(cell).unwrap_or_default())
                .collect()
        })
        .collect();
    let widths: Vec<usize> = headers
        .iter()
        .enumerate()
        .map(|(i, h)| {
            body.iter()
                .map(|r| r[i].chars().count())
                .chain([h.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(headers.iter().map(|h| h.as_str()).collect());
    out.push_str(&line(
        widths
            .iter()
            .map(|w| "-".repeat(*w))
            .collect::<Vec<_>>()
            .iter()
            .map(|s| s.as_str())
            .collect(),
    ));
    for r in &body {
        out.push_str(&line(r.iter().map(|s| s.as_str()).collect()));
    }
    out
}

fn object_rows(v: &Value) -> Option<Vec<Map<String, Value>>> {
    let items = v.as_array()?;
    if items.is_empty() {
        return None;
    }
    items.iter().map(|x| x.as_object().cloned()).collect()
}

/// Arrays of objects become tables; objects list their scalar fields and then
/// their nested tables.
fn render(v: &Value) -> String {
    if let Some(rows) = object_rows(v) {
        return table(&rows);
    }
    match v {
        Value::Object(map) => {
            let mut head = String::new();
            let mut tail = String::new();
            for (k, x) in map {
                match object_rows(x) {
                    Some(rows) => tail.push_str(&format!("\n{k}:\n{}", table(&rows))),
                    None => head.push_str(&format!("{k}: {}\n", cell(x))),
                }
            }
            head + &tail
        }
        Value::Array(a) if a.is_empty() => "(none)\n".into(),
        other => format!("{}\n", cell(other)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = match cli.format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&out.json).expect("serialisable")
        ),
        Format::Table => out.text.clone().unwrap_or_else(|| render(&out.json)),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
