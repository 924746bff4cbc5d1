//! `lsa`: command-line access to leibniz-core. Every command prints one JSON
//! report `{command, inputs, results, failures}` on stdout.
//!
//! Exit codes: 0 when every check passes, 1 when checks ran with failures,
//! 2 on usage or parse errors.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use leibniz_core::catalog::{self, Params};
use leibniz_core::charseq::{DEFAULT_SAMPLES, DEFAULT_SEED};
use leibniz_core::format::{instantiate, parse, serialize, Bindings};
use leibniz_core::rational::{format_rational, parse_rational, Rational};
use leibniz_core::{
    adapted_basis_zf, adapted_relation_violations, apply_basis_change, char_sequence, classify_shape,
    closure_obstruction, degeneration_limit, direct_sum, distinguish, invariant_profile, leibniz_defects, nilindex,
    operator_identity_defects, Degeneration, ScalingFamily, SuperAlgebra,
};

use report::{matrix_columns, Report, UsageError};

#[derive(Parser)]
#[command(name = "lsa", version, about = "Exact computations with Leibniz superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Bind {
    /// Parameter binding for `param` declarations, `name=value`.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Graded Leibniz identity and right-multiplication identity defects.
    Check {
        file: PathBuf,
        #[command(flatten)]
        bind: Bind,
    },
    /// Full invariant profile.
    Profile {
        file: PathBuf,
        #[command(flatten)]
        bind: Bind,
    },
    Nilindex {
        file: PathBuf,
        #[command(flatten)]
        bind: Bind,
    },
    /// Characteristic sequence over sampled even vectors.
    Charseq {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        bind: Bind,
    },
    Shape {
        file: PathBuf,
        #[command(flatten)]
        bind: Bind,
    },
    /// Adapted basis of a zero-filiform law, with the rewritten law.
    AdaptedBasis {
        file: PathBuf,
        #[command(flatten)]
        bind: Bind,
    },
    /// First invariant that differs between two laws.
    Distinguish {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        bind: Bind,
    },
    /// Closed conditions keeping MU out of the orbit closure of LAMBDA.
    Closure {
        lambda: PathBuf,
        mu: PathBuf,
        #[command(flatten)]
        bind: Bind,
    },
    /// Limit of the diagonal scaling with the given exponents (even first).
    Degenerate {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        exponents: Vec<String>,
        #[command(flatten)]
        bind: Bind,
    },
    /// Direct sum.
    Sum {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        bind: Bind,
    },
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
    Build {
        name: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        bind: Bind,
    },
    /// Runs the verification harness on one entry, one group, or everything.
    Verify {
        name: Option<String>,
        /// Comma-separated parameter samples.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        samples: Vec<String>,
    },
}

fn rational(text: &str) -> Result<Rational, UsageError> {
    parse_rational(text.trim()).ok_or_else(|| UsageError(format!("not a rational number: {text}")))
}

fn bindings(bind: &Bind) -> Result<Bindings, UsageError> {
    bind.params
        .iter()
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| UsageError(format!("expected NAME=VALUE, got {kv}")))?;
            Ok((k.trim().to_string(), rational(v)?))
        })
        .collect()
}

/// Reads and instantiates a definition, binding only the parameters it declares.
fn load(path: &Path, all: &Bindings) -> Result<SuperAlgebra, UsageError> {
    let text = std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    let def = parse(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    let own: Bindings = all
        .iter()
        .filter(|(k, _)| def.params.contains(k))
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    instantiate(&def, &own).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn show_params(b: &Bindings) -> Value {
    b.iter().map(|(k, v)| (k.clone(), json!(format_rational(v)))).collect::<serde_json::Map<_, _>>().into()
}

fn file_inputs(files: &[&PathBuf], b: &Bindings) -> Value {
    json!({
        "files": files.iter().map(|f| f.display().to_string()).collect::<Vec<_>>(),
        "params": show_params(b),
    })
}

fn run(cmd: Command) -> Result<Report, UsageError> {
    Ok(match cmd {
        Command::Check { file, bind } => {
            let b = bindings(&bind)?;
            let a = load(&file, &b)?;
            let mut r = Report::new("check", file_inputs(&[&file], &b));
            let ld = leibniz_defects(&a);
            let od = operator_identity_defects(&a);
            for d in &ld {
                let (x, y, z) = d.triple;
                r.fail(format!(
                    "Leibniz identity fails on ({}, {}, {})",
                    a.label(x),
                    a.label(y),
                    a.label(z)
                ));
            }
            for v in &od {
                r.fail(format!("R_[{},{}] identity fails", a.label(v.pair.0), a.label(v.pair.1)));
            }
            r.result(json!({
                "leibnizDefects": ld.len(),
                "operatorDefects": od.len(),
                "isLeibniz": ld.is_empty(),
            }))
        }
        Command::Profile { file, bind } => {
            let b = bindings(&bind)?;
            let a = load(&file, &b)?;
            Report::new("profile", file_inputs(&[&file], &b)).result(report::to_value(&invariant_profile(&a)))
        }
        Command::Nilindex { file, bind } => {
            let b = bindings(&bind)?;
            let a = load(&file, &b)?;
            let v = nilindex(&a).value();
            Report::new("nilindex", file_inputs(&[&file], &b)).result(json!({
                "nilpotent": v.is_some(),
                "nilindex": v,
            }))
        }
        Command::Charseq {
            file,
            samples,
            seed,
            bind,
        } => {
            let b = bindings(&bind)?;
            let a = load(&file, &b)?;
            let mut inputs = file_inputs(&[&file], &b);
            inputs["samples"] = json!(samples);
            inputs["seed"] = json!(seed);
            let mut r = Report::new("charseq", inputs);
            match char_sequence(&a, samples, seed) {
                Ok(c) => r.result(json!({ "charSeq": c.to_string(), "even": c.even, "odd": c.odd })),
                Err(e) => {
                    r.fail(e.to_string());
                    r
                }
            }
        }
        Command::Shape { file, bind } => {
            let b = bindings(&bind)?;
            let a = load(&file, &b)?;
            let mut r = Report::new("shape", file_inputs(&[&file], &b));
            match classify_shape(&a) {
                Ok(s) => r.result(json!({ "shape": report::to_value(&s) })),
                Err(e) => {
                    r.fail(e.to_string());
                    r
                }
            }
        }
        Command::AdaptedBasis { file, bind } => {
            let b = bindings(&bind)?;
            let a = load(&file, &b)?;
            let mut r = Report::new("adapted-basis", file_inputs(&[&file], &b));
            match adapted_basis_zf(&a) {
                Ok(g) => {
                    let law = apply_basis_change(&a, &g).expect("map built for this law");
                    for v in adapted_relation_violations(&law) {
                        r.fail(format!("adapted relation {v} does not hold"));
                    }
                    r.result(json!({
                        "law": serialize(&law),
                        "map": {
                            "even": matrix_columns(g.even_block()),
                            "odd": matrix_columns(g.odd_block()),
                        },
                    }))
                }
                Err(e) => {
                    r.fail(e.to_string());
                    r
                }
            }
        }
        Command::Distinguish { a, b, bind } => {
            let bs = bindings(&bind)?;
            let (la, lb) = (load(&a, &bs)?, load(&b, &bs)?);
            let d = distinguish(&la, &lb).map_err(|e| UsageError(e.to_string()))?;
            Report::new("distinguish", file_inputs(&[&a, &b], &bs)).result(report::to_value(&d))
        }
        Command::Closure { lambda, mu, bind } => {
            let bs = bindings(&bind)?;
            let (l, m) = (load(&lambda, &bs)?, load(&mu, &bs)?);
            let obs = closure_obstruction(&l, &m).map_err(|e| UsageError(e.to_string()))?;
            Report::new("closure", file_inputs(&[&lambda, &mu], &bs)).result(json!({
                "obstructed": !obs.is_empty(),
                "conditions": report::to_value(&obs),
            }))
        }
        Command::Degenerate { file, exponents, bind } => {
            let b = bindings(&bind)?;
            let a = load(&file, &b)?;
            let (n, m) = a.dims();
            let e: Vec<Rational> = exponents.iter().map(|t| rational(t)).collect::<Result<_, _>>()?;
            if e.len() != n + m {
                return Err(UsageError(format!("expected {} exponents, got {}", n + m, e.len())));
            }
            let mut inputs = file_inputs(&[&file], &b);
            inputs["exponents"] = json!(e.iter().map(format_rational).collect::<Vec<_>>());
            let mut r = Report::new("degenerate", inputs);
            let s = ScalingFamily::new(e[..n].to_vec(), e[n..].to_vec());
            match degeneration_limit(&a, &s).map_err(|e| UsageError(e.to_string()))? {
                Degeneration::Limit(lim) => r.result(json!({ "limit": serialize(&lim) })),
                Degeneration::Diverges(t) => {
                    r.fail(format!(
                        "diverges: [{},{}] -> {} has exponent {}",
                        t.left, t.right, t.target, t.exponent
                    ));
                    r.result(json!({ "diverges": report::to_value(&t) }))
                }
            }
        }
        Command::Sum { a, b, bind } => {
            let bs = bindings(&bind)?;
            let s = direct_sum(&load(&a, &bs)?, &load(&b, &bs)?);
            Report::new("sum", file_inputs(&[&a, &b], &bs)).result(json!({ "law": serialize(&s) }))
        }
        Command::Catalog(c) => run_catalog(c)?,
    })
}

fn run_catalog(c: CatalogCommand) -> Result<Report, UsageError> {
    Ok(match c {
        CatalogCommand::List => {
            let list: Vec<Value> = catalog::entries()
                .iter()
                .map(|e| {
                    let (n, m) = e.dim_samples()[0];
                    json!({
                        "name": e.name,
                        "group": e.group,
                        "dims": e.constraint(),
                        "params": report::to_value(&e.params(n, m)),
                    })
                })
                .collect();
            Report::new("catalog list", json!({})).result(json!({ "entries": list }))
        }
        CatalogCommand::Build { name, n, m, bind } => {
            let p: Params = bindings(&bind)?;
            let a = catalog::build(&name, n, m, &p).map_err(|e| UsageError(e.to_string()))?;
            Report::new(
                "catalog build",
                json!({ "name": name, "n": n, "m": m, "params": show_params(&p) }),
            )
            .result(json!({ "law": serialize(&a) }))
        }
        CatalogCommand::Verify { name, samples } => {
            let s: Vec<Rational> = if samples.is_empty() {
                catalog::default_param_samples()
            } else {
                samples.iter().map(|t| rational(t)).collect::<Result<_, _>>()?
            };
            let rep = catalog::verify(name.as_deref(), &s);
            let mut r = Report::new(
                "catalog verify",
                json!({ "scope": name, "samples": s.iter().map(format_rational).collect::<Vec<_>>() }),
            );
            for f in rep.failures() {
                r.fail(format!("{}: {} ({})", f.subject, f.check, f.detail));
            }
            let passed = rep.assertions.iter().filter(|a| a.passed).count();
            r.result(json!({
                "assertions": rep.assertions.len(),
                "passed": passed,
                "notes": report::to_value(&rep.notes),
            }))
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(r) => r.emit(),
        Err(e) => {
            eprintln!("lsa: {}", e.0);
            ExitCode::from(2)
        }
    }
}
