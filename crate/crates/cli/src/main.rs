use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bmw::bmw::AlgElem;
use bmw::coeff::{specialize, RingElem, Specialization};
use bmw::idem::{feasibility, matrix_units, path_unit, qdim_specialized, qdim_wenzl, ytilde, QdimForm};
use bmw::tangle::TangleWord;
use bmw::verify::{run_suite, Suite, VerifyOptions};
use bmw::young::{Partition, UpDownTableau};

const DEFAULT_MAX_N: usize = 5;

#[derive(Parser)]
#[command(name = "bmw", version, about = "Exact computations in BMW, Hecke and Brauer algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Wen,
    Wenzltwo,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Quantum dimension of a partition.
    Qdim {
        #[arg(short, long)]
        partition: Partition,
        #[arg(long, value_enum, default_value = "wen")]
        form: Form,
        /// Specialization such as B:2, C:1, D:2, Brauer:3 or root:8:3.
        #[arg(long)]
        spec: Option<Specialization>,
        #[arg(long)]
        json: bool,
    },
    /// Minimal idempotent of a shape, or the path idempotent of an up-down tableau.
    Idem {
        #[arg(short, long, required_unless_present = "path")]
        partition: Option<Partition>,
        /// Up-down tableau such as 1>2>1.
        #[arg(long, conflicts_with = "partition")]
        path: Option<UpDownTableau>,
        #[arg(long)]
        json: bool,
    },
    /// Matrix units for every strand count up to n.
    Units {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Kauffman polynomial of the trace closure of a word.
    Kauffman {
        #[arg(short)]
        n: usize,
        /// Tokens e{i}, E{i} (inverse crossing) and h{i}, bottom first.
        #[arg(short, long, allow_hyphen_values = true)]
        w: String,
        #[arg(long)]
        json: bool,
    },
    /// Whether the idempotent recursions survive a specialization.
    Feasibility {
        #[arg(short, long)]
        partition: Partition,
        #[arg(long, default_value = "generic")]
        spec: Specialization,
        #[arg(long)]
        json: bool,
    },
    /// Run verification suites.
    Verify {
        /// Suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        /// Vector space dimension for the Brauer suite.
        #[arg(long = "N", default_value_t = 3)]
        n_dim: u32,
    },
}

enum Failure {
    Usage(String),
    Verification(Value),
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn max_n() -> Result<usize, Failure> {
    match std::env::var("BMW_MAX_N") {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("BMW_MAX_N must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn check_strands(n: usize) -> Result<(), Failure> {
    let cap = max_n()?;
    if n > cap {
        return Err(usage(format!("{n} strands exceeds BMW_MAX_N = {cap}")));
    }
    Ok(())
}

fn emit(as_json: bool, value: Value, text: String) {
    if as_json {
        println!("{}", serde_json::to_string_pretty(&value).expect("JSON value serializes"));
    } else {
        println!("{text}");
    }
}

fn qdim_cmd(partition: &Partition, form: Form, spec: Option<Specialization>, as_json: bool) -> Result<(), Failure> {
    let forms: Vec<(&str, QdimForm)> = match form {
        Form::Wen => vec![("wen", QdimForm::Wen)],
        Form::Wenzltwo => vec![("wenzltwo", QdimForm::WenzlTwo)],
        Form::Both => vec![("wen", QdimForm::Wen), ("wenzltwo", QdimForm::WenzlTwo)],
    };
    let mut values: Vec<(&str, RingElem)> = forms.iter().map(|&(k, f)| (k, qdim_wenzl(partition, f))).collect();
    let mut out = json!({"partition": partition.to_string()});
    if let Some(sp) = spec {
        for (_, v) in values.iter_mut() {
            *v = specialize(v, sp).map_err(usage)?;
        }
        out["spec"] = json!(sp.to_string());
        if matches!(sp, Specialization::B(_) | Specialization::C(_) | Specialization::D(_)) {
            let closed = qdim_specialized(partition, sp).map_err(usage)?;
            out["closed_form"] = json!(closed.to_string());
            out["closed_form_agrees"] = json!(values.iter().all(|(_, v)| *v == closed));
        }
    }
    for (k, v) in &values {
        out[*k] = json!(v.to_string());
    }
    let mut text: Vec<String> = values.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    if values.len() == 2 {
        let agree = values[0].1 == values[1].1;
        out["agree"] = json!(agree);
        text.push(format!("agree: {agree}"));
    }
    if let Some(c) = out.get("closed_form") {
        text.push(format!("closed form: {}", c.as_str().unwrap_or_default()));
    }
    let text = if values.len() == 1 && out.get("closed_form").is_none() { values[0].1.to_string() } else { text.join("\n") };
    emit(as_json, out, text);
    Ok(())
}

fn idem_cmd(partition: Option<Partition>, path: Option<UpDownTableau>, as_json: bool) -> Result<(), Failure> {
    let (label, x): (Value, AlgElem) = match (partition, path) {
        (Some(l), _) => {
            check_strands(l.size())?;
            (json!({"partition": l.to_string()}), ytilde(&l).map_err(usage)?)
        }
        (None, Some(p)) => {
            check_strands(p.len())?;
            (json!({"path": p.path_string()}), path_unit(&p).map_err(usage)?.q.clone())
        }
        (None, None) => return Err(usage("either --partition or --path is required")),
    };
    let mut out = label;
    out["element"] = x.to_json();
    out["qtrace"] = json!(x.qtrace().to_string());
    let text = format!("{x}\nqtrace: {}", x.qtrace());
    emit(as_json, out, text);
    Ok(())
}

fn units_cmd(n: usize, as_json: bool) -> Result<(), Failure> {
    check_strands(n)?;
    let db = matrix_units(n).map_err(usage)?;
    let mut lines = Vec::new();
    for level in &db.levels {
        lines.push(format!("n = {}: {} path idempotents", level.n, level.units.len()));
        for (p, u) in &level.units {
            lines.push(format!("  {p}: {} terms, qtrace {}", u.q.len(), u.q.qtrace()));
        }
    }
    emit(as_json, db.to_json(), lines.join("\n"));
    Ok(())
}

fn kauffman_cmd(n: usize, w: &str, as_json: bool) -> Result<(), Failure> {
    check_strands(n)?;
    let word = TangleWord::parse(n, w).map_err(usage)?;
    let value = word.close_trace();
    emit(as_json, json!({"n": n, "word": w, "value": value.to_string()}), value.to_string());
    Ok(())
}

fn feasibility_cmd(partition: &Partition, spec: Specialization, as_json: bool) -> Result<(), Failure> {
    let r = feasibility(partition, spec);
    let text = match r.first_failure() {
        None => format!("{partition} at {spec}: feasible"),
        Some(b) => format!(
            "{partition} at {spec}: infeasible, {:?} condition {}: {}",
            b.target,
            b.index,
            b.witness.as_deref().unwrap_or_default()
        ),
    };
    emit(as_json, r.to_json(), text);
    Ok(())
}

fn verify_cmd(suite: &str, max_size: usize, n_dim: u32) -> Result<(), Failure> {
    check_strands(max_size)?;
    let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse().map_err(usage)?] };
    let opts = VerifyOptions { max_size, n_dim };
    let mut summaries = Vec::new();
    for s in suites {
        let report = run_suite(s, &opts).map_err(usage)?;
        if let Some(c) = report.first_failure() {
            let mut detail = json!({"suite": s.name(), "max_size": max_size, "check": c.name});
            if !c.detail.is_null() {
                detail["detail"] = c.detail.clone();
            }
            return Err(Failure::Verification(detail));
        }
        let mut summary = json!({"suite": s.name(), "max_size": max_size, "passed": true, "count": report.checks.len()});
        // Per-shape values are part of the result for these suites.
        if s == Suite::Dims || s == Suite::Brauer {
            let details: Vec<Value> = report.checks.iter().filter(|c| !c.detail.is_null()).map(|c| c.detail.clone()).collect();
            summary["values"] = json!(details);
        }
        summaries.push(summary);
    }
    println!("{}", serde_json::to_string_pretty(&json!({"passed": true, "suites": summaries})).expect("JSON value serializes"));
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Qdim { partition, form, spec, json } => qdim_cmd(&partition, form, spec, json),
        Command::Idem { partition, path, json } => idem_cmd(partition, path, json),
        Command::Units { n, json } => units_cmd(n, json),
        Command::Kauffman { n, w, json } => kauffman_cmd(n, &w, json),
        Command::Feasibility { partition, spec, json } => feasibility_cmd(&partition, spec, json),
        Command::Verify { suite, max_size, n_dim } => verify_cmd(&suite, max_size, n_dim),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(v)) => {
            println!("{}", serde_json::to_string_pretty(&json!({"passed": false, "counterexample": v})).expect("JSON value serializes"));
            ExitCode::from(1)
        }
    }
}
