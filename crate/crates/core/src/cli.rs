//! Command-line front end shared by the `hyperalpha` binary and its tests.
//!
//! Exit codes: 0 success, 1 internal error, 2 invalid input or arguments,
//! 3 instance over a size guard, 4 `verify` found a violated inequality.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::bounds::{verify, Corruption, VerifyOptions};
use crate::combinatorics::{clique_expansion, diameter, isoperimetric_number, lambda2};
use crate::ensemble::{verify_ensemble, EnsembleSpec, EnsembleSummary, InstanceOutcome};
use crate::error::{Error, ErrorClass, Result};
use crate::generate::{generate, Model};
use crate::hypergraph::{BuildOptions, Hypergraph};
use crate::solver::{analytic_connectivity, SolverConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

/// Environment variable overriding the worker count.
pub const THREADS_ENV: &str = "HYPERALPHA_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "hyperalpha",
    version,
    about = "Analytic connectivity of general hypergraphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Progress and timing on standard error.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute invariants of one hypergraph.
    Compute(ComputeArgs),
    /// Write a generated hypergraph in the edge-list format.
    Generate(GenerateArgs),
    /// Check the bound inequalities on a seeded random ensemble.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    Alpha,
    Iso,
    Diameter,
    Lambda2,
    Bounds,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    UniformRandom,
    NonuniformRandom,
    Complete,
    Hyperpath,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundName {
    DiameterLower,
    DegreeUpper,
    CheegerLower,
    CheegerUpper,
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    #[arg(long, value_enum)]
    pub model: Option<ModelKind>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Edge count for the random models.
    #[arg(long)]
    pub edges: Option<usize>,
    /// Edge sizes for the non-uniform model, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub sizes: Vec<usize>,
    /// Weights matching `--sizes`; uniform when omitted.
    #[arg(long, value_delimiter = ',')]
    pub weights: Vec<f64>,
    #[arg(long, default_value_t = 1)]
    pub overlap: usize,
}

impl ModelArgs {
    fn to_model(&self) -> Result<Model> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| Error::InvalidConfig(format!("--{name} is required for this model")))
        };
        let kind = self
            .model
            .ok_or_else(|| Error::InvalidConfig("--model is required".into()))?;
        Ok(match kind {
            ModelKind::UniformRandom => Model::UniformRandom {
                n: need(self.n, "n")?,
                k: need(self.k, "k")?,
                edges: need(self.edges, "edges")?,
            },
            ModelKind::NonuniformRandom => {
                if self.sizes.is_empty() {
                    return Err(Error::InvalidConfig(
                        "--sizes is required for this model".into(),
                    ));
                }
                let weights = if self.weights.is_empty() {
                    vec![1.0; self.sizes.len()]
                } else if self.weights.len() == self.sizes.len() {
                    self.weights.clone()
                } else {
                    return Err(Error::InvalidConfig("--weights must match --sizes".into()));
                };
                Model::NonuniformRandom {
                    n: need(self.n, "n")?,
                    size_weights: self.sizes.iter().copied().zip(weights).collect(),
                    edges: need(self.edges, "edges")?,
                }
            }
            ModelKind::Complete => Model::CompleteUniform {
                n: need(self.n, "n")?,
                k: need(self.k, "k")?,
            },
            ModelKind::Hyperpath => Model::Hyperpath {
                n: need(self.n, "n")?,
                k: need(self.k, "k")?,
                overlap: self.overlap,
            },
        })
    }
}

#[derive(Debug, Clone, Args)]
pub struct SolverArgs {
    #[arg(long, default_value_t = 16)]
    pub restarts: usize,
    #[arg(long, default_value_t = 10_000)]
    pub max_iterations: usize,
    #[arg(long, default_value_t = 1e-10)]
    pub tolerance: f64,
    #[arg(long, default_value_t = 1.0)]
    pub initial_step: f64,
    #[arg(long, default_value_t = 0.5)]
    pub shrink: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl SolverArgs {
    fn config(&self) -> SolverConfig {
        SolverConfig {
            restarts: self.restarts,
            max_iterations: self.max_iterations,
            objective_tolerance: self.tolerance,
            initial_step: self.initial_step,
            shrink: self.shrink,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub what: What,
    /// Input hypergraph file; mutually exclusive with `--model`.
    #[arg(long = "in", conflicts_with = "model")]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub allow_singletons: bool,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 4)]
    pub n_min: usize,
    #[arg(long, default_value_t = 6)]
    pub n_max: usize,
    #[arg(long, default_value_t = 2)]
    pub size_min: usize,
    #[arg(long, default_value_t = 4)]
    pub size_max: usize,
    #[arg(long, default_value_t = 2)]
    pub edges_min: usize,
    #[arg(long, default_value_t = 8)]
    pub edges_max: usize,
    #[arg(long)]
    pub connected_only: bool,
    /// Largest n for which the grid oracle certifies α.
    #[arg(long, default_value_t = 6)]
    pub oracle_max_n: usize,
    #[arg(long, default_value_t = 20)]
    pub grid_steps: usize,
    #[arg(long, default_value_t = 12)]
    pub grid_rounds: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[command(flatten)]
    pub solver: SolverArgs,
    /// Fault injection: weaken one bound so that verification must fail.
    #[arg(long, value_enum, hide = true)]
    pub corrupt: Option<BoundName>,
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_VALIDATION
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            let sink: &mut (dyn Write + Send) = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let pool = match thread_pool() {
        Ok(pool) => pool,
        Err(e) => return report_error(&e, err),
    };
    let verbose = cli.verbose;
    let result = pool.install(|| match cli.command {
        Command::Compute(args) => cmd_compute(&args, verbose, out, err),
        Command::Generate(args) => cmd_generate(&args, out),
        Command::Verify(args) => cmd_verify(&args, verbose, out, err),
    });
    match result {
        Ok(code) => code,
        Err(e) => report_error(&e, err),
    }
}

fn thread_pool() -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(value) = std::env::var(THREADS_ENV) {
        let threads: usize = value
            .trim()
            .parse()
            .map_err(|_| Error::InvalidConfig(format!("{THREADS_ENV}={value:?} is not a count")))?;
        builder = builder.num_threads(threads);
    }
    builder
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))
}

fn report_error(e: &Error, err: &mut (dyn Write + Send)) -> i32 {
    let _ = writeln!(err, "error: {e}");
    match e.class() {
        ErrorClass::Validation => EXIT_VALIDATION,
        ErrorClass::Guard => EXIT_GUARD,
        ErrorClass::Internal => EXIT_INTERNAL,
    }
}

fn load_input(args: &ComputeArgs) -> Result<Hypergraph> {
    let options = BuildOptions {
        allow_singletons: args.allow_singletons,
    };
    match (&args.input, args.model.model) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                Error::InvalidConfig(format!("cannot read {}: {e}", path.display()))
            })?;
            Hypergraph::parse_with(&text, options)
        }
        (None, Some(_)) => generate(&args.model.to_model()?, args.solver.seed),
        _ => Err(Error::InvalidConfig(
            "give exactly one of --in or --model".into(),
        )),
    }
}

/// Computes the requested quantities as one flat JSON object.
pub fn compute_value(h: &Hypergraph, what: What, solver: &SolverConfig) -> Result<Value> {
    let mut map = Map::new();
    let wants = |w: What| what == w || what == What::All;
    if wants(What::Alpha) {
        let r = analytic_connectivity(h, solver)?;
        map.insert("alpha".into(), json!(r.alpha));
        map.insert("fixed_vertex".into(), json!(r.fixed_vertex + 1));
        map.insert("per_vertex".into(), json!(r.per_vertex));
        map.insert("witness".into(), json!(r.witness.as_slice()));
        map.insert("converged".into(), json!(r.converged));
    }
    if wants(What::Iso) {
        map.insert(
            "isoperimetric".into(),
            serde_json::to_value(isoperimetric_number(h)?)?,
        );
    }
    if wants(What::Diameter) {
        map.insert("diameter".into(), serde_json::to_value(diameter(h))?);
    }
    if wants(What::Lambda2) {
        map.insert(
            "lambda2_clique".into(),
            json!(lambda2(&clique_expansion(h))?),
        );
    }
    if wants(What::Bounds) {
        let options = VerifyOptions {
            solver: solver.clone(),
            ..VerifyOptions::default()
        };
        let report = verify(h, &options)?;
        if let Value::Object(fields) = serde_json::to_value(report)? {
            map.extend(fields);
        }
    }
    Ok(Value::Object(map))
}

fn cmd_compute(
    args: &ComputeArgs,
    verbose: u8,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> Result<i32> {
    let h = load_input(args)?;
    let config = args.solver.config();
    config.validate()?;
    let start = std::time::Instant::now();
    let value = compute_value(&h, args.what, &config)?;
    if verbose > 0 {
        writeln!(err, "computed in {:.3?}", start.elapsed())?;
    }
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&value)?)?,
        Format::Csv => {
            let rows = flatten(&value);
            let header: Vec<&str> = rows.iter().map(|(k, _)| k.as_str()).collect();
            let values: Vec<String> = rows.iter().map(|(_, v)| csv_field(v)).collect();
            writeln!(out, "{}", header.join(","))?;
            writeln!(out, "{}", values.join(","))?;
        }
        Format::Text => {
            for (k, v) in flatten(&value) {
                writeln!(out, "{k}: {v}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_generate(args: &GenerateArgs, out: &mut (dyn Write + Send)) -> Result<i32> {
    let h = generate(&args.model.to_model()?, args.seed)?;
    let text = h.serialize();
    match &args.out {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    args: &VerifyArgs,
    verbose: u8,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> Result<i32> {
    let spec = EnsembleSpec {
        count: args.count,
        n_range: (args.n_min, args.n_max),
        size_range: (args.size_min, args.size_max),
        edge_range: (args.edges_min, args.edges_max),
        connected_only: args.connected_only,
        seed: args.solver.seed,
    };
    let options = VerifyOptions {
        solver: args.solver.config(),
        oracle_max_n: args.oracle_max_n,
        grid_steps: args.grid_steps,
        grid_rounds: args.grid_rounds,
        corruption: args.corrupt.map(|b| match b {
            BoundName::DiameterLower => Corruption::DiameterLower,
            BoundName::DegreeUpper => Corruption::DegreeUpper,
            BoundName::CheegerLower => Corruption::CheegerLower,
            BoundName::CheegerUpper => Corruption::CheegerUpper,
        }),
    };
    let start = std::time::Instant::now();
    let outcomes = verify_ensemble(&spec, &options)?;
    if args.format == Format::Csv {
        writeln!(out, "index,check,status,lhs,rhs,slack")?;
    }
    for outcome in &outcomes {
        match outcome {
            InstanceOutcome::Skipped { index, reason } => {
                writeln!(err, "warning: instance {index} skipped: {reason}")?;
            }
            InstanceOutcome::Verified(rec) => match args.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(rec)?)?,
                Format::Csv => {
                    for c in &rec.report.checks {
                        let status = serde_json::to_value(c.status)?;
                        writeln!(
                            out,
                            "{},{},{},{},{},{}",
                            rec.index,
                            c.name,
                            status.as_str().unwrap_or_default(),
                            csv_field(&json!(c.lhs)),
                            csv_field(&json!(c.rhs)),
                            csv_field(&json!(c.slack)),
                        )?;
                    }
                }
                Format::Text => {
                    let statuses: Vec<String> = rec
                        .report
                        .checks
                        .iter()
                        .map(|c| {
                            format!(
                                "{}={}",
                                c.name,
                                serde_json::to_value(c.status).unwrap_or_default()
                            )
                        })
                        .collect();
                    writeln!(
                        out,
                        "instance {} n={} m={} alpha={} {}",
                        rec.index,
                        rec.report.instance.n,
                        rec.report.instance.m,
                        json!(rec.report.quantities.alpha),
                        statuses.join(" ")
                    )?;
                }
            },
        }
    }
    let summary = EnsembleSummary::from_outcomes(&outcomes);
    match args.format {
        Format::Json => writeln!(out, "{}", json!({ "summary": summary }))?,
        _ => writeln!(
            err,
            "summary: {} instances, {} skipped, {} holds, {} violated, {} not applicable, worst slack {}",
            summary.instances,
            summary.skipped,
            summary.holds,
            summary.violated,
            summary.not_applicable,
            json!(summary.worst_slack)
        )?,
    }
    if verbose > 0 {
        writeln!(err, "verified in {:.3?}", start.elapsed())?;
    }
    Ok(if summary.violated == 0 {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

/// Flattens nested JSON into dotted keys; array elements get their index.
pub fn flatten(value: &Value) -> Vec<(String, Value)> {
    fn walk(prefix: &str, v: &Value, out: &mut Vec<(String, Value)>) {
        let key = |k: &str| {
            if prefix.is_empty() {
                k.to_string()
            } else {
                format!("{prefix}.{k}")
            }
        };
        match v {
            Value::Object(map) => map.iter().for_each(|(k, v)| walk(&key(k), v, out)),
            Value::Array(items) => items
                .iter()
                .enumerate()
                .for_each(|(i, v)| walk(&key(&i.to_string()), v, out)),
            leaf => out.push((prefix.to_string(), leaf.clone())),
        }
    }
    let mut out = Vec::new();
    walk("", value, &mut out);
    out
}

fn csv_field(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) if s.contains([',', '"', '\n']) => {
            format!("\"{}\"", s.replace('"', "\"\""))
        }
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("hyperalpha").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn flatten_paths() {
        let v = json!({"a": 1, "b": {"c": [2, 3]}, "d": null});
        let keys: Vec<String> = flatten(&v).into_iter().map(|(k, _)| k).collect();
        assert_eq!(keys, vec!["a", "b.c.0", "b.c.1", "d"]);
    }

    #[test]
    fn generate_to_stdout() {
        let (code, out, _) =
            run_capture(&["generate", "--model", "hyperpath", "--n", "5", "--k", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out, "5\n1 2 3\n3 4 5\n");
    }

    #[test]
    fn infeasible_generator_exit_code() {
        let (code, _, err) = run_capture(&[
            "generate",
            "--model",
            "uniform-random",
            "--n",
            "3",
            "--k",
            "3",
            "--edges",
            "2",
        ]);
        assert_eq!(code, EXIT_VALIDATION);
        assert!(err.contains("infeasible"));
    }

    #[test]
    fn missing_model_parameter() {
        let (code, _, _) = run_capture(&["generate", "--model", "complete", "--n", "4"]);
        assert_eq!(code, EXIT_VALIDATION);
    }

    #[test]
    fn bad_arguments() {
        let (code, _, _) = run_capture(&["compute", "--what", "nonsense"]);
        assert_eq!(code, EXIT_VALIDATION);
        let (code, _, _) = run_capture(&["compute", "--what", "alpha"]);
        assert_eq!(code, EXIT_VALIDATION);
    }

    #[test]
    fn compute_from_model() {
        let (code, out, _) = run_capture(&[
            "compute",
            "--what",
            "diameter",
            "--model",
            "hyperpath",
            "--n",
            "7",
            "--k",
            "3",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["diameter"], json!(3));
    }
}
