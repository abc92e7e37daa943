//! Subcommand implementations. Every command resolves its parameters up
//! front, does the work through `rmi-core`, and emits one machine-parseable
//! document to stdout or `--out`.

use clap::{Args, ValueEnum};
use rmi_core::moments;
use rmi_core::oracle::DEFAULT_ENUMERATION_CAP;
use rmi_core::verify::{check_ids, run_all, VerifyConfig, DEFAULT_VERIFY_SEED};
use rmi_core::{
    cover_ideal, edge_ideal, estimate, find_hochster, ideal_height, krull_dimension,
    reg_upper_bound, sample_er, sweep, v_upper_bound, with_worker_count, CoverNormality, Error,
    EventSpec, Graph, HochsterWitness, MonomialIdeal, PatternGraph, ProbPolynomial, Result,
    SampleSpec, Schedule,
};
use serde::Serialize;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Clone, Copy, Eq, PartialEq, ValueEnum)]
pub enum DataFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Eq, PartialEq, ValueEnum)]
pub enum GraphFormat {
    Text,
    Json,
}

/// Resolves a relative `--out` path against `RMI_OUTPUT_DIR` when that is
/// set, so batch runs can point every command at one output directory.
fn resolve_output_path(path: &Path) -> PathBuf {
    if path.is_absolute() {
        return path.to_path_buf();
    }
    match std::env::var_os("RMI_OUTPUT_DIR") {
        Some(dir) => Path::new(&dir).join(path),
        None => path.to_path_buf(),
    }
}

/// Writes `content` to `--out` (creating parent directories) or stdout.
fn emit(out: Option<&Path>, content: &str) -> Result<()> {
    match out {
        None => {
            std::io::stdout().write_all(content.as_bytes())?;
            Ok(())
        }
        Some(path) => {
            let path = resolve_output_path(path);
            if let Some(parent) = path.parent() {
                if !parent.as_os_str().is_empty() {
                    std::fs::create_dir_all(parent)?;
                }
            }
            std::fs::write(path, content)?;
            Ok(())
        }
    }
}

fn json_line<T: Serialize>(value: &T) -> Result<String> {
    let body = serde_json::to_string(value)
        .map_err(|e| Error::parameter(format!("serialization failed: {e}")))?;
    Ok(format!("{body}\n"))
}

// ---------- sample ----------

#[derive(Args)]
pub struct SampleArgs {
    /// Number of vertices.
    #[arg(long)]
    pub n: usize,
    /// Edge probability in [0, 1].
    #[arg(long)]
    pub p: f64,
    /// Base seed; trial indices 0..count derive independent streams.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// How many graphs to sample.
    #[arg(long, default_value_t = 1)]
    pub count: u64,
    /// Also emit the edge ideal and cover ideal of each sample (JSON only).
    #[arg(long)]
    pub ideals: bool,
    /// Output format.
    #[arg(long, value_enum, default_value_t = GraphFormat::Text)]
    pub format: GraphFormat,
    /// Output file (default stdout); relative paths honor RMI_OUTPUT_DIR.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Serialize)]
struct SampleRecord {
    graph: Graph,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge_ideal: Option<MonomialIdeal>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cover_ideal: Option<MonomialIdeal>,
}

pub fn run_sample(a: &SampleArgs) -> Result<ExitCode> {
    if a.ideals && a.format == GraphFormat::Text {
        return Err(Error::parameter(
            "--ideals emits JSON documents; use --format json".to_string(),
        ));
    }
    if a.count == 0 {
        return Err(Error::parameter("--count must be at least 1".to_string()));
    }
    let mut graphs = Vec::with_capacity(a.count as usize);
    for trial in 0..a.count {
        graphs.push(sample_er(&SampleSpec::new(a.n, a.p, a.seed, trial))?);
    }
    let content = match a.format {
        GraphFormat::Text => graphs.iter().map(Graph::to_text).collect::<String>(),
        GraphFormat::Json => {
            let records: Vec<SampleRecord> = graphs
                .into_iter()
                .map(|g| -> Result<SampleRecord> {
                    let (edge, cover) = if a.ideals {
                        (Some(edge_ideal(&g)), Some(cover_ideal(&g)?))
                    } else {
                        (None, None)
                    };
                    Ok(SampleRecord {
                        graph: g,
                        edge_ideal: edge,
                        cover_ideal: cover,
                    })
                })
                .collect::<Result<_>>()?;
            if records.len() == 1 {
                json_line(&records[0])?
            } else {
                json_line(&records)?
            }
        }
    };
    emit(a.out.as_deref(), &content)?;
    Ok(ExitCode::SUCCESS)
}

// ---------- analyze ----------

#[derive(Args)]
pub struct AnalyzeArgs {
    /// Graph file in the text or JSON format; `-` reads stdin.
    pub input: String,
    /// Output file (default stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Serialize)]
struct AnalyzeReport {
    n: usize,
    edge_count: usize,
    dim: usize,
    height: usize,
    reg_upper_bound: usize,
    v_upper_bound: usize,
    edge_ideal_normal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    hochster_witness: Option<HochsterWitness>,
    cover_normality: CoverNormality,
    edge_ideal: MonomialIdeal,
    cover_ideal: MonomialIdeal,
}

pub fn run_analyze(a: &AnalyzeArgs) -> Result<ExitCode> {
    let raw = if a.input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(&a.input)?
    };
    let g = if raw.trim_start().starts_with('{') {
        serde_json::from_str::<Graph>(&raw)
            .map_err(|e| Error::parse(format!("JSON graph in {}: {e}", a.input)))?
    } else {
        Graph::from_text(&raw)?
    };
    let witness = find_hochster(&g);
    let report = AnalyzeReport {
        n: g.n(),
        edge_count: g.edge_count(),
        dim: krull_dimension(&g),
        height: ideal_height(&g),
        reg_upper_bound: reg_upper_bound(&g),
        v_upper_bound: v_upper_bound(&g),
        edge_ideal_normal: witness.is_none(),
        hochster_witness: witness,
        cover_normality: rmi_core::cover_ideal_normality(&g),
        edge_ideal: edge_ideal(&g),
        cover_ideal: cover_ideal(&g)?,
    };
    emit(a.out.as_deref(), &json_line(&report)?)?;
    Ok(ExitCode::SUCCESS)
}

// ---------- mc ----------

#[derive(Args)]
pub struct McArgs {
    /// Number of vertices.
    #[arg(long)]
    pub n: usize,
    /// Edge probability in [0, 1].
    #[arg(long)]
    pub p: f64,
    /// Event name, e.g. `has_cycle` or `dim_ge:3`.
    #[arg(long)]
    pub event: String,
    /// Number of independent samples.
    #[arg(long, default_value_t = 1_000_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Wilson interval confidence level, strictly between 0 and 1.
    #[arg(long, default_value_t = 0.95)]
    pub confidence: f64,
    /// Worker threads; 0 uses the default pool. Results never depend on it.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = DataFormat::Json)]
    pub format: DataFormat,
    /// Output file (default stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Serialize)]
struct McReport {
    n: usize,
    p: f64,
    event: EventSpec,
    seed: u64,
    estimate: rmi_core::Estimate,
}

pub fn run_mc(a: &McArgs) -> Result<ExitCode> {
    let event: EventSpec = a.event.parse()?;
    let est = with_worker_count(a.jobs, || {
        estimate(a.n, a.p, &event, a.trials, a.seed, a.confidence)
    })?;
    let content = match a.format {
        DataFormat::Json => json_line(&McReport {
            n: a.n,
            p: a.p,
            event,
            seed: a.seed,
            estimate: est,
        })?,
        DataFormat::Csv => format!(
            "n,p,event,seed,trials,hits,p_hat,ci_lo,ci_hi,confidence\n{},{},{},{},{},{},{},{},{},{}\n",
            a.n,
            a.p,
            event,
            a.seed,
            est.trials,
            est.hits,
            est.p_hat,
            est.ci_lo,
            est.ci_hi,
            est.confidence
        ),
    };
    emit(a.out.as_deref(), &content)?;
    Ok(ExitCode::SUCCESS)
}

// ---------- sweep ----------

#[derive(Args)]
pub struct SweepArgs {
    /// Event name, e.g. `dim_ge:3`.
    #[arg(long)]
    pub event: String,
    /// Probability schedule: `p=<c>` fixes p, `q=<c>*n^<e>` scales the
    /// non-edge probability, e.g. `q=1*n^-0.5`.
    #[arg(long)]
    pub schedule: String,
    /// Ascending graph sizes, comma separated.
    #[arg(long = "n", value_delimiter = ',', required = true)]
    pub ns: Vec<usize>,
    /// Samples per size.
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.95)]
    pub confidence: f64,
    /// Worker threads; 0 uses the default pool.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = DataFormat::Csv)]
    pub format: DataFormat,
    /// Output file (default stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run_sweep(a: &SweepArgs) -> Result<ExitCode> {
    let event: EventSpec = a.event.parse()?;
    let schedule: Schedule = a.schedule.parse()?;
    if !a.ns.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::parameter(format!(
            "--n must be strictly ascending, got {:?}",
            a.ns
        )));
    }
    let records = with_worker_count(a.jobs, || {
        sweep(&event, &schedule, &a.ns, a.trials, a.seed, a.confidence)
    })?;
    let content = match a.format {
        DataFormat::Json => json_line(&records)?,
        DataFormat::Csv => {
            let mut s = String::from(rmi_core::SweepRecord::csv_header());
            for r in &records {
                s.push('\n');
                s.push_str(&r.csv_row());
            }
            s.push('\n');
            s
        }
    };
    emit(a.out.as_deref(), &content)?;
    Ok(ExitCode::SUCCESS)
}

// ---------- oracle ----------

#[derive(Args)]
pub struct OracleArgs {
    /// Number of vertices (enumeration is over all 2^C(n,2) graphs).
    #[arg(long)]
    pub n: usize,
    /// Event name to enumerate, e.g. `has_cycle`.
    #[arg(long, conflicts_with = "pattern")]
    pub event: Option<String>,
    /// Pattern whose induced-copy count to take moments of: `T` or `E<t>`.
    #[arg(long)]
    pub pattern: Option<String>,
    /// Moment order for --pattern: 1 (expectation) or 2.
    #[arg(long, default_value_t = 1)]
    pub moment: u32,
    /// Emit the expectation polynomial (synonym for --moment 1).
    #[arg(long)]
    pub expectation: bool,
    /// Enumeration cap on n (hard maximum 8).
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: usize,
    /// Compare the oracle against the closed forms and bounds on a p grid.
    #[arg(long)]
    pub compare: bool,
    /// Single grid point for --compare (default: p = 0.1, ..., 0.9).
    #[arg(long)]
    pub p: Option<f64>,
    /// Worker threads; 0 uses the default pool.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = DataFormat::Json)]
    pub format: DataFormat,
    /// Output file (default stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Serialize)]
struct OracleReport<'a> {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    event: Option<&'a EventSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pattern: Option<&'a PatternGraph>,
    #[serde(skip_serializing_if = "Option::is_none")]
    moment: Option<u32>,
    polynomial: &'a ProbPolynomial,
}

pub fn run_oracle(a: &OracleArgs) -> Result<ExitCode> {
    match (&a.event, &a.pattern) {
        (None, None) => Err(Error::parameter(
            "pass --event <name> or --pattern <T|E<t>>".to_string(),
        )),
        (Some(event), None) => {
            if a.compare {
                return Err(Error::parameter(
                    "--compare works with --pattern; events have no closed form to compare"
                        .to_string(),
                ));
            }
            let event: EventSpec = event.parse()?;
            let poly =
                with_worker_count(a.jobs, || rmi_core::enumerate_event(a.n, &event, a.cap))?;
            emit_polynomial(a, Some(&event), None, &poly)
        }
        (None, Some(pattern)) => {
            let pattern: PatternGraph = pattern.parse()?;
            let moment = if a.expectation { 1 } else { a.moment };
            if a.compare {
                if moment != 1 {
                    return Err(Error::parameter(
                        "--compare addresses the expectation; drop --moment 2".to_string(),
                    ));
                }
                let table = compare_table(a.n, &pattern, a.cap, a.p, a.jobs)?;
                emit(a.out.as_deref(), &table)?;
                return Ok(ExitCode::SUCCESS);
            }
            let poly = with_worker_count(a.jobs, || {
                rmi_core::enumerate_pattern_moment(a.n, &pattern, moment, a.cap)
            })?;
            emit_polynomial(a, None, Some((&pattern, moment)), &poly)
        }
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    }
}

fn emit_polynomial(
    a: &OracleArgs,
    event: Option<&EventSpec>,
    pattern: Option<(&PatternGraph, u32)>,
    poly: &ProbPolynomial,
) -> Result<ExitCode> {
    let content = match a.format {
        DataFormat::Json => json_line(&OracleReport {
            n: poly.n(),
            event,
            pattern: pattern.map(|(p, _)| p),
            moment: pattern.map(|(_, m)| m),
            polynomial: poly,
        })?,
        DataFormat::Csv => format!("{}\n{}", ProbPolynomial::csv_header(), poly.csv_rows()),
    };
    emit(a.out.as_deref(), &content)?;
    Ok(ExitCode::SUCCESS)
}

/// Expectation and positivity-probability table: exhaustive oracle next to
/// the closed forms, with Chebyshev/Markov bounds for context. A MISMATCH
/// flag means the closed form and the oracle disagree beyond rounding, as
/// happens for the two-triangles constant.
fn compare_table(
    n: usize,
    pattern: &PatternGraph,
    cap: usize,
    p_override: Option<f64>,
    jobs: usize,
) -> Result<String> {
    let expectation_poly =
        with_worker_count(jobs, || rmi_core::enumerate_expectation(n, pattern, cap))?;
    let positive_event = match pattern {
        PatternGraph::TwoTriangles => EventSpec::HasTInduced,
        PatternGraph::Empty(t) => EventSpec::HasEtInduced(*t),
    };
    let positive_poly =
        with_worker_count(jobs, || rmi_core::enumerate_event(n, &positive_event, cap))?;

    let mut table = String::new();
    table.push_str(&format!(
        "pattern {pattern} on n={n}: oracle vs closed-form expectation\n"
    ));
    if let PatternGraph::TwoTriangles = pattern {
        let kappa = rmi_core::count_labeled_copies(pattern, 6)?;
        table.push_str(&format!(
            "labeled copies on 6 vertices (enumerated): {kappa}; closed-form constant: 20\n"
        ));
    }
    table.push_str("p,e_oracle,e_closed,verdict,p_positive,chebyshev_lb,markov_ub\n");

    let grid: Vec<f64> = match p_override {
        Some(p) => vec![p],
        None => (1..=9).map(|k| k as f64 / 10.0).collect(),
    };
    for &p in &grid {
        let e_oracle = expectation_poly.evaluate_f64(p)?;
        let (e_closed, lb, ub) = match pattern {
            PatternGraph::TwoTriangles => (
                moments::expectation_two_triangles(n, p)?,
                moments::chebyshev_lower_bound_two_triangles(n, p)?,
                moments::expectation_two_triangles(n, p)?,
            ),
            PatternGraph::Empty(t) => (
                moments::expectation_empty_pattern(n, *t, p)?,
                moments::chebyshev_lower_bound_empty_pattern(n, *t, p)?,
                moments::markov_upper_bound_empty_pattern(n, *t, p)?,
            ),
        };
        let scale = e_oracle.abs().max(e_closed.abs()).max(1.0);
        let verdict = if (e_oracle - e_closed).abs() <= 1e-9 * scale {
            "MATCH"
        } else {
            "MISMATCH"
        };
        let p_positive = positive_poly.evaluate_f64(p)?;
        table.push_str(&format!(
            "{p},{e_oracle},{e_closed},{verdict},{p_positive},{lb},{ub}\n"
        ));
    }
    Ok(table)
}

// ---------- verify ----------

#[derive(Args)]
pub struct VerifyArgs {
    /// Run only checks whose id contains this substring.
    #[arg(long)]
    pub only: Option<String>,
    #[arg(long, default_value_t = DEFAULT_VERIFY_SEED)]
    pub seed: u64,
    /// Worker threads; 0 uses the default pool.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

pub fn run_verify(a: &VerifyArgs) -> Result<ExitCode> {
    let cfg = VerifyConfig {
        seed: a.seed,
        filter: a.only.clone(),
    };
    let outcomes = with_worker_count(a.jobs, || run_all(&cfg));
    if outcomes.is_empty() {
        return Err(Error::parameter(format!(
            "no check id contains {:?}; available: {}",
            a.only.as_deref().unwrap_or(""),
            check_ids().join(", ")
        )));
    }
    for o in &outcomes {
        println!("{}", o.render());
    }
    let failed = outcomes
        .iter()
        .filter(|o| o.status == rmi_core::CheckStatus::Fail)
        .count();
    println!(
        "{} checks: {} passed or informational, {} failed",
        outcomes.len(),
        outcomes.len() - failed,
        failed
    );
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
