//! Command implementations behind the `ggl` binary.
//!
//! Every command writes to a caller-supplied sink and returns the process exit
//! code, so the same code paths are driven by the binary and by the tests.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use ggl_core::chain::{self, ChainRecord};
use ggl_core::classify::CanonicalData;
use ggl_core::herzog::{self, FamilyCase, GglByExponents, HerzogData, TracePairs};
use ggl_core::idealization::{self, IdealizationReport};
use ggl_core::ulrich::{self, UlrichCertificate};
use ggl_core::verify::{self, VerifyOptions, VerifyReport};
use ggl_core::{ClassificationReport, NumericalSemigroup, RelativeIdeal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

pub const CSV_HEADER: &str = "gens;e;v;r;f;genus;red_K;ell_S_R;ell_R_c;gorenstein;agl;ggl;two_agl;ngl;minmult;tr_gens;tr_ulrich;route_consistent";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] ggl_core::Error),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Input(String),
    #[error("cannot write output: {0}")]
    Io(#[from] io::Error),
    #[error("cannot encode output: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// The reader went away (`ggl ... | head`); not worth reporting.
    fn is_broken_pipe(&self) -> bool {
        match self {
            CliError::Io(e) => e.kind() == io::ErrorKind::BrokenPipe,
            CliError::Json(e) => e.io_error_kind() == Some(io::ErrorKind::BrokenPipe),
            _ => false,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_input_error() => EXIT_INPUT,
            CliError::Core(_) => EXIT_INTERNAL,
            CliError::Read { .. } | CliError::Input(_) => EXIT_INPUT,
            CliError::Io(_) | CliError::Json(_) => EXIT_INTERNAL,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "ggl", version, about = "Invariants and classification of numerical semigroup rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanFormat {
    Csv,
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Mult4,
    #[value(name = "mult5_i")]
    Mult5I,
    #[value(name = "mult5_ii")]
    Mult5Ii,
}

impl From<FamilyArg> for FamilyCase {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Mult4 => FamilyCase::Mult4,
            FamilyArg::Mult5I => FamilyCase::Mult5I,
            FamilyArg::Mult5Ii => FamilyCase::Mult5Ii,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full classification report for one semigroup.
    Classify {
        #[arg(required = true, allow_negative_numbers = true)]
        gens: Vec<i64>,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Run every cross-check; exit 1 on the first violated one.
    Verify {
        #[arg(required = true, allow_negative_numbers = true)]
        gens: Vec<i64>,
        #[arg(long, value_enum, default_value = "table")]
        format: ReportFormat,
        /// Skip checks that walk all oversemigroups above this genus.
        #[arg(long, default_value_t = 40)]
        overring_genus_limit: usize,
        #[arg(long, default_value_t = chain::DEFAULT_STEP_CAP)]
        max_steps: usize,
    },
    /// Test the trace, a given ideal, or list all monomial Ulrich ideals.
    Ulrich {
        #[arg(required = true, allow_negative_numbers = true)]
        gens: Vec<i64>,
        #[arg(long)]
        enumerate: bool,
        /// Generators of the ideal to test, comma separated.
        #[arg(long, value_delimiter = ',', conflicts_with = "enumerate")]
        ideal: Option<Vec<i64>>,
    },
    /// Determinantal exponents of a three-generated semigroup.
    Herzog {
        #[arg(num_args = 3, allow_negative_numbers = true, required_unless_present = "family")]
        gens: Vec<i64>,
        /// Build the generators from a multiplicity 4 or 5 family instead.
        #[arg(long, value_enum, requires_all = ["alpha", "alpha_prime"])]
        family: Option<FamilyArg>,
        #[arg(long)]
        alpha: Option<i64>,
        #[arg(long)]
        alpha_prime: Option<i64>,
    },
    /// Iterate the endomorphism algebra of the maximal ideal.
    Chain {
        #[arg(required = true, allow_negative_numbers = true)]
        gens: Vec<i64>,
        #[arg(long, default_value_t = chain::DEFAULT_STEP_CAP)]
        max_steps: usize,
    },
    /// GGL test for the idealization by R:T.
    Idealize {
        #[arg(required = true, allow_negative_numbers = true)]
        gens: Vec<i64>,
        /// Position of T in the oversemigroup list (0 is the semigroup itself).
        #[arg(long, conflicts_with = "full_closure", required_unless_present = "full_closure")]
        overring_index: Option<usize>,
        /// Use T = R[K].
        #[arg(long)]
        full_closure: bool,
    },
    /// Classify a family and write one row per semigroup.
    Scan {
        #[arg(long, requires = "max", conflicts_with = "gens_file")]
        three_gen: bool,
        #[arg(long)]
        max: Option<i64>,
        #[arg(long, required_unless_present = "three_gen")]
        gens_file: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: ScanFormat,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

/// The JSON document printed by the reporting commands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: Vec<String>,
    pub semigroups: Vec<SemigroupEntry>,
    pub route_consistency: ConsistencySummary,
    pub exit_status: i32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupEntry {
    pub generators: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ulrich: Option<Vec<UlrichCertificate>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub herzog: Option<HerzogReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain: Option<Vec<ChainRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub idealization: Option<IdealizationReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<VerifyReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HerzogReport {
    pub data: HerzogData,
    pub ggl: GglByExponents,
    pub trace_pairs: TracePairs,
    pub trace_is_ulrich: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencySummary {
    pub consistent: bool,
    pub failures: Vec<String>,
}

impl ConsistencySummary {
    fn from_failures(failures: Vec<String>) -> Self {
        ConsistencySummary {
            consistent: failures.is_empty(),
            failures,
        }
    }
}

/// Parses `argv` and runs the command; errors are reported on `err`.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_INPUT;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let echo: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    match run(&cli, echo, out) {
        Ok(code) => code,
        Err(e) if e.is_broken_pipe() => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(cli: &Cli, echo: Vec<String>, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Classify { gens, format } => cmd_classify(gens, *format, echo, out),
        Command::Verify {
            gens,
            format,
            overring_genus_limit,
            max_steps,
        } => cmd_verify(
            gens,
            *format,
            VerifyOptions {
                overring_genus_limit: *overring_genus_limit,
                max_steps: *max_steps,
            },
            echo,
            out,
        ),
        Command::Ulrich {
            gens,
            enumerate,
            ideal,
        } => cmd_ulrich(gens, *enumerate, ideal.as_deref(), echo, out),
        Command::Herzog {
            gens,
            family,
            alpha,
            alpha_prime,
        } => {
            let triple = match family {
                Some(case) => {
                    let t = herzog::family_mult_le5(
                        (*case).into(),
                        alpha.expect("required by clap"),
                        alpha_prime.expect("required by clap"),
                    )?;
                    t.to_vec()
                }
                None => gens.clone(),
            };
            cmd_herzog(&triple, echo, out)
        }
        Command::Chain { gens, max_steps } => cmd_chain(gens, *max_steps, echo, out),
        Command::Idealize {
            gens,
            overring_index,
            full_closure,
        } => cmd_idealize(gens, *overring_index, *full_closure, echo, out),
        Command::Scan {
            three_gen,
            max,
            gens_file,
            out: out_path,
            format,
            jobs,
        } => {
            let inputs = if *three_gen {
                let max = max.expect("required by clap");
                if max < 3 {
                    return Err(CliError::Input(format!("--max must be at least 3, got {max}")));
                }
                ggl_core::corpus::three_generated(max)
                    .into_iter()
                    .map(|t| t.to_vec())
                    .collect()
            } else {
                read_gens_file(gens_file.as_deref().expect("required by clap"))?
            };
            let (text, failed) = scan_to_string(&inputs, *format, *jobs)?;
            match out_path {
                Some(path) => std::fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(if failed { EXIT_VERIFY_FAILED } else { EXIT_OK })
        }
    }
}

fn semigroup(gens: &[i64]) -> Result<NumericalSemigroup, CliError> {
    Ok(NumericalSemigroup::new(gens)?)
}

fn write_document(out: &mut dyn Write, doc: &ReportDocument) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, doc)?;
    writeln!(out)?;
    Ok(())
}

fn document(echo: Vec<String>, entry: SemigroupEntry, failures: Vec<String>, exit: i32) -> ReportDocument {
    ReportDocument {
        command: echo,
        semigroups: vec![entry],
        route_consistency: ConsistencySummary::from_failures(failures),
        exit_status: exit,
    }
}

pub fn cmd_classify(
    gens: &[i64],
    format: ReportFormat,
    echo: Vec<String>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let h = semigroup(gens)?;
    let report = ggl_core::classify(&h)?;
    match format {
        ReportFormat::Json => {
            let entry = SemigroupEntry {
                generators: h.raw_generators().to_vec(),
                classification: Some(report),
                ..SemigroupEntry::default()
            };
            write_document(out, &document(echo, entry, Vec::new(), EXIT_OK))?;
        }
        ReportFormat::Table => out.write_all(classification_table(&report).as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn join(v: &[i64], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn classification_table(r: &ClassificationReport) -> String {
    let inv = &r.invariants;
    let mut rows: Vec<(&str, String)> = vec![
        ("generators", join(&r.generators, " ")),
        ("multiplicity", inv.multiplicity.to_string()),
        ("embedding dimension", inv.embedding_dimension.to_string()),
        ("type", inv.cm_type.to_string()),
        ("frobenius", inv.frobenius.to_string()),
        ("genus", inv.genus.to_string()),
        ("pseudo-frobenius", join(&r.pseudo_frobenius, " ")),
        ("K", join(&r.canonical, " ")),
        ("reduction number of K", r.reduction_number.to_string()),
        ("S = R[K]", join(&r.blowup, " ")),
        ("conductor R:S", join(&r.conductor, " ")),
        ("l(R/c)", r.colength_conductor.to_string()),
        ("trace", join(&r.trace, " ")),
        ("l(R/tr)", r.colength_trace.to_string()),
        ("e1 = l(S/R)", r.e1.to_string()),
        ("l(K^2/K)", r.length_k2_over_k.to_string()),
        ("gorenstein", r.gorenstein.to_string()),
        ("agl", r.agl.to_string()),
        ("ggl", r.ggl.to_string()),
        ("2-agl", r.two_agl.to_string()),
        ("ngl", r.ngl.to_string()),
        ("minimal multiplicity", r.minimal_multiplicity.to_string()),
    ];
    if let Some(w) = &r.ggl_witness {
        rows.push(("socle exponent", w.socle.to_string()));
        rows.push(("free basis of K/R", join(&w.basis_exponents, " ")));
    }
    rows.push(("consistent", r.consistent().to_string()));
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut s = String::new();
    for (k, v) in rows {
        let _ = writeln!(s, "{k:<width$}  {v}");
    }
    s
}

pub fn cmd_verify(
    gens: &[i64],
    format: ReportFormat,
    options: VerifyOptions,
    echo: Vec<String>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let h = semigroup(gens)?;
    let report = verify::verify_with(&h, options)?;
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    };
    match format {
        ReportFormat::Json => {
            let failures = report
                .checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.name.clone())
                .collect();
            let entry = SemigroupEntry {
                generators: h.raw_generators().to_vec(),
                verify: Some(report),
                ..SemigroupEntry::default()
            };
            write_document(out, &document(echo, entry, failures, code))?;
        }
        ReportFormat::Table => {
            for c in &report.checks {
                let mark = if c.passed { "ok  " } else { "FAIL" };
                if c.detail.is_empty() || c.passed {
                    writeln!(out, "{mark} {}", c.name)?;
                } else {
                    writeln!(out, "{mark} {}: {}", c.name, c.detail)?;
                }
            }
            for s in &report.skipped {
                writeln!(out, "skip {s}")?;
            }
            match report.first_failure() {
                Some(c) => writeln!(out, "{h}: failed {}", c.name)?,
                None => writeln!(out, "{h}: {} checks passed", report.checks.len())?,
            }
        }
    }
    Ok(code)
}

pub fn cmd_ulrich(
    gens: &[i64],
    enumerate: bool,
    ideal: Option<&[i64]>,
    echo: Vec<String>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let h = semigroup(gens)?;
    let certs = if enumerate {
        ulrich::enumerate_ulrich(&h)
    } else {
        let i = match ideal {
            Some(g) => RelativeIdeal::from_generators(&h, g)?,
            None => CanonicalData::compute(&h)?.trace,
        };
        vec![ulrich::is_ulrich(&h, &i)?]
    };
    let entry = SemigroupEntry {
        generators: h.raw_generators().to_vec(),
        ulrich: Some(certs),
        ..SemigroupEntry::default()
    };
    write_document(out, &document(echo, entry, Vec::new(), EXIT_OK))?;
    Ok(EXIT_OK)
}

pub fn cmd_herzog(gens: &[i64], echo: Vec<String>, out: &mut dyn Write) -> Result<i32, CliError> {
    let [a1, a2, a3] = gens[..] else {
        return Err(ggl_core::Error::NotThreeGenerated(gens.len()).into());
    };
    let data = herzog::herzog_data(a1, a2, a3)?;
    let h = semigroup(gens)?;
    let canonical = CanonicalData::compute(&h)?;
    let ggl = herzog::ggl_by_exponents_with(&data, &canonical);
    let trace_pairs = herzog::trace_ulrich_by_pairs(&data);
    let trace_is_ulrich = ulrich::trace_is_ulrich_with(&canonical)?;
    let mut failures = Vec::new();
    if !ggl.consistent {
        failures.push("three_generated_ggl_criteria".to_string());
    }
    if trace_pairs.verdict != trace_is_ulrich || (trace_pairs.verdict && !trace_pairs.shape_holds()) {
        failures.push("three_generated_trace_pairs".to_string());
    }
    let code = if failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_INTERNAL
    };
    let entry = SemigroupEntry {
        generators: gens.to_vec(),
        herzog: Some(HerzogReport {
            data,
            ggl,
            trace_pairs,
            trace_is_ulrich,
        }),
        ..SemigroupEntry::default()
    };
    write_document(out, &document(echo, entry, failures, code))?;
    Ok(code)
}

pub fn cmd_chain(
    gens: &[i64],
    max_steps: usize,
    echo: Vec<String>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let h = semigroup(gens)?;
    let records = chain::blowup_chain_with_cap(&h, max_steps)?;
    let failures: Vec<String> = records
        .iter()
        .flat_map(|r| {
            r.assertions
                .iter()
                .filter(|(_, &v)| !v)
                .map(move |(k, _)| format!("step {}: {k}", r.step))
        })
        .collect();
    let code = if failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_INTERNAL
    };
    let entry = SemigroupEntry {
        generators: h.raw_generators().to_vec(),
        chain: Some(records),
        ..SemigroupEntry::default()
    };
    write_document(out, &document(echo, entry, failures, code))?;
    Ok(code)
}

pub fn cmd_idealize(
    gens: &[i64],
    overring_index: Option<usize>,
    full_closure: bool,
    echo: Vec<String>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let h = semigroup(gens)?;
    let data = CanonicalData::compute(&h)?;
    let t = if full_closure {
        data.blowup_semigroup.clone()
    } else {
        let k = overring_index.expect("required by clap");
        let overrings = h.overrings();
        overrings.get(k).cloned().ok_or_else(|| {
            CliError::Input(format!(
                "overring index {k} out of range: {h} has {} oversemigroups",
                overrings.len()
            ))
        })?
    };
    let report = idealization::idealization_is_ggl_with(&data, &t)?;
    let entry = SemigroupEntry {
        generators: h.raw_generators().to_vec(),
        idealization: Some(report),
        ..SemigroupEntry::default()
    };
    write_document(out, &document(echo, entry, Vec::new(), EXIT_OK))?;
    Ok(EXIT_OK)
}

/// One line of a scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub gens: Vec<i64>,
    pub e: i64,
    pub v: usize,
    pub r: usize,
    pub f: i64,
    pub genus: usize,
    pub red_k: u32,
    pub ell_s_r: usize,
    pub ell_r_c: usize,
    pub gorenstein: bool,
    pub agl: bool,
    pub ggl: bool,
    pub two_agl: bool,
    pub ngl: bool,
    pub minmult: bool,
    pub tr_gens: Vec<i64>,
    pub tr_ulrich: bool,
    pub route_consistent: bool,
}

impl ScanRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{};{};{};{};{};{};{};{};{};{};{};{};{};{};{};{};{};{}",
            join(&self.gens, ","),
            self.e,
            self.v,
            self.r,
            self.f,
            self.genus,
            self.red_k,
            self.ell_s_r,
            self.ell_r_c,
            self.gorenstein,
            self.agl,
            self.ggl,
            self.two_agl,
            self.ngl,
            self.minmult,
            join(&self.tr_gens, "|"),
            self.tr_ulrich,
            self.route_consistent,
        )
    }
}

/// Classifies one semigroup for a scan. Broken cross-checks only clear
/// `route_consistent`.
pub fn scan_row(gens: &[i64]) -> Result<ScanRow, CliError> {
    let h = semigroup(gens)?;
    let data = CanonicalData::compute(&h)?;
    let report = ggl_core::classify::report_from(&data);
    let mut consistent = report.consistent();
    let tr_ulrich = if report.gorenstein {
        false
    } else {
        match ulrich::trace_is_ulrich_with(&data) {
            Ok(v) => v,
            Err(_) => {
                consistent = false;
                ulrich::is_ulrich(&h, &data.trace).is_ok_and(|c| c.verdict)
            }
        }
    };
    if h.embedding_dimension() == 3 && !report.gorenstein {
        let g = h.minimal_generators();
        match herzog::herzog_data(g[0], g[1], g[2]) {
            Ok(hd) => {
                consistent &= herzog::ggl_by_exponents_with(&hd, &data).consistent;
                let pairs = herzog::trace_ulrich_by_pairs(&hd);
                consistent &= pairs.verdict == tr_ulrich && (!pairs.verdict || pairs.shape_holds());
            }
            Err(_) => consistent = false,
        }
    }
    let inv = &report.invariants;
    Ok(ScanRow {
        gens: gens.to_vec(),
        e: inv.multiplicity,
        v: inv.embedding_dimension,
        r: inv.cm_type,
        f: inv.frobenius,
        genus: inv.genus,
        red_k: report.reduction_number,
        ell_s_r: report.e1,
        ell_r_c: report.colength_conductor,
        gorenstein: report.gorenstein,
        agl: report.agl,
        ggl: report.ggl,
        two_agl: report.two_agl,
        ngl: report.ngl,
        minmult: report.minimal_multiplicity,
        tr_gens: report.trace,
        tr_ulrich,
        route_consistent: consistent,
    })
}

/// Runs a scan on `jobs` threads. Rows are sorted by generator list, so the
/// text does not depend on `jobs`. No rows means no output at all, not even
/// the CSV header. The flag is true when some row is
/// inconsistent.
pub fn scan_to_string(
    inputs: &[Vec<i64>],
    format: ScanFormat,
    jobs: usize,
) -> Result<(String, bool), CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Input(format!("cannot start {jobs} workers: {e}")))?;
    let mut rows: Vec<ScanRow> = pool.install(|| {
        inputs
            .par_iter()
            .map(|g| scan_row(g))
            .collect::<Result<Vec<_>, _>>()
    })?;
    rows.sort_by(|a, b| a.gens.cmp(&b.gens));
    let failed = rows.iter().any(|r| !r.route_consistent);
    let mut text = String::new();
    match format {
        ScanFormat::Csv if rows.is_empty() => {}
        ScanFormat::Csv => {
            text.push_str(CSV_HEADER);
            text.push('\n');
            for r in &rows {
                text.push_str(&r.to_csv());
                text.push('\n');
            }
        }
        ScanFormat::Jsonl => {
            for r in &rows {
                text.push_str(&serde_json::to_string(r)?);
                text.push('\n');
            }
        }
    }
    Ok((text, failed))
}

/// One generator list per line, separated by commas and/or whitespace.
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_gens_list(text: &str) -> Result<Vec<Vec<i64>>, CliError> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let gens = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::Input(format!("line {}: {e}", n + 1)))?;
        out.push(gens);
    }
    Ok(out)
}

fn read_gens_file(path: &Path) -> Result<Vec<Vec<i64>>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    parse_gens_list(&text)
}
