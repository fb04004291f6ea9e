//! Command-line front end for `kpartite`.
//!
//! Exit codes: 0 success or verification pass, 1 verification failure,
//! 2 infeasible or search budget exhausted, 3 usage, I/O or malformed input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use kpartite_core::constructions::{
    banded_coloring, blowup_min_coloring, complete_graph_coloring, compress, lift_coloring,
    spectrum_sweep,
};
use kpartite_core::solver::{
    exact_max_colors, feasible_spectrum, find_interval_coloring, spectrum_to_first_gap, Exact,
};
use kpartite_core::{
    bound_report, ColoringDocument, Graph, PartiteSpec, Provenance, SearchOptions, SearchStatus,
    Source,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "kpartite",
    version,
    about = "Interval edge colorings of complete k-partite graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a verified coloring of K_n^k and write it as a document.
    Construct(ConstructArgs),
    /// Search for an interval coloring of the complete graph K_m.
    Base(BaseArgs),
    /// Check a document against the interval coloring axioms.
    Verify(VerifyArgs),
    /// Remove one color from a verified coloring of a regular graph.
    Compress(CompressArgs),
    /// Colorings or feasibility for every t in a range.
    Spectrum(SpectrumArgs),
    /// CSV table of degrees, chromatic indices and bounds.
    Bounds(BoundsArgs),
    /// Print a document as an edge list or per-part-pair matrices.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Theorem3,
    Blowup,
    Lift,
    Solver,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpectrumMode {
    Construct,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Edgelist,
    Matrix,
}

#[derive(Debug, Clone, Args)]
pub struct BudgetArgs {
    /// Node budget per (graph, t) search.
    #[arg(long, default_value_t = 100_000_000)]
    pub max_nodes: u64,
    /// Wall-clock budget per (graph, t) search, in seconds.
    #[arg(long, default_value_t = 60.0)]
    pub max_seconds: f64,
    /// Split the search across threads.
    #[arg(long)]
    pub parallel: bool,
    /// Fix the first edge to color 1 on edge-transitive instances.
    #[arg(long)]
    pub symmetry: bool,
}

impl BudgetArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions {
            parallel: self.parallel,
            symmetry_break: self.symmetry,
            ..SearchOptions::with_budget(self.max_nodes, self.max_seconds)
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ConstructArgs {
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum)]
    pub method: Method,
    /// Target color count (solver method).
    #[arg(long)]
    pub t: Option<u32>,
    /// Base K_k coloring document (lift method).
    #[arg(long)]
    pub base: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Clone, Args)]
pub struct BaseArgs {
    /// Vertex count of K_m (even).
    #[arg(long)]
    pub m: usize,
    /// Target color count; defaults to 2m - 1 - p - q for m = p * 2^q.
    #[arg(long)]
    pub t: Option<u32>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Args)]
pub struct CompressArgs {
    pub file: PathBuf,
    /// Number of colors to remove.
    #[arg(long, default_value_t = 1)]
    pub steps: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub mode: SpectrumMode,
    /// Directory for construct-mode documents; defaults to spectrum-k<K>-n<N>.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    /// Base K_k coloring used for a lifted top coloring (construct mode).
    #[arg(long)]
    pub base: Option<PathBuf>,
    /// Largest t to query (oracle mode); by default the scan stops at the
    /// first infeasible t after a feasible one.
    #[arg(long)]
    pub t_max: Option<u32>,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Clone, Args)]
pub struct BoundsArgs {
    /// Inclusive range, `A-B`, `A..B` or a single value.
    #[arg(long, default_value = "2-16")]
    pub k_range: String,
    #[arg(long, default_value = "1-8")]
    pub n_range: String,
    /// Compute the exact largest t by search for instances with at most this
    /// many edges.
    #[arg(long, default_value_t = 0)]
    pub oracle_max_edges: usize,
    /// Node budget per oracle query; no time limit, so output is
    /// reproducible.
    #[arg(long, default_value_t = 10_000_000)]
    pub oracle_max_nodes: u64,
}

#[derive(Debug, Clone, Args)]
pub struct ExportArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t = ExportFormat::Edgelist)]
    pub format: ExportFormat,
}

/// A command's failure: exit code plus a message for standard error.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn infeasible(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INFEASIBLE,
            message: message.into(),
        }
    }

    fn verify_failed(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_VERIFY_FAILED,
            message: message.into(),
        }
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn execute(command: &Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Construct(a) => cmd_construct(a, out),
        Command::Base(a) => cmd_base(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Compress(a) => cmd_compress(a, out),
        Command::Spectrum(a) => cmd_spectrum(a, out),
        Command::Bounds(a) => cmd_bounds(a, out),
        Command::Export(a) => cmd_export(a, out),
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::usage(format!("{}: {}", path.display(), e))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::usage(format!("writing output: {e}")))
}

pub fn read_document(path: &Path) -> Result<ColoringDocument, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    ColoringDocument::parse(&text).map_err(|e| Failure::usage(format!("{}: {}", path.display(), e)))
}

/// Verifies `doc` and writes it to `path` (or `out`). Nothing is written
/// unless verification passes.
fn write_verified(
    doc: &ColoringDocument,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let report = doc
        .verify()
        .map_err(|e| Failure::verify_failed(format!("refusing to write: {e}")))?;
    if !report.passed() {
        return Err(Failure::verify_failed(format!(
            "refusing to write unverified coloring:\n{report}"
        )));
    }
    match path {
        Some(p) => std::fs::write(p, doc.to_json()).map_err(|e| io_failure(p, e)),
        None => emit(out, &doc.to_json()),
    }
}

fn spec_from(k: Option<usize>, n: Option<usize>) -> Result<PartiteSpec, Failure> {
    let k = k.ok_or_else(|| Failure::usage("--k is required"))?;
    let n = n.ok_or_else(|| Failure::usage("--n is required"))?;
    let spec = PartiteSpec::new(k, n).map_err(|e| Failure::usage(e.to_string()))?;
    if k < 2 {
        return Err(Failure::usage(format!(
            "k={k}: the graph has no edges to color"
        )));
    }
    Ok(spec)
}

#[derive(Serialize)]
struct WriteSummary<'a> {
    path: Option<String>,
    kind: &'a str,
    t: u32,
    source: Source,
}

fn summarize(
    out: &mut dyn Write,
    format: OutputFormat,
    path: Option<&Path>,
    doc: &ColoringDocument,
) -> Result<(), Failure> {
    // the document itself went to stdout; keep it parseable
    let Some(path) = path else { return Ok(()) };
    let source = doc
        .provenance
        .as_ref()
        .map_or(Source::External, |p| p.source);
    let text = match format {
        OutputFormat::Text => format!("wrote {} (t={})\n", path.display(), doc.t),
        OutputFormat::Structured => {
            let kind = match doc.kind {
                kpartite_core::DocumentKind::Kpartite => "kpartite",
                kpartite_core::DocumentKind::Complete => "complete",
            };
            let s = WriteSummary {
                path: Some(path.display().to_string()),
                kind,
                t: doc.t,
                source,
            };
            serde_json::to_string(&s).expect("summary serializes") + "\n"
        }
    };
    emit(out, &text)
}

pub fn cmd_construct(a: &ConstructArgs, out: &mut dyn Write) -> CmdResult {
    let doc = match a.method {
        Method::Theorem3 => {
            let spec = spec_from(a.k, a.n)?;
            let c = banded_coloring(spec).map_err(|e| Failure::usage(e.to_string()))?;
            let notes = format!("eight-case banded coloring of K_{}^{}", spec.n(), spec.k());
            ColoringDocument::from_partite(
                &c,
                Some(Provenance::new(Source::Theorem3).with_notes(notes)),
            )
        }
        Method::Blowup => {
            let spec = spec_from(a.k, a.n)?;
            let c = blowup_min_coloring(spec).map_err(|e| Failure::usage(e.to_string()))?;
            let notes = "circle-method factorization, each matching edge blown up to K_{n,n}";
            ColoringDocument::from_partite(
                &c,
                Some(Provenance::new(Source::Blowup).with_notes(notes)),
            )
        }
        Method::Lift => {
            let base_path = a
                .base
                .as_ref()
                .ok_or_else(|| Failure::usage("--method lift requires --base"))?;
            let n =
                a.n.ok_or_else(|| Failure::usage("--method lift requires --n"))?;
            let base = read_document(base_path)?
                .to_complete()
                .map_err(|e| Failure::usage(format!("{}: {}", base_path.display(), e)))?;
            if let Some(k) = a.k {
                if k != base.m() {
                    return Err(Failure::usage(format!(
                        "--k {k} does not match base K_{}",
                        base.m()
                    )));
                }
            }
            let c = lift_coloring(&base, n).map_err(|e| Failure::usage(e.to_string()))?;
            let prov = Provenance::new(Source::Lift)
                .with_parent(base_path.display().to_string())
                .with_notes(format!("lift of a {}-coloring of K_{}", base.t(), base.m()));
            ColoringDocument::from_partite(&c, Some(prov))
        }
        Method::Solver => {
            let spec = spec_from(a.k, a.n)?;
            let t =
                a.t.ok_or_else(|| Failure::usage("--method solver requires --t"))?;
            let options = a.budget.options();
            let delta = kpartite_core::max_degree(spec);
            if t < delta {
                return Err(Failure::infeasible(format!(
                    "proven infeasible: t={t} is below the degree {delta}"
                )));
            }
            let outcome = find_interval_coloring(&Graph::multipartite(spec), t, &options)
                .map_err(|e| Failure::usage(e.to_string()))?;
            match outcome.status {
                SearchStatus::Witness => {
                    let c = outcome.partite_witness(spec, t).expect("witness present");
                    let notes = format!("exhaustive search, {} nodes", outcome.nodes_explored);
                    ColoringDocument::from_partite(
                        &c,
                        Some(Provenance::new(Source::Solver).with_notes(notes)),
                    )
                }
                SearchStatus::ProvenInfeasible => {
                    return Err(Failure::infeasible(format!(
                        "proven infeasible: {spec} has no interval {t}-coloring ({} nodes)",
                        outcome.nodes_explored
                    )))
                }
                SearchStatus::BudgetExhausted => {
                    return Err(Failure::infeasible(format!(
                        "budget exhausted after {} nodes without a witness",
                        outcome.nodes_explored
                    )))
                }
            }
        }
    };
    write_verified(&doc, a.out.as_deref(), out)?;
    summarize(out, a.format, a.out.as_deref(), &doc)?;
    Ok(EXIT_OK)
}

pub fn cmd_base(a: &BaseArgs, out: &mut dyn Write) -> CmdResult {
    if a.m < 2 || a.m % 2 == 1 {
        return Err(Failure::usage(format!(
            "--m must be even and at least 2, got {}",
            a.m
        )));
    }
    let result = complete_graph_coloring(a.m, a.t, &a.budget.options())
        .map_err(|e| Failure::usage(e.to_string()))?;
    let mut prov = Provenance::new(if result.search.is_some() {
        Source::Solver
    } else {
        Source::External
    });
    prov.notes = if result.met_target {
        format!("interval {}-coloring of K_{}", result.target, a.m)
    } else {
        format!(
            "target {} not reached ({:?} after {} nodes); circle-method baseline",
            result.target,
            result.search.expect("search ran"),
            result.nodes_explored
        )
    };
    let doc = ColoringDocument::from_complete(&result.coloring, Some(prov));
    write_verified(&doc, a.out.as_deref(), out)?;
    summarize(out, OutputFormat::Text, a.out.as_deref(), &doc)?;
    if result.met_target {
        Ok(EXIT_OK)
    } else {
        Err(Failure::infeasible(
            doc.provenance.expect("set above").notes,
        ))
    }
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let doc = read_document(&a.file)?;
    let report = doc.verify().map_err(|e| Failure::usage(e.to_string()))?;
    let text = match a.format {
        OutputFormat::Text => report.to_string(),
        OutputFormat::Structured => {
            serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
        }
    };
    emit(out, &text)?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

pub fn cmd_compress(a: &CompressArgs, out: &mut dyn Write) -> CmdResult {
    let doc = read_document(&a.file)?;
    let mut c = doc
        .to_partite()
        .map_err(|e| Failure::verify_failed(e.to_string()))?;
    for _ in 0..a.steps {
        c = compress(&c).map_err(|e| Failure::verify_failed(e.to_string()))?;
    }
    let prov = Provenance::new(Source::Compress)
        .with_parent(a.file.display().to_string())
        .with_notes(format!("{} color(s) removed", a.steps));
    let new_doc = match doc.kind {
        kpartite_core::DocumentKind::Complete => ColoringDocument::from_complete(
            &kpartite_core::CompleteColoring::from_partite(&c).expect("n = 1"),
            Some(prov),
        ),
        kpartite_core::DocumentKind::Kpartite => ColoringDocument::from_partite(&c, Some(prov)),
    };
    write_verified(&new_doc, a.out.as_deref(), out)?;
    summarize(out, OutputFormat::Text, a.out.as_deref(), &new_doc)?;
    Ok(EXIT_OK)
}

/// The file name used for the construct-mode coloring with `t` colors.
pub fn spectrum_file_name(t: u32) -> String {
    format!("t{t}.json")
}

pub fn cmd_spectrum(a: &SpectrumArgs, out: &mut dyn Write) -> CmdResult {
    let spec = spec_from(Some(a.k), Some(a.n))?;
    match a.mode {
        SpectrumMode::Construct => spectrum_construct(a, spec, out),
        SpectrumMode::Oracle => {
            let graph = Graph::multipartite(spec);
            let options = a.budget.options();
            let spectrum = match a.t_max {
                Some(t_max) => feasible_spectrum(&graph, t_max, &options),
                None => spectrum_to_first_gap(&graph, &options),
            }
            .map_err(|e| Failure::usage(e.to_string()))?;
            let text = match a.format {
                OutputFormat::Text => spectrum.to_text() + "\n",
                OutputFormat::Structured => {
                    serde_json::to_string(&spectrum.entries).expect("spectrum serializes") + "\n"
                }
            };
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
    }
}

fn spectrum_construct(a: &SpectrumArgs, spec: PartiteSpec, out: &mut dyn Write) -> CmdResult {
    if (spec.k() * spec.n()) % 2 == 1 {
        return Err(Failure::infeasible(format!(
            "{spec} is not interval colorable (n*k odd)"
        )));
    }
    let base = match &a.base {
        Some(p) => Some(
            read_document(p)?
                .to_complete()
                .map_err(|e| Failure::usage(format!("{}: {}", p.display(), e)))?,
        ),
        None => None,
    };
    if spec.k() % 2 == 1 && base.is_none() {
        return Err(Failure::infeasible(format!(
            "no construction available for odd k={} without a base coloring",
            spec.k()
        )));
    }
    let sweep =
        spectrum_sweep(spec, base.as_ref()).map_err(|e| Failure::infeasible(e.to_string()))?;
    let dir = a
        .out_dir
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("spectrum-k{}-n{}", spec.k(), spec.n())));
    std::fs::create_dir_all(&dir).map_err(|e| io_failure(&dir, e))?;

    let top = *sweep.keys().next_back().expect("sweep is never empty");
    let top_source = if base.is_some() && Some(top) != kpartite_core::graph::banded_bound(spec) {
        Source::Lift
    } else {
        Source::Theorem3
    };
    let mut rows = Vec::new();
    for (t, coloring) in sweep.iter().rev() {
        let prov = if *t == top {
            Provenance::new(top_source)
        } else {
            Provenance::new(Source::Compress).with_parent(spectrum_file_name(t + 1))
        };
        let doc = ColoringDocument::from_partite(coloring, Some(prov));
        let path = dir.join(spectrum_file_name(*t));
        write_verified(&doc, Some(&path), out)?;
        rows.push((*t, path));
    }
    rows.reverse();
    let text = match a.format {
        OutputFormat::Text => rows.iter().fold(String::new(), |mut s, (t, p)| {
            writeln!(s, "t={} verified {}", t, p.display()).unwrap();
            s
        }),
        OutputFormat::Structured => {
            let map: std::collections::BTreeMap<u32, String> = rows
                .iter()
                .map(|(t, p)| (*t, p.display().to_string()))
                .collect();
            serde_json::to_string(&map).expect("map serializes") + "\n"
        }
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

/// Parses `A-B`, `A..B`, `A..=B` or `A` as an inclusive range.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let s = s.trim();
    let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
        (a, b)
    } else if let Some((a, b)) = s.split_once("..") {
        (a, b)
    } else if let Some((a, b)) = s.split_once('-') {
        (a, b)
    } else {
        (s, s)
    };
    let parse = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad range {s:?}: {e}"))
    };
    let (lo, hi) = (parse(lo)?, parse(hi)?);
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

/// One row of the bounds table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsTableRow {
    pub k: usize,
    pub n: usize,
    pub delta: u32,
    pub chi_prime: u32,
    pub colorable: bool,
    pub w: Option<u32>,
    pub thm3_bound: Option<u32>,
    pub thm4_bound: Option<u32>,
    pub best_bound: Option<u32>,
    /// `Some(None)` when the oracle ran but could not settle the value.
    pub oracle_w: Option<Option<u32>>,
}

pub const BOUNDS_HEADER: &str =
    "k,n,delta,chi_prime,colorable,w,thm3_bound,thm4_bound,best_bound,oracle_W";

impl BoundsTableRow {
    pub fn compute(spec: PartiteSpec, oracle_max_edges: usize, oracle_max_nodes: u64) -> Self {
        let r = bound_report(spec).expect("k >= 2");
        let best_bound = [r.banded, r.lifted].into_iter().flatten().max();
        let oracle_w = (r.colorable && spec.edge_count() <= oracle_max_edges).then(|| {
            let options = SearchOptions::with_budget(oracle_max_nodes, f64::from(u32::MAX));
            match exact_max_colors(&Graph::multipartite(spec), &options) {
                Ok(Exact::Known(w)) => Some(w),
                _ => None,
            }
        });
        BoundsTableRow {
            k: spec.k(),
            n: spec.n(),
            delta: r.delta,
            chi_prime: r.chi_prime,
            colorable: r.colorable,
            w: r.w_value,
            thm3_bound: r.banded,
            thm4_bound: r.lifted,
            best_bound,
            oracle_w,
        }
    }

    pub fn to_csv(&self) -> String {
        let opt = |x: Option<u32>| x.map(|v| v.to_string()).unwrap_or_default();
        let oracle = match self.oracle_w {
            None => String::new(),
            Some(None) => "unknown".to_string(),
            Some(Some(w)) => w.to_string(),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.k,
            self.n,
            self.delta,
            self.chi_prime,
            self.colorable,
            opt(self.w),
            opt(self.thm3_bound),
            opt(self.thm4_bound),
            opt(self.best_bound),
            oracle
        )
    }
}

pub fn cmd_bounds(a: &BoundsArgs, out: &mut dyn Write) -> CmdResult {
    let ks = parse_range(&a.k_range).map_err(Failure::usage)?;
    let ns = parse_range(&a.n_range).map_err(Failure::usage)?;
    if *ks.start() < 2 || *ns.start() < 1 {
        return Err(Failure::usage(
            "--k-range must start at 2 or more and --n-range at 1 or more",
        ));
    }
    let mut text = String::from(BOUNDS_HEADER);
    text.push('\n');
    for k in ks {
        for n in ns.clone() {
            let spec = PartiteSpec::new(k, n).expect("validated ranges");
            let row = BoundsTableRow::compute(spec, a.oracle_max_edges, a.oracle_max_nodes);
            text.push_str(&row.to_csv());
            text.push('\n');
        }
    }
    emit(out, &text)?;
    Ok(EXIT_OK)
}

pub fn cmd_export(a: &ExportArgs, out: &mut dyn Write) -> CmdResult {
    let doc = read_document(&a.file)?;
    let report = doc.verify().map_err(|e| Failure::usage(e.to_string()))?;
    if !report.passed() {
        return Err(Failure::verify_failed(format!(
            "{} does not verify:\n{report}",
            a.file.display()
        )));
    }
    let text = match a.format {
        ExportFormat::Edgelist => doc.to_edgelist(),
        ExportFormat::Matrix => doc.to_matrix(),
    }
    .map_err(|e| Failure::usage(e.to_string()))?;
    emit(out, &text)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2-16"), Ok(2..=16));
        assert_eq!(parse_range("2..5"), Ok(2..=5));
        assert_eq!(parse_range("3..=4"), Ok(3..=4));
        assert_eq!(parse_range("7"), Ok(7..=7));
        assert!(parse_range("5-2").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn bounds_rows() {
        let row = BoundsTableRow::compute(PartiteSpec::new(8, 1).unwrap(), 0, 0);
        assert_eq!(row.to_csv(), "8,1,7,7,true,7,10,11,11,");
        let row = BoundsTableRow::compute(PartiteSpec::new(12, 2).unwrap(), 0, 0);
        assert_eq!(
            (row.thm3_bound, row.thm4_bound, row.best_bound),
            (Some(33), Some(37), Some(37))
        );
        let row = BoundsTableRow::compute(PartiteSpec::new(3, 3).unwrap(), 0, 0);
        assert_eq!(row.to_csv(), "3,3,6,7,false,,,,,");
        let row = BoundsTableRow::compute(PartiteSpec::new(2, 2).unwrap(), 4, 1_000_000);
        assert_eq!(row.oracle_w, Some(Some(3)));
    }

    #[test]
    fn usage_errors_exit_3() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        assert_eq!(
            run(["kpartite", "frobnicate"], &mut out, &mut err),
            EXIT_USAGE
        );
        assert_eq!(
            run(
                [
                    "kpartite",
                    "construct",
                    "--k",
                    "3",
                    "--n",
                    "1",
                    "--method",
                    "theorem3"
                ],
                &mut out,
                &mut err
            ),
            EXIT_USAGE
        );
        assert_eq!(
            run(
                ["kpartite", "construct", "--k", "4", "--method", "solver"],
                &mut out,
                &mut err
            ),
            EXIT_USAGE
        );
    }
}
