//! Command-line front end.
//!
//! Exit codes: 0 when everything asserted holds, 1 on a verification mismatch
//! (or a lemma counterexample), 2 on usage or parse errors. A disagreement
//! with the printed closed-form polynomial is reported as a `WARNING` and
//! never affects the exit code.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::constructions::{
    build_onion, onion_transmissions, onion_wiener_closed_form, OnionParams,
};
use crate::enumerate::{enumerate_unicyclic_bipartite, EnumSpec, DEFAULT_MAX_N};
use crate::graph6;
use crate::verify::{
    extremal_table, lemma_harness, report_from_classes, structural_report, CheckOutcome, Direction,
    ExtremalReport, StructuralReport, TableRow, DEFAULT_SEED,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
    Graph6,
}

#[derive(Debug, Parser)]
#[command(
    name = "unicyclic-wiener",
    version,
    about = "Wiener index tools for unicyclic bipartite graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format (default depends on the subcommand)
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads for enumeration (default: available parallelism)
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Upper bound on p + q for enumeration
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Wiener index, transmissions and part sizes for graph6 lines
    Wiener {
        /// Input file (default: stdin)
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Build On(k,l,m) and print its closed-form values
    Onion { k: usize, l: usize, m: usize },
    /// Exhaustive extremal search for one (p,q)
    Verify {
        p: usize,
        q: usize,
        /// Check the maximum (default)
        #[arg(long, conflicts_with = "min")]
        max: bool,
        /// Check the minimum
        #[arg(long)]
        min: bool,
    },
    /// Minimum and maximum for every (p,q) up to a bound
    Table {
        /// Largest p (default: n-max / 2)
        #[arg(long)]
        p_max: Option<usize>,
        /// Largest p + q
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
    /// Every unicyclic bipartite graph with parts (p,q), one per isomorphism class
    Enumerate { p: usize, q: usize },
    /// Randomized checks of the coalescence identity and transplant monotonicity
    Harness {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
    },
}

/// Outcome of a subcommand before it is written out.
struct Output {
    text: String,
    code: i32,
}

#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return e.exit_code();
        }
    };
    match execute(&cli, stdin, stderr) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => File::create(path).and_then(|mut f| f.write_all(out.text.as_bytes())),
                None => stdout.write_all(out.text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_USAGE;
            }
            out.code
        }
        Err(UsageError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(
    cli: &Cli,
    stdin: &mut dyn BufRead,
    stderr: &mut dyn Write,
) -> Result<Output, UsageError> {
    if let Command::Wiener { input } = &cli.command {
        let format = cli.format.unwrap_or(Format::Text);
        return match input {
            Some(path) => cmd_wiener(BufReader::new(File::open(path)?), format, stderr),
            None => cmd_wiener(stdin, format, stderr),
        };
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(UsageError("--threads must be positive".into()));
        }
        pool = pool.num_threads(t);
    }
    let pool = pool.build()?;
    pool.install(|| match &cli.command {
        Command::Wiener { .. } => unreachable!("handled above"),
        Command::Onion { k, l, m } => cmd_onion(
            OnionParams::new(*k, *l, *m)?,
            cli.format.unwrap_or(Format::Text),
        ),
        Command::Verify { p, q, min, .. } => {
            let direction = if *min { Direction::Min } else { Direction::Max };
            let spec = EnumSpec::with_max_n(*p, *q, cli.max_n)?;
            cmd_verify(&spec, direction, cli.format.unwrap_or(Format::Text))
        }
        Command::Table { p_max, n_max } => {
            if *n_max > cli.max_n {
                return Err(UsageError(format!(
                    "--n-max {n_max} exceeds --max-n {}",
                    cli.max_n
                )));
            }
            let rows = extremal_table(p_max.unwrap_or(n_max / 2), *n_max)?;
            render_table(&rows, cli.format.unwrap_or(Format::Csv))
        }
        Command::Enumerate { p, q } => {
            let spec = EnumSpec::with_max_n(*p, *q, cli.max_n)?;
            cmd_enumerate(&spec, cli.format.unwrap_or(Format::Graph6))
        }
        Command::Harness { seed, trials } => {
            if *trials == 0 {
                return Err(UsageError("--trials must be at least 1".into()));
            }
            cmd_harness(*seed, *trials, cli.format.unwrap_or(Format::Text))
        }
    })
}

fn unsupported(format: Format, command: &str) -> UsageError {
    UsageError(format!("format {format:?} is not supported by {command}").to_lowercase())
}

/// Per-line result of the `wiener` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WienerRecord {
    pub line: usize,
    pub n: Option<usize>,
    pub wiener: Option<u64>,
    pub min_transmission: Option<u64>,
    pub max_transmission: Option<u64>,
    /// Part sizes, `None` for non-bipartite graphs.
    pub parts: Option<(usize, usize)>,
    pub bipartite: Option<bool>,
    pub error: Option<String>,
    /// True when the line failed to parse as graph6.
    #[serde(skip)]
    pub parse_error: bool,
}

impl WienerRecord {
    fn failed(line: usize, n: Option<usize>, error: String, parse_error: bool) -> Self {
        Self {
            line,
            n,
            wiener: None,
            min_transmission: None,
            max_transmission: None,
            parts: None,
            bipartite: None,
            error: Some(error),
            parse_error,
        }
    }
}

/// Evaluates one graph6 line. Lines are numbered from 1.
pub fn wiener_record(line_no: usize, line: &[u8]) -> WienerRecord {
    let g = match graph6::decode_bytes(line) {
        Ok(g) => g,
        Err(e) => return WienerRecord::failed(line_no, None, e.to_string(), true),
    };
    match g.transmissions() {
        Ok(t) => {
            let parts = g.bipartition().ok().flatten().map(|b| b.sizes());
            WienerRecord {
                line: line_no,
                n: Some(g.order()),
                wiener: Some(t.iter().sum::<u64>() / 2),
                min_transmission: t.iter().min().copied(),
                max_transmission: t.iter().max().copied(),
                bipartite: Some(parts.is_some()),
                parts,
                error: None,
                parse_error: false,
            }
        }
        Err(e) => WienerRecord::failed(line_no, Some(g.order()), e.to_string(), false),
    }
}

/// Records for every nonblank line of `input`.
pub fn wiener_records<R: BufRead>(input: R) -> io::Result<Vec<WienerRecord>> {
    let mut out = Vec::new();
    for (i, line) in input.split(b'\n').enumerate() {
        let line = line?;
        if line.iter().all(|b| b.is_ascii_whitespace()) {
            continue;
        }
        out.push(wiener_record(i + 1, &line));
    }
    Ok(out)
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map(T::to_string).unwrap_or_default()
}

fn cmd_wiener(
    input: impl BufRead,
    format: Format,
    stderr: &mut dyn Write,
) -> Result<Output, UsageError> {
    let records = wiener_records(input)?;
    let mut text = String::new();
    match format {
        Format::Text => {
            for r in &records {
                match &r.error {
                    Some(e) => writeln!(text, "line {}: error: {e}", r.line)?,
                    None => {
                        let parts = r
                            .parts
                            .map_or("non-bipartite".to_string(), |(p, q)| format!("({p},{q})"));
                        writeln!(
                            text,
                            "line {}: n={} W={} t_min={} t_max={} parts={parts}",
                            r.line,
                            opt(&r.n),
                            opt(&r.wiener),
                            opt(&r.min_transmission),
                            opt(&r.max_transmission),
                        )?;
                    }
                }
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "line",
                "n",
                "wiener",
                "t_min",
                "t_max",
                "p",
                "q",
                "bipartite",
                "error",
            ])?;
            for r in &records {
                w.write_record([
                    r.line.to_string(),
                    opt(&r.n),
                    opt(&r.wiener),
                    opt(&r.min_transmission),
                    opt(&r.max_transmission),
                    opt(&r.parts.map(|x| x.0)),
                    opt(&r.parts.map(|x| x.1)),
                    opt(&r.bipartite),
                    r.error.clone().unwrap_or_default(),
                ])?;
            }
            text = String::from_utf8(w.into_inner()?)?;
        }
        Format::Json => {
            for r in &records {
                writeln!(text, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Graph6 => return Err(unsupported(format, "wiener")),
    }
    let parse_errors: Vec<usize> = records
        .iter()
        .filter(|r| r.parse_error)
        .map(|r| r.line)
        .collect();
    for line in &parse_errors {
        let _ = writeln!(stderr, "error: line {line} is not valid graph6");
    }
    Ok(Output {
        text,
        code: if parse_errors.is_empty() {
            EXIT_OK
        } else {
            EXIT_USAGE
        },
    })
}

#[derive(Serialize)]
struct OnionRecord {
    k: usize,
    l: usize,
    m: usize,
    n: usize,
    graph6: String,
    wiener_closed_form: u64,
    wiener_bfs: u64,
    t_v: u64,
    t_ul: u64,
    t_v_bfs: u64,
    t_ul_bfs: u64,
    u: usize,
    v: usize,
    u_l: usize,
}

fn cmd_onion(params: OnionParams, format: Format) -> Result<Output, UsageError> {
    let onion = build_onion(params);
    let t = onion_transmissions(params);
    let rec = OnionRecord {
        k: params.k(),
        l: params.l(),
        m: params.m(),
        n: params.order(),
        graph6: graph6::encode(&onion.graph),
        wiener_closed_form: onion_wiener_closed_form(params),
        wiener_bfs: onion.graph.wiener_index()?,
        t_v: t.v,
        t_ul: t.u_l,
        t_v_bfs: onion.graph.transmission(onion.v)?,
        t_ul_bfs: onion.graph.transmission(onion.u_l)?,
        u: onion.u,
        v: onion.v,
        u_l: onion.u_l,
    };
    let consistent = rec.wiener_closed_form == rec.wiener_bfs
        && rec.t_v == rec.t_v_bfs
        && rec.t_ul == rec.t_ul_bfs;
    let mut text = String::new();
    match format {
        Format::Text => {
            writeln!(text, "{params}")?;
            writeln!(text, "graph6: {}", rec.graph6)?;
            writeln!(text, "n: {}", rec.n)?;
            writeln!(text, "vertices: u={} v={} u_l={}", rec.u, rec.v, rec.u_l)?;
            writeln!(text, "W (closed form): {}", rec.wiener_closed_form)?;
            writeln!(text, "W (bfs): {}", rec.wiener_bfs)?;
            writeln!(
                text,
                "t_v (closed form): {}  (bfs): {}",
                rec.t_v, rec.t_v_bfs
            )?;
            writeln!(
                text,
                "t_ul (closed form): {}  (bfs): {}",
                rec.t_ul, rec.t_ul_bfs
            )?;
        }
        Format::Graph6 => writeln!(text, "{}", rec.graph6)?,
        Format::Json => writeln!(text, "{}", serde_json::to_string(&rec)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.serialize(&rec)?;
            text = String::from_utf8(w.into_inner()?)?;
        }
    }
    Ok(Output {
        text,
        code: if consistent { EXIT_OK } else { EXIT_MISMATCH },
    })
}

fn outcome_str(o: CheckOutcome) -> &'static str {
    match o {
        CheckOutcome::Pass => "pass",
        CheckOutcome::Fail => "FAIL",
        CheckOutcome::Skipped => "skipped",
    }
}

/// Human-readable rendering of an extremal report (and structural checks for the maximum).
pub fn render_report_text(report: &ExtremalReport, structure: Option<&StructuralReport>) -> String {
    let mut s = String::new();
    let _ = (|| -> std::fmt::Result {
        writeln!(s, "direction: {}", report.direction)?;
        writeln!(s, "parts: ({},{})", report.p, report.q)?;
        writeln!(s, "classes: {}", report.classes)?;
        writeln!(s, "optimum W: {}", report.optimum)?;
        writeln!(s, "optimizers: {}", report.optimizers.len())?;
        for c in &report.optimizers {
            writeln!(s, "  {c}")?;
        }
        writeln!(
            s,
            "predicted: {} {}",
            report.predicted_name, report.predicted_graph
        )?;
        writeln!(s, "predicted W: {}", report.predicted_value)?;
        if let Some(w) = report.predicted_value_closed_form {
            writeln!(s, "closed form W: {w}")?;
        }
        if let Some(w) = report.predicted_value_polynomial {
            writeln!(s, "printed polynomial: {w}")?;
        }
        writeln!(s, "value_match: {}", report.value_match)?;
        writeln!(s, "graph_match: {}", report.graph_match)?;
        writeln!(s, "uniqueness: {}", report.uniqueness)?;
        writeln!(s, "optimizer_set_match: {}", report.optimizer_set_match)?;
        if let Some(m) = report.polynomial_match {
            writeln!(s, "polynomial_match: {m}")?;
        }
        if let Some(st) = structure {
            for mx in &st.maximizers {
                writeln!(s, "structure of {}:", mx.witness)?;
                for c in &mx.checks {
                    writeln!(s, "  {}: {}", c.name, outcome_str(c.outcome))?;
                }
            }
        }
        for w in report.warnings() {
            writeln!(s, "WARNING: {w}")?;
        }
        let ok = report.passed() && structure.is_none_or(StructuralReport::passed);
        writeln!(s, "result: {}", if ok { "PASS" } else { "FAIL" })
    })();
    s
}

#[derive(Serialize)]
struct VerifyRecord<'a> {
    #[serde(flatten)]
    report: &'a ExtremalReport,
    structure: Option<&'a StructuralReport>,
    warnings: Vec<String>,
    passed: bool,
}

fn cmd_verify(spec: &EnumSpec, direction: Direction, format: Format) -> Result<Output, UsageError> {
    let classes = enumerate_unicyclic_bipartite(spec)?;
    let report = report_from_classes(spec, direction, &classes)?;
    let structure = (direction == Direction::Max).then(|| structural_report(&report));
    let passed = report.passed() && structure.as_ref().is_none_or(StructuralReport::passed);
    let text = match format {
        Format::Text => render_report_text(&report, structure.as_ref()),
        Format::Json => {
            let rec = VerifyRecord {
                report: &report,
                structure: structure.as_ref(),
                warnings: report.warnings(),
                passed,
            };
            format!("{}\n", serde_json::to_string(&rec)?)
        }
        Format::Graph6 => report.optimizers.iter().map(|c| format!("{c}\n")).collect(),
        Format::Csv => return Err(unsupported(format, "verify")),
    };
    Ok(Output {
        text,
        code: if passed { EXIT_OK } else { EXIT_MISMATCH },
    })
}

/// Renders table rows. CSV carries a header row; JSON is one record per line.
fn render_table(rows: &[TableRow], format: Format) -> Result<Output, UsageError> {
    let mut text = String::new();
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                w.serialize(r)?;
            }
            text = String::from_utf8(w.into_inner()?)?;
        }
        Format::Json => {
            for r in rows {
                writeln!(text, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Text => {
            writeln!(
                text,
                "{:>3} {:>3} {:>7} {:>6} {:>6} {:>6} {:>10}  status",
                "p", "q", "classes", "min W", "max W", "closed", "polynomial"
            )?;
            for r in rows {
                writeln!(
                    text,
                    "{:>3} {:>3} {:>7} {:>6} {:>6} {:>6} {:>10}  {}",
                    r.p,
                    r.q,
                    r.classes,
                    r.min_wiener,
                    r.max_wiener,
                    r.max_closed_form,
                    r.polynomial,
                    if r.passed() { "ok" } else { "MISMATCH" }
                )?;
            }
            for r in rows.iter().filter(|r| !r.polynomial_match) {
                writeln!(
                    text,
                    "WARNING: printed polynomial gives {} at (p,q) = ({},{}), exhaustive max is {}",
                    r.polynomial, r.p, r.q, r.max_wiener
                )?;
            }
        }
        Format::Graph6 => return Err(unsupported(format, "table")),
    }
    Ok(Output {
        text,
        code: if rows.iter().all(TableRow::passed) {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        },
    })
}

fn cmd_enumerate(spec: &EnumSpec, format: Format) -> Result<Output, UsageError> {
    let classes = enumerate_unicyclic_bipartite(spec)?;
    let mut text = String::new();
    match format {
        Format::Graph6 => {
            let mut buf = Vec::new();
            crate::enumerate::write_graph6(&classes, &mut buf)?;
            text = String::from_utf8(buf)?;
        }
        Format::Text | Format::Csv | Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                graph6: &'a str,
                wiener: u64,
            }
            let mut w = csv::Writer::from_writer(Vec::new());
            for c in &classes {
                let row = Row {
                    graph6: c.canonical.as_str(),
                    wiener: c.graph.wiener_index()?,
                };
                match format {
                    Format::Json => writeln!(text, "{}", serde_json::to_string(&row)?)?,
                    Format::Csv => w.serialize(&row)?,
                    _ => writeln!(text, "{} W={}", row.graph6, row.wiener)?,
                }
            }
            if format == Format::Csv {
                text = String::from_utf8(w.into_inner()?)?;
            }
        }
    }
    Ok(Output {
        text,
        code: EXIT_OK,
    })
}

fn cmd_harness(seed: u64, trials: usize, format: Format) -> Result<Output, UsageError> {
    let summary = lemma_harness(seed, trials);
    let mut text = String::new();
    match format {
        Format::Text => {
            writeln!(text, "seed: {seed}")?;
            writeln!(
                text,
                "polansky: {} checked, {} counterexamples",
                summary.polansky_checked,
                summary.polansky_counterexamples.len()
            )?;
            writeln!(
                text,
                "du: {} checked, {} skipped (equal transmissions), {} counterexamples",
                summary.du_checked,
                summary.du_skipped,
                summary.du_counterexamples.len()
            )?;
            for c in summary
                .polansky_counterexamples
                .iter()
                .chain(&summary.du_counterexamples)
            {
                writeln!(
                    text,
                    "counterexample ({}): G={} at {:?}, H={} at {}: {}",
                    c.lemma, c.first, c.first_vertices, c.second, c.second_vertex, c.detail
                )?;
            }
            writeln!(text, "{} counterexamples", summary.counterexamples())?;
        }
        Format::Json => writeln!(text, "{}", serde_json::to_string(&summary)?)?,
        Format::Csv | Format::Graph6 => return Err(unsupported(format, "harness")),
    }
    let complete = summary.polansky_checked == trials && summary.du_checked == trials;
    Ok(Output {
        text,
        code: if summary.counterexamples() == 0 && complete {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        },
    })
}
