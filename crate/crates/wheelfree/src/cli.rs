//! Command-line front end.
//!
//! Exit codes: 0 when every input is in the class (or chordless, or free of
//! the configuration an oracle looks for), 1 when some input is not, 2 on
//! any error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use wheelfree_core::color::{color_chordless, color_isk4_wheel_free, edge_color_chordless_subcubic};
use wheelfree_core::oracle::{
    gen_in_class, oracle_chorded_cycle, oracle_chromatic, oracle_isk4, oracle_series_parallel, oracle_wheel,
    Certificate, GenKind, TooLarge,
};
use wheelfree_core::recognize::{
    classify_tree, decompose_isk4_wheel_free, leaf_classes, recognize_chordless, Decision,
};
use wheelfree_core::{ColorError, Graph};

use crate::catalogue::{catalogue, MAX_BUNDLED};
use crate::check::{cross_validate_all, Finding};
use crate::dot::tree_to_dot;
use crate::formats::{read_graphs, write_graph, Format};
use crate::report::{certificate_text, Record, RunReport, Verdict};

#[derive(Debug, Parser)]
#[command(
    name = "wheelfree",
    version,
    about = "Recognize and 3-color graphs with no induced K4-subdivision and no wheel"
)]
pub struct Cli {
    /// Print per-phase timings to standard error.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct Input {
    /// Input file; standard input when absent or "-".
    path: Option<PathBuf>,
    /// graph6 (one graph per line) or edge lists (blank-line separated).
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OracleKind {
    Isk4,
    Wheel,
    Chordless,
    Chromatic,
    Sp,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide membership in the {ISK4, wheel}-free class.
    Recognize {
        #[command(flatten)]
        input: Input,
        /// Write the decomposition trees as DOT to this file.
        #[arg(long)]
        tree: Option<PathBuf>,
        /// Print the certificate of each rejection.
        #[arg(long)]
        witness: bool,
    },
    /// 3-color graphs of the class; prints "vertex color" lines.
    Color {
        #[command(flatten)]
        input: Input,
        /// Report the verified coloring on standard error.
        #[arg(long)]
        check: bool,
    },
    /// Decide whether every cycle is chordless.
    Chordless {
        #[command(flatten)]
        input: Input,
        /// Also print a 3-coloring ("vertex color" lines).
        #[arg(long, conflicts_with = "edge_color")]
        color: bool,
        /// Also print a 3-edge-coloring ("u v color" lines); needs maximum degree 3.
        #[arg(long)]
        edge_color: bool,
    },
    /// Run a brute-force oracle.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        #[command(flatten)]
        input: Input,
    },
    /// Generate graphs of the class.
    Gen {
        /// sp, complete-bipartite, long-rich-square, line-of-chordless-subcubic or clique-glue.
        kind: String,
        /// Target size, or "minimal".
        #[arg(long, default_value = "minimal")]
        size: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of graphs, with consecutive seeds.
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Cross-validate every graph on n vertices against the oracles.
    Check {
        #[arg(long)]
        n: usize,
    },
}

/// Runs the CLI and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, stdin) {
        Ok(report) => {
            let _ = stdout.write_all(report.stdout().as_bytes());
            let _ = stderr.write_all(report.stderr(cli.timing).as_bytes());
            report.exit_code()
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            2
        }
    }
}

fn load(input: &Input, stdin: &mut dyn Read) -> anyhow::Result<Vec<Graph>> {
    let mut text = String::new();
    match &input.path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?;
        }
        _ => {
            stdin.read_to_string(&mut text).context("cannot read standard input")?;
        }
    }
    Ok(read_graphs(&text, input.format)?)
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> anyhow::Result<RunReport> {
    match &cli.command {
        Command::Recognize { input, tree, witness } => {
            let graphs = load(input, stdin)?;
            let (report, dot) = recognize(&graphs, *witness);
            if let Some(path) = tree {
                std::fs::write(path, dot).with_context(|| format!("cannot write {}", path.display()))?;
            }
            Ok(report)
        }
        Command::Color { input, check } => Ok(color(&load(input, stdin)?, *check)),
        Command::Chordless { input, color, edge_color } => Ok(chordless(&load(input, stdin)?, *color, *edge_color)),
        Command::Oracle { kind, input } => Ok(oracle(&load(input, stdin)?, *kind)),
        Command::Gen { kind, size, seed, count, format } => generate(kind, size, *seed, *count, *format),
        Command::Check { n } => check(*n),
    }
}

fn vertex_lines(colors: &[u8]) -> Vec<String> {
    colors.iter().enumerate().map(|(v, c)| format!("{v} {c}")).collect()
}

fn rejection_line(id: usize, decision: &Decision, witness: bool) -> String {
    let r = decision.rejection().unwrap();
    let mut line = format!("{id} NOT-IN-CLASS {}", r.reason.label());
    if witness {
        if let Some(c) = &r.certificate {
            line.push(' ');
            line.push_str(&certificate_text(c));
        } else if let Some(leaf) = &r.leaf {
            let vs: Vec<String> = leaf.iter().map(|v| v.to_string()).collect();
            line.push_str(&format!(" leaf {}", vs.join(" ")));
        }
    }
    line
}

fn decide(g: &Graph, record: &mut Record) -> Decision {
    let start = Instant::now();
    let tree = decompose_isk4_wheel_free(g);
    record.timing.decompose = start.elapsed();
    let start = Instant::now();
    let decision = match tree {
        Ok(t) => classify_tree(g, t),
        Err(r) => Decision::NotInClass(r),
    };
    record.timing.classify = start.elapsed();
    decision
}

fn recognize(graphs: &[Graph], witness: bool) -> (RunReport, String) {
    let mut report = RunReport::default();
    let mut dot = String::new();
    for (i, g) in graphs.iter().enumerate() {
        let id = i + 1;
        let mut record = Record::new(id, Verdict::InClass);
        let decision = decide(g, &mut record);
        match decision.tree() {
            Some(tree) => {
                let mut labels: Vec<&str> = Vec::new();
                for c in leaf_classes(tree) {
                    if !labels.contains(&c.label()) {
                        labels.push(c.label());
                    }
                }
                record.lines.push(format!("{id} IN-CLASS leaf={} nodes={}", labels.join(","), tree.len()));
                dot.push_str(&tree_to_dot(tree));
            }
            None => {
                record.verdict = Verdict::NotInClass;
                record.lines.push(rejection_line(id, &decision, witness));
            }
        }
        report.records.push(record);
    }
    (report, dot)
}

fn color(graphs: &[Graph], check: bool) -> RunReport {
    let mut report = RunReport { blocks: true, ..RunReport::default() };
    for (i, g) in graphs.iter().enumerate() {
        let id = i + 1;
        let mut record = Record::new(id, Verdict::InClass);
        let decision = decide(g, &mut record);
        if decision.is_in_class() {
            let start = Instant::now();
            let result = color_isk4_wheel_free(g);
            record.timing.color = start.elapsed();
            match result {
                Ok(c) => {
                    if check {
                        record.notes.push(format!("{id} proper={} colors={}", c.is_proper(g), c.colors_used()));
                    }
                    record.lines = vertex_lines(&c.colors);
                }
                Err(e) => {
                    record.verdict = Verdict::Error;
                    record.notes.push(format!("{id} error: {e}"));
                }
            }
        } else {
            record.verdict = Verdict::NotInClass;
            record.notes.push(rejection_line(id, &decision, false));
        }
        report.records.push(record);
    }
    report
}

fn chordless(graphs: &[Graph], color: bool, edge_color: bool) -> RunReport {
    let mut report = RunReport { blocks: color || edge_color, ..RunReport::default() };
    for (i, g) in graphs.iter().enumerate() {
        let id = i + 1;
        let mut record = Record::new(id, Verdict::InClass);
        let start = Instant::now();
        let decision = recognize_chordless(g);
        record.timing.decompose = start.elapsed();
        if let Some(r) = decision.rejection() {
            record.verdict = Verdict::NotInClass;
            let detail = r.certificate.as_ref().map_or_else(|| r.reason.label().to_string(), certificate_text);
            record.lines.push(format!("{id} NOT-CHORDLESS {detail}"));
            report.records.push(record);
            continue;
        }
        record.lines.push(format!("{id} CHORDLESS"));
        let start = Instant::now();
        let result: Result<Vec<String>, ColorError> = if color {
            color_chordless(g).map(|c| vertex_lines(&c.colors))
        } else if edge_color {
            edge_color_chordless_subcubic(g)
                .map(|ec| ec.edges.iter().zip(&ec.colors).map(|((u, v), c)| format!("{u} {v} {c}")).collect())
        } else {
            Ok(Vec::new())
        };
        record.timing.color = start.elapsed();
        match result {
            Ok(lines) => record.lines.extend(lines),
            Err(e) => {
                record.verdict = Verdict::Error;
                record.notes.push(format!("{id} error: {e}"));
            }
        }
        report.records.push(record);
    }
    report
}

fn oracle(graphs: &[Graph], kind: OracleKind) -> RunReport {
    let mut report = RunReport::default();
    for (i, g) in graphs.iter().enumerate() {
        let id = i + 1;
        let found = |c: Option<Certificate>| match c {
            Some(c) => (Verdict::NotInClass, certificate_text(&c)),
            None => (Verdict::InClass, "none".to_string()),
        };
        let outcome: Result<(Verdict, String), TooLarge> = match kind {
            OracleKind::Isk4 => oracle_isk4(g).map(found),
            OracleKind::Wheel => oracle_wheel(g).map(found),
            OracleKind::Chordless => Ok(found(oracle_chorded_cycle(g))),
            OracleKind::Chromatic => oracle_chromatic(g).map(|k| (Verdict::InClass, k.to_string())),
            OracleKind::Sp => oracle_series_parallel(g)
                .map(|sp| (if sp { Verdict::InClass } else { Verdict::NotInClass }, sp.to_string())),
        };
        let record = match outcome {
            Ok((verdict, text)) => {
                let mut r = Record::new(id, verdict);
                r.lines.push(format!("{id} {text}"));
                r
            }
            Err(e) => {
                let mut r = Record::new(id, Verdict::Error);
                r.notes.push(format!("{id} error: {e}"));
                r
            }
        };
        report.records.push(record);
    }
    report
}

fn generate(kind: &str, size: &str, seed: u64, count: u64, format: Format) -> anyhow::Result<RunReport> {
    let kind = GenKind::parse(kind).ok_or_else(|| {
        let known: Vec<&str> = GenKind::ALL.iter().map(|k| k.label()).collect();
        anyhow!("unknown kind {kind:?}; expected one of {}", known.join(", "))
    })?;
    let size = match size {
        "minimal" => kind.min_size(),
        s => s.parse().with_context(|| format!("invalid size {s:?}"))?,
    };
    let mut report = RunReport::default();
    for k in 0..count {
        let g = gen_in_class(kind, size, seed.wrapping_add(k))?;
        let mut record = Record::new(k as usize + 1, Verdict::InClass);
        record.lines.push(write_graph(&g, format).trim_end().to_string());
        report.records.push(record);
    }
    report.blocks = format == Format::Edges;
    Ok(report)
}

fn check(n: usize) -> anyhow::Result<RunReport> {
    if n > MAX_BUNDLED {
        return Err(anyhow!("check supports n <= {MAX_BUNDLED}"));
    }
    let graphs = catalogue(n)?;
    let findings = cross_validate_all(&graphs);
    let mut record = Record::new(1, Verdict::InClass);
    let (mut disagreements, mut caps) = (0, 0);
    for f in &findings {
        match f {
            Finding::Disagreement { check, graph6 } => {
                disagreements += 1;
                record.lines.push(format!("disagreement {check} {graph6}"));
            }
            Finding::Cap { oracle, graph6, cap } => {
                caps += 1;
                record.lines.push(format!("cap {oracle} {graph6} (cap {cap})"));
            }
        }
    }
    let mut summary = format!("{} graphs, {disagreements} disagreements", graphs.len());
    if caps > 0 {
        summary.push_str(&format!(", {caps} cap violations"));
        record.verdict = Verdict::Error;
    } else if disagreements > 0 {
        record.verdict = Verdict::NotInClass;
    }
    record.lines.push(summary);
    Ok(RunReport { records: vec![record], blocks: false })
}
