pub mod spec;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use visipoly::census::{run_census, write_csv, write_json, CensusOptions};
use visipoly::corona_formula::{corona_visibility_polynomial, CoronaPolyReport};
use visipoly::cq::{absolute_clear_witness, admissible_vertices, is_disjoint_visible, maximal_absolute_cq_sets};
use visipoly::visibility::{mu, restricted_visibility_polynomial, visibility_polynomial};
use visipoly::{all_pairs_distances, corona, Graph, Limits, VertexSet};

pub use spec::{GraphSpec, SpecError};

/// Environment variable that overrides the enumeration order cap.
pub const MAX_N_ENV: &str = "VISIPOLY_MAX_N";

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "visipoly", version, about = "Mutual-visibility polynomials of graphs and corona products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the visibility polynomial of a graph
    Poly {
        /// Graph: g6:<str>, path:<n>, cycle:<n>, complete:<n>, file:<path> or corona(<a>,<b>)
        spec: String,
        /// Count only sets whose diameter is at most this value
        #[arg(long)]
        max_diameter: Option<usize>,
    },
    /// Print the mutual-visibility number of a graph
    Mu {
        spec: String,
    },
    /// Visibility polynomial of the corona product G ⊙ H
    CoronaPoly {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        /// Also print the individual terms of the closed form
        #[arg(long)]
        table: bool,
    },
    /// Maximal c_Q-visible sets for a reference set Q
    Cq {
        #[arg(long)]
        g: String,
        /// Comma-separated 0-based vertex list
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<usize>,
    },
    /// Decide whether every reference set has pairwise disjoint maximal sets
    AbsoluteClear {
        spec: String,
    },
    /// Evaluate every graph6 line of a file
    Census {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write records to a .csv or .json file
        #[arg(long)]
        out: Option<PathBuf>,
        /// Omit per-graph timings so output is reproducible
        #[arg(long)]
        no_timing: bool,
        /// Report disconnected graphs as line errors
        #[arg(long)]
        reject_disconnected: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Formula,
    Brute,
    Both,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<visipoly::Error> for Failure {
    fn from(e: visipoly::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        Failure::Domain(e.0)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the command line `args` (program name first) and returns the exit
/// status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let result = limits_from_env().and_then(|limits| dispatch(cli.command, &limits, stdout, stderr));
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_DOMAIN
        }
    }
}

fn limits_from_env() -> Result<Limits, Failure> {
    let mut limits = Limits::default();
    if let Ok(raw) = std::env::var(MAX_N_ENV) {
        limits.max_order = raw
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{MAX_N_ENV} must be a vertex count, found {raw:?}")))?;
    }
    Ok(limits)
}

fn graph(spec: &str) -> Result<Graph, Failure> {
    Ok(spec.parse::<GraphSpec>()?.resolve()?)
}

fn dispatch(cmd: Command, limits: &Limits, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Poly { spec, max_diameter } => {
            let g = graph(&spec)?;
            let dm = all_pairs_distances(&g)?;
            let p = match max_diameter {
                Some(d) => restricted_visibility_polynomial(&g, &dm, d, limits)?,
                None => visibility_polynomial(&g, &dm, limits)?,
            };
            writeln!(out, "{p}")?;
        }
        Command::Mu { spec } => {
            let g = graph(&spec)?;
            let dm = all_pairs_distances(&g)?;
            writeln!(out, "{}", mu(&g, &dm, limits)?)?;
        }
        Command::CoronaPoly { g, h, method, table } => {
            return corona_poly(&graph(&g)?, &graph(&h)?, method, table, limits, out);
        }
        Command::Cq { g, q } => {
            let g = graph(&g)?;
            for &v in &q {
                g.check_vertex(v)?;
            }
            let q: VertexSet = q.into_iter().collect();
            let dm = all_pairs_distances(&g)?;
            let family = maximal_absolute_cq_sets(&g, &dm, q)?;
            writeln!(out, "Q: {q}")?;
            writeln!(out, "admissible: {}", admissible_vertices(&g, &dm, q)?)?;
            writeln!(out, "gamma: {}", join_sets(&family.members))?;
            writeln!(out, "disjoint-visible: {}", is_disjoint_visible(&g, &dm, q)?)?;
        }
        Command::AbsoluteClear { spec } => {
            let g = graph(&spec)?;
            let dm = all_pairs_distances(&g)?;
            match absolute_clear_witness(&g, &dm, limits)? {
                None => writeln!(out, "absolute-clear: true")?,
                Some(q) => {
                    writeln!(out, "absolute-clear: false")?;
                    writeln!(out, "witness: {q}")?;
                }
            }
        }
        Command::Census {
            file,
            jobs,
            out: target,
            no_timing,
            reject_disconnected,
        } => {
            let format = match &target {
                Some(p) => Some(OutputFormat::from_path(p)?),
                None => None,
            };
            let opts = CensusOptions {
                jobs,
                skip_disconnected: !reject_disconnected,
                record_timing: !no_timing,
                limits: *limits,
                ..CensusOptions::default()
            };
            let input = File::open(&file).map_err(|e| Failure::Domain(format!("{}: {e}", file.display())))?;
            let result = run_census(BufReader::new(input), &opts)?;
            for e in &result.errors {
                writeln!(err, "line {}: {}", e.line, e.reason)?;
            }
            if let (Some(path), Some(format)) = (target, format) {
                let sink = BufWriter::new(File::create(&path)?);
                match format {
                    OutputFormat::Csv => write_csv(sink, &result.records)?,
                    OutputFormat::Json => write_json(sink, &result)?,
                }
            }
            write!(out, "{}", result.summary)?;
        }
    }
    Ok(EXIT_OK)
}

fn corona_poly(g: &Graph, h: &Graph, method: Method, table: bool, limits: &Limits, out: &mut dyn Write) -> Outcome {
    let report = match method {
        Method::Formula | Method::Both => Some(corona_visibility_polynomial(g, h, limits)?),
        Method::Brute => None,
    };
    let brute = match method {
        Method::Brute | Method::Both => {
            let (c, _) = corona(g, h)?;
            let dm = all_pairs_distances(&c)?;
            Some(visibility_polynomial(&c, &dm, limits)?)
        }
        Method::Formula => None,
    };
    if let Some(r) = &report {
        writeln!(out, "formula: {}", r.formula_poly)?;
    }
    if let Some(p) = &brute {
        writeln!(out, "brute: {p}")?;
    }
    let verdict = match (&report, &brute) {
        (Some(r), Some(p)) => Some(&r.formula_poly == p),
        _ => None,
    };
    if table {
        let r = match report {
            Some(r) => r,
            None => corona_visibility_polynomial(g, h, limits)?,
        };
        write_table(&r, out)?;
    }
    match verdict {
        Some(true) => writeln!(out, "AGREE")?,
        Some(false) => {
            writeln!(out, "DISAGREE")?;
            return Ok(EXIT_DOMAIN);
        }
        None => {}
    }
    Ok(EXIT_OK)
}

fn write_table(r: &CoronaPolyReport, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "V(G): {}", r.v_of_g)?;
    writeln!(out, "copies: {}", r.all_copies_term)?;
    writeln!(out, "per-base: {}", r.per_base_term)?;
    for t in &r.per_q_terms {
        let branch = if t.disjoint_visible { "disjoint" } else { "overlapping" };
        writeln!(out, "Q {}: {} [{branch}; gamma {}]", t.q(), t.term, join_sets(&t.family.members))?;
    }
    Ok(())
}

fn join_sets(sets: &[VertexSet]) -> String {
    if sets.is_empty() {
        return "none".to_string();
    }
    sets.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ")
}

#[derive(Clone, Copy)]
enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    fn from_path(p: &Path) -> Result<Self, Failure> {
        match p.extension().and_then(|e| e.to_str()) {
            Some("csv") => Ok(OutputFormat::Csv),
            Some("json") => Ok(OutputFormat::Json),
            _ => Err(Failure::Usage(format!("{}: --out must end in .csv or .json", p.display()))),
        }
    }
}
