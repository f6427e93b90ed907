use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use vnumber_core::domination::invariants;
use vnumber_core::family::FamilySpec;
use vnumber_core::format::{parse_edge_list, parse_graph6_lines, to_graph6};
use vnumber_core::hamming::{
    code_is_efficient_dominating, hamming_code_with_layout, hamming_graph_invariants, v_number_bounds_hamming,
    ParityLayout,
};
use vnumber_core::homology::Field;
use vnumber_core::ideal::{associated_primes, v_number_bruteforce, ORACLE_CAP};
use vnumber_core::regularity::{betti_table_with_cap, BettiEntry, REGULARITY_CAP};
use vnumber_core::scan::{csv_summary, scan, Check, ScanConfig, ScanSource, DEFAULT_ORACLE_CAP};
use vnumber_core::vnumber::{v_number, v_number_local};
use vnumber_core::{Error, Graph, VertexSet};

#[derive(Parser)]
#[command(name = "vnumber", version, about = "v-numbers and regularity of closed neighborhood ideals")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Graph file (graph6 lines or an edge list); `-` reads stdin.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Graph family such as `path:6`, `kpartite:2,3`, `connected:7`.
    #[arg(long, global = true)]
    family: Option<String>,
    /// Homology field for regularity.
    #[arg(long, global = true, default_value = "gf2", value_parser = parse_field)]
    field: Field,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Per-graph time limit for `scan`; 0 disables it.
    #[arg(long, global = true, default_value_t = 30)]
    timeout_secs: u64,
    /// Output path (`scan` writes JSON lines there and a CSV beside it).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse()
}

#[derive(Subcommand)]
enum Command {
    /// Domination, vertex cover, independence and matching numbers.
    Invariants,
    /// v-number from minimal dominating sets and private neighbors.
    Vnumber {
        /// Report the local value for this minimal dominating set instead,
        /// e.g. `1,4`.
        #[arg(long, value_delimiter = ',')]
        dominating_set: Option<Vec<usize>>,
    },
    /// v-number by sweeping colon ideals (N_G : t_A).
    Oracle {
        #[arg(long, default_value_t = ORACLE_CAP)]
        cap: usize,
    },
    /// Regularity, projective dimension and multigraded Betti numbers.
    Regularity {
        #[arg(long, default_value_t = REGULARITY_CAP)]
        cap: usize,
    },
    /// Hamming code H_q(r) and invariants of its Hamming graph.
    Hamming {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = Layout::Systematic)]
        layout: Layout,
        /// Include the codeword list.
        #[arg(long)]
        codewords: bool,
    },
    /// Check the known inequalities and v <= reg over a corpus.
    Scan {
        /// Skip graphs with more vertices.
        #[arg(long)]
        max_n: Option<usize>,
        /// Comma-separated subset of checks (default: all).
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        #[arg(long, default_value_t = REGULARITY_CAP)]
        reg_cap: usize,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Layout {
    Systematic,
    Lexicographic,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

fn run(cli: Cli) -> CliResult<u8> {
    let g = &cli.global;
    if let Some(jobs) = g.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global()?;
    }
    match &cli.command {
        Command::Scan {
            max_n,
            checks,
            reg_cap,
            oracle_cap,
        } => run_scan(g, *max_n, checks.as_deref(), *reg_cap, *oracle_cap),
        Command::Hamming { q, r, layout, codewords } => {
            let layout = match layout {
                Layout::Systematic => ParityLayout::Systematic,
                Layout::Lexicographic => ParityLayout::Lexicographic,
            };
            run_hamming(g, *q, *r, layout, *codewords)?;
            Ok(0)
        }
        command => {
            let graphs = load_graphs(g)?;
            let mut out = Output::new(g)?;
            for graph in &graphs {
                match command {
                    Command::Invariants => {
                        let report = invariants(graph)?;
                        out.emit(&report, || {
                            vec![
                                ("graph6", key(graph)),
                                ("gamma", report.gamma.to_string()),
                                ("tau", report.tau.to_string()),
                                ("indep", report.indep.to_string()),
                                ("matching", report.matching.to_string()),
                            ]
                        })?;
                    }
                    Command::Vnumber { dominating_set: Some(d) } => {
                        let d: VertexSet = d.iter().copied().collect();
                        let w = v_number_local(graph, &d)?;
                        out.emit(&w, || {
                            vec![
                                ("graph6", key(graph)),
                                ("value", w.value.to_string()),
                                ("D", w.dominating_set.to_string()),
                                ("U", w.private_choice.to_string()),
                                ("expansion", w.expansion.to_string()),
                            ]
                        })?;
                    }
                    Command::Vnumber { dominating_set: None } => {
                        let r = v_number(graph);
                        out.emit(&r, || {
                            vec![
                                ("graph6", key(graph)),
                                ("value", r.witness.value.to_string()),
                                ("D", r.witness.dominating_set.to_string()),
                                ("U", r.witness.private_choice.to_string()),
                                ("expansion", r.witness.expansion.to_string()),
                            ]
                        })?;
                    }
                    Command::Oracle { cap } => {
                        let w = v_number_bruteforce(graph, *cap)?;
                        let report = OracleReport {
                            v_bruteforce: w.value,
                            witness_a: w.multiplier,
                            witness_d: w.prime,
                            associated_prime_count: associated_primes(graph).len(),
                        };
                        out.emit(&report, || {
                            vec![
                                ("graph6", key(graph)),
                                ("v_bruteforce", report.v_bruteforce.to_string()),
                                ("witness_A", report.witness_a.to_string()),
                                ("witness_D", report.witness_d.to_string()),
                                ("associated_prime_count", report.associated_prime_count.to_string()),
                            ]
                        })?;
                    }
                    Command::Regularity { cap } => {
                        let table = betti_table_with_cap(graph, g.field, *cap)?;
                        let report = RegularityReport {
                            reg: table.regularity(),
                            pd: table.projective_dimension(),
                            field: table.field,
                            betti: table.entries,
                        };
                        out.emit(&report, || {
                            vec![
                                ("graph6", key(graph)),
                                ("reg", report.reg.to_string()),
                                ("pd", report.pd.to_string()),
                                ("field", report.field.to_string()),
                            ]
                        })?;
                    }
                    Command::Scan { .. } | Command::Hamming { .. } => unreachable!(),
                }
            }
            out.finish()?;
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct OracleReport {
    v_bruteforce: usize,
    #[serde(rename = "witness_A")]
    witness_a: VertexSet,
    #[serde(rename = "witness_D")]
    witness_d: VertexSet,
    associated_prime_count: usize,
}

#[derive(Serialize)]
struct RegularityReport {
    reg: usize,
    pd: usize,
    field: Field,
    betti: Vec<BettiEntry>,
}

#[derive(Serialize)]
struct HammingReport {
    q: u32,
    r: usize,
    n: usize,
    k: usize,
    delta: usize,
    codeword_count: u128,
    perfect: Option<bool>,
    efficient_dominating: Option<bool>,
    gamma: u128,
    indep: u128,
    tau: u128,
    v_lower: u128,
    v_upper: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    codewords: Option<Vec<String>>,
}

fn key(graph: &Graph) -> String {
    to_graph6(graph).unwrap_or_default()
}

/// JSON lines, or CSV with a header taken from the first row.
struct Output {
    format: Format,
    sink: Box<dyn Write>,
    csv: Option<csv::Writer<Vec<u8>>>,
}

impl Output {
    fn new(g: &Global) -> CliResult<Self> {
        let sink: Box<dyn Write> = match &g.out {
            Some(path) => Box::new(io::BufWriter::new(
                std::fs::File::create(path).map_err(|e| format!("{}: {e}", path.display()))?,
            )),
            None => Box::new(io::stdout().lock()),
        };
        Ok(Output {
            format: g.format,
            sink,
            csv: None,
        })
    }

    fn emit<T: Serialize>(&mut self, value: &T, row: impl FnOnce() -> Vec<(&'static str, String)>) -> CliResult<()> {
        match self.format {
            Format::Json => {
                serde_json::to_writer(&mut self.sink, value)?;
                writeln!(self.sink)?;
            }
            Format::Csv => {
                let row = row();
                let writer = self.csv.get_or_insert_with(|| {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(row.iter().map(|(k, _)| *k)).expect("in-memory write");
                    w
                });
                writer.write_record(row.iter().map(|(_, v)| v.as_str()))?;
            }
        }
        Ok(())
    }

    fn finish(mut self) -> CliResult<()> {
        if let Some(w) = self.csv.take() {
            self.sink.write_all(&w.into_inner()?)?;
        }
        self.sink.flush()?;
        Ok(())
    }
}

fn read_input(path: &PathBuf) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?)
    }
}

/// Graphs from `--family`, or from `--input` as graph6 lines, falling back
/// to the edge-list format when no line is valid graph6.
fn load_graphs(g: &Global) -> CliResult<Vec<Graph>> {
    match (&g.input, &g.family) {
        (Some(_), Some(_)) => Err("use either --input or --family, not both".into()),
        (None, None) => Err("no graph given: pass --input or --family".into()),
        (None, Some(spec)) => Ok(spec.parse::<FamilySpec>()?.graphs()?),
        (Some(path), None) => {
            let text = read_input(path)?;
            let lines = parse_graph6_lines(&text);
            if !lines.is_empty() && lines.iter().all(|l| l.graph.is_err()) {
                if let Ok(graph) = parse_edge_list(&text) {
                    return Ok(vec![graph]);
                }
            }
            let mut graphs = Vec::new();
            for line in lines {
                match line.graph {
                    Ok(graph) => graphs.push(graph),
                    Err(e) => eprintln!("warning: skipping line {}: {e}", line.line),
                }
            }
            Ok(graphs)
        }
    }
}

fn run_hamming(g: &Global, q: u32, r: usize, layout: ParityLayout, with_codewords: bool) -> CliResult<()> {
    let code = hamming_code_with_layout(q, r, layout)?;
    let inv = hamming_graph_invariants(code.n, q)?;
    let bounds = v_number_bounds_hamming(q, r)?;
    let report = HammingReport {
        q,
        r,
        n: code.n,
        k: code.k,
        delta: code.min_dist,
        codeword_count: code.codeword_count()?,
        perfect: code.is_perfect(),
        efficient_dominating: code_is_efficient_dominating(&code),
        gamma: inv.gamma.value(),
        indep: inv.indep,
        tau: inv.tau,
        v_lower: bounds.lower,
        v_upper: bounds.upper,
        codewords: if with_codewords { code.codeword_strings() } else { None },
    };
    let opt = |b: Option<bool>| b.map_or(String::new(), |b| b.to_string());
    let mut out = Output::new(g)?;
    out.emit(&report, || {
        vec![
            ("q", q.to_string()),
            ("r", r.to_string()),
            ("n", report.n.to_string()),
            ("k", report.k.to_string()),
            ("delta", report.delta.to_string()),
            ("codeword_count", report.codeword_count.to_string()),
            ("perfect", opt(report.perfect)),
            ("efficient_dominating", opt(report.efficient_dominating)),
            ("gamma", report.gamma.to_string()),
            ("indep", report.indep.to_string()),
            ("tau", report.tau.to_string()),
            ("v_lower", report.v_lower.to_string()),
            ("v_upper", report.v_upper.to_string()),
        ]
    })?;
    out.finish()
}

fn run_scan(
    g: &Global,
    max_n: Option<usize>,
    checks: Option<&[String]>,
    reg_cap: usize,
    oracle_cap: usize,
) -> CliResult<u8> {
    let source = match (&g.input, &g.family) {
        (Some(_), Some(_)) => return Err("use either --input or --family, not both".into()),
        (None, None) => return Err("no graphs given: pass --input or --family".into()),
        (None, Some(spec)) => ScanSource::Family(spec.parse()?),
        (Some(path), None) if path.as_os_str() == "-" => ScanSource::Graph6Text(read_input(path)?),
        (Some(path), None) => ScanSource::Graph6File(path.clone()),
    };
    let mut config = ScanConfig::new(source);
    config.max_n = max_n;
    config.field = g.field;
    config.jobs = g.jobs;
    config.timeout = (g.timeout_secs > 0).then(|| Duration::from_secs(g.timeout_secs));
    config.regularity_cap = reg_cap;
    config.oracle_cap = oracle_cap;
    config.out = g.out.clone();
    if let Some(names) = checks {
        config.checks = names.iter().map(|n| n.parse::<Check>()).collect::<Result<_, Error>>()?;
    }
    let outcome = scan(&config)?;
    let mut stdout = io::stdout().lock();
    match g.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut stdout, &outcome.summary)?;
            writeln!(stdout)?;
        }
        Format::Csv => stdout.write_all(csv_summary(&outcome.records).as_bytes())?,
    }
    for v in &outcome.summary.confirmed_violations {
        eprintln!("violation: {} fails {}", v.graph6, v.violations.join(", "));
    }
    Ok(outcome.summary.exit_code() as u8)
}
