//! Corpus scans: compute the invariants of every input graph, check the
//! known inequalities and the conjectured `v ≤ reg`, and persist results.
//!
//! Regularity is computed over GF(2) first. A record with any violation
//! has its regularity recomputed over the rationals and its checks
//! re-evaluated before anything is reported as confirmed.
//!
//! Output is a JSON-lines file keyed by graph6 string plus a CSV summary
//! next to it. Records already in the file are not written again, and the
//! CSV is rebuilt from the whole file, so rescanning is a no-op.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::mpsc;
use std::thread;
use std::time::Duration;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::domination::{domination_number, independence_number, matching_number, vertex_cover_number};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::format::{parse_graph6_lines, to_graph6};
use crate::graph::Graph;
use crate::homology::Field;
use crate::ideal::v_number_bruteforce;
use crate::regularity::{betti_table_with_cap, REGULARITY_CAP};
use crate::vnumber::v_number;

pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(30);

/// Graphs up to this size are also checked against the colon-ideal sweep.
pub const DEFAULT_ORACLE_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Check {
    #[serde(rename = "gamma_le_v")]
    GammaLeV,
    #[serde(rename = "v_le_tau")]
    VLeTau,
    #[serde(rename = "v_le_2a")]
    VLeTwoA,
    #[serde(rename = "reg_ge_a")]
    RegGeA,
    /// Only for bipartite or very well-covered graphs.
    #[serde(rename = "reg_ge_tau")]
    RegGeTau,
    #[serde(rename = "chordal_reg_eq_tau")]
    ChordalRegEqTau,
    #[serde(rename = "tree_reg_eq_a_eq_tau")]
    TreeRegEqAEqTau,
    #[serde(rename = "conjecture_v_le_reg")]
    ConjectureVLeReg,
    #[serde(rename = "oracle_mismatch")]
    OracleMismatch,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::GammaLeV,
        Check::VLeTau,
        Check::VLeTwoA,
        Check::RegGeA,
        Check::RegGeTau,
        Check::ChordalRegEqTau,
        Check::TreeRegEqAEqTau,
        Check::ConjectureVLeReg,
        Check::OracleMismatch,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::GammaLeV => "gamma_le_v",
            Check::VLeTau => "v_le_tau",
            Check::VLeTwoA => "v_le_2a",
            Check::RegGeA => "reg_ge_a",
            Check::RegGeTau => "reg_ge_tau",
            Check::ChordalRegEqTau => "chordal_reg_eq_tau",
            Check::TreeRegEqAEqTau => "tree_reg_eq_a_eq_tau",
            Check::ConjectureVLeReg => "conjecture_v_le_reg",
            Check::OracleMismatch => "oracle_mismatch",
        }
    }

    fn uses_regularity(self) -> bool {
        matches!(
            self,
            Check::RegGeA | Check::RegGeTau | Check::ChordalRegEqTau | Check::TreeRegEqAEqTau | Check::ConjectureVLeReg
        )
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub connected: bool,
    pub bipartite: bool,
    pub chordal: bool,
    pub tree: bool,
    pub very_well_covered: bool,
}

impl Flags {
    pub fn of(graph: &Graph) -> Self {
        Flags {
            connected: graph.is_connected(),
            bipartite: graph.is_bipartite(),
            chordal: graph.is_chordal(),
            tree: graph.is_tree(),
            very_well_covered: graph.is_very_well_covered(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Timeout,
    /// Over the regularity cap; `reg` is absent and reg checks are skipped.
    RegUnavailable,
    /// Non-bipartite graph over the matching search cap.
    MatchingUnavailable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub gamma: Option<usize>,
    pub tau: Option<usize>,
    pub indep: Option<usize>,
    pub matching: Option<usize>,
    pub v: Option<usize>,
    pub reg: Option<usize>,
    pub flags: Flags,
    pub violations: Vec<String>,
    pub status: Status,
}

impl ScanRecord {
    /// `reg - v` when both are known.
    pub fn gap(&self) -> Option<i64> {
        Some(self.reg? as i64 - self.v? as i64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanSource {
    Graph6File(PathBuf),
    Graph6Text(String),
    Family(FamilySpec),
    Graphs(Vec<Graph>),
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub source: ScanSource,
    /// Graphs with more vertices are skipped.
    pub max_n: Option<usize>,
    pub field: Field,
    pub checks: Vec<Check>,
    /// Worker count; `None` uses all cores.
    pub jobs: Option<usize>,
    /// Per-graph limit; `None` waits indefinitely.
    pub timeout: Option<Duration>,
    pub regularity_cap: usize,
    pub oracle_cap: usize,
    /// JSON-lines output; the CSV summary goes next to it.
    pub out: Option<PathBuf>,
}

impl ScanConfig {
    pub fn new(source: ScanSource) -> Self {
        ScanConfig {
            source,
            max_n: None,
            field: Field::Gf2,
            checks: Check::ALL.to_vec(),
            jobs: None,
            timeout: Some(DEFAULT_TIMEOUT),
            regularity_cap: REGULARITY_CAP,
            oracle_cap: DEFAULT_ORACLE_CAP,
            out: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skipped {
    /// Input line for graph6 input, position otherwise.
    pub line: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfirmedViolation {
    pub graph6: String,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub graphs: usize,
    pub ok: usize,
    pub timeouts: usize,
    pub reg_unavailable: usize,
    pub matching_unavailable: usize,
    pub skipped: Vec<Skipped>,
    /// Records where both `v` and `reg` are known.
    pub conjecture_checked: usize,
    pub max_gap: Option<i64>,
    pub min_gap: Option<i64>,
    /// Records whose GF(2) values flagged a violation and were recomputed
    /// over the rationals.
    pub rational_rechecks: usize,
    pub confirmed_violations: Vec<ConfirmedViolation>,
    /// Records appended to the output file (others were already present).
    pub appended: Option<usize>,
}

impl ScanSummary {
    /// 0 without confirmed violations, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.confirmed_violations.is_empty() {
            0
        } else {
            1
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanOutcome {
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
}

struct Values {
    gamma: usize,
    tau: usize,
    indep: usize,
    matching: Option<usize>,
    v: usize,
    oracle: Option<usize>,
    /// `γ ≤ v` needs every vertex to have a neighbor; `K_1` has γ = 1, v = 0.
    has_isolated: bool,
}

fn violations(values: &Values, reg: Option<usize>, flags: &Flags, checks: &[Check]) -> Vec<String> {
    let v = values.v;
    let tau = values.tau;
    let a = values.matching;
    let mut out = Vec::new();
    for &check in checks {
        let failed = match check {
            Check::GammaLeV => !values.has_isolated && values.gamma > v,
            Check::VLeTau => v > tau,
            Check::VLeTwoA => a.is_some_and(|a| v > 2 * a),
            Check::RegGeA => matches!((reg, a), (Some(r), Some(a)) if r < a),
            Check::RegGeTau => (flags.bipartite || flags.very_well_covered) && reg.is_some_and(|r| r < tau),
            Check::ChordalRegEqTau => flags.chordal && reg.is_some_and(|r| r != tau),
            Check::TreeRegEqAEqTau => flags.tree && (reg.is_some_and(|r| r != tau) || a.is_some_and(|a| a != tau)),
            Check::ConjectureVLeReg => reg.is_some_and(|r| v > r),
            Check::OracleMismatch => values.oracle.is_some_and(|o| o != v),
        };
        if failed {
            out.push(check.name().to_string());
        }
    }
    out
}

struct Analysis {
    record: ScanRecord,
    rechecked: bool,
}

fn analyze(graph: &Graph, graph6: String, flags: Flags, config: &AnalysisConfig) -> Analysis {
    let n = graph.vertex_count();
    let matching = matching_number(graph).ok().map(|m| m.size);
    let values = Values {
        gamma: domination_number(graph).value,
        tau: vertex_cover_number(graph).value,
        indep: independence_number(graph).value,
        matching,
        v: v_number(graph).value(),
        oracle: (n <= config.oracle_cap)
            .then(|| v_number_bruteforce(graph, config.oracle_cap).ok().map(|w| w.value))
            .flatten(),
        has_isolated: graph.vertices().iter().any(|u| graph.degree(u) == 0),
    };
    let regularity = |field| betti_table_with_cap(graph, field, config.regularity_cap).ok().map(|t| t.regularity());
    let mut reg = regularity(config.field);
    let mut found = violations(&values, reg, &flags, &config.checks);
    let mut rechecked = false;
    let touches_reg = found.iter().any(|name| {
        Check::from_str(name).is_ok_and(Check::uses_regularity)
    });
    if config.field == Field::Gf2 && touches_reg {
        reg = regularity(Field::Rational);
        found = violations(&values, reg, &flags, &config.checks);
        rechecked = true;
    }
    let status = if reg.is_none() {
        Status::RegUnavailable
    } else if matching.is_none() {
        Status::MatchingUnavailable
    } else {
        Status::Ok
    };
    Analysis {
        record: ScanRecord {
            graph6,
            n,
            edges: graph.edge_count(),
            gamma: Some(values.gamma),
            tau: Some(values.tau),
            indep: Some(values.indep),
            matching,
            v: Some(values.v),
            reg,
            flags,
            violations: found,
            status,
        },
        rechecked,
    }
}

#[derive(Clone)]
struct AnalysisConfig {
    field: Field,
    checks: Vec<Check>,
    regularity_cap: usize,
    oracle_cap: usize,
}

/// Runs `analyze` on its own thread so a slow graph can be abandoned. The
/// abandoned thread is left to finish in the background.
fn analyze_with_timeout(graph: &Graph, graph6: String, config: &AnalysisConfig, timeout: Option<Duration>) -> Analysis {
    let flags = Flags::of(graph);
    let Some(limit) = timeout else {
        return analyze(graph, graph6, flags, config);
    };
    let (tx, rx) = mpsc::channel();
    let (g, key, cfg) = (graph.clone(), graph6.clone(), config.clone());
    thread::spawn(move || {
        let _ = tx.send(analyze(&g, key, flags, &cfg));
    });
    match rx.recv_timeout(limit) {
        Ok(analysis) => analysis,
        Err(_) => Analysis {
            record: ScanRecord {
                graph6,
                n: graph.vertex_count(),
                edges: graph.edge_count(),
                gamma: None,
                tau: None,
                indep: None,
                matching: None,
                v: None,
                reg: None,
                flags,
                violations: Vec::new(),
                status: Status::Timeout,
            },
            rechecked: false,
        },
    }
}

fn load(source: &ScanSource) -> Result<(Vec<(usize, Graph)>, Vec<Skipped>)> {
    let mut skipped = Vec::new();
    let graphs = match source {
        ScanSource::Graph6File(path) => {
            let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
            return load(&ScanSource::Graph6Text(text));
        }
        ScanSource::Graph6Text(text) => {
            let mut graphs = Vec::new();
            for line in parse_graph6_lines(text) {
                match line.graph {
                    Ok(g) => graphs.push((line.line, g)),
                    Err(e) => skipped.push(Skipped {
                        line: line.line,
                        reason: e.to_string(),
                    }),
                }
            }
            graphs
        }
        ScanSource::Family(spec) => spec.graphs()?.into_iter().enumerate().map(|(i, g)| (i + 1, g)).collect(),
        ScanSource::Graphs(graphs) => graphs.iter().cloned().enumerate().map(|(i, g)| (i + 1, g)).collect(),
    };
    Ok((graphs, skipped))
}

/// Scans every input graph. Operational failures (unreadable input, bad
/// family, unwritable output) are errors; malformed graph6 lines are
/// skipped and listed in the summary.
pub fn scan(config: &ScanConfig) -> Result<ScanOutcome> {
    let (loaded, mut skipped) = load(&config.source)?;
    let mut seen = HashSet::new();
    let mut work: Vec<(String, Graph)> = Vec::new();
    for (line, graph) in loaded {
        if let Some(max_n) = config.max_n {
            if graph.vertex_count() > max_n {
                skipped.push(Skipped {
                    line,
                    reason: format!("{} vertices exceeds max_n {max_n}", graph.vertex_count()),
                });
                continue;
            }
        }
        let key = match to_graph6(&graph) {
            Ok(key) => key,
            Err(e) => {
                skipped.push(Skipped { line, reason: e.to_string() });
                continue;
            }
        };
        if seen.insert(key.clone()) {
            work.push((key, graph));
        }
    }
    for s in &skipped {
        eprintln!("warning: skipping input {}: {}", s.line, s.reason);
    }

    let analysis_config = AnalysisConfig {
        field: config.field,
        checks: config.checks.clone(),
        regularity_cap: config.regularity_cap,
        oracle_cap: config.oracle_cap,
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = config.jobs {
        builder = builder.num_threads(jobs.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start worker pool: {e}")))?;
    let analyses: Vec<Analysis> = pool.install(|| {
        work.into_par_iter()
            .map(|(key, graph)| analyze_with_timeout(&graph, key, &analysis_config, config.timeout))
            .collect()
    });

    let mut summary = ScanSummary {
        skipped,
        ..ScanSummary::default()
    };
    for a in &analyses {
        let r = &a.record;
        summary.graphs += 1;
        match r.status {
            Status::Ok => summary.ok += 1,
            Status::Timeout => summary.timeouts += 1,
            Status::RegUnavailable => summary.reg_unavailable += 1,
            Status::MatchingUnavailable => summary.matching_unavailable += 1,
        }
        if let Some(gap) = r.gap() {
            summary.conjecture_checked += 1;
            summary.max_gap = Some(summary.max_gap.map_or(gap, |m| m.max(gap)));
            summary.min_gap = Some(summary.min_gap.map_or(gap, |m| m.min(gap)));
        }
        summary.rational_rechecks += a.rechecked as usize;
        if !r.violations.is_empty() {
            summary.confirmed_violations.push(ConfirmedViolation {
                graph6: r.graph6.clone(),
                violations: r.violations.clone(),
            });
        }
    }
    let records: Vec<ScanRecord> = analyses.into_iter().map(|a| a.record).collect();
    if let Some(out) = &config.out {
        summary.appended = Some(write_report(out, &records)?);
    }
    Ok(ScanOutcome { records, summary })
}

/// Reads a JSON-lines file of records; a missing file is empty.
pub fn read_jsonl(path: &Path) -> Result<Vec<ScanRecord>> {
    let text = match fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(Error::io(path, e)),
    };
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            serde_json::from_str(l).map_err(|source| Error::Json {
                path: path.to_path_buf(),
                source,
            })
        })
        .collect()
}

/// Path of the CSV summary for a JSON-lines output path.
pub fn csv_path(jsonl: &Path) -> PathBuf {
    jsonl.with_extension("csv")
}

/// Appends records whose graph6 key is not yet in `jsonl`, then rewrites
/// the CSV summary from everything in the file. Returns the number of
/// records appended.
pub fn write_report(jsonl: &Path, records: &[ScanRecord]) -> Result<usize> {
    let mut existing = read_jsonl(jsonl)?;
    let known: HashSet<String> = existing.iter().map(|r| r.graph6.clone()).collect();
    let fresh: Vec<&ScanRecord> = records.iter().filter(|r| !known.contains(&r.graph6)).collect();
    let mut file = fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(jsonl)
        .map_err(|e| Error::io(jsonl, e))?;
    let mut buffer = Vec::new();
    for r in &fresh {
        serde_json::to_writer(&mut buffer, r).expect("records serialize");
        buffer.push(b'\n');
    }
    file.write_all(&buffer).map_err(|e| Error::io(jsonl, e))?;
    existing.extend(fresh.iter().map(|r| (*r).clone()));
    let csv_file = csv_path(jsonl);
    fs::write(&csv_file, csv_summary(&existing)).map_err(|e| Error::io(&csv_file, e))?;
    Ok(fresh.len())
}

pub const CSV_CLASSES: [&str; 6] = ["all", "connected", "bipartite", "chordal", "tree", "very_well_covered"];

fn in_class(r: &ScanRecord, class: &str) -> bool {
    match class {
        "all" => true,
        "connected" => r.flags.connected,
        "bipartite" => r.flags.bipartite,
        "chordal" => r.flags.chordal,
        "tree" => r.flags.tree,
        "very_well_covered" => r.flags.very_well_covered,
        _ => false,
    }
}

/// Per-(n, class) aggregates; classes with no records are omitted.
pub fn csv_summary(records: &[ScanRecord]) -> String {
    #[derive(Default)]
    struct Row {
        graphs: usize,
        ok: usize,
        timeouts: usize,
        reg_unavailable: usize,
        with_violations: usize,
        max_gap: Option<i64>,
        min_gap: Option<i64>,
    }
    let mut rows: BTreeMap<(usize, usize), Row> = BTreeMap::new();
    for r in records {
        for (ci, class) in CSV_CLASSES.iter().enumerate() {
            if !in_class(r, class) {
                continue;
            }
            let row = rows.entry((r.n, ci)).or_default();
            row.graphs += 1;
            row.ok += (r.status == Status::Ok) as usize;
            row.timeouts += (r.status == Status::Timeout) as usize;
            row.reg_unavailable += (r.status == Status::RegUnavailable) as usize;
            row.with_violations += !r.violations.is_empty() as usize;
            if let Some(gap) = r.gap() {
                row.max_gap = Some(row.max_gap.map_or(gap, |m| m.max(gap)));
                row.min_gap = Some(row.min_gap.map_or(gap, |m| m.min(gap)));
            }
        }
    }
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["n", "class", "graphs", "ok", "timeouts", "reg_unavailable", "violations", "max_gap", "min_gap"])
        .expect("in-memory write");
    let opt = |x: Option<i64>| x.map_or(String::new(), |v| v.to_string());
    for ((n, ci), row) in rows {
        writer
            .write_record([
                n.to_string(),
                CSV_CLASSES[ci].to_string(),
                row.graphs.to_string(),
                row.ok.to_string(),
                row.timeouts.to_string(),
                row.reg_unavailable.to_string(),
                row.with_violations.to_string(),
                opt(row.max_gap),
                opt(row.min_gap),
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("ascii")
}
