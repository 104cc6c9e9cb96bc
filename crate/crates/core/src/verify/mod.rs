//! Executable checks of the structural claims about zero-set graphs and
//! their line graphs, run over a sweep of model configurations.
//!
//! Each check records the hypotheses it needs, the claim, what was
//! observed, and a witness that can be re-validated against the graph.

mod checks;
mod line_checks;
mod orbit;
mod oracle;
mod report;

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{dominates, CycleWitness, Graph, PathWitness};
use crate::line::{build_line_graph, LineGraph};
use crate::model::{build_gamma, ModelConfig, ZeroSetModel};

pub use checks::{
    check_chordality_gamma, check_common_neighbor, check_complemented,
    check_connectivity_diameter, check_cycle_pair_gamma, check_distance_characterization,
    check_domination, check_radius, check_triangulation, check_vnr_condition,
};
pub use line_checks::{check_line_cycles, check_line_metrics, line_cycle_case, LineCycleCase};
pub use oracle::{check_oracle, oracle_corpus, OracleCase, DEFAULT_SEED, RANDOM_CORPUS_SIZE};
pub use report::render_markdown;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOLKIT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Line-graph checks skip models with more base edges than this.
pub const LINE_EDGE_CAP: usize = 2000;
/// Model checks skip models with more vertices than this.
pub const GAMMA_VERTEX_CAP: usize = 400;

/// Check ids in report order.
pub const CHECK_IDS: [&str; 23] = [
    "T2.1", "C2.2", "C2.3", "T2.4", "T3.1", "C3.2", "T3.3", "T3.4", "T3.5", "T4.1", "T4.2",
    "T4.3", "T4.4", "L5.1", "T5.2", "C5.3", "T5.4", "C5.5", "T5.6", "T5.7", "T5.8", "T5.9",
    ORACLE_ID,
];
pub const ORACLE_ID: &str = "ORACLE";

const GAMMA_GROUPS: &[&[&str]] = &[
    &["T2.1"],
    &["C2.2"],
    &["C2.3"],
    &["T2.4"],
    &["T3.1", "C3.2"],
    &["T3.3"],
    &["T3.4"],
    &["T3.5", "T4.4"],
    &["T4.1", "T4.2"],
    &["T4.3"],
];
const LINE_GROUPS: &[&[&str]] = &[&["L5.1", "T5.2", "C5.3", "T5.4", "C5.5"], &["T5.6", "T5.7", "T5.8", "T5.9"]];

pub const LIMITATION: &str = "All results are computed on finite models in which each zero-set class \
holds m copies. A witness found in a model (a path, cycle, dominating set or partner) also exists in \
the infinite graph. The absence of a witness in a model does not certify its absence there.";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    /// Documented disagreement between the model and the stated claim.
    Anomaly,
    /// The claim fails where its hypotheses are not met.
    HypothesisViolation,
    Skipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Anomaly => "ANOMALY",
            Status::HypothesisViolation => "HYPOTHESIS_VIOLATION",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Path,
    Cycle,
    ChordlessCycle,
    Set,
    Vertex,
    Edge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessGraph {
    Gamma,
    Line,
}

/// Labels of the witnessing vertices, in order, plus the graph they live in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub graph: WitnessGraph,
    pub labels: Vec<String>,
}

impl Witness {
    pub(crate) fn new(kind: WitnessKind, graph: WitnessGraph, g: &Graph, ids: &[usize]) -> Self {
        Self { kind, graph, labels: g.labels_of(ids) }
    }

    /// Re-checks the witness against `g` from the definitions alone.
    pub fn validate(&self, g: &Graph) -> bool {
        let index = g.label_index();
        let Some(ids) = self.labels.iter().map(|l| index.get(l.as_str()).copied()).collect::<Option<Vec<_>>>()
        else {
            return false;
        };
        match self.kind {
            WitnessKind::Path => PathWitness(ids).validate(g),
            WitnessKind::Cycle => CycleWitness(ids).validate(g),
            WitnessKind::ChordlessCycle => ids.len() >= 4 && CycleWitness(ids).is_chordless(g),
            WitnessKind::Set => !ids.is_empty() && dominates(g, &ids).unwrap_or(false),
            WitnessKind::Vertex => ids.len() == 1,
            WitnessKind::Edge => ids.len() == 2 && g.has_edge(ids[0], ids[1]),
        }
    }
}

/// Hypotheses of a check as text, and whether the configuration meets them.
#[derive(Debug, Clone)]
pub(crate) struct Hypotheses {
    pub text: String,
    pub met: bool,
}

impl Hypotheses {
    pub fn new(text: &str, met: bool) -> Self {
        Self { text: text.to_string(), met }
    }

    pub fn none() -> Self {
        Self::new("none", true)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremCheck {
    pub id: String,
    pub config: Option<ModelConfig>,
    pub hypotheses: String,
    pub hypotheses_met: bool,
    pub claim: String,
    pub observed: serde_json::Value,
    pub witness: Option<Witness>,
    pub status: Status,
    /// Short code of the documented deviation, for `ANOMALY` results.
    pub anomaly: Option<String>,
    pub note: Option<String>,
}

/// Builder shared by the checks: the status follows from the hypotheses,
/// whether the claim held, and whether a failure is a documented deviation.
pub(crate) struct Outcome {
    pub id: &'static str,
    pub config: Option<ModelConfig>,
    pub hyp: Hypotheses,
    pub claim: String,
    pub holds: bool,
    pub anomaly: Option<&'static str>,
    pub observed: serde_json::Value,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

impl Outcome {
    pub fn new(id: &'static str, config: &ModelConfig, hyp: Hypotheses, claim: impl Into<String>) -> Self {
        Self {
            id,
            config: Some(*config),
            hyp,
            claim: claim.into(),
            holds: false,
            anomaly: None,
            observed: serde_json::Value::Null,
            witness: None,
            note: None,
        }
    }

    pub fn holds(mut self, holds: bool) -> Self {
        self.holds = holds;
        self
    }

    pub fn observed(mut self, v: serde_json::Value) -> Self {
        self.observed = v;
        self
    }

    pub fn witness(mut self, w: Option<Witness>) -> Self {
        self.witness = w;
        self
    }

    pub fn anomaly(mut self, code: Option<&'static str>) -> Self {
        self.anomaly = code;
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn finish(self) -> TheoremCheck {
        let (status, anomaly) = match (self.hyp.met, self.holds, self.anomaly) {
            (_, true, _) => (Status::Pass, None),
            (false, false, _) => (Status::HypothesisViolation, None),
            (true, false, Some(code)) => (Status::Anomaly, Some(code.to_string())),
            (true, false, None) => (Status::Fail, None),
        };
        TheoremCheck {
            id: self.id.to_string(),
            config: self.config,
            hypotheses: self.hyp.text,
            hypotheses_met: self.hyp.met,
            claim: self.claim,
            observed: self.observed,
            witness: self.witness,
            status,
            anomaly,
            note: self.note,
        }
    }
}

pub(crate) fn skipped(id: &str, config: &ModelConfig, reason: String) -> TheoremCheck {
    TheoremCheck {
        id: id.to_string(),
        config: Some(*config),
        hypotheses: String::new(),
        hypotheses_met: false,
        claim: String::new(),
        observed: serde_json::Value::Null,
        witness: None,
        status: Status::Skipped,
        anomaly: None,
        note: Some(reason),
    }
}

/// Configurations to check and which check ids to run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sweep {
    /// Configurations for the checks on the model graph.
    pub gamma: Vec<ModelConfig>,
    /// Configurations for the line-graph checks.
    pub line: Vec<ModelConfig>,
    /// Restrict to these ids; `None` runs everything.
    pub theorems: Option<Vec<String>>,
    /// Seed of the random oracle corpus.
    pub seed: u64,
}

impl Sweep {
    /// n in 2..=5 with m in 1..=4 for the model checks, n in 3..=4 with m in
    /// 2..=4 for the line-graph checks.
    pub fn standard(include_zero: bool) -> Self {
        let grid = |ns: std::ops::RangeInclusive<usize>, ms: std::ops::RangeInclusive<usize>| {
            ns.flat_map(|n| ms.clone().map(move |m| ModelConfig::new(n, m, include_zero)))
                .collect::<Vec<_>>()
        };
        Self { gamma: grid(2..=5, 1..=4), line: grid(3..=4, 2..=4), theorems: None, seed: DEFAULT_SEED }
    }

    fn wants(&self, id: &str) -> bool {
        self.theorems.as_ref().map_or(true, |ts| ts.iter().any(|t| t == id))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub anomaly: usize,
    pub hypothesis_violation: usize,
    pub skipped: usize,
}

impl Summary {
    fn of(checks: &[TheoremCheck]) -> Self {
        let mut s = Summary { total: checks.len(), ..Default::default() };
        for c in checks {
            *match c.status {
                Status::Pass => &mut s.pass,
                Status::Fail => &mut s.fail,
                Status::Anomaly => &mut s.anomaly,
                Status::HypothesisViolation => &mut s.hypothesis_violation,
                Status::Skipped => &mut s.skipped,
            } += 1;
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub toolkit_version: String,
    pub limitation: String,
    pub sweep: Sweep,
    pub summary: Summary,
    pub checks: Vec<TheoremCheck>,
}

impl VerificationReport {
    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn checks_with_id<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a TheoremCheck> + 'a {
        self.checks.iter().filter(move |c| c.id == id)
    }
}

fn id_rank(id: &str) -> usize {
    CHECK_IDS.iter().position(|&c| c == id).unwrap_or(CHECK_IDS.len())
}

fn degenerate(cfg: &ModelConfig) -> Option<String> {
    (cfg.vertex_count() < 2).then(|| format!("model has {} vertices", cfg.vertex_count()))
}

/// Runs every model-graph check for one configuration.
pub fn run_gamma_checks(model: &ZeroSetModel) -> Vec<TheoremCheck> {
    let cfg = model.config();
    if let Some(reason) = degenerate(cfg) {
        return GAMMA_GROUPS.iter().flat_map(|g| g.iter()).map(|id| skipped(id, cfg, reason.clone())).collect();
    }
    if model.graph().vertex_count() > GAMMA_VERTEX_CAP {
        let reason = format!("{} vertices exceeds cap {GAMMA_VERTEX_CAP}", model.graph().vertex_count());
        return GAMMA_GROUPS.iter().flat_map(|g| g.iter()).map(|id| skipped(id, cfg, reason.clone())).collect();
    }
    let mut out = vec![
        check_connectivity_diameter(model),
        check_common_neighbor(model),
        check_distance_characterization(model),
        check_radius(model),
    ];
    out.extend(check_triangulation(model));
    out.push(check_cycle_pair_gamma(model));
    out.push(check_chordality_gamma(model));
    out.extend(check_complemented(model));
    out.extend(check_domination(model));
    out.push(check_vnr_condition(model));
    out
}

/// Runs every line-graph check for one configuration, or skips them all
/// when the base graph has more than [`LINE_EDGE_CAP`] edges.
pub fn run_line_checks(model: &ZeroSetModel) -> Vec<TheoremCheck> {
    run_line_groups(model, true, true)
}

fn run_line_groups(model: &ZeroSetModel, metrics: bool, cycles: bool) -> Vec<TheoremCheck> {
    let cfg = model.config();
    let chosen = [metrics, cycles];
    let ids = || LINE_GROUPS.iter().zip(chosen).filter(|(_, on)| *on).flat_map(|(g, _)| g.iter());
    if let Some(reason) = degenerate(cfg) {
        return ids().map(|id| skipped(id, cfg, reason.clone())).collect();
    }
    let edges = model.graph().edge_count();
    if edges > LINE_EDGE_CAP {
        let reason = format!("{edges} base edges exceeds cap {LINE_EDGE_CAP}");
        return ids().map(|id| skipped(id, cfg, reason.clone())).collect();
    }
    if edges == 0 {
        return ids().map(|id| skipped(id, cfg, "base graph has no edges".into())).collect();
    }
    let line: LineGraph = build_line_graph(model.graph());
    let mut out = Vec::new();
    if metrics {
        out.extend(check_line_metrics(model, &line));
    }
    if cycles {
        out.extend(check_line_cycles(model, &line));
    }
    out
}

fn validate_ids(ids: &[String]) -> Result<()> {
    for id in ids {
        if !CHECK_IDS.contains(&id.as_str()) {
            return Err(Error::InvalidConfig(format!("unknown check id {id:?}")));
        }
    }
    Ok(())
}

/// Runs the sweep and assembles the report in id order, then sweep order.
pub fn run_all(sweep: &Sweep) -> Result<VerificationReport> {
    if let Some(ids) = &sweep.theorems {
        validate_ids(ids)?;
        if ids.is_empty() {
            return Err(Error::EmptySweep);
        }
    }
    let wants_group = |group: &[&str]| group.iter().any(|id| sweep.wants(id));
    let gamma_needed = GAMMA_GROUPS.iter().any(|g| wants_group(g));
    let line_needed = LINE_GROUPS.iter().any(|g| wants_group(g));
    let oracle_needed = sweep.wants(ORACLE_ID);
    let has_work = (gamma_needed && !sweep.gamma.is_empty())
        || (line_needed && !sweep.line.is_empty())
        || (oracle_needed && sweep.theorems.is_some());
    if !has_work {
        return Err(Error::EmptySweep);
    }
    for cfg in sweep.gamma.iter().chain(&sweep.line) {
        cfg.validate()?;
    }

    let mut jobs: Vec<(usize, ModelConfig, bool)> = Vec::new();
    if gamma_needed {
        jobs.extend(sweep.gamma.iter().enumerate().map(|(i, c)| (i, *c, false)));
    }
    if line_needed {
        jobs.extend(sweep.line.iter().enumerate().map(|(i, c)| (i, *c, true)));
    }
    let results: Vec<Vec<(usize, TheoremCheck)>> = jobs
        .par_iter()
        .map(|&(pos, cfg, line)| -> Result<Vec<(usize, TheoremCheck)>> {
            let model = build_gamma(&cfg)?;
            let checks = if line {
                run_line_groups(&model, wants_group(LINE_GROUPS[0]), wants_group(LINE_GROUPS[1]))
            } else {
                run_gamma_checks(&model)
            };
            Ok(checks.into_iter().map(|c| (pos, c)).collect())
        })
        .collect::<Result<_>>()?;

    let mut checks: Vec<(usize, usize, TheoremCheck)> = results
        .into_iter()
        .flatten()
        .filter(|(_, c)| sweep.wants(&c.id))
        .map(|(pos, c)| (id_rank(&c.id), pos, c))
        .collect();
    if oracle_needed {
        checks.push((id_rank(ORACLE_ID), 0, check_oracle(sweep.seed)));
    }
    checks.sort_by_key(|(rank, pos, _)| (*rank, *pos));
    let checks: Vec<TheoremCheck> = checks.into_iter().map(|(_, _, c)| c).collect();

    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        toolkit_version: TOOLKIT_VERSION.to_string(),
        limitation: LIMITATION.to_string(),
        sweep: sweep.clone(),
        summary: Summary::of(&checks),
        checks,
    })
}

/// Graph a witness of `check` refers to, rebuilt from the check's config.
pub fn witness_graph(check: &TheoremCheck) -> Result<Option<Graph>> {
    let (Some(w), Some(cfg)) = (&check.witness, &check.config) else {
        return Ok(None);
    };
    let model = build_gamma(cfg)?;
    Ok(Some(match w.graph {
        WitnessGraph::Gamma => model.graph().clone(),
        WitnessGraph::Line => build_line_graph(model.graph()).graph().clone(),
    }))
}

/// Ids present in a report, deduplicated, in report order.
pub fn ids_in(report: &VerificationReport) -> Vec<String> {
    let mut seen = BTreeSet::new();
    report.checks.iter().filter(|c| seen.insert(c.id.clone())).map(|c| c.id.clone()).collect()
}
