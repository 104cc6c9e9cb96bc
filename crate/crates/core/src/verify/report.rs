use std::fmt::Write as _;

use super::{Status, TheoremCheck, VerificationReport};

fn config_cell(c: &TheoremCheck) -> String {
    c.config.map_or_else(|| "corpus".to_string(), |cfg| cfg.to_string())
}

/// One-line digest of the observed values: scalars only, nested values
/// elided.
fn observed_cell(c: &TheoremCheck) -> String {
    let Some(obj) = c.observed.as_object() else {
        return String::new();
    };
    obj.iter()
        .filter(|(_, v)| !v.is_null() && !v.is_array() && !v.is_object())
        .map(|(k, v)| format!("{k}={}", v.to_string().trim_matches('"')))
        .collect::<Vec<_>>()
        .join(", ")
}

fn escape(s: &str) -> String {
    s.replace('|', "\\|")
}

pub fn render_markdown(r: &VerificationReport) -> String {
    let mut out = String::from("# Verification report\n\n");
    let _ = writeln!(out, "Toolkit {} (report schema {}).\n", r.toolkit_version, r.schema_version);
    let _ = writeln!(out, "> {}\n", r.limitation);
    let s = &r.summary;
    let _ = writeln!(
        out,
        "**Summary:** {} checks: {} pass, {} fail, {} anomaly, {} hypothesis violation, {} skipped.\n",
        s.total, s.pass, s.fail, s.anomaly, s.hypothesis_violation, s.skipped
    );
    let _ = writeln!(
        out,
        "Sweep: {} model configurations, {} line-graph configurations, oracle seed {}.\n",
        r.sweep.gamma.len(),
        r.sweep.line.len(),
        r.sweep.seed
    );
    out.push_str("| id | config | status | claim | observed | witness | note |\n");
    out.push_str("|---|---|---|---|---|---|---|\n");
    for c in &r.checks {
        let status = match (&c.status, &c.anomaly) {
            (Status::Anomaly, Some(code)) => format!("ANOMALY ({code})"),
            (st, _) => st.to_string(),
        };
        let witness = c
            .witness
            .as_ref()
            .map(|w| format!("{}: {}", serde_json::to_value(w.kind).unwrap_or_default().as_str().unwrap_or(""), w.labels.join(" ")))
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} |",
            c.id,
            config_cell(c),
            status,
            escape(&c.claim),
            escape(&observed_cell(c)),
            escape(&witness),
            escape(c.note.as_deref().unwrap_or("")),
        );
    }
    out
}
