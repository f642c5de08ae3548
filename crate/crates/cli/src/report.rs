//! Machine-readable report emitted by every verifying subcommand: one
//! structured document per invocation with a stable field order, plus a
//! markdown rendering of the same data. Reports with identical inputs and
//! seeds are byte-identical except for the timestamp field.

use serde::Serialize;

use lie_index::tables::CheckResult;

#[derive(Debug, Serialize)]
pub struct Report {
    pub tool_version: String,
    pub timestamp: String,
    pub invocation: String,
    pub results: Vec<CheckOut>,
    pub overall: String,
}

#[derive(Debug, Serialize)]
pub struct CheckOut {
    pub check: String,
    pub status: String,
    pub details: Vec<DetailOut>,
}

#[derive(Debug, Serialize)]
pub struct DetailOut {
    pub row: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    pub expected: String,
    pub actual: String,
    pub status: String,
}

pub fn status_str(ok: bool) -> String {
    if ok { "pass" } else { "fail" }.to_string()
}

impl From<&CheckResult> for CheckOut {
    fn from(result: &CheckResult) -> CheckOut {
        CheckOut {
            check: result.name.to_string(),
            status: status_str(result.passed),
            details: result
                .details
                .iter()
                .map(|d| DetailOut {
                    row: d.row.clone(),
                    instance: d.instance.map(|(r, k)| {
                        if k == 0 {
                            format!("r={r}")
                        } else {
                            format!("r={r},k={k}")
                        }
                    }),
                    expected: d.expected.clone(),
                    actual: d.actual.clone(),
                    status: status_str(d.ok),
                })
                .collect(),
        }
    }
}

impl Report {
    pub fn new(invocation: String, results: Vec<CheckOut>) -> Report {
        let overall = results.iter().all(|c| c.status == "pass");
        Report {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            invocation,
            results,
            overall: status_str(overall),
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == "pass"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        let _ = writeln!(out, "# lie-index report");
        let _ = writeln!(out);
        let _ = writeln!(out, "- version: {}", self.tool_version);
        let _ = writeln!(out, "- timestamp: {}", self.timestamp);
        let _ = writeln!(out, "- invocation: `{}`", self.invocation);
        let _ = writeln!(out, "- overall: **{}**", self.overall);
        for check in &self.results {
            let _ = writeln!(out);
            let _ = writeln!(out, "## {} — {}", check.check, check.status);
            let _ = writeln!(out);
            let _ = writeln!(out, "| row | instance | expected | actual | status |");
            let _ = writeln!(out, "|---|---|---|---|---|");
            for d in &check.details {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} |",
                    d.row,
                    d.instance.as_deref().unwrap_or("-"),
                    d.expected,
                    d.actual,
                    d.status
                );
            }
        }
        out
    }
}
