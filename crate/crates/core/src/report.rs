//! Table and JSON rendering for count results, screening reports and
//! verification suites. JSON documents carry `schema_version`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::count::CountResult;
use crate::screen::{ScreeningReport, Tri};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Reported for information; never fails a suite.
    Info,
    Skipped,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
            Status::Skipped => "SKIP",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckItem {
    pub id: String,
    pub description: String,
    pub expected: String,
    pub observed: String,
    pub status: Status,
    pub runtime_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub items: Vec<CheckItem>,
    pub runtime_ms: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.status != Status::Fail)
    }

    pub fn failures(&self) -> Vec<&CheckItem> {
        self.items.iter().filter(|i| i.status == Status::Fail).collect()
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    kind: &'a str,
    #[serde(flatten)]
    body: T,
}

fn json<T: Serialize>(kind: &str, body: T) -> String {
    let doc = Envelope {
        schema_version: SCHEMA_VERSION,
        kind,
        body,
    };
    serde_json::to_string_pretty(&doc).expect("report types serialize")
}

const COUNT_HEADER: [&str; 7] = ["G", "N", "method", "value", "runtime-ms", "conditional", "checkpoint-id"];
const COUNT_WIDTHS: [usize; 7] = [12, 14, 16, 8, 11, 12, 16];

fn row(cells: &[String], widths: &[usize]) -> String {
    let mut s = String::new();
    for (c, w) in cells.iter().zip(widths) {
        let _ = write!(s, "{c:<w$}  ");
    }
    s.trim_end().to_string()
}

pub fn render_counts(results: &[CountResult], format: Format) -> String {
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Rows<'a> {
                rows: &'a [CountResult],
            }
            json("count", Rows { rows: results })
        }
        Format::Table => {
            let mut out = row(&COUNT_HEADER.map(String::from), &COUNT_WIDTHS);
            out.push('\n');
            for r in results {
                let cells = [
                    r.g.clone(),
                    r.n.clone(),
                    r.method.as_str().to_string(),
                    r.value.to_string(),
                    r.runtime_ms.to_string(),
                    if r.conditional { "yes" } else { "no" }.to_string(),
                    r.checkpoint_id.clone().unwrap_or_else(|| "-".into()),
                ];
                out.push_str(&row(&cells, &COUNT_WIDTHS));
                out.push('\n');
                for note in &r.notes {
                    let _ = writeln!(out, "    {note}");
                }
            }
            out
        }
    }
}

pub fn render_suite(report: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Body<'a> {
                suite: &'a str,
                passed: bool,
                runtime_ms: u64,
                items: &'a [CheckItem],
            }
            json(
                "verify",
                Body {
                    suite: &report.suite,
                    passed: report.passed(),
                    runtime_ms: report.runtime_ms,
                    items: &report.items,
                },
            )
        }
        Format::Table => {
            let mut out = format!("suite {}\n", report.suite);
            for i in &report.items {
                let _ = writeln!(
                    out,
                    "[{}] {:<28} expected {} | observed {} ({} ms)",
                    i.status.as_str(),
                    i.id,
                    i.expected,
                    i.observed,
                    i.runtime_ms
                );
            }
            let fails = report.failures().len();
            let _ = writeln!(
                out,
                "{} items, {} failed, {} ms",
                report.items.len(),
                fails,
                report.runtime_ms
            );
            out
        }
    }
}

fn tri(t: Tri) -> &'static str {
    match t {
        Tri::Holds => "holds",
        Tri::Fails => "fails",
        Tri::NotApplicable => "n/a",
    }
}

pub fn render_screen(r: &ScreeningReport, format: Format) -> String {
    match format {
        Format::Json => json("screen", r),
        Format::Table => {
            let mut out = format!("G = {}, N = {}, p = {}\n", r.g, r.n, r.p);
            let _ = writeln!(out, "N perfect: {}, class: {:?}", r.n_perfect, r.n_class);
            for (k, c) in [&r.cond1, &r.cond2, &r.cond3, &r.cond4].into_iter().enumerate() {
                let _ = writeln!(out, "condition {}: {:<6} {}", k + 1, tri(c.status), c.detail);
            }
            let _ = writeln!(out, "verdict: {:?}", r.verdict);
            if let Some(c) = &r.certificate {
                let _ = writeln!(out, "certificate: {}", serde_json::to_string(c).expect("serializes"));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::Method;

    fn sample() -> CountResult {
        CountResult {
            g: "S5".into(),
            n: "S5".into(),
            value: 32,
            method: Method::FormulaSelf,
            runtime_ms: 3,
            conditional: false,
            checkpoint_id: None,
            notes: vec![],
        }
    }

    #[test]
    fn empty_table_is_header_only() {
        let t = render_counts(&[], Format::Table);
        assert_eq!(t.lines().count(), 1);
        assert!(t.starts_with("G "));
        let j: serde_json::Value = serde_json::from_str(&render_counts(&[], Format::Json)).unwrap();
        assert_eq!(j["schema_version"], SCHEMA_VERSION);
        assert_eq!(j["rows"].as_array().unwrap().len(), 0);
    }

    #[test]
    fn one_row_is_fixed_width() {
        let t = render_counts(&[sample()], Format::Table);
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[1].find("formula-self"), lines[0].find("method"));
        assert_eq!(lines[1].find("32"), lines[0].find("value"));
        assert_eq!(render_counts(&[sample()], Format::Table), t);
    }

    #[test]
    fn suite_json_has_items() {
        let rep = SuiteReport {
            suite: "x".into(),
            items: vec![CheckItem {
                id: "a".into(),
                description: "d".into(),
                expected: "1".into(),
                observed: "2".into(),
                status: Status::Fail,
                runtime_ms: 0,
            }],
            runtime_ms: 0,
        };
        let j: serde_json::Value = serde_json::from_str(&render_suite(&rep, Format::Json)).unwrap();
        assert_eq!(j["kind"], "verify");
        assert_eq!(j["passed"], false);
        assert_eq!(j["items"][0]["status"], "fail");
        assert_eq!(j["items"][0]["expected"], "1");
        assert!(render_suite(&rep, Format::Table).contains("[FAIL] a"));
    }
}
