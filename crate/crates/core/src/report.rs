//! Run reports and their two renderings: a stable-key JSON document and an
//! aligned human-readable table. Neither carries timing, so output is
//! byte-identical across runs.

use serde::Serialize;
use serde_json::Value;

use crate::instance::FORMAT_VERSION;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Unsupported,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unsupported => "unsupported",
            Status::Error => "error",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TaskReport {
    pub index: usize,
    pub op: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub truncation: Option<usize>,
    pub expect: &'static str,
    pub status: Status,
    /// Status agrees with the expectation.
    pub ok: bool,
    pub summary: String,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub version: &'static str,
    pub source: String,
    pub tasks: Vec<TaskReport>,
    pub total: usize,
    pub ok_count: usize,
    pub ok: bool,
}

impl Report {
    pub fn new(source: String, tasks: Vec<TaskReport>) -> Self {
        let ok_count = tasks.iter().filter(|t| t.ok).count();
        Report { version: FORMAT_VERSION, source, total: tasks.len(), ok: ok_count == tasks.len(), ok_count, tasks }
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Human,
}

pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Json => emit_json(report),
        Format::Human => emit_human(report),
    }
}

pub fn emit_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

pub fn emit_human(report: &Report) -> String {
    let mut out = format!("hopfhomology report ({}) for {}\n", report.version, report.source);
    if report.tasks.is_empty() {
        out.push_str("no tasks\n");
        return out;
    }
    let rows: Vec<[String; 5]> = report
        .tasks
        .iter()
        .map(|t| {
            let name = match &t.label {
                Some(l) => format!("{} [{l}]", t.op),
                None => t.op.clone(),
            };
            let mut summary = t.summary.clone();
            if let Some(c) = &t.counterexample {
                summary.push_str(&format!("; counterexample {c}"));
            }
            if let Some(m) = &t.message {
                summary.push_str(&format!("; {m}"));
            }
            [t.index.to_string(), name, t.status.as_str().to_string(), t.expect.to_string(), summary]
        })
        .collect();
    let header = ["#", "op", "status", "expect", "summary"];
    let widths: Vec<usize> =
        (0..4).map(|c| rows.iter().map(|r| r[c].chars().count()).chain([header[c].len()]).max().unwrap_or(0)).collect();
    let line = |cells: [&str; 5]| {
        let mut l = String::new();
        for (c, cell) in cells.iter().enumerate().take(4) {
            l.push_str(cell);
            l.push_str(&" ".repeat(widths[c] - cell.chars().count() + 2));
        }
        l.push_str(cells[4]);
        l.trim_end().to_string() + "\n"
    };
    out.push_str(&line(header));
    for r in &rows {
        out.push_str(&line([&r[0], &r[1], &r[2], &r[3], &r[4]]));
    }
    out.push_str(&format!("{}/{} tasks as expected\n", report.ok_count, report.total));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn task(status: Status, ok: bool) -> TaskReport {
        TaskReport {
            index: 0,
            op: "validate_hopf".into(),
            label: None,
            truncation: None,
            expect: "pass",
            status,
            ok,
            summary: "12 axioms".into(),
            result: Value::Null,
            counterexample: None,
            message: None,
        }
    }

    #[test]
    fn empty_report_is_header_only() {
        let r = Report::new("x.json".into(), vec![]);
        assert_eq!(emit_human(&r), "hopfhomology report (hopfhomology/1) for x.json\nno tasks\n");
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn single_row() {
        let r = Report::new("x.json".into(), vec![task(Status::Pass, true)]);
        let h = emit_human(&r);
        assert_eq!(h.lines().count(), 4);
        assert!(h.contains("validate_hopf  pass"));
        assert!(emit_json(&r).contains("\"status\": \"pass\""));
        assert_eq!(Report::new("x".into(), vec![task(Status::Fail, false)]).exit_code(), 1);
    }
}
