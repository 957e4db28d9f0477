//! Report structures shared by every subcommand, with JSON, CSV, and plain
//! emitters. Values travel as decimal strings carrying exactly the
//! requested number of significant digits, never as binary floats.

use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, PartialEq, Eq, Clone, Debug, Default)]
pub struct Request {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    pub digits: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    pub format: String,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Clone, Debug)]
pub struct MethodResult {
    pub method: String,
    pub value: String,
    pub err_est: String,
    pub terms: usize,
    pub ms: u64,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Clone, Debug)]
pub struct CheckRow {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Clone, Debug)]
pub struct Report {
    pub request: Request,
    pub results: Vec<MethodResult>,
    pub checks: Vec<CheckRow>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per method result and per check, under a common header.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["kind", "name", "value", "err_est", "terms", "ms", "pass", "detail"])
            .expect("csv header");
        for r in &self.results {
            w.write_record([
                "result",
                &r.method,
                &r.value,
                &r.err_est,
                &r.terms.to_string(),
                &r.ms.to_string(),
                "",
                "",
            ])
            .expect("csv row");
        }
        for c in &self.checks {
            w.write_record(["check", &c.id, "", "", "", "", if c.pass { "true" } else { "false" }, &c.detail])
                .expect("csv row");
        }
        String::from_utf8(w.into_inner().expect("csv flush")).expect("csv is utf-8")
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        let q = &self.request;
        out.push_str(&format!("command: {}  digits: {}", q.command, q.digits));
        if let Some(k) = q.k {
            out.push_str(&format!("  k: {k}"));
        }
        if let Some(a) = &q.a {
            out.push_str(&format!("  a: {a}"));
        }
        if let Some(m) = &q.method {
            out.push_str(&format!("  method: {m}"));
        }
        if let Some(s) = &q.suite {
            out.push_str(&format!("  suite: {s}"));
        }
        out.push('\n');
        if !self.results.is_empty() {
            let w = self.results.iter().map(|r| r.method.len()).max().unwrap().max(6);
            for r in &self.results {
                out.push_str(&format!(
                    "{:<w$}  {}  (err <= {}, {} terms, {} ms)\n",
                    r.method, r.value, r.err_est, r.terms, r.ms
                ));
            }
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        if !self.checks.is_empty() {
            out.push_str(&format!(
                "checks: {}/{} pass\n",
                self.checks.len() - failed,
                self.checks.len()
            ));
            for c in &self.checks {
                out.push_str(&format!(
                    "  [{}] {} - {}\n",
                    if c.pass { " ok " } else { "FAIL" },
                    c.id,
                    c.detail
                ));
            }
        }
        out
    }

    pub fn emit(&self) -> String {
        match self.request.format.as_str() {
            "json" => self.to_json(),
            "csv" => self.to_csv(),
            _ => self.to_plain(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        Report {
            request: Request {
                command: "gamma".into(),
                k: Some(1),
                a: Some("3/4".into()),
                digits: 30,
                method: Some("all".into()),
                suite: None,
                format: "json".into(),
            },
            results: vec![MethodResult {
                method: "euler-maclaurin".into(),
                value: "-0.391298902404549774239874192189".into(),
                err_est: "1.23e-33".into(),
                terms: 42,
                ms: 3,
            }],
            checks: vec![CheckRow { id: "agree-x-y".into(), pass: true, detail: "ok".into() }],
        }
    }

    #[test]
    fn json_round_trips() {
        let r = sample();
        let parsed: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(parsed, r);
    }

    #[test]
    fn csv_has_one_row_per_entry() {
        let text = sample().to_csv();
        assert_eq!(text.lines().count(), 3);
        assert!(text.lines().nth(1).unwrap().starts_with("result,euler-maclaurin"));
        assert!(text.lines().nth(2).unwrap().starts_with("check,agree-x-y"));
    }
}
