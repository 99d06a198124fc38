use serde::Serialize;
use serde_json::{Map, Value};

use crate::config::RUN_FORMAT;

/// One checked inequality.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

/// Summary values and checks collected across the stages of a run.
#[derive(Debug, Serialize)]
pub struct Report {
    pub format: &'static str,
    pub values: Map<String, Value>,
    pub checks: Vec<Check>,
}

impl Default for Report {
    fn default() -> Self {
        Self {
            format: RUN_FORMAT,
            values: Map::new(),
            checks: Vec::new(),
        }
    }
}

impl Report {
    pub fn value(&mut self, key: &str, v: impl Into<Value>) {
        self.values.insert(key.to_string(), v.into());
    }

    pub fn check(&mut self, name: &str, holds: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            holds,
            detail: detail.into(),
        });
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.holds)
    }

    /// One line per value, then one line per check.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.values {
            out.push_str(&format!("{k:<28} {}\n", compact(v)));
        }
        for c in &self.checks {
            let tag = if c.holds { "ok  " } else { "FAIL" };
            out.push_str(&format!("[{tag}] {}: {}\n", c.name, c.detail));
        }
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::Array(items) if items.len() > 8 => {
            let head: Vec<String> = items.iter().take(8).map(|x| x.to_string()).collect();
            format!("[{}, … {} values]", head.join(", "), items.len())
        }
        other => other.to_string(),
    }
}

/// Detail text for a check that lists offending indices.
pub fn failing(label: &str, items: &[impl std::fmt::Debug]) -> String {
    if items.is_empty() {
        format!("holds for every {label}")
    } else {
        format!("fails at {label} = {items:?}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_is_the_earliest_failed_check() {
        let mut r = Report::default();
        r.check("a <= b", true, "");
        r.check("c > 0", false, "c = -1");
        r.check("d > 0", false, "d = -2");
        assert_eq!(r.first_failure().unwrap().name, "c > 0");
        assert!(r.render().contains("[FAIL] c > 0: c = -1"));
    }

    #[test]
    fn failing_lists_offenders() {
        assert_eq!(failing("r", &[] as &[u32]), "holds for every r");
        assert_eq!(failing("r", &[3u32, 5]), "fails at r = [3, 5]");
    }
}
