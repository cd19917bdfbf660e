//! Verification reports: canonical JSON schema plus CSV and Markdown
//! emitters. A suite passes iff its failure list is empty; instances whose
//! margin fell inside the precision band are listed as near-equalities
//! together with the recheck that resolved them.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub graph6: String,
    pub param: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct NearEquality {
    pub graph6: String,
    pub param: String,
    pub gap: f64,
    pub err: f64,
    /// How the instance was resolved: "exact", "high-precision", or
    /// "expected-equality".
    pub method: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub config: serde_json::Value,
    pub instances: usize,
    pub failures: Vec<Failure>,
    pub near_equalities: Vec<NearEquality>,
    /// Wall-clock runtime; the only non-deterministic field.
    pub runtime_ms: u128,
    /// Methodology notes; every grid-based suite states here that it is a
    /// desk-scale substitute for a continuum statement.
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(suite: &str, config: serde_json::Value) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            config,
            instances: 0,
            failures: Vec::new(),
            near_equalities: Vec::new(),
            runtime_ms: 0,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,kind,graph6,param,lhs,rhs,margin\n");
        for f in &self.failures {
            out.push_str(&format!(
                "{},failure,{},{},{},{},{}\n",
                self.suite, f.graph6, f.param, f.lhs, f.rhs, f.margin
            ));
        }
        for n in &self.near_equalities {
            out.push_str(&format!(
                "{},near-equality,{},{},{},{},{}\n",
                self.suite, n.graph6, n.param, n.gap, n.err, n.method
            ));
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!(
            "## Suite `{}`\n\n- instances: {}\n- failures: {}\n- near-equalities: {}\n- runtime: {} ms\n",
            self.suite,
            self.instances,
            self.failures.len(),
            self.near_equalities.len(),
            self.runtime_ms
        );
        for note in &self.notes {
            out.push_str(&format!("- note: {note}\n"));
        }
        if !self.failures.is_empty() {
            out.push_str("\n| graph6 | param | lhs | rhs | margin |\n|---|---|---|---|---|\n");
            for f in &self.failures {
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} |\n",
                    f.graph6, f.param, f.lhs, f.rhs, f.margin
                ));
            }
        }
        out
    }

    pub fn render(&self, format: &str) -> String {
        match format {
            "csv" => self.to_csv(),
            "md" => self.to_markdown(),
            _ => self.to_json(),
        }
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{:<14} {:>8} instances  {:>4} failures  {:>4} near-equalities  {:>8} ms  {}",
            self.suite,
            self.instances,
            self.failures.len(),
            self.near_equalities.len(),
            self.runtime_ms,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}
