use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One violated identity with its inputs. The nonzero defect is rendered in
/// the expression grammar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub identity: String,
    pub inputs: Vec<String>,
    pub defect: String,
}

/// Result of a verification suite. `pass` holds exactly when `failures`
/// is empty.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub suite: String,
    pub options: BTreeMap<String, Value>,
    pub checks_run: usize,
    pub failures: Vec<Failure>,
    pub pass: bool,
}

impl AxiomReport {
    pub fn new(suite: impl Into<String>) -> Self {
        AxiomReport {
            suite: suite.into(),
            options: BTreeMap::new(),
            checks_run: 0,
            failures: Vec::new(),
            pass: true,
        }
    }

    pub fn with_option(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.options.insert(key.to_string(), value.into());
        self
    }

    /// Counts one check; records a failure when `defect` is `Some`.
    pub fn check(
        &mut self,
        identity: impl Into<String>,
        inputs: Vec<String>,
        defect: Option<String>,
    ) {
        self.checks_run += 1;
        if let Some(defect) = defect {
            self.failures.push(Failure {
                identity: identity.into(),
                inputs,
                defect,
            });
            self.pass = false;
        }
    }

    /// Appends the checks and failures of `other`.
    pub fn absorb(&mut self, other: AxiomReport) {
        self.checks_run += other.checks_run;
        self.pass &= other.pass;
        self.failures.extend(other.failures);
    }

    /// Merges reports into one aggregate report with the given name.
    pub fn aggregate(
        suite: impl Into<String>,
        parts: impl IntoIterator<Item = AxiomReport>,
    ) -> AxiomReport {
        let mut out = AxiomReport::new(suite);
        for part in parts {
            let name = part.suite.clone();
            let mut part = part;
            for f in &mut part.failures {
                f.identity = format!("[{name}] {}", f.identity);
            }
            out.absorb(part);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// A short human-readable summary.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}: {} ({} checks, {} failures)\n",
            self.suite,
            if self.pass { "PASS" } else { "FAIL" },
            self.checks_run,
            self.failures.len()
        );
        for f in self.failures.iter().take(20) {
            out.push_str(&format!(
                "  {} [{}]: {}\n",
                f.identity,
                f.inputs.join(", "),
                f.defect
            ));
        }
        if self.failures.len() > 20 {
            out.push_str(&format!("  ... {} more\n", self.failures.len() - 20));
        }
        out
    }
}
