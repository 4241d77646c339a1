//! Counterexample reports shared by every validator.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Counterexamples kept per axiom; further failures are only counted.
pub const MAX_PER_AXIOM: usize = 10;

/// One failed axiom instance.
///
/// `scope` is a dotted path to the component the witness indexes into
/// (empty for the checked structure itself), `labels` names the operations
/// or maps the axiom was instantiated with and `witness` holds the element
/// indices in the order the axiom quantifies them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub scope: String,
    pub check: String,
    pub labels: Vec<String>,
    pub witness: Vec<usize>,
    pub detail: String,
}

impl Violation {
    pub fn new(check: &str, labels: &[&str], witness: &[usize], detail: impl Into<String>) -> Self {
        Violation {
            scope: String::new(),
            check: check.to_string(),
            labels: labels.iter().map(|s| s.to_string()).collect(),
            witness: witness.to_vec(),
            detail: detail.into(),
        }
    }

    fn axiom_key(&self) -> String {
        format!("{}|{}|{}", self.scope, self.check, self.labels.join(","))
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.scope.is_empty() {
            write!(f, "{}: ", self.scope)?;
        }
        write!(f, "{}", self.check)?;
        if !self.labels.is_empty() {
            write!(f, "[{}]", self.labels.join(","))?;
        }
        write!(f, " at {:?}", self.witness)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

/// Result of an exhaustive validation. Empty means every axiom holds.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<Violation>,
    counts: BTreeMap<String, usize>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    /// Total number of failed instances, including the ones past the cap.
    pub fn total_failures(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn push(&mut self, v: Violation) {
        let n = self.counts.entry(v.axiom_key()).or_insert(0);
        *n += 1;
        if *n <= MAX_PER_AXIOM {
            self.violations.push(v);
        }
    }

    pub fn fail(&mut self, check: &str, labels: &[&str], witness: &[usize], detail: impl Into<String>) {
        self.push(Violation::new(check, labels, witness, detail));
    }

    /// True once `check` (with these labels) has hit the counterexample cap,
    /// which lets hot loops stop early.
    pub fn saturated(&self, check: &str, labels: &[&str]) -> bool {
        let key = format!("|{}|{}", check, labels.join(","));
        self.counts.get(&key).is_some_and(|&n| n >= MAX_PER_AXIOM)
    }

    pub fn merge(&mut self, other: ValidationReport) {
        for (k, n) in &other.counts {
            let cur = self.counts.entry(k.clone()).or_insert(0);
            *cur += n;
        }
        let mut kept: BTreeMap<String, usize> = BTreeMap::new();
        for v in &self.violations {
            *kept.entry(v.axiom_key()).or_insert(0) += 1;
        }
        for v in other.violations {
            let k = kept.entry(v.axiom_key()).or_insert(0);
            if *k < MAX_PER_AXIOM {
                *k += 1;
                self.violations.push(v);
            }
        }
    }

    /// Prefix every violation's scope with `prefix`.
    pub fn scoped(mut self, prefix: &str) -> Self {
        for v in &mut self.violations {
            v.scope = if v.scope.is_empty() {
                prefix.to_string()
            } else {
                format!("{prefix}.{}", v.scope)
            };
        }
        self.counts = self
            .counts
            .into_iter()
            .map(|(k, n)| {
                let (scope, rest) = k.split_once('|').unwrap_or(("", &k));
                let scope = if scope.is_empty() {
                    prefix.to_string()
                } else {
                    format!("{prefix}.{scope}")
                };
                (format!("{scope}|{rest}"), n)
            })
            .collect();
        self
    }

    /// Distinct failed check names, in first-seen order.
    pub fn failed_checks(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for v in &self.violations {
            if !out.contains(&v.check) {
                out.push(v.check.clone());
            }
        }
        out
    }
}

impl FromIterator<Violation> for ValidationReport {
    fn from_iter<I: IntoIterator<Item = Violation>>(iter: I) -> Self {
        let mut r = ValidationReport::new();
        for v in iter {
            r.push(v);
        }
        r
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps_per_axiom() {
        let mut r = ValidationReport::new();
        for i in 0..25 {
            r.fail("add.assoc", &[], &[i, 0, 0], "");
        }
        r.fail("add.identity", &[], &[1], "");
        assert_eq!(r.violations().len(), MAX_PER_AXIOM + 1);
        assert_eq!(r.total_failures(), 26);
        assert!(r.saturated("add.assoc", &[]));
        assert!(!r.saturated("add.identity", &[]));
    }

    #[test]
    fn scoping_keeps_counts() {
        let mut r = ValidationReport::new();
        r.fail("add.assoc", &[], &[1, 2, 3], "");
        let r = r.scoped("inner").scoped("outer");
        assert_eq!(r.violations()[0].scope, "outer.inner");
        assert_eq!(r.total_failures(), 1);
    }
}
