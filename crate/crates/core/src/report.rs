//! Report-style results shared by every validator.

use std::fmt;

use serde::Serialize;

/// One failed identity, with enough context to locate the witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: String,
    pub detail: String,
}

/// Outcome of a validator: the checks that ran, what failed, and soft warnings.
///
/// Warnings never make a report fail.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks_run: usize,
    pub violations: Vec<Violation>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records that a check ran; adds a violation if `ok` is false.
    pub fn check(&mut self, ok: bool, check: &str, detail: impl FnOnce() -> String) -> bool {
        self.checks_run += 1;
        if !ok {
            self.violations.push(Violation { check: check.to_string(), detail: detail() });
        }
        ok
    }

    pub fn fail(&mut self, check: &str, detail: impl Into<String>) {
        self.checks_run += 1;
        self.violations.push(Violation { check: check.to_string(), detail: detail.into() });
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    /// Folds another report into this one, prefixing its check names.
    pub fn absorb(&mut self, other: Report) {
        self.checks_run += other.checks_run;
        let prefix = other.subject;
        for v in other.violations {
            let check = if prefix.is_empty() { v.check } else { format!("{prefix}/{}", v.check) };
            self.violations.push(Violation { check, detail: v.detail });
        }
        self.warnings.extend(other.warnings);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{status} {} ({} checks, {} violations)",
            self.subject,
            self.checks_run,
            self.violations.len()
        )?;
        for v in &self.violations {
            writeln!(f, "  violation [{}]: {}", v.check, v.detail)?;
        }
        for w in &self.warnings {
            writeln!(f, "  warning: {w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn absorb_prefixes_and_counts() {
        let mut inner = Report::new("inner");
        inner.check(true, "a", String::new);
        inner.check(false, "b", || "bad".into());
        let mut outer = Report::new("outer");
        outer.absorb(inner);
        assert_eq!(outer.checks_run, 2);
        assert_eq!(outer.violations[0].check, "inner/b");
        assert!(!outer.passed());
    }
}
