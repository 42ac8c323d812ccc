use serde::{Deserialize, Serialize};

/// Outcome of one named check, with the witness (on success) or the
/// counterexample (on failure) rendered as text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Ordered list of checks about one instance. Failures are recorded, never
/// thrown.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub instance: String,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl CheckReport {
    pub fn new(instance: impl Into<String>) -> Self {
        CheckReport {
            instance: instance.into(),
            checks: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool, witness: impl Into<String>) {
        self.summary.total += 1;
        if pass {
            self.summary.passed += 1;
        } else {
            self.summary.failed += 1;
        }
        self.checks.push(Check {
            name: name.into(),
            pass,
            witness: witness.into(),
        });
    }

    /// Appends every check of `other`, prefixing names with `prefix/`.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        for c in other.checks {
            self.push(format!("{prefix}/{}", c.name), c.pass, c.witness);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Summary counts agree with the check list.
    pub fn is_consistent(&self) -> bool {
        let passed = self.checks.iter().filter(|c| c.pass).count();
        self.summary.total == self.checks.len()
            && self.summary.passed == passed
            && self.summary.failed == self.checks.len() - passed
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tallies_follow_pushes() {
        let mut rep = CheckReport::new("demo");
        rep.push("a", true, "ok");
        rep.push("b", false, "counterexample");
        assert_eq!(
            rep.summary,
            Summary {
                total: 2,
                passed: 1,
                failed: 1
            }
        );
        assert!(!rep.all_pass());
        assert!(rep.is_consistent());
        assert_eq!(rep.failures().count(), 1);

        let mut outer = CheckReport::new("outer");
        outer.absorb("inner", rep);
        assert_eq!(outer.checks[1].name, "inner/b");
        assert!(outer.is_consistent());
    }
}
