//! Per-law verification reports with concrete witnesses.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCheck {
    pub law: String,
    pub passed: bool,
    pub witness: Option<String>,
}

/// The outcome of checking a family of laws against one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub subject: String,
    pub laws: Vec<LawCheck>,
}

impl LawReport {
    pub fn new(subject: impl Into<String>) -> Self {
        LawReport { subject: subject.into(), laws: Vec::new() }
    }

    pub fn pass(&mut self, law: &str) {
        self.laws.push(LawCheck { law: law.to_string(), passed: true, witness: None });
    }

    pub fn fail(&mut self, law: &str, witness: String) {
        self.laws.push(LawCheck { law: law.to_string(), passed: false, witness: Some(witness) });
    }

    /// Records a law result from an optional counterexample.
    pub fn record(&mut self, law: &str, witness: Option<String>) {
        match witness {
            None => self.pass(law),
            Some(w) => self.fail(law, w),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.laws.iter().all(|l| l.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawCheck> {
        self.laws.iter().filter(|l| !l.passed)
    }

    pub fn first_failure(&self) -> Option<&LawCheck> {
        self.failures().next()
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for law in &self.laws {
            if law.passed {
                writeln!(f, "  {:<24} ok", law.law)?;
            } else {
                writeln!(
                    f,
                    "  {:<24} FAIL {}",
                    law.law,
                    law.witness.as_deref().unwrap_or("")
                )?;
            }
        }
        Ok(())
    }
}
