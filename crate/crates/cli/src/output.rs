//! Report types shared by the commands and their plain and JSON renderings.

use std::time::Duration;

use serde::Serialize;

use crate::{CliError, Format};

/// One executed check.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    /// The family or suite section the check belongs to.
    pub group: String,
    /// What was checked.
    pub label: String,
    /// Whether it passed.
    pub holds: bool,
    /// Rendering of the nonzero difference, omitted when the check passed.
    #[serde(skip_serializing_if = "String::is_empty")]
    pub defect: String,
}

impl Check {
    /// A check without a defect rendering.
    pub fn flag(group: &str, label: impl Into<String>, holds: bool) -> Self {
        Check { group: group.to_string(), label: label.into(), holds, defect: String::new() }
    }
}

/// Outcome of a suite of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Every check passed.
    Passed,
    /// At least one check failed.
    Failed,
    /// The suite does not apply to the input.
    Skipped,
}

/// A list of checks with a summary.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    /// Suite or command name.
    pub suite: String,
    /// Diagram in E/O notation, when the report concerns one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagram: Option<String>,
    /// Degree cap, when the report used the Yangian.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<u32>,
    /// Length cap, when the report used the Yangian.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length_cap: Option<usize>,
    /// Overall outcome.
    pub status: Status,
    /// Why the suite was skipped.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Families or sections left out, with the reason.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Number of checks executed.
    pub total: usize,
    /// Number of failed checks.
    pub failed: usize,
    /// The checks in a fixed order.
    pub checks: Vec<Check>,
    /// Wall-clock time per section, reported in plain mode only.
    #[serde(skip)]
    pub timings: Vec<(String, Duration)>,
}

impl Report {
    /// An empty report.
    pub fn new(suite: &str) -> Self {
        Report {
            suite: suite.to_string(),
            diagram: None,
            degree_cap: None,
            length_cap: None,
            status: Status::Passed,
            reason: None,
            notes: Vec::new(),
            total: 0,
            failed: 0,
            checks: Vec::new(),
            timings: Vec::new(),
        }
    }

    /// Appends checks and the time spent producing them.
    pub fn extend(&mut self, section: &str, checks: Vec<Check>, elapsed: Duration) {
        self.checks.extend(checks);
        self.timings.push((section.to_string(), elapsed));
        self.total = self.checks.len();
        self.failed = self.checks.iter().filter(|c| !c.holds).count();
        self.status = if self.failed == 0 { Status::Passed } else { Status::Failed };
    }

    /// Marks the suite as not applicable.
    pub fn skip(&mut self, reason: String) {
        self.status = Status::Skipped;
        self.reason = Some(reason);
    }

    /// True unless a check failed.
    pub fn ok(&self) -> bool {
        self.status != Status::Failed
    }

    /// Prints the report and returns whether it passed.
    pub fn emit(&self, format: Format) -> Result<bool, CliError> {
        match format {
            Format::Json => print_json(self)?,
            Format::Plain => {
                let mut head = self.suite.clone();
                if let Some(d) = &self.diagram {
                    head.push_str(&format!(" on {d}"));
                }
                if let (Some(n), Some(l)) = (self.degree_cap, self.length_cap) {
                    head.push_str(&format!(" (cap {n}, len {l})"));
                }
                println!("{head}");
                if let Some(reason) = &self.reason {
                    println!("skipped (diagram constraint): {reason}");
                    return Ok(true);
                }
                for c in &self.checks {
                    if c.holds {
                        println!("PASS {} {}", c.group, c.label);
                    } else if c.defect.is_empty() {
                        println!("FAIL {} {}", c.group, c.label);
                    } else {
                        println!("FAIL {} {}: {}", c.group, c.label, c.defect);
                    }
                }
                for n in &self.notes {
                    println!("note: {n}");
                }
                println!("{}/{} checks passed", self.total - self.failed, self.total);
                for (section, t) in &self.timings {
                    eprintln!("time {section}: {} ms", t.as_millis());
                }
            }
        }
        Ok(self.ok())
    }
}

/// Prints a value as pretty JSON followed by a newline.
pub fn print_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}
