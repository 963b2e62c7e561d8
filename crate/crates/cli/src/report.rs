use std::io::{self, Write};
use std::time::Duration;

use cp3_core::{Check, Status};
use serde::Serialize;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub name: String,
    pub status: &'static str,
    pub witness: String,
    /// Seconds spent in the task that produced this record.
    pub wall_time: f64,
}

impl Record {
    pub fn from_check(c: Check, elapsed: Duration) -> Record {
        Record { name: c.name, status: c.status.as_str(), witness: c.witness, wall_time: elapsed.as_secs_f64() }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail.as_str()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub system: Option<String>,
    pub checks: Vec<Record>,
}

impl Report {
    pub fn new(command: impl Into<String>, system: Option<String>) -> Report {
        Report { schema: SCHEMA, command: command.into(), system, checks: Vec::new() }
    }

    pub fn any_failed(&self) -> bool {
        self.checks.iter().any(Record::failed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }

    /// Fixed-width summary, one record per line, witnesses clipped.
    pub fn write_table(&self, mut w: impl Write) -> io::Result<()> {
        let width = self.checks.iter().map(|r| r.name.chars().count()).max().unwrap_or(4).max(4);
        writeln!(w, "{:<8} {:>9}  {:<width$}  witness", "status", "time", "name")?;
        for r in &self.checks {
            let mut wit: String = r.witness.chars().take(100).collect();
            if wit.len() < r.witness.len() {
                wit.push_str("...");
            }
            writeln!(w, "{:<8} {:>8.3}s  {:<width$}  {}", r.status, r.wall_time, r.name, wit)?;
        }
        let failed = self.checks.iter().filter(|r| r.failed()).count();
        writeln!(w, "{} records, {} failed", self.checks.len(), failed)
    }
}
