//! Per-graph run records and their rendering.

use std::fmt::Write as _;
use std::time::Duration;

use wheelfree_core::Certificate;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    InClass,
    NotInClass,
    Error,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PhaseTimes {
    pub decompose: Duration,
    pub classify: Duration,
    pub color: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    /// 1-based position of the graph in the input.
    pub id: usize,
    pub verdict: Verdict,
    /// Lines for standard output.
    pub lines: Vec<String>,
    /// Diagnostics for standard error.
    pub notes: Vec<String>,
    pub timing: PhaseTimes,
}

impl Record {
    pub fn new(id: usize, verdict: Verdict) -> Self {
        Record { id, verdict, lines: Vec::new(), notes: Vec::new(), timing: PhaseTimes::default() }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunReport {
    pub records: Vec<Record>,
    /// Separate the output of consecutive records by a blank line.
    pub blocks: bool,
}

impl RunReport {
    /// 2 if any record is an error, else 1 if any is not in the class, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.records.iter().any(|r| r.verdict == Verdict::Error) {
            2
        } else if self.records.iter().any(|r| r.verdict == Verdict::NotInClass) {
            1
        } else {
            0
        }
    }

    pub fn stdout(&self) -> String {
        let mut out = String::new();
        let mut first = true;
        for r in self.records.iter().filter(|r| !r.lines.is_empty()) {
            if self.blocks && !first {
                out.push('\n');
            }
            first = false;
            for l in &r.lines {
                out.push_str(l);
                out.push('\n');
            }
        }
        out
    }

    pub fn stderr(&self, timing: bool) -> String {
        let mut out = String::new();
        for r in &self.records {
            for n in &r.notes {
                writeln!(out, "{n}").unwrap();
            }
            if timing {
                let t = r.timing;
                writeln!(
                    out,
                    "{} time decompose={}us classify={}us color={}us",
                    r.id,
                    t.decompose.as_micros(),
                    t.classify.as_micros(),
                    t.color.as_micros()
                )
                .unwrap();
            }
        }
        out
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// One-line rendering of a certificate, vertices in input labels.
pub fn certificate_text(c: &Certificate) -> String {
    match c {
        Certificate::K4(k) => format!("k4 {}", join(k)),
        Certificate::Isk4(vs) => format!("isk4 {}", join(vs)),
        Certificate::Wheel { hole, hub } => format!("hub {hub} hole {}", join(hole)),
        Certificate::ChordedCycle { cycle, chord } => format!("chord {} {} cycle {}", chord.0, chord.1, join(cycle)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let mut r = RunReport::default();
        assert_eq!(r.exit_code(), 0);
        r.records.push(Record::new(1, Verdict::NotInClass));
        assert_eq!(r.exit_code(), 1);
        r.records.push(Record::new(2, Verdict::Error));
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn blocks_are_separated() {
        let mut a = Record::new(1, Verdict::InClass);
        a.lines = vec!["0 0".into()];
        let mut b = Record::new(2, Verdict::InClass);
        b.lines = vec!["0 1".into()];
        let r = RunReport { records: vec![a, Record::new(3, Verdict::NotInClass), b], blocks: true };
        assert_eq!(r.stdout(), "0 0\n\n0 1\n");
    }
}
