//! Reporting harness for the acceptance target.
//!
//! Each criterion runs once, is timed against a fixed budget and prints a single
//! `PASS` or `FAIL` line. A criterion that finishes over budget fails.

use std::time::{Duration, Instant};

pub struct Criterion {
    pub id: u32,
    pub title: &'static str,
    pub tolerance: &'static str,
    pub budget: Duration,
}

#[derive(Default)]
pub struct Report {
    lines: Vec<String>,
    failed: Vec<u32>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Runs `body`, which returns a detail string on success and a reason on failure.
    pub fn run(&mut self, c: Criterion, body: impl FnOnce() -> Result<String, String>) {
        let start = Instant::now();
        let outcome = body();
        let elapsed = start.elapsed();
        let (passed, detail) = match outcome {
            Ok(_) if elapsed > c.budget => (false, format!("over budget after {elapsed:.3?}")),
            Ok(detail) => (true, detail),
            Err(reason) => (false, reason),
        };
        let line = format!(
            "{} [{:02}] {} (tolerance {}; {:.3}s of {}s): {}",
            if passed { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            c.tolerance,
            elapsed.as_secs_f64(),
            c.budget.as_secs(),
            detail
        );
        println!("{line}");
        self.lines.push(line);
        if !passed {
            self.failed.push(c.id);
        }
    }

    pub fn lines(&self) -> &[String] {
        &self.lines
    }

    pub fn failed(&self) -> &[u32] {
        &self.failed
    }
}

/// `Err` with a message unless `got == want`.
pub fn expect_eq<T: PartialEq + std::fmt::Debug>(
    what: &str,
    got: T,
    want: T,
) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn over_budget_fails() {
        let mut r = Report::new();
        let c = |id| Criterion {
            id,
            title: "t",
            tolerance: "exact",
            budget: Duration::ZERO,
        };
        r.run(c(1), || {
            std::thread::sleep(Duration::from_millis(2));
            Ok(String::new())
        });
        r.run(c(2), || Err("no".into()));
        assert_eq!(r.failed(), &[1, 2]);
        assert!(r.lines()[1].starts_with("FAIL [02] t"));
        assert!(expect_eq("x", 1, 1).is_ok());
        assert!(expect_eq("x", 1, 2).unwrap_err().contains("got 1"));
    }
}
