//! Worked examples with expected results, each tagged with where the
//! expectation comes from, and the acceptance suite built on them.

pub mod acceptance;
mod entries;
pub mod fixtures;

use std::fmt::{Debug, Display};
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};

pub use entries::{entries, GalleryEntry};

/// Size cap for gallery and acceptance runs: the degree-4 chain space of a
/// 9-dimensional algebra has `9⁵ = 59049` basis tensors.
pub const GALLERY_SIZE_CAP: usize = 65_536;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Stated in the literature the construction comes from.
    Literature,
    /// Immediate from the definitions.
    Trivial,
    /// Obtained by an independent computation documented alongside.
    Derived,
}

/// One expected-versus-actual comparison.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub what: String,
    pub provenance: Provenance,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

impl Check {
    pub fn equal<T: PartialEq + Debug>(what: impl Into<String>, provenance: Provenance, expected: T, actual: T) -> Check {
        let passed = expected == actual;
        Check { what: what.into(), provenance, expected: render(&expected), actual: render(&actual), passed }
    }

    pub fn holds(what: impl Into<String>, provenance: Provenance, ok: bool) -> Check {
        Check::equal(what, provenance, true, ok)
    }

    /// Passes when `res` fails with an error whose variant matches `expected`.
    pub fn fails<T>(what: impl Into<String>, provenance: Provenance, expected: fn(&Error) -> bool, name: &str, res: Result<T>) -> Check {
        let (passed, actual) = match &res {
            Ok(_) => (false, "success".to_string()),
            Err(e) => (expected(e), e.to_string()),
        };
        Check { what: what.into(), provenance, expected: name.into(), actual, passed }
    }
}

fn render<T: Debug>(x: &T) -> String {
    let s = format!("{x:?}");
    s.strip_prefix('"').and_then(|t| t.strip_suffix('"')).map(str::to_string).unwrap_or(s)
}

/// Display for scalars without the quoting `Debug` adds.
pub fn show(x: &impl Display) -> String {
    x.to_string()
}

/// Options shared by gallery and acceptance runs.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub size_cap: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { size_cap: GALLERY_SIZE_CAP }
    }
}

/// Outcome of one entry or criterion.
#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    /// Set when the run stopped on an unexpected error.
    pub error: Option<String>,
    pub elapsed_ms: u64,
}

impl Outcome {
    pub fn run(name: &str, f: impl FnOnce() -> Result<Vec<Check>>) -> Outcome {
        let start = Instant::now();
        let res = f();
        let elapsed_ms = start.elapsed().as_millis() as u64;
        match res {
            Ok(checks) => Outcome { name: name.into(), passed: checks.iter().all(|c| c.passed), checks, error: None, elapsed_ms },
            Err(e) => Outcome { name: name.into(), passed: false, checks: Vec::new(), error: Some(e.to_string()), elapsed_ms },
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("outcome serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} ({} ms)\n", if self.passed { "PASS" } else { "FAIL" }, self.name, self.elapsed_ms);
        for c in &self.checks {
            let mark = if c.passed { "ok" } else { "MISMATCH" };
            out.push_str(&format!("  [{mark}] {} ({:?}): expected {}, got {}\n", c.what, c.provenance, c.expected, c.actual));
        }
        if let Some(e) = &self.error {
            out.push_str(&format!("  error: {e}\n"));
        }
        out
    }
}

/// Runs the named entry.
pub fn run_entry(name: &str, settings: &Settings) -> Result<Outcome> {
    let entry = entries().into_iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownEntry(name.into()))?;
    Ok(Outcome::run(entry.name, || (entry.run)(settings)))
}
