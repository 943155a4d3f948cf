use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::Count;

/// One mismatch found by a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of a verification run over `n_min..=n_max`.
///
/// Serializes as `{suite, n_max, checked, failures}`; `checked` is a JSON
/// number when it fits in 64 bits and a decimal string otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    #[serde(skip)]
    pub n_min: usize,
    pub n_max: usize,
    #[serde(serialize_with = "count_as_number")]
    pub checked: Count,
    pub failures: Vec<Failure>,
}

fn count_as_number<S: Serializer>(c: &Count, s: S) -> Result<S::Ok, S::Error> {
    match c.to_u64() {
        Some(v) => s.serialize_u64(v),
        None => s.serialize_str(&c.to_string()),
    }
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, n_min: usize, n_max: usize) -> Self {
        VerificationReport {
            suite: suite.into(),
            n_min,
            n_max,
            checked: Count::zero(),
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one check; `failure` is only built when `ok` is false.
    pub fn check(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        self.checked += 1u32;
        if !ok {
            self.failures.push(failure());
        }
    }

    pub fn check_eq<T: PartialEq + fmt::Debug>(
        &mut self,
        input: impl FnOnce() -> String,
        expected: T,
        actual: T,
    ) {
        let ok = expected == actual;
        self.check(ok, || Failure {
            input: input(),
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
        });
    }

    /// Folds `other`'s checks and failures into `self`.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite:    {}", self.suite)?;
        writeln!(f, "n range:  {}..={}", self.n_min, self.n_max)?;
        writeln!(f, "checked:  {}", self.checked)?;
        writeln!(f, "failures: {}", self.failures.len())?;
        for x in &self.failures {
            writeln!(
                f,
                "  {}: expected {}, got {}",
                x.input, x.expected, x.actual
            )?;
        }
        write!(
            f,
            "result:   {}",
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}
