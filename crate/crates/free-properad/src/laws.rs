use crate::{eta, flatten_at_level, insert_nesting_at, HasArity, Nested};
use std::fmt::{self, Debug};

/// Outcome of a randomized or exhaustive law check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub check: String,
    pub cases: usize,
    pub counterexamples: Vec<String>,
}

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Report { check: check.into(), ..Default::default() }
    }

    /// Count one case, keeping a description when it fails.
    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.counterexamples.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn merge(&mut self, other: Report) {
        self.cases += other.cases;
        self.counterexamples.extend(other.counterexamples);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{}: {} ({} cases, {} counterexamples)", self.check, verdict, self.cases, self.counterexamples.len())
    }
}

/// Associativity on depth-3 samples (flattening the outer or the inner
/// nesting first) and both unit laws on depth-1 samples. Other depths are
/// checked for the unit laws only.
pub fn check_monad_laws<L: HasArity + Clone + Eq + Debug>(samples: &[Nested<L>]) -> Report {
    let mut report = Report::new("monad laws");
    for x in samples {
        let depth = x.depth();
        if depth == 3 {
            let a = flatten_at_level(x, 0).and_then(|y| flatten_at_level(&y, 0));
            let b = flatten_at_level(x, 1).and_then(|y| flatten_at_level(&y, 0));
            report.record(a.is_ok() && a == b, || format!("associativity fails on {x:?}"));
        }
        if depth >= 1 {
            let c = x.canonical();
            let left = eta(x.clone()).and_then(|y| flatten_at_level(&y, 0));
            report.record(left.as_ref() == Ok(&c), || format!("left unit fails on {x:?}"));
            let right = insert_nesting_at(x, 0).and_then(|y| flatten_at_level(&y, 0));
            report.record(right.as_ref() == Ok(&c), || format!("right unit fails on {x:?}"));
        }
    }
    report
}
