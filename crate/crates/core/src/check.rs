//! Tiny shared vocabulary for checkers: counted checks plus an optional
//! first witness, always the lexicographically least one in scan order so
//! results are reproducible across thread counts.

/// A named counterexample; `parts` holds element/operator identifiers and
/// index bindings rendered as strings.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Witness {
    pub label: String,
    pub parts: Vec<String>,
}

impl Witness {
    pub fn new(label: impl Into<String>, parts: Vec<String>) -> Self {
        Witness { label: label.into(), parts }
    }
}

/// Outcome of scanning a finite space of instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub checks: u64,
    pub witness: Option<Witness>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    pub fn pass(checks: u64) -> Self {
        CheckOutcome { checks, witness: None }
    }

    pub fn fail(checks: u64, witness: Witness) -> Self {
        CheckOutcome { checks, witness: Some(witness) }
    }

    /// Merges sequential sub-scans, keeping the first witness.
    pub fn and(self, other: CheckOutcome) -> CheckOutcome {
        CheckOutcome {
            checks: self.checks + other.checks,
            witness: self.witness.or(other.witness),
        }
    }
}
