//! Check reports shared by all verifiers.

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// Outcome of a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// The check could not be decided with the requested method (e.g. a
    /// reduction whose justification requires strict positivity was asked
    /// for on an input with zeros). Never a silent pass.
    Inconclusive,
}

/// Location and raw values of the worst offending quantity found by a check.
///
/// `indices` is check-specific (for a 2x2 minor: `[i1, i2, j1, j2]`; for a
/// lattice pair: both multi-indices concatenated). `values` holds the raw
/// entries that enter the quantity and `quantity` the raw (unnormalized)
/// value that was required to be nonnegative.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct Witness<T: Scalar> {
    pub indices: Vec<usize>,
    pub values: Vec<T>,
    pub quantity: T,
}

/// Report of a single deterministic check.
///
/// `worst_violation` is the most negative normalized quantity observed
/// (0 if nothing negative was seen), so that `verdict == Fail` holds exactly
/// when `worst_violation < -tolerance` regardless of the scale of the input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct CheckReport<T: Scalar> {
    pub verdict: Verdict,
    pub worst_violation: T,
    pub witness: Option<Witness<T>>,
    pub tolerance: T,
    pub checks_performed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl<T: Scalar> CheckReport<T> {
    /// Builds a report from the scan outcome, enforcing the
    /// `verdict == Fail  <=>  worst_violation < -tolerance` invariant.
    pub fn from_scan(
        worst_violation: T,
        witness: Option<Witness<T>>,
        tolerance: T,
        checks_performed: u64,
    ) -> Self {
        let worst = worst_violation.min(T::zero());
        let verdict = if worst < -tolerance {
            Verdict::Fail
        } else {
            Verdict::Pass
        };
        let witness = match verdict {
            Verdict::Fail => witness,
            _ => witness.filter(|_| worst < T::zero()),
        };
        CheckReport {
            verdict,
            worst_violation: worst,
            witness,
            tolerance,
            checks_performed,
            note: None,
        }
    }

    pub fn inconclusive(tolerance: T, note: impl Into<String>) -> Self {
        CheckReport {
            verdict: Verdict::Inconclusive,
            worst_violation: T::zero(),
            witness: None,
            tolerance,
            checks_performed: 0,
            note: Some(note.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }
}

/// Tracks the minimum normalized quantity seen during a scan together with
/// the first witness (in scan order) attaining it. Merging two trackers is
/// associative and order-independent as long as each side carries the scan
/// order of its own chunk, which keeps parallel scans deterministic.
#[derive(Debug, Clone)]
pub struct ViolationTracker<T: Scalar> {
    pub worst: T,
    pub witness: Option<Witness<T>>,
    /// Scan rank of the stored witness, used to break exact ties.
    rank: u64,
    pub checks: u64,
}

impl<T: Scalar> ViolationTracker<T> {
    pub fn new() -> Self {
        ViolationTracker {
            worst: T::zero(),
            witness: None,
            rank: u64::MAX,
            checks: 0,
        }
    }

    /// Records a normalized quantity with its raw witness. `rank` must be a
    /// total order over scan positions (e.g. a linearized index).
    pub fn record(&mut self, normalized: T, rank: u64, witness: impl FnOnce() -> Witness<T>) {
        self.checks += 1;
        if normalized < self.worst || (normalized == self.worst && rank < self.rank) {
            if normalized < T::zero() {
                self.worst = normalized;
                self.witness = Some(witness());
                self.rank = rank;
            }
        }
    }

    pub fn merge(mut self, other: Self) -> Self {
        self.checks += other.checks;
        let take_other = other.worst < self.worst
            || (other.worst == self.worst && other.rank < self.rank);
        if take_other {
            self.worst = other.worst;
            self.witness = other.witness;
            self.rank = other.rank;
        }
        self
    }

    pub fn into_report(self, tolerance: T) -> CheckReport<T> {
        CheckReport::from_scan(self.worst, self.witness, tolerance, self.checks)
    }
}

impl<T: Scalar> Default for ViolationTracker<T> {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fail_iff_worst_below_minus_tolerance() {
        let r = CheckReport::<f64>::from_scan(-1e-3, None, 1e-10, 5);
        assert_eq!(r.verdict, Verdict::Fail);
        let r = CheckReport::<f64>::from_scan(-1e-12, None, 1e-10, 5);
        assert_eq!(r.verdict, Verdict::Pass);
        let r = CheckReport::<f64>::from_scan(0.5, None, 1e-10, 5);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.worst_violation, 0.0);
    }

    #[test]
    fn tracker_prefers_most_negative_then_lowest_rank() {
        let w = |q: f64| Witness {
            indices: vec![0],
            values: vec![q],
            quantity: q,
        };
        let mut a = ViolationTracker::<f64>::new();
        a.record(-0.5, 3, || w(-0.5));
        a.record(-0.5, 1, || w(-0.51));
        assert_eq!(a.witness.as_ref().unwrap().values[0], -0.51);

        let mut b = ViolationTracker::<f64>::new();
        b.record(-0.7, 9, || w(-0.7));
        let merged = a.merge(b);
        assert_eq!(merged.worst, -0.7);
        assert_eq!(merged.checks, 3);
    }

    #[test]
    fn serializes_with_fixed_field_names() {
        let r = CheckReport::<f64>::from_scan(-0.25, Some(Witness {
            indices: vec![1, 2],
            values: vec![0.1, 0.2],
            quantity: -0.25,
        }), 1e-10, 2);
        let json = serde_json::to_value(&r).unwrap();
        for key in ["verdict", "worst_violation", "witness", "tolerance", "checks_performed"] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
    }
}
