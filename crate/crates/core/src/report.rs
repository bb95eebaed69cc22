//! The record every verifier in this crate returns.
//!
//! A report carries the two sides of an identity as *canonical strings* plus
//! the parameters that produced them.  The constructor computes `equal` from
//! the strings, so `equal == (lhs == rhs)` holds by construction: a verifier
//! cannot claim success while printing different sides.

use alloc::string::String;
use alloc::vec::Vec;

/// Outcome of one verification: an identity instance, a counting check, a
/// normal-form comparison, or a straightening certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// Which family of checks produced this report (e.g. `"qps"`,
    /// `"bijection"`, `"straighten"`).
    pub suite: String,
    /// The instance parameters, in a fixed order chosen by the verifier.
    pub params: Vec<(String, i64)>,
    /// Canonical rendering of the left-hand side / measured data.
    pub lhs: String,
    /// Canonical rendering of the right-hand side / expected data.
    pub rhs: String,
    /// Whether the two sides agree; always equals `lhs == rhs`.
    pub equal: bool,
    /// Free-form observations (negative-index summands, convention usage,
    /// specialization cross-checks, ...).  Never affects `equal`.
    pub notes: Vec<String>,
}

impl VerificationReport {
    /// Builds a report; `equal` is derived from the two sides.
    pub fn new(
        suite: impl Into<String>,
        params: Vec<(String, i64)>,
        lhs: String,
        rhs: String,
    ) -> Self {
        let equal = lhs == rhs;
        VerificationReport {
            suite: suite.into(),
            params,
            lhs,
            rhs,
            equal,
            notes: Vec::new(),
        }
    }

    /// Appends an observation note.
    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Appends many observation notes.
    pub fn with_notes(mut self, notes: impl IntoIterator<Item = String>) -> Self {
        self.notes.extend(notes);
        self
    }
}

/// Builds the `params` vector from `(&str, i64)` pairs.
pub fn params(pairs: &[(&str, i64)]) -> Vec<(String, i64)> {
    pairs.iter().map(|(k, v)| (String::from(*k), *v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_is_derived_from_the_sides() {
        let r = VerificationReport::new("demo", params(&[("n", 3)]), "x".into(), "x".into());
        assert!(r.equal);
        let r = VerificationReport::new("demo", params(&[("n", 3)]), "x".into(), "y".into());
        assert!(!r.equal);
    }

    #[test]
    fn notes_do_not_affect_equality() {
        let r = VerificationReport::new("demo", Vec::new(), "x".into(), "x".into())
            .with_note("observed something");
        assert!(r.equal);
        assert_eq!(r.notes.len(), 1);
    }
}
