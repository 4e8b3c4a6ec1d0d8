//! Verdict reports with full witness data, JSON-serializable.

use serde::{Deserialize, Serialize};

/// One structured counterexample: the offending pair of objects plus the
/// two values that were supposed to agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckWitness {
    pub left: WitnessObject,
    pub right: WitnessObject,
    pub expected: CheckValue,
    pub actual: CheckValue,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element_pair: Option<[String; 2]>,
}

/// An ideal or congruence appearing in a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessObject {
    pub label: String,
    /// RREF basis rows when the object is an ideal.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<u64>>>,
}

impl WitnessObject {
    pub fn labeled(label: String) -> Self {
        WitnessObject { label, basis: None }
    }

    pub fn with_basis(label: String, basis: Vec<Vec<u64>>) -> Self {
        WitnessObject {
            label,
            basis: Some(basis),
        }
    }
}

/// A compared value: partitions as their class-list rendering, relations
/// as 0/1 matrices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckValue {
    Partition(String),
    Relation(Vec<Vec<u8>>),
}

/// Verdict + witnesses for one paper-level property check.
///
/// Invariant: a false verdict always carries at least one witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub semigroup: String,
    /// Field characteristic; absent for semigroup-only checks.
    pub prime: Option<u64>,
    pub verdict: bool,
    pub witnesses: Vec<CheckWitness>,
    pub context_summary: String,
    pub timing_ms: u64,
    /// Whether the underlying semigroup is permutable (recorded by the
    /// composition-homomorphism check).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semigroup_permutable: Option<bool>,
    /// Whether ker phi is join-compatible (recorded alongside).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel_join_compatible: Option<bool>,
}

impl CheckReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_json_round_trip() {
        let report = CheckReport {
            check: "join-compatibility".into(),
            semigroup: "cyclic:4".into(),
            prime: Some(3),
            verdict: false,
            witnesses: vec![CheckWitness {
                left: WitnessObject::with_basis(
                    "Span(1+a²,a+a³)".into(),
                    vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1]],
                ),
                right: WitnessObject::labeled("{{1,a²},{a,a³}}".into()),
                expected: CheckValue::Partition("{{1,a,a²,a³}}".into()),
                actual: CheckValue::Partition("{{1,a²},{a,a³}}".into()),
                element_pair: Some(["1".into(), "a".into()]),
            }],
            context_summary: "8 ideals, 3 congruences".into(),
            timing_ms: 2,
            semigroup_permutable: Some(true),
            kernel_join_compatible: Some(false),
        };
        let json = report.to_json();
        let parsed: CheckReport = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, report);
    }

    #[test]
    fn optional_fields_stay_out_of_json() {
        let report = CheckReport {
            check: "permutability".into(),
            semigroup: "left-zero:2".into(),
            prime: None,
            verdict: true,
            witnesses: vec![],
            context_summary: String::new(),
            timing_ms: 0,
            semigroup_permutable: None,
            kernel_join_compatible: None,
        };
        let json = report.to_json();
        assert!(!json.contains("kernel_join_compatible"));
        let parsed: CheckReport = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, report);
    }
}
