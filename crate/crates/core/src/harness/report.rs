use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::ser::{Error as _, Serializer};
use serde::Serialize;
use serde_json::value::RawValue;

pub const SCHEMA_VERSION: u32 = 1;

/// Expected/actual value of a case. Integers are exact and may exceed 64 bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaseValue {
    Bool(bool),
    Int(BigUint),
}

impl From<bool> for CaseValue {
    fn from(b: bool) -> Self {
        CaseValue::Bool(b)
    }
}

impl From<u64> for CaseValue {
    fn from(v: u64) -> Self {
        CaseValue::Int(v.into())
    }
}

impl From<usize> for CaseValue {
    fn from(v: usize) -> Self {
        CaseValue::Int((v as u64).into())
    }
}

impl From<BigUint> for CaseValue {
    fn from(v: BigUint) -> Self {
        CaseValue::Int(v)
    }
}

impl From<crate::psi::PsiValue> for CaseValue {
    fn from(v: crate::psi::PsiValue) -> Self {
        CaseValue::Int(v.into_inner())
    }
}

impl std::fmt::Display for CaseValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CaseValue::Bool(b) => b.fmt(f),
            CaseValue::Int(n) => n.fmt(f),
        }
    }
}

impl Serialize for CaseValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CaseValue::Bool(b) => s.serialize_bool(*b),
            CaseValue::Int(n) => RawValue::from_string(n.to_string())
                .map_err(S::Error::custom)?
                .serialize(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Case {
    pub group: String,
    pub subgroup_generators: Option<Vec<Vec<u64>>>,
    pub check: String,
    pub expected: CaseValue,
    pub actual: CaseValue,
    pub pass: bool,
}

impl Case {
    /// A case that passes when `actual == expected`.
    pub fn compare(
        group: impl Into<String>,
        subgroup_generators: Option<Vec<Vec<u64>>>,
        check: impl Into<String>,
        expected: impl Into<CaseValue>,
        actual: impl Into<CaseValue>,
    ) -> Self {
        let (expected, actual) = (expected.into(), actual.into());
        Case {
            group: group.into(),
            subgroup_generators,
            check: check.into(),
            pass: expected == actual,
            expected,
            actual,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub cases: Vec<Case>,
    pub summary: Summary,
    pub runtime_ms: u64,
}

impl VerificationReport {
    pub fn new(
        suite: &str,
        parameters: BTreeMap<String, serde_json::Value>,
        cases: Vec<Case>,
        runtime_ms: u64,
    ) -> Self {
        let passed = cases.iter().filter(|c| c.pass).count();
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            suite: suite.to_string(),
            parameters,
            summary: Summary {
                total: cases.len(),
                passed,
                failed: cases.len() - passed,
            },
            cases,
            runtime_ms,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Summary table plus up to `max_failures` failing cases.
    pub fn to_table(&self, max_failures: usize) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite       {}", self.suite);
        for (k, v) in &self.parameters {
            let _ = writeln!(out, "  {k:<10} {v}");
        }
        let _ = writeln!(
            out,
            "cases       {} total, {} passed, {} failed  ({} ms)",
            self.summary.total, self.summary.passed, self.summary.failed, self.runtime_ms
        );
        let mut by_check: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for c in &self.cases {
            let e = by_check.entry(&c.check).or_default();
            e.0 += 1;
            if c.pass {
                e.1 += 1;
            }
        }
        for (check, (total, passed)) in by_check {
            let _ = writeln!(out, "  {check:<44} {passed:>6}/{total}");
        }
        for c in self.failures().take(max_failures) {
            let gens = c
                .subgroup_generators
                .as_ref()
                .map(|g| format!(" H=<{g:?}>"))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "FAIL [{}] G={}{} expected {} got {}",
                c.check, c.group, gens, c.expected, c.actual
            );
        }
        if self.summary.failed > max_failures {
            let _ = writeln!(
                out,
                "... {} more failures",
                self.summary.failed - max_failures
            );
        }
        out
    }
}
