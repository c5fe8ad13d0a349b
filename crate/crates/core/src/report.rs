//! Pass/fail records shared by the verification routines.

use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub id: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn new(id: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let expected = expected.to_string();
        let actual = actual.to_string();
        let pass = expected == actual;
        Self { id: id.into(), expected, actual, pass }
    }

    pub fn with_pass(id: impl Into<String>, expected: impl ToString, actual: impl ToString, pass: bool) -> Self {
        Self { id: id.into(), expected: expected.to_string(), actual: actual.to_string(), pass }
    }

    pub fn to_json(&self) -> Value {
        json!({ "id": self.id, "expected": self.expected, "actual": self.actual, "pass": self.pass })
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.checks.iter().map(Check::to_json).collect())
    }
}
