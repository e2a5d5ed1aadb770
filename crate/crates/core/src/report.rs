use serde::Serialize;

/// One failed law instance. Violations are data, never panics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: String,
    pub ids: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Violation {
    pub fn new(
        law: impl Into<String>,
        ids: Vec<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) -> Violation {
        Violation { law: law.into(), ids, lhs: lhs.into(), rhs: rhs.into() }
    }
}

pub type Report = Vec<Violation>;

pub fn to_json(report: &[Violation]) -> serde_json::Value {
    serde_json::to_value(report).unwrap_or(serde_json::Value::Null)
}
