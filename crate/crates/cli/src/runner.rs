use awfs_core::{Error, Report, Result};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Cap,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Cap => "cap",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub id: String,
    pub law: String,
    pub status: Status,
    pub witness: Option<Value>,
}

impl Check {
    pub fn to_json(&self) -> Value {
        let mut v = json!({"id": self.id, "law": self.law, "status": self.status.as_str()});
        if let Some(w) = &self.witness {
            v["witness"] = w.clone();
        }
        v
    }
}

/// Collects checks; stops running further steps after the first resource cap.
#[derive(Default)]
pub struct Runner {
    pub checks: Vec<Check>,
}

fn error_witness(e: &Error) -> Value {
    json!({ "error": e.to_string() })
}

impl Runner {
    pub fn capped(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Cap)
    }

    fn push(&mut self, id: &str, law: &str, status: Status, witness: Option<Value>) {
        println!("{:<4} {id}: {law}", status.as_str().to_uppercase());
        self.checks.push(Check { id: id.into(), law: law.into(), status, witness });
    }

    /// Pass iff the computation succeeds with an empty report.
    pub fn report(&mut self, id: &str, law: &str, run: impl FnOnce() -> Result<Report>) {
        if self.capped() {
            return;
        }
        match run() {
            Ok(r) if r.is_empty() => self.push(id, law, Status::Pass, None),
            Ok(r) => {
                let witness = json!({"violations": r.len(), "first": awfs_core::report::to_json(&r[..1])[0]});
                self.push(id, law, Status::Fail, Some(witness));
            }
            Err(e) => self.error(id, law, &e),
        }
    }

    /// Pass iff `run` yields `(true, witness)`.
    pub fn expect(&mut self, id: &str, law: &str, run: impl FnOnce() -> Result<(bool, Value)>) {
        if self.capped() {
            return;
        }
        match run() {
            Ok((ok, w)) => self.push(id, law, if ok { Status::Pass } else { Status::Fail }, Some(w)),
            Err(e) => self.error(id, law, &e),
        }
    }

    fn error(&mut self, id: &str, law: &str, e: &Error) {
        let status = if e.is_resource_cap() { Status::Cap } else { Status::Fail };
        self.push(id, law, status, Some(error_witness(e)));
    }

    /// 2 on a resource cap, 1 on any failure, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.capped() {
            2
        } else if self.checks.iter().any(|c| c.status == Status::Fail) {
            1
        } else {
            0
        }
    }
}
