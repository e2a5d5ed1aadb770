use std::fmt;

use serde::{Serialize, Serializer};

/// Canonical, structured name for objects, morphisms and simplices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Int(i64),
    Sym(String),
    Tag(String, Box<Label>),
    Tup(Vec<Label>),
}

impl Label {
    pub fn int(n: impl TryInto<i64>) -> Label {
        Label::Int(n.try_into().unwrap_or(i64::MAX))
    }

    pub fn sym(s: impl Into<String>) -> Label {
        Label::Sym(s.into())
    }

    pub fn tag(t: impl Into<String>, inner: Label) -> Label {
        Label::Tag(t.into(), Box::new(inner))
    }

    pub fn tup(items: impl IntoIterator<Item = Label>) -> Label {
        Label::Tup(items.into_iter().collect())
    }

    pub fn pair(a: Label, b: Label) -> Label {
        Label::Tup(vec![a, b])
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(n) => write!(f, "{n}"),
            Label::Sym(s) => f.write_str(s),
            Label::Tag(t, inner) => write!(f, "{t}[{inner}]"),
            Label::Tup(items) => {
                f.write_str("(")?;
                for (k, item) in items.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Label {
        Label::Sym(s.to_string())
    }
}

impl From<i64> for Label {
    fn from(n: i64) -> Label {
        Label::Int(n)
    }
}
