//! Untyped structured values.
//!
//! Objects, arrows and fibre elements of virtual categories are all `Val`s:
//! symbols, integers and sequences. The derived `Ord` is the canonical order
//! behind every deterministic enumeration, and the JSON encoding (string,
//! number, array) is the wire form used in certificates.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Val {
    Int(i64),
    Sym(String),
    Seq(Vec<Val>),
}

impl Val {
    pub fn sym(s: impl Into<String>) -> Val {
        Val::Sym(s.into())
    }

    pub fn seq(items: Vec<Val>) -> Val {
        Val::Seq(items)
    }

    /// Tagged sequence `[tag, items...]`; the convention for structured data
    /// such as spans, pairs and tables.
    pub fn tag(tag: &str, items: Vec<Val>) -> Val {
        let mut v = vec![Val::sym(tag)];
        v.extend(items);
        Val::Seq(v)
    }

    pub fn pair(a: Val, b: Val) -> Val {
        Val::tag("pair", vec![a, b])
    }

    /// The canonical element of terminal objects.
    pub fn star() -> Val {
        Val::sym("*")
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Val::Int(i) => Some(*i),
            _ => None,
        }
    }

    pub fn as_sym(&self) -> Option<&str> {
        match self {
            Val::Sym(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_seq(&self) -> Option<&[Val]> {
        match self {
            Val::Seq(items) => Some(items),
            _ => None,
        }
    }

    /// Untag `[tag, items...]`, returning the items when the tag matches.
    pub fn untag(&self, tag: &str) -> Option<&[Val]> {
        let items = self.as_seq()?;
        if items.first()?.as_sym()? == tag {
            Some(&items[1..])
        } else {
            None
        }
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Int(i) => write!(f, "{i}"),
            Val::Sym(s) => write!(f, "{s}"),
            Val::Seq(items) => {
                write!(f, "(")?;
                for (k, it) in items.iter().enumerate() {
                    if k > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{it}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl fmt::Debug for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<&str> for Val {
    fn from(s: &str) -> Val {
        Val::sym(s)
    }
}

impl From<i64> for Val {
    fn from(i: i64) -> Val {
        Val::Int(i)
    }
}
