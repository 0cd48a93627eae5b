use std::collections::BTreeMap;
use std::fmt;

use crate::linear::{tensor::multi_index, Mat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Undecided => "undecided",
        })
    }
}

/// One named check with its outcome and, on failure, a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub name: String,
    pub status: Status,
    pub witness: Option<String>,
}

impl Verdict {
    pub fn pass(name: impl Into<String>) -> Verdict {
        Verdict {
            name: name.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Verdict {
        Verdict {
            name: name.into(),
            status: Status::Fail,
            witness: Some(witness.into()),
        }
    }

    pub fn undecided(name: impl Into<String>, note: impl Into<String>) -> Verdict {
        Verdict {
            name: name.into(),
            status: Status::Undecided,
            witness: Some(note.into()),
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, witness: impl Into<String>) -> Verdict {
        if ok {
            Verdict::pass(name)
        } else {
            Verdict::fail(name, witness)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Verdict {
        self.witness = Some(note.into());
        self
    }
}

/// Ordered collection of verdicts plus named dimensions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub verdicts: Vec<Verdict>,
    pub dims: BTreeMap<String, usize>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, v: Verdict) {
        self.verdicts.push(v);
    }

    pub fn dim(&mut self, name: impl Into<String>, d: usize) {
        self.dims.insert(name.into(), d);
    }

    pub fn extend(&mut self, prefix: &str, other: Report) {
        for mut v in other.verdicts {
            if !prefix.is_empty() {
                v.name = format!("{prefix}.{}", v.name);
            }
            self.verdicts.push(v);
        }
        for (k, d) in other.dims {
            let key = if prefix.is_empty() {
                k
            } else {
                format!("{prefix}.{k}")
            };
            self.dims.insert(key, d);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.status == Status::Pass)
    }

    /// `Fail` dominates `Undecided`, which dominates `Pass`.
    pub fn overall(&self) -> Status {
        if self.verdicts.iter().any(|v| v.status == Status::Fail) {
            Status::Fail
        } else if self.verdicts.iter().any(|v| v.status == Status::Undecided) {
            Status::Undecided
        } else {
            Status::Pass
        }
    }

    pub fn get(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|v| v.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| v.status == Status::Fail)
    }
}

/// Compares two matrices column by column; on mismatch the witness names
/// the first differing input basis tuple.
pub(crate) fn compare_maps(name: &str, lhs: &Mat, rhs: &Mat, legs: &[&[String]]) -> Verdict {
    assert_eq!(
        lhs.shape(),
        rhs.shape(),
        "{name}: compared maps differ in shape"
    );
    match lhs.first_differing_column(rhs) {
        None => Verdict::pass(name),
        Some(col) => Verdict::fail(name, describe_tuple(legs, col)),
    }
}

pub(crate) fn describe_tuple(legs: &[&[String]], flat: usize) -> String {
    let dims: Vec<usize> = legs.iter().map(|l| l.len()).collect();
    let idx = multi_index(&dims, flat);
    let names: Vec<&str> = idx.iter().zip(legs).map(|(&i, l)| l[i].as_str()).collect();
    format!("basis ({})", names.join(", "))
}
