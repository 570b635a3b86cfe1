use std::fmt;

use serde::{Deserialize, Serialize};

use super::{parse_list, Permutation, MAX_WORD_LEN};
use crate::error::{Error, Result};

/// A product of disjoint cycles in standard form: every cycle starts with its
/// minimum, the leading entries increase from left to right, and fixed points
/// appear as cycles of length one.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct CyclicForm {
    cycles: Vec<Vec<usize>>,
}

impl CyclicForm {
    pub fn new(cycles: Vec<Vec<usize>>) -> Result<Self> {
        validate(&cycles)?;
        Ok(CyclicForm { cycles })
    }

    pub(crate) fn from_valid(cycles: Vec<Vec<usize>>) -> Self {
        debug_assert!(validate(&cycles).is_ok());
        CyclicForm { cycles }
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn n(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    /// The permutation this cycle product denotes: each entry maps to its
    /// successor in its cycle.
    pub fn to_permutation(&self) -> Permutation {
        let mut word = vec![0u8; self.n()];
        for cycle in &self.cycles {
            for (idx, &a) in cycle.iter().enumerate() {
                let b = cycle[(idx + 1) % cycle.len()];
                word[a - 1] = b as u8;
            }
        }
        Permutation::from_bytes(word.into_boxed_slice())
    }

    /// `Omega`: erase the parentheses and read the word in one-line notation.
    pub fn omega(&self) -> Permutation {
        let word: Box<[u8]> = self.cycles.iter().flatten().map(|&v| v as u8).collect();
        Permutation::from_bytes(word)
    }
}

/// `Omega` applied to a raw cycle list; fails unless the list is a standard form.
pub fn omega(cycles: &[Vec<usize>]) -> Result<Permutation> {
    validate(cycles)?;
    Ok(CyclicForm::from_valid(cycles.to_vec()).omega())
}

fn validate(cycles: &[Vec<usize>]) -> Result<()> {
    let n: usize = cycles.iter().map(Vec::len).sum();
    if n == 0 {
        return Err(Error::NotStandardForm("no entries".into()));
    }
    if n > MAX_WORD_LEN {
        return Err(Error::BoundExceeded { n, max: MAX_WORD_LEN });
    }
    let mut seen = vec![false; n + 1];
    let mut prev_leader = 0;
    for cycle in cycles {
        let Some(&leader) = cycle.first() else {
            return Err(Error::NotStandardForm("empty cycle".into()));
        };
        for &v in cycle {
            if v == 0 || v > n {
                return Err(Error::NotStandardForm(format!("entry {v} outside 1..{n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotStandardForm(format!("entry {v} repeated")));
            }
            if v < leader {
                return Err(Error::NotStandardForm(format!(
                    "cycle led by {leader} contains smaller entry {v}"
                )));
            }
        }
        if leader <= prev_leader {
            return Err(Error::NotStandardForm(format!(
                "leader {leader} does not exceed previous leader {prev_leader}"
            )));
        }
        prev_leader = leader;
    }
    Ok(())
}

impl TryFrom<Vec<Vec<usize>>> for CyclicForm {
    type Error = Error;

    fn try_from(cycles: Vec<Vec<usize>>) -> Result<Self> {
        CyclicForm::new(cycles)
    }
}

impl From<CyclicForm> for Vec<Vec<usize>> {
    fn from(c: CyclicForm) -> Self {
        c.cycles
    }
}

impl fmt::Display for CyclicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            f.write_str("(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"(1,2)(3)(4,5)"`.
impl std::str::FromStr for CyclicForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let body = s
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| Error::NotStandardForm(format!("cannot parse {s:?}")))?;
        let cycles = body
            .split(")(")
            .map(|c| parse_list(c).ok_or_else(|| Error::NotStandardForm(format!("cannot parse {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        CyclicForm::new(cycles)
    }
}
