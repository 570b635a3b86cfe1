use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::parse_list;
use crate::error::{Error, Result};

/// An ordered list of positive parts `(l_1, ..., l_k)` summing to `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("zero part in {parts:?}")));
        }
        Ok(Composition { parts })
    }

    pub(crate) fn from_valid(parts: Vec<usize>) -> Self {
        debug_assert!(!parts.is_empty() && !parts.contains(&0));
        Composition { parts }
    }

    /// `(1, 1, ..., 1)` with `n` parts.
    pub fn ones(n: usize) -> Self {
        Composition::from_valid(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `k`.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_all_ones(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// 1-based index `j` of the rightmost part exceeding 1.
    pub fn rightmost_big_part(&self) -> Option<usize> {
        self.parts.iter().rposition(|&p| p > 1).map(|idx| idx + 1)
    }

    /// `l_1 + ... + l_j` for 1-based `j`.
    pub fn prefix_sum(&self, j: usize) -> usize {
        self.parts[..j].iter().sum()
    }

    /// Number of trailing parts equal to 1.
    pub fn trailing_ones(&self) -> usize {
        self.parts.iter().rev().take_while(|&&p| p == 1).count()
    }

    /// Splits the rightmost part `l_j > 1` into `l_j - 1, 1`.
    pub fn st(&self) -> Result<Composition> {
        let j = self.rightmost_big_part().ok_or_else(|| Error::Undefined {
            lambda: self.to_string(),
            reason: "every part equals 1",
        })?;
        let mut parts = self.parts.clone();
        parts[j - 1] -= 1;
        parts.insert(j, 1);
        Ok(Composition::from_valid(parts))
    }

    /// Applies `st` while the last part exceeds 1; the resulting poset is unchanged.
    pub fn normalized(&self) -> Composition {
        let mut lambda = self.clone();
        while *lambda.parts.last().unwrap() > 1 {
            lambda = lambda.st().expect("last part exceeds 1");
        }
        lambda
    }
}

/// All compositions of `n` in lexicographic order of their part sequences.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn rec(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition::from_valid(prefix.clone()));
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            rec(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

/// Parses `"4,1,1"`, optionally wrapped in parentheses.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = parse_list(inner)
            .ok_or_else(|| Error::InvalidComposition(format!("cannot parse {s:?}")))?;
        Composition::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(c("4,1,1").parts(), &[4, 1, 1]);
        assert_eq!(c("(4, 1, 1)").to_string(), "(4,1,1)");
        assert!("4,0,1".parse::<Composition>().is_err());
        assert!("".parse::<Composition>().is_err());
        assert!("4,x".parse::<Composition>().is_err());
        assert!("-1,2".parse::<Composition>().is_err());
    }

    #[test]
    fn st_operator() {
        assert_eq!(c("4,3").st().unwrap(), c("4,2,1"));
        assert_eq!(c("1,2,1,3,1,1").st().unwrap(), c("1,2,1,2,1,1,1"));
        assert_eq!(c("2,1,1").st().unwrap(), c("1,1,1,1"));
        assert!(matches!(c("1,1,1").st(), Err(Error::Undefined { .. })));
    }

    #[test]
    fn trailing_ones_count() {
        assert_eq!(c("1,5,1,3,1,1,1,1").trailing_ones(), 4);
        assert_eq!(c("1,1,1").trailing_ones(), 3);
        assert_eq!(c("4,2").trailing_ones(), 0);
    }

    #[test]
    fn normalization() {
        assert_eq!(c("6").normalized(), c("5,1"));
        assert_eq!(c("4,2").normalized(), c("4,1,1"));
        assert_eq!(c("1,1,2").normalized(), c("1,1,1,1"));
        assert_eq!(c("3,1,1").normalized(), c("3,1,1"));
    }

    #[test]
    fn composition_listing() {
        let all = compositions(6);
        assert_eq!(all.len(), 32);
        assert!(all.windows(2).all(|w| w[0].parts() < w[1].parts()));
        assert!(all.iter().all(|l| l.n() == 6));
        assert_eq!(all.first().unwrap(), &Composition::ones(6));
        assert_eq!(all.last().unwrap(), &c("6"));
        assert!(compositions(0).is_empty());
    }
}
