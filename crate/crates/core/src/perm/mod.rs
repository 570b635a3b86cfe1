//! Permutations of `[n]` in one-line notation.
//!
//! Values and positions are 1-based in every public accessor and in every
//! serialized form. Storage is a compact byte word.

mod composition;
mod cycle;

pub use composition::{compositions, Composition};
pub use cycle::{omega, CyclicForm};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on `n` for operations that enumerate subsets of `S_n`.
pub const DEFAULT_MAX_N: usize = 12;

/// Largest `n` a [`Permutation`] can hold.
pub const MAX_WORD_LEN: usize = u8::MAX as usize;

/// A permutation `x = [x(1), ..., x(n)]` of `[n]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Box<[u8]>,
}

impl Permutation {
    /// Builds a permutation from its one-line word, rejecting anything that is
    /// not a bijection of `{1, ..., n}`.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        Self::with_max_n(word, MAX_WORD_LEN)
    }

    pub fn with_max_n(word: Vec<usize>, max_n: usize) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::InvalidPermutation { word, reason: "empty word" });
        }
        let max_n = max_n.min(MAX_WORD_LEN);
        if n > max_n {
            return Err(Error::BoundExceeded { n, max: max_n });
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation { word, reason: "value out of range 1..n" });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation { word, reason: "repeated value" });
            }
        }
        Ok(Permutation { word: word.into_iter().map(|v| v as u8).collect() })
    }

    /// Internal constructor for words already known to be bijections.
    pub(crate) fn from_bytes(word: Box<[u8]>) -> Self {
        debug_assert!({
            let mut s = word.to_vec();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
        });
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1 && n <= u8::MAX as usize, "identity of S_{n} is not representable");
        Permutation { word: (1..=n as u8).collect() }
    }

    /// `n`, the size of the ground set.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.word.len()
    }

    /// `x(pos)` for a 1-based position.
    pub fn at(&self, pos: usize) -> usize {
        self.word[pos - 1] as usize
    }

    pub fn bytes(&self) -> &[u8] {
        &self.word
    }

    pub fn word(&self) -> Vec<usize> {
        self.word.iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Number of pairs `i < j` with `x(i) > x(j)`.
    pub fn inversions(&self) -> usize {
        inversions_of(&self.word)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.len()];
        for (pos, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = pos as u8 + 1;
        }
        Permutation { word: inv.into_boxed_slice() }
    }

    /// `x . (i,j)`: the word with the entries at positions `i` and `j` exchanged.
    pub fn apply_transposition_right(&self, t: Transposition) -> Result<Permutation> {
        if t.j > self.len() {
            return Err(Error::InvalidTransposition { i: t.i, j: t.j, n: self.len() });
        }
        Ok(self.swapped(t.i, t.j))
    }

    pub(crate) fn swapped(&self, i: usize, j: usize) -> Permutation {
        let mut word = self.word.clone();
        word.swap(i - 1, j - 1);
        Permutation { word }
    }

    /// Decomposes into disjoint cycles, each led by its minimum, leaders increasing,
    /// fixed points kept.
    pub fn standard_cyclic_form(&self) -> CyclicForm {
        let n = self.len();
        let mut visited = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !visited[cur] {
                visited[cur] = true;
                cycle.push(cur);
                cur = self.at(cur);
            }
            cycles.push(cycle);
        }
        CyclicForm::from_valid(cycles)
    }

    /// Cycle lengths of the standard cyclic form, in order.
    pub fn composition_type(&self) -> Composition {
        let parts = self.standard_cyclic_form().cycles().iter().map(Vec::len).collect();
        Composition::from_valid(parts)
    }

    /// `Omega(x)`: standard cyclic form with the parentheses erased.
    pub fn omega_image(&self) -> Permutation {
        self.standard_cyclic_form().omega()
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations { next: Some((1..=n as u8).collect()) }
    }

    /// Position of this permutation in the lexicographic listing of `S_n`.
    pub fn lex_rank(&self) -> usize {
        let n = self.len();
        let mut rank = 0;
        let mut fact = vec![1usize; n + 1];
        for i in 1..=n {
            fact[i] = fact[i - 1] * i;
        }
        for i in 0..n {
            let smaller_later = self.word[i + 1..].iter().filter(|&&v| v < self.word[i]).count();
            rank += smaller_later * fact[n - 1 - i];
        }
        rank
    }
}

pub(crate) fn inversions_of(word: &[u8]) -> usize {
    let mut count = 0;
    for (i, &a) in word.iter().enumerate() {
        count += word[i + 1..].iter().filter(|&&b| b < a).count();
    }
    count
}

pub struct AllPermutations {
    next: Option<Vec<u8>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        if current.is_empty() {
            return None;
        }
        let mut succ = current.clone();
        // standard next-permutation step
        if let Some(i) = (0..succ.len().saturating_sub(1)).rev().find(|&i| succ[i] < succ[i + 1]) {
            let j = (i + 1..succ.len()).rev().find(|&j| succ[j] > succ[i]).unwrap();
            succ.swap(i, j);
            succ[i + 1..].reverse();
            self.next = Some(succ);
        }
        Some(Permutation { word: current.into_boxed_slice() })
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.word()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"[1,6,5,2,3,4]"` or `"1,6,5,2,3,4"`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let word = parse_list(inner).ok_or_else(|| Error::InvalidPermutation {
            word: vec![],
            reason: "not a comma-separated list of integers",
        })?;
        Permutation::new(word)
    }
}

pub(crate) fn parse_list(s: &str) -> Option<Vec<usize>> {
    s.split(',').map(|t| t.trim().parse::<usize>().ok()).collect()
}

/// The transposition `(i,j)`, `i < j`, acting on positions.
///
/// Ordered lexicographically by `(i, j)`; this is the edge-label order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Transposition {
    pub i: usize,
    pub j: usize,
}

impl Transposition {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j {
            return Err(Error::InvalidTransposition { i, j, n: j });
        }
        Ok(Transposition { i, j })
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl fmt::Debug for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
