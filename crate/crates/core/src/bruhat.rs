//! Bruhat-Chevalley order on `S_n`.
//!
//! [`bruhat_leq`] implements the sorted-truncation criterion: `v <= w` iff for
//! every `k` the first `k` entries of `v`, sorted non-increasingly, are
//! coordinatewise at most those of `w`. [`bruhat_leq_oracle`] is independent
//! of it: reachability along covering moves taken straight from the
//! definition (swap two entries, inversion count rises by exactly one).

use std::sync::OnceLock;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::perm::{Permutation, Transposition};

/// Largest `n` for which [`bruhat_leq_oracle`] will build its closure table.
pub const ORACLE_MAX_N: usize = 7;

/// `a <=_c b`: after sorting both non-increasingly, `a` is coordinatewise at most `b`.
pub fn containment_leq<T: Ord + Copy>(a: &[T], b: &[T]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch { left: a.len(), right: b.len() });
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable_by(|x, y| y.cmp(x));
    b.sort_unstable_by(|x, y| y.cmp(x));
    Ok(a.iter().zip(&b).all(|(x, y)| x <= y))
}

/// Row `k` holds the first `k` entries of a word sorted non-increasingly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SortedPrefixTable {
    rows: Vec<Vec<usize>>,
}

impl SortedPrefixTable {
    pub fn new(p: &Permutation) -> Self {
        let mut rows = Vec::with_capacity(p.len());
        let mut row: Vec<usize> = Vec::with_capacity(p.len());
        for v in p.word() {
            let at = row.partition_point(|&x| x > v);
            row.insert(at, v);
            rows.push(row.clone());
        }
        SortedPrefixTable { rows }
    }

    /// 1-based row `k`.
    pub fn row(&self, k: usize) -> &[usize] {
        &self.rows[k - 1]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }
}

fn check_sizes(v: &Permutation, w: &Permutation) -> Result<()> {
    if v.len() != w.len() {
        return Err(Error::SizeMismatch { left: v.len(), right: w.len() });
    }
    Ok(())
}

/// `v <= w` in Bruhat order, O(n^2).
pub fn bruhat_leq(v: &Permutation, w: &Permutation) -> Result<bool> {
    check_sizes(v, w)?;
    Ok(leq_unchecked(v.bytes(), w.bytes()))
}

pub(crate) fn leq_unchecked(v: &[u8], w: &[u8]) -> bool {
    let n = v.len();
    let mut sv: Vec<u8> = Vec::with_capacity(n);
    let mut sw: Vec<u8> = Vec::with_capacity(n);
    for k in 0..n {
        let a = v[k];
        let b = w[k];
        let at = sv.partition_point(|&x| x > a);
        sv.insert(at, a);
        let at = sw.partition_point(|&x| x > b);
        sw.insert(at, b);
        if sv.iter().zip(&sw).any(|(x, y)| x > y) {
            return false;
        }
    }
    true
}

/// Same criterion as [`bruhat_leq`], re-sorting every truncation from scratch.
pub fn bruhat_leq_resort(v: &Permutation, w: &Permutation) -> Result<bool> {
    check_sizes(v, w)?;
    for k in 1..=v.len() {
        if !containment_leq(&v.bytes()[..k], &w.bytes()[..k])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// If `y` covers `x`, the label `(i,j)` with `y = x . (i,j)`.
pub fn is_covering(x: &Permutation, y: &Permutation) -> Result<Option<Transposition>> {
    check_sizes(x, y)?;
    let diff: Vec<usize> = (1..=x.len()).filter(|&p| x.at(p) != y.at(p)).collect();
    let &[i, j] = diff.as_slice() else {
        return Ok(None);
    };
    let swapped = x.at(i) == y.at(j) && x.at(j) == y.at(i) && x.at(i) < x.at(j);
    if swapped && y.inversions() == x.inversions() + 1 {
        Ok(Some(Transposition { i, j }))
    } else {
        Ok(None)
    }
}

/// All elements of `S_n` covering `x`, in increasing label order.
///
/// Uses the positional characterization: `x . (i,j)` covers `x` iff
/// `x(i) < x(j)` and no position strictly between holds a value strictly
/// between them.
pub fn upper_covers(x: &Permutation) -> Vec<(Transposition, Permutation)> {
    let w = x.bytes();
    let n = w.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if w[i] < w[j] && !w[i + 1..j].iter().any(|&m| w[i] < m && m < w[j]) {
                out.push((Transposition { i: i + 1, j: j + 1 }, x.swapped(i + 1, j + 1)));
            }
        }
    }
    out
}

/// Reflexive-transitive closure of the covering relation on all of `S_n`.
struct Closure {
    up: Vec<BitSet>,
}

impl Closure {
    fn build(n: usize) -> Closure {
        let elems: Vec<Permutation> = Permutation::all(n).collect();
        let count = elems.len();
        let inv: Vec<usize> = elems.iter().map(Permutation::inversions).collect();
        let mut order: Vec<usize> = (0..count).collect();
        order.sort_by_key(|&idx| std::cmp::Reverse(inv[idx]));
        let mut up = vec![BitSet::new(count); count];
        for &x in &order {
            let mut reach = BitSet::new(count);
            reach.insert(x);
            for a in 1..=n {
                for b in a + 1..=n {
                    let y = elems[x].swapped(a, b);
                    if y.inversions() == inv[x] + 1 {
                        reach.union_with(&up[y.lex_rank()]);
                    }
                }
            }
            up[x] = reach;
        }
        Closure { up }
    }
}

fn closure(n: usize) -> &'static Closure {
    static TABLES: [OnceLock<Closure>; ORACLE_MAX_N + 1] = [const { OnceLock::new() }; ORACLE_MAX_N + 1];
    TABLES[n].get_or_init(|| Closure::build(n))
}

/// `v <= w` by reachability along covering moves; the closure table for each
/// `n` is built once on first use.
pub fn bruhat_leq_oracle(v: &Permutation, w: &Permutation) -> Result<bool> {
    check_sizes(v, w)?;
    let n = v.len();
    if n > ORACLE_MAX_N {
        return Err(Error::BoundExceeded { n, max: ORACLE_MAX_N });
    }
    Ok(closure(n).up[v.lex_rank()].contains(w.lex_rank()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(w: &[usize]) -> Permutation {
        Permutation::new(w.to_vec()).unwrap()
    }

    #[test]
    fn containment_examples() {
        assert!(containment_leq(&[4, 5, 0, 3, 1], &[4, 2, 5, 5, 1]).unwrap());
        assert!(containment_leq(&[3, 1, 2], &[3, 1, 2]).unwrap());
        assert!(!containment_leq(&[5, 0, 0], &[1, 1, 1]).unwrap());
        assert!(containment_leq(&[1, 2], &[1]).is_err());
    }

    #[test]
    fn sorted_prefixes() {
        let t = SortedPrefixTable::new(&p(&[4, 3, 2, 5, 1]));
        assert_eq!(t.row(1), &[4]);
        assert_eq!(t.row(2), &[4, 3]);
        assert_eq!(t.row(4), &[5, 4, 3, 2]);
        assert_eq!(t.row(5), &[5, 4, 3, 2, 1]);
        for (k, row) in t.rows().iter().enumerate() {
            assert_eq!(row.len(), k + 1);
            assert!(row.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn leq_examples() {
        let x = p(&[4, 1, 2, 3, 5]);
        let y = p(&[4, 3, 2, 5, 1]);
        assert!(bruhat_leq(&x, &y).unwrap());
        assert!(!bruhat_leq(&y, &x).unwrap());
        assert!(bruhat_leq(&x, &x).unwrap());
        assert!(bruhat_leq_oracle(&x, &y).unwrap());
        assert!(bruhat_leq_resort(&x, &y).unwrap());
        let a = p(&[2, 1, 3]);
        let b = p(&[1, 3, 2]);
        assert!(!bruhat_leq(&a, &b).unwrap());
        assert!(!bruhat_leq(&b, &a).unwrap());
        assert!(bruhat_leq(&a, &p(&[1, 2])).is_err());
    }

    #[test]
    fn oracle_bounds_and_identity() {
        for w in Permutation::all(4) {
            assert!(bruhat_leq_oracle(&Permutation::identity(4), &w).unwrap());
        }
        let big = Permutation::identity(8);
        assert!(matches!(bruhat_leq_oracle(&big, &big), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn criterion_matches_oracle_on_s4() {
        let all: Vec<_> = Permutation::all(4).collect();
        for v in &all {
            for w in &all {
                let expected = bruhat_leq_oracle(v, w).unwrap();
                assert_eq!(bruhat_leq(v, w).unwrap(), expected, "{v} {w}");
                assert_eq!(bruhat_leq_resort(v, w).unwrap(), expected, "{v} {w}");
            }
        }
    }

    #[test]
    fn covering_examples() {
        let id = Permutation::identity(6);
        assert_eq!(is_covering(&id, &p(&[1, 3, 2, 4, 5, 6])).unwrap(), Some(Transposition { i: 2, j: 3 }));
        assert_eq!(is_covering(&id, &id).unwrap(), None);
        assert_eq!(is_covering(&id, &p(&[1, 4, 3, 2, 5, 6])).unwrap(), None);
        assert_eq!(is_covering(&p(&[1, 3, 2, 4, 5, 6]), &id).unwrap(), None);
        assert!(is_covering(&id, &Permutation::identity(5)).is_err());
    }

    #[test]
    fn upper_covers_agree_with_definition() {
        for x in Permutation::all(5) {
            let fast: Vec<_> = upper_covers(&x);
            let mut slow = Vec::new();
            for i in 1..=5 {
                for j in i + 1..=5 {
                    let y = x.swapped(i, j);
                    if let Some(t) = is_covering(&x, &y).unwrap() {
                        slow.push((t, y));
                    }
                }
            }
            assert_eq!(fast, slow, "{x}");
        }
    }
}
