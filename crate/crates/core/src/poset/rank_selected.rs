use std::collections::{BTreeSet, HashMap};

use super::{descents, GradedPoset};
use crate::perm::Transposition;
use crate::error::{Error, Result};

fn mask_of(ranks: impl IntoIterator<Item = usize>) -> u64 {
    ranks.into_iter().fold(0, |m, r| m | 1 << r)
}

/// Number of maximal chains of the whole poset for each descent set, keyed by
/// the bit mask of descent positions.
///
/// Counted by dynamic programming over `(element, last label, descents so far)`.
pub fn descent_set_counts(poset: &GradedPoset) -> &HashMap<u64, u64> {
    poset.descent_counts.get_or_init(|| {
        type State = HashMap<(Option<Transposition>, u64), u64>;
        let mut states: Vec<State> = vec![HashMap::new(); poset.len()];
        states[poset.bottom()].insert((None, 0), 1);
        for x in 0..poset.len() {
            let current = std::mem::take(&mut states[x]);
            if x == poset.top() {
                let mut counts = HashMap::new();
                for ((_, mask), n) in current {
                    *counts.entry(mask).or_insert(0) += n;
                }
                return counts;
            }
            for cover in poset.upper_covers(x) {
                // a descent at rank r sits between steps r and r + 1
                let rank = poset.rank(x) as u64;
                for (&(last, mask), &n) in &current {
                    let mask = match last {
                        Some(prev) if prev > cover.label => mask | 1 << rank,
                        _ => mask,
                    };
                    *states[cover.upper].entry((Some(cover.label), mask)).or_insert(0) += n;
                }
            }
        }
        unreachable!("the maximum is an element of the poset")
    })
}

/// Descent-set histogram obtained by listing every maximal chain.
pub fn descent_set_counts_exhaustive(poset: &GradedPoset) -> HashMap<u64, u64> {
    let mut counts = HashMap::new();
    poset.for_each_chain(poset.bottom(), poset.top(), |_, labels| {
        *counts.entry(mask_of(descents(labels))).or_insert(0) += 1;
    });
    counts
}

fn check_ranks(poset: &GradedPoset, ranks: &BTreeSet<usize>) -> Result<()> {
    let len = poset.length();
    if len == 0 {
        return Err(Error::DegenerateInterval);
    }
    if ranks.iter().any(|&r| r == 0 || r >= len) || len > 64 {
        return Err(Error::NotGraded(format!("rank set {ranks:?} not inside 1..{}", len - 1)));
    }
    Ok(())
}

/// `mu` from bottom to top of the rank-selected subposet: the elements whose
/// rank lies in `ranks`, together with the minimum and maximum.
pub fn rank_selected_mobius(poset: &GradedPoset, ranks: &BTreeSet<usize>) -> Result<i64> {
    check_ranks(poset, ranks)?;
    let (bottom, top) = (poset.bottom(), poset.top());
    let selected: Vec<usize> = (0..poset.len())
        .filter(|&x| x == bottom || x == top || ranks.contains(&poset.rank(x)))
        .collect();
    let mut mu: HashMap<usize, i64> = HashMap::with_capacity(selected.len());
    for &y in &selected {
        let value = if y == bottom {
            1
        } else {
            -selected.iter().take_while(|&&z| z < y).filter(|&&z| poset.leq(z, y)).map(|z| mu[z]).sum::<i64>()
        };
        mu.insert(y, value);
    }
    Ok(mu[&top])
}

/// Checks `(-1)^(|S|-1) mu_S(0, 1)` against the number of maximal chains whose
/// label word has descent set exactly `S`.
pub fn rank_selected_mobius_check(poset: &GradedPoset, ranks: &BTreeSet<usize>) -> Result<bool> {
    let mu = rank_selected_mobius(poset, ranks)?;
    let signed = if ranks.len() % 2 == 1 { mu } else { -mu };
    let count = descent_set_counts(poset).get(&mask_of(ranks.iter().copied())).copied().unwrap_or(0);
    Ok(signed == count as i64)
}
