use serde::Serialize;

use super::{is_rising, GradedPoset, LabeledChain};
use crate::bruhat::{leq_unchecked, upper_covers};
use crate::clambda::{enumerate, is_member_unchecked};
use crate::error::{Error, Result};
use crate::perm::{Composition, Permutation, Transposition};

/// Outcome of checking the EL conditions on one interval.
#[derive(Clone, Debug, Serialize)]
pub struct ELReport {
    pub bottom: Permutation,
    pub top: Permutation,
    pub chain_count: u128,
    pub rising_chains: Vec<LabeledChain>,
    pub lex_smallest_is_rising: bool,
}

impl ELReport {
    /// Exactly one rising chain, and its label word is lexicographically first.
    pub fn passed(&self) -> bool {
        self.rising_chains.len() == 1 && self.lex_smallest_is_rising
    }
}

/// Checks that `[bottom, top]` has exactly one maximal chain with a weakly
/// increasing label word and that this word is lexicographically smallest.
///
/// Chains are counted by dynamic programming, rising chains are found by a
/// search that only follows non-decreasing labels, and the lexicographically
/// smallest chain is built greedily. Distinct covers of one element carry
/// distinct labels, so the greedy choice is forced.
pub fn verify_el(poset: &GradedPoset, bottom: usize, top: usize) -> Result<ELReport> {
    poset.check_interval(bottom, top)?;
    if bottom == top {
        return Err(Error::DegenerateInterval);
    }
    let inside = |y: usize| poset.leq(bottom, y) && poset.leq(y, top);

    let mut paths = vec![0u128; poset.len()];
    paths[bottom] = 1;
    for y in bottom + 1..=top {
        if inside(y) {
            paths[y] = poset.lower_covers(y).filter(|c| inside(c.lower)).map(|c| paths[c.lower]).sum();
        }
    }

    let mut rising_chains = Vec::new();
    let mut vertices = vec![bottom];
    let mut labels = Vec::new();
    collect_rising(poset, top, &mut vertices, &mut labels, &mut rising_chains);

    let mut smallest = Vec::new();
    let mut x = bottom;
    while x != top {
        let cover = poset
            .upper_covers(x)
            .find(|c| poset.leq(c.upper, top))
            .expect("an element strictly below top has a cover below top");
        smallest.push(cover.label);
        x = cover.upper;
    }

    let lex_smallest_is_rising = rising_chains.first().is_some_and(|c| c.labels == smallest);
    Ok(ELReport {
        bottom: poset.elements()[bottom].clone(),
        top: poset.elements()[top].clone(),
        chain_count: paths[top],
        rising_chains,
        lex_smallest_is_rising,
    })
}

fn collect_rising(
    poset: &GradedPoset,
    top: usize,
    vertices: &mut Vec<usize>,
    labels: &mut Vec<Transposition>,
    out: &mut Vec<LabeledChain>,
) {
    let x = *vertices.last().unwrap();
    if x == top {
        out.push(LabeledChain { vertices: vertices.clone(), labels: labels.clone() });
        return;
    }
    for cover in poset.upper_covers(x) {
        if labels.last().is_some_and(|&last| cover.label < last) || !poset.leq(cover.upper, top) {
            continue;
        }
        vertices.push(cover.upper);
        labels.push(cover.label);
        collect_rising(poset, top, vertices, labels, out);
        vertices.pop();
        labels.pop();
    }
}

/// Same verdict as [`verify_el`], obtained by listing every maximal chain.
pub fn verify_el_exhaustive(poset: &GradedPoset, bottom: usize, top: usize) -> Result<ELReport> {
    poset.check_interval(bottom, top)?;
    if bottom == top {
        return Err(Error::DegenerateInterval);
    }
    let mut chain_count = 0u128;
    let mut rising_chains = Vec::new();
    let mut smallest: Option<Vec<Transposition>> = None;
    poset.for_each_chain(bottom, top, |vertices, labels| {
        chain_count += 1;
        if is_rising(labels) {
            rising_chains.push(LabeledChain { vertices: vertices.to_vec(), labels: labels.to_vec() });
        }
        if smallest.as_deref().is_none_or(|s| labels < s) {
            smallest = Some(labels.to_vec());
        }
    });
    let lex_smallest_is_rising = match (rising_chains.first(), smallest) {
        (Some(rising), Some(s)) => rising.labels == s,
        _ => false,
    };
    Ok(ELReport {
        bottom: poset.elements()[bottom].clone(),
        top: poset.elements()[top].clone(),
        chain_count,
        rising_chains,
        lex_smallest_is_rising,
    })
}

/// Lexicographically smallest saturated chain from `from` to `to` in all of
/// `S_n`, built greedily: at each step take the smallest-labelled cover that
/// stays below `to`. Returns the visited vertices (including both ends) and
/// the label word.
pub fn greedy_rising_chain(from: &Permutation, to: &Permutation) -> Result<(Vec<Permutation>, Vec<Transposition>)> {
    if from.len() != to.len() {
        return Err(Error::SizeMismatch { left: from.len(), right: to.len() });
    }
    if !leq_unchecked(from.bytes(), to.bytes()) {
        return Err(Error::Incomparable(from.to_string(), to.to_string()));
    }
    let mut vertices = vec![from.clone()];
    let mut labels = Vec::new();
    let mut x = from.clone();
    while x != *to {
        let (label, next) = upper_covers(&x)
            .into_iter()
            .find(|(_, y)| leq_unchecked(y.bytes(), to.bytes()))
            .expect("an element strictly below `to` has a cover below `to`");
        labels.push(label);
        vertices.push(next.clone());
        x = next;
    }
    Ok((vertices, labels))
}

/// First pair `delta < tau` of `C_lambda` whose lexicographically smallest
/// `S_n` chain is not rising or leaves `C_lambda`, with that chain.
pub fn rising_chain_violation(
    lambda: &Composition,
) -> Result<Option<(Permutation, Permutation, Vec<Permutation>)>> {
    let members = enumerate(lambda)?;
    for delta in &members {
        for tau in &members {
            if delta == tau || !leq_unchecked(delta.bytes(), tau.bytes()) {
                continue;
            }
            let (chain, labels) = greedy_rising_chain(delta, tau)?;
            let inside = chain.iter().all(|x| is_member_unchecked(x.bytes(), lambda.parts()));
            if !inside || !is_rising(&labels) {
                return Ok(Some((delta.clone(), tau.clone(), chain)));
            }
        }
    }
    Ok(None)
}

/// Whether, for every comparable pair of `C_lambda`, the rising chain of the
/// ambient `S_n` interval stays inside `C_lambda`.
pub fn verify_rising_chain_containment(lambda: &Composition) -> Result<bool> {
    Ok(rising_chain_violation(lambda)?.is_none())
}
