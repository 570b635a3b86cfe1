//! Finite graded posets of permutations: Hasse diagrams, saturated chains,
//! Möbius functions.

mod el;
mod export;
mod rank_selected;

pub use el::{
    greedy_rising_chain, rising_chain_violation, verify_el, verify_el_exhaustive, verify_rising_chain_containment,
    ELReport,
};
pub use export::{to_dot, to_json, PosetDump};
pub use rank_selected::{
    descent_set_counts, descent_set_counts_exhaustive, rank_selected_mobius, rank_selected_mobius_check,
};

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::bruhat::{is_covering, leq_unchecked};
use crate::error::{Error, Result};
use crate::perm::{Permutation, Transposition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Cover {
    pub lower: usize,
    pub upper: usize,
    pub label: Transposition,
}

/// A saturated chain, as element indices, with the label of each step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledChain {
    pub vertices: Vec<usize>,
    pub labels: Vec<Transposition>,
}

impl LabeledChain {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Label word weakly increasing.
    pub fn is_rising(&self) -> bool {
        is_rising(&self.labels)
    }

    /// Positions `i` (1-based, `1 <= i < len`) with `label_i > label_{i+1}`.
    pub fn descent_set(&self) -> Vec<usize> {
        descents(&self.labels).collect()
    }
}

pub(crate) fn is_rising(labels: &[Transposition]) -> bool {
    labels.windows(2).all(|w| w[0] <= w[1])
}

pub(crate) fn descents(labels: &[Transposition]) -> impl Iterator<Item = usize> + '_ {
    labels.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]).map(|(i, _)| i + 1)
}

/// A bounded graded subposet of the Bruhat order on `S_n`.
///
/// Elements are stored sorted by `(inversions, word)`, so index order is a
/// linear extension.
pub struct GradedPoset {
    elements: Vec<Permutation>,
    ranks: Vec<usize>,
    covers: Vec<Cover>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    upset: Vec<BitSet>,
    index: HashMap<Permutation, usize>,
    bottom: usize,
    top: usize,
    mobius_rows: Vec<OnceLock<Vec<i64>>>,
    descent_counts: OnceLock<HashMap<u64, u64>>,
}

/// Builds the poset on `elements` under the Bruhat order.
pub fn build_poset(elements: Vec<Permutation>) -> Result<GradedPoset> {
    GradedPoset::build_with(elements, |a, b| leq_unchecked(a.bytes(), b.bytes()))
}

impl GradedPoset {
    /// Builds the poset under an arbitrary order relation `leq`.
    ///
    /// Fails unless there is a unique minimum and maximum and every Hasse edge
    /// joins consecutive ranks by an `S_n` covering move.
    pub fn build_with(
        mut elements: Vec<Permutation>,
        leq: impl Fn(&Permutation, &Permutation) -> bool,
    ) -> Result<GradedPoset> {
        let Some(first) = elements.first() else {
            return Err(Error::NotGraded("empty element list".into()));
        };
        let n = first.len();
        if let Some(bad) = elements.iter().find(|p| p.len() != n) {
            return Err(Error::SizeMismatch { left: n, right: bad.len() });
        }
        elements.sort_by_cached_key(|p| (p.inversions(), p.clone()));
        elements.dedup();
        let count = elements.len();

        let mut upset = vec![BitSet::new(count); count];
        for (x, row) in upset.iter_mut().enumerate() {
            for y in 0..count {
                if x == y || leq(&elements[x], &elements[y]) {
                    row.insert(y);
                }
            }
        }

        let minima: Vec<usize> = (0..count).filter(|&x| upset[x].ones().count() == count).collect();
        let maxima: Vec<usize> = (0..count).filter(|&y| (0..count).all(|x| upset[x].contains(y))).collect();
        let (&[bottom], &[top]) = (minima.as_slice(), maxima.as_slice()) else {
            return Err(Error::NotGraded(format!(
                "expected a unique minimum and maximum, found {} and {}",
                minima.len(),
                maxima.len()
            )));
        };

        let base = elements[bottom].inversions();
        let ranks: Vec<usize> = elements.iter().map(|p| p.inversions() - base).collect();

        let mut covers = Vec::new();
        let mut up = vec![Vec::new(); count];
        let mut down = vec![Vec::new(); count];
        for x in 0..count {
            let mut strict = upset[x].clone();
            strict.remove(x);
            let mut above = BitSet::new(count);
            for z in strict.ones() {
                let mut s = upset[z].clone();
                s.remove(z);
                above.union_with(&s);
            }
            let mut hasse = strict;
            hasse.difference_with(&above);
            for y in hasse.ones() {
                let (a, b) = (&elements[x], &elements[y]);
                if ranks[y] != ranks[x] + 1 {
                    return Err(Error::NotGraded(format!(
                        "cover {a} < {b} joins ranks {} and {}",
                        ranks[x], ranks[y]
                    )));
                }
                let label = is_covering(a, b)?
                    .ok_or_else(|| Error::NotGraded(format!("cover {a} < {b} is not a covering move of S_{n}")))?;
                up[x].push(covers.len());
                down[y].push(covers.len());
                covers.push(Cover { lower: x, upper: y, label });
            }
        }
        for list in &mut up {
            list.sort_by_key(|&c| covers[c].label);
        }

        let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(GradedPoset {
            mobius_rows: (0..count).map(|_| OnceLock::new()).collect(),
            descent_counts: OnceLock::new(),
            elements,
            ranks,
            covers,
            up,
            down,
            upset,
            index,
            bottom,
            top,
        })
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn n(&self) -> usize {
        self.elements[0].len()
    }

    pub fn rank(&self, x: usize) -> usize {
        self.ranks[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Rank of the maximum.
    pub fn length(&self) -> usize {
        self.ranks[self.top]
    }

    /// Number of elements at each rank.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.length() + 1];
        for &r in &self.ranks {
            sizes[r] += 1;
        }
        sizes
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    /// Covers going up from `x`, in increasing label order.
    pub fn upper_covers(&self, x: usize) -> impl Iterator<Item = &Cover> + '_ {
        self.up[x].iter().map(|&c| &self.covers[c])
    }

    pub fn lower_covers(&self, y: usize) -> impl Iterator<Item = &Cover> + '_ {
        self.down[y].iter().map(|&c| &self.covers[c])
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.upset[x].contains(y)
    }

    /// All comparable pairs `x < y`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| self.upset[x].ones().filter(move |&y| y != x).map(move |y| (x, y)))
            .collect()
    }

    pub(crate) fn check_interval(&self, bottom: usize, top: usize) -> Result<()> {
        if !self.leq(bottom, top) {
            return Err(Error::Incomparable(
                self.elements[bottom].to_string(),
                self.elements[top].to_string(),
            ));
        }
        Ok(())
    }

    /// Calls `visit` on every saturated chain from `bottom` to `top`.
    pub(crate) fn for_each_chain(&self, bottom: usize, top: usize, mut visit: impl FnMut(&[usize], &[Transposition])) {
        let mut vertices = vec![bottom];
        let mut labels = Vec::new();
        self.walk(top, &mut vertices, &mut labels, &mut visit);
    }

    fn walk(
        &self,
        top: usize,
        vertices: &mut Vec<usize>,
        labels: &mut Vec<Transposition>,
        visit: &mut impl FnMut(&[usize], &[Transposition]),
    ) {
        let x = *vertices.last().unwrap();
        if x == top {
            visit(vertices, labels);
            return;
        }
        for cover in self.upper_covers(x) {
            if self.leq(cover.upper, top) {
                vertices.push(cover.upper);
                labels.push(cover.label);
                self.walk(top, vertices, labels, visit);
                vertices.pop();
                labels.pop();
            }
        }
    }

    /// Every saturated chain from `bottom` to `top` with its label word.
    pub fn maximal_chains(&self, bottom: usize, top: usize) -> Result<Vec<LabeledChain>> {
        self.check_interval(bottom, top)?;
        let mut chains = Vec::new();
        self.for_each_chain(bottom, top, |v, l| {
            chains.push(LabeledChain { vertices: v.to_vec(), labels: l.to_vec() })
        });
        Ok(chains)
    }

    /// Shortest and longest saturated chain from the minimum to each element.
    pub fn chain_length_bounds(&self) -> Vec<(usize, usize)> {
        let mut bounds = vec![(usize::MAX, 0); self.len()];
        bounds[self.bottom] = (0, 0);
        for y in 0..self.len() {
            for cover in self.lower_covers(y) {
                let (lo, hi) = bounds[cover.lower];
                if lo != usize::MAX {
                    bounds[y].0 = bounds[y].0.min(lo + 1);
                    bounds[y].1 = bounds[y].1.max(hi + 1);
                }
            }
        }
        bounds
    }

    /// `mu(bottom, top)` by the defining recursion; rows are cached per `bottom`.
    pub fn mobius(&self, bottom: usize, top: usize) -> Result<i64> {
        self.check_interval(bottom, top)?;
        Ok(self.mobius_row(bottom)[top])
    }

    fn mobius_row(&self, bottom: usize) -> &[i64] {
        self.mobius_rows[bottom].get_or_init(|| {
            let mut row = vec![0i64; self.len()];
            let interval: Vec<usize> = self.upset[bottom].ones().collect();
            for &y in &interval {
                row[y] = if y == bottom {
                    1
                } else {
                    -interval.iter().take_while(|&&z| z < y).filter(|&&z| self.leq(z, y)).map(|&z| row[z]).sum::<i64>()
                };
            }
            row
        })
    }

    /// `mu(0, 1)`, the reduced Euler characteristic of the order complex of the
    /// open interval. A one-element poset gives 1.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.mobius_row(self.bottom)[self.top]
    }
}

pub fn maximal_chains(poset: &GradedPoset, bottom: usize, top: usize) -> Result<Vec<LabeledChain>> {
    poset.maximal_chains(bottom, top)
}

pub fn mobius(poset: &GradedPoset, bottom: usize, top: usize) -> Result<i64> {
    poset.mobius(bottom, top)
}

pub fn reduced_euler_characteristic(poset: &GradedPoset) -> i64 {
    poset.reduced_euler_characteristic()
}
