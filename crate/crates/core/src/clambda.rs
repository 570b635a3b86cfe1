//! The posets `C_lambda`: images under `Omega` of all permutations whose
//! standard cyclic form has composition type `lambda`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{inversions_of, Composition, CyclicForm, Permutation, DEFAULT_MAX_N};
use crate::qpoly::QPolynomial;

/// Bound used by [`enumerate_by_filter`], which scans all of `S_n`.
pub const FILTER_MAX_N: usize = 8;

fn check_sum(p: &Permutation, lambda: &Composition) -> Result<()> {
    if lambda.n() != p.len() {
        return Err(Error::CompositionSum { lambda: lambda.to_string(), sum: lambda.n(), n: p.len() });
    }
    Ok(())
}

/// Whether `p` lies in `C_lambda`: cutting its word into consecutive blocks of
/// sizes `l_1, ..., l_k` must give a standard cyclic form.
pub fn is_member(p: &Permutation, lambda: &Composition) -> Result<bool> {
    check_sum(p, lambda)?;
    Ok(is_member_unchecked(p.bytes(), lambda.parts()))
}

pub(crate) fn is_member_unchecked(word: &[u8], parts: &[usize]) -> bool {
    let mut start = 0;
    let mut prev_leader = 0u8;
    for &len in parts {
        let block = &word[start..start + len];
        let leader = block[0];
        if leader <= prev_leader || block[1..].iter().any(|&v| v < leader) {
            return false;
        }
        prev_leader = leader;
        start += len;
    }
    true
}

/// Puts the parentheses back: the unique standard form of type `lambda` whose
/// `Omega` image is `p`.
pub fn preimage(p: &Permutation, lambda: &Composition) -> Result<CyclicForm> {
    if !is_member(p, lambda)? {
        return Err(Error::NotMember(p.to_string()));
    }
    let word = p.word();
    let mut cycles = Vec::with_capacity(lambda.num_parts());
    let mut start = 0;
    for &len in lambda.parts() {
        cycles.push(word[start..start + len].to_vec());
        start += len;
    }
    CyclicForm::new(cycles)
}

/// All members of `C_lambda` in lexicographic order of their words, for
/// `n <= DEFAULT_MAX_N`.
pub fn enumerate(lambda: &Composition) -> Result<Vec<Permutation>> {
    enumerate_with_bound(lambda, DEFAULT_MAX_N)
}

pub fn enumerate_with_bound(lambda: &Composition, max_n: usize) -> Result<Vec<Permutation>> {
    let n = lambda.n();
    if n > max_n || n > crate::perm::MAX_WORD_LEN {
        return Err(Error::BoundExceeded { n, max: max_n });
    }
    let mut out = Vec::new();
    let mut used = vec![false; n + 1];
    let mut word = Vec::with_capacity(n);
    fill_cycles(lambda.parts(), &mut used, &mut word, &mut out);
    out.sort_unstable();
    Ok(out)
}

// Each cycle is led by the smallest unused value; its remaining entries are
// an ordered selection of the other unused values.
fn fill_cycles(parts: &[usize], used: &mut [bool], word: &mut Vec<u8>, out: &mut Vec<Permutation>) {
    let Some((&len, rest)) = parts.split_first() else {
        out.push(Permutation::from_bytes(word.clone().into_boxed_slice()));
        return;
    };
    let leader = (1..used.len()).find(|&v| !used[v]).expect("values remain");
    used[leader] = true;
    word.push(leader as u8);
    fill_tail(len - 1, rest, used, word, out);
    word.pop();
    used[leader] = false;
}

fn fill_tail(remaining: usize, parts: &[usize], used: &mut [bool], word: &mut Vec<u8>, out: &mut Vec<Permutation>) {
    if remaining == 0 {
        fill_cycles(parts, used, word, out);
        return;
    }
    for v in 1..used.len() {
        if !used[v] {
            used[v] = true;
            word.push(v as u8);
            fill_tail(remaining - 1, parts, used, word, out);
            word.pop();
            used[v] = false;
        }
    }
}

/// Membership filter over all of `S_n`; a cross-check for [`enumerate`].
pub fn enumerate_by_filter(lambda: &Composition) -> Result<Vec<Permutation>> {
    let n = lambda.n();
    if n > FILTER_MAX_N {
        return Err(Error::BoundExceeded { n, max: FILTER_MAX_N });
    }
    Ok(Permutation::all(n).filter(|p| is_member_unchecked(p.bytes(), lambda.parts())).collect())
}

/// The standard form whose image is the top of `C_lambda`: cycle `i` is led
/// by `i`, and the values `n, n-1, ..., k+1` are dealt out in descending runs,
/// `l_1 - 1` of them to the first cycle, `l_2 - 1` to the second, and so on.
pub fn max_cyclic_form(lambda: &Composition) -> CyclicForm {
    let mut next = lambda.n();
    let cycles = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| {
            let mut cycle = vec![i + 1];
            for _ in 1..len {
                cycle.push(next);
                next -= 1;
            }
            cycle
        })
        .collect();
    CyclicForm::new(cycles).expect("descending runs above k form a standard form")
}

/// The maximum of `C_lambda`.
pub fn max_element(lambda: &Composition) -> Permutation {
    max_cyclic_form(lambda).omega()
}

/// `C(n-1, 2) + k - 1 - sum_r (r-1) l_r`, the rank of the top element.
pub fn length_formula(lambda: &Composition) -> usize {
    let n = lambda.n() as i64;
    let k = lambda.num_parts() as i64;
    let weighted: i64 = lambda.parts().iter().enumerate().map(|(r, &l)| r as i64 * l as i64).sum();
    let len = (n - 1) * (n - 2) / 2 + k - 1 - weighted;
    debug_assert!(len >= 0);
    len as usize
}

pub fn st(lambda: &Composition) -> Result<Composition> {
    lambda.st()
}

pub fn trailing_ones(lambda: &Composition) -> usize {
    lambda.trailing_ones()
}

fn require_trailing_one(lambda: &Composition) -> Result<()> {
    if *lambda.parts().last().unwrap() > 1 {
        return Err(Error::Undefined { lambda: lambda.to_string(), reason: "last part exceeds 1" });
    }
    Ok(())
}

/// Inversions among the last `m(lambda) + 1` entries of `p`: the index of the
/// shifted copy of `C_{ST(lambda)}` containing `p`.
pub fn copy_index(p: &Permutation, lambda: &Composition) -> Result<usize> {
    require_trailing_one(lambda)?;
    if !is_member(p, lambda)? {
        return Err(Error::NotMember(p.to_string()));
    }
    let tail = (lambda.trailing_ones() + 1).min(p.len());
    Ok(inversions_of(&p.bytes()[p.len() - tail..]))
}

/// Moves an element of copy 0 to copy `i`: exchange the entry at position `t`
/// with the one at `t + 1`, then with `t + 2`, ..., finally with `t + i`.
pub fn shift(p: &Permutation, t: usize, i: usize) -> Permutation {
    let mut word = p.bytes().to_vec();
    for step in 1..=i {
        word.swap(t - 1, t + step - 1);
    }
    Permutation::from_bytes(word.into_boxed_slice())
}

/// `C_lambda` split into `k - j + 1` rank-shifted copies of `C_{ST(lambda)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopyDecomposition {
    pub lambda: Composition,
    pub base: Composition,
    pub shift_position: usize,
    #[serde(with = "copies_by_index")]
    pub copies: Vec<Vec<Permutation>>,
}

mod copies_by_index {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(copies: &[Vec<Permutation>], s: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<usize, &Vec<Permutation>> = copies.iter().enumerate().collect();
        map.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<Permutation>>, D::Error> {
        let map = BTreeMap::<usize, Vec<Permutation>>::deserialize(d)?;
        if map.keys().copied().ne(0..map.len()) {
            return Err(serde::de::Error::custom("copy indices must be 0..count"));
        }
        Ok(map.into_values().collect())
    }
}

pub fn decompose(lambda: &Composition) -> Result<CopyDecomposition> {
    require_trailing_one(lambda)?;
    let j = lambda.rightmost_big_part().ok_or_else(|| Error::Undefined {
        lambda: lambda.to_string(),
        reason: "every part equals 1",
    })?;
    let k = lambda.num_parts();
    let mut copies = vec![Vec::new(); k - j + 1];
    for p in enumerate(lambda)? {
        let i = copy_index(&p, lambda)?;
        copies[i].push(p);
    }
    Ok(CopyDecomposition {
        lambda: lambda.clone(),
        base: lambda.st()?,
        shift_position: lambda.prefix_sum(j),
        copies,
    })
}

/// The sequence `i_1 < ... < i_r` with `G_{C_lambda}(q) = [i_1]_q ... [i_r]_q`.
pub fn q_factor_sequence(lambda: &Composition) -> Vec<usize> {
    let mut factors = Vec::new();
    let mut current = lambda.clone();
    while let Some(j) = current.rightmost_big_part() {
        let k = current.num_parts();
        if j < k {
            factors.push(k - j + 1);
        }
        current = current.st().expect("some part exceeds 1");
    }
    factors
}

/// Rank generating function of `C_lambda` from the product formula.
pub fn gen_function(lambda: &Composition) -> QPolynomial {
    q_factor_sequence(lambda)
        .into_iter()
        .fold(QPolynomial::one(), |acc, m| &acc * &QPolynomial::q_integer(m))
}

/// `sum_{x in C_lambda} q^inv(x)` by enumeration.
pub fn gen_function_bruteforce(lambda: &Composition) -> Result<QPolynomial> {
    let mut coefficients = Vec::new();
    for p in enumerate(lambda)? {
        let d = p.inversions();
        if coefficients.len() <= d {
            coefficients.resize(d + 1, 0);
        }
        coefficients[d] += 1;
    }
    Ok(QPolynomial::new(coefficients))
}

/// Homeomorphism type of the order complex of `C_lambda`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TopologyClass {
    /// `C_lambda` is isomorphic to the Bruhat order on `S_b`.
    Sphere(usize),
    Ball,
    Point,
}

impl fmt::Display for TopologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyClass::Sphere(b) => write!(f, "Sphere({b})"),
            TopologyClass::Ball => f.write_str("Ball"),
            TopologyClass::Point => f.write_str("Point"),
        }
    }
}

/// For a normalized shape `(1,...,1, b, 1)`, returns `(a, b)` where `a` is the
/// number of leading ones.
pub fn sphere_shape(lambda: &Composition) -> Option<(usize, usize)> {
    let norm = lambda.normalized();
    let parts = norm.parts();
    let k = parts.len();
    if k < 2 || parts[k - 1] != 1 || parts[k - 2] < 2 || parts[..k - 2].iter().any(|&p| p != 1) {
        return None;
    }
    Some((k - 2, parts[k - 2]))
}

pub fn classify_topology(lambda: &Composition) -> TopologyClass {
    if lambda.normalized().is_all_ones() {
        TopologyClass::Point
    } else if let Some((_, b)) = sphere_shape(lambda) {
        TopologyClass::Sphere(b)
    } else {
        TopologyClass::Ball
    }
}

/// Strips the fixed prefix `1, ..., a+1` from a member of a sphere-shaped
/// `C_lambda` and relabels the rest into `S_b`.
pub fn sphere_relabel(p: &Permutation, lambda: &Composition) -> Result<Permutation> {
    let (a, b) = sphere_shape(lambda).ok_or_else(|| Error::Undefined {
        lambda: lambda.to_string(),
        reason: "not of sphere shape",
    })?;
    if !is_member(p, lambda)? {
        return Err(Error::NotMember(p.to_string()));
    }
    let word = p.word()[a + 1..].iter().map(|&v| v - (a + 1)).collect::<Vec<_>>();
    debug_assert_eq!(word.len(), b);
    Permutation::new(word)
}
