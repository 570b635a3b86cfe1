use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::GradedPoset;
use crate::perm::{Composition, Permutation};

/// JSON form of a poset; `covers` rows are `[lower, upper, i, j]` with the
/// first two indexing into `elements`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDump {
    pub n: usize,
    pub lambda: Option<Composition>,
    pub elements: Vec<Permutation>,
    pub ranks: Vec<usize>,
    pub covers: Vec<[usize; 4]>,
}

impl PosetDump {
    pub fn new(poset: &GradedPoset, lambda: Option<&Composition>) -> Self {
        PosetDump {
            n: poset.n(),
            lambda: lambda.cloned(),
            elements: poset.elements().to_vec(),
            ranks: poset.ranks().to_vec(),
            covers: poset.covers().iter().map(|c| [c.lower, c.upper, c.label.i, c.label.j]).collect(),
        }
    }
}

pub fn to_json(poset: &GradedPoset, lambda: Option<&Composition>) -> String {
    serde_json::to_string_pretty(&PosetDump::new(poset, lambda)).expect("dump is serializable")
}

/// Graphviz description of the Hasse diagram, bottom to top, one `rank=same`
/// group per rank.
pub fn to_dot(poset: &GradedPoset, lambda: Option<&Composition>) -> String {
    let mut out = String::new();
    let name = lambda.map_or_else(|| format!("S_{}", poset.n()), |l| format!("C_{l}"));
    writeln!(out, "digraph \"{name}\" {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    for (i, p) in poset.elements().iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{p}\\nrank {}\"];", poset.rank(i)).unwrap();
    }
    for r in 0..=poset.length() {
        let ids: Vec<String> = (0..poset.len()).filter(|&i| poset.rank(i) == r).map(|i| format!("n{i};")).collect();
        writeln!(out, "  {{ rank=same; {} }}", ids.join(" ")).unwrap();
    }
    for c in poset.covers() {
        writeln!(out, "  n{} -> n{} [label=\"{}\"];", c.lower, c.upper, c.label).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clambda::enumerate;
    use crate::poset::build_poset;

    #[test]
    fn dot_for_chain() {
        let lambda: Composition = "2,1,1".parse().unwrap();
        let p = build_poset(enumerate(&lambda).unwrap()).unwrap();
        let dot = to_dot(&p, Some(&lambda));
        assert!(dot.starts_with("digraph \"C_(2,1,1)\" {"));
        assert_eq!(dot.matches(" -> ").count(), 2);
        assert!(dot.contains("n0 [label=\"[1,2,3,4]\\nrank 0\"];"));
        assert!(dot.contains("n0 -> n1 [label=\"(2,3)\"];"));
    }

    #[test]
    fn json_dump_shape() {
        let lambda: Composition = "2,1,1".parse().unwrap();
        let p = build_poset(enumerate(&lambda).unwrap()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&to_json(&p, Some(&lambda))).unwrap();
        assert_eq!(v["n"], 4);
        assert_eq!(v["lambda"], serde_json::json!([2, 1, 1]));
        assert_eq!(v["elements"][1], serde_json::json!([1, 3, 2, 4]));
        assert_eq!(v["ranks"], serde_json::json!([0, 1, 2]));
        assert_eq!(v["covers"][0], serde_json::json!([0, 1, 2, 3]));
    }
}
