use std::collections::HashSet;

use proptest::prelude::*;

use clambda::bruhat::{
    bruhat_leq, bruhat_leq_oracle, bruhat_leq_resort, containment_leq, is_covering, SortedPrefixTable,
};
use clambda::clambda::{enumerate, is_member, max_element};
use clambda::perm::compositions;
use clambda::{build_poset, GradedPoset, Permutation, Transposition};

fn arb_permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn arb_pair(max_n: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=max_n).prop_flat_map(|n| {
        let word = || Just((1..=n).collect::<Vec<usize>>()).prop_shuffle();
        (word(), word()).prop_map(|(a, b)| (Permutation::new(a).unwrap(), Permutation::new(b).unwrap()))
    })
}

#[test]
fn omega_iteration_reaches_identity() {
    for n in 1..=6 {
        for p in Permutation::all(n) {
            let mut x = p.clone();
            let mut steps = 0;
            while !x.is_identity() {
                x = x.omega_image();
                steps += 1;
                assert!(steps <= n, "{p}");
            }
        }
    }
}

#[test]
fn cyclic_form_round_trip_exhaustive() {
    for n in 1..=6 {
        for p in Permutation::all(n) {
            let form = p.standard_cyclic_form();
            assert_eq!(form.to_permutation(), p);
            assert_eq!(p.composition_type().n(), n);
            assert_eq!(p.composition_type().parts(), form.cycles().iter().map(Vec::len).collect::<Vec<_>>());
        }
    }
}

#[test]
fn bruhat_order_is_partial_order_and_matches_oracle() {
    for n in 1..=5 {
        let all: Vec<Permutation> = Permutation::all(n).collect();
        let leq: Vec<Vec<bool>> =
            all.iter().map(|v| all.iter().map(|w| bruhat_leq(v, w).unwrap()).collect()).collect();
        for (a, v) in all.iter().enumerate() {
            assert!(leq[a][a]);
            for (b, w) in all.iter().enumerate() {
                assert_eq!(leq[a][b], bruhat_leq_oracle(v, w).unwrap(), "{v} {w}");
                assert_eq!(leq[a][b], bruhat_leq(&v.inverse(), &w.inverse()).unwrap(), "{v} {w}");
                if a != b {
                    assert!(!(leq[a][b] && leq[b][a]));
                }
                for c in 0..all.len() {
                    if leq[a][b] && leq[b][c] {
                        assert!(leq[a][c]);
                    }
                }
            }
        }
    }
}

#[test]
fn covering_characterizations_agree() {
    for n in 1..=5 {
        let all: Vec<Permutation> = Permutation::all(n).collect();
        for x in &all {
            for y in &all {
                let Some(t) = is_covering(x, y).unwrap() else { continue };
                assert_eq!(&x.apply_transposition_right(t).unwrap(), y);
                let (a, b) = (x.at(t.i), x.at(t.j));
                assert!(a < b);
                assert!((t.i + 1..t.j).all(|m| !(a < x.at(m) && x.at(m) < b)));
                assert!(bruhat_leq(x, y).unwrap());
            }
        }
    }
}

#[test]
fn boundedness_of_every_clambda() {
    for n in 1..=7 {
        for lambda in compositions(n) {
            let top = max_element(&lambda);
            assert!(is_member(&top, &lambda).unwrap());
            for p in enumerate(&lambda).unwrap() {
                assert!(bruhat_leq(&Permutation::identity(n), &p).unwrap());
                assert!(bruhat_leq(&p, &top).unwrap(), "{lambda}: {p} vs {top}");
            }
        }
    }
}

#[test]
fn clambda_unchanged_by_st_when_last_part_exceeds_one() {
    for n in 2..=7 {
        for lambda in compositions(n) {
            if *lambda.parts().last().unwrap() > 1 {
                assert_eq!(enumerate(&lambda).unwrap(), enumerate(&lambda.st().unwrap()).unwrap(), "{lambda}");
            }
        }
    }
}

fn reachable_along_covers(p: &GradedPoset) -> Vec<HashSet<usize>> {
    let mut reach: Vec<HashSet<usize>> = (0..p.len()).map(|x| HashSet::from([x])).collect();
    for x in (0..p.len()).rev() {
        let above: Vec<usize> = p.upper_covers(x).map(|c| c.upper).collect();
        for y in above {
            let r = reach[y].clone();
            reach[x].extend(r);
        }
    }
    reach
}

#[test]
fn hasse_diagram_generates_bruhat_order() {
    for n in 1..=6 {
        for lambda in compositions(n) {
            let p = build_poset(enumerate(&lambda).unwrap()).unwrap();
            let reach = reachable_along_covers(&p);
            for (x, above) in reach.iter().enumerate() {
                for y in 0..p.len() {
                    let expected = bruhat_leq(&p.elements()[x], &p.elements()[y]).unwrap();
                    assert_eq!(above.contains(&y), expected, "{lambda}");
                }
            }
        }
    }
}

#[test]
fn oracle_order_gives_same_hasse_diagram() {
    for n in 1..=6 {
        for lambda in compositions(n) {
            let members = enumerate(&lambda).unwrap();
            let a = build_poset(members.clone()).unwrap();
            let b = GradedPoset::build_with(members, |x, y| bruhat_leq_oracle(x, y).unwrap()).unwrap();
            assert_eq!(a.covers(), b.covers(), "{lambda}");
        }
    }
}

#[test]
fn full_symmetric_group_is_graded() {
    for n in 1..=5 {
        let p = build_poset(Permutation::all(n).collect()).unwrap();
        assert_eq!(p.length(), n * (n - 1) / 2);
        assert_eq!(p.reduced_euler_characteristic(), if n == 1 { 1 } else { (-1i64).pow(p.length() as u32) });
    }
}

proptest! {
    #[test]
    fn transposition_changes_inversions_by_odd_amount(p in arb_permutation(10), a in 1usize..=10, b in 1usize..=10) {
        let n = p.len();
        let (i, j) = (a.min(b).min(n), a.max(b).min(n));
        prop_assume!(i < j);
        let q = p.apply_transposition_right(Transposition::new(i, j).unwrap()).unwrap();
        prop_assert_eq!(q.inversions().abs_diff(p.inversions()) % 2, 1);
    }

    #[test]
    fn cyclic_form_round_trip(p in arb_permutation(12)) {
        let form = p.standard_cyclic_form();
        prop_assert_eq!(form.to_permutation(), p.clone());
        let text = form.to_string();
        prop_assert_eq!(text.parse::<clambda::CyclicForm>().unwrap(), form);
        prop_assert_eq!(p.composition_type().n(), p.len());
    }

    #[test]
    fn json_round_trip(p in arb_permutation(12)) {
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Permutation>(&json).unwrap(), p.clone());
        let form = p.standard_cyclic_form();
        let json = serde_json::to_string(&form).unwrap();
        prop_assert_eq!(serde_json::from_str::<clambda::CyclicForm>(&json).unwrap(), form);
    }

    #[test]
    fn inverse_is_involutive(p in arb_permutation(12)) {
        let inv = p.inverse();
        for i in 1..=p.len() {
            prop_assert_eq!(inv.at(p.at(i)), i);
        }
        prop_assert_eq!(inv.inverse(), p);
    }

    #[test]
    fn incremental_and_resorting_criteria_agree((v, w) in arb_pair(10)) {
        prop_assert_eq!(bruhat_leq(&v, &w).unwrap(), bruhat_leq_resort(&v, &w).unwrap());
    }

    #[test]
    fn prefix_table_rows_grow_by_one(p in arb_permutation(12)) {
        let table = SortedPrefixTable::new(&p);
        for k in 1..p.len() {
            let mut row = table.row(k).to_vec();
            row.push(p.at(k + 1));
            row.sort_unstable_by(|a, b| b.cmp(a));
            prop_assert_eq!(row.as_slice(), table.row(k + 1));
        }
    }

    #[test]
    fn containment_is_reflexive_and_monotone(a in prop::collection::vec(-20i64..20, 1..8)) {
        prop_assert!(containment_leq(&a, &a).unwrap());
        let bumped: Vec<i64> = a.iter().map(|x| x + 1).collect();
        prop_assert!(containment_leq(&a, &bumped).unwrap());
        prop_assert!(!containment_leq(&bumped, &a).unwrap());
    }
}
