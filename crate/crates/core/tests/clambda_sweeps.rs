use clambda::clambda::{
    classify_topology, gen_function, gen_function_bruteforce, length_formula, q_factor_sequence, TopologyClass,
};
use clambda::perm::compositions;
use clambda::poset::{build_poset, verify_el, verify_el_exhaustive};
use clambda::verify::{enumeration_agrees, run_check, Check, Status};
use clambda::{Composition, Permutation};

#[test]
fn factor_sequences_are_strictly_increasing_up_to_n_minus_one() {
    for n in 1..=9 {
        for lambda in compositions(n) {
            let factors = q_factor_sequence(&lambda);
            assert!(factors.windows(2).all(|w| w[0] < w[1]), "{lambda}: {factors:?}");
            assert!(factors.iter().all(|&i| (2..n).contains(&i)), "{lambda}: {factors:?}");
            let leading_ones = lambda.parts().iter().take_while(|&&p| p == 1).count();
            if lambda.normalized().is_all_ones() {
                assert!(factors.is_empty(), "{lambda}");
            } else {
                assert_eq!(factors.last(), Some(&(n - 1 - leading_ones)), "{lambda}");
            }
            if lambda.parts()[0] > 1 && !factors.is_empty() {
                assert_eq!(factors.last(), Some(&(n - 1)), "{lambda}");
            }
            assert_eq!(gen_function(&lambda).degree(), length_formula(&lambda));
        }
    }
}

#[test]
fn generating_function_matches_enumeration_at_n_eight() {
    for lambda in compositions(8) {
        assert_eq!(gen_function(&lambda), gen_function_bruteforce(&lambda).unwrap(), "{lambda}");
        assert!(enumeration_agrees(&lambda).unwrap());
    }
}

#[test]
fn el_on_every_interval_of_s3_and_s4() {
    for n in 3..=4 {
        let p = build_poset(Permutation::all(n).collect()).unwrap();
        for (x, y) in p.strict_pairs() {
            assert!(verify_el(&p, x, y).unwrap().passed());
            assert!(verify_el_exhaustive(&p, x, y).unwrap().passed());
        }
    }
}

#[test]
fn every_check_passes_for_n_up_to_five() {
    for n in 1..=5 {
        for lambda in compositions(n) {
            for check in Check::ALL {
                let report = run_check(check, &lambda).unwrap();
                assert!(report.status.ok(), "{report}");
            }
        }
    }
}

#[test]
fn sphere_examples_from_both_families() {
    let c = |s: &str| s.parse::<Composition>().unwrap();
    assert_eq!(classify_topology(&c("6")), TopologyClass::Sphere(5));
    assert_eq!(classify_topology(&c("1,1,1,4,1")), TopologyClass::Sphere(4));
    assert_eq!(classify_topology(&c("1,1,1,5")), TopologyClass::Sphere(4));
    for lambda in ["1,1,1,4,1", "1,1,1,5"] {
        let report = run_check(Check::Sphere, &c(lambda)).unwrap();
        assert_eq!(report.status, Status::Pass, "{report}");
    }
}
