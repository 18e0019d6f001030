use num_bigint::BigUint;
use num_traits::Zero;

use treecensus::census::{
    bipartite_by_highest_child, census_all, minus_edge_uprooted_by_root, uprooted_by_root, uprooted_by_root_and_child,
    Family, Grain,
};
use treecensus::exact::to_count;
use treecensus::identities::{
    verify_general_a, verify_general_a_prime, verify_identity1, verify_identity2, verify_rmrk_sec5, verify_simplified_1,
};
use treecensus::oracle::DEFAULT_BUDGET;

fn pow(base: usize, exp: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), exp)
}

fn assert_agree(family: Family, grain: Grain) {
    let (tables, agree) = census_all(&family, grain, DEFAULT_BUDGET).unwrap();
    assert!(
        agree,
        "{family:?} at {grain:?}: {:?}",
        tables.iter().map(|t| t.to_json()).collect::<Vec<_>>()
    );
}

#[test]
fn three_way_agreement_complete() {
    for n in 2..=7 {
        assert_agree(Family::Complete { n }, Grain::Root);
        assert_agree(Family::Complete { n }, Grain::RootAndChild);
    }
}

#[test]
fn three_way_agreement_bipartite() {
    for m in 1..8 {
        for n in 1..=8 - m {
            assert_agree(Family::Bipartite { m, n }, Grain::RootAndChild);
        }
    }
}

#[test]
fn three_way_agreement_minus_edge() {
    for n in 3..=7 {
        assert_agree(Family::CompleteMinusEdge { n }, Grain::Root);
    }
}

#[test]
fn root_totals() {
    for n in 2..=60 {
        let total: BigUint = (0..n).map(|k| uprooted_by_root(n, k).unwrap()).sum();
        assert_eq!(total, pow(n - 1, n - 1), "n={n}");
        assert!(uprooted_by_root(n, n - 1).unwrap().is_zero());
    }
}

#[test]
fn bipartite_totals() {
    for m in 1..=30 {
        for n in 1..=30 {
            let total: BigUint = (1..=m).map(|k| bipartite_by_highest_child(m, n, k).unwrap()).sum();
            assert_eq!(total, pow(m, n - 1) * pow(n, m - 1), "m={m} n={n}");
        }
    }
}

#[test]
fn refinement_sums_to_root_count() {
    for n in 2..=60 {
        for k in 0..=n - 2 {
            let total: BigUint = (1..n - k).map(|j| uprooted_by_root_and_child(n, k, j).unwrap()).sum();
            assert_eq!(total, uprooted_by_root(n, k).unwrap(), "n={n} k={k}");
        }
    }
}

#[test]
fn minus_edge_totals() {
    for n in 3..=60 {
        let total: BigUint = (0..=n - 2).map(|k| minus_edge_uprooted_by_root(n, k).unwrap()).sum();
        assert_eq!(total, pow(n - 1, n - 3) * pow(n - 2, 2), "n={n}");
    }
}

#[test]
fn identity_terms_match_census_entries() {
    for n in 2..=40 {
        let report = verify_identity1(n).unwrap();
        for (k, term) in report.terms.iter().enumerate() {
            assert_eq!(to_count(term.clone()).unwrap(), uprooted_by_root(n, k).unwrap());
        }
    }
    for m in 1..=20 {
        for n in 2..=20 {
            let report = verify_identity2(m, n).unwrap();
            for (i, term) in report.terms.iter().enumerate() {
                assert_eq!(
                    to_count(term.clone()).unwrap(),
                    bipartite_by_highest_child(m, n, i + 1).unwrap()
                );
            }
        }
    }
}

#[test]
fn general_forms_specialise() {
    use treecensus::exact::int;
    for n in 2..=40usize {
        let a = int(n as i64);
        let general = verify_general_a(n, &a).unwrap();
        let simple = verify_simplified_1(n).unwrap();
        assert!(general.holds && simple.holds);
        assert_eq!((&general.lhs, &general.rhs), (&simple.rhs, &simple.lhs));
        if n >= 3 {
            let general = verify_general_a_prime(n, &a).unwrap();
            let simple = verify_rmrk_sec5(n).unwrap();
            assert!(general.holds && simple.holds);
            assert_eq!((&general.lhs, &general.rhs), (&simple.rhs, &simple.lhs));
        }
    }
}
