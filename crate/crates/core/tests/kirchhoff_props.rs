use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use proptest::prelude::*;

use treecensus::graph::{families, Graph};
use treecensus::kirchhoff::{count_spanning_trees, count_spanning_trees_with_edge, count_uprooted_all_roots};
use treecensus::oracle::{count_weighted, DEFAULT_BUDGET};

fn multigraph(max_mult: u32) -> impl Strategy<Value = Graph> {
    (1usize..=7).prop_flat_map(move |n| {
        prop::collection::vec(0..=max_mult, n * (n - 1) / 2).prop_map(move |mult| {
            let mut g = Graph::empty(n).unwrap();
            let mut i = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    for _ in 0..mult[i] {
                        g.add_edge(u, v).unwrap();
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn laplacian_rows_and_columns_sum_to_zero(g in multigraph(3)) {
        let l = g.laplacian();
        let n = g.n();
        for i in 0..n {
            let row: BigInt = (0..n).map(|j| l.get(i, j).clone()).sum();
            let col: BigInt = (0..n).map(|j| l.get(j, i).clone()).sum();
            prop_assert!(row.is_zero() && col.is_zero());
            prop_assert_eq!(l.get(i, i).clone(), BigInt::from(g.degree(i + 1).unwrap()));
        }
    }

    #[test]
    fn reduced_laplacian_is_a_principal_minor(g in multigraph(2)) {
        prop_assume!(g.n() >= 2);
        let l = g.laplacian();
        for v in 1..=g.n() {
            prop_assert_eq!(g.reduced_laplacian(v).unwrap(), l.without(v - 1));
        }
    }

    #[test]
    fn relabeling_keeps_degrees_and_count(g in multigraph(2), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (1..=g.n()).collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let h = g.relabeled(&perm).unwrap();
        let (mut a, mut b) = (g.degrees(), h.degrees());
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
        prop_assert_eq!(count_spanning_trees(&g), count_spanning_trees(&h));
    }

    #[test]
    fn deletion_decomposition(g in multigraph(2)) {
        let total = count_spanning_trees(&g);
        for e in g.edges() {
            let with = count_spanning_trees_with_edge(&g, e).unwrap();
            // the marked edge is a single copy of a possibly parallel edge
            let without = count_spanning_trees(&g.remove_one(e).unwrap());
            prop_assert_eq!(&with + &without, total.clone());
            let deleted = count_spanning_trees(&g.delete_edges(&[e]).unwrap());
            prop_assert!(deleted <= without && without <= total);
        }
    }

    #[test]
    fn multigraph_count_matches_weighted_oracle(g in multigraph(3)) {
        prop_assert_eq!(count_spanning_trees(&g), count_weighted(&g, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn root_one_is_never_uprooted(g in multigraph(1)) {
        prop_assume!(g.n() >= 2 && g.is_connected());
        let table = count_uprooted_all_roots(&g);
        prop_assert_eq!(table.get(&treecensus::CensusKey::root(1)).cloned().unwrap_or_default(), BigUint::zero());
    }
}

#[test]
fn restricted_root_keeps_only_lower_neighbours() {
    for n in 2..=9 {
        for k in 0..n {
            let g = families::restricted_complete(n, k).unwrap();
            assert_eq!(g.degree(n - k).unwrap() as usize, n - 1 - k);
        }
        assert_eq!(
            families::restricted_complete(n, 0).unwrap(),
            treecensus::complete_graph(n).unwrap()
        );
    }
}
