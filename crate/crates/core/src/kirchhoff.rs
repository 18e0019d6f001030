//! Spanning-tree counts from reduced-Laplacian determinants.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::census::{CensusKey, CensusTable, Family, Grain, Method};
use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Graph};
use crate::linalg::{det_bareiss, det_linear_in_x, MarkedMatrix};

fn to_count(det: BigInt) -> BigUint {
    det.to_biguint()
        .expect("reduced Laplacian determinant is never negative")
}

/// Number of spanning trees, counted with edge multiplicity.
///
/// The highest-labeled vertex is removed from the Laplacian; any other
/// choice gives the same cofactor. Disconnected graphs yield 0 and the
/// one-vertex graph yields 1.
pub fn count_spanning_trees(g: &Graph) -> BigUint {
    if g.n() == 1 {
        return BigUint::one();
    }
    let reduced = g.reduced_laplacian(g.n()).expect("n >= 2");
    to_count(det_bareiss(&reduced))
}

/// Reduced Laplacian of `(g; e)` with one copy of `e` carrying weight `x`.
///
/// Marked endpoints get `deg_{g - e} + x` on the diagonal and the pair gets
/// `-x` off the diagonal; row and column `removed` are then dropped.
pub fn marked_reduced_laplacian(g: &Graph, e: EdgeRef, removed: usize) -> Result<MarkedMatrix> {
    let rest = g.remove_one(e)?;
    let base = rest.reduced_laplacian(removed)?;
    // position of vertex v in the reduced matrix
    let pos = |v: usize| {
        if v < removed {
            Some(v - 1)
        } else if v > removed {
            Some(v - 2)
        } else {
            None
        }
    };
    let mut marked = MarkedMatrix::new(base);
    let (pu, pv) = (pos(e.u), pos(e.v));
    for p in [pu, pv].into_iter().flatten() {
        marked.add_bump(p, p, BigInt::one());
    }
    if let (Some(a), Some(b)) = (pu, pv) {
        marked.add_bump(a, b, -BigInt::one());
        marked.add_bump(b, a, -BigInt::one());
    }
    Ok(marked)
}

/// Number of spanning trees that use one distinguished copy of `e`: the
/// coefficient of `x` in the marked reduced-Laplacian determinant.
pub fn count_spanning_trees_with_edge(g: &Graph, e: EdgeRef) -> Result<BigUint> {
    if !g.has_edge(e.u, e.v) {
        return Err(Error::MissingEdge { u: e.u, v: e.v });
    }
    let marked = marked_reduced_laplacian(g, e, g.n())?;
    let poly = det_linear_in_x(&marked)?;
    Ok(to_count(poly.beta))
}

/// Edges from `root` to every neighbor above `floor` (exclusive), i.e. the
/// edges an uprooted tree at `root` with all children `<= floor` may not use.
fn edges_above(g: &Graph, root: usize, floor: usize) -> Vec<EdgeRef> {
    (floor + 1..=g.n())
        .filter(|&u| u != root && g.has_edge(root, u))
        .map(|u| EdgeRef::new(root, u).expect("distinct endpoints"))
        .collect()
}

/// Uprooted spanning trees rooted at `root`: spanning trees of `g` with every
/// edge from `root` to a larger vertex removed.
pub fn count_uprooted_at(g: &Graph, root: usize) -> Result<BigUint> {
    if root == 0 || root > g.n() {
        return Err(Error::VertexOutOfRange { vertex: root, n: g.n() });
    }
    let cut = edges_above(g, root, root);
    Ok(count_spanning_trees(&g.delete_edges(&cut)?))
}

/// Uprooted spanning trees rooted at `root` whose highest root child is
/// `child`: the root loses every edge to vertices above `child`, and the
/// edge `{child, root}` is marked.
pub fn count_uprooted_with_child(g: &Graph, root: usize, child: usize) -> Result<BigUint> {
    if root == 0 || root > g.n() {
        return Err(Error::VertexOutOfRange { vertex: root, n: g.n() });
    }
    if child == 0 || child >= root {
        return Err(Error::InvalidParameter(format!(
            "highest child {child} must lie in 1..{root}"
        )));
    }
    let e = EdgeRef::new(child, root)?;
    if !g.has_edge(e.u, e.v) {
        return Err(Error::MissingEdge { u: e.u, v: e.v });
    }
    let cut = edges_above(g, root, child);
    count_spanning_trees_with_edge(&g.delete_edges(&cut)?, e)
}

/// Census of uprooted spanning trees of `g` by root, for every root `1..=n`.
pub fn count_uprooted_all_roots(g: &Graph) -> CensusTable {
    let mut table = CensusTable::new(Family::custom(g.clone()), Grain::Root, Method::Mtt);
    for root in 1..=g.n() {
        let count = count_uprooted_at(g, root).expect("root in range");
        table.insert(CensusKey::root(root), count);
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, complete_graph};

    fn e(u: usize, v: usize) -> EdgeRef {
        EdgeRef::new(u, v).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn counts_standard_graphs() {
        assert_eq!(count_spanning_trees(&complete_graph(4).unwrap()), BigUint::from(16u32));
        assert_eq!(
            count_spanning_trees(&complete_bipartite(2, 3).unwrap()),
            BigUint::from(12u32)
        );
        assert_eq!(count_spanning_trees(&Graph::empty(2).unwrap()), BigUint::from(0u32));
        assert_eq!(count_spanning_trees(&Graph::empty(1).unwrap()), BigUint::from(1u32));
        let triple = Graph::from_edges(2, &[(1, 2), (1, 2), (1, 2)]).unwrap();
        assert_eq!(count_spanning_trees(&triple), BigUint::from(3u32));
    }

    #[test]
    fn counts_with_marked_edge() {
        let k3 = complete_graph(3).unwrap();
        assert_eq!(
            count_spanning_trees_with_edge(&k3, e(1, 2)).unwrap(),
            BigUint::from(2u32)
        );
        let k4 = complete_graph(4).unwrap();
        assert_eq!(
            count_spanning_trees_with_edge(&k4, e(2, 3)).unwrap(),
            BigUint::from(8u32)
        );
        // edges touching the removed vertex take the one-sided bump
        assert_eq!(
            count_spanning_trees_with_edge(&k4, e(1, 4)).unwrap(),
            BigUint::from(8u32)
        );
        let p = path(5);
        assert_eq!(
            count_spanning_trees_with_edge(&p, e(2, 3)).unwrap(),
            count_spanning_trees(&p)
        );
        assert_eq!(
            count_spanning_trees_with_edge(&p, e(1, 3)),
            Err(Error::MissingEdge { u: 1, v: 3 })
        );
    }

    #[test]
    fn marked_copy_of_parallel_edge() {
        // two parallel copies of {1,2} plus a path 2-3: two trees, one per copy
        let g = Graph::from_edges(3, &[(1, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(count_spanning_trees(&g), BigUint::from(2u32));
        assert_eq!(
            count_spanning_trees_with_edge(&g, e(1, 2)).unwrap(),
            BigUint::from(1u32)
        );
    }

    #[test]
    fn uprooted_census_by_root() {
        let t = count_uprooted_all_roots(&complete_graph(3).unwrap());
        assert_eq!(t.get(&CensusKey::root(3)), Some(&BigUint::from(3u32)));
        assert_eq!(t.get(&CensusKey::root(2)), Some(&BigUint::from(1u32)));
        assert_eq!(t.get(&CensusKey::root(1)), Some(&BigUint::from(0u32)));
        assert_eq!(t.total(), BigUint::from(4u32));

        let t = count_uprooted_all_roots(&complete_graph(2).unwrap());
        assert_eq!(t.get(&CensusKey::root(1)), Some(&BigUint::from(0u32)));
        assert_eq!(t.total(), BigUint::from(1u32));

        let g = complete_graph(4).unwrap().delete_edges(&[e(1, 4)]).unwrap();
        assert_eq!(count_uprooted_all_roots(&g).total(), BigUint::from(12u32));
    }

    #[test]
    fn uprooted_with_child_argument_checks() {
        let k4 = complete_graph(4).unwrap();
        assert!(count_uprooted_with_child(&k4, 3, 3).is_err());
        assert!(count_uprooted_with_child(&k4, 5, 1).is_err());
        let g = k4.delete_edges(&[e(2, 3)]).unwrap();
        assert!(matches!(
            count_uprooted_with_child(&g, 3, 2),
            Err(Error::MissingEdge { .. })
        ));
        assert_eq!(count_uprooted_with_child(&k4, 3, 2).unwrap(), BigUint::from(5u32));
        assert_eq!(count_uprooted_with_child(&k4, 3, 1).unwrap(), BigUint::from(3u32));
    }
}
