//! Brute-force ground truth: explicit spanning-tree enumeration, rooting,
//! and Prüfer sequences.
//!
//! Nothing here touches a determinant, so these routines can check the
//! Laplacian-based counts independently.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Graph};

/// Default ceiling on the number of `(n-1)`-edge subsets the oracle may examine.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

/// A labeled tree on `1..=n`, edges sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree {
    n: usize,
    edges: Vec<EdgeRef>,
}

impl Tree {
    /// Checks that `edges` form a spanning tree of `1..=n`.
    pub fn new(n: usize, mut edges: Vec<EdgeRef>) -> Result<Tree> {
        if n == 0 {
            return Err(Error::InvalidParameter("tree needs at least one vertex".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::MalformedGraph(format!(
                "a tree on {n} vertices has {} edges, got {}",
                n - 1,
                edges.len()
            )));
        }
        let mut uf = UnionFind::new(n + 1);
        for e in &edges {
            if e.u == 0 || e.v > n || e.u >= e.v {
                return Err(Error::MalformedGraph(format!("bad tree edge {e}")));
            }
            if !uf.union(e.u, e.v) {
                return Err(Error::MalformedGraph(format!("edge {e} closes a cycle")));
            }
        }
        edges.sort();
        Ok(Tree { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[EdgeRef] {
        &self.edges
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        adj
    }

    pub fn to_json(&self) -> TreeJson {
        TreeJson {
            edges: self.edges.iter().map(|e| [e.u, e.v]).collect(),
        }
    }
}

/// Wire form of one tree in an oracle dump.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub edges: Vec<[usize; 2]>,
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Every spanning tree of a simple graph, by checking each `(n-1)`-edge
/// subset for acyclicity. Output is in lexicographic order of sorted edge
/// lists.
pub fn enumerate_spanning_trees(g: &Graph, budget: u64) -> Result<Vec<Tree>> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = g.n();
    let edges = g.edges();
    let pick = n - 1;
    let needed = binomial(edges.len(), pick);
    if needed > BigUint::from(budget) {
        return Err(Error::OracleTooLarge {
            needed: needed.to_string(),
            budget,
        });
    }
    let mut trees = Vec::new();
    if pick > edges.len() {
        return Ok(trees);
    }

    let mut idx: Vec<usize> = (0..pick).collect();
    loop {
        let mut uf = UnionFind::new(n + 1);
        if idx.iter().all(|&i| uf.union(edges[i].u, edges[i].v)) {
            trees.push(Tree {
                n,
                edges: idx.iter().map(|&i| edges[i]).collect(),
            });
        }
        // advance to the next combination in lexicographic order
        let Some(pos) = (0..pick).rev().find(|&p| idx[p] < edges.len() - pick + p) else {
            break;
        };
        idx[pos] += 1;
        for p in pos + 1..pick {
            idx[p] = idx[p - 1] + 1;
        }
    }
    Ok(trees)
}

/// Spanning-tree count with multiplicity: enumerates trees of the underlying
/// simple graph and sums the product of edge multiplicities over each.
pub fn count_weighted(g: &Graph, budget: u64) -> Result<BigUint> {
    let mut support = Graph::empty(g.n())?;
    for e in g.edges() {
        support.add_edge(e.u, e.v)?;
    }
    let trees = enumerate_spanning_trees(&support, budget)?;
    Ok(trees
        .iter()
        .map(|t| {
            t.edges()
                .iter()
                .map(|e| BigUint::from(g.multiplicity(e.u, e.v)))
                .product::<BigUint>()
        })
        .sum())
}

/// A Prüfer sequence for a labeled tree on `1..=n`; length `n - 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PruferSeq {
    pub n: usize,
    pub seq: Vec<usize>,
}

pub fn prufer_decode(s: &PruferSeq) -> Result<Tree> {
    let n = s.n;
    if n < 2 {
        return Err(Error::InvalidSequence(format!("n must be at least 2, got {n}")));
    }
    if s.seq.len() != n - 2 {
        return Err(Error::InvalidSequence(format!(
            "length {} but n - 2 = {}",
            s.seq.len(),
            n - 2
        )));
    }
    if let Some(&bad) = s.seq.iter().find(|&&x| x == 0 || x > n) {
        return Err(Error::InvalidSequence(format!("label {bad} outside 1..={n}")));
    }

    let mut degree = vec![1usize; n + 1];
    for &x in &s.seq {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &s.seq {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        edges.push(EdgeRef::new(leaf, x)?);
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let a = leaves.pop_first().expect("two vertices remain");
    let b = leaves.pop_first().expect("two vertices remain");
    edges.push(EdgeRef::new(a, b)?);
    Tree::new(n, edges)
}

pub fn prufer_encode(t: &Tree) -> Result<PruferSeq> {
    let n = t.n;
    if n < 2 {
        return Err(Error::InvalidSequence(format!("n must be at least 2, got {n}")));
    }
    let adj = t.adjacency();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n + 1];
    let mut leaves: BTreeSet<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    let mut seq = Vec::with_capacity(n - 2);
    for _ in 0..n - 2 {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        removed[leaf] = true;
        let next = *adj[leaf]
            .iter()
            .find(|&&u| !removed[u])
            .expect("leaf has one live neighbor");
        seq.push(next);
        degree[next] -= 1;
        if degree[next] == 1 {
            leaves.insert(next);
        }
    }
    Ok(PruferSeq { n, seq })
}

/// A tree oriented away from `root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    tree: Tree,
    root: usize,
    parent: Vec<Option<usize>>,
}

impl RootedTree {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    /// `None` for the root.
    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent.get(v).copied().flatten()
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        (1..=self.tree.n).filter(|&c| self.parent(c) == Some(v)).collect()
    }

    /// True iff every child of the root has a smaller label than the root.
    pub fn is_uprooted(&self) -> bool {
        self.children(self.root).iter().all(|&c| c < self.root)
    }

    pub fn highest_child_of_root(&self) -> Result<usize> {
        self.children(self.root).into_iter().max().ok_or(Error::NoChildren)
    }
}

pub fn root_tree(t: &Tree, root: usize) -> Result<RootedTree> {
    if root == 0 || root > t.n {
        return Err(Error::VertexOutOfRange { vertex: root, n: t.n });
    }
    let adj = t.adjacency();
    let mut parent = vec![None; t.n + 1];
    let mut seen = vec![false; t.n + 1];
    seen[root] = true;
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                parent[v] = Some(u);
                stack.push(v);
            }
        }
    }
    Ok(RootedTree {
        tree: t.clone(),
        root,
        parent,
    })
}

pub fn is_uprooted(rt: &RootedTree) -> bool {
    rt.is_uprooted()
}

pub fn highest_child_of_root(rt: &RootedTree) -> Result<usize> {
    rt.highest_child_of_root()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, complete_graph};

    fn tree(n: usize, edges: &[(usize, usize)]) -> Tree {
        Tree::new(n, edges.iter().map(|&(u, v)| EdgeRef::new(u, v).unwrap()).collect()).unwrap()
    }

    #[test]
    fn enumerates_small_graphs() {
        let k3 = enumerate_spanning_trees(&complete_graph(3).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(k3.len(), 3);
        assert_eq!(k3[0], tree(3, &[(1, 2), (1, 3)]));

        let p4 = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(enumerate_spanning_trees(&p4, DEFAULT_BUDGET).unwrap().len(), 1);

        let c4 = enumerate_spanning_trees(&complete_bipartite(2, 2).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(c4.len(), 4);

        let single = enumerate_spanning_trees(&Graph::empty(1).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(single, vec![Tree::new(1, vec![]).unwrap()]);

        assert!(enumerate_spanning_trees(&Graph::empty(3).unwrap(), DEFAULT_BUDGET)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn output_is_sorted() {
        let trees = enumerate_spanning_trees(&complete_graph(5).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(trees.len(), 125);
        assert!(trees.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn budget_and_simplicity() {
        let k8 = complete_graph(8).unwrap();
        assert!(matches!(
            enumerate_spanning_trees(&k8, 1000),
            Err(Error::OracleTooLarge { .. })
        ));
        let multi = Graph::from_edges(2, &[(1, 2), (1, 2)]).unwrap();
        assert_eq!(enumerate_spanning_trees(&multi, DEFAULT_BUDGET), Err(Error::NotSimple));
        assert_eq!(count_weighted(&multi, DEFAULT_BUDGET).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn prufer_examples() {
        let star = prufer_decode(&PruferSeq { n: 3, seq: vec![1] }).unwrap();
        assert_eq!(star, tree(3, &[(1, 2), (1, 3)]));
        let edge = prufer_decode(&PruferSeq { n: 2, seq: vec![] }).unwrap();
        assert_eq!(edge, tree(2, &[(1, 2)]));
        assert_eq!(prufer_encode(&edge).unwrap().seq, Vec::<usize>::new());

        for t in enumerate_spanning_trees(&complete_graph(4).unwrap(), DEFAULT_BUDGET).unwrap() {
            assert_eq!(prufer_decode(&prufer_encode(&t).unwrap()).unwrap(), t);
        }
    }

    #[test]
    fn prufer_rejects_bad_input() {
        assert!(matches!(
            prufer_decode(&PruferSeq { n: 4, seq: vec![1, 5] }),
            Err(Error::InvalidSequence(_))
        ));
        assert!(prufer_decode(&PruferSeq { n: 4, seq: vec![1] }).is_err());
        assert!(prufer_decode(&PruferSeq { n: 1, seq: vec![] }).is_err());
    }

    #[test]
    fn rooting() {
        let p = tree(3, &[(1, 2), (2, 3)]);
        let rt = root_tree(&p, 3).unwrap();
        assert_eq!(rt.parent(2), Some(3));
        assert_eq!(rt.parent(1), Some(2));
        assert_eq!(rt.parent(3), None);
        assert!(is_uprooted(&rt));
        assert_eq!(highest_child_of_root(&rt).unwrap(), 2);

        let star = tree(3, &[(1, 2), (1, 3)]);
        let rt = root_tree(&star, 1).unwrap();
        assert_eq!(rt.parent(2), Some(1));
        assert_eq!(rt.parent(3), Some(1));
        assert!(!is_uprooted(&rt));

        let t = tree(4, &[(1, 2), (1, 3), (3, 4)]);
        let rt = root_tree(&t, 4).unwrap();
        assert_eq!((rt.parent(3), rt.parent(1), rt.parent(2)), (Some(4), Some(3), Some(1)));

        let t = tree(4, &[(1, 4), (2, 4), (3, 4)]);
        let rt = root_tree(&t, 4).unwrap();
        assert!(rt.is_uprooted());
        assert_eq!(rt.highest_child_of_root().unwrap(), 3);

        let t = tree(4, &[(1, 3), (1, 2), (2, 4)]);
        assert_eq!(root_tree(&t, 3).unwrap().highest_child_of_root().unwrap(), 1);

        let lone = Tree::new(1, vec![]).unwrap();
        let rt = root_tree(&lone, 1).unwrap();
        assert_eq!(rt.highest_child_of_root(), Err(Error::NoChildren));
        assert!(root_tree(&lone, 2).is_err());
    }

    #[test]
    fn tree_validation() {
        let e = |u, v| EdgeRef::new(u, v).unwrap();
        assert!(Tree::new(3, vec![e(1, 2)]).is_err());
        assert!(Tree::new(4, vec![e(1, 2), e(2, 3), e(1, 3)]).is_err());
    }
}
