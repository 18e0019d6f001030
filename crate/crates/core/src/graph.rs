//! Loopless labeled (multi)graphs on the vertex set `1..=n`, their Laplacians,
//! and the restricted graph families used by the uprooted-tree census.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// An unordered vertex pair, normalized so that `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    pub u: usize,
    pub v: usize,
}

impl EdgeRef {
    /// Normalizes the endpoint order. Loops are rejected.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::MalformedGraph(format!("loop at vertex {a}")));
        }
        Ok(EdgeRef {
            u: a.min(b),
            v: a.max(b),
        })
    }
}

impl std::fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// Undirected loopless graph stored as a dense symmetric multiplicity matrix.
/// Vertices are labeled `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    mult: Vec<u32>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("vertex count must be at least 1".into()));
        }
        Ok(Graph {
            n,
            mult: vec![0; n * n],
        })
    }

    /// Builds a graph from an edge list; repeated pairs accumulate multiplicity.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn idx(&self, u: usize, v: usize) -> usize {
        (u - 1) * self.n + (v - 1)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Adds one copy of the edge `{a, b}`.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        let e = EdgeRef::new(a, b)?;
        let (i, j) = (self.idx(e.u, e.v), self.idx(e.v, e.u));
        self.mult[i] += 1;
        self.mult[j] += 1;
        Ok(())
    }

    /// Multiplicity of `{u, v}`; zero for out-of-range or equal endpoints.
    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        if u == 0 || v == 0 || u > self.n || v > self.n {
            return 0;
        }
        self.mult[self.idx(u, v)]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.multiplicity(u, v) > 0
    }

    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&m| m <= 1)
    }

    /// Distinct adjacent pairs in lexicographic order, ignoring multiplicity.
    pub fn edges(&self) -> Vec<EdgeRef> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                if self.has_edge(u, v) {
                    out.push(EdgeRef { u, v });
                }
            }
        }
        out
    }

    /// Total number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.mult.iter().map(|&m| m as u64).sum::<u64>() / 2
    }

    pub fn degree(&self, v: usize) -> Result<u64> {
        self.check_vertex(v)?;
        let row = (v - 1) * self.n;
        Ok(self.mult[row..row + self.n].iter().map(|&m| m as u64).sum())
    }

    pub fn degrees(&self) -> Vec<u64> {
        (1..=self.n).map(|v| self.degree(v).expect("vertex in range")).collect()
    }

    /// Removes every listed edge entirely. Each must be present.
    pub fn delete_edges(&self, edges: &[EdgeRef]) -> Result<Graph> {
        let mut g = self.clone();
        for e in edges {
            self.check_vertex(e.u)?;
            self.check_vertex(e.v)?;
            if !g.has_edge(e.u, e.v) {
                return Err(Error::MissingEdge { u: e.u, v: e.v });
            }
            let (i, j) = (g.idx(e.u, e.v), g.idx(e.v, e.u));
            g.mult[i] = 0;
            g.mult[j] = 0;
        }
        Ok(g)
    }

    /// Removes a single copy of `e`, leaving parallel copies in place.
    pub fn remove_one(&self, e: EdgeRef) -> Result<Graph> {
        self.check_vertex(e.u)?;
        self.check_vertex(e.v)?;
        if !self.has_edge(e.u, e.v) {
            return Err(Error::MissingEdge { u: e.u, v: e.v });
        }
        let mut g = self.clone();
        let (i, j) = (g.idx(e.u, e.v), g.idx(e.v, e.u));
        g.mult[i] -= 1;
        g.mult[j] -= 1;
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v - 1]`. `perm` must be a permutation of `1..=n`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(Error::InvalidParameter("permutation length mismatch".into()));
        }
        for &p in perm {
            self.check_vertex(p)?;
            if std::mem::replace(&mut seen[p - 1], true) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        let mut g = Graph::empty(self.n)?;
        for u in 1..=self.n {
            for v in 1..=self.n {
                let (i, j) = (g.idx(perm[u - 1], perm[v - 1]), self.idx(u, v));
                g.mult[i] = self.mult[j];
            }
        }
        Ok(g)
    }

    /// Connectivity by depth-first search over the support.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![1];
        seen[1] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for (v, mark) in seen.iter_mut().enumerate().skip(1) {
                if !*mark && self.has_edge(u, v) {
                    *mark = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// `L(G) = D(G) - A(G)`.
    pub fn laplacian(&self) -> IntMatrix {
        let n = self.n;
        let degrees = self.degrees();
        IntMatrix::from_fn(n, |i, j| {
            if i == j {
                BigInt::from(degrees[i])
            } else {
                -BigInt::from(self.mult[i * n + j])
            }
        })
    }

    /// Laplacian with row and column `v` removed.
    pub fn reduced_laplacian(&self, v: usize) -> Result<IntMatrix> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(Error::EmptyMatrix);
        }
        Ok(self.laplacian().without(v - 1))
    }

    pub fn to_json(&self) -> GraphJson {
        let mut edges = Vec::new();
        for e in self.edges() {
            for _ in 0..self.multiplicity(e.u, e.v) {
                edges.push([e.u, e.v]);
            }
        }
        GraphJson { n: self.n, edges }
    }

    pub fn from_json(json: &GraphJson) -> Result<Graph> {
        let mut g = Graph::empty(json.n)?;
        for &[a, b] in &json.edges {
            if a == 0 || a > json.n || b == 0 || b > json.n {
                return Err(Error::MalformedGraph(format!(
                    "edge [{a},{b}] has an endpoint outside 1..={}",
                    json.n
                )));
            }
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn parse_json(text: &str) -> Result<Graph> {
        let json: GraphJson = serde_json::from_str(text).map_err(|e| Error::MalformedGraph(e.to_string()))?;
        Graph::from_json(&json)
    }
}

/// Wire form: `{"n": <int>, "edges": [[u,v], ...]}`, 1-indexed, repeated pairs
/// meaning multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 1..=n {
        for v in u + 1..=n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// `K_{m,n}` with parts `{1..m}` and `{m+1..m+n}`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter("both parts must be nonempty".into()));
    }
    let mut g = Graph::empty(m + n)?;
    for u in 1..=m {
        for v in m + 1..=m + n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Restricted graphs whose spanning trees, rooted at a designated vertex,
/// are exactly the uprooted trees of one census class.
pub mod families {
    use super::*;

    fn bad(msg: String) -> Error {
        Error::InvalidParameter(msg)
    }

    /// `K_n` without the edges from root `n-k` to every larger vertex.
    /// Requires `n >= 2`, `0 <= k <= n-1`.
    pub fn restricted_complete(n: usize, k: usize) -> Result<Graph> {
        if n < 2 || k > n - 1 {
            return Err(bad(format!("need n >= 2 and 0 <= k <= n-1, got n={n}, k={k}")));
        }
        let root = n - k;
        let cut: Vec<EdgeRef> = (root + 1..=n).map(|i| EdgeRef { u: root, v: i }).collect();
        complete_graph(n)?.delete_edges(&cut)
    }

    /// `K_{m,n}` without the edges from root `m+n` to vertices `m+2-k..=m`, so
    /// that `m+1-k` is the largest child the root can have.
    /// Requires `m, n >= 1`, `1 <= k <= m`.
    pub fn restricted_bipartite(m: usize, n: usize, k: usize) -> Result<Graph> {
        if m == 0 || n == 0 || k == 0 || k > m {
            return Err(bad(format!("need m, n >= 1 and 1 <= k <= m, got m={m}, n={n}, k={k}")));
        }
        let root = m + n;
        let cut: Vec<EdgeRef> = (m + 2 - k..=m).map(|i| EdgeRef { u: i, v: root }).collect();
        complete_bipartite(m, n)?.delete_edges(&cut)
    }

    /// `K_n` without the edges from root `n-k` to every `v` in `n-k-j+1..=n`
    /// other than the root itself; `n-k-j` is the largest remaining neighbor.
    /// Requires `n >= 2`, `0 <= k <= n-2`, `1 <= j <= n-k-1`.
    pub fn restricted_complete_with_child(n: usize, k: usize, j: usize) -> Result<Graph> {
        if n < 2 || k > n - 2 || j == 0 || j > n - k - 1 {
            return Err(bad(format!(
                "need n >= 2, 0 <= k <= n-2, 1 <= j <= n-k-1, got n={n}, k={k}, j={j}"
            )));
        }
        let root = n - k;
        let cut: Vec<EdgeRef> = (n - k - j + 1..=n)
            .filter(|&v| v != root)
            .map(|v| EdgeRef::new(root, v).expect("distinct endpoints"))
            .collect();
        complete_graph(n)?.delete_edges(&cut)
    }

    /// `K_n` without `{1,n}` and without the edges from root `n-k` to every
    /// larger vertex. Requires `n >= 3`, `1 <= k <= n-2`.
    pub fn restricted_complete_minus_edge(n: usize, k: usize) -> Result<Graph> {
        if n < 3 || k == 0 || k > n - 2 {
            return Err(bad(format!("need n >= 3 and 1 <= k <= n-2, got n={n}, k={k}")));
        }
        let root = n - k;
        let mut cut = vec![EdgeRef { u: 1, v: n }];
        cut.extend((root + 1..=n).map(|i| EdgeRef { u: root, v: i }));
        complete_graph(n)?.delete_edges(&cut)
    }

    /// `K_n` without the edge `{1, n}`. Requires `n >= 2`.
    pub fn complete_minus_edge(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(bad(format!("need n >= 2, got n={n}")));
        }
        complete_graph(n)?.delete_edges(&[EdgeRef { u: 1, v: n }])
    }
}
