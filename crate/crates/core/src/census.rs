//! Uprooted spanning-tree census: closed forms, determinant route, and
//! brute-force route, all producing the same [`CensusTable`] shape.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exact::{int, ipow, product, ratio, to_count};
use crate::graph::{complete_bipartite, complete_graph, families, EdgeRef, Graph};
use crate::kirchhoff::{
    count_spanning_trees, count_spanning_trees_with_edge, count_uprooted_at, count_uprooted_with_child,
};
use crate::oracle::{enumerate_spanning_trees, root_tree};

fn out_of_range(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

/// Uprooted spanning trees of `K_n` with root `n-k`:
/// `(n-1-k) n^(n-2-k) (n-1)^(k-1)`.
pub fn uprooted_by_root(n: usize, k: usize) -> Result<BigUint> {
    if n < 2 || k > n - 1 {
        return Err(out_of_range(format!("need n >= 2 and 0 <= k <= n-1, got n={n}, k={k}")));
    }
    let (n, k) = (n as i64, k as i64);
    to_count(product(&[int(n - 1 - k), ipow(n, n - 2 - k)?, ipow(n - 1, k - 1)?]))
}

/// Uprooted spanning trees of `K_{m,n}` rooted at `m+n` whose highest root
/// child is `m+1-k`: `m^(n-2) n^(m-k-1) (n-1)^(k-1) (m+n-k)`.
pub fn bipartite_by_highest_child(m: usize, n: usize, k: usize) -> Result<BigUint> {
    if m == 0 || n == 0 || k == 0 || k > m {
        return Err(out_of_range(format!(
            "need m, n >= 1 and 1 <= k <= m, got m={m}, n={n}, k={k}"
        )));
    }
    let (m, n, k) = (m as i64, n as i64, k as i64);
    to_count(product(&[
        ipow(m, n - 2)?,
        ipow(n, m - k - 1)?,
        ipow(n - 1, k - 1)?,
        int(m + n - k),
    ]))
}

/// Uprooted spanning trees of `K_n` with root `n-k` and highest root child
/// `n-k-j`: `n^(n-k-j-2) (n-1)^(k+j-2) (2n-k-j-1)`.
pub fn uprooted_by_root_and_child(n: usize, k: usize, j: usize) -> Result<BigUint> {
    if n < 2 || k > n - 2 || j == 0 || j > n - k - 1 {
        return Err(out_of_range(format!(
            "need n >= 2, 0 <= k <= n-2, 1 <= j <= n-k-1, got n={n}, k={k}, j={j}"
        )));
    }
    let (n, k, j) = (n as i64, k as i64, j as i64);
    to_count(product(&[
        ipow(n, n - k - j - 2)?,
        ipow(n - 1, k + j - 2)?,
        int(2 * n - k - j - 1),
    ]))
}

/// Uprooted spanning trees of `K_n` minus `{1,n}` with root `n-k`.
/// Root `n` gives `n^(n-3) (n-2)`; for `1 <= k <= n-2` the count is
/// `n^(n-2-k) (n-1)^(k-1) ((n-3-k) + (2nk+n-k-2)/(n(n-1)))`.
pub fn minus_edge_uprooted_by_root(n: usize, k: usize) -> Result<BigUint> {
    if n < 3 || k > n - 2 {
        return Err(out_of_range(format!("need n >= 3 and 0 <= k <= n-2, got n={n}, k={k}")));
    }
    let (n, k) = (n as i64, k as i64);
    if k == 0 {
        return to_count(product(&[ipow(n, n - 3)?, int(n - 2)]));
    }
    let bracket = int(n - 3 - k) + ratio(2 * n * k + n - k - 2, n * (n - 1));
    to_count(product(&[ipow(n, n - 2 - k)?, ipow(n - 1, k - 1)?, bracket]))
}

/// Graph families with a known census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Complete {
        n: usize,
    },
    Bipartite {
        m: usize,
        n: usize,
    },
    /// `K_n` with the edge `{1, n}` deleted.
    CompleteMinusEdge {
        n: usize,
    },
    Custom {
        graph: Graph,
        source: Option<String>,
    },
}

impl Family {
    pub fn custom(graph: Graph) -> Family {
        Family::Custom { graph, source: None }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Family::Complete { .. } => "kn",
            Family::Bipartite { .. } => "kmn",
            Family::CompleteMinusEdge { .. } => "kn-minus-edge",
            Family::Custom { .. } => "file",
        }
    }

    /// Checks parameter preconditions.
    pub fn validate(&self) -> Result<()> {
        match *self {
            Family::Complete { n } if n < 2 => Err(out_of_range(format!("kn needs n >= 2, got {n}"))),
            Family::Bipartite { m, n } if m == 0 || n == 0 => {
                Err(out_of_range(format!("kmn needs m, n >= 1, got m={m}, n={n}")))
            }
            Family::CompleteMinusEdge { n } if n < 3 => {
                Err(out_of_range(format!("kn-minus-edge needs n >= 3, got {n}")))
            }
            _ => Ok(()),
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        self.validate()?;
        match self {
            Family::Complete { n } => complete_graph(*n),
            Family::Bipartite { m, n } => complete_bipartite(*m, *n),
            Family::CompleteMinusEdge { n } => families::complete_minus_edge(*n),
            Family::Custom { graph, .. } => Ok(graph.clone()),
        }
    }

    pub fn params(&self) -> Value {
        match self {
            Family::Complete { n } | Family::CompleteMinusEdge { n } => json!({ "n": n }),
            Family::Bipartite { m, n } => json!({ "m": m, "n": n }),
            Family::Custom { graph, source } => match source {
                Some(path) => json!({ "n": graph.n(), "path": path }),
                None => json!({ "n": graph.n() }),
            },
        }
    }

    /// Roots covered by a root-grain census. `K_n` minus `{1,n}` starts at
    /// root 2; root 1 can never be uprooted once `n >= 2`.
    fn roots(&self, n: usize) -> Vec<usize> {
        match self {
            Family::CompleteMinusEdge { .. } => (2..=n).rev().collect(),
            _ => (1..=n).rev().collect(),
        }
    }

    /// Every census key this family reports at `grain`, in output order.
    pub fn keys(&self, grain: Grain) -> Result<Vec<CensusKey>> {
        let g = self.graph()?;
        let n = g.n();
        Ok(match (self, grain) {
            (_, Grain::Root) => self.roots(n).into_iter().map(CensusKey::root).collect(),
            (Family::Bipartite { m, n }, Grain::RootAndChild) => {
                (1..=*m).rev().map(|c| CensusKey::root_child(m + n, c)).collect()
            }
            (_, Grain::RootAndChild) => self
                .roots(n)
                .into_iter()
                .flat_map(|r| {
                    (1..r)
                        .rev()
                        .filter(|&c| g.has_edge(c, r))
                        .map(move |c| CensusKey::root_child(r, c))
                        .collect::<Vec<_>>()
                })
                .collect(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Grain {
    /// Keyed by root.
    Root,
    /// Keyed by root and the highest child of the root.
    RootAndChild,
}

impl Grain {
    pub fn as_str(self) -> &'static str {
        match self {
            Grain::Root => "root",
            Grain::RootAndChild => "root+highest-child",
        }
    }

    pub fn parse(text: &str) -> Result<Grain> {
        match text {
            "root" => Ok(Grain::Root),
            "root+highest-child" | "root+hchild" | "hchild" => Ok(Grain::RootAndChild),
            other => Err(Error::InvalidParameter(format!("unknown grain `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Formula,
    Mtt,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Mtt => "mtt",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CensusKey {
    pub root: usize,
    pub child: Option<usize>,
}

impl CensusKey {
    pub fn root(root: usize) -> Self {
        CensusKey { root, child: None }
    }

    pub fn root_child(root: usize, child: usize) -> Self {
        CensusKey {
            root,
            child: Some(child),
        }
    }
}

impl std::fmt::Display for CensusKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.child {
            None => write!(f, "{}", self.root),
            Some(c) => write!(f, "{},{}", self.root, c),
        }
    }
}

/// Exact counts per census key, tagged with the family and how they were
/// obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusTable {
    pub family: Family,
    pub grain: Grain,
    pub method: Method,
    entries: BTreeMap<CensusKey, BigUint>,
}

impl CensusTable {
    pub fn new(family: Family, grain: Grain, method: Method) -> Self {
        CensusTable {
            family,
            grain,
            method,
            entries: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, key: CensusKey, count: BigUint) {
        self.entries.insert(key, count);
    }

    pub fn get(&self, key: &CensusKey) -> Option<&BigUint> {
        self.entries.get(key)
    }

    pub fn entries(&self) -> &BTreeMap<CensusKey, BigUint> {
        &self.entries
    }

    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    /// Same keys and counts, regardless of method.
    pub fn agrees_with(&self, other: &CensusTable) -> bool {
        self.grain == other.grain && self.entries == other.entries
    }

    /// Counts are decimal strings; keys run from the highest root down.
    pub fn to_json(&self) -> Value {
        let mut entries = Map::new();
        for (k, v) in self.entries.iter().rev() {
            entries.insert(k.to_string(), Value::String(v.to_string()));
        }
        json!({
            "family": self.family.tag(),
            "params": self.family.params(),
            "grain": self.grain.as_str(),
            "method": self.method.as_str(),
            "entries": entries,
            "total": self.total().to_string(),
        })
    }
}

/// Whether a closed form exists for this family and grain.
pub fn has_formula(family: &Family, grain: Grain) -> bool {
    matches!(
        (family, grain),
        (Family::Complete { .. }, _)
            | (Family::Bipartite { .. }, Grain::RootAndChild)
            | (Family::CompleteMinusEdge { .. }, Grain::Root)
    )
}

pub fn census_formula(family: &Family, grain: Grain) -> Result<CensusTable> {
    family.validate()?;
    let mut table = CensusTable::new(family.clone(), grain, Method::Formula);
    match (family, grain) {
        (Family::Complete { n }, Grain::Root) => {
            for k in 0..*n {
                table.insert(CensusKey::root(n - k), uprooted_by_root(*n, k)?);
            }
        }
        (Family::Complete { n }, Grain::RootAndChild) => {
            for k in 0..=n - 2 {
                for j in 1..n - k {
                    let key = CensusKey::root_child(n - k, n - k - j);
                    table.insert(key, uprooted_by_root_and_child(*n, k, j)?);
                }
            }
        }
        (Family::Bipartite { m, n }, Grain::RootAndChild) => {
            for k in 1..=*m {
                let key = CensusKey::root_child(m + n, m + 1 - k);
                table.insert(key, bipartite_by_highest_child(*m, *n, k)?);
            }
        }
        (Family::CompleteMinusEdge { n }, Grain::Root) => {
            for k in 0..=n - 2 {
                table.insert(CensusKey::root(n - k), minus_edge_uprooted_by_root(*n, k)?);
            }
        }
        _ => {
            return Err(Error::InvalidParameter(format!(
                "no closed form for family `{}` at grain `{}`",
                family.tag(),
                grain.as_str()
            )))
        }
    }
    Ok(table)
}

/// Census from reduced-Laplacian determinants of the restricted graphs.
///
/// The named families go through their dedicated builders; any other
/// family/grain pair uses the generic edge-deletion device from
/// [`crate::kirchhoff`].
pub fn census_mtt(family: &Family, grain: Grain) -> Result<CensusTable> {
    family.validate()?;
    let mut table = CensusTable::new(family.clone(), grain, Method::Mtt);
    match (family, grain) {
        (Family::Complete { n }, Grain::Root) => {
            for k in 0..*n {
                let g = families::restricted_complete(*n, k)?;
                table.insert(CensusKey::root(n - k), count_spanning_trees(&g));
            }
        }
        (Family::Complete { n }, Grain::RootAndChild) => {
            for k in 0..=n - 2 {
                for j in 1..n - k {
                    let g = families::restricted_complete_with_child(*n, k, j)?;
                    let e = EdgeRef::new(n - k - j, n - k)?;
                    let key = CensusKey::root_child(n - k, n - k - j);
                    table.insert(key, count_spanning_trees_with_edge(&g, e)?);
                }
            }
        }
        (Family::Bipartite { m, n }, Grain::RootAndChild) => {
            for k in 1..=*m {
                let g = families::restricted_bipartite(*m, *n, k)?;
                let e = EdgeRef::new(m + 1 - k, m + n)?;
                let key = CensusKey::root_child(m + n, m + 1 - k);
                table.insert(key, count_spanning_trees_with_edge(&g, e)?);
            }
        }
        (Family::CompleteMinusEdge { n }, Grain::Root) => {
            let g = families::complete_minus_edge(*n)?;
            table.insert(CensusKey::root(*n), count_spanning_trees(&g));
            for k in 1..=n - 2 {
                let g = families::restricted_complete_minus_edge(*n, k)?;
                table.insert(CensusKey::root(n - k), count_spanning_trees(&g));
            }
        }
        _ => {
            let g = family.graph()?;
            if !g.is_simple() {
                return Err(Error::NotSimple);
            }
            for key in family.keys(grain)? {
                let count = match key.child {
                    None => count_uprooted_at(&g, key.root)?,
                    Some(c) => count_uprooted_with_child(&g, key.root, c)?,
                };
                table.insert(key, count);
            }
        }
    }
    Ok(table)
}

/// Census by enumerating every spanning tree, rooting it at each candidate
/// root, and keeping the uprooted ones.
pub fn census_oracle(family: &Family, grain: Grain, budget: u64) -> Result<CensusTable> {
    let g = family.graph()?;
    let keys = family.keys(grain)?;
    let mut table = CensusTable::new(family.clone(), grain, Method::Oracle);
    for &key in &keys {
        table.insert(key, BigUint::zero());
    }
    let mut roots: Vec<usize> = keys.iter().map(|k| k.root).collect();
    roots.dedup();

    for tree in enumerate_spanning_trees(&g, budget)? {
        for &r in &roots {
            let rooted = root_tree(&tree, r)?;
            if !rooted.is_uprooted() {
                continue;
            }
            let key = match grain {
                Grain::Root => CensusKey::root(r),
                Grain::RootAndChild => match rooted.highest_child_of_root() {
                    Ok(c) => CensusKey::root_child(r, c),
                    Err(_) => continue,
                },
            };
            if let Some(slot) = table.entries.get_mut(&key) {
                *slot += 1u32;
            }
        }
    }
    Ok(table)
}

/// Runs every method available for the family and reports whether all of
/// the resulting tables agree.
pub fn census_all(family: &Family, grain: Grain, budget: u64) -> Result<(Vec<CensusTable>, bool)> {
    let mut tables = Vec::new();
    if has_formula(family, grain) {
        tables.push(census_formula(family, grain)?);
    }
    tables.push(census_mtt(family, grain)?);
    tables.push(census_oracle(family, grain, budget)?);
    let agree = tables.windows(2).all(|w| w[0].agrees_with(&w[1]));
    Ok((tables, agree))
}
