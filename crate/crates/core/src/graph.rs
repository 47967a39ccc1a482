//! Undirected simple graphs on small vertex sets.
//!
//! Vertices are 1-indexed in the public interface and in the JSON format
//! `{"k": int, "edges": [[i, j], ...]}`. The one exception is the Cayley
//! construction on the integers modulo 13, which works with residues
//! `0..12` internally and maps residue `r` to vertex `r + 1`.
//!
//! Graphs are immutable after construction: a sorted edge list plus one
//! adjacency bitset per vertex (vertex counts stay well below 64
//! throughout this crate).

use std::collections::BTreeSet;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("vertex count must be at least 1")]
    EmptyVertexSet,
    #[error("vertex count {0} exceeds the supported maximum of 64")]
    TooManyVertices(usize),
    #[error("edge ({0},{1}) is a loop")]
    Loop(usize, usize),
    #[error("edge ({0},{1}) is out of range for {2} vertices")]
    OutOfRange(usize, usize, usize),
    #[error("duplicate edge ({0},{1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} is out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("graphs have different vertex counts: {0} vs {1}")]
    MixedVertexCounts(usize, usize),
    #[error("union of an empty graph list")]
    EmptyUnion,
    #[error("Cayley connection set must be two distinct integers in 1..=6, got {{{0},{1}}}")]
    InvalidCayleySet(usize, usize),
}

/// An undirected simple graph with 1-based vertices `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    k: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from unordered vertex pairs. Pair order is
    /// normalized and repeated pairs collapse; loops and out-of-range
    /// vertices are rejected.
    pub fn new(
        k: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if k == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        if k > 64 {
            return Err(GraphError::TooManyVertices(k));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::Loop(a, b));
            }
            if a < 1 || a > k || b < 1 || b > k {
                return Err(GraphError::OutOfRange(a, b, k));
            }
            set.insert((a.min(b), a.max(b)));
        }
        let edges: Vec<(usize, usize)> = set.into_iter().collect();
        let mut adj = vec![0u64; k];
        for &(a, b) in &edges {
            adj[a - 1] |= 1 << (b - 1);
            adj[b - 1] |= 1 << (a - 1);
        }
        Ok(Self { k, edges, adj })
    }

    /// The edgeless graph on `k` vertices.
    pub fn empty(k: usize) -> Result<Self, GraphError> {
        Self::new(k, std::iter::empty())
    }

    /// The complete graph `K_k`.
    pub fn complete(k: usize) -> Result<Self, GraphError> {
        if k == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        let edges = (1..=k).flat_map(|a| (a + 1..=k).map(move |b| (a, b)));
        Self::new(k, edges)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        if a < 1 || a > self.k || b < 1 || b > self.k || a == b {
            return false;
        }
        self.adj[a - 1] & (1 << (b - 1)) != 0
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        if v < 1 || v > self.k {
            return Err(GraphError::VertexOutOfRange(v, self.k));
        }
        Ok(self.adj[v - 1].count_ones() as usize)
    }

    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>, GraphError> {
        if v < 1 || v > self.k {
            return Err(GraphError::VertexOutOfRange(v, self.k));
        }
        Ok((1..=self.k).filter(|&u| self.has_edge(v, u)).collect())
    }

    pub fn is_regular(&self, r: usize) -> bool {
        (1..=self.k).all(|v| self.adj[v - 1].count_ones() as usize == r)
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj[0].count_ones() as usize;
        if self.is_regular(d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.k * (self.k - 1) / 2
    }

    /// Edge-set union over a shared vertex set.
    pub fn union(gs: &[Graph]) -> Result<Graph, GraphError> {
        let Some(first) = gs.first() else {
            return Err(GraphError::EmptyUnion);
        };
        for g in gs {
            if g.k != first.k {
                return Err(GraphError::MixedVertexCounts(first.k, g.k));
            }
        }
        Graph::new(first.k, gs.iter().flat_map(|g| g.edges.iter().copied()))
    }

    /// First vertex pair (lexicographic) missing from the graph, if any.
    pub fn first_missing_edge(&self) -> Option<(usize, usize)> {
        for a in 1..=self.k {
            for b in a + 1..=self.k {
                if !self.has_edge(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// All non-adjacent vertex pairs `(a, b)` with `a < b`.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.k {
            for b in a + 1..=self.k {
                if !self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// True when no edge occurs in more than one of the given graphs.
    pub fn pairwise_edge_disjoint(gs: &[Graph]) -> bool {
        let mut seen = BTreeSet::new();
        for g in gs {
            for &e in &g.edges {
                if !seen.insert(e) {
                    return false;
                }
            }
        }
        true
    }
}

/// Cayley graph on the integers modulo 13 for the connection set
/// `S = {p, q}` with `1 <= p != q <= 6`: residues `a` and `b` are
/// adjacent iff `a - b mod 13` lies in `S ∪ (-S)`. Always 4-regular
/// with 26 edges.
pub fn cayley_z13(p: usize, q: usize) -> Result<Graph, GraphError> {
    if p == q || p < 1 || p > 6 || q < 1 || q > 6 {
        return Err(GraphError::InvalidCayleySet(p, q));
    }
    let mut edges = Vec::new();
    for r in 0..13usize {
        for d in [p, q] {
            let s = (r + d) % 13;
            edges.push((r + 1, s + 1));
        }
    }
    Graph::new(13, edges)
}

/// A partition of `{1,...,6}` into three unordered 2-element blocks,
/// stored in canonical order (each block ascending, blocks sorted by
/// their first entry).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairPartition {
    pub blocks: [[usize; 2]; 3],
}

impl PairPartition {
    pub fn new(blocks: [[usize; 2]; 3]) -> Option<Self> {
        let mut seen = [false; 7];
        let mut canon: Vec<[usize; 2]> = Vec::with_capacity(3);
        for b in blocks {
            let (lo, hi) = (b[0].min(b[1]), b[0].max(b[1]));
            if lo < 1 || hi > 6 || lo == hi || seen[lo] || seen[hi] {
                return None;
            }
            seen[lo] = true;
            seen[hi] = true;
            canon.push([lo, hi]);
        }
        canon.sort();
        Some(Self {
            blocks: [canon[0], canon[1], canon[2]],
        })
    }
}

impl fmt::Display for PairPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> std::fmt::Result {
        for b in self.blocks {
            write!(f, "{{{},{}}}", b[0], b[1])?;
        }
        Ok(())
    }
}

/// One decomposition of `K_13` into three edge-disjoint Cayley graphs.
#[derive(Debug, Clone)]
pub struct K13Decomposition {
    pub partition: PairPartition,
    pub graphs: [Graph; 3],
}

/// All 15 decompositions of `K_13` into three Cayley graphs, one per
/// partition of `{1,...,6}` into three 2-element blocks, in canonical
/// partition order.
pub fn enumerate_k13_decompositions() -> Vec<K13Decomposition> {
    let mut out = Vec::new();
    // 1 always pairs first; then the smallest remaining element pairs.
    for b in 2..=6usize {
        let rest: Vec<usize> = (2..=6).filter(|&x| x != b).collect();
        let lo = rest[0];
        for j in 1..rest.len() {
            let hi = rest[j];
            let others: Vec<usize> = rest[1..].iter().copied().filter(|&x| x != hi).collect();
            let partition =
                PairPartition::new([[1, b], [lo, hi], [others[0], others[1]]]).expect("valid");
            let graphs = partition.blocks.map(|s| {
                cayley_z13(s[0], s[1]).expect("blocks are valid connection sets")
            });
            out.push(K13Decomposition { partition, graphs });
        }
    }
    out.sort_by_key(|d| d.partition.blocks);
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    k: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphJson {
            k: self.k,
            edges: self.edges.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(deserializer)?;
        // The file format is strict: loops, duplicates (in either order),
        // and out-of-range endpoints are all rejected.
        let mut seen = BTreeSet::new();
        for &(a, b) in &raw.edges {
            let key = (a.min(b), a.max(b));
            if !seen.insert(key) {
                return Err(D::Error::custom(GraphError::DuplicateEdge(a, b).to_string()));
            }
        }
        Graph::new(raw.k, raw.edges).map_err(|e| D::Error::custom(e.to_string()))
    }
}
