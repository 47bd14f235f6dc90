//! Simple graphs, complete multipartite constructions, and `t`-path supports.
//!
//! A `t`-path is a simple path on `t` distinct vertices. Path supports are
//! enumerated as vertex sets: two paths through the same vertices yield the
//! same squarefree monomial, so the ideal only sees the set.

use std::collections::{BTreeSet, HashSet};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Monomial, MonomialIdeal, Result};

/// Hard ceiling on vertex counts; vertex sets are stored as `u64` bitmasks.
pub const MAX_GRAPH_VERTICES: usize = 64;

/// An undirected simple graph on vertices `0..vertex_count`.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    adjacency: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertex_count > MAX_GRAPH_VERTICES {
            return Err(Error::GraphTooLarge {
                vertices: vertex_count,
                limit: MAX_GRAPH_VERTICES,
            });
        }
        let mut adjacency = vec![0u64; vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count || u == v {
                return Err(Error::InvalidEdge { u, v });
            }
            adjacency[u] |= 1 << v;
            adjacency[v] |= 1 << u;
        }
        Ok(SimpleGraph {
            vertex_count,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (self.adjacency[u] >> v) & 1 == 1
    }

    /// Neighbours of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones() as usize
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count {
            for v in (u + 1)..self.vertex_count {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Remove isolated vertices, relabelling the rest in order.
    ///
    /// Returns the stripped graph together with the original labels of the
    /// surviving vertices.
    pub fn strip_isolated(&self) -> (SimpleGraph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.vertex_count)
            .filter(|&v| self.adjacency[v] != 0)
            .collect();
        let index_of: Vec<Option<usize>> = {
            let mut map = vec![None; self.vertex_count];
            for (new, &old) in keep.iter().enumerate() {
                map[old] = Some(new);
            }
            map
        };
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (index_of[u].unwrap(), index_of[v].unwrap()))
            .collect();
        let stripped = SimpleGraph::new(keep.len(), &edges).expect("relabelled edges are valid");
        (stripped, keep)
    }

    /// The edge ideal: squarefree quadrics `x_u x_v` over all edges.
    pub fn edge_ideal(&self) -> Result<MonomialIdeal> {
        let gens = self
            .edges()
            .into_iter()
            .map(|(u, v)| Monomial::squarefree(&[u, v], self.vertex_count))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(self.vertex_count, gens)
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SimpleGraph(n={}, edges={:?})",
            self.vertex_count,
            self.edges()
        )
    }
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for SimpleGraph {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        RawGraph {
            vertices: self.vertex_count,
            edges: self
                .edges()
                .into_iter()
                .map(|(u, v)| (u + 1, v + 1))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimpleGraph {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = RawGraph::deserialize(deserializer)?;
        let edges: Vec<(usize, usize)> = raw
            .edges
            .iter()
            .map(|&(u, v)| {
                if u == 0 || v == 0 {
                    Err(serde::de::Error::custom(
                        "graph JSON uses 1-based vertex indices",
                    ))
                } else {
                    Ok((u - 1, v - 1))
                }
            })
            .collect::<std::result::Result<_, D::Error>>()?;
        SimpleGraph::new(raw.vertices, &edges).map_err(serde::de::Error::custom)
    }
}

/// Block sizes `(n_1, ..., n_r)` of a complete multipartite graph.
///
/// Block `b` occupies the consecutive vertex range starting after blocks
/// `0..b`; vertices are 0-based internally.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionSpec {
    sizes: Vec<usize>,
}

impl PartitionSpec {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.len() < 2 || sizes.contains(&0) {
            return Err(Error::InvalidPartition);
        }
        Ok(PartitionSpec { sizes })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn block_count(&self) -> usize {
        self.sizes.len()
    }

    /// Total number of vertices.
    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn block_range(&self, block: usize) -> std::ops::Range<usize> {
        let start: usize = self.sizes[..block].iter().sum();
        start..start + self.sizes[block]
    }

    pub fn block_of(&self, vertex: usize) -> usize {
        let mut end = 0;
        for (b, &s) in self.sizes.iter().enumerate() {
            end += s;
            if vertex < end {
                return b;
            }
        }
        panic!(
            "vertex {vertex} out of range for partition {:?}",
            self.sizes
        )
    }

    /// The complete multipartite graph on these blocks: two vertices are
    /// adjacent iff they lie in different blocks.
    pub fn complete_multipartite(&self) -> SimpleGraph {
        let n = self.total();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if self.block_of(u) != self.block_of(v) {
                    edges.push((u, v));
                }
            }
        }
        SimpleGraph::new(n, &edges).expect("partition sizes fit the vertex limit")
    }
}

impl FromStr for PartitionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let sizes = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition)
            })
            .collect::<Result<Vec<_>>>()?;
        PartitionSpec::new(sizes)
    }
}

impl std::fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The vertex supports of all `t`-paths of a graph, as bitmasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSet {
    t: usize,
    vertex_count: usize,
    supports: Vec<u64>,
}

impl PathSet {
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn supports(&self) -> &[u64] {
        &self.supports
    }

    pub fn len(&self) -> usize {
        self.supports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.supports.is_empty()
    }

    /// Supports as sorted vertex lists, in lexicographic order.
    pub fn support_sets(&self) -> Vec<Vec<usize>> {
        let mut sets: Vec<Vec<usize>> = self
            .supports
            .iter()
            .map(|&mask| mask_to_vertices(mask))
            .collect();
        sets.sort();
        sets
    }
}

pub(crate) fn mask_to_vertices(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        out.push(v);
        m &= m - 1;
    }
    out
}

/// Enumerate the vertex supports of all `t`-paths of `g`.
///
/// States are pairs (endpoint, visited set); every simple path arises by
/// repeatedly extending at its last endpoint, and memoizing states prunes
/// the re-exploration of a support reached through different orderings.
pub fn enumerate_t_path_supports(g: &SimpleGraph, t: usize) -> Result<PathSet> {
    if t < 2 {
        return Err(Error::PathTooShort(t));
    }
    let n = g.vertex_count();
    let mut supports: BTreeSet<u64> = BTreeSet::new();
    if t <= n {
        let mut frontier: Vec<(usize, u64)> = (0..n).map(|v| (v, 1u64 << v)).collect();
        let mut seen: HashSet<(usize, u64)> = frontier.iter().copied().collect();
        for _size in 1..t {
            let mut next = Vec::new();
            for &(end, mask) in &frontier {
                let mut candidates = g.neighbors(end) & !mask;
                while candidates != 0 {
                    let w = candidates.trailing_zeros() as usize;
                    candidates &= candidates - 1;
                    let state = (w, mask | (1 << w));
                    if seen.insert(state) {
                        next.push(state);
                    }
                }
            }
            frontier = next;
        }
        supports.extend(frontier.iter().map(|&(_, mask)| mask));
    }
    Ok(PathSet {
        t,
        vertex_count: n,
        supports: supports.into_iter().collect(),
    })
}

/// Enumerate all `t`-paths of `g` as vertex sequences (both directions).
///
/// Exponential in `t`; intended for small verification instances only.
pub fn enumerate_t_path_sequences(g: &SimpleGraph, t: usize) -> Result<Vec<Vec<usize>>> {
    if t < 2 {
        return Err(Error::PathTooShort(t));
    }
    let n = g.vertex_count();
    let mut out = Vec::new();
    if t > n {
        return Ok(out);
    }
    let mut stack: Vec<usize> = Vec::with_capacity(t);
    fn extend(
        g: &SimpleGraph,
        t: usize,
        stack: &mut Vec<usize>,
        mask: u64,
        out: &mut Vec<Vec<usize>>,
    ) {
        if stack.len() == t {
            out.push(stack.clone());
            return;
        }
        let last = *stack.last().expect("stack nonempty");
        let mut candidates = g.neighbors(last) & !mask;
        while candidates != 0 {
            let w = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            stack.push(w);
            extend(g, t, stack, mask | (1 << w), out);
            stack.pop();
        }
    }
    for v in 0..n {
        stack.push(v);
        extend(g, t, &mut stack, 1 << v, &mut out);
        stack.pop();
    }
    Ok(out)
}

/// The `t`-path ideal of `g`: squarefree monomials on the path supports.
pub fn path_ideal(g: &SimpleGraph, t: usize) -> Result<MonomialIdeal> {
    let paths = enumerate_t_path_supports(g, t)?;
    let n = g.vertex_count();
    let gens = paths
        .support_sets()
        .into_iter()
        .map(|vs| Monomial::squarefree(&vs, n))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(n, gens)
}

/// Largest intersection of `vertices` with a single block of the partition.
pub fn max_block_intersection(spec: &PartitionSpec, vertices: &[usize]) -> usize {
    let mut counts = vec![0usize; spec.block_count()];
    for &v in vertices {
        counts[spec.block_of(v)] += 1;
    }
    counts.into_iter().max().unwrap_or(0)
}
