//! Hypergraph data model, validation, and structural classification.
//!
//! Vertices are the ids `0..n`. Edges are kept in the order they were given;
//! the edge index is a persistent identity that covers refer to. Inside an
//! edge, vertex ids are stored strictly ascending.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple hypergraph: `n` vertices and a list of vertex-set edges.
///
/// Construction via [`Hypergraph::new`] enforces the invariants: vertex ids in
/// range, edge size at least 2, no duplicate edges, and simplicity (no edge
/// contained in another).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Validates raw input and builds a hypergraph.
    ///
    /// Each edge is sorted ascending internally; the order of the edge list
    /// itself is preserved, so edge `j` keeps its identity.
    pub fn new(n: usize, raw_edges: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut edges = Vec::with_capacity(raw_edges.len());
        for (j, raw) in raw_edges.into_iter().enumerate() {
            for &v in &raw {
                if v >= n {
                    return Err(Error::OutOfRangeVertex {
                        edge: j,
                        vertex: v,
                        n,
                    });
                }
            }
            let mut edge = raw;
            edge.sort_unstable();
            edge.dedup();
            if edge.len() < 2 {
                return Err(Error::EdgeTooSmall {
                    edge: j,
                    len: edge.len(),
                });
            }
            edges.push(edge);
        }
        for i in 0..edges.len() {
            for j in (i + 1)..edges.len() {
                if edges[i] == edges[j] {
                    return Err(Error::DuplicateEdge {
                        first: i,
                        second: j,
                    });
                }
                if subset(&edges[i], &edges[j]) {
                    return Err(Error::EdgeContainment { inner: i, outer: j });
                }
                if subset(&edges[j], &edges[i]) {
                    return Err(Error::EdgeContainment { inner: j, outer: i });
                }
            }
        }
        Ok(Hypergraph { n, edges })
    }

    /// A hypergraph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Result<Self> {
        Hypergraph::new(n, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, j: usize) -> Result<&[usize]> {
        self.edges
            .get(j)
            .map(|e| e.as_slice())
            .ok_or(Error::IndexOutOfRange {
                index: j,
                len: self.edges.len(),
            })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.binary_search(&v).is_ok())
            .count()
    }

    /// Edge size when all edges have the same size and there is at least one
    /// edge; `None` for edgeless or mixed-size hypergraphs.
    pub fn uniform_size(&self) -> Option<usize> {
        let first = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == first).then_some(first)
    }

    /// Any two edges share at most one vertex.
    pub fn is_linear(&self) -> bool {
        for i in 0..self.edges.len() {
            for j in (i + 1)..self.edges.len() {
                if intersection_size(&self.edges[i], &self.edges[j]) > 1 {
                    return false;
                }
            }
        }
        true
    }

    /// Removes edge `j`, keeping all `n` vertices (deleting an edge never
    /// deletes vertices, so isolated vertices appear). Edges after `j` shift
    /// down by one: old index `i > j` becomes `i - 1`.
    pub fn delete_edge(&self, j: usize) -> Result<Hypergraph> {
        if j >= self.edges.len() {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.edges.len(),
            });
        }
        let mut edges = self.edges.clone();
        edges.remove(j);
        Ok(Hypergraph { n: self.n, edges })
    }

    /// Connected components as `(vertices, edge indices)` pairs, both sorted
    /// ascending, components ordered by smallest vertex. Isolated vertices
    /// form singleton components. The result is a partition of the vertices.
    pub fn components(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut owner = vec![usize::MAX; self.n];
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (j, e) in self.edges.iter().enumerate() {
            for &v in e {
                incident[v].push(j);
            }
        }
        let mut comps: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for start in 0..self.n {
            if owner[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut vertices = Vec::new();
            let mut edge_seen = vec![false; self.edges.len()];
            let mut edge_idxs = Vec::new();
            let mut queue = VecDeque::from([start]);
            owner[start] = id;
            while let Some(v) = queue.pop_front() {
                vertices.push(v);
                for &j in &incident[v] {
                    if !edge_seen[j] {
                        edge_seen[j] = true;
                        edge_idxs.push(j);
                        for &u in &self.edges[j] {
                            if owner[u] == usize::MAX {
                                owner[u] = id;
                                queue.push_back(u);
                            }
                        }
                    }
                }
            }
            vertices.sort_unstable();
            edge_idxs.sort_unstable();
            comps.push((vertices, edge_idxs));
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Splits into component subhypergraphs. Each entry is the component as a
    /// standalone hypergraph (vertices renumbered `0..n_i` in ascending order
    /// of original id) plus the original vertex ids and edge indices.
    pub fn component_subhypergraphs(&self) -> Vec<(Hypergraph, Vec<usize>, Vec<usize>)> {
        self.components()
            .into_iter()
            .map(|(vertices, edge_idxs)| {
                let local: std::collections::HashMap<usize, usize> =
                    vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
                let edges = edge_idxs
                    .iter()
                    .map(|&j| self.edges[j].iter().map(|v| local[v]).collect())
                    .collect();
                let sub = Hypergraph {
                    n: vertices.len(),
                    edges,
                };
                (sub, vertices, edge_idxs)
            })
            .collect()
    }

    /// Deterministic content hash over `(n, sorted edge list)`, used as a
    /// cache key. FNV-1a, stable across platforms and runs.
    pub fn stable_hash(&self) -> u64 {
        let mut sorted = self.edges.clone();
        sorted.sort();
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut feed = |x: u64| {
            for byte in x.to_le_bytes() {
                h ^= byte as u64;
                h = h.wrapping_mul(0x1000_0000_01b3);
            }
        };
        feed(self.n as u64);
        for e in &sorted {
            feed(u64::MAX); // edge separator
            for &v in e {
                feed(v as u64);
            }
        }
        h
    }

    /// Parses either supported file format, auto-detected:
    /// a JSON object `{"n": 6, "edges": [[0,1,2],...]}` or the terse text
    /// form with an `n=6` line followed by `e=0 1 2` lines (blank lines and
    /// `#` comments ignored).
    pub fn parse(text: &str) -> Result<Hypergraph> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            let raw: RawHypergraph =
                serde_json::from_str(trimmed).map_err(|e| Error::BadParameters {
                    detail: format!("bad JSON instance: {e}"),
                })?;
            Hypergraph::new(raw.n, raw.edges)
        } else {
            parse_terse(text)
        }
    }

    /// Structured JSON form.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.n, "edges": self.edges })
    }

    /// Terse text form.
    pub fn to_terse(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for e in &self.edges {
            out.push_str("e=");
            let parts: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }
}

#[derive(Deserialize)]
struct RawHypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

fn parse_terse(text: &str) -> Result<Hypergraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n=") {
            if n.is_some() {
                return Err(Error::BadParameters {
                    detail: format!("line {}: repeated n= line", lineno + 1),
                });
            }
            n = Some(rest.trim().parse().map_err(|_| Error::BadParameters {
                detail: format!("line {}: bad vertex count {rest:?}", lineno + 1),
            })?);
        } else if let Some(rest) = line.strip_prefix("e=") {
            let edge = rest
                .split_whitespace()
                .map(|tok| {
                    tok.parse().map_err(|_| Error::BadParameters {
                        detail: format!("line {}: bad vertex id {tok:?}", lineno + 1),
                    })
                })
                .collect::<Result<Vec<usize>>>()?;
            edges.push(edge);
        } else {
            return Err(Error::BadParameters {
                detail: format!("line {}: expected n= or e=, got {line:?}", lineno + 1),
            });
        }
    }
    let n = n.ok_or(Error::BadParameters {
        detail: "missing n= line".into(),
    })?;
    Hypergraph::new(n, edges)
}

fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|v| b.binary_search(v).is_ok()).count()
}

/// Structural class of a hypergraph.
///
/// Cycles here are Berge cycles with pairwise-distinct linking vertices, of
/// length at least 3. Cycle detection is only meaningful for linear
/// hypergraphs (two edges sharing two or more vertices create short incidence
/// cycles that are not Berge cycles), so non-linear inputs are reported as
/// `NonlinearUnclassified` while all counting operations stay available.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    /// Linear, no cycles, disconnected.
    Forest,
    /// Connected, linear, no cycles.
    Hypertree,
    /// Connected, linear, exactly one cycle.
    Unicyclic,
    /// Linear with cycles but not unicyclic (more than one cycle, or cyclic
    /// and disconnected).
    Multicyclic,
    NonlinearUnclassified,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::Forest => "forest",
            Classification::Hypertree => "hypertree",
            Classification::Unicyclic => "unicyclic",
            Classification::Multicyclic => "multicyclic",
            Classification::NonlinearUnclassified => "nonlinear-unclassified",
        }
    }
}

/// Full structural report: connectivity, uniformity, linearity, the cycle
/// rank of the vertex–edge incidence graph, and the classification.
///
/// For a connected linear r-uniform hypergraph the incidence rank equals
/// `(r-1)m - n + 1`, so `n = (r-1)m + 1` characterizes hypertrees and
/// `n = (r-1)m` characterizes unicyclic hypergraphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub connected: bool,
    pub component_count: usize,
    pub uniform_r: Option<usize>,
    pub linear: bool,
    pub incidence_rank: usize,
    pub classification: Classification,
    /// Cycle length `p`, present exactly when unicyclic.
    pub cycle_length: Option<usize>,
    /// The unique cycle's edge indices in traversal order, starting from the
    /// smallest index; present exactly when unicyclic.
    pub cycle_edges: Option<Vec<usize>>,
}

/// Computes the full structure report.
pub fn classify(h: &Hypergraph) -> StructureReport {
    let comps = h.components();
    let connected = comps.len() == 1;
    let linear = h.is_linear();
    let inc_nodes = h.vertex_count() + h.edge_count();
    let inc_edges: usize = h.edges().iter().map(|e| e.len()).sum();
    let incidence_rank = inc_edges + comps.len() - inc_nodes;

    let classification = if !linear {
        Classification::NonlinearUnclassified
    } else if incidence_rank == 0 {
        if connected {
            Classification::Hypertree
        } else {
            Classification::Forest
        }
    } else if connected && incidence_rank == 1 {
        Classification::Unicyclic
    } else {
        Classification::Multicyclic
    };

    let (cycle_length, cycle_edges) = if classification == Classification::Unicyclic {
        let cycle = unique_cycle_edges(h);
        (Some(cycle.len()), Some(cycle))
    } else {
        (None, None)
    };

    StructureReport {
        connected,
        component_count: comps.len(),
        uniform_r: h.uniform_size(),
        linear,
        incidence_rank,
        classification,
        cycle_length,
        cycle_edges,
    }
}

/// Finds the unique cycle of a connected linear hypergraph with incidence
/// rank 1, as a cyclically ordered edge index list starting at the smallest
/// index and continuing toward its smaller cycle neighbor.
fn unique_cycle_edges(h: &Hypergraph) -> Vec<usize> {
    // DFS the incidence graph: nodes 0..n are vertices, n+j is edge j.
    // Rank 1 means exactly one non-tree incidence; the cycle through it,
    // restricted to edge nodes, is the hypergraph cycle.
    let n = h.vertex_count();
    let m = h.edge_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + m];
    for (j, e) in h.edges().iter().enumerate() {
        for &v in e {
            adj[v].push(n + j);
            adj[n + j].push(v);
        }
    }
    let mut parent = vec![usize::MAX; n + m];
    let mut visited = vec![false; n + m];
    let mut back_edge: Option<(usize, usize)> = None;
    let mut stack = vec![(0usize, usize::MAX)];
    while let Some((node, from)) = stack.pop() {
        if visited[node] {
            continue;
        }
        visited[node] = true;
        parent[node] = from;
        for &next in &adj[node] {
            if next == from {
                continue;
            }
            if visited[next] {
                if back_edge.is_none() {
                    back_edge = Some((node, next));
                }
            } else {
                stack.push((next, node));
            }
        }
    }
    let (a, b) = back_edge.expect("rank-1 hypergraph must contain a cycle");
    let path_to_root = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let pa = path_to_root(a);
    let pb = path_to_root(b);
    // Drop the common tail to keep just the cycle nodes.
    let mut ia = pa.len();
    let mut ib = pb.len();
    while ia > 0 && ib > 0 && pa[ia - 1] == pb[ib - 1] {
        ia -= 1;
        ib -= 1;
    }
    let mut cycle_nodes: Vec<usize> = pa[..ia].to_vec();
    cycle_nodes.push(pa[ia]); // lowest common ancestor; the tails share the root
    cycle_nodes.extend(pb[..ib].iter().rev());

    let mut cycle: Vec<usize> = cycle_nodes
        .into_iter()
        .filter(|&x| x >= n)
        .map(|x| x - n)
        .collect();
    // Rotate to start at the smallest edge index, then orient toward the
    // smaller neighbor so the listing is deterministic.
    let start = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, &e)| e)
        .map(|(i, _)| i)
        .unwrap();
    cycle.rotate_left(start);
    if cycle.len() > 2 && cycle[1] > cycle[cycle.len() - 1] {
        cycle[1..].reverse();
    }
    cycle
}

/// The two vertices of cycle edge `e` that it shares with its neighbors on
/// the unique cycle, ascending. `None` when `e` is not on the cycle or the
/// hypergraph is not unicyclic.
pub fn cycle_attachment_vertices(
    h: &Hypergraph,
    report: &StructureReport,
    e: usize,
) -> Option<(usize, usize)> {
    let cycle = report.cycle_edges.as_ref()?;
    let pos = cycle.iter().position(|&c| c == e)?;
    let p = cycle.len();
    let prev = cycle[(pos + p - 1) % p];
    let next = cycle[(pos + 1) % p];
    let shared = |other: usize| -> usize {
        let edge = h.edges()[e].as_slice();
        let oe = h.edges()[other].as_slice();
        *edge
            .iter()
            .find(|v| oe.binary_search(v).is_ok())
            .expect("cycle neighbors share a vertex")
    };
    let (a, b) = (shared(prev), shared(next));
    Some((a.min(b), a.max(b)))
}
