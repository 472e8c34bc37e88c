//! k-fold covers of a hypergraph in two representations:
//!
//! * [`GeneralCover`] — a raw list of partial maps, each total on one edge,
//!   pairwise disjoint when they share an edge, at most `k` per edge.
//! * [`TwistCover`] — a full cover (exactly `k` maps per edge) in canonical
//!   permutation form: per edge, an anchor vertex and one permutation per
//!   non-anchor vertex. The edge's maps are `φ_c` for `c` in `[k]`, with
//!   `φ_c(anchor) = c` and `φ_c(v) = μ_v(c)`.
//!
//! A coloring `f` is an F-coloring when no cover map is contained in `f`;
//! in twist form, edge `e` is violated exactly when `f(v) = μ_v(f(anchor))`
//! for every non-anchor `v` of `e`.
//!
//! Gauge transformations recolor each vertex by a permutation and preserve
//! the number of F-colorings. `canonicalize` gauge-fixes a cover over a
//! breadth-first traversal so that every tree position carries the identity;
//! the handful of positions that close cycles keep a residual permutation —
//! the free slots. A hypergraph without cycles has no free slots, so every
//! full cover of it is gauge-equivalent to the natural cover and has exactly
//! as many colorings as proper colorings.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::budget::{coloring_scan_cost, Budget};
use crate::enumerate::count_colorings_where;
use crate::error::{Error, Result};
use crate::hypergraph::{classify, cycle_attachment_vertices, Hypergraph};
use crate::perm::Permutation;

/// A partial map that is total on one edge: `values[i]` is the color of the
/// i-th vertex of that edge (edges store vertices ascending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialMap {
    pub edge: usize,
    pub values: Vec<usize>,
}

/// A k-fold cover as a raw family of partial maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralCover {
    pub k: usize,
    pub maps: Vec<PartialMap>,
}

/// One per-vertex color relabeling; applying it to a cover preserves the
/// coloring count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugeMap {
    perms: Vec<Permutation>,
}

impl GaugeMap {
    pub fn new(perms: Vec<Permutation>) -> Self {
        GaugeMap { perms }
    }

    pub fn identity(n: usize, k: usize) -> Self {
        GaugeMap {
            perms: vec![Permutation::identity(k); n],
        }
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }
}

/// Twist data of one edge of a full cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeTwist {
    pub edge: usize,
    pub anchor: usize,
    /// One permutation per non-anchor vertex of the edge.
    mu: BTreeMap<usize, Permutation>,
}

impl EdgeTwist {
    fn identity(edge: usize, vertices: &[usize], k: usize) -> Self {
        let anchor = vertices[0];
        let mu = vertices[1..]
            .iter()
            .map(|&v| (v, Permutation::identity(k)))
            .collect();
        EdgeTwist { edge, anchor, mu }
    }

    pub fn mu(&self) -> &BTreeMap<usize, Permutation> {
        &self.mu
    }

    pub fn is_identity(&self) -> bool {
        self.mu.values().all(|p| p.is_identity())
    }

    /// Rewrites the twist relative to a new anchor `b` of the same edge.
    /// The represented set of maps is unchanged: with old anchor `a`,
    /// `μ'_a = μ_b⁻¹` and `μ'_v = μ_v ∘ μ_b⁻¹` for the remaining vertices.
    fn reanchored(&self, b: usize) -> EdgeTwist {
        if b == self.anchor {
            return self.clone();
        }
        let mu_b = self.mu.get(&b).expect("new anchor must belong to the edge");
        let mu_b_inv = mu_b.inverse();
        let mut mu = BTreeMap::new();
        mu.insert(self.anchor, mu_b_inv.clone());
        for (&v, p) in &self.mu {
            if v != b {
                mu.insert(v, p.compose(&mu_b_inv));
            }
        }
        EdgeTwist {
            edge: self.edge,
            anchor: b,
            mu,
        }
    }

    fn violated_by(&self, coloring: &[usize]) -> bool {
        let c = coloring[self.anchor];
        self.mu.iter().all(|(&v, p)| coloring[v] == p.apply(c))
    }
}

/// A full k-fold cover in twist form: one [`EdgeTwist`] per edge, aligned
/// with the host hypergraph's edge indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistCover {
    k: usize,
    edges: Vec<EdgeTwist>,
}

/// A residual permutation degree of freedom left after gauge fixing. The
/// number of free slots equals the cycle rank of the incidence graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeSlot {
    pub edge: usize,
    pub vertex: usize,
    pub residual: Permutation,
}

impl TwistCover {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edge_twists(&self) -> &[EdgeTwist] {
        &self.edges
    }

    /// All twists are the identity, i.e. this is the natural cover.
    pub fn is_natural(&self) -> bool {
        self.edges.iter().all(|t| t.is_identity())
    }

    /// Rewrites one edge's twist relative to a new anchor on that edge,
    /// without changing the represented maps.
    pub fn reanchor_edge(&mut self, edge: usize, anchor: usize) -> Result<()> {
        let len = self.edges.len();
        let twist = self
            .edges
            .get_mut(edge)
            .ok_or(Error::IndexOutOfRange { index: edge, len })?;
        if twist.anchor == anchor {
            return Ok(());
        }
        if !twist.mu.contains_key(&anchor) {
            return Err(Error::InvalidCover {
                detail: format!("vertex {anchor} is not on edge {edge}"),
            });
        }
        *twist = twist.reanchored(anchor);
        Ok(())
    }

    /// Replaces the permutation at one (edge, non-anchor vertex) position.
    pub fn set_twist(&mut self, edge: usize, vertex: usize, perm: Permutation) -> Result<()> {
        let len = self.edges.len();
        let twist = self
            .edges
            .get_mut(edge)
            .ok_or(Error::IndexOutOfRange { index: edge, len })?;
        match twist.mu.get_mut(&vertex) {
            Some(slot) => {
                *slot = perm;
                Ok(())
            }
            None => Err(Error::InvalidCover {
                detail: format!("vertex {vertex} is not a non-anchor vertex of edge {edge}"),
            }),
        }
    }

    /// Checks the cover's shape against a host hypergraph.
    pub fn validate(&self, h: &Hypergraph) -> Result<()> {
        if self.edges.len() != h.edge_count() {
            return Err(Error::InvalidCover {
                detail: format!(
                    "cover describes {} edges, hypergraph has {}",
                    self.edges.len(),
                    h.edge_count()
                ),
            });
        }
        for (j, twist) in self.edges.iter().enumerate() {
            let edge = h.edge(j)?;
            if twist.edge != j {
                return Err(Error::InvalidCover {
                    detail: format!("twist {j} is labeled edge {}", twist.edge),
                });
            }
            if edge.binary_search(&twist.anchor).is_err() {
                return Err(Error::InvalidCover {
                    detail: format!("anchor {} is not on edge {j}", twist.anchor),
                });
            }
            let expected: Vec<usize> = edge
                .iter()
                .copied()
                .filter(|&v| v != twist.anchor)
                .collect();
            let got: Vec<usize> = twist.mu.keys().copied().collect();
            if expected != got {
                return Err(Error::InvalidCover {
                    detail: format!("edge {j} twists vertices {got:?}, expected {expected:?}"),
                });
            }
            for p in twist.mu.values() {
                if p.degree() != self.k {
                    return Err(Error::InvalidCover {
                        detail: format!("edge {j} carries a degree-{} permutation", p.degree()),
                    });
                }
            }
        }
        Ok(())
    }

    /// Exact number of F-colorings of `h` under this cover.
    pub fn count_colorings(&self, h: &Hypergraph, budget: Budget) -> Result<BigUint> {
        self.validate(h)?;
        if self.k == 0 {
            return Ok(BigUint::zero());
        }
        budget.check_estimate(coloring_scan_cost(h.vertex_count(), self.k, h.edge_count()))?;
        let edges = &self.edges;
        let count = count_colorings_where(h.vertex_count(), self.k, |f| {
            edges.iter().all(|t| !t.violated_by(f))
        });
        Ok(BigUint::from(count))
    }

    /// Expands to the raw partial-map form. Maps are listed edge by edge in
    /// ascending anchor color.
    pub fn to_general(&self, h: &Hypergraph) -> GeneralCover {
        let mut maps = Vec::with_capacity(self.edges.len() * self.k);
        for twist in &self.edges {
            let edge = h.edges()[twist.edge].as_slice();
            for c in 0..self.k {
                let values = edge
                    .iter()
                    .map(|&v| {
                        if v == twist.anchor {
                            c
                        } else {
                            twist.mu[&v].apply(c)
                        }
                    })
                    .collect();
                maps.push(PartialMap {
                    edge: twist.edge,
                    values,
                });
            }
        }
        GeneralCover { k: self.k, maps }
    }

    /// Serializes to the JSON wire form. Edges whose twists are all identity
    /// are omitted; within an edge, identity permutations are omitted; image
    /// lists are 1-based.
    pub fn to_json(&self) -> serde_json::Value {
        let mut edges = Vec::new();
        for twist in &self.edges {
            if twist.is_identity() {
                continue;
            }
            let mut mu = serde_json::Map::new();
            for (&v, p) in &twist.mu {
                if p.is_identity() {
                    continue;
                }
                let images: Vec<usize> = p.images().iter().map(|&c| c + 1).collect();
                mu.insert(v.to_string(), serde_json::json!(images));
            }
            edges.push(serde_json::json!({
                "edge": twist.edge,
                "anchor": twist.anchor,
                "mu": mu,
            }));
        }
        serde_json::json!({ "k": self.k, "edges": edges })
    }

    /// Parses the JSON wire form against a host hypergraph. Omitted edges and
    /// omitted vertices mean identity.
    pub fn from_json(h: &Hypergraph, value: &serde_json::Value) -> Result<TwistCover> {
        let bad = |detail: String| Error::InvalidCover { detail };
        let k = value
            .get("k")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| bad("missing k".into()))? as usize;
        let mut cover = natural_cover(h, k);
        let entries = match value.get("edges") {
            None => &[] as &[serde_json::Value],
            Some(serde_json::Value::Array(a)) => a.as_slice(),
            Some(_) => return Err(bad("edges must be an array".into())),
        };
        for entry in entries {
            let j = entry
                .get("edge")
                .and_then(|v| v.as_u64())
                .ok_or_else(|| bad("edge entry missing index".into()))?
                as usize;
            let edge = h.edge(j)?;
            let anchor = entry
                .get("anchor")
                .and_then(|v| v.as_u64())
                .ok_or_else(|| bad(format!("edge {j} missing anchor")))?
                as usize;
            if edge.binary_search(&anchor).is_err() {
                return Err(bad(format!("anchor {anchor} not on edge {j}")));
            }
            let mut mu: BTreeMap<usize, Permutation> = edge
                .iter()
                .copied()
                .filter(|&v| v != anchor)
                .map(|v| (v, Permutation::identity(k)))
                .collect();
            if let Some(entries) = entry.get("mu") {
                let map = entries
                    .as_object()
                    .ok_or_else(|| bad(format!("edge {j} mu must be an object")))?;
                for (key, images) in map {
                    let v: usize = key
                        .parse()
                        .map_err(|_| bad(format!("edge {j} mu key {key:?} is not a vertex")))?;
                    if !mu.contains_key(&v) {
                        return Err(bad(format!(
                            "vertex {v} is not a non-anchor vertex of edge {j}"
                        )));
                    }
                    let raw: Vec<usize> = serde_json::from_value(images.clone())
                        .map_err(|e| bad(format!("edge {j} mu[{v}]: {e}")))?;
                    let zero_based: Vec<usize> = raw
                        .iter()
                        .map(|&c| {
                            c.checked_sub(1).ok_or_else(|| {
                                bad(format!("edge {j} mu[{v}] uses color 0; images are 1-based"))
                            })
                        })
                        .collect::<Result<_>>()?;
                    mu.insert(v, Permutation::new(zero_based)?);
                }
            }
            cover.edges[j] = EdgeTwist {
                edge: j,
                anchor,
                mu,
            };
        }
        cover.validate(h)?;
        Ok(cover)
    }
}

/// The natural k-cover: every edge forbids exactly its constant colorings.
/// Its colorings are in bijection with proper k-colorings.
pub fn natural_cover(h: &Hypergraph, k: usize) -> TwistCover {
    let edges = h
        .edges()
        .iter()
        .enumerate()
        .map(|(j, e)| EdgeTwist::identity(j, e, k))
        .collect();
    TwistCover { k, edges }
}

impl GeneralCover {
    /// Checks all cover invariants against a host hypergraph: every map's
    /// domain is an edge, maps are total with colors in `[k]`, no edge
    /// carries more than `k` maps, and maps sharing an edge are disjoint
    /// (they disagree at every vertex).
    pub fn validate(&self, h: &Hypergraph) -> Result<()> {
        let mut per_edge: Vec<Vec<usize>> = vec![Vec::new(); h.edge_count()];
        for (idx, map) in self.maps.iter().enumerate() {
            if map.edge >= h.edge_count() {
                return Err(Error::DomainNotAnEdge {
                    map_index: idx,
                    edge: map.edge,
                });
            }
            let edge = &h.edges()[map.edge];
            if map.values.len() != edge.len() {
                return Err(Error::BadAssignment {
                    map_index: idx,
                    detail: format!(
                        "{} values for an edge of size {}",
                        map.values.len(),
                        edge.len()
                    ),
                });
            }
            if let Some(&c) = map.values.iter().find(|&&c| c >= self.k) {
                return Err(Error::BadAssignment {
                    map_index: idx,
                    detail: format!("color {c} outside 0..{}", self.k),
                });
            }
            per_edge[map.edge].push(idx);
        }
        for (edge, indices) in per_edge.iter().enumerate() {
            if indices.len() > self.k {
                return Err(Error::TooManyMapsOnEdge {
                    edge,
                    count: indices.len(),
                    k: self.k,
                });
            }
            for (a, &first) in indices.iter().enumerate() {
                for &second in &indices[a + 1..] {
                    let share = self.maps[first]
                        .values
                        .iter()
                        .zip(&self.maps[second].values)
                        .any(|(x, y)| x == y);
                    if share {
                        return Err(Error::DisjointnessViolation {
                            edge,
                            first,
                            second,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Exact number of F-colorings of `h` under this cover.
    pub fn count_colorings(&self, h: &Hypergraph, budget: Budget) -> Result<BigUint> {
        self.validate(h)?;
        if self.k == 0 {
            return Ok(BigUint::zero());
        }
        budget.check_estimate(coloring_scan_cost(
            h.vertex_count(),
            self.k,
            self.maps.len().max(h.edge_count()),
        ))?;
        let edges = h.edges();
        let maps = &self.maps;
        let count = count_colorings_where(h.vertex_count(), self.k, |f| {
            maps.iter().all(|m| {
                let edge = edges[m.edge].as_slice();
                !edge.iter().zip(&m.values).all(|(&v, &c)| f[v] == c)
            })
        });
        Ok(BigUint::from(count))
    }
}

/// Extends a cover to a full one: exactly `k` pairwise-disjoint maps per
/// edge, the original maps kept. Completion is deterministic: each added map
/// takes, at every vertex, the smallest color value not yet used there.
///
/// Adding maps can only shrink the set of F-colorings, so minimizing over
/// full covers is enough when searching for the minimum.
pub fn complete_cover(h: &Hypergraph, cover: &GeneralCover) -> Result<GeneralCover> {
    cover.validate(h)?;
    let k = cover.k;
    let mut maps = Vec::new();
    for (j, edge) in h.edges().iter().enumerate() {
        let existing: Vec<&PartialMap> = cover.maps.iter().filter(|m| m.edge == j).collect();
        // unused colors per vertex position, ascending
        let mut remaining: Vec<Vec<usize>> = edge
            .iter()
            .enumerate()
            .map(|(pos, _)| {
                (0..k)
                    .filter(|c| existing.iter().all(|m| m.values[pos] != *c))
                    .collect()
            })
            .collect();
        for m in &existing {
            maps.push((*m).clone());
        }
        for _ in existing.len()..k {
            let values: Vec<usize> = remaining.iter_mut().map(|r| r.remove(0)).collect();
            maps.push(PartialMap { edge: j, values });
        }
    }
    let full = GeneralCover { k, maps };
    debug_assert!(full.validate(h).is_ok());
    Ok(full)
}

/// Rewrites a full cover in twist form. Per edge the anchor is its lowest
/// vertex and the k maps are indexed by their value there; the per-vertex
/// permutations exist exactly because a full cover's maps realize each color
/// once at every vertex. Counting is invariant: the same maps are forbidden.
pub fn general_to_twist(h: &Hypergraph, cover: &GeneralCover) -> Result<TwistCover> {
    cover.validate(h)?;
    let k = cover.k;
    let mut twists = Vec::with_capacity(h.edge_count());
    for (j, edge) in h.edges().iter().enumerate() {
        let members: Vec<&PartialMap> = cover.maps.iter().filter(|m| m.edge == j).collect();
        if members.len() != k {
            return Err(Error::NotFull {
                edge: j,
                have: members.len(),
                k,
            });
        }
        // order maps by their value at the anchor (position 0)
        let mut by_anchor: Vec<Option<&PartialMap>> = vec![None; k];
        for m in members {
            by_anchor[m.values[0]] = Some(m);
        }
        let mut mu = BTreeMap::new();
        for (pos, &v) in edge.iter().enumerate().skip(1) {
            let images: Vec<usize> = by_anchor
                .iter()
                .map(|m| {
                    m.expect("disjoint full cover hits every anchor color")
                        .values[pos]
                })
                .collect();
            mu.insert(v, Permutation::new(images)?);
        }
        twists.push(EdgeTwist {
            edge: j,
            anchor: edge[0],
            mu,
        });
    }
    Ok(TwistCover { k, edges: twists })
}

/// Recolors every vertex through its gauge permutation: in twist
/// coordinates, `μ'_v = τ_v ∘ μ_v ∘ τ_a⁻¹` with `a` the edge's anchor.
/// The coloring count is unchanged: `f ↦ τ ∘ f` is a bijection between the
/// colorings of the two covers.
pub fn apply_gauge(h: &Hypergraph, cover: &TwistCover, gauge: &GaugeMap) -> TwistCover {
    debug_assert_eq!(gauge.perms.len(), h.vertex_count());
    let edges = cover
        .edges
        .iter()
        .map(|twist| {
            let tau_a_inv = gauge.perms[twist.anchor].inverse();
            let mu = twist
                .mu
                .iter()
                .map(|(&v, p)| (v, gauge.perms[v].compose(p).compose(&tau_a_inv)))
                .collect();
            EdgeTwist {
                edge: twist.edge,
                anchor: twist.anchor,
                mu,
            }
        })
        .collect();
    TwistCover { k: cover.k, edges }
}

/// Gauge-fixes a cover into canonical form.
///
/// Edges are processed in breadth-first order from the lowest vertex id of
/// each component (edges in ascending index at each step). Each edge is
/// re-anchored to its earliest-visited vertex; every newly reached vertex
/// gets its gauge permutation chosen so its twist becomes the identity. The
/// remaining (edge, already-visited vertex) positions are the free slots and
/// keep a residual permutation.
///
/// Returns the canonical cover, the gauge used, and the free slots. On a
/// hypergraph without cycles the free slot list is empty and the canonical
/// cover is the natural cover. One gauge freedom survives per component:
/// gauging by a constant permutation conjugates all of the component's
/// residuals at once, so canonical forms are unique up to that conjugation.
pub fn canonicalize(h: &Hypergraph, cover: &TwistCover) -> (TwistCover, GaugeMap, Vec<FreeSlot>) {
    let n = h.vertex_count();
    let m = h.edge_count();
    let k = cover.k;
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (j, e) in h.edges().iter().enumerate() {
        for &v in e {
            incident[v].push(j);
        }
    }
    let mut tau: Vec<Option<Permutation>> = vec![None; n];
    let mut visited = vec![false; n];
    let mut processed = vec![false; m];
    let mut canonical: Vec<Option<EdgeTwist>> = vec![None; m];
    let mut free = Vec::new();

    for start in 0..n {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        tau[start] = Some(Permutation::identity(k));
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &j in &incident[v] {
                if processed[j] {
                    continue;
                }
                processed[j] = true;
                // v is the first vertex of edge j reached by the traversal,
                // so it is the anchor.
                let twist = cover.edges[j].reanchored(v);
                let tau_a = tau[v].clone().expect("anchor gauge is fixed");
                let tau_a_inv = tau_a.inverse();
                let mut mu = BTreeMap::new();
                for (&u, p) in &twist.mu {
                    if visited[u] {
                        let residual = tau[u]
                            .as_ref()
                            .expect("visited vertex has a gauge")
                            .compose(p)
                            .compose(&tau_a_inv);
                        free.push(FreeSlot {
                            edge: j,
                            vertex: u,
                            residual: residual.clone(),
                        });
                        mu.insert(u, residual);
                    } else {
                        visited[u] = true;
                        tau[u] = Some(tau_a.compose(&p.inverse()));
                        queue.push_back(u);
                        mu.insert(u, Permutation::identity(k));
                    }
                }
                canonical[j] = Some(EdgeTwist {
                    edge: j,
                    anchor: v,
                    mu,
                });
            }
        }
    }

    let edges = canonical
        .into_iter()
        .map(|t| t.expect("every edge processed"))
        .collect();
    let gauge = GaugeMap {
        perms: tau
            .into_iter()
            .map(|t| t.expect("every vertex gauged"))
            .collect(),
    };
    (TwistCover { k, edges }, gauge, free)
}

/// Whether two covers differ only by a gauge transformation.
///
/// Canonical forms are unique up to one degree of freedom per component:
/// gauging a component by a constant permutation conjugates all of its
/// residuals simultaneously. So the test compares canonical residuals up to
/// a per-component simultaneous conjugation.
pub fn gauge_equivalent(h: &Hypergraph, a: &TwistCover, b: &TwistCover) -> bool {
    if a.k != b.k {
        return false;
    }
    let (_, _, free_a) = canonicalize(h, a);
    let (_, _, free_b) = canonicalize(h, b);
    // positions are determined by the hypergraph alone
    debug_assert!(free_a
        .iter()
        .zip(&free_b)
        .all(|(x, y)| x.edge == y.edge && x.vertex == y.vertex));
    let mut component_of = vec![0usize; h.vertex_count()];
    for (id, (vertices, _)) in h.components().iter().enumerate() {
        for &v in vertices {
            component_of[v] = id;
        }
    }
    let sigmas = Permutation::all(a.k);
    for id in 0..h.components().len() {
        let pairs: Vec<(&Permutation, &Permutation)> = free_a
            .iter()
            .zip(&free_b)
            .filter(|(slot, _)| component_of[slot.vertex] == id)
            .map(|(x, y)| (&x.residual, &y.residual))
            .collect();
        if pairs.is_empty() {
            continue;
        }
        let conjugates = sigmas
            .iter()
            .any(|s| pairs.iter().all(|(x, y)| &x.conjugate_by(s) == *y));
        if !conjugates {
            return false;
        }
    }
    true
}

/// Which extremal construction to place on the distinguished edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalVariant {
    /// Forbid the constant colorings of the edge (the natural maps).
    Aligned,
    /// Forbid the maps sending one distinguished vertex one color ahead,
    /// cyclically: `φ_c(v1) = c + 1 (mod k)`, `φ_c(v) = c` elsewhere.
    Shifted,
}

/// The cover that is natural everywhere except edge `e`. For the shifted
/// variant, the distinguished vertex is the lower cycle-attachment vertex
/// when the hypergraph is unicyclic and `e` lies on its cycle, and the
/// edge's lowest vertex otherwise. Requires `k >= 2`.
pub fn extremal_cover(
    h: &Hypergraph,
    e: usize,
    k: usize,
    variant: ExtremalVariant,
) -> Result<TwistCover> {
    let edge = h.edge(e)?.to_vec();
    assert!(k >= 2, "extremal covers need k >= 2");
    let mut cover = natural_cover(h, k);
    if variant == ExtremalVariant::Aligned {
        return Ok(cover);
    }
    let report = classify(h);
    let v1 = cycle_attachment_vertices(h, &report, e)
        .map(|(a, _)| a)
        .unwrap_or(edge[0]);
    let anchor = edge
        .iter()
        .copied()
        .find(|&v| v != v1)
        .expect("edges have size >= 2");
    let mut mu: BTreeMap<usize, Permutation> = edge
        .iter()
        .copied()
        .filter(|&v| v != anchor)
        .map(|v| (v, Permutation::identity(k)))
        .collect();
    mu.insert(v1, Permutation::cyclic_shift(k));
    cover.edges[e] = EdgeTwist {
        edge: e,
        anchor,
        mu,
    };
    Ok(cover)
}

/// A uniformly random full cover: every non-anchor permutation drawn
/// independently from all `k!` permutations, in (edge, vertex) order, from a
/// generator seeded with `seed`. Reproducible for a fixed `(h, k, seed)`.
pub fn random_cover(h: &Hypergraph, k: usize, seed: u64) -> TwistCover {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_cover_with_rng(h, k, &mut rng)
}

/// As [`random_cover`], drawing from a caller-supplied generator.
pub fn random_cover_with_rng<R: Rng>(h: &Hypergraph, k: usize, rng: &mut R) -> TwistCover {
    assert!(k >= 1, "covers need k >= 1");
    let mut cover = natural_cover(h, k);
    for twist in &mut cover.edges {
        for p in twist.mu.values_mut() {
            *p = Permutation::random(k, rng);
        }
    }
    cover
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::count_proper;

    fn budget() -> Budget {
        Budget::default()
    }

    fn loose_triangle() -> Hypergraph {
        Hypergraph::new(6, vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 0]]).unwrap()
    }

    fn c4() -> Hypergraph {
        Hypergraph::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap()
    }

    #[test]
    fn natural_cover_counts_proper_colorings() {
        for (h, k) in [
            (Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap(), 2usize),
            (loose_triangle(), 2),
            (
                Hypergraph::new(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap(),
                2,
            ),
            (c4(), 3),
        ] {
            let cover = natural_cover(&h, k);
            assert_eq!(
                cover.count_colorings(&h, budget()).unwrap(),
                count_proper(&h, k, budget()).unwrap()
            );
        }
    }

    #[test]
    fn single_twisted_graph_edge() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let mut cover = natural_cover(&h, 2);
        cover
            .set_twist(0, 1, Permutation::transposition(2, 0, 1))
            .unwrap();
        // forbidden pairs (1,2),(2,1); allowed (1,1),(2,2)
        assert_eq!(
            cover.count_colorings(&h, budget()).unwrap(),
            BigUint::from(2u32)
        );
    }

    #[test]
    fn twisted_c4_has_no_colorings() {
        let h = c4();
        let mut cover = natural_cover(&h, 2);
        cover
            .set_twist(3, 3, Permutation::transposition(2, 0, 1))
            .unwrap();
        assert_eq!(
            cover.count_colorings(&h, budget()).unwrap(),
            BigUint::zero()
        );
    }

    #[test]
    fn general_cover_validation() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let natural = natural_cover(&h, 2).to_general(&h);
        assert!(natural.validate(&h).is_ok());

        let twin = GeneralCover {
            k: 2,
            maps: vec![
                PartialMap {
                    edge: 0,
                    values: vec![0, 0, 0],
                },
                PartialMap {
                    edge: 0,
                    values: vec![0, 1, 1],
                },
            ],
        };
        assert!(matches!(
            twin.validate(&h).unwrap_err(),
            Error::DisjointnessViolation {
                edge: 0,
                first: 0,
                second: 1
            }
        ));

        let crowded = GeneralCover {
            k: 2,
            maps: vec![
                PartialMap {
                    edge: 0,
                    values: vec![0, 0, 0],
                },
                PartialMap {
                    edge: 0,
                    values: vec![1, 1, 1],
                },
                PartialMap {
                    edge: 0,
                    values: vec![0, 1, 0],
                },
            ],
        };
        assert!(matches!(
            crowded.validate(&h).unwrap_err(),
            Error::TooManyMapsOnEdge {
                edge: 0,
                count: 3,
                k: 2
            }
        ));

        let stray = GeneralCover {
            k: 2,
            maps: vec![PartialMap {
                edge: 4,
                values: vec![0, 0],
            }],
        };
        assert!(matches!(
            stray.validate(&h).unwrap_err(),
            Error::DomainNotAnEdge {
                map_index: 0,
                edge: 4
            }
        ));
    }

    #[test]
    fn completion_is_ascending_fill() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let empty = GeneralCover { k: 2, maps: vec![] };
        let full = complete_cover(&h, &empty).unwrap();
        assert_eq!(
            full.maps,
            vec![
                PartialMap {
                    edge: 0,
                    values: vec![0, 0]
                },
                PartialMap {
                    edge: 0,
                    values: vec![1, 1]
                },
            ]
        );

        let h3 = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let one = GeneralCover {
            k: 2,
            maps: vec![PartialMap {
                edge: 0,
                values: vec![0, 0, 0],
            }],
        };
        let full = complete_cover(&h3, &one).unwrap();
        assert_eq!(
            full.maps[1],
            PartialMap {
                edge: 0,
                values: vec![1, 1, 1]
            }
        );

        // already full covers are unchanged
        let again = complete_cover(&h3, &full).unwrap();
        assert_eq!(again, full);
    }

    #[test]
    fn twist_general_round_trip() {
        let h = loose_triangle();
        let natural = natural_cover(&h, 3);
        let twist = general_to_twist(&h, &natural.to_general(&h)).unwrap();
        assert_eq!(twist, natural);

        let shifted = extremal_cover(&h, 2, 3, ExtremalVariant::Shifted).unwrap();
        let round = general_to_twist(&h, &shifted.to_general(&h)).unwrap();
        // re-anchoring may reindex the maps; the map sets must agree
        let sorted = |c: &TwistCover| {
            let mut maps: Vec<(usize, Vec<usize>)> = c
                .to_general(&h)
                .maps
                .into_iter()
                .map(|m| (m.edge, m.values))
                .collect();
            maps.sort();
            maps
        };
        assert_eq!(sorted(&round), sorted(&shifted));
        assert_eq!(
            round.count_colorings(&h, budget()).unwrap(),
            shifted.count_colorings(&h, budget()).unwrap()
        );
    }

    #[test]
    fn twist_from_explicit_maps() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let cover = GeneralCover {
            k: 2,
            maps: vec![
                PartialMap {
                    edge: 0,
                    values: vec![0, 1],
                },
                PartialMap {
                    edge: 0,
                    values: vec![1, 0],
                },
            ],
        };
        let twist = general_to_twist(&h, &cover).unwrap();
        assert_eq!(twist.edge_twists()[0].anchor, 0);
        assert_eq!(
            twist.edge_twists()[0].mu()[&1],
            Permutation::transposition(2, 0, 1)
        );
    }

    #[test]
    fn not_full_is_reported() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let half = GeneralCover {
            k: 2,
            maps: vec![PartialMap {
                edge: 0,
                values: vec![0, 0],
            }],
        };
        assert!(matches!(
            general_to_twist(&h, &half).unwrap_err(),
            Error::NotFull {
                edge: 0,
                have: 1,
                k: 2
            }
        ));
    }

    #[test]
    fn identity_gauge_is_noop() {
        let h = loose_triangle();
        let cover = random_cover(&h, 3, 11);
        let same = apply_gauge(&h, &cover, &GaugeMap::identity(6, 3));
        assert_eq!(same, cover);
    }

    #[test]
    fn gauge_undoes_a_single_twist() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let mut cover = natural_cover(&h, 2);
        let swap = Permutation::transposition(2, 0, 1);
        cover.set_twist(0, 1, swap.clone()).unwrap();
        let gauge = GaugeMap::new(vec![Permutation::identity(2), swap]);
        assert!(apply_gauge(&h, &cover, &gauge).is_natural());
    }

    #[test]
    fn gauge_preserves_counts() {
        let h = c4();
        let mut cover = natural_cover(&h, 2);
        cover
            .set_twist(3, 3, Permutation::transposition(2, 0, 1))
            .unwrap();
        let gauge = GaugeMap::new(vec![
            Permutation::transposition(2, 0, 1),
            Permutation::identity(2),
            Permutation::transposition(2, 0, 1),
            Permutation::identity(2),
        ]);
        let twisted = apply_gauge(&h, &cover, &gauge);
        assert_eq!(
            twisted.count_colorings(&h, budget()).unwrap(),
            BigUint::zero()
        );
    }

    #[test]
    fn canonicalize_collapses_acyclic_covers() {
        let h = Hypergraph::new(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        for seed in 0..20 {
            let cover = random_cover(&h, 3, seed);
            let (canon, _gauge, free) = canonicalize(&h, &cover);
            assert!(free.is_empty());
            assert!(canon.is_natural());
            assert_eq!(
                cover.count_colorings(&h, budget()).unwrap(),
                count_proper(&h, 3, budget()).unwrap()
            );
        }
    }

    #[test]
    fn canonicalize_leaves_one_slot_on_a_cycle() {
        let h = loose_triangle();
        let cover = random_cover(&h, 2, 5);
        let (canon, _gauge, free) = canonicalize(&h, &cover);
        assert_eq!(free.len(), 1);
        assert_eq!(free[0].edge, 1); // the edge closing the cycle in BFS order
        assert_eq!(free[0].vertex, 4);
        assert_eq!(
            canon.count_colorings(&h, budget()).unwrap(),
            cover.count_colorings(&h, budget()).unwrap()
        );
    }

    #[test]
    fn canonicalize_counts_independent_cycles() {
        let h = Hypergraph::new(
            11,
            vec![
                vec![0, 1, 2],
                vec![2, 3, 4],
                vec![4, 5, 0],
                vec![0, 6, 7],
                vec![7, 8, 9],
                vec![9, 10, 0],
            ],
        )
        .unwrap();
        let (_, _, free) = canonicalize(&h, &random_cover(&h, 2, 3));
        assert_eq!(free.len(), 2);
    }

    #[test]
    fn canonicalize_counts_cycles_sharing_a_path() {
        // theta graph: two 4-cycles sharing the path 0-2
        let h = Hypergraph::new(
            4,
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3], vec![0, 2]],
        )
        .unwrap();
        let (_, _, free) = canonicalize(&h, &random_cover(&h, 2, 21));
        assert_eq!(free.len(), 2);
    }

    #[test]
    fn canonicalize_handles_components() {
        let h = Hypergraph::new(6, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let (canon, _, free) = canonicalize(&h, &random_cover(&h, 2, 9));
        assert!(free.is_empty());
        assert!(canon.is_natural());
    }

    #[test]
    fn extremal_counts_on_loose_triangle() {
        let h = loose_triangle();
        let aligned = extremal_cover(&h, 2, 2, ExtremalVariant::Aligned).unwrap();
        let shifted = extremal_cover(&h, 2, 2, ExtremalVariant::Shifted).unwrap();
        assert_eq!(
            aligned.count_colorings(&h, budget()).unwrap(),
            BigUint::from(26u32)
        );
        assert_eq!(
            shifted.count_colorings(&h, budget()).unwrap(),
            BigUint::from(28u32)
        );
    }

    #[test]
    fn extremal_counts_on_hypertree_path() {
        let h = Hypergraph::new(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        for variant in [ExtremalVariant::Aligned, ExtremalVariant::Shifted] {
            let cover = extremal_cover(&h, 1, 2, variant).unwrap();
            assert_eq!(
                cover.count_colorings(&h, budget()).unwrap(),
                BigUint::from(18u32)
            );
        }
    }

    #[test]
    fn random_cover_is_reproducible() {
        let h = loose_triangle();
        assert_eq!(random_cover(&h, 3, 42), random_cover(&h, 3, 42));
        assert_ne!(random_cover(&h, 3, 42), random_cover(&h, 3, 43));
        // k = 1 admits exactly one cover
        assert!(random_cover(&h, 1, 7).is_natural());
    }

    #[test]
    fn json_round_trip() {
        let h = loose_triangle();
        let shifted = extremal_cover(&h, 2, 2, ExtremalVariant::Shifted).unwrap();
        let json = shifted.to_json();
        let back = TwistCover::from_json(&h, &json).unwrap();
        assert_eq!(back, shifted);

        let natural = natural_cover(&h, 2);
        let json = natural.to_json();
        assert_eq!(json["edges"].as_array().unwrap().len(), 0);
        assert_eq!(TwistCover::from_json(&h, &json).unwrap(), natural);
    }

    #[test]
    fn json_rejects_malformed_covers() {
        let h = loose_triangle();
        assert!(TwistCover::from_json(&h, &serde_json::json!({})).is_err());
        let bad_anchor = serde_json::json!({
            "k": 2,
            "edges": [{"edge": 0, "anchor": 5, "mu": {}}]
        });
        assert!(TwistCover::from_json(&h, &bad_anchor).is_err());
        let bad_perm = serde_json::json!({
            "k": 2,
            "edges": [{"edge": 0, "anchor": 0, "mu": {"1": [1, 1]}}]
        });
        assert!(TwistCover::from_json(&h, &bad_perm).is_err());
    }

    #[test]
    fn per_vertex_values_form_permutations() {
        let h = loose_triangle();
        let cover = random_cover(&h, 3, 17).to_general(&h);
        for (j, edge) in h.edges().iter().enumerate() {
            for (pos, _) in edge.iter().enumerate() {
                let mut values: Vec<usize> = cover
                    .maps
                    .iter()
                    .filter(|m| m.edge == j)
                    .map(|m| m.values[pos])
                    .collect();
                values.sort_unstable();
                assert_eq!(values, vec![0, 1, 2]);
            }
        }
    }
}
