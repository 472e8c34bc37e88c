//! Deterministic and seeded generators for the instance families used by
//! tests and the CLI: loose paths and cycles, hypertrees (star-shaped and
//! random), unicyclic hypergraphs, graph cycles, and edgeless instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Edgeless,
    LoosePath,
    StarHypertree,
    RandomHypertree,
    LooseCycle,
    Unicyclic,
    GraphCycle,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Edgeless => "edgeless",
            Family::LoosePath => "loose_path",
            Family::StarHypertree => "star_hypertree",
            Family::RandomHypertree => "random_hypertree",
            Family::LooseCycle => "loose_cycle",
            Family::Unicyclic => "unicyclic",
            Family::GraphCycle => "graph_cycle",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s.replace('-', "_").as_str() {
            "edgeless" => Ok(Family::Edgeless),
            "loose_path" => Ok(Family::LoosePath),
            "star_hypertree" => Ok(Family::StarHypertree),
            "random_hypertree" => Ok(Family::RandomHypertree),
            "loose_cycle" => Ok(Family::LooseCycle),
            "unicyclic" => Ok(Family::Unicyclic),
            "graph_cycle" => Ok(Family::GraphCycle),
            other => Err(Error::BadParameters {
                detail: format!("unknown family {other:?}"),
            }),
        }
    }
}

/// Parameters for one generated instance. Which fields matter depends on the
/// family; [`generate`] rejects missing or out-of-range ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl GenSpec {
    pub fn new(family: Family) -> Self {
        GenSpec {
            family,
            r: None,
            m: None,
            p: None,
            n: None,
            seed: None,
        }
    }

    pub fn r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }

    pub fn m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    pub fn p(mut self, p: usize) -> Self {
        self.p = Some(p);
        self
    }

    pub fn n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

fn need(value: Option<usize>, what: &str, family: &str) -> Result<usize> {
    value.ok_or_else(|| Error::BadParameters {
        detail: format!("{family} needs {what}"),
    })
}

fn check_r(r: usize, family: &str) -> Result<usize> {
    if r < 2 {
        return Err(Error::BadParameters {
            detail: format!("{family} needs r >= 2, got {r}"),
        });
    }
    Ok(r)
}

fn check_p(p: usize, family: &str) -> Result<usize> {
    if p < 3 {
        return Err(Error::BadParameters {
            detail: format!("{family} needs p >= 3, got {p}"),
        });
    }
    Ok(p)
}

/// Builds the instance described by `spec`. Outputs always pass validation
/// and land in the family's structural class; the same spec and seed always
/// produce the same hypergraph.
pub fn generate(spec: &GenSpec) -> Result<Hypergraph> {
    match spec.family {
        Family::Edgeless => {
            let n = need(spec.n, "n", "edgeless")?;
            Hypergraph::edgeless(n)
        }
        Family::LoosePath => {
            let r = check_r(need(spec.r, "r", "loose_path")?, "loose_path")?;
            let m = need(spec.m, "m", "loose_path")?;
            loose_path(r, m)
        }
        Family::StarHypertree => {
            let r = check_r(need(spec.r, "r", "star_hypertree")?, "star_hypertree")?;
            let m = need(spec.m, "m", "star_hypertree")?;
            star_hypertree(r, m)
        }
        Family::RandomHypertree => {
            let r = check_r(need(spec.r, "r", "random_hypertree")?, "random_hypertree")?;
            let m = need(spec.m, "m", "random_hypertree")?;
            random_hypertree(r, m, spec.seed.unwrap_or(0))
        }
        Family::LooseCycle => {
            let r = check_r(need(spec.r, "r", "loose_cycle")?, "loose_cycle")?;
            let p = check_p(need(spec.p, "p", "loose_cycle")?, "loose_cycle")?;
            loose_cycle(r, p)
        }
        Family::Unicyclic => {
            let r = check_r(need(spec.r, "r", "unicyclic")?, "unicyclic")?;
            let m = need(spec.m, "m", "unicyclic")?;
            let p = check_p(need(spec.p, "p", "unicyclic")?, "unicyclic")?;
            unicyclic(r, m, p, spec.seed.unwrap_or(0))
        }
        Family::GraphCycle => {
            let p = check_p(need(spec.p, "p", "graph_cycle")?, "graph_cycle")?;
            loose_cycle(2, p)
        }
    }
}

/// `m` edges in a row, consecutive edges sharing one vertex:
/// edge `i` covers `{(r-1)i, ..., (r-1)i + r - 1}`; `n = (r-1)m + 1`.
pub fn loose_path(r: usize, m: usize) -> Result<Hypergraph> {
    check_r(r, "loose_path")?;
    let n = (r - 1) * m + 1;
    let edges = (0..m)
        .map(|i| ((r - 1) * i..=(r - 1) * i + r - 1).collect())
        .collect();
    Hypergraph::new(n, edges)
}

/// `m` edges all sharing vertex 0; `n = (r-1)m + 1`.
pub fn star_hypertree(r: usize, m: usize) -> Result<Hypergraph> {
    check_r(r, "star_hypertree")?;
    let n = (r - 1) * m + 1;
    let edges = (0..m)
        .map(|i| {
            let mut e = vec![0];
            e.extend((r - 1) * i + 1..=(r - 1) * i + r - 1);
            e
        })
        .collect();
    Hypergraph::new(n, edges)
}

/// Grows a hypertree edge by edge, gluing each new edge at one uniformly
/// chosen existing vertex; `n = (r-1)m + 1`.
pub fn random_hypertree(r: usize, m: usize, seed: u64) -> Result<Hypergraph> {
    check_r(r, "random_hypertree")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(m);
    let mut next_vertex = 1;
    for _ in 0..m {
        let attach = rng.random_range(0..next_vertex);
        let mut e = vec![attach];
        e.extend(next_vertex..next_vertex + r - 1);
        next_vertex += r - 1;
        edges.push(e);
    }
    Hypergraph::new((r - 1) * m + 1, edges)
}

/// `p` edges around a cycle, consecutive edges sharing one vertex with
/// wraparound: edge `i` covers `{(r-1)i, ..., (r-1)i + r - 1}` modulo
/// `n = (r-1)p`.
pub fn loose_cycle(r: usize, p: usize) -> Result<Hypergraph> {
    check_r(r, "loose_cycle")?;
    check_p(p, "loose_cycle")?;
    let n = (r - 1) * p;
    let edges = (0..p)
        .map(|i| ((r - 1) * i..(r - 1) * i + r).map(|v| v % n).collect())
        .collect();
    Hypergraph::new(n, edges)
}

/// The graph cycle `C_p`, i.e. `loose_cycle(2, p)`.
pub fn graph_cycle(p: usize) -> Result<Hypergraph> {
    loose_cycle(2, p)
}

/// A loose cycle of length `p` plus `m` pendant edges, each glued at one
/// seeded uniformly chosen existing vertex (gluing at a single vertex keeps
/// the hypergraph linear with exactly one cycle); `n = (r-1)(m+p)`.
pub fn unicyclic(r: usize, m: usize, p: usize, seed: u64) -> Result<Hypergraph> {
    check_r(r, "unicyclic")?;
    check_p(p, "unicyclic")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cycle = loose_cycle(r, p)?;
    let mut edges: Vec<Vec<usize>> = cycle.edges().to_vec();
    let mut next_vertex = cycle.vertex_count();
    for _ in 0..m {
        let attach = rng.random_range(0..next_vertex);
        let mut e = vec![attach];
        e.extend(next_vertex..next_vertex + r - 1);
        next_vertex += r - 1;
        edges.push(e);
    }
    Hypergraph::new((r - 1) * (m + p), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{classify, Classification};

    #[test]
    fn loose_path_shape() {
        let h = loose_path(3, 2).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.edges(), &[vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(classify(&h).classification, Classification::Hypertree);
    }

    #[test]
    fn loose_path_empty() {
        let h = loose_path(3, 0).unwrap();
        assert_eq!(h.vertex_count(), 1);
        assert_eq!(classify(&h).classification, Classification::Hypertree);
    }

    #[test]
    fn loose_cycle_shape() {
        let h = loose_cycle(3, 3).unwrap();
        assert_eq!(h.vertex_count(), 6);
        let r = classify(&h);
        assert_eq!(r.classification, Classification::Unicyclic);
        assert_eq!(r.cycle_length, Some(3));
    }

    #[test]
    fn graph_cycle_is_a_cycle() {
        let spec = GenSpec::new(Family::GraphCycle).p(4);
        let h = generate(&spec).unwrap();
        assert_eq!(h.vertex_count(), 4);
        let r = classify(&h);
        assert_eq!(r.uniform_r, Some(2));
        assert_eq!(r.cycle_length, Some(4));
    }

    #[test]
    fn star_is_a_hypertree() {
        let h = star_hypertree(3, 3).unwrap();
        assert_eq!(h.vertex_count(), 7);
        assert_eq!(h.degree(0), 3);
        assert_eq!(classify(&h).classification, Classification::Hypertree);
    }

    #[test]
    fn random_hypertree_classifies_for_all_seeds() {
        for seed in 0..25 {
            let h = random_hypertree(3, 4, seed).unwrap();
            assert_eq!(h.vertex_count(), 9);
            assert_eq!(
                classify(&h).classification,
                Classification::Hypertree,
                "seed {seed}"
            );
        }
    }

    #[test]
    fn unicyclic_classifies_for_all_seeds() {
        for seed in 0..25 {
            let h = unicyclic(3, 2, 3, seed).unwrap();
            assert_eq!(h.vertex_count(), 10);
            let r = classify(&h);
            assert_eq!(r.classification, Classification::Unicyclic, "seed {seed}");
            assert_eq!(r.cycle_length, Some(3), "seed {seed}");
        }
    }

    #[test]
    fn unicyclic_example_shape() {
        let h = unicyclic(3, 1, 3, 7).unwrap();
        assert_eq!(h.vertex_count(), 8);
        assert_eq!(h.edge_count(), 4);
    }

    #[test]
    fn seeds_are_deterministic() {
        assert_eq!(
            random_hypertree(3, 5, 9).unwrap(),
            random_hypertree(3, 5, 9).unwrap()
        );
        assert_eq!(
            unicyclic(4, 2, 3, 1).unwrap(),
            unicyclic(4, 2, 3, 1).unwrap()
        );
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert!(loose_cycle(3, 2).is_err());
        assert!(generate(&GenSpec::new(Family::LooseCycle).r(3).p(2)).is_err());
        assert!(generate(&GenSpec::new(Family::LoosePath).r(1).m(2)).is_err());
        assert!(generate(&GenSpec::new(Family::LoosePath).r(3)).is_err());
        assert!(generate(&GenSpec::new(Family::Edgeless)).is_err());
    }

    #[test]
    fn family_names_round_trip() {
        for family in [
            Family::Edgeless,
            Family::LoosePath,
            Family::StarHypertree,
            Family::RandomHypertree,
            Family::LooseCycle,
            Family::Unicyclic,
            Family::GraphCycle,
        ] {
            assert_eq!(family.as_str().parse::<Family>().unwrap(), family);
        }
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = GenSpec::new(Family::Unicyclic).r(3).m(1).p(4).seed(9);
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<GenSpec>(&json).unwrap(), spec);
        let parsed: GenSpec =
            serde_json::from_str(r#"{"family":"loose_cycle","r":3,"p":4}"#).unwrap();
        assert_eq!(parsed.family, Family::LooseCycle);
        assert_eq!(parsed.p, Some(4));
    }
}
