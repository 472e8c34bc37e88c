//! Shared instance builders for the benchmark targets.

use dpcolor::generate::{generate, Family, GenSpec};
use dpcolor::Hypergraph;

pub fn loose_path(r: usize, m: usize) -> Hypergraph {
    generate(&GenSpec::new(Family::LoosePath).r(r).m(m)).expect("valid loose path spec")
}

pub fn loose_cycle(r: usize, p: usize) -> Hypergraph {
    generate(&GenSpec::new(Family::LooseCycle).r(r).p(p)).expect("valid loose cycle spec")
}

pub fn graph_cycle(p: usize) -> Hypergraph {
    generate(&GenSpec::new(Family::GraphCycle).p(p)).expect("valid graph cycle spec")
}
