//! The DP color function: the minimum number of F-colorings over all k-fold
//! covers, computed exactly.
//!
//! The search space reduction that makes the minimum computable:
//!
//! 1. Adding a partial map to a cover can only remove colorings, so some
//!    full cover (exactly k maps per edge) attains the minimum; it suffices
//!    to search full covers.
//! 2. Every full cover is a twist cover, and per-vertex recoloring (a gauge
//!    transformation) preserves its coloring count.
//! 3. Gauge fixing along a spanning traversal (`canonicalize`) turns every
//!    tree position into the identity, leaving one residual permutation per
//!    independent cycle of the incidence graph — the free slots.
//!
//! Hence the minimum over all covers equals the minimum over all assignments
//! of permutations to the free slots of the canonical parametrization:
//! `(k!)^s` exact counts, where `s` is the incidence cycle rank. For a
//! hypergraph without cycles `s = 0`, every cover is gauge-equivalent to the
//! natural cover, and the DP color function equals the chromatic polynomial.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{CheckedSub, One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::budget::{checked_pow, coloring_scan_cost, Budget};
use crate::chromatic::{count_proper, unicyclic_poly};
use crate::cover::{canonicalize, natural_cover, random_cover_with_rng, TwistCover};
use crate::error::{Error, Result};
use crate::hypergraph::{classify, Classification, Hypergraph};
use crate::perm::{factorial, Permutation};

/// Result of an exact DP color function computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpResult {
    /// The minimum number of F-colorings over all k-fold covers.
    pub value: BigUint,
    /// A cover attaining the minimum; among minimizers, the one whose free
    /// slot permutation tuple is lexicographically smallest.
    pub witness: TwistCover,
    /// Number of canonical covers whose colorings were counted.
    pub covers_examined: u128,
    /// Residual permutation positions after gauge fixing.
    pub free_slot_count: usize,
}

impl DpResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "value": self.value.to_string(),
            "witness": self.witness.to_json(),
            "covers_examined": self.covers_examined.to_u64().map_or_else(
                || serde_json::Value::from(self.covers_examined.to_string()),
                serde_json::Value::from,
            ),
            "free_slots": self.free_slot_count,
        })
    }
}

struct CanonicalFamily {
    base: TwistCover,
    slots: Vec<(usize, usize)>,
    perms: Vec<Permutation>,
    assignments: u128,
}

/// The canonical search family for `(h, k)`: the natural cover plus the free
/// slot positions. Every full cover is gauge-equivalent to some assignment
/// of permutations to the slots (assignments whose residuals are conjugate
/// are themselves gauge-equivalent, so the family over-covers; that only
/// costs time, never correctness).
fn canonical_family(h: &Hypergraph, k: usize, budget: Budget) -> Result<CanonicalFamily> {
    let (base, _, free) = canonicalize(h, &natural_cover(h, k));
    let slots: Vec<(usize, usize)> = free.iter().map(|f| (f.edge, f.vertex)).collect();
    let assignments = checked_pow(factorial(k), slots.len() as u32);
    let states = checked_pow(k.max(1) as u128, h.vertex_count() as u32);
    let cost = assignments.and_then(|a| states.and_then(|s| a.checked_mul(s)));
    budget.check_estimate(cost)?;
    Ok(CanonicalFamily {
        base,
        slots,
        perms: Permutation::all(k),
        assignments: assignments.expect("checked above"),
    })
}

impl CanonicalFamily {
    /// Cover for one assignment index. Slot 0 is the most significant digit,
    /// so ascending indices enumerate permutation tuples lexicographically.
    fn cover(&self, index: u128) -> TwistCover {
        let mut cover = self.base.clone();
        let kfact = self.perms.len() as u128;
        let mut rest = index;
        for &(edge, vertex) in self.slots.iter().rev() {
            let digit = (rest % kfact) as usize;
            rest /= kfact;
            cover
                .set_twist(edge, vertex, self.perms[digit].clone())
                .expect("free slots are valid positions");
        }
        cover
    }
}

/// Exact DP color function with witness: minimizes the coloring count over
/// the canonical cover family.
pub fn dp_exact(h: &Hypergraph, k: usize, budget: Budget) -> Result<DpResult> {
    let family = canonical_family(h, k, budget)?;
    let mut best: Option<(BigUint, u128)> = None;
    for index in 0..family.assignments {
        let cover = family.cover(index);
        let count = cover.count_colorings(h, budget)?;
        match &best {
            Some((value, _)) if *value <= count => {}
            _ => best = Some((count, index)),
        }
    }
    let (value, index) = best.expect("at least one assignment exists");
    Ok(DpResult {
        value,
        witness: family.cover(index),
        covers_examined: family.assignments,
        free_slot_count: family.slots.len(),
    })
}

/// `dp_exact` with conjugacy-class pruning of a single free slot.
///
/// A simultaneous gauge by one global permutation conjugates every residual,
/// so with one free slot the count depends on the residual only through its
/// conjugacy class; one representative per integer partition of `k`
/// suffices. Falls back to the full search when the slot count is not 1.
/// The value always matches `dp_exact`; the witness may be a different
/// minimizer.
pub fn dp_exact_class_pruned(h: &Hypergraph, k: usize, budget: Budget) -> Result<DpResult> {
    let family = canonical_family(h, k, budget)?;
    if family.slots.len() != 1 {
        return dp_exact(h, k, budget);
    }
    let mut best: Option<(BigUint, TwistCover)> = None;
    let reps = Permutation::conjugacy_class_representatives(k);
    let examined = reps.len() as u128;
    for rep in reps {
        let mut cover = family.base.clone();
        cover.set_twist(family.slots[0].0, family.slots[0].1, rep)?;
        let count = cover.count_colorings(h, budget)?;
        match &best {
            Some((value, _)) if *value <= count => {}
            _ => best = Some((count, cover)),
        }
    }
    let (value, witness) = best.expect("at least the identity class exists");
    Ok(DpResult {
        value,
        witness,
        covers_examined: examined,
        free_slot_count: 1,
    })
}

/// Exact average of the coloring count over every free-slot assignment.
///
/// For a connected r-uniform hypergraph this equals [`dp_upper_bound`]: the
/// residuals of a uniformly random full cover are uniform over the slots, so
/// the unweighted average over assignments is the expected count.
pub fn exact_cover_average(h: &Hypergraph, k: usize, budget: Budget) -> Result<BigRational> {
    let family = canonical_family(h, k, budget)?;
    let mut total = BigUint::zero();
    for index in 0..family.assignments {
        total += family.cover(index).count_colorings(h, budget)?;
    }
    Ok(BigRational::new(
        BigInt::from(total),
        BigInt::from(family.assignments),
    ))
}

/// The expectation bound `k^n (k^{r-1} - 1)^m / k^{(r-1)m}` on the DP color
/// function of an r-uniform hypergraph, as an exact rational. Attained
/// exactly by hypertrees among connected uniform hypergraphs.
pub fn dp_upper_bound(h: &Hypergraph, k: usize) -> Result<BigRational> {
    let n = h.vertex_count();
    let m = h.edge_count();
    if m == 0 {
        return Ok(BigRational::from(BigInt::from(k).pow(n as u32)));
    }
    let r = h.uniform_size().ok_or(Error::NotUniform)?;
    let kk = BigInt::from(k);
    let q: BigInt = kk.pow(r as u32 - 1) - BigInt::one();
    let numer = kk.pow(n as u32) * q.pow(m as u32);
    let denom = BigInt::from(k).pow(((r - 1) * m) as u32);
    if denom.is_zero() {
        // k = 0: the bound degenerates; there are no colorings at all
        return Ok(BigRational::zero());
    }
    Ok(BigRational::new(numer, denom))
}

/// How a closed-form DP value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// Acyclic connected linear: the DP color function equals the chromatic
    /// polynomial.
    Hypertree,
    /// Unicyclic linear uniform with odd cycle: equals the chromatic
    /// polynomial.
    UnicyclicOddCycle,
    /// Unicyclic linear uniform with even cycle: strictly below it.
    UnicyclicEvenCycle,
}

impl ClosedForm {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClosedForm::Hypertree => "hypertree",
            ClosedForm::UnicyclicOddCycle => "unicyclic-odd-cycle",
            ClosedForm::UnicyclicEvenCycle => "unicyclic-even-cycle",
        }
    }
}

/// Closed-form DP color function where one is known: hypertrees (any edge
/// sizes) and unicyclic linear r-uniform hypergraphs with `r >= 3`. `None`
/// otherwise — in particular for graph cycles (`r = 2`), which fall outside
/// the unicyclic formula's range.
pub fn dp_closed(h: &Hypergraph, k: usize) -> Option<(BigUint, ClosedForm)> {
    let report = classify(h);
    match report.classification {
        Classification::Hypertree => {
            // P_DP = P = k * prod_e (k^{|e|-1} - 1): gauge fixing collapses
            // every cover of an acyclic hypergraph to the natural one.
            let kk = BigInt::from(k);
            let mut value = kk.clone();
            for e in h.edges() {
                value *= kk.pow(e.len() as u32 - 1) - BigInt::one();
            }
            let value = BigUint::try_from(value).expect("count is nonnegative");
            Some((value, ClosedForm::Hypertree))
        }
        Classification::Unicyclic => {
            let r = h.uniform_size()?;
            if r < 3 {
                return None;
            }
            let p = report.cycle_length.expect("unicyclic reports its cycle");
            let m = h.edge_count() - p;
            if k <= 1 {
                // a single edge already forbids all k constant maps
                return Some((BigUint::zero(), closed_form_for_parity(p)));
            }
            let value = if p % 2 == 1 {
                unicyclic_poly(r, m, p, k).expect("r and p validated")
            } else {
                // (k^{r-1} - 1)^{m+p} - (k^{r-1} - 1)^m, attained by the
                // shifted extremal cover on a cycle edge
                let q: BigInt = BigInt::from(k).pow(r as u32 - 1) - BigInt::one();
                let value = q.pow((m + p) as u32) - q.pow(m as u32);
                BigUint::try_from(value).expect("count is nonnegative")
            };
            Some((value, closed_form_for_parity(p)))
        }
        _ => None,
    }
}

fn closed_form_for_parity(p: usize) -> ClosedForm {
    if p % 2 == 1 {
        ClosedForm::UnicyclicOddCycle
    } else {
        ClosedForm::UnicyclicEvenCycle
    }
}

/// Report of the deletion-ratio test: when `P(H-e, k)` is strictly below
/// `k^{r-1}/(k^{r-1}-1) * P(H, k)`, the DP color function is strictly below
/// the chromatic polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictLessReport {
    pub holds: bool,
    /// `P(H - e, k)`.
    pub lhs: BigRational,
    /// `k^{r-1}/(k^{r-1}-1) * P(H, k)`.
    pub rhs: BigRational,
}

/// Evaluates both sides of the deletion-ratio test exactly.
pub fn strict_less_test(
    h: &Hypergraph,
    e: usize,
    k: usize,
    budget: Budget,
) -> Result<StrictLessReport> {
    let r = h.uniform_size().ok_or(Error::NotUniform)?;
    if k < 2 {
        return Err(Error::DomainError {
            detail: format!("deletion-ratio test needs k >= 2, got {k}"),
        });
    }
    let deleted = h.delete_edge(e)?;
    let lhs = BigRational::from(BigInt::from(count_proper(&deleted, k, budget)?));
    let p_h = BigInt::from(count_proper(h, k, budget)?);
    let kr1 = BigInt::from(k).pow(r as u32 - 1);
    let rhs = BigRational::new(kr1.clone() * p_h, kr1 - BigInt::one());
    Ok(StrictLessReport {
        holds: lhs < rhs,
        lhs,
        rhs,
    })
}

/// Smallest `k <= k_max` such that every k-fold cover admits a coloring,
/// i.e. the exact DP value is positive. `None` when no such `k` exists in
/// range.
pub fn dp_chromatic_number(h: &Hypergraph, k_max: usize, budget: Budget) -> Result<Option<usize>> {
    for k in 1..=k_max {
        if !dp_exact(h, k, budget)?.value.is_zero() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Sample mean (exact rational) and minimum of the coloring count over
/// seeded uniformly random covers. The minimum observed can never fall below
/// the exact DP value.
pub fn monte_carlo_mean(
    h: &Hypergraph,
    k: usize,
    trials: u64,
    seed: u64,
    budget: Budget,
) -> Result<(BigRational, BigUint)> {
    if trials == 0 {
        return Err(Error::BadParameters {
            detail: "monte carlo needs at least one trial".into(),
        });
    }
    let per_trial = coloring_scan_cost(h.vertex_count(), k.max(1), h.edge_count());
    budget.check_estimate(per_trial.and_then(|c| c.checked_mul(trials as u128)))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total = BigUint::zero();
    let mut min: Option<BigUint> = None;
    for _ in 0..trials {
        let cover = random_cover_with_rng(h, k, &mut rng);
        let count = cover.count_colorings(h, budget)?;
        if min.as_ref().map_or(true, |m| count < *m) {
            min = Some(count.clone());
        }
        total += count;
    }
    let mean = BigRational::new(BigInt::from(total), BigInt::from(trials));
    Ok((mean, min.expect("trials >= 1")))
}

/// One row of a chromatic-polynomial vs DP-color-function comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapRow {
    pub k: usize,
    pub proper: BigUint,
    pub dp: BigUint,
    pub gap: BigUint,
    /// `gap / k^{n-2}`, exact; `None` when `k^{n-2}` is zero or undefined
    /// (only for `k = 0`).
    pub normalized_gap: Option<BigRational>,
}

/// Exact table of `P`, `P_DP`, their gap, and the normalized gap for each
/// `k` in the inclusive range.
pub fn gap_profile(
    h: &Hypergraph,
    k_min: usize,
    k_max: usize,
    budget: Budget,
) -> Result<Vec<GapRow>> {
    let n = h.vertex_count();
    let mut rows = Vec::new();
    for k in k_min..=k_max {
        let proper = count_proper(h, k, budget)?;
        let dp = dp_exact(h, k, budget)?.value;
        let gap = proper
            .checked_sub(&dp)
            .expect("the DP color function never exceeds the chromatic polynomial");
        rows.push(GapRow {
            k,
            normalized_gap: normalized_gap(&gap, k, n),
            proper,
            dp,
            gap,
        });
    }
    Ok(rows)
}

fn normalized_gap(gap: &BigUint, k: usize, n: usize) -> Option<BigRational> {
    if n >= 2 {
        let denom = BigInt::from(k).pow((n - 2) as u32);
        if denom.is_zero() {
            return None;
        }
        Some(BigRational::new(BigInt::from(gap.clone()), denom))
    } else {
        // n = 1: k^{n-2} = 1/k
        if k == 0 {
            return None;
        }
        Some(BigRational::from(BigInt::from(gap * k)))
    }
}

/// DP color function via the component product rule, with the witness
/// assembled from per-component witnesses. Always agrees with running
/// [`dp_exact`] on the whole hypergraph.
pub fn dp_exact_by_components(h: &Hypergraph, k: usize, budget: Budget) -> Result<DpResult> {
    let mut value = BigUint::one();
    let mut witness = natural_cover(h, k);
    let mut covers_examined = 0u128;
    let mut free_slot_count = 0;
    for (sub, vertex_ids, edge_ids) in h.component_subhypergraphs() {
        let result = dp_exact(&sub, k, budget)?;
        value *= &result.value;
        covers_examined += result.covers_examined;
        free_slot_count += result.free_slot_count;
        for twist in result.witness.edge_twists() {
            let edge = edge_ids[twist.edge];
            let anchor = vertex_ids[twist.anchor];
            witness.reanchor_edge(edge, anchor)?;
            for (&v, p) in twist.mu() {
                witness.set_twist(edge, vertex_ids[v], p.clone())?;
            }
        }
    }
    Ok(DpResult {
        value,
        witness,
        covers_examined,
        free_slot_count,
    })
}
