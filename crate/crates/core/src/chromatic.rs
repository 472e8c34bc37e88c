//! Exact counting of proper colorings, chromatic polynomial recovery by
//! interpolation, the closed forms for uniform hypertrees and unicyclic
//! linear uniform hypergraphs, and boundary coloring profiles.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::budget::{coloring_scan_cost, Budget};
use crate::enumerate::{count_colorings_where, tally_colorings_where};
use crate::error::{Error, Result};
use crate::hypergraph::{classify, cycle_attachment_vertices, Classification, Hypergraph};

/// Exact number of proper k-colorings: maps `V -> [k]` with no edge
/// monochromatic.
pub fn count_proper(h: &Hypergraph, k: usize, budget: Budget) -> Result<BigUint> {
    if k == 0 {
        // no maps into an empty color set exist for n >= 1
        return Ok(BigUint::zero());
    }
    budget.check_estimate(coloring_scan_cost(h.vertex_count(), k, h.edge_count()))?;
    let edges = h.edges();
    let count = count_colorings_where(h.vertex_count(), k, |f| {
        edges.iter().all(|e| !monochromatic(e, f))
    });
    Ok(BigUint::from(count))
}

fn monochromatic(edge: &[usize], coloring: &[usize]) -> bool {
    let first = coloring[edge[0]];
    edge[1..].iter().all(|&v| coloring[v] == first)
}

/// The chromatic polynomial as an exact integer coefficient vector,
/// ascending by degree. Monic of degree `n` for a hypergraph on `n`
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// JSON integer array, ascending degree. Coefficients beyond `i64` are
    /// emitted as decimal strings (they do not occur at desk scale).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| match c.to_i64() {
                    Some(v) => serde_json::Value::from(v),
                    None => serde_json::Value::from(c.to_string()),
                })
                .collect(),
        )
    }
}

/// Recovers the chromatic polynomial exactly by Lagrange interpolation on
/// the nodes `k = 0..=n` in rational arithmetic.
///
/// The polynomial has degree exactly `n`, so `n + 1` nodes determine it; the
/// result must come out integral and monic, anything else is reported as an
/// internal defect.
pub fn chromatic_polynomial(h: &Hypergraph, budget: Budget) -> Result<Polynomial> {
    let n = h.vertex_count();
    let mut values = Vec::with_capacity(n + 1);
    for k in 0..=n {
        values.push(BigInt::from(count_proper(h, k, budget)?));
    }
    let coeffs = lagrange_integer_coefficients(&values)?;
    if coeffs.len() != n + 1 || !coeffs[n].is_one() {
        return Err(Error::NonIntegralCoefficient {
            detail: format!("expected monic degree {n}, got {coeffs:?}"),
        });
    }
    Ok(Polynomial { coeffs })
}

/// Interpolates the polynomial through `(i, values[i])` for `i = 0..values.len()`
/// and demands integer coefficients.
fn lagrange_integer_coefficients(values: &[BigInt]) -> Result<Vec<BigInt>> {
    let n = values.len();
    let mut acc = vec![BigRational::zero(); n];
    for (i, y) in values.iter().enumerate() {
        // basis polynomial prod_{j != i} (x - j) / (i - j)
        let mut numer = vec![BigRational::zero(); n];
        numer[0] = BigRational::one();
        let mut len = 1;
        let mut denom = BigRational::one();
        for j in 0..n {
            if j == i {
                continue;
            }
            // multiply numer by (x - j)
            let jr = BigRational::from(BigInt::from(j));
            for t in (0..len).rev() {
                let c = acc_take(&mut numer, t);
                numer[t + 1] += &c;
                numer[t] = -(&jr * &c);
            }
            len += 1;
            denom *= BigRational::from(BigInt::from(i as i64 - j as i64));
        }
        let scale = BigRational::from(y.clone()) / denom;
        for (a, c) in acc.iter_mut().zip(numer) {
            *a += c * &scale;
        }
    }
    acc.into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::NonIntegralCoefficient {
                    detail: format!("coefficient {c}"),
                })
            }
        })
        .collect()
}

fn acc_take(v: &mut [BigRational], i: usize) -> BigRational {
    std::mem::replace(&mut v[i], BigRational::zero())
}

/// `k (k^{r-1} - 1)^m`: proper k-colorings of an r-uniform hypertree with
/// `m` edges. `r >= 2`, `m >= 0`, `k >= 0`.
pub fn hypertree_poly(r: usize, m: usize, k: usize) -> BigUint {
    assert!(r >= 2, "hypertree closed form needs r >= 2");
    let kk = BigInt::from(k);
    let q: BigInt = kk.pow(r as u32 - 1) - BigInt::one();
    let value = kk * q.pow(m as u32);
    debug_assert!(!value.is_negative());
    value.magnitude().clone()
}

/// `(k^{r-1} - 1)^{m+p} + (-1)^p (k - 1) (k^{r-1} - 1)^m`: proper
/// k-colorings of a unicyclic linear r-uniform hypergraph with `m + p`
/// edges and cycle length `p`. Requires `r >= 3` and `p >= 3`.
pub fn unicyclic_poly(r: usize, m: usize, p: usize, k: usize) -> Result<BigUint> {
    if r < 3 || p < 3 {
        return Err(Error::DomainError {
            detail: format!("unicyclic closed form needs r >= 3 and p >= 3, got r={r}, p={p}"),
        });
    }
    let kk = BigInt::from(k);
    let q: BigInt = kk.pow(r as u32 - 1) - BigInt::one();
    let sign = if p % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let value = q.pow((m + p) as u32) + sign * (kk - BigInt::one()) * q.pow(m as u32);
    debug_assert!(!value.is_negative());
    Ok(value.magnitude().clone())
}

/// Per-tuple coloring counts of `H - e` over the ordered vertices of edge
/// `e`: for every color tuple, the exact number of proper colorings of
/// `H - e` that restrict to it on those vertices.
///
/// The counts always sum to `P(H - e, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryProfile {
    pub edge: usize,
    pub k: usize,
    /// Order in which the edge's vertices index the tuples. When the host is
    /// unicyclic and `e` lies on its cycle, the two cycle-attachment vertices
    /// come first; otherwise ascending vertex id.
    pub vertices: Vec<usize>,
    counts: BTreeMap<Vec<usize>, BigUint>,
}

impl BoundaryProfile {
    pub fn counts(&self) -> &BTreeMap<Vec<usize>, BigUint> {
        &self.counts
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Splits tuples into constant (all positions equal) and non-constant
    /// groups. Returns `(t1, t2)` when every tuple inside each group has the
    /// same count and the non-constant group is non-empty.
    pub fn split_constant(&self) -> Option<(BigUint, BigUint)> {
        self.split_by(|t| t.iter().all(|&c| c == t[0]))
    }

    /// Splits tuples by whether the first two positions agree. Returns
    /// `(t1, t2)` when counts are uniform within each group.
    pub fn split_first_pair(&self) -> Option<(BigUint, BigUint)> {
        self.split_by(|t| t[0] == t[1])
    }

    fn split_by<F: Fn(&[usize]) -> bool>(&self, in_first: F) -> Option<(BigUint, BigUint)> {
        let mut t1: Option<&BigUint> = None;
        let mut t2: Option<&BigUint> = None;
        for (tuple, count) in &self.counts {
            let slot = if in_first(tuple) { &mut t1 } else { &mut t2 };
            match slot {
                None => *slot = Some(count),
                Some(seen) if *seen == count => {}
                Some(_) => return None,
            }
        }
        Some((t1?.clone(), t2?.clone()))
    }

    /// JSON map from 1-based tuple strings `"i1,i2,...,ir"` to decimal count
    /// strings.
    pub fn to_json(&self) -> serde_json::Value {
        let counts: BTreeMap<String, String> = self
            .counts
            .iter()
            .map(|(tuple, count)| {
                let key: Vec<String> = tuple.iter().map(|c| (c + 1).to_string()).collect();
                (key.join(","), count.to_string())
            })
            .collect();
        serde_json::json!({
            "edge": self.edge,
            "k": self.k,
            "vertices": self.vertices,
            "counts": counts,
        })
    }
}

/// Computes the boundary profile of edge `e` at `k` colors.
pub fn boundary_profile(
    h: &Hypergraph,
    e: usize,
    k: usize,
    budget: Budget,
) -> Result<BoundaryProfile> {
    let edge = h.edge(e)?.to_vec();
    assert!(k >= 1, "boundary profile needs k >= 1");
    let vertices = profile_vertex_order(h, e, &edge);
    let rest = h.delete_edge(e)?;
    let n = rest.vertex_count();
    budget.check_estimate(coloring_scan_cost(n, k, rest.edge_count()))?;
    let r = vertices.len();
    let bins = k.checked_pow(r as u32).ok_or(Error::ResourceLimit {
        required: u128::MAX,
        limit: budget.limit(),
    })?;
    let edges = rest.edges();
    let tally = tally_colorings_where(
        n,
        k,
        bins,
        |f| edges.iter().all(|e| !monochromatic(e, f)),
        |f| {
            let mut key = 0usize;
            for &v in &vertices {
                key = key * k + f[v];
            }
            key
        },
    );
    let mut counts = BTreeMap::new();
    for (rank, total) in tally.into_iter().enumerate() {
        let mut tuple = vec![0usize; r];
        let mut rest_rank = rank;
        for slot in tuple.iter_mut().rev() {
            *slot = rest_rank % k;
            rest_rank /= k;
        }
        counts.insert(tuple, BigUint::from(total));
    }
    Ok(BoundaryProfile {
        edge: e,
        k,
        vertices,
        counts,
    })
}

/// Tuple order for a boundary profile: cycle-attachment vertices first when
/// the edge sits on the unique cycle of a unicyclic hypergraph.
fn profile_vertex_order(h: &Hypergraph, e: usize, edge: &[usize]) -> Vec<usize> {
    let report = classify(h);
    if report.classification == Classification::Unicyclic {
        if let Some((v1, v2)) = cycle_attachment_vertices(h, &report, e) {
            let mut order = vec![v1, v2];
            order.extend(edge.iter().copied().filter(|&v| v != v1 && v != v2));
            return order;
        }
    }
    edge.to_vec()
}
