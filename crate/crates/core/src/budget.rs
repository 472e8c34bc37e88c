use crate::error::{Error, Result};

/// Cap on elementary enumeration work (edge checks, cover evaluations).
///
/// Exhaustive operations estimate their cost up front and refuse with
/// [`Error::ResourceLimit`], carrying the precise estimate, rather than
/// starting a run that cannot finish at desk scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    limit: u128,
}

pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

impl Default for Budget {
    fn default() -> Self {
        Budget {
            limit: DEFAULT_BUDGET,
        }
    }
}

impl Budget {
    pub fn new(limit: u128) -> Self {
        Budget { limit }
    }

    pub fn limit(&self) -> u128 {
        self.limit
    }

    /// Checks an estimated cost against the limit.
    pub fn check(&self, required: u128) -> Result<()> {
        if required > self.limit {
            return Err(Error::ResourceLimit {
                required,
                limit: self.limit,
            });
        }
        Ok(())
    }

    /// Checks a cost that may have overflowed during estimation.
    /// `None` means the true cost exceeds `u128`, which no budget covers.
    pub fn check_estimate(&self, required: Option<u128>) -> Result<u128> {
        match required {
            Some(r) => {
                self.check(r)?;
                Ok(r)
            }
            None => Err(Error::ResourceLimit {
                required: u128::MAX,
                limit: self.limit,
            }),
        }
    }
}

/// `base^exp` in `u128`, `None` on overflow.
pub fn checked_pow(base: u128, exp: u32) -> Option<u128> {
    base.checked_pow(exp)
}

/// Cost estimate for enumerating all `k^n` colorings against `m` edges.
pub fn coloring_scan_cost(n: usize, k: usize, m: usize) -> Option<u128> {
    let states = checked_pow(k as u128, n as u32)?;
    states.checked_mul(m.max(1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_limit_is_a_billion() {
        assert_eq!(Budget::default().limit(), 1_000_000_000);
    }

    #[test]
    fn over_budget_reports_estimate() {
        let b = Budget::new(10);
        match b.check(11) {
            Err(Error::ResourceLimit { required, limit }) => {
                assert_eq!(required, 11);
                assert_eq!(limit, 10);
            }
            other => panic!("expected ResourceLimit, got {other:?}"),
        }
    }

    #[test]
    fn overflowing_estimate_is_rejected() {
        let b = Budget::new(u128::MAX - 1);
        assert!(b.check_estimate(None).is_err());
        assert_eq!(b.check_estimate(Some(5)).unwrap(), 5);
    }

    #[test]
    fn scan_cost_uses_at_least_one_edge() {
        assert_eq!(coloring_scan_cost(3, 2, 0), Some(8));
        assert_eq!(coloring_scan_cost(3, 2, 4), Some(32));
        assert_eq!(coloring_scan_cost(200, 3, 1), None);
    }
}
