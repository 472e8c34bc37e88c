//! Exact computation of chromatic polynomials and DP color functions of
//! hypergraphs.
//!
//! Everything here is exact: counts are arbitrary-precision integers,
//! bounds and averages are exact rationals, and the DP color function is
//! obtained by exhaustive search over covers, reduced to a finite canonical
//! family by gauge fixing. Closed forms are provided for uniform hypertrees
//! and unicyclic linear uniform hypergraphs, and every closed form is
//! cross-checkable against brute-force enumeration at desk scale.
//!
//! The main entry points:
//!
//! * [`Hypergraph`] — validated hypergraph with structural [`classify`]
//!   reporting connectivity, linearity, incidence rank and cycle structure.
//! * [`count_proper`] / [`chromatic_polynomial`] — exact proper-coloring
//!   counts and the interpolated chromatic polynomial.
//! * [`TwistCover`] / [`GeneralCover`] — k-fold covers, with
//!   [`canonicalize`] implementing gauge fixing and [`natural_cover`] the
//!   cover whose colorings are the proper colorings.
//! * [`dp_exact`] — the DP color function `min` over all k-fold covers,
//!   with a witness cover and search statistics.
//! * [`generate`] — deterministic instance families (loose paths, loose
//!   cycles, hypertrees, unicyclic hypergraphs).
//!
//! ```
//! use dpcolor::{count_proper, dp_exact, Budget};
//!
//! // a 3-uniform loose cycle of length 4: the DP color function dips
//! // strictly below the chromatic polynomial at every k >= 2
//! let h = dpcolor::generate::loose_cycle(3, 4)?;
//! let budget = Budget::default();
//! assert_eq!(count_proper(&h, 2, budget)?.to_string(), "82");
//! let dp = dp_exact(&h, 2, budget)?;
//! assert_eq!(dp.value.to_string(), "80");
//! assert_eq!(dp.free_slot_count, 1);
//! # Ok::<(), dpcolor::Error>(())
//! ```

pub mod budget;
pub mod chromatic;
pub mod cover;
pub mod dp;
mod enumerate;
pub mod error;
pub mod generate;
pub mod hypergraph;
pub mod perm;
pub mod verify;

pub use budget::Budget;
pub use chromatic::{
    boundary_profile, chromatic_polynomial, count_proper, hypertree_poly, unicyclic_poly,
    BoundaryProfile, Polynomial,
};
pub use cover::{
    apply_gauge, canonicalize, complete_cover, extremal_cover, gauge_equivalent, general_to_twist,
    natural_cover, random_cover, ExtremalVariant, FreeSlot, GaugeMap, GeneralCover, PartialMap,
    TwistCover,
};
pub use dp::{
    dp_chromatic_number, dp_closed, dp_exact, dp_exact_by_components, dp_exact_class_pruned,
    dp_upper_bound, exact_cover_average, gap_profile, monte_carlo_mean, strict_less_test,
    ClosedForm, DpResult, GapRow, StrictLessReport,
};
pub use error::{Error, Result};
pub use hypergraph::{classify, Classification, Hypergraph, StructureReport};
pub use perm::Permutation;
