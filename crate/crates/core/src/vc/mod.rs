//! VC-dimension bounds for distance-ball range spaces, and an empirical
//! shattering harness.
//!
//! Bounds are real-valued and use base-2 logarithms; the VC-dimension itself
//! is an integer, so any value below the next integer is equally good. The
//! harness can only certify shattering (a lower bound): "not shattered" in a
//! [`ShatterReport`] means "not shattered by the ranges tried".

mod bounds;
mod shatter;

pub use bounds::{
    bound_discrete_frechet, bound_discrete_hausdorff, bound_dtw, bound_sign_combination, count_warping_paths,
    BoundQuery,
};
pub use shatter::{
    ball_contains, distance, random_shatter_search, shatter_check, verify_report, Element, GeometryObject, Measure,
    ShatterReport, Witness, MAX_GROUND,
};
