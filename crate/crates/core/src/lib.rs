//! Ball-membership deciders for elastic distance measures.
//!
//! The crate answers "is `d(P, Q) <= delta`?" for the continuous Hausdorff,
//! Fréchet and weak Fréchet distances between polygonal curves, for the
//! Hausdorff distance between planar polygonal regions with holes, and
//! computes the discrete Hausdorff, discrete Fréchet and DTW distances. Every
//! decision is assembled from a small set of geometric primitives (ball,
//! stadium and capped-cylinder intersections with lines, segment crossings,
//! horizontal-ray tests, segment Voronoi-vertex candidates) evaluated under an
//! explicit [`Tolerance`].
//!
//! The [`vc`] module evaluates explicit VC-dimension bounds for these range
//! spaces and searches for shattered ground sets empirically.
//!
//! Batch work (candidate enumeration, per-edge coverage, shattering sweeps)
//! runs on rayon when the default `parallel` feature is enabled; see
//! [`Execution`].

pub mod curves;
mod error;
mod exec;
pub mod geometry;
pub mod region;
pub mod vc;

pub use curves::{
    compute_distance, decide_directed_hausdorff_curve, decide_frechet, decide_hausdorff_curve, decide_weak_frechet,
    discrete_frechet, discrete_hausdorff, dtw, dtw_bruteforce, CurveMeasure, DecisionResult, Margin, PolygonalCurve,
    WarpingPath,
};
pub use error::{Error, Result};
pub use exec::Execution;
pub use geometry::{ParamInterval, Point, Radius, RootTypeTag, Segment, Tolerance};
pub use region::{
    compute_hausdorff_region, decide_directed_hausdorff_region, decide_hausdorff_region, PolygonalRegion, Ring,
};
