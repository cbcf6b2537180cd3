//! Reference oracles and seeded instance generators for testing
//! `elastic-core`.
//!
//! Oracles here are deliberately naive (dense sampling, exhaustive
//! enumeration, grid search) and use their own small geometry helpers, so
//! they share no code paths with the library under test.

pub mod curves;
pub mod gen;
pub mod geom;
pub mod paths;
pub mod region;
pub mod voronoi;
