use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Relative comparison band used by every geometric decision.
///
/// Two reals `a`, `b` compare equal when `|a - b| <= eps * max(|a|, |b|, 1)`.
/// Comparisons are always made on quantities in length (or parameter) units,
/// never on squared lengths, so the band keeps a fixed meaning.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    eps: f64,
}

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-9;

    pub fn new(eps: f64) -> Result<Self> {
        if eps.is_finite() && eps > 0.0 && eps < 1.0 {
            Ok(Self { eps })
        } else {
            Err(Error::InvalidTolerance(eps))
        }
    }

    #[inline]
    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// Width of the equality band around `a` and `b`.
    #[inline]
    pub fn band(&self, a: f64, b: f64) -> f64 {
        self.eps * a.abs().max(b.abs()).max(1.0)
    }

    #[inline]
    pub fn eq(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.band(a, b)
    }

    /// `a <= b` with the equality band counted as true.
    #[inline]
    pub fn le(&self, a: f64, b: f64) -> bool {
        a <= b + self.band(a, b)
    }

    #[inline]
    pub fn ge(&self, a: f64, b: f64) -> bool {
        self.le(b, a)
    }

    /// `a < b` strictly outside the equality band.
    #[inline]
    pub fn lt(&self, a: f64, b: f64) -> bool {
        !self.ge(a, b)
    }

    #[inline]
    pub fn is_zero(&self, a: f64) -> bool {
        a.abs() <= self.eps
    }

    pub fn compare(&self, a: f64, b: f64) -> Ordering {
        if self.eq(a, b) {
            Ordering::Equal
        } else if a < b {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { eps: Self::DEFAULT_EPS }
    }
}

/// Ball radius: finite and non-negative.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Radius(f64);

impl Radius {
    pub const ZERO: Radius = Radius(0.0);

    pub fn new(delta: f64) -> Result<Self> {
        if delta.is_finite() && delta >= 0.0 {
            Ok(Self(delta))
        } else {
            Err(Error::InvalidRadius(delta))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Radius {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Radius::new(value)
    }
}

/// Nesting depth of the radicals needed to express a constructed coordinate
/// in terms of the input coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootTypeTag {
    /// Rational function of the inputs.
    Level1,
    /// One square root of a rational function.
    Level2,
    /// Square root nested inside another square root.
    Level3,
}

impl RootTypeTag {
    pub fn level(self) -> u8 {
        match self {
            RootTypeTag::Level1 => 1,
            RootTypeTag::Level2 => 2,
            RootTypeTag::Level3 => 3,
        }
    }
}

/// Relative position of two parameters on a directed line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineOrder {
    Before,
    Equal,
    After,
}
