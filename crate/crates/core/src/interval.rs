use serde::ser::{Serialize, SerializeTuple, Serializer};

use crate::error::{domain, Result};

/// A closed interval `[a, b]` with `a < b`, both finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    a: f64,
    b: f64,
}

impl Interval {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(domain(format!(
                "interval endpoints must be finite, got [{a}, {b}]"
            )));
        }
        if a >= b {
            return Err(domain(format!("interval requires a < b, got [{a}, {b}]")));
        }
        Ok(Self { a, b })
    }

    /// The unit interval `[0, 1]`.
    pub fn unit() -> Self {
        Self { a: 0.0, b: 1.0 }
    }

    #[inline]
    pub fn a(&self) -> f64 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> f64 {
        self.b
    }

    #[inline]
    pub fn width(&self) -> f64 {
        self.b - self.a
    }

    #[inline]
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.a + self.b)
    }

    /// The convex combination `t·a + (1 − t)·b`.
    #[inline]
    pub fn point(&self, t: f64) -> f64 {
        t * self.a + (1.0 - t) * self.b
    }

    pub fn contains(&self, x: f64) -> bool {
        self.a <= x && x <= self.b
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.a <= other.a && other.b <= self.b
    }

    /// Splits into two halves at the midpoint.
    pub fn bisect(&self) -> (Interval, Interval) {
        let m = self.midpoint();
        (Interval { a: self.a, b: m }, Interval { a: m, b: self.b })
    }

    /// `n` equal pieces, left to right. Returns an empty iterator when `n == 0`.
    pub fn partition(&self, n: usize) -> impl Iterator<Item = Interval> + '_ {
        let h = self.width() / n.max(1) as f64;
        (0..n).map(move |i| {
            let left = self.a + i as f64 * h;
            let right = if i + 1 == n {
                self.b
            } else {
                self.a + (i + 1) as f64 * h
            };
            Interval { a: left, b: right }
        })
    }

    /// `n` equally spaced points from `a` to `b` inclusive (`n >= 2`).
    pub fn grid(&self, n: usize) -> Vec<f64> {
        let n = n.max(2);
        let step = self.width() / (n - 1) as f64;
        (0..n)
            .map(|i| {
                if i + 1 == n {
                    self.b
                } else {
                    self.a + i as f64 * step
                }
            })
            .collect()
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.a, self.b)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.a)?;
        t.serialize_element(&self.b)?;
        t.end()
    }
}
