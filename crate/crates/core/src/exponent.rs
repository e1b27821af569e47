use serde::Serialize;

use crate::error::{domain, Result};

/// Hölder conjugates `p, q > 1` with `1/p + 1/q = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConjugatePair {
    p: f64,
    q: f64,
}

const CONJUGATE_TOL: f64 = 1e-12;

/// `q = p / (p − 1)` for `p > 1`.
pub fn conjugate_of(p: f64) -> Result<f64> {
    if !p.is_finite() || p <= 1.0 {
        return Err(domain(format!(
            "conjugate exponent needs finite p > 1, got {p}"
        )));
    }
    Ok(p / (p - 1.0))
}

impl ConjugatePair {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        if !(p > 1.0 && q > 1.0) || !p.is_finite() || !q.is_finite() {
            return Err(domain(format!(
                "conjugate pair needs p, q > 1, got ({p}, {q})"
            )));
        }
        if (1.0 / p + 1.0 / q - 1.0).abs() > CONJUGATE_TOL {
            return Err(domain(format!("1/p + 1/q must equal 1, got ({p}, {q})")));
        }
        Ok(Self { p, q })
    }

    pub fn from_p(p: f64) -> Result<Self> {
        Ok(Self {
            p,
            q: conjugate_of(p)?,
        })
    }

    pub fn from_q(q: f64) -> Result<Self> {
        Ok(Self {
            p: conjugate_of(q)?,
            q,
        })
    }

    #[inline]
    pub fn p(&self) -> f64 {
        self.p
    }

    #[inline]
    pub fn q(&self) -> f64 {
        self.q
    }
}

/// The exponent a bound was evaluated with, if any.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Exponent {
    Pair(ConjugatePair),
    Power { q: f64 },
}

impl Exponent {
    pub fn q(&self) -> f64 {
        match self {
            Exponent::Pair(pq) => pq.q(),
            Exponent::Power { q } => *q,
        }
    }
}
