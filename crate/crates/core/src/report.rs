use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{domain, Error};
use crate::exponent::Exponent;
use crate::interval::Interval;

/// Default slack below which a bound counts as violated.
pub const VALIDITY_TOL: f64 = 1e-9;

/// Every bound this crate can evaluate and report on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    ConvexQ1,
    ConvexHolder,
    ConvexPowerMean,
    QuasiQ1,
    QuasiMonotone,
    QuasiHolder,
    QuasiPowerMean,
    BaselineQ1,
    BaselinePowerMean,
    MonomialQ1,
    IdentricHolder,
    MonomialPowerMean,
    ReciprocalPowerMean,
    ReciprocalQuasi,
    MonomialQuasiHolder,
}

impl BoundKind {
    /// The general theorems, in the order the verify suites run them.
    pub const THEOREMS: [BoundKind; 9] = [
        BoundKind::ConvexQ1,
        BoundKind::ConvexHolder,
        BoundKind::ConvexPowerMean,
        BoundKind::QuasiQ1,
        BoundKind::QuasiMonotone,
        BoundKind::QuasiHolder,
        BoundKind::QuasiPowerMean,
        BoundKind::BaselineQ1,
        BoundKind::BaselinePowerMean,
    ];

    pub const PROPOSITIONS: [BoundKind; 6] = [
        BoundKind::MonomialQ1,
        BoundKind::IdentricHolder,
        BoundKind::MonomialPowerMean,
        BoundKind::ReciprocalPowerMean,
        BoundKind::ReciprocalQuasi,
        BoundKind::MonomialQuasiHolder,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::ConvexQ1 => "convex_q1",
            BoundKind::ConvexHolder => "convex_holder",
            BoundKind::ConvexPowerMean => "convex_power_mean",
            BoundKind::QuasiQ1 => "quasi_q1",
            BoundKind::QuasiMonotone => "quasi_monotone",
            BoundKind::QuasiHolder => "quasi_holder",
            BoundKind::QuasiPowerMean => "quasi_power_mean",
            BoundKind::BaselineQ1 => "baseline_q1",
            BoundKind::BaselinePowerMean => "baseline_power_mean",
            BoundKind::MonomialQ1 => "monomial_q1",
            BoundKind::IdentricHolder => "identric_holder",
            BoundKind::MonomialPowerMean => "monomial_power_mean",
            BoundKind::ReciprocalPowerMean => "reciprocal_power_mean",
            BoundKind::ReciprocalQuasi => "reciprocal_quasi",
            BoundKind::MonomialQuasiHolder => "monomial_quasi_holder",
        }
    }

    pub fn is_theorem(self) -> bool {
        Self::THEOREMS.contains(&self)
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Self::THEOREMS
            .iter()
            .chain(Self::PROPOSITIONS.iter())
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| domain(format!("unknown theorem '{s}'")))
    }
}

/// One bound applied to one function on one interval.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub theorem: BoundKind,
    pub function_id: String,
    pub interval: Interval,
    pub exponent: Option<Exponent>,
    pub bound: f64,
    pub true_gap: f64,
    /// `bound − true_gap`
    pub slack: f64,
    pub valid: bool,
    /// Only for `monomial_q1`: the value with the halved constant, which
    /// undershoots the gap in the equality case.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub uncorrected_bound: Option<f64>,
}

impl BoundReport {
    pub fn new(
        theorem: BoundKind,
        function_id: impl Into<String>,
        interval: Interval,
        exponent: Option<Exponent>,
        bound: f64,
        true_gap: f64,
    ) -> Self {
        let slack = bound - true_gap;
        Self {
            theorem,
            function_id: function_id.into(),
            interval,
            exponent,
            bound,
            true_gap,
            slack,
            valid: slack >= -VALIDITY_TOL,
            uncorrected_bound: None,
        }
    }
}
