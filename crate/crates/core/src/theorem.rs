//! Applies a general bound to a [`TestFunction`]: checks the class
//! hypothesis with the oracle samplers, evaluates the bound from endpoint
//! derivatives, and compares it with the oracle midpoint gap.

use crate::convex::{
    baseline_first_derivative, bound_convex_holder, bound_convex_powermean, bound_convex_q1,
    EndpointValues,
};
use crate::error::{domain, Error, Result};
use crate::exponent::{ConjugatePair, Exponent};
use crate::function::TestFunction;
use crate::interval::Interval;
use crate::oracle::{
    check_convex_abs_d1, check_convex_abs_d2, check_monotone_abs_d2, check_quasiconvex_abs_d2,
    midpoint_gap, Monotone,
};
use crate::quasiconvex::{
    bound_quasi_holder, bound_quasi_monotone, bound_quasi_powermean, bound_quasi_q1,
};
use crate::report::{BoundKind, BoundReport};

/// Grid used by the class samplers when gating a theorem.
pub const CLASS_GRID: usize = 64;

/// Quadrature tolerance for true gaps.
pub const GAP_TOL: f64 = 1e-12;

/// Direction suggested by the endpoint values of `|f''|`.
pub fn endpoint_direction(func: &TestFunction, iv: Interval) -> Monotone {
    let e = EndpointValues::second(func, iv);
    if e.at_a <= e.at_b {
        Monotone::Increasing
    } else {
        Monotone::Decreasing
    }
}

/// Whether the samplers find no counterexample to the hypothesis of `kind`
/// for `func` on `iv`. Propositions are not theorems and return `false`.
pub fn hypothesis_holds(kind: BoundKind, func: &TestFunction, iv: Interval) -> bool {
    match kind {
        BoundKind::ConvexQ1 | BoundKind::ConvexHolder | BoundKind::ConvexPowerMean => {
            check_convex_abs_d2(func, iv, CLASS_GRID)
        }
        BoundKind::QuasiQ1 | BoundKind::QuasiHolder | BoundKind::QuasiPowerMean => {
            check_quasiconvex_abs_d2(func, iv, CLASS_GRID)
        }
        BoundKind::QuasiMonotone => {
            check_monotone_abs_d2(func, iv, CLASS_GRID, endpoint_direction(func, iv))
        }
        BoundKind::BaselineQ1 | BoundKind::BaselinePowerMean => {
            check_convex_abs_d1(func, iv, CLASS_GRID)
        }
        _ => false,
    }
}

fn pair_from(exponent: Option<Exponent>) -> Result<ConjugatePair> {
    match exponent {
        None => ConjugatePair::from_p(2.0),
        Some(Exponent::Pair(pq)) => Ok(pq),
        Some(Exponent::Power { q }) => ConjugatePair::from_q(q),
    }
}

fn q_from(exponent: Option<Exponent>) -> f64 {
    exponent.map(|e| e.q()).unwrap_or(2.0)
}

/// Bound value only, with no hypothesis check and no gap.
pub fn bound_value(
    kind: BoundKind,
    func: &TestFunction,
    iv: Interval,
    exponent: Option<Exponent>,
) -> Result<(f64, Option<Exponent>)> {
    func.check_interval(&iv)?;
    let d2 = EndpointValues::second(func, iv);
    let (a2, b2) = (d2.at_a, d2.at_b);
    Ok(match kind {
        BoundKind::ConvexQ1 => (bound_convex_q1(iv, a2, b2)?, None),
        BoundKind::ConvexHolder => {
            let pq = pair_from(exponent)?;
            (
                bound_convex_holder(iv, a2, b2, pq)?,
                Some(Exponent::Pair(pq)),
            )
        }
        BoundKind::ConvexPowerMean => {
            let q = q_from(exponent);
            (
                bound_convex_powermean(iv, a2, b2, q)?,
                Some(Exponent::Power { q }),
            )
        }
        BoundKind::QuasiQ1 => (bound_quasi_q1(iv, a2, b2)?, None),
        BoundKind::QuasiMonotone => (
            bound_quasi_monotone(iv, func, endpoint_direction(func, iv))?,
            None,
        ),
        BoundKind::QuasiHolder => {
            let pq = pair_from(exponent)?;
            (
                bound_quasi_holder(iv, a2, b2, pq)?,
                Some(Exponent::Pair(pq)),
            )
        }
        BoundKind::QuasiPowerMean => {
            let q = q_from(exponent);
            (
                bound_quasi_powermean(iv, a2, b2, q)?,
                Some(Exponent::Power { q }),
            )
        }
        BoundKind::BaselineQ1 | BoundKind::BaselinePowerMean => {
            let d1 = EndpointValues::first(func, iv);
            let q = if kind == BoundKind::BaselineQ1 {
                1.0
            } else {
                q_from(exponent)
            };
            let e = (kind == BoundKind::BaselinePowerMean).then_some(Exponent::Power { q });
            (baseline_first_derivative(iv, d1.at_a, d1.at_b, q)?, e)
        }
        other => {
            return Err(domain(format!(
                "'{other}' is a special-means proposition; use the means module"
            )))
        }
    })
}

/// Evaluates `kind` after confirming its hypothesis with the samplers.
pub fn evaluate(
    kind: BoundKind,
    func: &TestFunction,
    iv: Interval,
    exponent: Option<Exponent>,
) -> Result<BoundReport> {
    func.check_interval(&iv)?;
    if !kind.is_theorem() {
        return Err(domain(format!("'{kind}' is not a general theorem")));
    }
    if !hypothesis_holds(kind, func, iv) {
        return Err(Error::Hypothesis(format!(
            "class check failed: {} on {iv} does not satisfy the hypothesis of {kind}",
            func.id()
        )));
    }
    evaluate_unchecked(kind, func, iv, exponent)
}

/// Evaluates `kind` without gating on the hypothesis.
pub fn evaluate_unchecked(
    kind: BoundKind,
    func: &TestFunction,
    iv: Interval,
    exponent: Option<Exponent>,
) -> Result<BoundReport> {
    let (bound, used) = bound_value(kind, func, iv, exponent)?;
    let gap = midpoint_gap(func, iv, GAP_TOL)?;
    Ok(BoundReport::new(kind, func.id(), iv, used, bound, gap))
}
