//! Composite midpoint integration with a certified error radius.
//!
//! On each of `n` equal pieces of width `h` the midpoint rule misses the
//! integral by at most `h³/24` times the endpoint average (convex `|f''|`)
//! or endpoint maximum (quasi-convex `|f''|`) of `|f''|`. Both classes are
//! closed under restriction, so checking the whole interval once covers
//! every piece. The radius is exact in real arithmetic. When it is nearly
//! tight (smooth `f''`, many panels) the true error can sit within a few
//! ulps of it, so [`CertifiedIntegral::encloses`] also admits the
//! `rounding` allowance of the compensated panel sum.

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::function::TestFunction;
use crate::interval::Interval;
use crate::oracle::{check_convex_abs_d2, check_quasiconvex_abs_d2};
use crate::theorem::CLASS_GRID;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertRule {
    /// Endpoint average of `|f''|`; needs convex `|f''|`.
    ConvexQ1,
    /// Endpoint maximum of `|f''|`; needs quasi-convex `|f''|`.
    QuasiQ1,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CertifiedIntegral {
    pub estimate: f64,
    pub error_radius: f64,
    /// Allowance for rounding in the panel values and their sum:
    /// `8ε · Σ h·(|f(m)| + |m·f'(m)|)` over panel midpoints `m`.
    pub rounding: f64,
    pub subintervals: usize,
    pub rule: CertRule,
}

impl CertifiedIntegral {
    pub fn lower(&self) -> f64 {
        self.estimate - self.error_radius - self.rounding
    }

    pub fn upper(&self) -> f64 {
        self.estimate + self.error_radius + self.rounding
    }

    pub fn encloses(&self, value: f64) -> bool {
        (value - self.estimate).abs() <= self.error_radius + self.rounding
    }
}

/// Largest subdivision [`refine_to_tolerance`] will try.
pub const MAX_SUBINTERVALS: usize = 1 << 20;

/// Compensated (Neumaier) running sum.
#[derive(Default)]
struct Neumaier {
    sum: f64,
    carry: f64,
}

impl Neumaier {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.carry
    }
}

/// Runs the class sampler matching `rule` on `iv`.
pub fn hypothesis_holds(func: &TestFunction, iv: Interval, rule: CertRule) -> bool {
    match rule {
        CertRule::ConvexQ1 => check_convex_abs_d2(func, iv, CLASS_GRID),
        CertRule::QuasiQ1 => check_quasiconvex_abs_d2(func, iv, CLASS_GRID),
    }
}

/// The first rule whose hypothesis survives the samplers, preferring `ConvexQ1`.
pub fn select_rule(func: &TestFunction, iv: Interval) -> Option<CertRule> {
    [CertRule::ConvexQ1, CertRule::QuasiQ1]
        .into_iter()
        .find(|&r| hypothesis_holds(func, iv, r))
}

fn check_hypothesis(func: &TestFunction, iv: Interval, rule: CertRule) -> Result<()> {
    func.check_interval(&iv)?;
    if hypothesis_holds(func, iv, rule) {
        Ok(())
    } else {
        Err(Error::Hypothesis(format!(
            "class check failed: |f''| of {} on {iv} does not fit {rule:?}",
            func.id()
        )))
    }
}

/// `n`-panel composite midpoint rule with its error radius, after checking
/// the class hypothesis of `rule` on `iv`.
pub fn integrate_certified(
    func: &TestFunction,
    iv: Interval,
    n: usize,
    rule: CertRule,
) -> Result<CertifiedIntegral> {
    check_hypothesis(func, iv, rule)?;
    integrate_certified_assumed(func, iv, n, rule)
}

/// As [`integrate_certified`] but trusts the caller's class assertion.
pub fn integrate_certified_assumed(
    func: &TestFunction,
    iv: Interval,
    n: usize,
    rule: CertRule,
) -> Result<CertifiedIntegral> {
    if n < 1 {
        return Err(domain("need at least one subinterval"));
    }
    func.check_interval(&iv)?;
    let mut estimate = Neumaier::default();
    let mut radius = 0.0;
    let mut magnitude = 0.0;
    for piece in iv.partition(n) {
        let h = piece.width();
        let m = piece.midpoint();
        let term = h * func.value(m);
        estimate.add(term);
        magnitude += term.abs() + h * (m * func.d1(m)).abs();
        let (l, r) = (func.abs_d2(piece.a()), func.abs_d2(piece.b()));
        let curvature = match rule {
            CertRule::ConvexQ1 => (l + r) / 2.0,
            CertRule::QuasiQ1 => l.max(r),
        };
        radius += h * h * h / 24.0 * curvature;
    }
    let estimate = estimate.total();
    if !estimate.is_finite() || !radius.is_finite() || !magnitude.is_finite() {
        return Err(Error::Evaluation { x: iv.midpoint() });
    }
    Ok(CertifiedIntegral {
        estimate,
        error_radius: radius,
        rounding: 8.0 * f64::EPSILON * magnitude,
        subintervals: n,
        rule,
    })
}

/// Doubles the panel count from 1 until the radius is at most `tol`.
pub fn refine_to_tolerance(
    func: &TestFunction,
    iv: Interval,
    tol: f64,
    rule: CertRule,
) -> Result<CertifiedIntegral> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    check_hypothesis(func, iv, rule)?;
    let mut n = 1;
    loop {
        let c = integrate_certified_assumed(func, iv, n, rule)?;
        if c.error_radius <= tol {
            return Ok(c);
        }
        if n >= MAX_SUBINTERVALS {
            return Err(Error::Convergence(format!(
                "radius {:e} still above {tol:e} at {n} subintervals",
                c.error_radius
            )));
        }
        n *= 2;
    }
}
