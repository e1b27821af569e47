//! Numerical check of the kernel identity
//!
//! ```text
//! (1/(b−a))∫ₐᵇ f − f((a+b)/2) = ((b−a)²/4) ∫₀¹ m(t)[f''(ta+(1−t)b) + f''(tb+(1−t)a)] dt
//! ```
//!
//! which underlies every bound in this crate.

use crate::error::Result;
use crate::function::TestFunction;
use crate::interval::Interval;
use crate::kernel::peak_kernel;
use crate::oracle::{integrate, signed_midpoint_gap};

/// Leading coefficient of the kernel integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaScale {
    /// `(b−a)²/4`, the coefficient that makes the identity hold.
    Quarter,
    /// `(b−a)²/2`. Off by a factor of two; kept to document the discrepancy.
    Half,
}

impl LemmaScale {
    fn divisor(self) -> f64 {
        match self {
            LemmaScale::Quarter => 4.0,
            LemmaScale::Half => 2.0,
        }
    }
}

/// Right-hand side of the identity with coefficient `(b−a)²/4`.
pub fn identity_rhs(func: &TestFunction, iv: Interval, tol: f64) -> Result<f64> {
    identity_rhs_scaled(func, iv, tol, LemmaScale::Quarter)
}

pub fn identity_rhs_scaled(
    func: &TestFunction,
    iv: Interval,
    tol: f64,
    scale: LemmaScale,
) -> Result<f64> {
    func.check_interval(&iv)?;
    let integrand = |t: f64| {
        let m = peak_kernel(t).unwrap_or(0.0);
        m * (func.d2(iv.point(t)) + func.d2(iv.point(1.0 - t)))
    };
    let w2 = iv.width() * iv.width();
    // The kernel has a kink at t = 1/2; integrate each half separately.
    let half_tol = 0.5 * tol * scale.divisor() / w2;
    let left = integrate(integrand, Interval::new(0.0, 0.5)?, half_tol)?;
    let right = integrate(integrand, Interval::new(0.5, 1.0)?, half_tol)?;
    Ok(w2 / scale.divisor() * (left.value + right.value))
}

/// `|LHS − RHS|` with the signed midpoint gap on the left.
pub fn identity_residual(func: &TestFunction, iv: Interval, tol: f64) -> Result<f64> {
    let lhs = signed_midpoint_gap(func, iv, tol)?;
    let rhs = identity_rhs(func, iv, tol)?;
    Ok((lhs - rhs).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::find;

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    #[test]
    fn rhs_examples() {
        let r = identity_rhs(&find("x^2").unwrap(), iv(0.0, 1.0), 1e-12).unwrap();
        assert!((r - 1.0 / 12.0).abs() < 1e-12);
        let r = identity_rhs(&find("3x+1").unwrap(), iv(0.0, 1.0), 1e-12).unwrap();
        assert_eq!(r, 0.0);
        let r = identity_rhs(&find("x^3").unwrap(), iv(1.0, 2.0), 1e-12).unwrap();
        assert!((r - 0.375).abs() < 1e-12);
    }

    #[test]
    fn residual_examples() {
        for (name, a, b) in [("x^4", 0.0, 1.0), ("1/x", 1.0, 2.0), ("exp", -1.0, 1.0)] {
            let r = identity_residual(&find(name).unwrap(), iv(a, b), 1e-12).unwrap();
            assert!(r < 1e-9, "{name}: {r}");
        }
    }

    #[test]
    fn half_coefficient_doubles_the_rhs() {
        let f = find("x^2").unwrap();
        let doubled = identity_rhs_scaled(&f, iv(0.0, 1.0), 1e-12, LemmaScale::Half).unwrap();
        assert!((doubled - 1.0 / 6.0).abs() < 1e-10);
        let gap = signed_midpoint_gap(&f, iv(0.0, 1.0), 1e-12).unwrap();
        assert!(((doubled - gap).abs() - 1.0 / 12.0).abs() < 1e-10);
    }

    #[test]
    fn outside_domain_is_rejected() {
        assert!(identity_rhs(&find("1/x").unwrap(), iv(-1.0, 1.0), 1e-12).is_err());
    }
}
