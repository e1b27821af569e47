//! The peak kernel `m(t)` that turns the midpoint gap into a weighted
//! integral of `f''`, and its moments in closed form.

use crate::error::{domain, Result};

/// `t²` on `[0, ½)` and `(1 − t)²` on `[½, 1]`.
pub fn peak_kernel(t: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&t) {
        return Err(domain(format!(
            "kernel argument must lie in [0, 1], got {t}"
        )));
    }
    Ok(if t < 0.5 {
        t * t
    } else {
        (1.0 - t) * (1.0 - t)
    })
}

/// `∫₀¹ m(t)^p dt = 1 / (4^p (2p + 1))` for `p ≥ 1`.
pub fn lp_norm_integral(p: f64) -> Result<f64> {
    if !p.is_finite() || p < 1.0 {
        return Err(domain(format!(
            "kernel moment needs finite p >= 1, got {p}"
        )));
    }
    Ok(1.0 / (4f64.powf(p) * (2.0 * p + 1.0)))
}

/// `∫₀¹ m(t)·t dt = 1/24`; by symmetry the `(1 − t)` moment is the same.
pub fn weighted_moment() -> f64 {
    1.0 / 24.0
}

/// Closed-form kernel moments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelMoments {
    /// `∫₀¹ m dt`
    pub l1: f64,
    /// `∫₀¹ m·t dt`
    pub tmoment: f64,
}

impl KernelMoments {
    pub fn closed_form() -> Self {
        Self {
            l1: 1.0 / 12.0,
            tmoment: weighted_moment(),
        }
    }

    /// `∫₀¹ m^p dt`.
    pub fn lp(&self, p: f64) -> Result<f64> {
        lp_norm_integral(p)
    }

    /// `∫₀¹ m(t)[t·x + (1 − t)·y] dt = (x + y)/24`, the convex-combination
    /// integral behind the q = 1 bounds.
    pub fn weighted(&self, x: f64, y: f64) -> f64 {
        self.tmoment * x + (self.l1 - self.tmoment) * y
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::Interval;
    use crate::oracle::integrate;
    use proptest::prelude::*;

    fn quad_on_halves(g: impl Fn(f64) -> f64) -> f64 {
        let left = integrate(&g, Interval::new(0.0, 0.5).unwrap(), 1e-15).unwrap();
        let right = integrate(&g, Interval::new(0.5, 1.0).unwrap(), 1e-15).unwrap();
        left.value + right.value
    }

    #[test]
    fn kernel_values() {
        assert_eq!(peak_kernel(0.25).unwrap(), 0.0625);
        assert_eq!(peak_kernel(0.5).unwrap(), 0.25);
        assert_eq!(peak_kernel(0.75).unwrap(), 0.0625);
        assert_eq!(peak_kernel(0.0).unwrap(), 0.0);
        assert_eq!(peak_kernel(1.0).unwrap(), 0.0);
        assert!(peak_kernel(-0.1).is_err());
        assert!(peak_kernel(1.0 + 1e-12).is_err());
        assert!(peak_kernel(f64::NAN).is_err());
    }

    #[test]
    fn closed_form_moments() {
        assert_eq!(lp_norm_integral(1.0).unwrap(), 1.0 / 12.0);
        assert_eq!(lp_norm_integral(2.0).unwrap(), 0.0125);
        assert!((lp_norm_integral(3.0).unwrap() - 0.002_232_142_857_142_857).abs() < 1e-17);
        assert!(lp_norm_integral(0.99).is_err());
        let m = KernelMoments::closed_form();
        assert_eq!(m.lp(1.0).unwrap(), m.l1);
        assert_eq!(weighted_moment(), 1.0 / 24.0);
        assert!((m.weighted(1.0, 1.0) - 1.0 / 12.0).abs() < 1e-17);
    }

    #[test]
    fn quadrature_agrees_with_closed_forms() {
        for p in [1.0, 1.5, 2.0, 3.0, 10.0] {
            let numeric = quad_on_halves(|t| peak_kernel(t).unwrap().powf(p));
            let closed = lp_norm_integral(p).unwrap();
            assert!((numeric - closed).abs() < 1e-10, "p = {p}");
        }
        let tm = quad_on_halves(|t| peak_kernel(t).unwrap() * t);
        let sm = quad_on_halves(|t| peak_kernel(t).unwrap() * (1.0 - t));
        assert!((tm - 1.0 / 24.0).abs() < 1e-12);
        assert!((sm - 1.0 / 24.0).abs() < 1e-12);
        assert!((tm + sm - 1.0 / 12.0).abs() < 1e-12);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn symmetric_and_bounded(t in 0.0f64..=1.0) {
            let m = peak_kernel(t).unwrap();
            let mirrored = peak_kernel(1.0 - t).unwrap();
            prop_assert!((m - mirrored).abs() <= 1e-15);
            prop_assert!((0.0..=0.25).contains(&m));
            if t != 0.5 {
                prop_assert!(m < 0.25);
            }
        }
    }
}
