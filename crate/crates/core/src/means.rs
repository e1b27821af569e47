//! Two-variable special means and the midpoint-gap inequalities they satisfy.
//!
//! Each proposition checker evaluates one inequality between means as a
//! [`BoundReport`]: the left side is the midpoint gap of a generating
//! function (`x^n`, `−ln x` or `1/x`) written in closed form through the
//! means, the right side a general bound specialised to that function.
//!
//! Two forms need care:
//! * the `x^n` bound with `q = 1` needs the constant `1/24` with the
//!   arithmetic mean (equivalently `1/48` with the sum); `1/48` with the mean
//!   is reported as `uncorrected_bound` and fails for `n = 3` on `[1, 2]`;
//! * the identric inequality is checked as `ln(A/I) ≤ …`, the nonnegative
//!   orientation, since `I ≤ A`.

use std::fmt;

use serde::Serialize;

use crate::convex::{
    bound_convex_holder, bound_convex_powermean, bound_convex_q1, holder_constant,
};
use crate::error::{domain, Error, Result};
use crate::exponent::{ConjugatePair, Exponent};
use crate::interval::Interval;
use crate::quasiconvex::bound_quasi_powermean;
use crate::report::{BoundKind, BoundReport};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum MeanKind {
    /// Arithmetic
    A,
    /// Geometric
    G,
    /// Harmonic
    H,
    /// Logarithmic
    L,
    /// Identric
    I,
    /// p-logarithmic; `p = −1` is `L` and `p = 0` is `I`.
    Lp(f64),
}

impl fmt::Display for MeanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeanKind::A => f.write_str("A"),
            MeanKind::G => f.write_str("G"),
            MeanKind::H => f.write_str("H"),
            MeanKind::L => f.write_str("L"),
            MeanKind::I => f.write_str("I"),
            MeanKind::Lp(p) => write!(f, "L_{p}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeanValue {
    pub kind: MeanKind,
    pub value: f64,
}

/// Relative width under which `a` and `b` are treated as equal.
const COINCIDENT: f64 = 1e-12;

fn check_positive(a: f64, b: f64) -> Result<()> {
    if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(domain(format!(
            "means need finite positive arguments, got ({a}, {b})"
        )));
    }
    Ok(())
}

/// `(b^{p+1} − a^{p+1}) / ((p+1)(b−a))` written in terms of `d = (b−a)/a`,
/// divided by `a^p`. Stable as `d → 0`.
fn lp_power_ratio(d: f64, p: f64) -> f64 {
    let e = p + 1.0;
    (e * d.ln_1p()).exp_m1() / (e * d)
}

/// Evaluates a mean. Symmetric in `a, b`.
pub fn mean(kind: MeanKind, a: f64, b: f64) -> Result<f64> {
    check_positive(a, b)?;
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    let coincident = hi - lo < COINCIDENT * hi;
    Ok(match kind {
        MeanKind::A => lo + (hi - lo) / 2.0,
        MeanKind::G => geometric(lo, hi),
        MeanKind::H => 2.0 * lo * (hi / (lo + hi)),
        _ if coincident => lo,
        MeanKind::L => logarithmic(lo, hi),
        MeanKind::Lp(-1.0) => logarithmic(lo, hi),
        MeanKind::I => identric(lo, hi),
        MeanKind::Lp(0.0) => identric(lo, hi),
        MeanKind::Lp(p) => {
            if !p.is_finite() {
                return Err(domain(format!(
                    "p-logarithmic mean needs finite p, got {p}"
                )));
            }
            let d = (hi - lo) / lo;
            lo * lp_power_ratio(d, p).powf(1.0 / p)
        }
    })
}

fn geometric(lo: f64, hi: f64) -> f64 {
    let prod = lo * hi;
    if prod.is_normal() {
        prod.sqrt()
    } else {
        lo.sqrt() * hi.sqrt()
    }
}

fn logarithmic(lo: f64, hi: f64) -> f64 {
    let d = (hi - lo) / lo;
    lo * d / d.ln_1p()
}

fn identric(lo: f64, hi: f64) -> f64 {
    let d = (hi - lo) / lo;
    lo * ((1.0 + d) * d.ln_1p() / d - 1.0).exp()
}

/// `L_p(a, b)^p = (b^{p+1} − a^{p+1}) / ((p+1)(b−a))` without the root.
fn lp_pow(a: f64, b: f64, p: f64) -> f64 {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    if hi - lo < COINCIDENT * hi {
        return lo.powf(p);
    }
    lo.powf(p) * lp_power_ratio((hi - lo) / lo, p)
}

/// `H, G, L, I, A` for one pair, in chain order.
pub fn chain_means(a: f64, b: f64) -> Result<[MeanValue; 5]> {
    let kinds = [
        MeanKind::H,
        MeanKind::G,
        MeanKind::L,
        MeanKind::I,
        MeanKind::A,
    ];
    let mut out = [MeanValue {
        kind: MeanKind::A,
        value: 0.0,
    }; 5];
    for (slot, kind) in out.iter_mut().zip(kinds) {
        *slot = MeanValue {
            kind,
            value: mean(kind, a, b)?,
        };
    }
    Ok(out)
}

/// Slack for the chain: `1e-12`, scaled with the arguments.
pub fn chain_tolerance(a: f64, b: f64) -> f64 {
    1e-12 * a.max(b).max(1.0)
}

/// Smallest `upper − lower` over adjacent links of `H ≤ G ≤ L ≤ I ≤ A`.
pub fn chain_margin(a: f64, b: f64) -> Result<f64> {
    let m = chain_means(a, b)?;
    Ok(m.windows(2)
        .map(|w| w[1].value - w[0].value)
        .fold(f64::INFINITY, f64::min))
}

/// `H ≤ G ≤ L ≤ I ≤ A` within [`chain_tolerance`].
pub fn chain_check(a: f64, b: f64) -> Result<bool> {
    Ok(chain_margin(a, b)? >= -chain_tolerance(a, b))
}

fn ordered_interval(a: f64, b: f64) -> Result<Interval> {
    check_positive(a, b)?;
    if a >= b {
        return Err(domain(format!(
            "propositions need 0 < a < b, got ({a}, {b})"
        )));
    }
    Interval::new(a, b)
}

fn check_monomial_power(n: i32) -> Result<f64> {
    let nn = (n as f64 * (n as f64 - 1.0)).abs();
    if nn < 3.0 {
        return Err(Error::Hypothesis(format!(
            "need |n(n-1)| >= 3, got n = {n}"
        )));
    }
    Ok(nn)
}

fn check_q_above_one(q: f64) -> Result<()> {
    if !q.is_finite() || q <= 1.0 {
        return Err(domain(format!("q must be finite and > 1, got {q}")));
    }
    Ok(())
}

/// `|L_n^n − A^n|`, the midpoint gap of `x^n`.
pub fn monomial_gap(a: f64, b: f64, n: i32) -> Result<f64> {
    let iv = ordered_interval(a, b)?;
    let am = mean(MeanKind::A, a, b)?;
    Ok((lp_pow(iv.a(), iv.b(), n as f64) - am.powi(n)).abs())
}

/// `|L^{-1} − A^{-1}|`, the midpoint gap of `1/x`.
pub fn reciprocal_gap(a: f64, b: f64) -> Result<f64> {
    ordered_interval(a, b)?;
    Ok((1.0 / mean(MeanKind::L, a, b)? - 1.0 / mean(MeanKind::A, a, b)?).abs())
}

/// `ln(A/I)`, the midpoint gap of `−ln x`.
pub fn identric_gap(a: f64, b: f64) -> Result<f64> {
    ordered_interval(a, b)?;
    Ok((mean(MeanKind::A, a, b)? / mean(MeanKind::I, a, b)?).ln())
}

fn monomial_id(n: i32) -> String {
    format!("x^{n}")
}

/// `|L_n^n − A^n| ≤ |n(n−1)|·(b−a)²/24·A(a^{n−2}, b^{n−2})`.
///
/// The report also carries the value with `/48` in place of `/24` as
/// `uncorrected_bound`.
pub fn check_prop_monomial_q1(a: f64, b: f64, n: i32) -> Result<BoundReport> {
    let nn = check_monomial_power(n)?;
    let iv = ordered_interval(a, b)?;
    let d2a = nn * a.powi(n - 2);
    let d2b = nn * b.powi(n - 2);
    let bound = bound_convex_q1(iv, d2a, d2b)?;
    let gap = monomial_gap(a, b, n)?;
    let mut r = BoundReport::new(BoundKind::MonomialQ1, monomial_id(n), iv, None, bound, gap);
    let w2 = iv.width() * iv.width();
    r.uncorrected_bound = Some(nn * w2 / 48.0 * mean(MeanKind::A, a.powi(n - 2), b.powi(n - 2))?);
    Ok(r)
}

/// `ln(A/I) ≤ (b−a)²/(8a²b²(2p+1)^{1/p}) · [A(a^{2q}, b^{2q})]^{1/q}`.
pub fn check_prop_identric(a: f64, b: f64, pq: ConjugatePair) -> Result<BoundReport> {
    let iv = ordered_interval(a, b)?;
    let q = pq.q();
    let w2 = iv.width() * iv.width();
    // A(a^{2q}, b^{2q})^{1/q} / (a²b²), scaled by b² to stay finite.
    let r = a / b;
    let power_part = ((1.0 + r.powf(2.0 * q)) / 2.0).powf(1.0 / q) / (a * a);
    let bound = w2 * holder_constant(pq.p()) * power_part;
    let gap = identric_gap(a, b)?;
    Ok(BoundReport::new(
        BoundKind::IdentricHolder,
        "-ln x",
        iv,
        Some(Exponent::Pair(pq)),
        bound,
        gap,
    ))
}

/// `|L_n^n − A^n| ≤ |n(n−1)|(b−a)²/24·[A(a^{q(n−2)}, b^{q(n−2)})]^{1/q}`, `q > 1`.
pub fn check_prop_monomial_pm(a: f64, b: f64, n: i32, q: f64) -> Result<BoundReport> {
    let nn = check_monomial_power(n)?;
    check_q_above_one(q)?;
    let iv = ordered_interval(a, b)?;
    let bound = bound_convex_powermean(iv, nn * a.powi(n - 2), nn * b.powi(n - 2), q)?;
    let gap = monomial_gap(a, b, n)?;
    Ok(BoundReport::new(
        BoundKind::MonomialPowerMean,
        monomial_id(n),
        iv,
        Some(Exponent::Power { q }),
        bound,
        gap,
    ))
}

/// `|L^{-1} − A^{-1}| ≤ (b−a)²/24 · 2^{(q−1)/q}/(a³b³) · [a^{3q} + b^{3q}]^{1/q}`, `q > 1`.
pub fn check_prop_reciprocal_pm(a: f64, b: f64, q: f64) -> Result<BoundReport> {
    check_q_above_one(q)?;
    let iv = ordered_interval(a, b)?;
    let w2 = iv.width() * iv.width();
    // [a^{3q} + b^{3q}]^{1/q} / (a³b³) = [1 + (a/b)^{3q}]^{1/q} / a³
    let r = a / b;
    let tail = (1.0 + r.powf(3.0 * q)).powf(1.0 / q) / (a * a * a);
    let bound = w2 / 24.0 * 2f64.powf((q - 1.0) / q) * tail;
    let gap = reciprocal_gap(a, b)?;
    Ok(BoundReport::new(
        BoundKind::ReciprocalPowerMean,
        "1/x",
        iv,
        Some(Exponent::Power { q }),
        bound,
        gap,
    ))
}

/// `|L^{-1} − A^{-1}| ≤ (b−a)²/24 · sup{(2/a³)^q, (2/b³)^q}^{1/q}`, `q ≥ 1`.
///
/// `a < b < 0` is accepted too, since only `0 ∉ [a, b]` is needed; means of
/// negative pairs are taken as minus the means of `(−b, −a)`.
pub fn check_prop_reciprocal_quasi(a: f64, b: f64, q: f64) -> Result<BoundReport> {
    if !a.is_finite() || a >= b || !b.is_finite() {
        return Err(domain(format!("need finite a < b, got ({a}, {b})")));
    }
    if a <= 0.0 && b >= 0.0 {
        return Err(domain(format!("interval [{a}, {b}] contains 0")));
    }
    let iv = Interval::new(a, b)?;
    let bound = bound_quasi_powermean(iv, (2.0 / a.powi(3)).abs(), (2.0 / b.powi(3)).abs(), q)?;
    let gap = if a > 0.0 {
        reciprocal_gap(a, b)?
    } else {
        reciprocal_gap(-b, -a)?
    };
    Ok(BoundReport::new(
        BoundKind::ReciprocalQuasi,
        "1/x",
        iv,
        Some(Exponent::Power { q }),
        bound,
        gap,
    ))
}

/// `|L_n^n − A^n| ≤ |n(n−1)|(b−a)²/(8(2p+1)^{1/p})·max(a^{n−2}, b^{n−2})`.
pub fn check_prop_monomial_quasi(a: f64, b: f64, n: i32, pq: ConjugatePair) -> Result<BoundReport> {
    let nn = check_monomial_power(n)?;
    let iv = ordered_interval(a, b)?;
    let w2 = iv.width() * iv.width();
    let bound = nn * w2 * holder_constant(pq.p()) * a.powi(n - 2).max(b.powi(n - 2));
    let gap = monomial_gap(a, b, n)?;
    Ok(BoundReport::new(
        BoundKind::MonomialQuasiHolder,
        monomial_id(n),
        iv,
        Some(Exponent::Pair(pq)),
        bound,
        gap,
    ))
}

/// The identric bound routed through the general Hölder formula with
/// `|f''| = 1/x²`; agrees with [`check_prop_identric`].
pub fn identric_bound_via_theorem(a: f64, b: f64, pq: ConjugatePair) -> Result<f64> {
    let iv = ordered_interval(a, b)?;
    bound_convex_holder(iv, 1.0 / (a * a), 1.0 / (b * b), pq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(x: f64, y: f64, tol: f64) -> bool {
        (x - y).abs() <= tol
    }

    #[test]
    fn mean_examples() {
        assert_eq!(mean(MeanKind::A, 1.0, 2.0).unwrap(), 1.5);
        assert_eq!(mean(MeanKind::G, 4.0, 9.0).unwrap(), 6.0);
        assert!(close(
            mean(MeanKind::H, 1.0, 2.0).unwrap(),
            4.0 / 3.0,
            1e-15
        ));
        assert!(close(
            mean(MeanKind::L, 1.0, 2.0).unwrap(),
            std::f64::consts::LOG2_E,
            1e-15
        ));
        assert!(close(
            mean(MeanKind::I, 1.0, 2.0).unwrap(),
            1.471_517_764_685_769_3,
            1e-15
        ));
        assert!(close(
            mean(MeanKind::Lp(2.0), 1.0, 2.0).unwrap(),
            1.527_525_231_651_946_7,
            1e-15
        ));
        assert!(close(
            mean(MeanKind::Lp(3.0), 1.0, 2.0).unwrap(),
            1.553_616_252_976_929_4,
            1e-15
        ));
    }

    #[test]
    fn lp_limits_dispatch() {
        assert_eq!(
            mean(MeanKind::Lp(-1.0), 1.0, 3.0).unwrap(),
            mean(MeanKind::L, 1.0, 3.0).unwrap()
        );
        assert_eq!(
            mean(MeanKind::Lp(0.0), 1.0, 3.0).unwrap(),
            mean(MeanKind::I, 1.0, 3.0).unwrap()
        );
        // continuity into the limits
        let l = mean(MeanKind::L, 1.0, 3.0).unwrap();
        assert!(close(
            mean(MeanKind::Lp(-1.0 + 1e-7), 1.0, 3.0).unwrap(),
            l,
            1e-6
        ));
        let i = mean(MeanKind::I, 1.0, 3.0).unwrap();
        assert!(close(mean(MeanKind::Lp(1e-7), 1.0, 3.0).unwrap(), i, 1e-6));
    }

    #[test]
    fn domain_errors() {
        assert!(mean(MeanKind::A, -1.0, 2.0).is_err());
        assert!(mean(MeanKind::L, 0.0, 2.0).is_err());
        assert!(mean(MeanKind::Lp(f64::NAN), 1.0, 2.0).is_err());
        assert!(chain_check(-1.0, 2.0).is_err());
    }

    #[test]
    fn coincident_arguments_collapse() {
        for kind in [
            MeanKind::A,
            MeanKind::G,
            MeanKind::H,
            MeanKind::L,
            MeanKind::I,
            MeanKind::Lp(3.0),
        ] {
            assert_eq!(mean(kind, 5.0, 5.0).unwrap(), 5.0, "{kind}");
        }
        assert!(chain_check(5.0, 5.0).unwrap());
    }

    #[test]
    fn chain_examples() {
        assert!(chain_check(1.0, 2.0).unwrap());
        assert!(chain_check(0.1, 10.0).unwrap());
        let m = chain_means(0.1, 10.0).unwrap();
        assert!(close(m[2].value, 2.149_757_685_421_096_5, 1e-14));
        assert!(close(m[3].value, 3.853_962_976_986_617_6, 1e-14));
    }

    #[test]
    fn monomial_q1_equality_and_uncorrected_counterexample() {
        let r = check_prop_monomial_q1(1.0, 2.0, 3).unwrap();
        assert!(close(r.true_gap, 0.375, 1e-12));
        assert!(close(r.bound, 0.375, 1e-12));
        assert!(r.valid);
        let literal = r.uncorrected_bound.unwrap();
        assert!(close(literal, 0.1875, 1e-15));
        assert!(literal < r.true_gap);
    }

    #[test]
    fn monomial_q1_narrow() {
        let r = check_prop_monomial_q1(1.0, 1.01, 4).unwrap();
        assert!(close(r.true_gap, 5.050_137_5e-5, 1e-13));
        assert!(r.bound >= r.true_gap);
        assert!(check_prop_monomial_q1(1.0, 2.0, 2).is_err());
        assert!(check_prop_monomial_q1(1.0, 2.0, -1).is_err());
    }

    #[test]
    fn identric_examples() {
        let pq = ConjugatePair::from_p(2.0).unwrap();
        let r = check_prop_identric(1.0, 2.0, pq).unwrap();
        assert!(close(r.true_gap, 0.019_170_746_988_273_763, 1e-15));
        assert!(close(r.bound, 0.040_745_015_032_516_554, 1e-15));
        assert!(r.valid);
        let r = check_prop_identric(2.0, 3.0, pq).unwrap();
        assert!(close(r.true_gap, 0.006_748_226_989_716_61, 1e-15));
        assert!(close(r.bound, 0.010_814_174_654_442_665, 1e-15));
        let eps = 1e-4;
        let r = check_prop_identric(1.0, 1.0 + eps, pq).unwrap();
        assert!(r.true_gap < 10.0 * eps * eps && r.bound < 10.0 * eps * eps);
        assert!(r.valid);
    }

    #[test]
    fn identric_matches_general_theorem() {
        for (a, b, p) in [(1.0, 2.0, 2.0), (0.3, 5.0, 1.5), (2.0, 2.5, 7.0)] {
            let pq = ConjugatePair::from_p(p).unwrap();
            let direct = check_prop_identric(a, b, pq).unwrap().bound;
            let routed = identric_bound_via_theorem(a, b, pq).unwrap();
            assert!(close(direct, routed, 1e-14 * routed.max(1.0)));
        }
    }

    #[test]
    fn monomial_pm_examples() {
        let r = check_prop_monomial_pm(1.0, 2.0, 3, 2.0).unwrap();
        assert!(close(r.bound, 0.395_284_707_521_047_4, 1e-15));
        assert!(r.valid);
        let r = check_prop_monomial_pm(1.0, 2.0, 3, 1.0 + 1e-7).unwrap();
        assert!(close(r.bound, 0.375, 1e-8));
        let r = check_prop_monomial_pm(1.0, 2.0, 4, 2.0).unwrap();
        assert!(close(r.true_gap, 1.1375, 1e-12));
        assert!(close(r.bound, 1.457_737_973_711_325, 1e-14));
        assert!(check_prop_monomial_pm(1.0, 2.0, 3, 1.0).is_err());
    }

    #[test]
    fn reciprocal_pm_examples() {
        let r = check_prop_reciprocal_pm(1.0, 2.0, 2.0).unwrap();
        assert!(close(r.true_gap, 0.026_480_513_893_278_643, 1e-15));
        assert!(close(r.bound, 0.059_384_136_723_913_44, 1e-15));
        let r = check_prop_reciprocal_pm(2.0, 3.0, 3.0).unwrap();
        assert!(close(r.true_gap, 0.005_465_108_108_164_382, 1e-15));
        assert!(close(r.bound, 0.008_338_788_460_746_103, 1e-15));
        assert!(check_prop_reciprocal_pm(1.0, 2.0, 1.0).is_err());
    }

    #[test]
    fn reciprocal_quasi_examples() {
        let r = check_prop_reciprocal_quasi(1.0, 2.0, 1.0).unwrap();
        assert!(close(r.bound, 1.0 / 12.0, 1e-16));
        let r7 = check_prop_reciprocal_quasi(1.0, 2.0, 7.0).unwrap();
        assert_eq!(r7.bound, r.bound);
        let r = check_prop_reciprocal_quasi(2.0, 4.0, 1.0).unwrap();
        assert!(close(r.bound, 1.0 / 24.0, 1e-16));
        assert!(close(r.true_gap, 0.013_240_256_946_639_321, 1e-15));
        let neg = check_prop_reciprocal_quasi(-2.0, -1.0, 1.0).unwrap();
        assert!(close(neg.true_gap, 0.026_480_513_893_278_643, 1e-15));
        assert!(check_prop_reciprocal_quasi(-1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn monomial_quasi_examples() {
        let pq = ConjugatePair::from_p(2.0).unwrap();
        let r = check_prop_monomial_quasi(1.0, 2.0, 3, pq).unwrap();
        assert!(close(r.bound, 0.670_820_393_249_936_9, 1e-14));
        let r = check_prop_monomial_quasi(1.0, 2.0, 4, pq).unwrap();
        assert!(close(r.bound, 2.683_281_572_999_747_6, 1e-14));
        let r = check_prop_monomial_quasi(1.0, 2.0, -2, pq).unwrap();
        assert!(close(r.bound, 0.335_410_196_624_968_45, 1e-15));
        assert!(close(r.true_gap, 1.0 / 18.0, 1e-15));
        assert!(r.valid);
    }

    proptest! {
        #[test]
        fn symmetric_and_homogeneous(a in 0.01f64..50.0, b in 0.01f64..50.0, lambda in 0.1f64..10.0) {
            for kind in [MeanKind::A, MeanKind::G, MeanKind::H, MeanKind::L, MeanKind::I, MeanKind::Lp(2.5), MeanKind::Lp(-3.0)] {
                let m = mean(kind, a, b).unwrap();
                prop_assert_eq!(m, mean(kind, b, a).unwrap());
                let scaled = mean(kind, lambda * a, lambda * b).unwrap();
                prop_assert!((scaled - lambda * m).abs() <= 1e-12 * scaled.max(1.0));
                prop_assert!(m >= a.min(b) * (1.0 - 1e-14) && m <= a.max(b) * (1.0 + 1e-14));
            }
        }
    }
}
