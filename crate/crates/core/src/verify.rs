//! Seeded property suites over the built-in catalog.
//!
//! Every suite is a pure function of `(seed, cases)`: random draws come from
//! ChaCha8 streams keyed by catalog position, work is spread over threads,
//! and records are returned in catalog order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::exponent::{ConjugatePair, Exponent};
use crate::function::{builtin_catalog, TestFunction};
use crate::identity::identity_rhs;
use crate::interval::Interval;
use crate::means::{
    chain_check, chain_margin, check_prop_identric, check_prop_monomial_pm, check_prop_monomial_q1,
    check_prop_monomial_quasi, check_prop_reciprocal_pm, check_prop_reciprocal_quasi, mean,
    MeanKind,
};
use crate::oracle::signed_midpoint_gap;
use crate::report::{BoundKind, BoundReport};
use crate::theorem::{bound_value, hypothesis_holds, GAP_TOL};

/// Identity residuals must stay below this.
pub const IDENTITY_TOL: f64 = 1e-9;

/// Quadrature tolerance used for both sides of the identity.
pub const IDENTITY_QUAD_TOL: f64 = 1e-11;

/// The `p` grid for the `L_p` monotonicity check; `−1` and `0` hit `L` and `I`.
pub const LP_GRID: [f64; 19] = [
    -5.0, -4.0, -3.0, -2.0, -1.5, -1.01, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0,
    8.0, 10.0,
];

/// Range the means suite draws its arguments from.
pub const MEANS_RANGE: (f64, f64) = (0.1, 4.0);

const MONOMIAL_POWERS: [i32; 6] = [-4, -3, -2, 3, 4, 5];

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Identity,
    Convex,
    Quasiconvex,
    Means,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Identity => "identity",
            Suite::Convex => "convex",
            Suite::Quasiconvex => "quasiconvex",
            Suite::Means => "means",
            Suite::All => "all",
        }
    }
}

/// One line of suite output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyRecord {
    pub suite: &'static str,
    pub function: String,
    pub interval: Interval,
    pub theorem: String,
    pub bound: f64,
    pub gap: f64,
    pub slack: f64,
    pub pass: bool,
}

impl VerifyRecord {
    fn from_report(suite: Suite, r: &BoundReport) -> Self {
        Self {
            suite: suite.name(),
            function: r.function_id.clone(),
            interval: r.interval,
            theorem: r.theorem.name().to_string(),
            bound: r.bound,
            gap: r.true_gap,
            slack: r.slack,
            pass: r.valid,
        }
    }
}

/// A deterministic generator for catalog entry `index` under `seed`.
pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A random subinterval of `window` no narrower than `1e-6` of its width.
pub fn random_subinterval(rng: &mut ChaCha8Rng, window: Interval) -> Interval {
    loop {
        let u = rng.gen_range(window.a()..=window.b());
        let v = rng.gen_range(window.a()..=window.b());
        let (a, b) = if u <= v { (u, v) } else { (v, u) };
        if b - a >= 1e-6 * window.width() {
            if let Ok(iv) = Interval::new(a, b) {
                return iv;
            }
        }
    }
}

/// The reference interval followed by `cases` random subintervals of the window.
pub fn sample_intervals(func: &TestFunction, rng: &mut ChaCha8Rng, cases: usize) -> Vec<Interval> {
    std::iter::once(func.reference_interval())
        .chain((0..cases).map(|_| random_subinterval(rng, func.window())))
        .collect()
}

fn per_function<F>(seed: u64, cases: usize, work: F) -> Result<Vec<VerifyRecord>>
where
    F: Fn(&TestFunction, &mut ChaCha8Rng, &[Interval]) -> Result<Vec<VerifyRecord>> + Sync,
{
    let catalog = builtin_catalog();
    let chunks: Result<Vec<Vec<VerifyRecord>>> = catalog
        .par_iter()
        .enumerate()
        .map(|(i, func)| {
            let mut rng = stream(seed, i as u64);
            let intervals = sample_intervals(func, &mut rng, cases);
            work(func, &mut rng, &intervals)
        })
        .collect();
    Ok(chunks?.into_iter().flatten().collect())
}

fn identity_suite(seed: u64, cases: usize) -> Result<Vec<VerifyRecord>> {
    per_function(seed, cases, |func, _, intervals| {
        intervals
            .iter()
            .map(|&iv| {
                let lhs = signed_midpoint_gap(func, iv, IDENTITY_QUAD_TOL)?;
                let rhs = identity_rhs(func, iv, IDENTITY_QUAD_TOL)?;
                let residual = (lhs - rhs).abs();
                Ok(VerifyRecord {
                    suite: Suite::Identity.name(),
                    function: func.id().to_string(),
                    interval: iv,
                    theorem: "identity".to_string(),
                    bound: rhs,
                    gap: lhs,
                    slack: IDENTITY_TOL - residual,
                    pass: residual < IDENTITY_TOL,
                })
            })
            .collect()
    })
}

const CONVEX_FAMILY: [BoundKind; 5] = [
    BoundKind::ConvexQ1,
    BoundKind::ConvexHolder,
    BoundKind::ConvexPowerMean,
    BoundKind::BaselineQ1,
    BoundKind::BaselinePowerMean,
];

const QUASI_FAMILY: [BoundKind; 4] = [
    BoundKind::QuasiQ1,
    BoundKind::QuasiMonotone,
    BoundKind::QuasiHolder,
    BoundKind::QuasiPowerMean,
];

fn exponent_for(kind: BoundKind, q: f64) -> Result<Option<Exponent>> {
    Ok(match kind {
        BoundKind::ConvexHolder | BoundKind::QuasiHolder => {
            Some(Exponent::Pair(ConjugatePair::from_q(q)?))
        }
        BoundKind::ConvexPowerMean | BoundKind::QuasiPowerMean | BoundKind::BaselinePowerMean => {
            Some(Exponent::Power { q })
        }
        _ => None,
    })
}

/// Applies every theorem of `family` whose hypothesis survives the samplers.
/// The midpoint gap is computed once per interval.
fn theorem_suite(
    suite: Suite,
    family: &'static [BoundKind],
    seed: u64,
    cases: usize,
) -> Result<Vec<VerifyRecord>> {
    per_function(seed, cases, |func, rng, intervals| {
        let mut out = Vec::new();
        for &iv in intervals {
            let q: f64 = rng.gen_range(1.1..6.0);
            let applicable: Vec<BoundKind> = family
                .iter()
                .copied()
                .filter(|&k| hypothesis_holds(k, func, iv))
                .collect();
            if applicable.is_empty() {
                continue;
            }
            let gap = signed_midpoint_gap(func, iv, GAP_TOL)?.abs();
            for kind in applicable {
                let (bound, used) = bound_value(kind, func, iv, exponent_for(kind, q)?)?;
                let report = BoundReport::new(kind, func.id(), iv, used, bound, gap);
                out.push(VerifyRecord::from_report(suite, &report));
            }
        }
        Ok(out)
    })
}

fn means_pairs(seed: u64, cases: usize) -> Vec<(f64, f64, i32, f64)> {
    let mut rng = stream(seed, u64::MAX);
    let (lo, hi) = MEANS_RANGE;
    std::iter::once((1.0, 2.0, 3, 2.0))
        .chain((0..cases).map(|_| {
            let iv = random_subinterval(&mut rng, Interval::new(lo, hi).expect("static range"));
            let n = MONOMIAL_POWERS[rng.gen_range(0..MONOMIAL_POWERS.len())];
            let q = rng.gen_range(1.1..6.0);
            (iv.a(), iv.b(), n, q)
        }))
        .collect()
}

/// Least `L_{p_{k+1}} − L_{p_k}` over [`LP_GRID`].
pub fn lp_monotone_margin(a: f64, b: f64) -> Result<f64> {
    let values = LP_GRID
        .iter()
        .map(|&p| mean(MeanKind::Lp(p), a, b))
        .collect::<Result<Vec<_>>>()?;
    Ok(values
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(f64::INFINITY, f64::min))
}

fn margin_record(theorem: &str, iv: Interval, margin: f64, pass: bool) -> VerifyRecord {
    VerifyRecord {
        suite: Suite::Means.name(),
        function: "means".to_string(),
        interval: iv,
        theorem: theorem.to_string(),
        bound: margin,
        gap: 0.0,
        slack: margin,
        pass,
    }
}

fn means_suite(seed: u64, cases: usize) -> Result<Vec<VerifyRecord>> {
    let instances = means_pairs(seed, cases);
    let chunks: Result<Vec<Vec<VerifyRecord>>> = instances
        .par_iter()
        .map(|&(a, b, n, q)| {
            let iv = Interval::new(a, b)?;
            let tol = 1e-12 * b.max(1.0);
            let chain = chain_margin(a, b)?;
            let lp = lp_monotone_margin(a, b)?;
            let pq = ConjugatePair::from_q(q)?;
            let reports = [
                check_prop_monomial_q1(a, b, n)?,
                check_prop_identric(a, b, pq)?,
                check_prop_monomial_pm(a, b, n, q)?,
                check_prop_reciprocal_pm(a, b, q)?,
                check_prop_reciprocal_quasi(a, b, q)?,
                check_prop_monomial_quasi(a, b, n, pq)?,
            ];
            let mut out = vec![
                margin_record("mean_chain", iv, chain, chain_check(a, b)?),
                margin_record("lp_monotone", iv, lp, lp >= -tol),
            ];
            out.extend(
                reports
                    .iter()
                    .map(|r| VerifyRecord::from_report(Suite::Means, r)),
            );
            Ok(out)
        })
        .collect();
    Ok(chunks?.into_iter().flatten().collect())
}

/// Runs `suite` over the catalog plus `cases` seeded random subintervals
/// (or random mean arguments for the means suite).
pub fn run_suite(suite: Suite, seed: u64, cases: usize) -> Result<Vec<VerifyRecord>> {
    match suite {
        Suite::Identity => identity_suite(seed, cases),
        Suite::Convex => theorem_suite(Suite::Convex, &CONVEX_FAMILY, seed, cases),
        Suite::Quasiconvex => theorem_suite(Suite::Quasiconvex, &QUASI_FAMILY, seed, cases),
        Suite::Means => means_suite(seed, cases),
        Suite::All => {
            let mut all = Vec::new();
            for s in [
                Suite::Identity,
                Suite::Convex,
                Suite::Quasiconvex,
                Suite::Means,
            ] {
                all.extend(run_suite(s, seed, cases)?);
            }
            Ok(all)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<f64> = (0..4).map(|_| stream(7, 1).gen()).collect();
        let b: Vec<f64> = (0..4).map(|_| stream(7, 1).gen()).collect();
        assert_eq!(a, b);
        let mut s1 = stream(7, 1);
        let mut s2 = stream(7, 2);
        assert_ne!(s1.gen::<u64>(), s2.gen::<u64>());
    }

    #[test]
    fn subintervals_stay_in_window() {
        let w = Interval::new(0.25, 4.0).unwrap();
        let mut rng = stream(3, 0);
        for _ in 0..500 {
            let iv = random_subinterval(&mut rng, w);
            assert!(w.contains_interval(&iv));
        }
    }

    #[test]
    fn small_suites_pass() {
        for suite in [
            Suite::Identity,
            Suite::Convex,
            Suite::Quasiconvex,
            Suite::Means,
        ] {
            let recs = run_suite(suite, 5, 8).unwrap();
            assert!(!recs.is_empty());
            let bad: Vec<_> = recs.iter().filter(|r| !r.pass).collect();
            assert!(bad.is_empty(), "{suite:?}: {bad:?}");
        }
    }

    #[test]
    fn sine_never_reaches_the_convex_suite_on_its_reference_interval() {
        let recs = run_suite(Suite::Convex, 1, 1).unwrap();
        assert!(!recs.iter().any(|r| r.function == "sin"
            && r.interval.a() == 0.0
            && r.theorem.starts_with("convex")));
    }
}
