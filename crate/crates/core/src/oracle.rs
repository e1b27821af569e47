//! Ground-truth numerics: adaptive quadrature, the true midpoint gap,
//! class samplers for `|f''|`, and a supremum finder.
//!
//! The samplers are falsifiers. A `false` verdict refutes the class on the
//! sampled grid; a `true` verdict only means no counterexample was found.

use crate::error::{Error, Result};
use crate::function::TestFunction;
use crate::interval::Interval;

/// Outcome of [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    /// Sum of the local |Kronrod − Gauss| estimates; never above the requested tolerance.
    pub est_error: f64,
    pub evaluations: usize,
}

pub const MAX_DEPTH: u32 = 60;

/// Evaluation budget for one call of [`integrate`].
pub const MAX_EVALUATIONS: usize = 10_000_000;

/// Slack used by the midpoint-convexity samplers.
pub const SAMPLER_TOL: f64 = 1e-9;

/// Grid used by the sup finder.
pub const SUP_GRID: usize = 1025;

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1] (QUADPACK qk15).
// Published 30-digit node and weight values, kept at full length.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5 and the centre.
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

struct Local {
    kronrod: f64,
    gauss: f64,
    abs_kronrod: f64,
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Local> {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let checked = |x: f64| -> Result<f64> {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::Evaluation { x })
        }
    };
    let fc = checked(centre)?;
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut abs_kronrod = WGK[7] * fc.abs();
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = checked(centre - dx)?;
        let f2 = checked(centre + dx)?;
        kronrod += WGK[j] * (f1 + f2);
        abs_kronrod += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    Ok(Local {
        kronrod: kronrod * half,
        gauss: gauss * half,
        abs_kronrod: abs_kronrod * half.abs(),
    })
}

struct Accumulator {
    value: f64,
    error: f64,
    evaluations: usize,
}

fn refine<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    depth: u32,
    acc: &mut Accumulator,
) -> Result<()> {
    let local = gk15(f, a, b)?;
    acc.evaluations += 15;
    let err = (local.kronrod - local.gauss).abs();
    let roundoff = 50.0 * f64::EPSILON * local.abs_kronrod;
    if err <= tol || err <= roundoff {
        acc.value += local.kronrod;
        acc.error += err;
        return Ok(());
    }
    if acc.evaluations >= MAX_EVALUATIONS {
        return Err(Error::Convergence(format!(
            "evaluation budget {MAX_EVALUATIONS} exhausted on [{a}, {b}]"
        )));
    }
    if depth >= MAX_DEPTH {
        return Err(Error::Convergence(format!(
            "refinement depth {MAX_DEPTH} exceeded on [{a}, {b}]"
        )));
    }
    let m = 0.5 * (a + b);
    if m <= a || m >= b {
        return Err(Error::Convergence(format!(
            "[{a}, {b}] cannot be split further"
        )));
    }
    refine(f, a, m, 0.5 * tol, depth + 1, acc)?;
    refine(f, m, b, 0.5 * tol, depth + 1, acc)
}

/// Integrates `f` over `iv` to absolute tolerance `tol` by recursive
/// bisection with a Gauss–Kronrod 7/15 rule on each piece.
///
/// Exact up to rounding for polynomials of degree ≤ 13 (where the Gauss and
/// Kronrod values agree). Deterministic for fixed inputs.
pub fn integrate<F: Fn(f64) -> f64>(f: F, iv: Interval, tol: f64) -> Result<QuadratureResult> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut acc = Accumulator {
        value: 0.0,
        error: 0.0,
        evaluations: 0,
    };
    refine(&f, iv.a(), iv.b(), tol, 0, &mut acc)?;
    if acc.error > tol {
        return Err(Error::Convergence(format!(
            "roundoff-limited: error estimate {:e} exceeds tolerance {tol:e}",
            acc.error
        )));
    }
    Ok(QuadratureResult {
        value: acc.value,
        est_error: acc.error,
        evaluations: acc.evaluations,
    })
}

/// `(1/(b−a))∫f − f((a+b)/2)`, signed. The mean value is accurate to `tol`.
pub fn signed_midpoint_gap(func: &TestFunction, iv: Interval, tol: f64) -> Result<f64> {
    func.check_interval(&iv)?;
    let q = integrate(|x| func.value(x), iv, tol * iv.width())?;
    Ok(q.value / iv.width() - func.value(iv.midpoint()))
}

/// The midpoint gap `|(1/(b−a))∫f − f((a+b)/2)|`, the quantity every bound controls.
pub fn midpoint_gap(func: &TestFunction, iv: Interval, tol: f64) -> Result<f64> {
    signed_midpoint_gap(func, iv, tol).map(f64::abs)
}

/// Midpoint-convexity sampler for an arbitrary `g` over all grid pairs.
pub fn is_midpoint_convex<G: Fn(f64) -> f64>(g: G, iv: Interval, grid: usize) -> bool {
    let xs = iv.grid(grid.max(3));
    let gs: Vec<f64> = xs.iter().map(|&x| g(x)).collect();
    for i in 0..xs.len() {
        for j in (i + 1)..xs.len() {
            let mid = g(0.5 * (xs[i] + xs[j]));
            if mid > 0.5 * (gs[i] + gs[j]) + SAMPLER_TOL {
                return false;
            }
        }
    }
    true
}

/// Midpoint quasi-convexity sampler: `g((x+y)/2) ≤ max(g(x), g(y))` over grid pairs.
pub fn is_midpoint_quasiconvex<G: Fn(f64) -> f64>(g: G, iv: Interval, grid: usize) -> bool {
    let xs = iv.grid(grid.max(3));
    let gs: Vec<f64> = xs.iter().map(|&x| g(x)).collect();
    for i in 0..xs.len() {
        for j in (i + 1)..xs.len() {
            let mid = g(0.5 * (xs[i] + xs[j]));
            if mid > gs[i].max(gs[j]) + SAMPLER_TOL {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotone {
    Increasing,
    Decreasing,
}

/// Samples `g` on a grid and checks it never moves against `direction`
/// by more than [`SAMPLER_TOL`].
pub fn is_monotone<G: Fn(f64) -> f64>(
    g: G,
    iv: Interval,
    grid: usize,
    direction: Monotone,
) -> bool {
    let vals: Vec<f64> = iv.grid(grid.max(3)).into_iter().map(g).collect();
    vals.windows(2).all(|w| match direction {
        Monotone::Increasing => w[1] >= w[0] - SAMPLER_TOL,
        Monotone::Decreasing => w[1] <= w[0] + SAMPLER_TOL,
    })
}

pub fn check_convex_abs_d2(func: &TestFunction, iv: Interval, grid: usize) -> bool {
    is_midpoint_convex(|x| func.abs_d2(x), iv, grid)
}

pub fn check_quasiconvex_abs_d2(func: &TestFunction, iv: Interval, grid: usize) -> bool {
    is_midpoint_quasiconvex(|x| func.abs_d2(x), iv, grid)
}

/// Convexity of `|f'|`, the hypothesis of the first-derivative baselines.
pub fn check_convex_abs_d1(func: &TestFunction, iv: Interval, grid: usize) -> bool {
    is_midpoint_convex(|x| func.abs_d1(x), iv, grid)
}

pub fn check_monotone_abs_d2(
    func: &TestFunction,
    iv: Interval,
    grid: usize,
    direction: Monotone,
) -> bool {
    is_monotone(|x| func.abs_d2(x), iv, grid, direction)
}

/// Result of [`sup_abs_d2`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupEstimate {
    /// The larger of the endpoint and interior maxima.
    pub value: f64,
    /// `max(|f''(a)|, |f''(b)|)`, what the quasi-convex bounds consume.
    pub endpoint_max: f64,
    pub interior_max: f64,
    pub argmax: f64,
    /// Set when the interior beats both endpoints, refuting quasi-convexity.
    pub interior_exceeds_endpoints: bool,
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

fn golden_max<G: Fn(f64) -> f64>(g: &G, mut lo: f64, mut hi: f64, iters: usize) -> (f64, f64) {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut g1 = g(x1);
    let mut g2 = g(x2);
    for _ in 0..iters {
        if g1 < g2 {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + INV_PHI * (hi - lo);
            g2 = g(x2);
        } else {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - INV_PHI * (hi - lo);
            g1 = g(x1);
        }
    }
    if g1 >= g2 {
        (x1, g1)
    } else {
        (x2, g2)
    }
}

/// `sup |f''|` over `iv`: the endpoint maximum, cross-checked against a dense
/// grid refined by golden-section search around the grid argmax.
pub fn sup_abs_d2(func: &TestFunction, iv: Interval) -> SupEstimate {
    let g = |x: f64| func.abs_d2(x);
    let (ga, gb) = (g(iv.a()), g(iv.b()));
    let endpoint_max = ga.max(gb);
    let xs = iv.grid(SUP_GRID);
    let (mut best_i, mut best) = (0, f64::NEG_INFINITY);
    for (i, &x) in xs.iter().enumerate() {
        let v = g(x);
        if v > best {
            best = v;
            best_i = i;
        }
    }
    let lo = xs[best_i.saturating_sub(1)];
    let hi = xs[(best_i + 1).min(xs.len() - 1)];
    let (mut argmax, mut interior_max) = (xs[best_i], best);
    if hi > lo {
        let (x, v) = golden_max(&g, lo, hi, 60);
        if v > interior_max {
            argmax = x;
            interior_max = v;
        }
    }
    let exceeds = interior_max > endpoint_max + SAMPLER_TOL * endpoint_max.max(1.0);
    if !exceeds {
        argmax = if ga >= gb { iv.a() } else { iv.b() };
    }
    SupEstimate {
        value: endpoint_max.max(interior_max),
        endpoint_max,
        interior_max,
        argmax,
        interior_exceeds_endpoints: exceeds,
    }
}

/// Worst relative mismatch between the closed-form derivatives and central
/// finite differences of `f` at `x`, measured against `max(1e-6, 1e-6·|value|)`.
/// Values `≤ 1` mean consistent.
pub fn derivative_mismatch(func: &TestFunction, x: f64) -> f64 {
    let h1 = 1e-5 * x.abs().max(1.0);
    let h2 = 1e-4 * x.abs().max(1.0);
    let fd1 = (func.value(x + h1) - func.value(x - h1)) / (2.0 * h1);
    // Richardson-extrapolated second difference.
    let second = |h: f64| (func.value(x + h) - 2.0 * func.value(x) + func.value(x - h)) / (h * h);
    let fd2 = (4.0 * second(h2 / 2.0) - second(h2)) / 3.0;
    let (d1, d2) = (func.d1(x), func.d2(x));
    let r1 = (fd1 - d1).abs() / (1e-6f64).max(1e-6 * d1.abs());
    let r2 = (fd2 - d2).abs() / (1e-6f64).max(1e-6 * d2.abs());
    r1.max(r2)
}
