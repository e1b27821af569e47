//! Evaluable test functions: a value, its first and second derivative, the
//! domain they are total on, and the author-declared curvature class.
//!
//! The declared class is metadata only. Every consumer that depends on it
//! re-checks it with the samplers in [`crate::oracle`].

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{domain, Result};
use crate::interval::Interval;

/// A deterministic, side-effect free real function.
pub type Evaluator = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Where the evaluators of a [`TestFunction`] are defined.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    Reals,
    /// The open half-line `(0, ∞)`.
    Positive,
    Bounded(Interval),
}

impl Domain {
    pub fn contains(&self, x: f64) -> bool {
        match self {
            Domain::Reals => x.is_finite(),
            Domain::Positive => x > 0.0 && x.is_finite(),
            Domain::Bounded(iv) => iv.contains(x),
        }
    }

    pub fn contains_interval(&self, iv: &Interval) -> bool {
        self.contains(iv.a()) && self.contains(iv.b())
    }
}

/// Author-asserted class of `|f''|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurvatureClass {
    ConvexAbsD2,
    QuasiConvexAbsD2,
    Neither,
    Unknown,
}

#[derive(Clone)]
pub struct TestFunction {
    id: String,
    aliases: Vec<String>,
    f: Evaluator,
    d1: Evaluator,
    d2: Evaluator,
    domain: Domain,
    class: CurvatureClass,
    window: Interval,
    reference: Interval,
}

impl fmt::Debug for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TestFunction")
            .field("id", &self.id)
            .field("domain", &self.domain)
            .field("class", &self.class)
            .field("window", &self.window)
            .finish_non_exhaustive()
    }
}

fn eval<F: Fn(f64) -> f64 + Send + Sync + 'static>(f: F) -> Evaluator {
    Arc::new(f)
}

impl TestFunction {
    /// Builds a function from closed-form value and derivatives.
    ///
    /// `window` is the region random subintervals are drawn from and must lie
    /// inside `domain`; it also serves as the reference interval until
    /// [`with_reference`](Self::with_reference) overrides it.
    pub fn new(
        id: impl Into<String>,
        f: Evaluator,
        d1: Evaluator,
        d2: Evaluator,
        domain: Domain,
        class: CurvatureClass,
        window: Interval,
    ) -> Result<Self> {
        let id = id.into();
        if !domain.contains_interval(&window) {
            return Err(domain_err(&id, &window));
        }
        Ok(Self {
            id,
            aliases: Vec::new(),
            f,
            d1,
            d2,
            domain,
            class,
            window,
            reference: window,
        })
    }

    pub fn with_reference(mut self, reference: Interval) -> Result<Self> {
        if !self.domain.contains_interval(&reference) {
            return Err(domain_err(&self.id, &reference));
        }
        self.reference = reference;
        Ok(self)
    }

    pub fn with_alias(mut self, alias: impl Into<String>) -> Self {
        self.aliases.push(alias.into());
        self
    }

    /// `x^n` for integer `n`; negative powers live on `(0, ∞)`.
    pub fn monomial(n: i32) -> Self {
        let nf = n as f64;
        let f = eval(move |x: f64| x.powi(n));
        let d1 = eval(move |x: f64| if n == 0 { 0.0 } else { nf * x.powi(n - 1) });
        let d2 = eval(move |x: f64| {
            if n == 0 || n == 1 {
                0.0
            } else {
                nf * (nf - 1.0) * x.powi(n - 2)
            }
        });
        let (dom, window, reference) = if n >= 0 {
            (Domain::Reals, iv(-2.0, 2.0), iv(0.0, 1.0))
        } else {
            (Domain::Positive, iv(0.25, 4.0), iv(1.0, 2.0))
        };
        // |x|^k is convex on the reals for k >= 0 and on (0, ∞) for k < 0.
        let class = CurvatureClass::ConvexAbsD2;
        let id = format!("x{n}");
        let alias = format!("x^{n}");
        TestFunction::new(id, f, d1, d2, dom, class, window)
            .and_then(|t| t.with_reference(reference))
            .expect("monomial windows lie in their domains")
            .with_alias(alias)
    }

    /// `c0 + c1 x + c2 x² + …` on the reals. The class is left `Unknown`.
    pub fn polynomial(id: impl Into<String>, coeffs: &[f64]) -> Result<Self> {
        if coeffs.is_empty() || coeffs.iter().any(|c| !c.is_finite()) {
            return Err(domain("polynomial needs at least one finite coefficient"));
        }
        let c0: Vec<f64> = coeffs.to_vec();
        let c1 = differentiate(&c0);
        let c2 = differentiate(&c1);
        TestFunction::new(
            id,
            eval(move |x| horner(&c0, x)),
            eval(move |x| horner(&c1, x)),
            eval(move |x| horner(&c2, x)),
            Domain::Reals,
            CurvatureClass::Unknown,
            iv(-2.0, 2.0),
        )
    }

    /// `slope·x + intercept`.
    pub fn affine(slope: f64, intercept: f64) -> Self {
        let mut t =
            TestFunction::polynomial("affine", &[intercept, slope]).expect("finite coefficients");
        t.class = CurvatureClass::ConvexAbsD2;
        t
    }

    /// `1/x` on `(0, ∞)`; `|f''| = 2/x³` is convex and decreasing.
    pub fn reciprocal() -> Self {
        TestFunction::new(
            "inv_x",
            eval(|x| 1.0 / x),
            eval(|x| -1.0 / (x * x)),
            eval(|x| 2.0 / (x * x * x)),
            Domain::Positive,
            CurvatureClass::ConvexAbsD2,
            iv(0.25, 4.0),
        )
        .and_then(|t| t.with_reference(iv(1.0, 2.0)))
        .expect("static window")
        .with_alias("1/x")
    }

    /// `−ln x` on `(0, ∞)`; `|f''| = 1/x²`.
    pub fn neg_log() -> Self {
        TestFunction::new(
            "neg_ln",
            eval(|x: f64| -x.ln()),
            eval(|x| -1.0 / x),
            eval(|x| 1.0 / (x * x)),
            Domain::Positive,
            CurvatureClass::ConvexAbsD2,
            iv(0.25, 4.0),
        )
        .and_then(|t| t.with_reference(iv(1.0, 2.0)))
        .expect("static window")
        .with_alias("-ln x")
    }

    pub fn exp() -> Self {
        TestFunction::new(
            "exp",
            eval(f64::exp),
            eval(f64::exp),
            eval(f64::exp),
            Domain::Reals,
            CurvatureClass::ConvexAbsD2,
            iv(-3.0, 3.0),
        )
        .and_then(|t| t.with_reference(iv(-1.0, 1.0)))
        .expect("static window")
        .with_alias("exp(x)")
    }

    /// `x^{5/2}` on `(0, ∞)`: `|f''| = 3.75·√x` is increasing and strictly
    /// concave, so quasi-convex without being convex.
    pub fn x_five_halves() -> Self {
        TestFunction::new(
            "x2.5",
            eval(|x: f64| x * x * x.sqrt()),
            eval(|x: f64| 2.5 * x * x.sqrt()),
            eval(|x: f64| 3.75 * x.sqrt()),
            Domain::Positive,
            CurvatureClass::QuasiConvexAbsD2,
            iv(0.05, 4.0),
        )
        .and_then(|t| t.with_reference(iv(1.0, 4.0)))
        .expect("static window")
        .with_alias("x^2.5")
    }

    /// `sin x`; `|f''| = |sin x|` is neither convex nor quasi-convex on `[0, π]`.
    pub fn sine() -> Self {
        TestFunction::new(
            "sin",
            eval(f64::sin),
            eval(f64::cos),
            eval(|x: f64| -x.sin()),
            Domain::Reals,
            CurvatureClass::Neither,
            iv(-3.0, 3.0),
        )
        .and_then(|t| t.with_reference(iv(0.0, std::f64::consts::PI)))
        .expect("static window")
        .with_alias("sin(x)")
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn matches(&self, name: &str) -> bool {
        self.id == name || self.aliases.iter().any(|a| a == name)
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn declared_class(&self) -> CurvatureClass {
        self.class
    }

    /// Region random subintervals are drawn from.
    pub fn window(&self) -> Interval {
        self.window
    }

    /// A representative interval for single-shot demonstrations.
    pub fn reference_interval(&self) -> Interval {
        self.reference
    }

    #[inline]
    pub fn value(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    #[inline]
    pub fn d1(&self, x: f64) -> f64 {
        (self.d1)(x)
    }

    #[inline]
    pub fn d2(&self, x: f64) -> f64 {
        (self.d2)(x)
    }

    pub fn abs_d2(&self, x: f64) -> f64 {
        self.d2(x).abs()
    }

    pub fn abs_d1(&self, x: f64) -> f64 {
        self.d1(x).abs()
    }

    /// Fails unless `iv` lies in the domain.
    pub fn check_interval(&self, iv: &Interval) -> Result<()> {
        if self.domain.contains_interval(iv) {
            Ok(())
        } else {
            Err(domain_err(&self.id, iv))
        }
    }
}

fn domain_err(id: &str, iv: &Interval) -> crate::error::Error {
    domain(format!("interval {iv} is outside the domain of {id}"))
}

fn iv(a: f64, b: f64) -> Interval {
    Interval::new(a, b).expect("static interval")
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn differentiate(coeffs: &[f64]) -> Vec<f64> {
    if coeffs.len() <= 1 {
        return vec![0.0];
    }
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| k as f64 * c)
        .collect()
}

/// The built-in function catalog.
pub fn builtin_catalog() -> Vec<TestFunction> {
    let mut cat: Vec<TestFunction> = (2..=5).map(TestFunction::monomial).collect();
    // x³ is more telling on [1, 2] where f'' = 6x does not change sign.
    cat[1] = cat[1]
        .clone()
        .with_reference(iv(1.0, 2.0))
        .expect("inside reals");
    cat.push(TestFunction::reciprocal());
    cat.push(TestFunction::neg_log());
    cat.push(TestFunction::exp());
    cat.push(
        TestFunction::affine(3.0, 1.0)
            .with_reference(iv(0.0, 2.0))
            .expect("inside reals")
            .with_alias("3x+1"),
    );
    cat.push(TestFunction::x_five_halves());
    cat.push(TestFunction::sine());
    cat
}

/// Looks up a catalog entry by id or alias.
pub fn find(name: &str) -> Option<TestFunction> {
    builtin_catalog().into_iter().find(|t| t.matches(name))
}
