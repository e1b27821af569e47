//! Error bounds for the midpoint rule `|(1/(b−a))∫f − f((a+b)/2)|` in terms
//! of endpoint values of `|f''|`, together with the machinery to check them:
//! an adaptive quadrature oracle, convexity samplers, special means, a
//! certified composite midpoint integrator and seeded verification suites.
//!
//! ```
//! use hh_bounds::{evaluate, find, BoundKind, Interval};
//!
//! let sq = find("x^2").unwrap();
//! let r = evaluate(BoundKind::ConvexQ1, &sq, Interval::new(0.0, 1.0).unwrap(), None).unwrap();
//! assert!((r.bound - 1.0 / 12.0).abs() < 1e-15);
//! assert!(r.valid);
//! ```

pub mod certifier;
pub mod cli;
pub mod convex;
pub mod error;
pub mod exponent;
pub mod function;
pub mod identity;
pub mod interval;
pub mod kernel;
pub mod means;
pub mod oracle;
pub mod quasiconvex;
pub mod report;
pub mod theorem;
pub mod verify;

pub use certifier::{integrate_certified, refine_to_tolerance, CertRule, CertifiedIntegral};
pub use error::{Error, Result};
pub use exponent::{ConjugatePair, Exponent};
pub use function::{builtin_catalog, find, CurvatureClass, Domain, TestFunction};
pub use interval::Interval;
pub use means::{mean, MeanKind};
pub use oracle::{integrate, midpoint_gap, QuadratureResult};
pub use report::{BoundKind, BoundReport};
pub use theorem::{evaluate, evaluate_unchecked};
pub use verify::{run_suite, Suite, VerifyRecord};
