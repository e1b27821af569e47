//! Bounds for functions with convex |f''|, compared against the true gap and
//! the first-derivative baseline.

use hh_bounds::convex::{constant_comparison, improvement_ratio};
use hh_bounds::{evaluate, find, BoundKind, ConjugatePair, Exponent, Interval};

fn main() -> hh_bounds::Result<()> {
    let cases = [
        ("x2", 0.0, 1.0),
        ("x4", 0.0, 1.0),
        ("x3", 1.0, 2.0),
        ("exp", -1.0, 1.0),
        ("inv_x", 1.0, 2.0),
    ];
    let pair = Some(Exponent::Pair(ConjugatePair::from_p(2.0)?));
    for (name, a, b) in cases {
        let f = find(name).unwrap();
        let iv = Interval::new(a, b)?;
        for (kind, exponent) in [
            (BoundKind::ConvexQ1, None),
            (BoundKind::ConvexHolder, pair),
            (BoundKind::ConvexPowerMean, Some(Exponent::Power { q: 2.0 })),
            (BoundKind::BaselineQ1, None),
        ] {
            let r = evaluate(kind, &f, iv, exponent)?;
            println!(
                "{name:<6} {iv:<8} {:<18} bound {:.10}  gap {:.10}  slack {:+.2e}",
                kind.name(),
                r.bound,
                r.true_gap,
                r.slack
            );
        }
    }

    println!("\nconstants: 1/24 against 1/(8(2p+1)^(1/p))");
    for p in [1.01, 2.0, 5.0, 50.0] {
        let c = constant_comparison(p)?;
        println!(
            "  p = {p:>5}: {:.6} < {:.6}",
            c.power_mean_constant, c.holder_constant
        );
    }

    println!("\nbaseline / second-derivative bound for exp on [0, h]:");
    let f = find("exp").unwrap();
    for h in [1.0, 0.1, 0.01] {
        println!(
            "  h = {h:<5} ratio {:.1}",
            improvement_ratio(&f, Interval::new(0.0, h)?, 1.0)?
        );
    }
    Ok(())
}
