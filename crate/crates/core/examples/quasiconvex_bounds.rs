//! Bounds that only need |f''| quasi-convex, shown on x^(5/2), whose |f''|
//! is concave on (0, ∞), and on the monotone special case.

use hh_bounds::theorem::hypothesis_holds;
use hh_bounds::{evaluate, find, BoundKind, Interval};

fn main() -> hh_bounds::Result<()> {
    let f = find("x^2.5").unwrap();
    let iv = Interval::new(1.0, 4.0)?;
    println!(
        "x^2.5 on {iv}: convex |f''|? {}  quasi-convex |f''|? {}",
        hypothesis_holds(BoundKind::ConvexQ1, &f, iv),
        hypothesis_holds(BoundKind::QuasiQ1, &f, iv)
    );
    for kind in [
        BoundKind::QuasiQ1,
        BoundKind::QuasiMonotone,
        BoundKind::QuasiHolder,
        BoundKind::QuasiPowerMean,
    ] {
        let r = evaluate(kind, &f, iv, None)?;
        println!(
            "  {:<17} bound {:.10}  gap {:.10}",
            kind.name(),
            r.bound,
            r.true_gap
        );
    }

    let sine = find("sin").unwrap();
    match evaluate(BoundKind::QuasiQ1, &sine, Interval::new(0.0, 3.0)?, None) {
        Ok(r) => println!("sin on [0, 3]: {r:?}"),
        Err(e) => println!("sin on [0, 3]: {e}"),
    }
    let r = evaluate(BoundKind::QuasiQ1, &sine, Interval::new(-1.0, 1.0)?, None)?;
    println!(
        "sin on [-1, 1]: bound {:.10}  gap {:.10}",
        r.bound, r.true_gap
    );
    Ok(())
}
