//! Composite midpoint integration with a guaranteed error radius.

use hh_bounds::certifier::select_rule;
use hh_bounds::{find, integrate, integrate_certified, refine_to_tolerance, Interval};

fn main() -> hh_bounds::Result<()> {
    let f = find("inv_x").unwrap();
    let iv = Interval::new(1.0, 2.0)?;
    let rule = select_rule(&f, iv).expect("1/x has convex |f''| on [1, 2]");
    println!("∫ 1/x over {iv} = ln 2 = {}", std::f64::consts::LN_2);
    for n in [1, 2, 4, 8, 16, 64] {
        let c = integrate_certified(&f, iv, n, rule)?;
        println!(
            "  n = {n:>3}: [{:.12}, {:.12}]  radius {:.3e}",
            c.lower(),
            c.upper(),
            c.error_radius
        );
    }

    for (name, a, b, tol) in [
        ("x2", 0.0, 1.0, 1e-6),
        ("exp", 0.0, 1.0, 1e-9),
        ("x^2.5", 1.0, 4.0, 1e-8),
    ] {
        let f = find(name).unwrap();
        let iv = Interval::new(a, b)?;
        let rule = select_rule(&f, iv).unwrap();
        let c = refine_to_tolerance(&f, iv, tol, rule)?;
        let truth = integrate(|x| f.value(x), iv, 1e-13)?.value;
        println!(
            "{name} on {iv} to {tol:e}: {} panels, {rule:?}, estimate {:.12}, truth {:.12}, enclosed {}",
            c.subintervals,
            c.estimate,
            truth,
            c.encloses(truth)
        );
    }
    Ok(())
}
