//! The adaptive Gauss–Kronrod oracle and the midpoint gaps it produces.

use hh_bounds::oracle::{check_convex_abs_d2, check_quasiconvex_abs_d2, sup_abs_d2};
use hh_bounds::{builtin_catalog, integrate, midpoint_gap, Interval};

fn main() -> hh_bounds::Result<()> {
    let q = integrate(|x: f64| x.exp(), Interval::new(-1.0, 1.0)?, 1e-13)?;
    println!(
        "∫ exp over [-1, 1] = {} (±{:.1e}, {} evaluations)",
        q.value, q.est_error, q.evaluations
    );

    println!(
        "{:<8} {:<22} {:>20} {:>8} {:>8} {:>12}",
        "f", "interval", "gap", "|f''|cvx", "|f''|qcx", "sup|f''|"
    );
    for f in builtin_catalog() {
        let iv = f.reference_interval();
        let gap = midpoint_gap(&f, iv, 1e-12)?;
        let sup = sup_abs_d2(&f, iv);
        println!(
            "{:<8} {:<22} {:>20.15} {:>8} {:>8} {:>12.6}",
            f.id(),
            iv.to_string(),
            gap,
            check_convex_abs_d2(&f, iv, 64),
            check_quasiconvex_abs_d2(&f, iv, 64),
            sup.value
        );
    }
    Ok(())
}
