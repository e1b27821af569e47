//! The midpoint gap written as a kernel-weighted integral of f'', and what
//! goes wrong with the coefficient halved.

use hh_bounds::identity::{identity_rhs_scaled, LemmaScale};
use hh_bounds::oracle::signed_midpoint_gap;
use hh_bounds::{builtin_catalog, Interval};

fn main() -> hh_bounds::Result<()> {
    let tol = 1e-11;
    for f in builtin_catalog() {
        let iv = f.reference_interval();
        let lhs = signed_midpoint_gap(&f, iv, tol)?;
        let quarter = identity_rhs_scaled(&f, iv, tol, LemmaScale::Quarter)?;
        println!(
            "{:<8} on {:<20} gap {lhs:>+.15}  residual {:.1e}",
            f.id(),
            iv.to_string(),
            (lhs - quarter).abs()
        );
    }

    let sq = hh_bounds::find("x^2").unwrap();
    let unit = Interval::unit();
    let lhs = signed_midpoint_gap(&sq, unit, tol)?;
    let half = identity_rhs_scaled(&sq, unit, tol, LemmaScale::Half)?;
    println!(
        "x² on [0, 1] with (b−a)²/2: right side {half:.12}, off by {:.12}",
        (lhs - half).abs()
    );
    Ok(())
}
