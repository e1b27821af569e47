//! Two-variable means, their ordering, and the midpoint-gap inequalities
//! between them.

use hh_bounds::means::{
    chain_means, check_prop_identric, check_prop_monomial_q1, check_prop_reciprocal_pm, mean,
    MeanKind,
};
use hh_bounds::ConjugatePair;

fn main() -> hh_bounds::Result<()> {
    for (a, b) in [(1.0, 2.0), (0.1, 10.0), (5.0, 5.0)] {
        let line: Vec<String> = chain_means(a, b)?
            .iter()
            .map(|m| format!("{} = {:.12}", m.kind, m.value))
            .collect();
        println!("({a}, {b}): {}", line.join("  "));
    }

    println!("\nL_p(1, 2):");
    for p in [-3.0, -1.0, 0.0, 1.0, 2.0, 3.0] {
        println!("  p = {p:>4}: {:.12}", mean(MeanKind::Lp(p), 1.0, 2.0)?);
    }

    let r = check_prop_monomial_q1(1.0, 2.0, 3)?;
    println!(
        "\n|L_3^3 − A^3| on (1, 2): gap {:.12}, bound {:.12}, with the halved constant {:.12}",
        r.true_gap,
        r.bound,
        r.uncorrected_bound.unwrap()
    );
    let pq = ConjugatePair::from_p(2.0)?;
    let r = check_prop_identric(1.0, 2.0, pq)?;
    println!("ln(A/I) on (1, 2): {:.12} ≤ {:.12}", r.true_gap, r.bound);
    let r = check_prop_reciprocal_pm(1.0, 2.0, 2.0)?;
    println!(
        "|1/L − 1/A| on (1, 2): {:.12} ≤ {:.12}",
        r.true_gap, r.bound
    );
    Ok(())
}
