//! Seeded property suites, summarised per theorem.

use std::collections::BTreeMap;

use hh_bounds::{run_suite, Suite};

fn main() -> hh_bounds::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    for suite in [
        Suite::Identity,
        Suite::Convex,
        Suite::Quasiconvex,
        Suite::Means,
    ] {
        let mut summary: BTreeMap<String, (usize, usize, f64)> = BTreeMap::new();
        for r in run_suite(suite, seed, 50)? {
            let e = summary.entry(r.theorem).or_insert((0, 0, f64::INFINITY));
            e.0 += 1;
            e.1 += r.pass as usize;
            e.2 = e.2.min(r.slack);
        }
        println!("{} (seed {seed})", suite.name());
        for (theorem, (n, ok, slack)) in summary {
            println!("  {theorem:<22} {ok:>4}/{n:<4} min slack {slack:+.2e}");
        }
    }
    Ok(())
}
