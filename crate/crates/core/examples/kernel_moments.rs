//! Closed-form moments of the peak kernel checked against quadrature.

use hh_bounds::kernel::{lp_norm_integral, peak_kernel, KernelMoments};
use hh_bounds::{integrate, Interval};

fn main() -> hh_bounds::Result<()> {
    let k = KernelMoments::closed_form();
    println!("∫m = {} (1/12), ∫m·t = {} (1/24)", k.l1, k.tmoment);

    for p in [1.0, 1.5, 2.0, 3.0, 10.0] {
        let mut quad = 0.0;
        // m has a kink at 1/2; integrate each smooth half on its own.
        for (a, b) in [(0.0, 0.5), (0.5, 1.0)] {
            quad += integrate(
                |t| peak_kernel(t).unwrap().powf(p),
                Interval::new(a, b)?,
                1e-14,
            )?
            .value;
        }
        let closed = lp_norm_integral(p)?;
        println!(
            "p = {p:>4}: closed {closed:.6e}  quadrature {quad:.6e}  diff {:.1e}",
            (closed - quad).abs()
        );
    }
    Ok(())
}
