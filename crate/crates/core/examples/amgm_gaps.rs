//! The gap between arithmetic and geometric means and two square-root lower
//! bounds for it.

use hyperalpha::bounds::amgm_gaps;

fn main() -> hyperalpha::Result<()> {
    let a = [1.0, 4.0, 9.0, 0.25, 2.0];
    let r = amgm_gaps(&a, None)?;
    println!(
        "AM {:.6}, GM {:.6}, gap {:.6}",
        r.arithmetic, r.geometric, r.gap
    );
    println!(
        "pairwise bound {:.6} holds: {}",
        r.pairwise_bound, r.pairwise_holds
    );
    println!(
        "paired bound   {:.6} holds: {}",
        r.paired_bound, r.paired_holds
    );

    // Pairing the largest with the smallest entry gives the strongest paired bound.
    let sorted = [3, 0, 4, 1, 2];
    let r = amgm_gaps(&a, Some(&sorted))?;
    println!(
        "sorted order: paired bound {:.6} holds: {}",
        r.paired_bound, r.paired_holds
    );
    Ok(())
}
