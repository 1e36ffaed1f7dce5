//! Minimize the Laplacian form over the nonnegative unit sphere with one
//! coordinate pinned at zero, and confirm the answer with a lattice search.

use hyperalpha::solver::{analytic_connectivity, grid_oracle, minimize_fixed_zero, SolverConfig};
use hyperalpha::Hypergraph;

fn main() -> hyperalpha::Result<()> {
    let h = Hypergraph::build(5, [vec![1, 2, 3], vec![3, 4], vec![2, 4, 5], vec![1, 5]])?;
    let config = SolverConfig {
        restarts: 24,
        seed: 7,
        ..SolverConfig::default()
    };

    let result = analytic_connectivity(&h, &config)?;
    println!("alpha = {:.10}", result.alpha);
    println!(
        "reached with vertex {} at zero, witness {:?}",
        result.fixed_vertex + 1,
        result.witness.as_slice()
    );
    for (j, v) in result.per_vertex.iter().enumerate() {
        println!("  vertex {} fixed: {v:.10}", j + 1);
    }

    let one = minimize_fixed_zero(&h, 0, &config)?;
    let converged = one.runs.iter().filter(|r| r.converged).count();
    println!(
        "vertex 1 alone: {:.10} ({converged}/{} runs converged)",
        one.value,
        one.runs.len()
    );

    let grid = grid_oracle(&h, 20, 12)?;
    println!(
        "lattice search: {:.10} (difference {:.2e})",
        grid.value,
        grid.value - result.alpha
    );

    let single_edge = Hypergraph::build(3, [vec![1, 2, 3]])?;
    println!(
        "single 3-edge: alpha = {:.6}",
        analytic_connectivity(&single_edge, &config)?.alpha
    );
    Ok(())
}
