//! Second Laplacian eigenvalue of a graph, Rayleigh quotients of test vectors,
//! and the classical graph inequalities relating it to diameter and cuts.

use hyperalpha::bounds::graph_bounds_check;
use hyperalpha::combinatorics::{clique_expansion, fiedler_quotient, lambda2, Graph};
use hyperalpha::solver::{analytic_connectivity, SolverConfig};
use hyperalpha::Hypergraph;

fn main() -> hyperalpha::Result<()> {
    let cycle = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6)))?;
    let l2 = lambda2(&cycle)?;
    println!("6-cycle: lambda2 = {l2:.10}");

    let test_vector: Vec<f64> = (0..6)
        .map(|i| (i as f64 * std::f64::consts::PI / 3.0).cos())
        .collect();
    println!(
        "quotient of a cosine vector: {:.10}",
        fiedler_quotient(&cycle, &test_vector)?
    );

    let alpha = analytic_connectivity(&cycle.to_hypergraph(), &SolverConfig::default())?.alpha;
    println!("analytic connectivity of the same graph: {alpha:.10}");

    let report = graph_bounds_check(&cycle)?;
    for c in &report.checks {
        println!(
            "  {}: {:.6} <= {:.6} ({:?})",
            c.name,
            c.lhs.unwrap_or(f64::NAN),
            c.rhs.unwrap_or(f64::NAN),
            c.status
        );
    }

    let h = Hypergraph::build(5, [vec![1, 2, 3], vec![3, 4, 5]])?;
    let expansion = clique_expansion(&h);
    println!(
        "clique expansion has {} edges, lambda2 = {:.6}",
        expansion.edges().len(),
        lambda2(&expansion)?
    );
    Ok(())
}
