//! Check the diameter, degree and Cheeger-type bounds on one hypergraph, then
//! on a seeded ensemble of random instances.

use hyperalpha::bounds::{verify, VerifyOptions};
use hyperalpha::ensemble::{verify_ensemble, EnsembleSpec, EnsembleSummary};
use hyperalpha::Hypergraph;

fn main() -> hyperalpha::Result<()> {
    let h = Hypergraph::build(5, [vec![1, 2, 3], vec![3, 4], vec![3, 4, 5], vec![1, 5]])?;
    let report = verify(&h, &VerifyOptions::default())?;
    println!(
        "alpha = {:?} (certified: {}), i(H) = {:?}, diameter {:?}",
        report.quantities.alpha,
        report.quantities.certified,
        report.quantities.isoperimetric.as_ref().map(|c| c.as_f64()),
        report.quantities.diameter
    );
    for c in &report.checks {
        println!("  {:<15} {:?} slack {:?}", c.name, c.status, c.slack);
    }

    let spec = EnsembleSpec {
        count: 40,
        n_range: (4, 6),
        size_range: (2, 4),
        edge_range: (2, 8),
        connected_only: true,
        seed: 11,
    };
    let outcomes = verify_ensemble(&spec, &VerifyOptions::default())?;
    let summary = EnsembleSummary::from_outcomes(&outcomes);
    println!("{}", serde_json::to_string_pretty(&summary)?);
    Ok(())
}
