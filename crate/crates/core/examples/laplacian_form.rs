//! Evaluate the Laplacian form `L x^m` of a non-uniform hypergraph without
//! building the tensor, and compare it with a dense contraction.

use hyperalpha::tensor::{
    dense_contraction_oracle, edge_laplacian_form, edge_power_sum, laplacian_form,
    laplacian_gradient, omega, LaplacianForm,
};
use hyperalpha::{EvalPoint, Hypergraph};

fn main() -> hyperalpha::Result<()> {
    for (m, s) in [(3, 2), (4, 2), (4, 3), (5, 3)] {
        println!(
            "surjections from {m} slots onto {s} vertices: {}",
            omega(m, s)?
        );
    }

    let h = Hypergraph::build(4, [vec![1, 2], vec![2, 3, 4], vec![1, 3, 4]])?;
    let x = EvalPoint::new(vec![0.9, 0.4, 0.7, 0.2])?;
    let m = h.order();

    for edge in h.edges() {
        println!(
            "edge {:?}: covering power sum {:.6}, contribution {:.6}",
            edge,
            edge_power_sum(edge, &x, m)?,
            edge_laplacian_form(edge, &x, m)?
        );
    }

    let value = laplacian_form(&h, &x)?;
    let dense = dense_contraction_oracle(&h, &x)?;
    println!("L x^m = {value:.12} (dense contraction {dense:.12})");
    println!("gradient {:?}", laplacian_gradient(&h, &x)?);

    let form = LaplacianForm::new(&h)?;
    let ones = vec![1.0; h.n()];
    println!("on the all-ones vector: {:.3e}", form.value(&ones));
    Ok(())
}
