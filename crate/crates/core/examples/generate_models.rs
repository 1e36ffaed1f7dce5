//! Seeded generators: uniform and mixed-size random hypergraphs, complete
//! uniform hypergraphs and loose hyperpaths.

use hyperalpha::generate::{generate, Model};

fn main() -> hyperalpha::Result<()> {
    let models = [
        Model::UniformRandom {
            n: 8,
            k: 3,
            edges: 6,
        },
        Model::NonuniformRandom {
            n: 8,
            size_weights: vec![(2, 1.0), (3, 2.0), (4, 1.0)],
            edges: 7,
        },
        Model::CompleteUniform { n: 5, k: 3 },
        Model::Hyperpath {
            n: 9,
            k: 3,
            overlap: 1,
        },
    ];
    for model in &models {
        let h = generate(model, 42)?;
        println!("{model:?}");
        println!("  edges {:?}", h.edges());
        assert_eq!(h, generate(model, 42)?, "same seed, same hypergraph");
    }

    let too_many = Model::UniformRandom {
        n: 4,
        k: 3,
        edges: 5,
    };
    if let Err(e) = generate(&too_many, 0) {
        println!("infeasible request: {e}");
    }
    Ok(())
}
