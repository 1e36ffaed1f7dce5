//! Edge boundaries, the exact isoperimetric number, and the diameter.

use hyperalpha::combinatorics::{boundary, diameter, isoperimetric_number, Diameter};
use hyperalpha::generate::{generate, Model};
use hyperalpha::Hypergraph;

fn main() -> hyperalpha::Result<()> {
    let path = generate(
        &Model::Hyperpath {
            n: 9,
            k: 3,
            overlap: 1,
        },
        0,
    )?;
    let cut = isoperimetric_number(&path)?;
    println!(
        "hyperpath: i(H) = {} = {:.4}, attained by {:?}",
        cut.value,
        cut.as_f64(),
        cut.witness
    );
    println!("diameter {:?}", diameter(&path));

    let subset = [0, 1, 2];
    println!("edges leaving {{1,2,3}}: {:?}", boundary(&path, &subset)?);

    let split = Hypergraph::build(6, [vec![1, 2, 3], vec![4, 5, 6]])?;
    let cut = isoperimetric_number(&split)?;
    println!(
        "two components: i(H) = {}, diameter {:?}",
        cut.value,
        diameter(&split)
    );
    assert_eq!(diameter(&split), Diameter::Infinite);
    Ok(())
}
