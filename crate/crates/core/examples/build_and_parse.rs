//! Build a hypergraph from 1-based edge lists, inspect it, and round-trip it
//! through the text format.

use hyperalpha::{BuildOptions, Hypergraph};

fn main() -> hyperalpha::Result<()> {
    let h = Hypergraph::build(6, [vec![1, 2, 3], vec![3, 4], vec![4, 5, 6]])?;
    println!(
        "n = {}, |E| = {}, order m = {}",
        h.n(),
        h.edge_count(),
        h.order()
    );

    let profile = h.degree_profile();
    println!(
        "degrees {:?}, max {}, smallest edge {}",
        profile.degrees, profile.max_degree, profile.s_min
    );
    println!(
        "uniform: {:?}, connected: {}",
        h.uniformity(),
        h.is_connected()
    );

    let text = h.serialize();
    print!("serialized:\n{text}");
    assert_eq!(Hypergraph::parse(&text)?, h);

    let with_comments =
        "# a triangle plus a pendant edge\n4\n1 2\r\n2 3\n1 3 # closing edge\n3 4\n";
    let g = Hypergraph::parse(with_comments)?;
    println!(
        "parsed {} edges, components {:?}",
        g.edge_count(),
        g.components()
    );

    match Hypergraph::parse("3\n1 2\n2 1\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    let loops = Hypergraph::build_with(
        3,
        [vec![1], vec![1, 2, 3]],
        BuildOptions {
            allow_singletons: true,
        },
    )?;
    println!(
        "with a loop edge: order {}, smallest edge {}",
        loops.order(),
        loops.min_edge_size()
    );
    Ok(())
}
