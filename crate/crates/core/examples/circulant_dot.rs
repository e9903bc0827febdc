//! Builds a circulant graph and digraph and prints them as DOT.
//!
//! `cargo run --example circulant_dot | dot -Tsvg > c.svg`

use chroma::circulant::{build_digraph, build_graph};

fn main() -> chroma::Result<()> {
    let g = build_graph(10, [1, 3])?;
    eprintln!("{}: {} edges, {}-regular", g.label(), g.edge_count(), g.degree());
    print!("{}", g.to_dot());

    let d = build_digraph(7, [1, 3])?;
    eprintln!("{}: {} arcs", d.label(), d.arc_count());
    print!("{}", d.to_dot());
    Ok(())
}
