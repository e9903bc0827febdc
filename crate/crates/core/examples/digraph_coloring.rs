//! Complete acyclic colorings of circulant digraphs with 4q+3 colors.

use chroma::bounds::{size_upper_bound, Kind};
use chroma::constructions::{residue_walk_digraph_coloring, ResidueWalkPlan};

fn main() -> chroma::Result<()> {
    let plan = ResidueWalkPlan::digraph(2, 2)?;
    for (i, seg) in plan.segments().iter().enumerate() {
        println!("R{} = {seg:?}", i + 1);
    }
    let c = residue_walk_digraph_coloring(2, 2)?;
    println!(
        "{}: k = {}, acyclic = {:?}, complete = {}, size bound = {}",
        c.graph.label(),
        c.coloring.k(),
        c.report.acyclic,
        c.report.complete,
        size_upper_bound(c.graph.arc_count() as u64, Kind::Digraph)
    );

    // a = 3 reaches 4q+3 but falls short of the size bound
    for q in 1..=4 {
        if let Ok(c) = residue_walk_digraph_coloring(q, 3) {
            let bound = size_upper_bound(c.graph.arc_count() as u64, Kind::Digraph);
            println!("q = {q}: {} colored with {} colors, bound {bound}", c.graph.label(), c.coloring.k());
        }
    }
    Ok(())
}
