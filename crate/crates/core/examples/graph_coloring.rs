//! Residue-walk colorings of C_n(1,a) with 4q+1 colors.
//!
//! Prints the segments for C_43(1,2), then sweeps every valid `a` for a
//! few primes and reports which step orders verify.

use chroma::bounds::{size_upper_bound, Kind};
use chroma::constructions::{residue_walk_graph_coloring_with, ResidueWalkPlan, StepOrder};
use chroma::numtheory::classify_residues;
use chroma::Error;

fn main() -> chroma::Result<()> {
    let plan = ResidueWalkPlan::graph(3, 2)?;
    for (i, seg) in plan.segments().iter().enumerate() {
        println!("R{} = {seg:?}", i + 1);
    }
    let c = plan.build_graph()?;
    let bound = size_upper_bound(c.graph.edge_count() as u64, Kind::Graph);
    println!(
        "{}: k = {}, proper = {}, complete = {}, size bound = {bound}\n",
        c.graph.label(),
        c.coloring.k(),
        c.report.proper,
        c.report.complete
    );

    for p in [13, 17, 29] {
        let q = (p - 1) / 4;
        let nqr = classify_residues(p)?.nqr;
        for a in nqr.into_iter().filter(|&a| a <= 4 * q) {
            let status = match residue_walk_graph_coloring_with(q, a, StepOrder::DEFAULT_SEARCH) {
                Ok(c) => format!("ok with steps {:?}", c.plan.steps),
                Err(Error::ConstructionNotVerified(r)) => {
                    format!("no step order works ({} monochromatic edges)", r.proper_violations.len())
                }
                Err(e) => return Err(e),
            };
            println!("p = {p:2}, a = {a:2}, n = {:4}: {status}", 4 * q * q + a * q + 1);
        }
    }
    Ok(())
}
