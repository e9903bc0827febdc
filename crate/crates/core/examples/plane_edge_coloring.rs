//! Edge colorings of C_n(J) from a cyclic projective plane, compared with
//! the f/g upper bound.

use chroma::bounds::fg_upper_bound;
use chroma::planes::{factor_length_sets, plane_edge_coloring, DifferenceSetTable};

fn main() -> chroma::Result<()> {
    let table = DifferenceSetTable::from_env()?;
    for n in [13, 31, 57] {
        let ds = table.lookup(n).expect("embedded entry")?;
        let factors = factor_length_sets(&ds)?;
        println!("n = {n}, D = {:?}", ds.elements());
        for t in 1..=ds.q() {
            let mut lengths = factors[..t].concat();
            lengths.sort_unstable();
            let pc = plane_edge_coloring(&ds, &lengths)?;
            let fg = fg_upper_bound(n as u64, pc.graph.degree() as u64);
            println!(
                "  t = {t}: J = {lengths:?}, {} colors, fg bound {} (x = {})",
                pc.coloring.k(),
                fg.fg_bound,
                fg.fg_argmax_x
            );
        }
    }
    Ok(())
}
