//! Exact achromatic, diachromatic and chromatic numbers of small circulants.

use chroma::bounds::{cycle_achromatic, size_upper_bound, Kind};
use chroma::circulant::{CirculantDigraph, CirculantGraph};
use chroma::search::{
    exact_achromatic, exact_achromatic_index, exact_chromatic_number, exact_diachromatic, exact_dichromatic_number,
    SearchBudget,
};

fn main() -> chroma::Result<()> {
    let budget = SearchBudget::default();
    println!("{:<14} {:>3} {:>3} {:>5} {:>6}", "graph", "χ", "α", "bound", "α₁");
    for (n, lengths) in [(5, vec![1]), (8, vec![1, 3]), (9, vec![1, 2]), (10, vec![1, 4]), (12, vec![1])] {
        let g = CirculantGraph::new(n, lengths)?;
        let chi = exact_chromatic_number(&g, &budget)?.value;
        let alpha = exact_achromatic(&g, &budget)?;
        let index = match exact_achromatic_index(&g, &budget) {
            Ok(r) => r.value.to_string(),
            Err(_) => "-".into(),
        };
        let bound = size_upper_bound(g.edge_count() as u64, Kind::Graph);
        println!("{:<14} {chi:>3} {:>3} {bound:>5} {index:>6}", g.label(), alpha.value);
    }

    println!();
    for n in [3, 5, 7, 9] {
        let d = CirculantDigraph::new(n, [1, 2])?;
        let dc = exact_dichromatic_number(&d, &budget)?.value;
        let dac = exact_diachromatic(&d, &budget)?;
        println!("{}: dc = {dc}, dac = {} witness {:?}", d.label(), dac.value, dac.witness.assignment());
    }

    println!("\ncycle formula vs search:");
    for n in 3..=12u64 {
        let g = CirculantGraph::new(n as usize, [1])?;
        println!("  n = {n:2}: {} / {}", cycle_achromatic(n), exact_achromatic(&g, &budget)?.value);
    }
    Ok(())
}
