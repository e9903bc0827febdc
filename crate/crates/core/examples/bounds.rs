//! Size bounds, the f/g bound with its sweep table, and the cycle formula.

use chroma::bounds::{cycle_achromatic, fg_upper_bound, size_upper_bound, Kind};

fn main() {
    for m in [86, 122, 78] {
        println!(
            "m = {m}: graph bound {}, digraph bound {}",
            size_upper_bound(m, Kind::Graph),
            size_upper_bound(m, Kind::Digraph)
        );
    }

    let profile = fg_upper_bound(31, 12);
    println!("\nn = 31, r = 12: fg bound {} at x = {}", profile.fg_bound, profile.fg_argmax_x);
    println!("{:>4} {:>8} {:>6} {:>6}", "x", "⌊f⌋", "g", "min");
    for row in &profile.fg_table {
        println!("{:>4} {:>8} {:>6} {:>6}", row.x, row.f_floor, row.g, row.min);
    }

    println!();
    for n in 3..=24 {
        print!("α(C_{n}) = {}  ", cycle_achromatic(n));
        if n % 6 == 2 {
            println!();
        }
    }
    println!();
}
