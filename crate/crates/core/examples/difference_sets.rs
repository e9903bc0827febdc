//! Difference sets: the table, exhaustive search, and the plane axioms.

use chroma::planes::{chord_table, first_difference_set, search_difference_set, DifferenceSetTable};

fn main() -> chroma::Result<()> {
    for (n, d) in DifferenceSetTable::embedded().entries() {
        let ds = DifferenceSetTable::embedded().lookup(n).expect("present")?;
        println!("n = {n:3}: {d:?} valid, q = {}", ds.q());
    }

    for q in [2, 3, 4, 5, 6, 7] {
        match search_difference_set(q) {
            Ok(ds) => {
                let raw = first_difference_set(q).expect("found above");
                println!("q = {q}: first found {:?}, reported as {:?}", raw.elements(), ds.elements());
            }
            Err(e) => println!("q = {q}: {e}"),
        }
    }

    let ds = search_difference_set(3)?;
    let plane = ds.plane();
    println!("\nplane of order 3 satisfies the axioms: {}", plane.check_axioms());
    println!("line through 0 and 6: {:?}", plane.line(plane.line_through(0, 6)));
    for c in chord_table(&ds).chords() {
        println!("chord {{{}, {}}} has length {}", c.a, c.b, c.length);
    }
    Ok(())
}
