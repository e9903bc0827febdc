//! Writes a certificate, reads it back and re-verifies it, then shows that
//! a tampered copy no longer reproduces its flags.

use chroma::cli::certificate::Assignment;
use chroma::constructions::residue_walk_graph_coloring;
use chroma::Certificate;

fn main() -> chroma::Result<()> {
    let c = residue_walk_graph_coloring(3, 2)?;
    let cert = Certificate::vertex_coloring(&c.graph, &c.coloring, &c.report, "residue walk");
    let text = cert.to_json();
    let path = std::env::temp_dir().join("chroma-c43.json");
    std::fs::write(&path, &text)?;

    let back = Certificate::from_json(&std::fs::read_to_string(&path)?)?;
    println!("{} bytes written to {}", text.len(), path.display());
    println!("identical after reload: {}", back.to_json() == text);
    println!("flags reproduced: {}", back.reproduces()?);

    let mut forged = back.clone();
    if let Some(Assignment::Vertices(a)) = &mut forged.assignment {
        a.swap(0, 1);
    }
    let (flags, violations) = forged.reverify()?;
    println!(
        "after swapping two colors: verified = {}, {} monochromatic edges, {} missing pairs",
        flags.verified,
        violations.proper.len(),
        violations.missing_pairs.len()
    );
    println!("forged copy reproduces stored flags: {}", forged.reproduces()?);
    Ok(())
}
