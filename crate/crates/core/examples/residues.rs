//! Quadratic residues and length representatives for a few primes.
//!
//! `cargo run --example residues -- 13 29 31`

use chroma::numtheory::classify_residues;

fn main() {
    let primes: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let primes = if primes.is_empty() { vec![5, 13, 11, 17] } else { primes };
    for p in primes {
        match classify_residues(p) {
            Ok(r) => {
                println!("p = {p} (≡ {} mod 4)", r.residue_class);
                println!("  qr          {:?}", r.qr);
                println!("  nqr         {:?}", r.nqr);
                println!("  length reps {:?}", r.length_reps);
                println!("  2 is a {}", if r.is_qr(2) { "residue" } else { "non-residue" });
            }
            Err(e) => println!("p = {p}: {e}"),
        }
    }
}
