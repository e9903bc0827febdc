//! Primality and quadratic residues modulo an odd prime.
//!
//! The residue walks in [`crate::constructions`] step through a fixed set of
//! residues: for `p ≡ 1 (mod 4)` the residues are closed under negation, so an
//! undirected walk only needs one representative `r ≤ (p−1)/2` from every
//! `{r, p−r}` pair; for `p ≡ 3 (mod 4)` negation swaps residues and
//! non-residues, and a directed walk needs all of them.

use serde::Serialize;

use crate::error::{Error, Result};

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Quadratic residues and non-residues of `Z_p`, plus the step set a residue
/// walk uses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidueClassification {
    pub modulus: usize,
    pub qr: Vec<usize>,
    pub nqr: Vec<usize>,
    /// One residue per `{r, p−r}` pair when `p ≡ 1 (mod 4)`; every residue
    /// when `p ≡ 3 (mod 4)`.
    pub length_reps: Vec<usize>,
    /// `p mod 4`, either 1 or 3.
    pub residue_class: usize,
    #[serde(skip)]
    is_residue: Vec<bool>,
}

impl ResidueClassification {
    pub fn is_qr(&self, x: usize) -> bool {
        self.is_residue[x % self.modulus]
    }

    /// Non-zero and not a square.
    pub fn is_nqr(&self, x: usize) -> bool {
        let x = x % self.modulus;
        x != 0 && !self.is_residue[x]
    }

    /// Number of representatives per walk, `q` in `p = 4q+1` or `2q+1` in
    /// `p = 4q+3`.
    pub fn step_count(&self) -> usize {
        self.length_reps.len()
    }
}

/// Classifies `1..p` into squares and non-squares mod `p`.
pub fn classify_residues(p: usize) -> Result<ResidueClassification> {
    if p.is_multiple_of(2) || !is_prime(p as u64) {
        return Err(Error::NotOddPrime(p as u64));
    }
    let mut is_residue = vec![false; p];
    for x in 1..p {
        is_residue[x * x % p] = true;
    }
    let qr: Vec<usize> = (1..p).filter(|&x| is_residue[x]).collect();
    let nqr: Vec<usize> = (1..p).filter(|&x| !is_residue[x]).collect();
    let residue_class = p % 4;
    let length_reps = if residue_class == 1 {
        qr.iter().copied().filter(|&r| r <= (p - 1) / 2).collect()
    } else {
        qr.clone()
    };
    Ok(ResidueClassification {
        modulus: p,
        qr,
        nqr,
        length_reps,
        residue_class,
        is_residue,
    })
}

/// Odd primes up to and including `limit`.
pub fn odd_primes_up_to(limit: usize) -> impl Iterator<Item = usize> {
    (3..=limit).step_by(2).filter(|&n| is_prime(n as u64))
}
