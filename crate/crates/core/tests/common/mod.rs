//! Independent oracles for the integration tests. Nothing here calls into
//! the crate's verifiers: adjacency comes straight from the definition of a
//! circulant, acyclicity from Kahn's algorithm, residues from Euler's
//! criterion.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

pub fn adjacent(n: usize, lengths: &[usize], u: usize, v: usize) -> bool {
    let d = (u + n - v) % n;
    d != 0 && lengths.iter().any(|&l| l == d || l == n - d)
}

pub fn all_edges(n: usize, lengths: &[usize]) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            if adjacent(n, lengths, u, v) {
                out.insert((u, v));
            }
        }
    }
    out
}

/// `(proper, complete)` for a vertex coloring of `C_n(J)`.
pub fn vertex_oracle(n: usize, lengths: &[usize], colors: &[usize]) -> (bool, bool) {
    assert_eq!(colors.len(), n);
    let k = colors.iter().max().map_or(0, |&c| c + 1);
    let mut proper = true;
    let mut pairs = BTreeSet::new();
    for (u, v) in all_edges(n, lengths) {
        let (a, b) = (colors[u], colors[v]);
        if a == b {
            proper = false;
        } else {
            pairs.insert((a.min(b), a.max(b)));
        }
    }
    (proper, pairs.len() == k * (k - 1) / 2)
}

/// `(acyclic, complete)` for a vertex coloring of the digraph with arcs
/// `u → u + l`.
pub fn digraph_oracle(n: usize, lengths: &[usize], colors: &[usize]) -> (bool, bool) {
    let k = colors.iter().max().map_or(0, |&c| c + 1);
    let arcs: Vec<(usize, usize)> = (0..n).flat_map(|u| lengths.iter().map(move |&l| (u, (u + l) % n))).collect();
    let pairs: BTreeSet<(usize, usize)> = arcs
        .iter()
        .map(|&(u, v)| (colors[u], colors[v]))
        .filter(|(a, b)| a != b)
        .collect();
    let acyclic = (0..k).all(|c| {
        // Kahn: the class is acyclic iff every vertex gets removed
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == c).collect();
        let mut indeg: BTreeMap<usize, usize> = members.iter().map(|&v| (v, 0)).collect();
        for &(u, v) in &arcs {
            if colors[u] == c && colors[v] == c {
                *indeg.get_mut(&v).unwrap() += 1;
            }
        }
        let mut queue: Vec<usize> = indeg.iter().filter(|(_, &d)| d == 0).map(|(&v, _)| v).collect();
        let mut removed = 0;
        while let Some(u) = queue.pop() {
            removed += 1;
            for &(x, v) in &arcs {
                if x == u && colors[v] == c {
                    let d = indeg.get_mut(&v).unwrap();
                    *d -= 1;
                    if *d == 0 {
                        queue.push(v);
                    }
                }
            }
        }
        removed == members.len()
    });
    (acyclic, pairs.len() == k * (k - 1))
}

/// `(proper, complete)` for an edge coloring of `C_n(J)`; panics when the
/// keys are not exactly the edge set.
pub fn edge_oracle(n: usize, lengths: &[usize], colors: &BTreeMap<(usize, usize), usize>) -> (bool, bool) {
    let edges = all_edges(n, lengths);
    assert_eq!(colors.keys().copied().collect::<BTreeSet<_>>(), edges, "edge set mismatch");
    let k = colors.values().max().map_or(0, |&c| c + 1);
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (&(u, v), &c) in colors {
        at[u].push(c);
        at[v].push(c);
    }
    let mut proper = true;
    let mut pairs = BTreeSet::new();
    for list in &at {
        let distinct: BTreeSet<usize> = list.iter().copied().collect();
        proper &= distinct.len() == list.len();
        for &a in &distinct {
            for &b in &distinct {
                if a < b {
                    pairs.insert((a, b));
                }
            }
        }
    }
    (proper, pairs.len() == k * (k - 1) / 2)
}

pub fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Euler's criterion.
pub fn is_residue(x: u64, p: u64) -> bool {
    !x.is_multiple_of(p) && mod_pow(x, (p - 1) / 2, p) == 1
}

pub fn is_prime_naive(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Every non-zero residue mod `n` is a difference of exactly one ordered pair.
pub fn is_planar_difference_set(d: &[usize], n: usize) -> bool {
    let mut count = vec![0; n];
    for &a in d {
        for &b in d {
            if a != b {
                count[(a + n - b) % n] += 1;
            }
        }
    }
    count[1..].iter().all(|&c| c == 1)
}

/// Largest `k` with `k(k−1)/2 ≤ m`, by counting up.
pub fn size_bound_naive(m: u64, ordered: bool) -> u64 {
    let mut k = 1;
    loop {
        let need = if ordered { (k + 1) * k } else { (k + 1) * k / 2 };
        if need > m {
            return k;
        }
        k += 1;
    }
}
