//! Closed-form upper bounds and the cycle formula.
//!
//! Everything here is integer arithmetic. The size bounds are floors of
//! `1/2 + √(1/4 + c·m)`, evaluated as `(1 + isqrt(1 + 4c·m)) / 2`, which is
//! exact because `(1 + √D)/2` and `(1 + ⌊√D⌋)/2` have the same floor.

use serde::{Deserialize, Serialize};

/// Whether pairs of colors are unordered (graphs) or ordered (digraphs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Graph,
    Digraph,
}

/// Largest `k` with `k(k−1)/2 ≤ m` for graphs, `k(k−1) ≤ m` for digraphs: a
/// complete coloring needs one edge (arc) per unordered (ordered) pair.
pub fn size_upper_bound(m: u64, kind: Kind) -> u64 {
    let disc = match kind {
        Kind::Graph => 1 + 8 * m,
        Kind::Digraph => 1 + 4 * m,
    };
    disc.isqrt().div_ceil(2)
}

/// One row of the `f`/`g` sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FgRow {
    pub x: u64,
    /// `⌊nr / 2x⌋`
    pub f_floor: u64,
    pub g: u64,
    pub min: u64,
}

/// All bounds that apply to an `r`-regular graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundProfile {
    pub n: u64,
    pub r: u64,
    /// Edge count `nr/2`.
    pub m: u64,
    pub eq2_bound: u64,
    pub eq3_bound: u64,
    /// Size bound applied to the line graph, which has `n·r(r−1)/2` edges.
    pub line_graph_bound: u64,
    pub fg_bound: u64,
    pub fg_argmax_x: u64,
    pub fg_table: Vec<FgRow>,
}

/// `g_{n,r}(x)`: the most color classes possible when the smallest class
/// has `x` edges.
pub fn g_value(n: u64, r: u64, x: u64) -> u64 {
    if r + 2 * x < n {
        2 * x * (r - 1) + 1
    } else {
        // negative once 2x > n + r − 1; no class count is possible there
        let value = x as i128 * (n as i128 + r as i128 - 1 - 2 * x as i128) + 1;
        value.max(0) as u64
    }
}

/// Max over integer `x ≥ 1` of `min(⌊nr/2x⌋, g(x))`.
///
/// `⌊f⌋` is non-increasing in `x`, so once it falls to the best value seen
/// no later row can improve and the sweep stops; `fg_table` holds the rows
/// actually evaluated.
pub fn fg_upper_bound(n: u64, r: u64) -> BoundProfile {
    assert!(n >= 3 && (1..n).contains(&r), "need n ≥ 3 and 1 ≤ r ≤ n−1");
    let nr = n * r;
    let mut table = Vec::new();
    let (mut best, mut argmax) = (0, 0);
    for x in 1..=nr / 2 {
        let f_floor = nr / (2 * x);
        if f_floor <= best {
            break;
        }
        let g = g_value(n, r, x);
        let min = f_floor.min(g);
        table.push(FgRow { x, f_floor, g, min });
        if min > best {
            best = min;
            argmax = x;
        }
    }
    let m = nr / 2;
    BoundProfile {
        n,
        r,
        m,
        eq2_bound: size_upper_bound(m, Kind::Graph),
        eq3_bound: size_upper_bound(m, Kind::Digraph),
        line_graph_bound: size_upper_bound(n * r * (r - 1) / 2, Kind::Graph),
        fg_bound: best,
        fg_argmax_x: argmax,
        fg_table: table,
    }
}

/// Number of positive integers `x` with `2x² + x + 1 = n`.
pub fn cycle_correction(n: u64) -> u64 {
    if n < 4 {
        return 0;
    }
    // 2x² + x + 1 = n  ⇔  x = (−1 + √(8n − 7)) / 4
    let disc = 8 * n - 7;
    let s = disc.isqrt();
    u64::from(s * s == disc && (s - 1).is_multiple_of(4) && s > 1)
}

/// Achromatic number (equivalently, achromatic index) of the cycle `C_n`:
/// `max{k : k⌊k/2⌋ ≤ n} − s(n)`.
pub fn cycle_achromatic(n: u64) -> u64 {
    assert!(n >= 3, "cycles need at least three vertices");
    let mut k: u64 = 1;
    while (k + 1) * k.div_ceil(2) <= n {
        k += 1;
    }
    k - cycle_correction(n)
}
