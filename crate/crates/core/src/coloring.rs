//! Vertex and edge colorings and their verifiers.
//!
//! A vertex coloring of a graph is *proper* when no edge is monochromatic and
//! *complete* when every unordered pair of distinct colors occurs on some
//! edge. For digraphs the requirements are *acyclic* (no color class spans a
//! directed cycle, digons included) and complete over ordered pairs. An edge
//! coloring is proper when edges sharing a vertex differ and complete when
//! every pair of colors meets at some vertex.
//!
//! Verifiers never stop at the first problem; the report lists every
//! violation found.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::circulant::{CirculantDigraph, CirculantGraph};
use crate::error::{Error, Result};

/// Undirected edge `(u, v)` with `u < v`.
pub type Edge = (usize, usize);

pub fn canonical_edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

fn check_surjective(k: usize, colors: impl Iterator<Item = usize>) -> Result<()> {
    let mut seen = vec![false; k];
    for c in colors {
        if c >= k {
            return Err(Error::InvalidColoring(format!("color {c} out of range 0..{k}")));
        }
        seen[c] = true;
    }
    if let Some(unused) = seen.iter().position(|&s| !s) {
        return Err(Error::InvalidColoring(format!("color {unused} is never used")));
    }
    Ok(())
}

/// Colors `0..k` assigned to vertices `0..n`; every color is used.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexColoring {
    k: usize,
    assignment: Vec<usize>,
}

impl VertexColoring {
    pub fn new(k: usize, assignment: Vec<usize>) -> Result<Self> {
        check_surjective(k, assignment.iter().copied())?;
        Ok(Self { k, assignment })
    }

    /// Takes `k` to be one more than the largest color.
    pub fn from_assignment(assignment: Vec<usize>) -> Result<Self> {
        let k = assignment.iter().max().map_or(0, |&c| c + 1);
        Self::new(k, assignment)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Vertices of each color, ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.assignment.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    /// Recolors class `b` as `a` and closes the gap left by `b`.
    pub fn merge_classes(&self, a: usize, b: usize) -> Self {
        assert!(a != b && a < self.k && b < self.k);
        let (keep, drop) = (a.min(b), a.max(b));
        let assignment = self
            .assignment
            .iter()
            .map(|&c| match c.cmp(&drop) {
                std::cmp::Ordering::Equal => keep,
                std::cmp::Ordering::Greater => c - 1,
                std::cmp::Ordering::Less => c,
            })
            .collect();
        Self { k: self.k - 1, assignment }
    }
}

/// Colors `0..k` assigned to the edges of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    k: usize,
    assignment: BTreeMap<Edge, usize>,
}

impl EdgeColoring {
    /// Keys are canonicalized to `u < v`.
    pub fn new(k: usize, assignment: impl IntoIterator<Item = (Edge, usize)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for ((u, v), c) in assignment {
            if u == v {
                return Err(Error::InvalidColoring(format!("loop at {u}")));
            }
            if map.insert(canonical_edge(u, v), c).is_some() {
                return Err(Error::InvalidColoring(format!("edge {u}-{v} colored twice")));
            }
        }
        check_surjective(k, map.values().copied())?;
        Ok(Self { k, assignment: map })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn assignment(&self) -> &BTreeMap<Edge, usize> {
        &self.assignment
    }

    pub fn color(&self, u: usize, v: usize) -> Option<usize> {
        self.assignment.get(&canonical_edge(u, v)).copied()
    }

    pub fn classes(&self) -> Vec<Vec<Edge>> {
        let mut classes = vec![Vec::new(); self.k];
        for (&e, &c) in &self.assignment {
            classes[c].push(e);
        }
        classes
    }

    pub fn merge_classes(&self, a: usize, b: usize) -> Self {
        assert!(a != b && a < self.k && b < self.k);
        let (keep, drop) = (a.min(b), a.max(b));
        let assignment = self
            .assignment
            .iter()
            .map(|(&e, &c)| {
                let c = if c == drop {
                    keep
                } else if c > drop {
                    c - 1
                } else {
                    c
                };
                (e, c)
            })
            .collect();
        Self { k: self.k - 1, assignment }
    }
}

/// One reason a coloring is not proper.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Violation {
    /// Monochromatic edge.
    Edge { u: usize, v: usize },
    /// Monochromatic arc. Informational for digraphs, where only cycles matter.
    Arc { from: usize, to: usize },
    /// Two same-colored edges meeting at `vertex`.
    Incidence { vertex: usize, first: Edge, second: Edge },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub k: usize,
    pub proper: bool,
    pub complete: bool,
    /// `None` for undirected colorings.
    pub acyclic: Option<bool>,
    pub proper_violations: Vec<Violation>,
    /// Unordered `(i, j)` with `i < j` for graphs, ordered for digraphs.
    pub missing_pairs: Vec<(usize, usize)>,
    /// A directed cycle inside one color class, first vertex not repeated.
    pub monochromatic_cycle_witness: Option<Vec<usize>>,
}

impl VerificationReport {
    /// Proper and complete for graphs; acyclic and complete for digraphs.
    pub fn holds(&self) -> bool {
        self.complete && self.acyclic.unwrap_or(self.proper)
    }
}

/// Pair table over `k` colors.
struct PairTable {
    k: usize,
    seen: Vec<bool>,
}

impl PairTable {
    fn new(k: usize) -> Self {
        Self { k, seen: vec![false; k * k] }
    }

    fn mark(&mut self, a: usize, b: usize) {
        self.seen[a * self.k + b] = true;
    }

    fn missing_unordered(&self) -> Vec<(usize, usize)> {
        let k = self.k;
        let mut out = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                if !self.seen[a * k + b] && !self.seen[b * k + a] {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn missing_ordered(&self) -> Vec<(usize, usize)> {
        let k = self.k;
        let mut out = Vec::new();
        for a in 0..k {
            for b in 0..k {
                if a != b && !self.seen[a * k + b] {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

fn check_len(n: usize, c: &VertexColoring) -> Result<()> {
    if c.len() != n {
        return Err(Error::SizeMismatch { expected: n, got: c.len() });
    }
    Ok(())
}

pub fn verify_vertex_coloring(g: &CirculantGraph, c: &VertexColoring) -> Result<VerificationReport> {
    check_len(g.n(), c)?;
    let mut table = PairTable::new(c.k());
    let mut proper_violations = Vec::new();
    for (u, v) in g.edges() {
        let (cu, cv) = (c.color(u), c.color(v));
        if cu == cv {
            proper_violations.push(Violation::Edge { u, v });
        } else {
            table.mark(cu, cv);
        }
    }
    let missing_pairs = table.missing_unordered();
    Ok(VerificationReport {
        k: c.k(),
        proper: proper_violations.is_empty(),
        complete: missing_pairs.is_empty(),
        acyclic: None,
        proper_violations,
        missing_pairs,
        monochromatic_cycle_witness: None,
    })
}

pub fn verify_digraph_coloring(d: &CirculantDigraph, c: &VertexColoring) -> Result<VerificationReport> {
    check_len(d.n(), c)?;
    let mut table = PairTable::new(c.k());
    let mut proper_violations = Vec::new();
    for (u, v) in d.arcs() {
        let (cu, cv) = (c.color(u), c.color(v));
        if cu == cv {
            proper_violations.push(Violation::Arc { from: u, to: v });
        } else {
            table.mark(cu, cv);
        }
    }
    let cycle = monochromatic_cycle(d, c);
    let missing_pairs = table.missing_ordered();
    Ok(VerificationReport {
        k: c.k(),
        proper: proper_violations.is_empty(),
        complete: missing_pairs.is_empty(),
        acyclic: Some(cycle.is_none()),
        proper_violations,
        missing_pairs,
        monochromatic_cycle_witness: cycle,
    })
}

/// First directed cycle found among monochromatic arcs, scanning roots in
/// vertex order.
pub fn monochromatic_cycle(d: &CirculantDigraph, c: &VertexColoring) -> Option<Vec<usize>> {
    const WHITE: u8 = 0;
    const GRAY: u8 = 1;
    const BLACK: u8 = 2;
    let n = d.n();
    let mono: Vec<Vec<usize>> = (0..n)
        .map(|u| d.out_neighbors(u).filter(|&v| c.color(v) == c.color(u)).collect())
        .collect();
    let mut state = vec![WHITE; n];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if state[root] != WHITE {
            continue;
        }
        state[root] = GRAY;
        stack.push((root, 0));
        while let Some(&mut (u, ref mut next)) = stack.last_mut() {
            if let Some(&v) = mono[u].get(*next) {
                *next += 1;
                match state[v] {
                    WHITE => {
                        state[v] = GRAY;
                        stack.push((v, 0));
                    }
                    GRAY => {
                        let start = stack.iter().position(|&(w, _)| w == v).expect("gray vertex on stack");
                        return Some(stack[start..].iter().map(|&(w, _)| w).collect());
                    }
                    _ => {}
                }
            } else {
                state[u] = BLACK;
                stack.pop();
            }
        }
    }
    None
}

pub fn verify_edge_coloring(g: &CirculantGraph, c: &EdgeColoring) -> Result<VerificationReport> {
    let map = c.assignment();
    let mut incident: Vec<Vec<(usize, Edge)>> = vec![Vec::new(); g.n()];
    let mut matched = 0usize;
    for (u, v) in g.edges() {
        let Some(&color) = map.get(&(u, v)) else {
            return Err(Error::KeySetMismatch(format!("edge {u}-{v} has no color")));
        };
        matched += 1;
        incident[u].push((color, (u, v)));
        incident[v].push((color, (u, v)));
    }
    if matched != map.len() {
        let extra = map
            .keys()
            .find(|&&(u, v)| u >= g.n() || v >= g.n() || !g.is_adjacent(u, v))
            .copied()
            .unwrap_or_default();
        return Err(Error::KeySetMismatch(format!("{}-{} is not an edge", extra.0, extra.1)));
    }

    let mut table = PairTable::new(c.k());
    let mut proper_violations = Vec::new();
    for (vertex, list) in incident.iter_mut().enumerate() {
        list.sort_unstable();
        for w in list.windows(2) {
            if w[0].0 == w[1].0 {
                proper_violations.push(Violation::Incidence { vertex, first: w[0].1, second: w[1].1 });
            }
        }
        for (i, &(a, _)) in list.iter().enumerate() {
            for &(b, _) in &list[i + 1..] {
                if a != b {
                    table.mark(a, b);
                }
            }
        }
    }
    let missing_pairs = table.missing_unordered();
    Ok(VerificationReport {
        k: c.k(),
        proper: proper_violations.is_empty(),
        complete: missing_pairs.is_empty(),
        acyclic: None,
        proper_violations,
        missing_pairs,
        monochromatic_cycle_witness: None,
    })
}
