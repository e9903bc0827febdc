//! Circulant graphs `C_n(J)` and digraphs `C⃗_n(J)` over `Z_n`.
//!
//! Neither type stores edges. Adjacency is answered from `n` and the length
//! set, and edge lists are materialized on demand in a fixed order so that
//! exports and certificates are byte-stable.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::coloring::VertexColoring;
use crate::error::{Error, Result};

fn normalize_lengths(lengths: impl IntoIterator<Item = usize>, n: usize, max: usize) -> Result<Vec<usize>> {
    let mut lengths: Vec<usize> = lengths.into_iter().collect();
    lengths.sort_unstable();
    lengths.dedup();
    if lengths.is_empty() {
        return Err(Error::EmptyLengthSet);
    }
    if let Some(&bad) = lengths.iter().find(|&&l| l == 0 || l > max) {
        return Err(Error::LengthOutOfRange { length: bad, n, max });
    }
    Ok(lengths)
}

/// Undirected circulant graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CirculantGraph {
    n: usize,
    lengths: Vec<usize>,
}

impl CirculantGraph {
    /// Builds `C_n(J)`. Lengths are deduplicated and sorted; each must lie in
    /// `1..=n/2`.
    pub fn new(n: usize, lengths: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewVertices { n, min: 3 });
        }
        let lengths = normalize_lengths(lengths, n, n / 2)?;
        Ok(Self { n, lengths })
    }

    /// The complete graph `K_n` as `C_n(1..=n/2)`.
    pub fn complete(n: usize) -> Result<Self> {
        Self::new(n, 1..=n / 2)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    fn has_antipodal(&self) -> bool {
        self.n.is_multiple_of(2) && self.lengths.last() == Some(&(self.n / 2))
    }

    pub fn edge_count(&self) -> usize {
        let m = self.n * self.lengths.len();
        if self.has_antipodal() {
            m - self.n / 2
        } else {
            m
        }
    }

    pub fn degree(&self) -> usize {
        2 * self.lengths.len() - usize::from(self.has_antipodal())
    }

    /// Circular distance `min(|u−v|, n−|u−v|)`.
    pub fn chord_length(&self, u: usize, v: usize) -> usize {
        let d = (u % self.n + self.n - v % self.n) % self.n;
        d.min(self.n - d)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        let d = self.chord_length(u, v);
        d != 0 && self.lengths.binary_search(&d).is_ok()
    }

    /// Neighbours of `u` in length order, `u+ℓ` before `u−ℓ`.
    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        let n = self.n;
        let u = u % n;
        let mut out = Vec::with_capacity(2 * self.lengths.len());
        for &l in &self.lengths {
            let fwd = (u + l) % n;
            let back = (u + n - l) % n;
            out.push(fwd);
            if back != fwd {
                out.push(back);
            }
        }
        out
    }

    /// Edges as `(u, v)` with `u < v`, ordered by `u`, then by length, then
    /// by `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |u| {
            let mut row = Vec::with_capacity(2 * self.lengths.len());
            for &l in &self.lengths {
                let fwd = (u + l) % n;
                let back = (u + n - l) % n;
                if fwd > u {
                    row.push(fwd);
                }
                if back > u && back != fwd {
                    row.push(back);
                }
            }
            row.into_iter().map(move |v| (u, v))
        })
    }

    pub fn to_dot(&self) -> String {
        self.to_dot_colored(None)
    }

    /// DOT text; when a coloring is given, every vertex gets a label line
    /// `v{i}:{color}` before the edge lines.
    pub fn to_dot_colored(&self, coloring: Option<&VertexColoring>) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{}\" {{", self.label());
        write_vertex_attrs(&mut out, coloring);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  v{u} -- v{v};");
        }
        out.push_str("}\n");
        out
    }

    /// `C_n(l1,l2,...)`.
    pub fn label(&self) -> String {
        format!("C_{}({})", self.n, join(&self.lengths))
    }
}

/// Directed circulant graph: arc `i → i+ℓ` for every length `ℓ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CirculantDigraph {
    n: usize,
    lengths: Vec<usize>,
}

impl CirculantDigraph {
    /// Builds `C⃗_n(J)` with each length in `1..n`.
    pub fn new(n: usize, lengths: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewVertices { n, min: 2 });
        }
        let lengths = normalize_lengths(lengths, n, n - 1)?;
        Ok(Self { n, lengths })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn arc_count(&self) -> usize {
        self.n * self.lengths.len()
    }

    pub fn out_degree(&self) -> usize {
        self.lengths.len()
    }

    pub fn in_degree(&self) -> usize {
        self.lengths.len()
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        let d = (to % self.n + self.n - from % self.n) % self.n;
        d != 0 && self.lengths.binary_search(&d).is_ok()
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let u = u % self.n;
        self.lengths.iter().map(move |&l| (u + l) % self.n)
    }

    pub fn in_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let u = u % self.n;
        self.lengths.iter().map(move |&l| (u + self.n - l) % self.n)
    }

    /// Arcs ordered by tail, then by length.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbors(u).map(move |v| (u, v)))
    }

    pub fn to_dot(&self) -> String {
        self.to_dot_colored(None)
    }

    pub fn to_dot_colored(&self, coloring: Option<&VertexColoring>) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", self.label());
        write_vertex_attrs(&mut out, coloring);
        for (u, v) in self.arcs() {
            let _ = writeln!(out, "  v{u} -> v{v};");
        }
        out.push_str("}\n");
        out
    }

    pub fn label(&self) -> String {
        format!("DC_{}({})", self.n, join(&self.lengths))
    }
}

fn join(values: &[usize]) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn write_vertex_attrs(out: &mut String, coloring: Option<&VertexColoring>) {
    if let Some(c) = coloring {
        for (v, color) in c.assignment().iter().enumerate() {
            let _ = writeln!(out, "  v{v} [label=\"v{v}:{color}\"];");
        }
    }
}

/// Builds `C_n(J)`.
pub fn build_graph(n: usize, lengths: impl IntoIterator<Item = usize>) -> Result<CirculantGraph> {
    CirculantGraph::new(n, lengths)
}

/// Builds `C⃗_n(J)`.
pub fn build_digraph(n: usize, lengths: impl IntoIterator<Item = usize>) -> Result<CirculantDigraph> {
    CirculantDigraph::new(n, lengths)
}
