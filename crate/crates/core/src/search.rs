//! Exact extremal colorings by exhaustive search, for small instances.
//!
//! Colorings are enumerated as restricted-growth strings (the first element
//! of color `c + 1` comes after the first element of color `c`), so each
//! partition is visited once. For a fixed `k` the search asks whether some
//! string uses exactly `k` colors, keeps every class independent (or
//! acyclic), and, for the maximum problems, realizes every color pair.
//! Maximum problems try `k` downward from the size bound, minimum problems
//! upward from one.
//!
//! Partial strings are cut when
//! - a class stops being independent / acyclic,
//! - fewer elements remain than colors still unused,
//! - more color pairs are missing than edges with an uncolored end remain;
//!   every such edge can realize at most one new pair.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{size_upper_bound, Kind};
use crate::circulant::{CirculantDigraph, CirculantGraph};
use crate::coloring::{
    verify_digraph_coloring, verify_edge_coloring, verify_vertex_coloring, EdgeColoring, VertexColoring,
};
use crate::error::{Error, Result};

const UNSET: usize = usize::MAX;
/// Depth of the prefixes handed to worker threads.
const SPLIT_DEPTH: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_vertices: usize,
    /// Cap on edges for the edge-coloring search.
    pub max_edges: usize,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self { max_vertices: 12, max_edges: 18, time_limit: Duration::from_secs(300) }
    }
}

/// Outcome of an exact search. `proof_of_optimality` is false only when the
/// time limit cut the search short; `witness` is then the best coloring
/// found by a greedy fallback.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalResult<C> {
    pub value: usize,
    pub witness: C,
    pub proof_of_optimality: bool,
    pub explored_nodes: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rule {
    Proper,
    Acyclic,
}

/// Elements to color with their conflict structure.
struct Instance {
    len: usize,
    /// Neighbours when undirected, successors when directed.
    out: Vec<Vec<usize>>,
    /// Predecessors; unused when undirected.
    inn: Vec<Vec<usize>>,
    directed: bool,
    rule: Rule,
    /// Edges (arcs) available to witness color pairs.
    slots: usize,
}

impl Instance {
    fn graph(g: &CirculantGraph) -> Self {
        let out: Vec<Vec<usize>> = (0..g.n()).map(|u| g.neighbors(u)).collect();
        Self { len: g.n(), out, inn: Vec::new(), directed: false, rule: Rule::Proper, slots: g.edge_count() }
    }

    fn digraph(d: &CirculantDigraph) -> Self {
        let out = (0..d.n()).map(|u| d.out_neighbors(u).collect()).collect();
        let inn = (0..d.n()).map(|u| d.in_neighbors(u).collect()).collect();
        Self { len: d.n(), out, inn, directed: true, rule: Rule::Acyclic, slots: d.arc_count() }
    }

    /// Line graph: edges conflict when they share an endpoint.
    fn line_graph(g: &CirculantGraph, edges: &[(usize, usize)]) -> Self {
        let mut incident = vec![Vec::new(); g.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let out: Vec<Vec<usize>> = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                let mut nb: Vec<usize> = incident[u].iter().chain(&incident[v]).copied().filter(|&j| j != i).collect();
                nb.sort_unstable();
                nb.dedup();
                nb
            })
            .collect();
        let slots = out.iter().map(Vec::len).sum::<usize>() / 2;
        Self { len: edges.len(), out, inn: Vec::new(), directed: false, rule: Rule::Proper, slots }
    }

    fn required_pairs(&self, k: usize) -> usize {
        if self.directed {
            k * k.saturating_sub(1)
        } else {
            k * k.saturating_sub(1) / 2
        }
    }

    /// Whether giving `v` color `c` keeps its class independent / acyclic,
    /// looking only at colored elements.
    fn admissible(&self, colors: &[usize], v: usize, c: usize) -> bool {
        match self.rule {
            Rule::Proper => self.out[v].iter().all(|&u| colors[u] != c),
            Rule::Acyclic => !self.closes_cycle(colors, v, c),
        }
    }

    /// Is there a path `v → … → v` through colored elements of class `c`?
    fn closes_cycle(&self, colors: &[usize], v: usize, c: usize) -> bool {
        let mut seen = vec![false; self.len];
        let mut stack: Vec<usize> = self.out[v].iter().copied().filter(|&u| u == v || colors[u] == c).collect();
        while let Some(u) = stack.pop() {
            if u == v {
                return true;
            }
            if std::mem::replace(&mut seen[u], true) {
                continue;
            }
            stack.extend(self.out[u].iter().copied().filter(|&w| w == v || (colors[w] == c && !seen[w])));
        }
        false
    }

    fn is_valid(&self, colors: &[usize]) -> bool {
        let mut partial = vec![UNSET; self.len];
        (0..self.len).all(|v| {
            let ok = self.admissible(&partial, v, colors[v]);
            partial[v] = colors[v];
            ok
        })
    }

    /// Realized color pairs as a `k × k` table, `[a][b]` for an edge or arc
    /// from class `a` to class `b` (both orders when undirected).
    fn pair_table(&self, colors: &[usize], k: usize) -> Vec<bool> {
        let mut seen = vec![false; k * k];
        for v in 0..self.len {
            for &u in &self.out[v] {
                let (a, b) = (colors[v], colors[u]);
                if a != b {
                    seen[a * k + b] = true;
                    if !self.directed {
                        seen[b * k + a] = true;
                    }
                }
            }
        }
        seen
    }
}

/// Depth-first walker over restricted-growth strings for one target `k`.
struct Walker<'a> {
    inst: &'a Instance,
    k: usize,
    complete: bool,
    colors: Vec<usize>,
    used: usize,
    pairs: Vec<u32>,
    realized: usize,
    inner: usize,
    nodes: u64,
    deadline: Instant,
    stop: &'a AtomicBool,
}

impl<'a> Walker<'a> {
    fn new(inst: &'a Instance, k: usize, complete: bool, deadline: Instant, stop: &'a AtomicBool) -> Self {
        Self {
            inst,
            k,
            complete,
            colors: vec![UNSET; inst.len],
            used: 0,
            pairs: vec![0; k * k],
            realized: 0,
            inner: 0,
            nodes: 0,
            deadline,
            stop,
        }
    }

    fn pair_index(&self, a: usize, b: usize) -> usize {
        if self.inst.directed {
            a * self.k + b
        } else {
            a.min(b) * self.k + a.max(b)
        }
    }

    fn touch(&mut self, a: usize, b: usize, delta: i32) {
        if a == b {
            return;
        }
        let i = self.pair_index(a, b);
        let before = self.pairs[i];
        self.pairs[i] = before.wrapping_add_signed(delta);
        match (before, self.pairs[i]) {
            (0, _) => self.realized += 1,
            (_, 0) => self.realized -= 1,
            _ => {}
        }
    }

    fn assign(&mut self, v: usize, c: usize, delta: i32) {
        let inst = self.inst;
        for &u in &inst.out[v] {
            let cu = self.colors[u];
            if cu != UNSET {
                self.inner = self.inner.wrapping_add_signed(delta as isize);
                self.touch(c, cu, delta);
            }
        }
        if inst.directed {
            for &w in &inst.inn[v] {
                let cw = self.colors[w];
                if cw != UNSET {
                    self.inner = self.inner.wrapping_add_signed(delta as isize);
                    self.touch(cw, c, delta);
                }
            }
        }
    }

    fn place(&mut self, v: usize, c: usize) {
        self.assign(v, c, 1);
        self.colors[v] = c;
        if c == self.used {
            self.used += 1;
        }
    }

    fn unplace(&mut self, v: usize, opened: bool) {
        let c = std::mem::replace(&mut self.colors[v], UNSET);
        self.assign(v, c, -1);
        if opened {
            self.used -= 1;
        }
    }

    /// Cheap necessary conditions once elements `0..next` are colored.
    fn viable(&self, next: usize) -> bool {
        if self.k - self.used > self.inst.len - next {
            return false;
        }
        !self.complete || self.inst.required_pairs(self.k) - self.realized <= self.inst.slots - self.inner
    }

    fn done(&self) -> bool {
        self.used == self.k && (!self.complete || self.realized == self.inst.required_pairs(self.k))
    }

    fn timed_out(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) && Instant::now() >= self.deadline {
            self.stop.store(true, Ordering::Relaxed);
        }
        self.stop.load(Ordering::Relaxed)
    }

    fn dfs(&mut self, v: usize) -> bool {
        if self.timed_out() {
            return false;
        }
        if v == self.inst.len {
            return self.done();
        }
        for c in 0..(self.used + 1).min(self.k) {
            if !self.inst.admissible(&self.colors, v, c) {
                continue;
            }
            let opened = c == self.used;
            self.place(v, c);
            if self.viable(v + 1) && self.dfs(v + 1) {
                return true;
            }
            self.unplace(v, opened);
        }
        false
    }

    /// All viable prefixes of length `depth`.
    fn prefixes(&mut self, v: usize, depth: usize, out: &mut Vec<Vec<usize>>) {
        if v == depth {
            out.push(self.colors[..depth].to_vec());
            return;
        }
        for c in 0..(self.used + 1).min(self.k) {
            if !self.inst.admissible(&self.colors, v, c) {
                continue;
            }
            let opened = c == self.used;
            self.place(v, c);
            if self.viable(v + 1) {
                self.prefixes(v + 1, depth, out);
            }
            self.unplace(v, opened);
        }
    }
}

enum Outcome {
    Found(Vec<usize>),
    Infeasible,
    TimedOut,
}

/// Is there a `k`-coloring meeting the rule (and completeness)?
///
/// Prefixes are explored in parallel; `find_map_first` keeps the witness
/// equal to the one a sequential walk would return.
fn feasible(inst: &Instance, k: usize, complete: bool, deadline: Instant, nodes: &AtomicU64) -> Outcome {
    if k == 0 || k > inst.len {
        return Outcome::Infeasible;
    }
    let stop = AtomicBool::new(Instant::now() >= deadline);
    let depth = inst.len.min(SPLIT_DEPTH);
    let mut root = Walker::new(inst, k, complete, deadline, &stop);
    let mut prefixes = Vec::new();
    root.prefixes(0, depth, &mut prefixes);
    nodes.fetch_add(prefixes.len() as u64, Ordering::Relaxed);

    let found = prefixes.par_iter().find_map_first(|prefix| {
        let mut w = Walker::new(inst, k, complete, deadline, &stop);
        for (v, &c) in prefix.iter().enumerate() {
            w.place(v, c);
        }
        let hit = w.dfs(depth);
        nodes.fetch_add(w.nodes, Ordering::Relaxed);
        hit.then(|| w.colors.clone())
    });
    match found {
        Some(colors) => Outcome::Found(colors),
        None if stop.load(Ordering::Relaxed) => Outcome::TimedOut,
        None => Outcome::Infeasible,
    }
}

/// Start from singletons and merge the first mergeable pair of classes that
/// lacks a witness, until the coloring is complete or stuck.
fn greedy_complete(inst: &Instance) -> Option<Vec<usize>> {
    let mut colors: Vec<usize> = (0..inst.len).collect();
    loop {
        let k = colors.iter().max().map_or(0, |&c| c + 1);
        let seen = inst.pair_table(&colors, k);
        let mut missing = (0..k)
            .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
            .filter(|&(a, b)| !(seen[a * k + b] && seen[b * k + a]))
            .peekable();
        if missing.peek().is_none() {
            return Some(colors);
        }
        let merged = missing.find_map(|(a, b)| {
            let merged: Vec<usize> = colors
                .iter()
                .map(|&c| match c {
                    c if c == b => a,
                    c if c > b => c - 1,
                    c => c,
                })
                .collect();
            inst.is_valid(&merged).then_some(merged)
        });
        colors = merged?;
    }
}

/// Smallest-color-first greedy coloring.
fn greedy_min(inst: &Instance) -> Vec<usize> {
    let mut colors = vec![UNSET; inst.len];
    for v in 0..inst.len {
        colors[v] = (0..).find(|&c| inst.admissible(&colors, v, c)).expect("a fresh color is always admissible");
    }
    colors
}

struct Found {
    value: usize,
    colors: Vec<usize>,
    proof: bool,
    nodes: u64,
}

fn search_max(inst: &Instance, upper: usize, budget: &SearchBudget) -> Result<Found> {
    let deadline = Instant::now() + budget.time_limit;
    let nodes = AtomicU64::new(0);
    for k in (1..=upper.min(inst.len)).rev() {
        match feasible(inst, k, true, deadline, &nodes) {
            Outcome::Found(colors) => {
                return Ok(Found { value: k, colors, proof: true, nodes: nodes.into_inner() });
            }
            Outcome::Infeasible => {}
            Outcome::TimedOut => {
                let colors = greedy_complete(inst).ok_or(Error::TimeLimit(budget.time_limit.as_secs()))?;
                let value = colors.iter().max().map_or(0, |&c| c + 1);
                return Ok(Found { value, colors, proof: false, nodes: nodes.into_inner() });
            }
        }
    }
    Err(Error::PreconditionFailed("no complete coloring exists".into()))
}

fn search_min(inst: &Instance, budget: &SearchBudget) -> Found {
    let deadline = Instant::now() + budget.time_limit;
    let nodes = AtomicU64::new(0);
    for k in 1..=inst.len {
        match feasible(inst, k, false, deadline, &nodes) {
            Outcome::Found(colors) => return Found { value: k, colors, proof: true, nodes: nodes.into_inner() },
            Outcome::Infeasible => {}
            Outcome::TimedOut => break,
        }
    }
    let colors = greedy_min(inst);
    let value = colors.iter().max().map_or(0, |&c| c + 1);
    Found { value, colors, proof: false, nodes: nodes.into_inner() }
}

fn check_vertices(n: usize, budget: &SearchBudget) -> Result<()> {
    if n > budget.max_vertices {
        return Err(Error::BudgetExceeded(format!("{n} vertices, budget allows {}", budget.max_vertices)));
    }
    Ok(())
}

fn vertex_result(found: Found, holds: impl FnOnce(&VertexColoring) -> Result<bool>) -> Result<ExtremalResult<VertexColoring>> {
    let witness = VertexColoring::new(found.value, found.colors)?;
    if !holds(&witness)? {
        return Err(Error::InvalidColoring("search witness failed verification".into()));
    }
    Ok(ExtremalResult {
        value: found.value,
        witness,
        proof_of_optimality: found.proof,
        explored_nodes: found.nodes,
    })
}

/// Achromatic number `α(G)`.
pub fn exact_achromatic(g: &CirculantGraph, budget: &SearchBudget) -> Result<ExtremalResult<VertexColoring>> {
    check_vertices(g.n(), budget)?;
    let inst = Instance::graph(g);
    let upper = size_upper_bound(g.edge_count() as u64, Kind::Graph) as usize;
    let found = search_max(&inst, upper, budget)?;
    vertex_result(found, |c| Ok(verify_vertex_coloring(g, c)?.holds()))
}

/// Diachromatic number `dac(D)`.
pub fn exact_diachromatic(d: &CirculantDigraph, budget: &SearchBudget) -> Result<ExtremalResult<VertexColoring>> {
    check_vertices(d.n(), budget)?;
    let inst = Instance::digraph(d);
    let upper = size_upper_bound(d.arc_count() as u64, Kind::Digraph) as usize;
    let found = search_max(&inst, upper, budget)?;
    vertex_result(found, |c| Ok(verify_digraph_coloring(d, c)?.holds()))
}

/// Achromatic index `α₁(G)`, as the achromatic number of the line graph.
pub fn exact_achromatic_index(g: &CirculantGraph, budget: &SearchBudget) -> Result<ExtremalResult<EdgeColoring>> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.len() > budget.max_edges {
        return Err(Error::BudgetExceeded(format!("{} edges, budget allows {}", edges.len(), budget.max_edges)));
    }
    let inst = Instance::line_graph(g, &edges);
    let upper = size_upper_bound(inst.slots as u64, Kind::Graph) as usize;
    let found = search_max(&inst, upper, budget)?;
    let witness = EdgeColoring::new(found.value, edges.into_iter().zip(found.colors))?;
    if !verify_edge_coloring(g, &witness)?.holds() {
        return Err(Error::InvalidColoring("search witness failed verification".into()));
    }
    Ok(ExtremalResult {
        value: found.value,
        witness,
        proof_of_optimality: found.proof,
        explored_nodes: found.nodes,
    })
}

/// Chromatic number `χ(G)`.
pub fn exact_chromatic_number(g: &CirculantGraph, budget: &SearchBudget) -> Result<ExtremalResult<VertexColoring>> {
    check_vertices(g.n(), budget)?;
    let found = search_min(&Instance::graph(g), budget);
    vertex_result(found, |c| Ok(verify_vertex_coloring(g, c)?.proper))
}

/// Dichromatic number `dc(D)`.
pub fn exact_dichromatic_number(d: &CirculantDigraph, budget: &SearchBudget) -> Result<ExtremalResult<VertexColoring>> {
    check_vertices(d.n(), budget)?;
    let found = search_min(&Instance::digraph(d), budget);
    vertex_result(found, |c| Ok(verify_digraph_coloring(d, c)?.acyclic == Some(true)))
}

/// A graph or a digraph, for [`exact_chromatic_numbers`].
#[derive(Debug, Clone, Copy)]
pub enum Target<'a> {
    Graph(&'a CirculantGraph),
    Digraph(&'a CirculantDigraph),
}

/// `χ(G)` for a graph, `dc(D)` for a digraph.
pub fn exact_chromatic_numbers(target: Target<'_>, budget: &SearchBudget) -> Result<ExtremalResult<VertexColoring>> {
    match target {
        Target::Graph(g) => exact_chromatic_number(g, budget),
        Target::Digraph(d) => exact_dichromatic_number(d, budget),
    }
}
