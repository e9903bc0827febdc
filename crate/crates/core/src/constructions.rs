//! Residue-walk colorings of `C_n(1,a)` and `C⃗_n(1,a)`.
//!
//! With `p` colors and a step `r`, the segment `R = (s, s+r, …, s+(p−1)r,
//! s, s+r, …, s+(a−2)r)` walks every color once and then repeats its first
//! `a−1` entries, so consecutive entries differ by `r` and entries `a` apart
//! differ by `a·r`. Taking `r` over the quadratic residues and `a` a
//! non-residue, the length-1 edges cover every residue difference and the
//! length-`a` edges every non-residue difference. Segments are chained with
//! `start_{i+1} = start_i + (a−1)·r_i` and closed by a singleton holding the
//! final start.
//!
//! * graphs: `p = 4q+1`, `q` steps (one per `±r` pair), segments of length
//!   `4q+a`, `n = 4q²+aq+1`;
//! * digraphs: `p = 4q+3`, all `2q+1` residues as steps, segments of length
//!   `4q+a+2`, `n = 8q²+2(a+4)q+a+3`.
//!
//! Only the segment interiors are guaranteed conflict-free. Whether the
//! seams between segments stay proper depends on `a` and on the order of the
//! steps, so every construction is returned together with its verification
//! report, and [`StepOrder::Searched`] looks for an order (and, for graphs,
//! a choice of signs) that passes when the ascending one does not.

use crate::circulant::{CirculantDigraph, CirculantGraph};
use crate::coloring::{verify_digraph_coloring, verify_vertex_coloring, VertexColoring, VerificationReport};
use crate::error::{Error, Result};
use crate::numtheory::{classify_residues, ResidueClassification};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WalkKind {
    Graph,
    Digraph,
}

/// How the steps of a residue walk are ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepOrder {
    /// Residues in increasing order, starting from 1.
    Ascending,
    /// Ascending first; if that fails verification, backtrack over orders
    /// (and signs, for graphs) visiting at most `node_limit` partial walks.
    Searched { node_limit: u64 },
}

impl StepOrder {
    pub const DEFAULT_SEARCH: StepOrder = StepOrder::Searched { node_limit: 2_000_000 };
}

/// Closed-form description of one residue-walk coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueWalkPlan {
    pub kind: WalkKind,
    pub q: usize,
    /// Prime modulus, equal to the number of colors.
    pub p: usize,
    pub a: usize,
    /// Step of each segment, residues mod `p`.
    pub steps: Vec<usize>,
    /// Start color of each segment followed by the closing singleton.
    pub starts: Vec<usize>,
    pub segment_count: usize,
    pub segment_length: usize,
    pub n: usize,
}

fn starts_for(p: usize, a: usize, steps: &[usize]) -> Vec<usize> {
    let mut starts = Vec::with_capacity(steps.len() + 1);
    let mut s = 0;
    starts.push(s);
    for &r in steps {
        s = (s + (a - 1) * r) % p;
        starts.push(s);
    }
    starts
}

impl ResidueWalkPlan {
    /// Plan for `C_{4q²+aq+1}(1,a)` with `4q+1` colors.
    pub fn graph(q: usize, a: usize) -> Result<Self> {
        if q == 0 {
            return Err(Error::PreconditionFailed("q must be at least 1".into()));
        }
        let p = 4 * q + 1;
        let residues = Self::check_modulus(p)?;
        Self::check_a(&residues, a, 4 * q)?;
        Ok(Self::assemble(WalkKind::Graph, q, p, a, residues.length_reps))
    }

    /// Plan for `C⃗_{8q²+2(a+4)q+a+3}(1,a)` with `4q+3` colors.
    pub fn digraph(q: usize, a: usize) -> Result<Self> {
        let p = 4 * q + 3;
        let residues = Self::check_modulus(p)?;
        Self::check_a(&residues, a, 4 * q + 2)?;
        Ok(Self::assemble(WalkKind::Digraph, q, p, a, residues.qr))
    }

    fn check_modulus(p: usize) -> Result<ResidueClassification> {
        classify_residues(p).map_err(|_| Error::PreconditionFailed(format!("{p} is not prime")))
    }

    fn check_a(residues: &ResidueClassification, a: usize, max: usize) -> Result<()> {
        if a < 2 || a > max {
            return Err(Error::PreconditionFailed(format!("a = {a} is outside 2..={max}")));
        }
        if !residues.is_nqr(a) {
            return Err(Error::PreconditionFailed(format!(
                "a = {a} is a quadratic residue mod {}",
                residues.modulus
            )));
        }
        Ok(())
    }

    fn assemble(kind: WalkKind, q: usize, p: usize, a: usize, steps: Vec<usize>) -> Self {
        let segment_length = p + a - 1;
        let segment_count = steps.len();
        Self {
            kind,
            q,
            p,
            a,
            starts: starts_for(p, a, &steps),
            segment_count,
            segment_length,
            n: segment_count * segment_length + 1,
            steps,
        }
    }

    /// Same plan with a different step sequence. Graph steps must pick one
    /// of `±r` for every representative `r`; digraph steps must be a
    /// permutation of the residues.
    pub fn with_steps(&self, steps: Vec<usize>) -> Result<Self> {
        let mut canon: Vec<usize> = match self.kind {
            WalkKind::Graph => steps.iter().map(|&s| (s % self.p).min(self.p - s % self.p)).collect(),
            WalkKind::Digraph => steps.clone(),
        };
        canon.sort_unstable();
        let mut expected = self.steps.clone();
        if self.kind == WalkKind::Graph {
            expected = expected.iter().map(|&s| s.min(self.p - s)).collect();
        }
        expected.sort_unstable();
        if canon != expected {
            return Err(Error::PreconditionFailed(format!("{steps:?} is not a valid step sequence")));
        }
        Ok(Self::assemble(self.kind, self.q, self.p, self.a, steps))
    }

    /// The segments `R_1, …, R_last`, the last one being the singleton.
    pub fn segments(&self) -> Vec<Vec<usize>> {
        let (p, a) = (self.p, self.a);
        let mut out: Vec<Vec<usize>> = self
            .steps
            .iter()
            .zip(&self.starts)
            .map(|(&r, &s)| (0..p).chain(0..a - 1).map(|j| (s + j * r) % p).collect())
            .collect();
        out.push(vec![*self.starts.last().expect("starts is never empty")]);
        out
    }

    /// Concatenated color sequence, one entry per vertex.
    pub fn sequence(&self) -> Vec<usize> {
        self.segments().concat()
    }

    pub fn coloring(&self) -> VertexColoring {
        VertexColoring::new(self.p, self.sequence()).expect("every segment walks all colors")
    }

    pub fn build_graph(&self) -> Result<Construction<CirculantGraph>> {
        if self.kind != WalkKind::Graph {
            return Err(Error::PreconditionFailed("plan is for a digraph".into()));
        }
        let graph = CirculantGraph::new(self.n, [1, self.a])?;
        let coloring = self.coloring();
        let report = verify_vertex_coloring(&graph, &coloring)?;
        Ok(Construction { plan: self.clone(), graph, coloring, report })
    }

    pub fn build_digraph(&self) -> Result<Construction<CirculantDigraph>> {
        if self.kind != WalkKind::Digraph {
            return Err(Error::PreconditionFailed("plan is for a graph".into()));
        }
        let graph = CirculantDigraph::new(self.n, [1, self.a])?;
        let coloring = self.coloring();
        let report = verify_digraph_coloring(&graph, &coloring)?;
        Ok(Construction { plan: self.clone(), graph, coloring, report })
    }
}

/// A generated coloring with the report it was checked against.
#[derive(Debug, Clone)]
pub struct Construction<G> {
    pub plan: ResidueWalkPlan,
    pub graph: G,
    pub coloring: VertexColoring,
    pub report: VerificationReport,
}

impl<G> Construction<G> {
    pub fn into_verified(self) -> Result<Self> {
        if self.report.holds() {
            Ok(self)
        } else {
            Err(Error::ConstructionNotVerified(Box::new(self.report)))
        }
    }
}

/// Proper complete `(4q+1)`-coloring of `C_{4q²+aq+1}(1,a)` with ascending steps.
pub fn residue_walk_graph_coloring(q: usize, a: usize) -> Result<Construction<CirculantGraph>> {
    residue_walk_graph_coloring_with(q, a, StepOrder::Ascending)
}

pub fn residue_walk_graph_coloring_with(q: usize, a: usize, order: StepOrder) -> Result<Construction<CirculantGraph>> {
    let plan = ResidueWalkPlan::graph(q, a)?;
    let first = plan.build_graph()?;
    match order {
        StepOrder::Searched { node_limit } if !first.report.holds() => match search_step_order(&plan, node_limit) {
            Some(found) => found.build_graph()?.into_verified(),
            None => first.into_verified(),
        },
        _ => first.into_verified(),
    }
}

/// Complete acyclic `(4q+3)`-coloring of `C⃗_{8q²+2(a+4)q+a+3}(1,a)` with ascending steps.
pub fn residue_walk_digraph_coloring(q: usize, a: usize) -> Result<Construction<CirculantDigraph>> {
    residue_walk_digraph_coloring_with(q, a, StepOrder::Ascending)
}

pub fn residue_walk_digraph_coloring_with(
    q: usize,
    a: usize,
    order: StepOrder,
) -> Result<Construction<CirculantDigraph>> {
    let plan = ResidueWalkPlan::digraph(q, a)?;
    let first = plan.build_digraph()?;
    match order {
        StepOrder::Searched { node_limit } if !first.report.holds() => match search_step_order(&plan, node_limit) {
            Some(found) => found.build_digraph()?.into_verified(),
            None => first.into_verified(),
        },
        _ => first.into_verified(),
    }
}

/// Depth-first search over step sequences whose linear prefix has no
/// monochromatic length-1 or length-`a` pair. Complete walks are accepted
/// only if the full verifier passes. For digraphs a monochromatic arc is
/// treated as a conflict even though only cycles are forbidden, so the
/// search may miss walks that are acyclic but not proper.
pub fn search_step_order(plan: &ResidueWalkPlan, node_limit: u64) -> Option<ResidueWalkPlan> {
    let p = plan.p;
    let reps: Vec<usize> = match plan.kind {
        WalkKind::Graph => plan.steps.iter().map(|&s| s.min(p - s)).collect(),
        WalkKind::Digraph => plan.steps.clone(),
    };
    let signed = plan.kind == WalkKind::Graph;
    let mut state = StepSearch {
        plan,
        reps,
        signed,
        used: vec![false; plan.steps.len()],
        steps: Vec::with_capacity(plan.steps.len()),
        seq: Vec::with_capacity(plan.n),
        nodes: 0,
        node_limit,
    };
    state.descend(0)
}

struct StepSearch<'a> {
    plan: &'a ResidueWalkPlan,
    reps: Vec<usize>,
    signed: bool,
    used: Vec<bool>,
    steps: Vec<usize>,
    seq: Vec<usize>,
    nodes: u64,
    node_limit: u64,
}

impl StepSearch<'_> {
    fn descend(&mut self, start: usize) -> Option<ResidueWalkPlan> {
        let (p, a) = (self.plan.p, self.plan.a);
        if self.steps.len() == self.reps.len() {
            let candidate = self.plan.with_steps(self.steps.clone()).ok()?;
            let holds = match candidate.kind {
                WalkKind::Graph => candidate.build_graph().ok()?.report.holds(),
                WalkKind::Digraph => candidate.build_digraph().ok()?.report.holds(),
            };
            return holds.then_some(candidate);
        }
        for i in 0..self.reps.len() {
            if self.used[i] {
                continue;
            }
            let r = self.reps[i];
            let signs: &[bool] = if self.signed && !self.steps.is_empty() { &[false, true] } else { &[false] };
            for &negate in signs {
                self.nodes += 1;
                if self.nodes > self.node_limit {
                    return None;
                }
                let step = if negate { p - r } else { r };
                let mark = self.seq.len();
                self.seq.extend((0..p).chain(0..a - 1).map(|j| (start + j * step) % p));
                let ok = (mark.max(1)..self.seq.len())
                    .all(|i| self.seq[i] != self.seq[i - 1] && (i < a || self.seq[i] != self.seq[i - a]));
                if ok {
                    self.used[i] = true;
                    self.steps.push(step);
                    let found = self.descend((start + (a - 1) * step) % p);
                    self.steps.pop();
                    self.used[i] = false;
                    if found.is_some() {
                        return found;
                    }
                }
                self.seq.truncate(mark);
            }
        }
        None
    }
}
