//! JSON certificates: a self-contained record of an instance, a coloring (or
//! other result) and the flags the verifier produced for it.
//!
//! Everything serializes in a fixed order (struct fields, sorted maps), so
//! the same arguments always give the same bytes.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bounds::{fg_upper_bound, BoundProfile};
use crate::circulant::{CirculantDigraph, CirculantGraph};
use crate::coloring::{
    verify_digraph_coloring, verify_edge_coloring, verify_vertex_coloring, EdgeColoring, VerificationReport,
    VertexColoring, Violation,
};
use crate::error::{Error, Result};
use crate::planes::validate_difference_set;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    VertexColoring,
    DigraphColoring,
    EdgeColoring,
    Bound,
    ExactSearch,
    DifferenceSet,
}

/// Edge key written as `"u-v"` with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeKey(pub usize, pub usize);

impl fmt::Display for EdgeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl FromStr for EdgeKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Certificate(format!("edge key {s:?} is not `u-v`"));
        let (u, v) = s.split_once('-').ok_or_else(bad)?;
        let (u, v) = (u.parse().map_err(|_| bad())?, v.parse().map_err(|_| bad())?);
        if u >= v {
            return Err(Error::Certificate(format!("edge key {s:?} needs u < v")));
        }
        Ok(Self(u, v))
    }
}

impl Serialize for EdgeKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for EdgeKey {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Vertex colors as an array, edge colors as a `"u-v"` map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Assignment {
    Vertices(Vec<usize>),
    Edges(BTreeMap<EdgeKey, usize>),
}

impl From<&EdgeColoring> for Assignment {
    fn from(c: &EdgeColoring) -> Self {
        Assignment::Edges(c.assignment().iter().map(|(&(u, v), &k)| (EdgeKey(u, v), k)).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub n: usize,
    pub lengths: Vec<usize>,
    pub directed: bool,
}

impl InstanceSpec {
    pub fn graph(g: &CirculantGraph) -> Self {
        Self { n: g.n(), lengths: g.lengths().to_vec(), directed: false }
    }

    pub fn digraph(d: &CirculantDigraph) -> Self {
        Self { n: d.n(), lengths: d.lengths().to_vec(), directed: true }
    }

    pub fn build_graph(&self) -> Result<CirculantGraph> {
        CirculantGraph::new(self.n, self.lengths.iter().copied())
    }

    pub fn build_digraph(&self) -> Result<CirculantDigraph> {
        CirculantDigraph::new(self.n, self.lengths.iter().copied())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<usize>,
    #[serde(rename = "D", default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    /// Step residues of a residue walk, in segment order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifiedFlags {
    pub verified: bool,
    pub proper: bool,
    pub complete: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub acyclic: Option<bool>,
}

/// Everything that keeps a coloring from verifying. Monochromatic arcs
/// are not listed for digraphs; only cycles count there.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violations {
    pub proper: Vec<Violation>,
    pub missing_pairs: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monochromatic_cycle: Option<Vec<usize>>,
}

impl Violations {
    pub fn is_empty(&self) -> bool {
        self.proper.is_empty() && self.missing_pairs.is_empty() && self.monochromatic_cycle.is_none()
    }
}

fn flags_and_violations(report: &VerificationReport) -> (VerifiedFlags, Violations) {
    let directed = report.acyclic.is_some();
    let flags = VerifiedFlags {
        verified: report.holds(),
        proper: report.proper,
        complete: report.complete,
        acyclic: report.acyclic,
    };
    let violations = Violations {
        proper: if directed { Vec::new() } else { report.proper_violations.clone() },
        missing_pairs: report.missing_pairs.clone(),
        monochromatic_cycle: report.monochromatic_cycle_witness.clone(),
    };
    (flags, violations)
}

/// Result of an exact search. Node counts are left out: they vary with
/// thread scheduling and would break byte stability.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub problem: String,
    pub value: usize,
    pub proof_of_optimality: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub kind: CertificateKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<InstanceSpec>,
    #[serde(default)]
    pub parameters: Parameters,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assignment: Option<Assignment>,
    pub verified: VerifiedFlags,
    #[serde(default)]
    pub violations: Violations,
    pub provenance: String,
    pub tool_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundProfile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchSummary>,
}

impl Certificate {
    fn base(kind: CertificateKind, verified: VerifiedFlags, provenance: &str) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            kind,
            instance: None,
            parameters: Parameters::default(),
            k: None,
            assignment: None,
            verified,
            violations: Violations::default(),
            provenance: provenance.to_string(),
            tool_version: TOOL_VERSION.to_string(),
            bounds: None,
            search: None,
        }
    }

    pub fn vertex_coloring(g: &CirculantGraph, c: &VertexColoring, report: &VerificationReport, provenance: &str) -> Self {
        let (flags, violations) = flags_and_violations(report);
        Self {
            instance: Some(InstanceSpec::graph(g)),
            k: Some(c.k()),
            assignment: Some(Assignment::Vertices(c.assignment().to_vec())),
            violations,
            ..Self::base(CertificateKind::VertexColoring, flags, provenance)
        }
    }

    pub fn digraph_coloring(
        d: &CirculantDigraph,
        c: &VertexColoring,
        report: &VerificationReport,
        provenance: &str,
    ) -> Self {
        let (flags, violations) = flags_and_violations(report);
        Self {
            instance: Some(InstanceSpec::digraph(d)),
            k: Some(c.k()),
            assignment: Some(Assignment::Vertices(c.assignment().to_vec())),
            violations,
            ..Self::base(CertificateKind::DigraphColoring, flags, provenance)
        }
    }

    pub fn edge_coloring(g: &CirculantGraph, c: &EdgeColoring, report: &VerificationReport, provenance: &str) -> Self {
        let (flags, violations) = flags_and_violations(report);
        Self {
            instance: Some(InstanceSpec::graph(g)),
            k: Some(c.k()),
            assignment: Some(Assignment::from(c)),
            violations,
            ..Self::base(CertificateKind::EdgeColoring, flags, provenance)
        }
    }

    /// Wraps a coloring certificate as the witness of an exact search.
    pub fn exact_search(mut witness: Certificate, summary: SearchSummary) -> Self {
        witness.kind = CertificateKind::ExactSearch;
        witness.search = Some(summary);
        witness
    }

    pub fn bound(profile: BoundProfile) -> Self {
        let flags = VerifiedFlags { verified: true, proper: true, complete: true, acyclic: None };
        Self {
            instance: None,
            k: Some(profile.fg_bound as usize),
            bounds: Some(profile),
            ..Self::base(CertificateKind::Bound, flags, "closed-form bounds for regular graphs")
        }
    }

    /// Difference-set certificate; `verified` records whether `elements`
    /// really is a planar difference set mod `n`.
    pub fn difference_set(n: usize, elements: &[usize], provenance: &str) -> Self {
        let ok = validate_difference_set(elements, n).is_ok();
        let flags = VerifiedFlags { verified: ok, proper: ok, complete: ok, acyclic: None };
        let q = elements.len().checked_sub(1);
        Self {
            instance: Some(InstanceSpec { n, lengths: Vec::new(), directed: false }),
            parameters: Parameters { q, d: Some(elements.to_vec()), ..Parameters::default() },
            ..Self::base(CertificateKind::DifferenceSet, flags, provenance)
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificates always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    fn instance(&self) -> Result<&InstanceSpec> {
        self.instance.as_ref().ok_or_else(|| Error::Certificate("missing instance".into()))
    }

    fn vertex_assignment(&self) -> Result<VertexColoring> {
        let k = self.k.ok_or_else(|| Error::Certificate("missing k".into()))?;
        match &self.assignment {
            Some(Assignment::Vertices(a)) => VertexColoring::new(k, a.clone()),
            _ => Err(Error::Certificate("expected a vertex assignment array".into())),
        }
    }

    /// Recomputes the flags and violations from the stored data alone.
    pub fn reverify(&self) -> Result<(VerifiedFlags, Violations)> {
        let is_directed = self.instance.as_ref().is_some_and(|i| i.directed);
        match self.kind {
            CertificateKind::VertexColoring => {
                let g = self.instance()?.build_graph()?;
                Ok(flags_and_violations(&verify_vertex_coloring(&g, &self.vertex_assignment()?)?))
            }
            CertificateKind::DigraphColoring => {
                let d = self.instance()?.build_digraph()?;
                Ok(flags_and_violations(&verify_digraph_coloring(&d, &self.vertex_assignment()?)?))
            }
            CertificateKind::ExactSearch if matches!(self.assignment, Some(Assignment::Edges(_))) => {
                self.reverify_edges()
            }
            CertificateKind::ExactSearch => {
                let search = self.search.as_ref().ok_or_else(|| Error::Certificate("missing search".into()))?;
                let report = if is_directed {
                    verify_digraph_coloring(&self.instance()?.build_digraph()?, &self.vertex_assignment()?)?
                } else {
                    verify_vertex_coloring(&self.instance()?.build_graph()?, &self.vertex_assignment()?)?
                };
                let (mut flags, violations) = flags_and_violations(&report);
                // minimum problems only need the independence side
                if matches!(search.problem.as_str(), "chi" | "dc") {
                    flags.verified = report.acyclic.unwrap_or(report.proper);
                }
                Ok((flags, violations))
            }
            CertificateKind::EdgeColoring => self.reverify_edges(),
            CertificateKind::Bound => {
                let stored = self.bounds.as_ref().ok_or_else(|| Error::Certificate("missing bounds".into()))?;
                let same = stored.n >= 3
                    && (1..stored.n).contains(&stored.r)
                    && fg_upper_bound(stored.n, stored.r) == *stored;
                let flags = VerifiedFlags { verified: same, proper: same, complete: same, acyclic: None };
                Ok((flags, Violations::default()))
            }
            CertificateKind::DifferenceSet => {
                let d = self.parameters.d.as_ref().ok_or_else(|| Error::Certificate("missing D".into()))?;
                let ok = validate_difference_set(d, self.instance()?.n).is_ok();
                let flags = VerifiedFlags { verified: ok, proper: ok, complete: ok, acyclic: None };
                Ok((flags, Violations::default()))
            }
        }
    }

    fn reverify_edges(&self) -> Result<(VerifiedFlags, Violations)> {
        let g = self.instance()?.build_graph()?;
        let k = self.k.ok_or_else(|| Error::Certificate("missing k".into()))?;
        let Some(Assignment::Edges(map)) = &self.assignment else {
            return Err(Error::Certificate("expected an edge assignment map".into()));
        };
        let c = EdgeColoring::new(k, map.iter().map(|(e, &c)| ((e.0, e.1), c)))?;
        Ok(flags_and_violations(&verify_edge_coloring(&g, &c)?))
    }

    /// True when re-verification reproduces the stored flags and violations.
    pub fn reproduces(&self) -> Result<bool> {
        let (flags, violations) = self.reverify()?;
        Ok(flags == self.verified && violations == self.violations)
    }
}
