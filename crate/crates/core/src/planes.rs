//! Planar difference sets, cyclic projective planes and the edge colorings
//! they induce on circulant graphs.
//!
//! A `(q+1)`-subset `D` of `Z_n`, `n = q²+q+1`, is a planar difference set
//! when every non-zero residue is `d_i − d_j` for exactly one ordered pair.
//! Its translates `D + i` are the lines of a projective plane of order `q`
//! on the points `Z_n`. Drawn on a regular `n`-gon, the chords between
//! points of `D` have pairwise different circular lengths, and since there
//! are `C(q+1, 2) = ⌊n/2⌋` of them every length `1..=n/2` occurs once. So an
//! edge of `C_n(J)` lies on exactly one line, and coloring each line's
//! chords by a fixed set of perfect matchings gives a proper edge coloring in
//! which any two lines share a vertex, hence every pair of colors meets.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::circulant::CirculantGraph;
use crate::coloring::{verify_edge_coloring, EdgeColoring, VerificationReport};
use crate::error::{Error, Result};

/// Environment variable naming a file that replaces the embedded table.
pub const TABLE_ENV: &str = "CHROMA_TABLE_PATH";

/// Known planar difference sets, one per modulus.
pub const EMBEDDED_TABLE: &[(usize, &[usize])] = &[
    (13, &[1, 2, 5, 7]),
    (31, &[1, 2, 4, 9, 13, 19]),
    (57, &[1, 2, 4, 14, 33, 37, 44, 53]),
    (91, &[1, 2, 4, 10, 28, 50, 57, 62, 78, 82]),
    (133, &[1, 2, 4, 13, 21, 35, 39, 82, 89, 95, 105, 110]),
    (183, &[1, 2, 4, 17, 24, 29, 43, 77, 83, 87, 120, 138, 155, 176]),
];

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Plane order `q` with `q² + q + 1 = n`, if any.
pub fn plane_order(n: usize) -> Option<usize> {
    (1..).take_while(|q| q * q + q < n).find(|q| q * q + q + 1 == n)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DifferenceSet {
    n: usize,
    q: usize,
    elements: Vec<usize>,
}

/// Checks the difference property exhaustively.
pub fn validate_difference_set(elements: &[usize], n: usize) -> Result<DifferenceSet> {
    let mut sorted = elements.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != elements.len() {
        return Err(Error::BadCardinality("repeated element".into()));
    }
    if let Some(&bad) = sorted.iter().find(|&&d| d >= n) {
        return Err(Error::BadCardinality(format!("{bad} is not a residue mod {n}")));
    }
    let q = sorted.len().saturating_sub(1);
    if q < 2 || q * q + q + 1 != n {
        return Err(Error::BadCardinality(format!(
            "{} elements need n = {}, got {n}",
            sorted.len(),
            q * q + q + 1
        )));
    }
    let mut counts = vec![0usize; n];
    for &a in &sorted {
        for &b in &sorted {
            if a != b {
                counts[(a + n - b) % n] += 1;
            }
        }
    }
    if let Some(g) = (1..n).find(|&g| counts[g] != 1) {
        return Err(Error::NotDifferenceSet { difference: g, count: counts[g] });
    }
    Ok(DifferenceSet { n, q, elements: sorted })
}

impl DifferenceSet {
    pub fn new(elements: &[usize], n: usize) -> Result<Self> {
        validate_difference_set(elements, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&(x % self.n)).is_ok()
    }

    fn map(&self, f: impl Fn(usize) -> usize) -> Self {
        let mut elements: Vec<usize> = self.elements.iter().map(|&d| f(d) % self.n).collect();
        elements.sort_unstable();
        Self { n: self.n, q: self.q, elements }
    }

    /// `D + i`
    pub fn shift(&self, i: usize) -> Self {
        self.map(|d| d + i % self.n)
    }

    /// `−D`
    pub fn negate(&self) -> Self {
        self.map(|d| self.n - d)
    }

    /// `u·D` for a unit `u`.
    pub fn scale(&self, u: usize) -> Option<Self> {
        (gcd(u % self.n, self.n) == 1).then(|| self.map(|d| d * u))
    }

    /// Least sorted translate of `D` or `−D`, written with every element
    /// incremented by one. That least translate always starts `0, 1` and
    /// never contains `n − 1`, so the result lies in `1..n`.
    pub fn table_form(&self) -> Self {
        let neg = self.negate();
        let best = self
            .elements
            .iter()
            .map(|&d| self.shift(self.n - d))
            .chain(neg.elements.iter().map(|&d| neg.shift(self.n - d)))
            .min_by(|a, b| a.elements.cmp(&b.elements))
            .expect("difference sets are non-empty");
        best.map(|d| d + 1)
    }

    /// A unit `u` and shift `s` with `u·self + s = other`.
    pub fn affine_map_to(&self, other: &DifferenceSet) -> Option<(usize, usize)> {
        if self.n != other.n || self.q != other.q {
            return None;
        }
        let n = self.n;
        let target0 = other.elements[0];
        (1..n).filter(|&u| gcd(u, n) == 1).find_map(|u| {
            let scaled = self.scale(u)?;
            scaled.elements.iter().find_map(|&d| {
                let s = (target0 + n - d) % n;
                (scaled.shift(s).elements == other.elements).then_some((u, s))
            })
        })
    }

    pub fn is_translate_of(&self, other: &DifferenceSet) -> bool {
        self.n == other.n && (0..self.n).any(|s| self.shift(s).elements == other.elements)
    }

    pub fn plane(&self) -> CyclicPlane {
        CyclicPlane::new(self.clone())
    }
}

/// Table of known difference sets keyed by modulus.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DifferenceSetTable {
    entries: BTreeMap<usize, Vec<usize>>,
}

impl DifferenceSetTable {
    pub fn embedded() -> Self {
        let entries = EMBEDDED_TABLE.iter().map(|&(n, d)| (n, d.to_vec())).collect();
        Self { entries }
    }

    /// Lines of the form `n: d0,d1,...`; blank lines and `#` comments are
    /// skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |reason: &str| Error::TableFormat { line: idx + 1, reason: reason.to_string() };
            let (n, rest) = line.split_once(':').ok_or_else(|| err("expected `n: d0,d1,...`"))?;
            let n: usize = n.trim().parse().map_err(|_| err("modulus is not an integer"))?;
            let elements = rest
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| err("element is not an integer"))?;
            entries.insert(n, elements);
        }
        Ok(Self { entries })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// The file named by `CHROMA_TABLE_PATH` if set, else the embedded table.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(TABLE_ENV) {
            Some(path) if !path.is_empty() => Self::load(path),
            _ => Ok(Self::embedded()),
        }
    }

    pub fn get(&self, n: usize) -> Option<&[usize]> {
        self.entries.get(&n).map(Vec::as_slice)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &[usize])> {
        self.entries.iter().map(|(&n, d)| (n, d.as_slice()))
    }

    /// Validated entry for modulus `n`.
    pub fn lookup(&self, n: usize) -> Option<Result<DifferenceSet>> {
        self.get(n).map(|d| validate_difference_set(d, n))
    }
}

/// Lexicographically first difference set `{0, 1, …}` of order `q`, by
/// exhaustive backtracking.
pub fn first_difference_set(q: usize) -> Option<DifferenceSet> {
    let n = q * q + q + 1;
    let mut used = vec![false; n];
    used[1] = true;
    used[n - 1] = true;
    let mut elements = vec![0, 1];
    if extend_difference_set(n, q + 1, &mut elements, &mut used) {
        Some(DifferenceSet { n, q, elements })
    } else {
        None
    }
}

fn extend_difference_set(n: usize, size: usize, elements: &mut Vec<usize>, used: &mut [bool]) -> bool {
    if elements.len() == size {
        return true;
    }
    let last = *elements.last().expect("seeded with 0 and 1");
    let remaining = size - elements.len();
    for x in last + 1..=n - remaining {
        let mut marked = Vec::with_capacity(2 * elements.len());
        let mut ok = true;
        for &d in elements.iter() {
            let g = x - d;
            if used[g] || used[n - g] || g == n - g {
                ok = false;
                break;
            }
            used[g] = true;
            used[n - g] = true;
            marked.push(g);
        }
        if ok {
            elements.push(x);
            if extend_difference_set(n, size, elements, used) {
                return true;
            }
            elements.pop();
        }
        for g in marked {
            used[g] = false;
            used[n - g] = false;
        }
    }
    false
}

/// Exhaustive search for a difference set of order `q`.
///
/// The result is the [`DifferenceSet::table_form`] of the first set found,
/// unless the embedded table lists a set for the same modulus that is an
/// affine image (`u·D + s`) of it, in which case that listed set is returned.
pub fn search_difference_set(q: usize) -> Result<DifferenceSet> {
    search_difference_set_with(q, &DifferenceSetTable::embedded())
}

pub fn search_difference_set_with(q: usize, table: &DifferenceSetTable) -> Result<DifferenceSet> {
    if q < 2 {
        return Err(Error::PreconditionFailed("plane order must be at least 2".into()));
    }
    let n = q * q + q + 1;
    let found = first_difference_set(q).ok_or(Error::NotFound { q, n })?;
    if let Some(Ok(listed)) = table.lookup(n) {
        if found.affine_map_to(&listed).is_some() {
            return Ok(listed);
        }
    }
    Ok(found.table_form())
}

/// Table entry when present, search otherwise.
pub fn find_difference_set(q: usize, table: &DifferenceSetTable) -> Result<DifferenceSet> {
    let n = q * q + q + 1;
    match table.lookup(n) {
        Some(entry) => entry,
        None => search_difference_set_with(q, table),
    }
}

/// The plane whose lines are the translates `D + i`.
#[derive(Debug, Clone)]
pub struct CyclicPlane {
    ds: DifferenceSet,
    /// `pair[g] = (d_i, d_j)` with `d_i − d_j ≡ g`.
    pair: Vec<(usize, usize)>,
}

impl CyclicPlane {
    pub fn new(ds: DifferenceSet) -> Self {
        let n = ds.n;
        let mut pair = vec![(0, 0); n];
        for &a in &ds.elements {
            for &b in &ds.elements {
                if a != b {
                    pair[(a + n - b) % n] = (a, b);
                }
            }
        }
        Self { ds, pair }
    }

    pub fn difference_set(&self) -> &DifferenceSet {
        &self.ds
    }

    pub fn n(&self) -> usize {
        self.ds.n
    }

    pub fn line(&self, i: usize) -> Vec<usize> {
        self.ds.shift(i).elements
    }

    /// Indices of the `q+1` lines through `x`.
    pub fn lines_through(&self, x: usize) -> Vec<usize> {
        let n = self.n();
        let mut out: Vec<usize> = self.ds.elements.iter().map(|&d| (x % n + n - d) % n).collect();
        out.sort_unstable();
        out
    }

    /// The unique line through two distinct points.
    pub fn line_through(&self, u: usize, v: usize) -> usize {
        let n = self.n();
        let (u, v) = (u % n, v % n);
        assert_ne!(u, v, "a line needs two distinct points");
        let (_, dj) = self.pair[(v + n - u) % n];
        (u + n - dj) % n
    }

    /// The unique point on two distinct lines.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        let n = self.n();
        let (i, j) = (i % n, j % n);
        assert_ne!(i, j, "two distinct lines meet in one point");
        let (d, _) = self.pair[(j + n - i) % n];
        (d + i) % n
    }

    /// Exhaustive check of the incidence axioms: two points share exactly
    /// one line, two lines share exactly one point, every point is on `q+1`
    /// lines.
    pub fn check_axioms(&self) -> bool {
        let n = self.n();
        let lines: Vec<Vec<bool>> = (0..n)
            .map(|i| {
                let mut row = vec![false; n];
                for x in self.line(i) {
                    row[x] = true;
                }
                row
            })
            .collect();
        let points_ok = (0..n).all(|u| {
            (u + 1..n).all(|v| (0..n).filter(|&i| lines[i][u] && lines[i][v]).count() == 1)
                && (0..n).filter(|&i| lines[i][u]).count() == self.ds.q + 1
        });
        let lines_ok = (0..n).all(|i| (i + 1..n).all(|j| (0..n).filter(|&x| lines[i][x] && lines[j][x]).count() == 1));
        points_ok && lines_ok
    }
}

/// Chord between two points of `D`, `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Chord {
    pub a: usize,
    pub b: usize,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordTable {
    n: usize,
    chords: Vec<Chord>,
    by_length: Vec<usize>,
}

/// Every chord of `D` with its circular length.
///
/// Panics if two chords share a length, which a valid difference set rules
/// out.
pub fn chord_table(ds: &DifferenceSet) -> ChordTable {
    let n = ds.n;
    let mut chords = Vec::new();
    for (i, &a) in ds.elements.iter().enumerate() {
        for &b in &ds.elements[i + 1..] {
            let d = b - a;
            chords.push(Chord { a, b, length: d.min(n - d) });
        }
    }
    let mut by_length = vec![usize::MAX; n / 2 + 1];
    for (idx, c) in chords.iter().enumerate() {
        assert_eq!(by_length[c.length], usize::MAX, "length {} repeated", c.length);
        by_length[c.length] = idx;
    }
    assert!(by_length[1..].iter().all(|&i| i != usize::MAX), "chord lengths miss part of 1..=n/2");
    ChordTable { n, chords, by_length }
}

impl ChordTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Chords in lexicographic order of endpoints.
    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn by_length(&self, length: usize) -> Option<Chord> {
        self.by_length.get(length).and_then(|&i| self.chords.get(i)).copied()
    }
}

/// Chords with lengths in `J` split into `t` perfect matchings of `D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingDecomposition {
    pub lengths: Vec<usize>,
    pub t: usize,
    pub matchings: Vec<Vec<Chord>>,
}

impl MatchingDecomposition {
    /// All chords of the decomposition, the subgraph owning the `t` colors.
    pub fn owner_union(&self) -> Vec<Chord> {
        let mut all: Vec<Chord> = self.matchings.concat();
        all.sort_unstable();
        all
    }
}

/// Splits the chords of `D` with lengths in `J` into `t = 2|J|/(q+1)`
/// perfect matchings by backtracking, chords in lexicographic order, each
/// tried in the lowest-index matching first.
pub fn matching_decomposition(ds: &DifferenceSet, lengths: &[usize]) -> Result<MatchingDecomposition> {
    let (n, q) = (ds.n, ds.q);
    if q % 2 == 0 {
        return Err(Error::NotDecomposable(format!("q = {q} is even, so D has no perfect matching")));
    }
    let mut lengths = lengths.to_vec();
    lengths.sort_unstable();
    lengths.dedup();
    if lengths.is_empty() {
        return Err(Error::EmptyLengthSet);
    }
    if let Some(&bad) = lengths.iter().find(|&&l| l == 0 || l > n / 2) {
        return Err(Error::LengthOutOfRange { length: bad, n, max: n / 2 });
    }
    let half = q.div_ceil(2);
    if !lengths.len().is_multiple_of(half) {
        return Err(Error::NotDecomposable(format!(
            "|J| = {} is not a multiple of (q+1)/2 = {half}",
            lengths.len()
        )));
    }
    let t = lengths.len() / half;
    let table = chord_table(ds);
    let mut chords: Vec<Chord> = lengths.iter().filter_map(|&l| table.by_length(l)).collect();
    chords.sort_unstable();

    let index = |x: usize| ds.elements.binary_search(&x).expect("chord endpoint in D");
    let mut degree = vec![0usize; q + 1];
    for c in &chords {
        degree[index(c.a)] += 1;
        degree[index(c.b)] += 1;
    }
    if let Some(p) = degree.iter().position(|&d| d != t) {
        return Err(Error::NotDecomposable(format!(
            "point {} meets {} chords, expected {t}",
            ds.elements[p], degree[p]
        )));
    }

    let mut busy = vec![vec![false; q + 1]; t];
    let mut assigned = vec![usize::MAX; chords.len()];
    let ends: Vec<(usize, usize)> = chords.iter().map(|c| (index(c.a), index(c.b))).collect();
    if !assign_matchings(0, 0, &ends, &mut busy, &mut assigned) {
        return Err(Error::NotDecomposable("the chord subgraph has no 1-factorization".into()));
    }
    let mut matchings = vec![Vec::new(); t];
    for (c, &m) in chords.iter().zip(&assigned) {
        matchings[m].push(*c);
    }
    Ok(MatchingDecomposition { lengths, t, matchings })
}

fn assign_matchings(
    next: usize,
    opened: usize,
    ends: &[(usize, usize)],
    busy: &mut [Vec<bool>],
    assigned: &mut [usize],
) -> bool {
    if next == ends.len() {
        return true;
    }
    let (x, y) = ends[next];
    // a chord may open at most one new matching: matchings are interchangeable
    let limit = (opened + 1).min(busy.len());
    for m in 0..limit {
        if busy[m][x] || busy[m][y] {
            continue;
        }
        busy[m][x] = true;
        busy[m][y] = true;
        assigned[next] = m;
        if assign_matchings(next + 1, opened.max(m + 1), ends, busy, assigned) {
            return true;
        }
        busy[m][x] = false;
        busy[m][y] = false;
    }
    assigned[next] = usize::MAX;
    false
}

/// Length sets of the `q` factors of the round-robin 1-factorization of the
/// complete graph on `D`. The union of any `t` of them is a length set that
/// [`matching_decomposition`] accepts with that `t`.
pub fn factor_length_sets(ds: &DifferenceSet) -> Result<Vec<Vec<usize>>> {
    let q = ds.q;
    if q.is_multiple_of(2) {
        return Err(Error::NotDecomposable(format!("q = {q} is even")));
    }
    let n = ds.n;
    let pts = &ds.elements;
    // points 0..q on a circle, point q fixed at the centre
    let length = |i: usize, j: usize| {
        let d = (pts[i] + n - pts[j]) % n;
        d.min(n - d)
    };
    Ok((0..q)
        .map(|r| {
            let mut set = vec![length(r, q)];
            for s in 1..=(q - 1) / 2 {
                set.push(length((r + s) % q, (r + q - s) % q));
            }
            set.sort_unstable();
            set
        })
        .collect())
}

/// Edge coloring of `C_n(J)` from a plane, with the decomposition that
/// produced it.
#[derive(Debug, Clone)]
pub struct PlaneColoring {
    pub difference_set: DifferenceSet,
    pub decomposition: MatchingDecomposition,
    pub graph: CirculantGraph,
    pub coloring: EdgeColoring,
    pub report: VerificationReport,
}

/// Colors edge `{d_a + i, d_b + i}` with `i·t + m` when the chord
/// `{d_a, d_b}` lies in matching `m`, giving `t·n` colors.
pub fn plane_edge_coloring(ds: &DifferenceSet, lengths: &[usize]) -> Result<PlaneColoring> {
    let decomposition = matching_decomposition(ds, lengths)?;
    let (n, t) = (ds.n, decomposition.t);
    let graph = CirculantGraph::new(n, decomposition.lengths.iter().copied())?;
    let mut assignment = Vec::with_capacity(graph.edge_count());
    for i in 0..n {
        for (m, matching) in decomposition.matchings.iter().enumerate() {
            for c in matching {
                assignment.push((((c.a + i) % n, (c.b + i) % n), i * t + m));
            }
        }
    }
    let coloring = EdgeColoring::new(t * n, assignment)?;
    let report = verify_edge_coloring(&graph, &coloring)?;
    if !report.holds() {
        return Err(Error::ConstructionNotVerified(Box::new(report)));
    }
    Ok(PlaneColoring { difference_set: ds.clone(), decomposition, graph, coloring, report })
}
