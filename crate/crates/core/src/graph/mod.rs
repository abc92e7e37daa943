//! Simple undirected graphs on labeled vertices `0..n`, stored as bitset
//! adjacency rows, plus the vertex-set and pattern types shared across the
//! crate.
//!
//! Two interchange formats are supported and both are strict:
//!
//! * text: a header line `n m` followed by exactly `m` lines `u v` with
//!   `0 <= u < v < n`, edges in lexicographic order;
//! * JSON: `{"n": 5, "edges": [[0,1],[1,2]]}`.
//!
//! Readers reject self-loops, duplicate edges, reversed or out-of-range
//! endpoints, naming the offending line or pair.

pub(crate) mod counting;
mod independence;
mod sample;

pub use counting::{count_induced, has_two_triangles_induced};
pub use independence::{
    has_independent_set, independence_number, maximal_independent_sets, DEFAULT_SET_LIMIT,
};
pub use sample::{sample_er, trial_rng, SampleSpec};

use crate::bits;
use crate::error::{Error, Result};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Subset of the vertices of a graph on `n` labeled vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; bits::words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut words = vec![!0u64; bits::words_for(n)];
        if let Some(last) = words.last_mut() {
            *last &= bits::tail_mask(n);
        }
        VertexSet { n, words }
    }

    /// Builds a set from explicit vertex labels.
    ///
    /// # Errors
    /// Rejects labels `>= n` and repeated labels.
    pub fn from_vertices(n: usize, vertices: &[usize]) -> Result<Self> {
        let mut s = VertexSet::empty(n);
        for &v in vertices {
            if v >= n {
                return Err(Error::parameter(format!("vertex {v} out of range for n={n}")));
            }
            if s.contains(v) {
                return Err(Error::parameter(format!("vertex {v} repeated")));
            }
            s.insert(v);
        }
        Ok(s)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.n);
        bits::get(&self.words, v)
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        bits::set(&mut self.words, v);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.n);
        bits::clear(&mut self.words, v);
    }

    #[inline]
    pub fn len(&self) -> usize {
        bits::count(&self.words)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        bits::is_empty(&self.words)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        bits::iter_ones(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        !bits::intersects(&self.words, &other.words)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        let mut out = self.clone();
        bits::and_assign(&mut out.words, &other.words);
        out
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        let mut out = self.clone();
        bits::or_assign(&mut out.words, &other.words);
        out
    }

    /// Complement within the ambient vertex range `0..n`.
    pub fn complement(&self) -> VertexSet {
        let mut out = VertexSet::full(self.n);
        bits::and_not_assign(&mut out.words, &self.words);
        out
    }

    #[inline]
    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn from_words(n: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), bits::words_for(n));
        debug_assert!(words.last().map_or(true, |w| w & !bits::tail_mask(n) == 0));
        VertexSet { n, words }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Fixed comparison graphs used in pattern counting and the closed-form
/// moment bounds.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PatternGraph {
    /// Two vertex-disjoint triangles with no edges between them, on six
    /// vertices. Written `T` in the text interfaces.
    TwoTriangles,
    /// The edgeless graph on `t >= 2` vertices. Written `E<t>`.
    Empty(usize),
}

impl PatternGraph {
    /// Validated constructor for the edgeless pattern.
    pub fn empty(t: usize) -> Result<Self> {
        if t < 2 {
            return Err(Error::parameter(format!(
                "empty pattern needs at least 2 vertices, got {t}"
            )));
        }
        Ok(PatternGraph::Empty(t))
    }

    /// Rechecks the variant invariants (public tuple fields can bypass the
    /// constructor).
    pub fn validate(&self) -> Result<()> {
        match self {
            PatternGraph::TwoTriangles => Ok(()),
            PatternGraph::Empty(t) if *t >= 2 => Ok(()),
            PatternGraph::Empty(t) => Err(Error::parameter(format!(
                "empty pattern needs at least 2 vertices, got {t}"
            ))),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            PatternGraph::TwoTriangles => 6,
            PatternGraph::Empty(t) => *t,
        }
    }

    /// Concrete labeled copy of the pattern on `0..vertex_count()`.
    pub fn realize(&self) -> Graph {
        match self {
            PatternGraph::TwoTriangles => {
                Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
                    .expect("fixed edge list is valid")
            }
            PatternGraph::Empty(t) => Graph::new(*t),
        }
    }
}

impl fmt::Display for PatternGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternGraph::TwoTriangles => write!(f, "T"),
            PatternGraph::Empty(t) => write!(f, "E{t}"),
        }
    }
}

impl std::str::FromStr for PatternGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "T" {
            return Ok(PatternGraph::TwoTriangles);
        }
        if let Some(t) = s.strip_prefix('E') {
            let t: usize = t
                .parse()
                .map_err(|_| Error::parse(format!("bad pattern {s:?}: expected T or E<t>")))?;
            return PatternGraph::empty(t).map_err(|_| {
                Error::parse(format!("bad pattern {s:?}: E<t> needs t >= 2"))
            });
        }
        Err(Error::parse(format!("bad pattern {s:?}: expected T or E<t>")))
    }
}

impl Serialize for PatternGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Undirected simple graph with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = bits::words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list. Endpoint order within a pair does
    /// not matter here (the strict order requirement applies to the text and
    /// JSON readers).
    ///
    /// # Errors
    /// Rejects self-loops, out-of-range endpoints, and duplicate edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(a, b) in edges {
            g.insert_edge_checked(a, b, None)?;
        }
        Ok(g)
    }

    fn insert_edge_checked(&mut self, a: usize, b: usize, line: Option<usize>) -> Result<()> {
        let at = |msg: String| match line {
            Some(k) => Error::parse(format!("line {k}: {msg}")),
            None => Error::parameter(msg),
        };
        if a >= self.n || b >= self.n {
            return Err(at(format!(
                "edge ({a}, {b}) out of range for n={}",
                self.n
            )));
        }
        if a == b {
            return Err(at(format!("self-loop at vertex {a}")));
        }
        if self.has_edge(a, b) {
            return Err(at(format!("duplicate edge ({a}, {b})")));
        }
        self.set_edge(a, b);
        Ok(())
    }

    /// Drops every edge, keeping the vertex count (scratch reuse in the
    /// exhaustive enumerator).
    #[inline]
    pub(crate) fn clear_edges(&mut self) {
        self.rows.fill(0);
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, a: usize, b: usize) {
        debug_assert!(a != b && a < self.n && b < self.n);
        bits::set(&mut self.rows[a * self.words..(a + 1) * self.words], b);
        bits::set(&mut self.rows[b * self.words..(b + 1) * self.words], a);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        debug_assert!(a < self.n && b < self.n);
        bits::get(self.row(a), b)
    }

    /// Adjacency row of `v` as a bit vector over the vertex range.
    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter_ones(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic order `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits::iter_ones(self.row(u)) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Graph on the same vertices with edge set complemented.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        let full = VertexSet::full(self.n);
        for v in 0..self.n {
            let dst = &mut g.rows[v * g.words..(v + 1) * g.words];
            for (d, (s, f)) in dst.iter_mut().zip(self.row(v).iter().zip(full.words())) {
                *d = !s & f;
            }
            bits::clear(dst, v);
        }
        g
    }

    /// Subgraph induced on `s`, with vertices relabeled `0..s.len()` in
    /// ascending label order.
    pub fn induced(&self, s: &VertexSet) -> Graph {
        debug_assert_eq!(s.n(), self.n);
        let keep: Vec<usize> = s.to_vec();
        let mut g = Graph::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    /// True when some component contains a cycle, i.e. the graph is not a
    /// forest.
    pub fn has_cycle(&self) -> bool {
        let mut seen = VertexSet::empty(self.n);
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp_vertices = 0usize;
            let mut comp_degree_sum = 0usize;
            seen.insert(s);
            stack.push(s);
            while let Some(u) = stack.pop() {
                comp_vertices += 1;
                comp_degree_sum += self.degree(u);
                for v in self.neighbors(u) {
                    if !seen.contains(v) {
                        seen.insert(v);
                        stack.push(v);
                    }
                }
            }
            // A component is a tree exactly when it has one fewer edge than
            // vertices.
            if comp_degree_sum / 2 >= comp_vertices {
                return true;
            }
        }
        false
    }

    /// True when the vertices admit a proper 2-coloring.
    pub fn is_bipartite(&self) -> bool {
        let mut color: Vec<i8> = vec![-1; self.n];
        let mut stack = Vec::new();
        for s in 0..self.n {
            if color[s] >= 0 {
                continue;
            }
            color[s] = 0;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if color[v] < 0 {
                        color[v] = 1 - color[u];
                        stack.push(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    // ---------- text format ----------

    pub fn to_text(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the strict text format.
    ///
    /// # Errors
    /// Any deviation (bad header, wrong edge count, `u >= v`, out-of-range or
    /// duplicate edges, trailing content) is a parse error naming the line.
    pub fn from_text(input: &str) -> Result<Self> {
        let mut lines = input.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::parse("empty input".to_string()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::parse("line 1: expected header 'n m'".to_string()))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::parse("line 1: expected header 'n m'".to_string()))?;
        if it.next().is_some() {
            return Err(Error::parse("line 1: trailing tokens in header".to_string()));
        }
        let mut g = Graph::new(n);
        let mut read = 0usize;
        for (idx, line) in lines {
            let lineno = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            if read == m {
                return Err(Error::parse(format!(
                    "line {lineno}: more than {m} edge lines"
                )));
            }
            let mut it = line.split_whitespace();
            let (u, v) = match (
                it.next().and_then(|t| t.parse::<usize>().ok()),
                it.next().and_then(|t| t.parse::<usize>().ok()),
                it.next(),
            ) {
                (Some(u), Some(v), None) => (u, v),
                _ => {
                    return Err(Error::parse(format!("line {lineno}: expected 'u v'")));
                }
            };
            if u >= v {
                return Err(Error::parse(format!(
                    "line {lineno}: expected u < v, got ({u}, {v})"
                )));
            }
            g.insert_edge_checked(u, v, Some(lineno))?;
            read += 1;
        }
        if read != m {
            return Err(Error::parse(format!(
                "expected {m} edges, found {read}"
            )));
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(deserializer)?;
        let mut g = Graph::new(raw.n);
        for (k, &(u, v)) in raw.edges.iter().enumerate() {
            if u >= v {
                return Err(D::Error::custom(format!(
                    "edge {k}: expected u < v, got ({u}, {v})"
                )));
            }
            g.insert_edge_checked(u, v, None)
                .map_err(|e| D::Error::custom(format!("edge {k}: {e}")))?;
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    // ---------- construction and validation ----------

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 0)]),
            Err(crate::Error::Parameter(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(crate::Error::Parameter(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(crate::Error::Parameter(_))
        ));
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = Graph::from_edges(4, &[(2, 3), (1, 0), (3, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 3), (2, 3)]);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degree(3), 2);
    }

    // ---------- complement and induced ----------

    #[test]
    fn complement_of_complete_is_empty() {
        let g = complete(5);
        let c = g.complement();
        assert_eq!(c.edge_count(), 0);
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn complement_involution_across_word_boundary() {
        let g = path(70);
        assert_eq!(g.complement().complement(), g);
        assert_eq!(
            g.complement().edge_count(),
            70 * 69 / 2 - g.edge_count()
        );
    }

    #[test]
    fn induced_relabels_in_ascending_order() {
        // 5-cycle with chords (1,4), (2,4); restricting to {1,2,3,5-cycle part}
        let g = Graph::from_edges(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 4), (2, 4)],
        )
        .unwrap();
        let s = VertexSet::from_vertices(5, &[1, 2, 4]).unwrap();
        let h = g.induced(&s);
        // vertices 1,2,4 -> 0,1,2; all three pairs are edges
        assert_eq!(h.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        let t = VertexSet::from_vertices(5, &[0, 2, 3]).unwrap();
        assert_eq!(g.induced(&t).edges(), vec![(1, 2)]);
    }

    // ---------- cycle and bipartite tests ----------

    #[test]
    fn forests_have_no_cycle() {
        assert!(!path(1).has_cycle());
        assert!(!path(6).has_cycle());
        let two_paths = Graph::from_edges(5, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        assert!(!two_paths.has_cycle());
        assert!(!Graph::new(4).has_cycle());
        assert!(!Graph::new(0).has_cycle());
    }

    #[test]
    fn cycles_are_detected() {
        assert!(cycle(3).has_cycle());
        assert!(cycle(6).has_cycle());
        // cycle in one component, tree in the other
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        assert!(g.has_cycle());
    }

    #[test]
    fn bipartite_detection() {
        assert!(cycle(4).is_bipartite());
        assert!(cycle(6).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert!(path(7).is_bipartite());
        assert!(Graph::new(3).is_bipartite());
        assert!(!complete(3).is_bipartite());
    }

    // ---------- formats ----------

    #[test]
    fn text_round_trip() {
        let g = Graph::from_edges(5, &[(0, 4), (1, 2), (0, 1)]).unwrap();
        let s = g.to_text();
        assert_eq!(s, "5 3\n0 1\n0 4\n1 2\n");
        assert_eq!(Graph::from_text(&s).unwrap(), g);
        let empty = Graph::from_text("4 0\n").unwrap();
        assert_eq!(empty.n(), 4);
        assert_eq!(empty.edge_count(), 0);
    }

    #[test]
    fn text_reader_is_strict() {
        for bad in [
            "",
            "3\n",
            "3 1\n0 0\n",
            "3 1\n1 0\n",
            "3 1\n0 3\n",
            "3 2\n0 1\n0 1\n",
            "3 1\n0 1\n1 2\n",
            "3 2\n0 1\n",
            "3 1\n0 1 2\n",
        ] {
            assert!(
                matches!(Graph::from_text(bad), Err(crate::Error::Parse(_))),
                "accepted {bad:?}"
            );
        }
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::from_edges(4, &[(0, 2), (1, 3)]).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":4,"edges":[[0,2],[1,3]]}"#);
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        for bad in [
            r#"{"n":3,"edges":[[0,0]]}"#,
            r#"{"n":3,"edges":[[1,0]]}"#,
            r#"{"n":3,"edges":[[0,5]]}"#,
            r#"{"n":3,"edges":[[0,1],[0,1]]}"#,
        ] {
            assert!(serde_json::from_str::<Graph>(bad).is_err(), "accepted {bad}");
        }
    }

    // ---------- vertex sets and patterns ----------

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::empty(70);
        s.insert(0);
        s.insert(69);
        s.insert(64);
        assert_eq!(s.to_vec(), vec![0, 64, 69]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(64));
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(VertexSet::full(70).len(), 70);
        assert!(VertexSet::from_vertices(3, &[0, 0]).is_err());
        assert!(VertexSet::from_vertices(3, &[3]).is_err());
        let c = s.complement();
        assert_eq!(c.len(), 68);
        assert!(s.is_disjoint(&c));
    }

    #[test]
    fn pattern_basics() {
        let t = PatternGraph::TwoTriangles;
        let g = t.realize();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 6);
        assert!(g.has_edge(0, 1) && g.has_edge(3, 4) && !g.has_edge(2, 3));
        assert_eq!(t.to_string(), "T");
        assert_eq!("T".parse::<PatternGraph>().unwrap(), t);
        assert_eq!(
            "E3".parse::<PatternGraph>().unwrap(),
            PatternGraph::Empty(3)
        );
        assert_eq!(PatternGraph::Empty(4).to_string(), "E4");
        assert!(PatternGraph::empty(1).is_err());
        assert!("E1".parse::<PatternGraph>().is_err());
        assert!("X".parse::<PatternGraph>().is_err());
        assert_eq!(PatternGraph::Empty(3).realize().edge_count(), 0);
    }
}
