//! Exact normality decisions for edge and cover ideals.
//!
//! The edge ideal of a graph is normal exactly when no two induced odd
//! cycles are "untouching": vertex-disjoint with no edge between them. The
//! search for such a pair runs in two stages. Triangle/triangle pairs are
//! scanned first (for every triangle, any triangle among the vertices
//! outside its closed neighborhood settles the question), which finds a
//! witness immediately in dense graphs where longer-cycle enumeration would
//! be hopeless. Only when no such pair exists are induced odd cycles of
//! length five and up enumerated, each tested against the triangles and the
//! cycles found before it. Both stages are exhaustive, so `None` means no
//! pair exists; the enumeration is exponential in the worst case, which is
//! the price of an exact answer.
//!
//! For cover ideals the decision runs through the complement graph and is
//! only conclusive when the independence number is at most 2 (or the graph
//! is bipartite, where cover ideals are always normal); larger independence
//! numbers return an explicit undecided verdict.

use crate::bits;
use crate::graph::{has_independent_set, Graph, VertexSet};
use serde::Serialize;

/// Two untouching induced odd cycles, the obstruction to a normal edge
/// ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HochsterWitness {
    pub c1: VertexSet,
    pub c2: VertexSet,
}

impl HochsterWitness {
    fn new(c1: VertexSet, c2: VertexSet) -> Self {
        HochsterWitness { c1, c2 }
    }

    /// Rechecks the witness against a graph: both sets induce chordless odd
    /// cycles, and no vertex of one lies in or next to the other.
    pub fn validate(&self, g: &Graph) -> bool {
        induces_odd_cycle(g, &self.c1)
            && induces_odd_cycle(g, &self.c2)
            && self.c1.is_disjoint(&self.c2)
            && !self.c1.iter().any(|u| self.c2.iter().any(|v| g.has_edge(u, v)))
    }
}

/// True when `s` induces a single chordless odd cycle in `g`: every vertex
/// of `s` has exactly two neighbors inside, the set is connected, and `|s|`
/// is odd and at least 3.
fn induces_odd_cycle(g: &Graph, s: &VertexSet) -> bool {
    let k = s.len();
    if k < 3 || k % 2 == 0 {
        return false;
    }
    let mut scratch = vec![0u64; bits::words_for(g.n())];
    for v in s.iter() {
        bits::and_into(g.row(v), s.words(), &mut scratch);
        if bits::count(&scratch) != 2 {
            return false;
        }
    }
    // all degrees are 2; connectivity then forces a single cycle
    let start = s.iter().next().expect("nonempty");
    let mut seen = VertexSet::empty(g.n());
    seen.insert(start);
    let mut stack = vec![start];
    let mut reached = 0usize;
    while let Some(u) = stack.pop() {
        reached += 1;
        bits::and_into(g.row(u), s.words(), &mut scratch);
        for v in bits::iter_ones(&scratch) {
            if !seen.contains(v) {
                seen.insert(v);
                stack.push(v);
            }
        }
    }
    reached == k
}

/// All induced (chordless) odd cycles with at most `max_len` vertices, as
/// vertex sets, in a deterministic root-then-path order.
pub fn induced_odd_cycles(g: &Graph, max_len: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    enumerate_induced_cycles(g, 3, max_len, |cycle| {
        if cycle.len() % 2 == 1 {
            out.push(VertexSet::from_vertices(g.n(), cycle).expect("cycle vertices are valid"));
        }
        true
    });
    out
}

/// Enumerates every induced cycle of `g` with between `min_len` and
/// `max_len` vertices exactly once, invoking `visit` with the vertex list
/// (root first). `visit` returns false to abort the whole enumeration.
///
/// Cycles are rooted at their smallest vertex; paths grow only through
/// larger vertices, a closing vertex must be the only path vertex adjacent
/// to the root, and a cycle is reported only when the second path vertex is
/// smaller than the closing vertex, so each cycle appears in exactly one
/// orientation.
fn enumerate_induced_cycles(
    g: &Graph,
    min_len: usize,
    max_len: usize,
    mut visit: impl FnMut(&[usize]) -> bool,
) {
    if max_len < 3 || g.n() < 3 {
        return;
    }
    let wpr = bits::words_for(g.n());
    let mut path: Vec<usize> = Vec::new();
    for r in 0..g.n() {
        // vertices above the root that may still join the path
        let mut above = VertexSet::empty(g.n());
        for v in r + 1..g.n() {
            above.insert(v);
        }
        let first: Vec<usize> = bits::iter_ones(g.row(r)).filter(|&v| v > r).collect();
        for v1 in first {
            path.clear();
            path.push(r);
            path.push(v1);
            // forbidden: neighbors of interior path vertices (none yet)
            let forbidden = vec![0u64; wpr];
            if !grow(g, &mut path, &forbidden, &above, min_len, max_len, &mut visit) {
                return;
            }
        }
    }
}

/// Extends `path` (an induced path rooted at its minimum) by one vertex in
/// all valid ways; returns false to propagate an abort.
fn grow(
    g: &Graph,
    path: &mut Vec<usize>,
    forbidden: &[u64],
    above: &VertexSet,
    min_len: usize,
    max_len: usize,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let r = path[0];
    let last = *path.last().expect("path nonempty");
    // candidates: above the root, adjacent to the tip, not adjacent to any
    // interior vertex, not already on the path
    let mut cand = above.words().to_vec();
    bits::and_assign(&mut cand, g.row(last));
    bits::and_not_assign(&mut cand, forbidden);
    for &u in path.iter() {
        if bits::get(&cand, u) {
            bits::clear(&mut cand, u);
        }
    }
    let closing_len = path.len() + 1;
    for w in bits::iter_ones(&cand).collect::<Vec<_>>() {
        if g.has_edge(r, w) {
            // closing: path[1] < w picks one orientation per cycle
            if closing_len >= min_len && closing_len <= max_len && path[1] < w {
                path.push(w);
                let keep = visit(path);
                path.pop();
                if !keep {
                    return false;
                }
            }
        } else if path.len() < max_len.saturating_sub(1) {
            let mut next_forbidden = forbidden.to_vec();
            bits::or_assign(&mut next_forbidden, g.row(last));
            path.push(w);
            let keep = grow(g, path, &next_forbidden, above, min_len, max_len, visit);
            path.pop();
            if !keep {
                return false;
            }
        }
    }
    true
}

/// Searches for two untouching induced odd cycles. `None` is an exhaustive
/// answer: the graph has no such pair.
pub fn find_hochster(g: &Graph) -> Option<HochsterWitness> {
    if g.n() < 6 {
        return None;
    }
    // stage 1: triangle/triangle pairs
    if let Some((a, b)) = crate::graph::counting::first_nontouching_triangle_pair(g) {
        return Some(HochsterWitness::new(
            VertexSet::from_vertices(g.n(), &a).expect("triangle is valid"),
            VertexSet::from_vertices(g.n(), &b).expect("triangle is valid"),
        ));
    }
    // stage 2: odd cycles of length >= 5, each tested against every triangle
    // (lazily, through the closed-neighborhood complement) and against the
    // cycles found before it
    let mut seen: Vec<(VertexSet, VertexSet)> = Vec::new(); // (cycle, closed nbhd)
    let mut witness = None;
    enumerate_induced_cycles(g, 5, g.n(), |cycle| {
        if cycle.len() % 2 == 0 {
            return true;
        }
        let set = VertexSet::from_vertices(g.n(), cycle).expect("cycle vertices are valid");
        let mut nbhd_words = set.words().to_vec();
        for &v in cycle {
            bits::or_assign(&mut nbhd_words, g.row(v));
        }
        let nbhd = VertexSet::from_words(g.n(), nbhd_words);
        let outside = nbhd.complement();
        if let Some(tri) = crate::graph::counting::first_triangle_within(g, outside.words()) {
            witness = Some(HochsterWitness::new(
                set,
                VertexSet::from_vertices(g.n(), &tri).expect("triangle is valid"),
            ));
            return false;
        }
        for (other, other_nbhd) in &seen {
            if set.is_disjoint(other_nbhd) {
                witness = Some(HochsterWitness::new(other.clone(), set.clone()));
                return false;
            }
        }
        seen.push((set, nbhd));
        true
    });
    witness
}

/// Blind reference search: tries every odd vertex subset as a potential
/// induced cycle and every pair for the untouching condition. Exponential in
/// `n`; meant for cross-checking [`find_hochster`] on graphs with at most 16
/// or so vertices.
///
/// # Panics
/// `n > 63` (subsets are enumerated as 64-bit masks).
pub fn find_hochster_naive(g: &Graph) -> Option<HochsterWitness> {
    let n = g.n();
    assert!(n <= 63, "naive subset enumeration supports n <= 63");
    let mut cycles: Vec<(u64, u64)> = Vec::new(); // (mask, closed nbhd mask)
    for mask in 1u64..1 << n {
        let k = mask.count_ones() as usize;
        if k < 3 || k % 2 == 0 {
            continue;
        }
        let set = set_from_mask(n, mask);
        if !induces_odd_cycle(g, &set) {
            continue;
        }
        let mut nbhd = mask;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            nbhd |= g.row(v)[0];
        }
        for &(m2, _) in &cycles {
            if nbhd & m2 == 0 {
                return Some(HochsterWitness::new(set_from_mask(n, m2), set));
            }
        }
        cycles.push((mask, nbhd));
    }
    None
}

fn set_from_mask(n: usize, mask: u64) -> VertexSet {
    let mut s = VertexSet::empty(n);
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        s.insert(v);
    }
    s
}

/// Whether the edge ideal is normal: true exactly when [`find_hochster`]
/// finds nothing. Degenerate cases (no cycles at all) are normal.
pub fn edge_ideal_normal(g: &Graph) -> bool {
    find_hochster(g).is_none()
}

/// Decision for the cover ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverNormality {
    Normal,
    NotNormal,
    /// The criterion through the complement applies only when the
    /// independence number is at most 2; beyond that the answer is unknown.
    UndecidedBeta0TooLarge,
}

/// Decides normality of the cover ideal where the theory is conclusive:
/// bipartite graphs are normal; for independence number at most 2 the cover
/// ideal is normal exactly when the complement has no untouching pair of
/// induced odd cycles; anything else is undecided.
pub fn cover_ideal_normality(g: &Graph) -> CoverNormality {
    if g.is_bipartite() {
        return CoverNormality::Normal;
    }
    if has_independent_set(g, 3) {
        return CoverNormality::UndecidedBeta0TooLarge;
    }
    if find_hochster(&g.complement()).is_some() {
        CoverNormality::NotNormal
    } else {
        CoverNormality::Normal
    }
}
