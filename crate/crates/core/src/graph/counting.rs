//! Induced pattern counting and searching for the two fixed patterns: the
//! edgeless graph on `t` vertices and the pair of untouching triangles.

use super::{Graph, PatternGraph, VertexSet};
use crate::bits;
use crate::error::Result;

/// Number of induced copies of `pattern` in `g` (vertex subsets whose induced
/// subgraph is isomorphic to the pattern).
///
/// The edgeless count enumerates independent sets of the given size; the
/// two-triangles count scans triangle pairs, so it is quadratic in the number
/// of triangles and intended for moderate sizes.
///
/// # Errors
/// Invalid pattern parameters (`E<t>` with `t < 2`).
pub fn count_induced(g: &Graph, pattern: &PatternGraph) -> Result<u64> {
    pattern.validate()?;
    match pattern {
        PatternGraph::Empty(t) => Ok(count_independent_sets(g, *t)),
        PatternGraph::TwoTriangles => Ok(count_triangle_pairs(g)),
    }
}

/// True when some six vertices induce two untouching triangles. Stops at the
/// first witness instead of counting.
pub fn has_two_triangles_induced(g: &Graph) -> bool {
    first_nontouching_triangle_pair(g).is_some()
}

/// Independent sets of size exactly `t`, counted by ascending-vertex
/// extension.
fn count_independent_sets(g: &Graph, t: usize) -> u64 {
    if t > g.n() {
        return 0;
    }
    let cand = VertexSet::full(g.n());
    count_extensions(g, cand.words().to_vec(), t)
}

fn count_extensions(g: &Graph, mut cand: Vec<u64>, remaining: usize) -> u64 {
    if remaining == 0 {
        return 1;
    }
    let mut total = 0u64;
    while let Some(v) = bits::first(&cand) {
        if bits::count(&cand) < remaining {
            break;
        }
        bits::clear(&mut cand, v);
        let mut inner = cand.clone();
        bits::and_not_assign(&mut inner, g.row(v));
        total += count_extensions(g, inner, remaining - 1);
    }
    total
}

/// Unordered pairs of triangles that are vertex-disjoint with no edge from
/// one to the other. Exactly such pairs span an induced copy of the
/// two-triangles pattern.
fn count_triangle_pairs(g: &Graph) -> u64 {
    let tris = triangle_masks(g);
    let mut count = 0u64;
    for i in 0..tris.len() {
        for j in i + 1..tris.len() {
            if !bits::intersects(&tris[i].1, &tris[j].0) {
                count += 1;
            }
        }
    }
    count
}

/// All triangles as `(vertex mask, closed neighborhood mask)`; the closed
/// neighborhood is the union of the three adjacency rows and contains the
/// triangle itself.
fn triangle_masks(g: &Graph) -> Vec<(Vec<u64>, Vec<u64>)> {
    let mut out = Vec::new();
    for_each_triangle(g, |u, v, w| {
        out.push(masks_of_triangle(g, u, v, w));
        true
    });
    out
}

fn masks_of_triangle(g: &Graph, u: usize, v: usize, w: usize) -> (Vec<u64>, Vec<u64>) {
    let n = g.n();
    let mut mask = vec![0u64; bits::words_for(n)];
    bits::set(&mut mask, u);
    bits::set(&mut mask, v);
    bits::set(&mut mask, w);
    let mut nbhd = mask.clone();
    bits::or_assign(&mut nbhd, g.row(u));
    bits::or_assign(&mut nbhd, g.row(v));
    bits::or_assign(&mut nbhd, g.row(w));
    (mask, nbhd)
}

/// Visits triangles `u < v < w` in lexicographic order until the callback
/// returns false.
fn for_each_triangle(g: &Graph, mut visit: impl FnMut(usize, usize, usize) -> bool) {
    let wpr = bits::words_for(g.n());
    let mut common = vec![0u64; wpr];
    for u in 0..g.n() {
        for v in bits::iter_ones(g.row(u)).filter(|&v| v > u) {
            bits::and_into(g.row(u), g.row(v), &mut common);
            for w in bits::iter_ones(&common).filter(|&w| w > v) {
                if !visit(u, v, w) {
                    return;
                }
            }
        }
    }
}

/// First (in enumeration order) pair of untouching triangles, as vertex
/// triples. Scans every triangle as the first element and looks for any
/// triangle among the vertices outside its closed neighborhood, so a `None`
/// answer is exhaustive.
pub(crate) fn first_nontouching_triangle_pair(
    g: &Graph,
) -> Option<([usize; 3], [usize; 3])> {
    if g.n() < 6 {
        return None;
    }
    let full = VertexSet::full(g.n());
    let mut found = None;
    for_each_triangle(g, |u, v, w| {
        let (_, nbhd) = masks_of_triangle(g, u, v, w);
        let mut outside = full.words().to_vec();
        bits::and_not_assign(&mut outside, &nbhd);
        if let Some(other) = first_triangle_within(g, &outside) {
            found = Some(([u, v, w], other));
            return false;
        }
        true
    });
    found
}

/// Lexicographically least triangle of `g` whose vertices all lie in
/// `allowed`.
pub(crate) fn first_triangle_within(g: &Graph, allowed: &[u64]) -> Option<[usize; 3]> {
    let wpr = bits::words_for(g.n());
    let mut row_in = vec![0u64; wpr];
    let mut common = vec![0u64; wpr];
    for a in bits::iter_ones(allowed) {
        bits::and_into(g.row(a), allowed, &mut row_in);
        for b in bits::iter_ones(&row_in).filter(|&b| b > a) {
            bits::and_into(&row_in, g.row(b), &mut common);
            if let Some(c) = bits::iter_ones(&common).find(|&c| c > b) {
                return Some([a, b, c]);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{sample_er, SampleSpec};

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    fn binom(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        let mut r = 1u64;
        for i in 0..k {
            r = r * (n - i) / (i + 1);
        }
        r
    }

    #[test]
    fn empty_pattern_counts() {
        let g = Graph::new(7);
        for t in 2..=7 {
            assert_eq!(
                count_induced(&g, &PatternGraph::Empty(t)).unwrap(),
                binom(7, t as u64)
            );
        }
        assert_eq!(count_induced(&g, &PatternGraph::Empty(8)).unwrap(), 0);
        assert_eq!(count_induced(&complete(6), &PatternGraph::Empty(2)).unwrap(), 0);
        assert!(count_induced(&g, &PatternGraph::Empty(1)).is_err());
    }

    #[test]
    fn empty_pattern_on_structured_graphs() {
        // 5-cycle: stable pairs = C(5,2) - 5 edges = 5; no stable triple
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(count_induced(&c5, &PatternGraph::Empty(2)).unwrap(), 5);
        assert_eq!(count_induced(&c5, &PatternGraph::Empty(3)).unwrap(), 0);
        // complete bipartite K_{3,3}: stable t-sets live inside one side
        let mut edges = Vec::new();
        for u in 0..3 {
            for v in 3..6 {
                edges.push((u, v));
            }
        }
        let k33 = Graph::from_edges(6, &edges).unwrap();
        assert_eq!(count_induced(&k33, &PatternGraph::Empty(2)).unwrap(), 6);
        assert_eq!(count_induced(&k33, &PatternGraph::Empty(3)).unwrap(), 2);
    }

    #[test]
    fn two_triangles_exact_copies() {
        let t = PatternGraph::TwoTriangles.realize();
        assert_eq!(count_induced(&t, &PatternGraph::TwoTriangles).unwrap(), 1);
        assert!(has_two_triangles_induced(&t));
        // complete graph: every triangle pair touches
        assert_eq!(
            count_induced(&complete(8), &PatternGraph::TwoTriangles).unwrap(),
            0
        );
        assert!(!has_two_triangles_induced(&complete(8)));
        // adding any edge between the triangles kills the only copy
        let spoiled =
            Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])
                .unwrap();
        assert_eq!(count_induced(&spoiled, &PatternGraph::TwoTriangles).unwrap(), 0);
    }

    #[test]
    fn three_disjoint_triangles_give_three_pairs() {
        let mut edges = Vec::new();
        for b in [0usize, 3, 6] {
            edges.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2)]);
        }
        let g = Graph::from_edges(9, &edges).unwrap();
        assert_eq!(count_induced(&g, &PatternGraph::TwoTriangles).unwrap(), 3);
    }

    #[test]
    fn search_agrees_with_count() {
        for k in 0..60u64 {
            let n = 6 + (k % 5) as usize;
            let p = 0.2 + 0.1 * (k % 7) as f64;
            let g = sample_er(&SampleSpec::new(n, p, 0xBEEF, k)).unwrap();
            let count = count_induced(&g, &PatternGraph::TwoTriangles).unwrap();
            assert_eq!(has_two_triangles_induced(&g), count > 0, "trial {k}");
        }
    }

    #[test]
    fn witness_pair_is_valid() {
        let g = sample_er(&SampleSpec::new(30, 0.2, 123, 4)).unwrap();
        if let Some((a, b)) = first_nontouching_triangle_pair(&g) {
            for tri in [a, b] {
                assert!(g.has_edge(tri[0], tri[1]));
                assert!(g.has_edge(tri[0], tri[2]));
                assert!(g.has_edge(tri[1], tri[2]));
            }
            for &x in &a {
                for &y in &b {
                    assert_ne!(x, y);
                    assert!(!g.has_edge(x, y));
                }
            }
        }
    }
}
