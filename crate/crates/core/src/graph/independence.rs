//! Independent-set computations: exact independence number by branch and
//! bound, early-exit search for a stable set of a given size, and maximal
//! independent set enumeration.
//!
//! All three work on the complement graph, where independent sets become
//! cliques: the exact number uses greedy-coloring bounds, and enumeration is
//! Bron–Kerbosch with pivoting.

use super::{Graph, VertexSet};
use crate::bits;
use crate::error::{Error, Result};

/// Default cap for [`maximal_independent_sets`].
pub const DEFAULT_SET_LIMIT: usize = 1_000_000;

/// Exact independence number (maximum size of a set of pairwise non-adjacent
/// vertices).
pub fn independence_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let h = g.complement();
    let mut best = 0;
    let cand = VertexSet::full(h.n());
    clique_expand(&h, cand.words().to_vec(), 0, &mut best);
    best
}

/// Branch and bound for the maximum clique of `h`. Candidates are greedily
/// colored; a clique can use at most one vertex per color class, so
/// `size + color` bounds every completion through a candidate.
fn clique_expand(h: &Graph, cand: Vec<u64>, size: usize, best: &mut usize) {
    if bits::is_empty(&cand) {
        *best = (*best).max(size);
        return;
    }
    // order[i] = (vertex, color), colors ascending
    let mut order: Vec<(usize, usize)> = Vec::with_capacity(bits::count(&cand));
    let mut uncolored = cand.clone();
    let mut color = 0usize;
    while !bits::is_empty(&uncolored) {
        color += 1;
        let mut class = uncolored.clone();
        while let Some(v) = bits::first(&class) {
            bits::clear(&mut class, v);
            bits::clear(&mut uncolored, v);
            // vertices adjacent to v cannot share its color class
            bits::and_not_assign(&mut class, h.row(v));
            order.push((v, color));
        }
    }
    let mut cand = cand;
    for &(v, c) in order.iter().rev() {
        if size + c <= *best {
            return;
        }
        let mut next = cand.clone();
        bits::and_assign(&mut next, h.row(v));
        clique_expand(h, next, size + 1, best);
        bits::clear(&mut cand, v);
    }
}

/// True when `g` contains an independent set of `t` vertices. Returns as soon
/// as one is found; the full independence number is never computed.
pub fn has_independent_set(g: &Graph, t: usize) -> bool {
    if t == 0 {
        return true;
    }
    if t > g.n() {
        return false;
    }
    if t == 1 {
        return true;
    }
    let h = g.complement();
    let cand = VertexSet::full(h.n());
    clique_search(&h, cand.words().to_vec(), t)
}

/// Depth-first search for a clique of `need` more vertices inside `cand`.
fn clique_search(h: &Graph, mut cand: Vec<u64>, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    loop {
        if bits::count(&cand) < need {
            return false;
        }
        let v = bits::first(&cand).expect("count >= need >= 1");
        bits::clear(&mut cand, v);
        let mut inner = cand.clone();
        bits::and_assign(&mut inner, h.row(v));
        if clique_search(h, inner, need - 1) {
            return true;
        }
    }
}

/// All maximal independent sets of `g`, sorted by their vertex lists.
///
/// # Errors
/// Resource error once more than `limit` sets are produced, naming the count
/// reached.
pub fn maximal_independent_sets(g: &Graph, limit: usize) -> Result<Vec<VertexSet>> {
    let h = g.complement();
    let n = g.n();
    let mut out: Vec<VertexSet> = Vec::new();
    let mut r = VertexSet::empty(n);
    bron_kerbosch(
        &h,
        &mut r,
        VertexSet::full(n).words().to_vec(),
        vec![0; bits::words_for(n)],
        limit,
        &mut out,
    )?;
    let mut keyed: Vec<(Vec<usize>, VertexSet)> =
        out.into_iter().map(|s| (s.to_vec(), s)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, s)| s).collect())
}

/// Bron–Kerbosch with pivoting on `h`; maximal cliques of the complement are
/// maximal independent sets of the original graph.
fn bron_kerbosch(
    h: &Graph,
    r: &mut VertexSet,
    p: Vec<u64>,
    x: Vec<u64>,
    limit: usize,
    out: &mut Vec<VertexSet>,
) -> Result<()> {
    if bits::is_empty(&p) && bits::is_empty(&x) {
        if out.len() == limit {
            return Err(Error::resource(format!(
                "maximal independent set enumeration reached {} sets, exceeding the limit of {limit}",
                limit + 1
            )));
        }
        out.push(r.clone());
        return Ok(());
    }
    // pivot maximizing |P ∩ N(u)| prunes the most branches
    let mut pivot = usize::MAX;
    let mut pivot_score = usize::MAX;
    for u in bits::iter_ones(&p).chain(bits::iter_ones(&x)) {
        let mut t = p.clone();
        bits::and_assign(&mut t, h.row(u));
        let missed = bits::count(&p) - bits::count(&t);
        if pivot == usize::MAX || missed < pivot_score {
            pivot = u;
            pivot_score = missed;
        }
    }
    let mut ext = p.clone();
    if pivot != usize::MAX {
        bits::and_not_assign(&mut ext, h.row(pivot));
    }
    let mut p = p;
    let mut x = x;
    for v in bits::iter_ones(&ext.clone()).collect::<Vec<_>>() {
        let mut pv = p.clone();
        bits::and_assign(&mut pv, h.row(v));
        let mut xv = x.clone();
        bits::and_assign(&mut xv, h.row(v));
        r.insert(v);
        let res = bron_kerbosch(h, r, pv, xv, limit, out);
        r.remove(v);
        res?;
        bits::clear(&mut p, v);
        bits::set(&mut x, v);
    }
    Ok(())
}
