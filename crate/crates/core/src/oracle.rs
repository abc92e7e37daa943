//! Exhaustive enumeration over all labeled graphs on few vertices.
//!
//! For an event `A`, the exact probability under G(n, p) is the polynomial
//! `P(A) = sum_m c_m p^m q^(M-m)` where `M = C(n,2)` and `c_m` counts the
//! labeled graphs with `m` edges satisfying `A`. The enumerator walks every
//! edge-subset bitmask over the `M` vertex pairs in lexicographic order and
//! tallies `c_m` (or, for moments, the sum of `Y^power` over graphs with `m`
//! edges). Coefficients are kept in arbitrary precision; evaluation is
//! offered both in compensated floating point and in exact rationals.
//!
//! Work is split over threads by mask ranges and merged by coefficientwise
//! addition, so results are identical for every worker count.

use crate::error::{Error, Result};
use crate::event::EventSpec;
use crate::graph::{count_induced, Graph, PatternGraph};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest `n` enumerated without an explicit opt-in (2^21 graphs).
pub const DEFAULT_ENUMERATION_CAP: usize = 7;
/// Hard ceiling: `n = 8` means 2^28 graphs, already minutes of work.
pub const MAX_ENUMERATION_N: usize = 8;

/// Exact probability polynomial `sum_m c_m p^m q^(M-m)` with nonnegative
/// integer coefficients indexed by edge count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbPolynomial {
    n: usize,
    coeffs: Vec<BigUint>,
}

impl ProbPolynomial {
    fn new(n: usize, coeffs: Vec<BigUint>) -> Self {
        debug_assert_eq!(coeffs.len(), n * n.saturating_sub(1) / 2 + 1);
        ProbPolynomial { n, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of vertex pairs `M = C(n,2)`; coefficients run `0..=M`.
    pub fn pair_count(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Evaluates at `p` with Kahan-compensated summation.
    ///
    /// # Errors
    /// `p` outside `[0, 1]`.
    pub fn evaluate_f64(&self, p: f64) -> Result<f64> {
        if !p.is_finite() || !(0.0..=1.0).contains(&p) {
            return Err(Error::parameter(format!(
                "probability must lie in [0, 1], got {p}"
            )));
        }
        let q = 1.0 - p;
        let m_total = self.pair_count() as i32;
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = c.to_f64().expect("counts fit f64 range")
                * p.powi(m as i32)
                * q.powi(m_total - m as i32);
            let y = term - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        Ok(sum)
    }

    /// Exact evaluation at a rational `p`.
    pub fn evaluate_rational(&self, p: &BigRational) -> BigRational {
        let q = BigRational::one() - p;
        let m_total = self.pair_count();
        let mut sum = BigRational::zero();
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = BigRational::from(BigInt::from(c.clone()))
                * crate::moments::exact::rpow(p, m as i64)
                * crate::moments::exact::rpow(&q, (m_total - m) as i64);
            sum += term;
        }
        sum
    }

    pub fn csv_header() -> &'static str {
        "m,count"
    }

    pub fn csv_rows(&self) -> String {
        let mut out = String::new();
        for (m, c) in self.coeffs.iter().enumerate() {
            out.push_str(&format!("{m},{c}\n"));
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    n: usize,
    #[serde(rename = "M")]
    m: usize,
    coeffs: Vec<String>,
}

impl Serialize for ProbPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            n: self.n,
            m: self.pair_count(),
            coeffs: self.coeffs.iter().map(BigUint::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ProbPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        if raw.coeffs.len() != raw.m + 1 || raw.m != raw.n * raw.n.saturating_sub(1) / 2 {
            return Err(D::Error::custom("coefficient count does not match n"));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| s.parse::<BigUint>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(ProbPolynomial::new(raw.n, coeffs))
    }
}

fn check_cap(n: usize, cap: usize) -> Result<usize> {
    let cap = cap.min(MAX_ENUMERATION_N);
    if n > cap {
        return Err(Error::resource(format!(
            "exhaustive enumeration over 2^{} graphs refused: n={n} exceeds the cap of {cap}",
            n * n.saturating_sub(1) / 2
        )));
    }
    Ok(n)
}

fn pair_table(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Runs `per_graph` over every labeled graph on `n` vertices, summing its
/// contribution into the coefficient for the graph's edge count.
fn enumerate_tally(
    n: usize,
    cap: usize,
    per_graph: impl Fn(&Graph) -> u64 + Sync,
) -> Result<ProbPolynomial> {
    check_cap(n, cap)?;
    let pairs = pair_table(n);
    let m = pairs.len();
    let total: u64 = 1u64 << m;
    let counts = (0..total)
        .into_par_iter()
        .fold(
            || (vec![0u64; m + 1], Graph::new(n)),
            |(mut acc, mut g), mask| {
                rebuild_from_mask(&mut g, &pairs, mask);
                let w = per_graph(&g);
                if w != 0 {
                    acc[mask.count_ones() as usize] += w;
                }
                (acc, g)
            },
        )
        .map(|(acc, _)| acc)
        .reduce(
            || vec![0u64; m + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Ok(ProbPolynomial::new(
        n,
        counts.into_iter().map(BigUint::from).collect(),
    ))
}

fn rebuild_from_mask(g: &mut Graph, pairs: &[(usize, usize)], mask: u64) {
    g.clear_edges();
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (u, v) = pairs[i];
        g.set_edge(u, v);
    }
}

/// Exact probability polynomial of `event` on `n` labeled vertices.
///
/// # Errors
/// Resource error when `n` exceeds `min(cap, 8)`.
pub fn enumerate_event(n: usize, event: &EventSpec, cap: usize) -> Result<ProbPolynomial> {
    event.validate()?;
    enumerate_tally(n, cap, |g| u64::from(event.eval(g)))
}

/// Like [`enumerate_event`] but for an arbitrary predicate; used for
/// cross-checks that are not part of the named registry.
pub fn enumerate_event_fn(
    n: usize,
    cap: usize,
    predicate: impl Fn(&Graph) -> bool + Sync,
) -> Result<ProbPolynomial> {
    enumerate_tally(n, cap, |g| u64::from(predicate(g)))
}

/// Coefficients of `E[Y^power]` where `Y` counts induced copies of
/// `pattern`: coefficient `m` sums `Y(G)^power` over graphs with `m` edges.
///
/// # Errors
/// Invalid pattern, `power` outside `{1, 2}`, or `n` over the cap.
pub fn enumerate_pattern_moment(
    n: usize,
    pattern: &PatternGraph,
    power: u32,
    cap: usize,
) -> Result<ProbPolynomial> {
    pattern.validate()?;
    if !(1..=2).contains(&power) {
        return Err(Error::parameter(format!(
            "only first and second moments are supported, got power {power}"
        )));
    }
    enumerate_tally(n, cap, |g| {
        let y = count_induced(g, pattern).expect("pattern validated");
        if power == 1 {
            y
        } else {
            y * y
        }
    })
}

/// First-moment polynomial `E[Y]` for induced copies of `pattern`.
pub fn enumerate_expectation(n: usize, pattern: &PatternGraph, cap: usize) -> Result<ProbPolynomial> {
    enumerate_pattern_moment(n, pattern, 1, cap)
}

/// Number of labeled graphs on `k` vertices isomorphic to `pattern`
/// (equivalently `k! / |Aut|` when `k` matches the pattern's vertex count,
/// and 0 otherwise).
///
/// # Errors
/// Resource error for `k > 8`.
pub fn count_labeled_copies(pattern: &PatternGraph, k: usize) -> Result<u64> {
    pattern.validate()?;
    check_cap(k, MAX_ENUMERATION_N)?;
    if k != pattern.vertex_count() {
        return Ok(0);
    }
    let target = pattern.realize();
    let pairs = pair_table(k);
    let total: u64 = 1u64 << pairs.len();
    let count = (0..total)
        .into_par_iter()
        .fold(
            || (0u64, Graph::new(k)),
            |(acc, mut g), mask| {
                rebuild_from_mask(&mut g, &pairs, mask);
                (acc + u64::from(graphs_isomorphic(&g, &target)), g)
            },
        )
        .map(|(acc, _)| acc)
        .sum();
    Ok(count)
}

/// Isomorphism test by backtracking over degree-compatible vertex maps.
/// Exponential; intended for the small graphs handled in this module.
pub fn graphs_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    if n != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut deg_a: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut deg_b: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    let (da, db) = (deg_a.clone(), deg_b.clone());
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return false;
    }
    let mut map: Vec<usize> = vec![usize::MAX; n];
    let mut used: Vec<bool> = vec![false; n];
    extend_isomorphism(a, b, &da, &db, 0, &mut map, &mut used)
}

fn extend_isomorphism(
    a: &Graph,
    b: &Graph,
    deg_a: &[usize],
    deg_b: &[usize],
    v: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let n = a.n();
    if v == n {
        return true;
    }
    for w in 0..n {
        if used[w] || deg_a[v] != deg_b[w] {
            continue;
        }
        let consistent = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend_isomorphism(a, b, deg_a, deg_b, v + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn coeffs_u64(p: &ProbPolynomial) -> Vec<u64> {
        p.coeffs().iter().map(|c| c.to_u64().unwrap()).collect()
    }

    // ---------- enumeration counts ----------

    #[test]
    fn cycle_event_on_three_vertices() {
        // only the full triangle has a cycle
        let p = enumerate_event(3, &EventSpec::HasCycle, 7).unwrap();
        assert_eq!(coeffs_u64(&p), vec![0, 0, 0, 1]);
        assert_eq!(p.evaluate_f64(0.5).unwrap(), 0.125);
        assert_eq!(p.evaluate_rational(&rat(1, 2)), rat(1, 8));
    }

    #[test]
    fn dimension_event_on_three_vertices() {
        // dim >= 2 fails only for the triangle
        let p = enumerate_event(3, &EventSpec::DimGe(2), 7).unwrap();
        assert_eq!(coeffs_u64(&p), vec![1, 3, 3, 0]);
    }

    #[test]
    fn bipartite_counts_on_four_vertices() {
        // hand count: all graphs up to 2 edges; 16 of 20 with 3 edges (the 4
        // triangles fail); 3 of 15 with 4 edges (the three 4-cycles); none
        // beyond
        let p = enumerate_event(4, &EventSpec::Bipartite, 7).unwrap();
        assert_eq!(coeffs_u64(&p), vec![1, 6, 15, 16, 3, 0, 0]);
    }

    #[test]
    fn always_true_normalizes() {
        let p = enumerate_event_fn(4, 7, |_| true).unwrap();
        let total: Vec<u64> = coeffs_u64(&p);
        assert_eq!(total, vec![1, 6, 15, 20, 15, 6, 1]);
        for k in 0..=10 {
            let x = rat(k, 10);
            assert_eq!(p.evaluate_rational(&x), BigRational::one());
        }
        assert!((p.evaluate_f64(0.37).unwrap() - 1.0).abs() < 1e-12);
        // the named event takes the same path
        let named = enumerate_event(4, &EventSpec::AlwaysTrue, 7).unwrap();
        assert_eq!(named.coeffs(), p.coeffs());
    }

    #[test]
    fn complement_event_mirrors_coefficients() {
        // c_m(not A) = C(M,m) - c_m(A)
        let a = enumerate_event(5, &EventSpec::HasCycle, 7).unwrap();
        let not_a = enumerate_event_fn(5, 7, |g| !g.has_cycle()).unwrap();
        let all = enumerate_event_fn(5, 7, |_| true).unwrap();
        for m in 0..=a.pair_count() {
            assert_eq!(
                a.coeffs()[m].clone() + not_a.coeffs()[m].clone(),
                all.coeffs()[m]
            );
        }
    }

    #[test]
    fn independence_and_clique_are_complement_symmetric() {
        // reversing the coefficient order swaps p and q: stable t-set counts
        // on G match t-clique counts on the complement
        let t = 3;
        let stable = enumerate_event(5, &EventSpec::DimGe(t), 7).unwrap();
        let clique = enumerate_event_fn(5, 7, |g| {
            crate::graph::has_independent_set(&g.complement(), t)
        })
        .unwrap();
        let mut reversed = coeffs_u64(&clique);
        reversed.reverse();
        assert_eq!(coeffs_u64(&stable), reversed);
    }

    // ---------- moments ----------

    #[test]
    fn empty_pattern_expectation_polynomial() {
        // n = t: a single subset, so E[Y] = q^C(t,2): coefficient 1 at m = 0
        let p = enumerate_expectation(4, &PatternGraph::Empty(4), 7).unwrap();
        let mut expected = vec![0u64; 7];
        expected[0] = 1;
        assert_eq!(coeffs_u64(&p), expected);
        // evaluation matches the closed form C(5,3) q^3 at p = 1/2
        let p53 = enumerate_expectation(5, &PatternGraph::Empty(3), 7).unwrap();
        assert_eq!(p53.evaluate_rational(&rat(1, 2)), rat(5, 4));
    }

    #[test]
    fn two_triangles_expectation_polynomial() {
        // at n = 6 the only subset is everything: E[Y] = kappa p^6 q^9 with
        // kappa the labeled-copy count
        let p = enumerate_expectation(6, &PatternGraph::TwoTriangles, 7).unwrap();
        let kappa = count_labeled_copies(&PatternGraph::TwoTriangles, 6).unwrap();
        assert_eq!(kappa, 10);
        let coeffs = coeffs_u64(&p);
        for (m, &c) in coeffs.iter().enumerate() {
            assert_eq!(c, if m == 6 { kappa } else { 0 }, "m={m}");
        }
    }

    #[test]
    fn second_moment_dominates_first() {
        let m1 = enumerate_pattern_moment(5, &PatternGraph::Empty(3), 1, 7).unwrap();
        let m2 = enumerate_pattern_moment(5, &PatternGraph::Empty(3), 2, 7).unwrap();
        for k in 1..10 {
            let x = rat(k, 10);
            let e1 = m1.evaluate_rational(&x);
            let e2 = m2.evaluate_rational(&x);
            // Var = E[Y^2] - E[Y]^2 >= 0
            assert!(e2 >= e1.clone() * e1, "p = {k}/10");
        }
        assert!(enumerate_pattern_moment(5, &PatternGraph::Empty(3), 3, 7).is_err());
    }

    // ---------- labeled copies and isomorphism ----------

    #[test]
    fn labeled_copy_counts() {
        assert_eq!(count_labeled_copies(&PatternGraph::Empty(3), 3).unwrap(), 1);
        assert_eq!(count_labeled_copies(&PatternGraph::Empty(5), 5).unwrap(), 1);
        assert_eq!(
            count_labeled_copies(&PatternGraph::TwoTriangles, 6).unwrap(),
            10
        );
        assert_eq!(count_labeled_copies(&PatternGraph::TwoTriangles, 5).unwrap(), 0);
    }

    #[test]
    fn isomorphism_basics() {
        let c5a = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let c5b = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert!(graphs_isomorphic(&c5a, &c5b));
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!graphs_isomorphic(&c5a, &p5));
        assert!(graphs_isomorphic(&Graph::new(0), &Graph::new(0)));
    }

    // ---------- guards and serialization ----------

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(
            enumerate_event(8, &EventSpec::HasCycle, 7),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            enumerate_event(9, &EventSpec::HasCycle, 12),
            Err(Error::Resource(_))
        ));
        // cap raised explicitly: n = 8 admissible (not executed here)
        assert!(check_cap(8, 8).is_ok());
    }

    #[test]
    fn polynomial_json_round_trip() {
        let p = enumerate_event(3, &EventSpec::HasCycle, 7).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"n":3,"M":3,"coeffs":["0","0","0","1"]}"#);
        let back: ProbPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<ProbPolynomial>(
            r#"{"n":3,"M":2,"coeffs":["0","0","1"]}"#
        )
        .is_err());
        assert_eq!(p.csv_rows(), "0,0\n1,0\n2,0\n3,1\n");
    }
}
