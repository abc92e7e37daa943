//! Squarefree monomial ideals attached to a graph: the edge ideal (one
//! degree-2 generator per edge) and the cover ideal (one generator per
//! minimal vertex cover, obtained as complements of maximal independent
//! sets), together with the ring invariants these ideals read off the graph.
//!
//! Monomials live in a polynomial ring with one variable per vertex; only
//! the squarefree support matters here, so a monomial is stored as a vertex
//! set. JSON form of an ideal: `{"ambient_n": 5, "generators": [[0,1],[1,2]]}`
//! with each generator's support ascending and generators sorted
//! lexicographically. The cover ideal of an edgeless graph is the whole ring;
//! that case is carried as a distinguished unit marker
//! (`"unit": true`, no generators) rather than a degree-0 generator.

use crate::error::{Error, Result};
use crate::graph::{
    independence_number, maximal_independent_sets, Graph, VertexSet, DEFAULT_SET_LIMIT,
};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeSet;
use std::fmt;

/// Squarefree monomial, stored as its support.
#[derive(Clone, PartialEq, Eq)]
pub struct Monomial {
    support: VertexSet,
}

impl Monomial {
    /// Monomial `prod x_v` over distinct vertices.
    ///
    /// # Errors
    /// Empty support, repeated vertices, or labels outside `0..ambient_n`.
    pub fn new(ambient_n: usize, vertices: &[usize]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::parameter(
                "monomial must have nonempty support".to_string(),
            ));
        }
        Ok(Monomial {
            support: VertexSet::from_vertices(ambient_n, vertices)?,
        })
    }

    pub(crate) fn from_support(support: VertexSet) -> Self {
        debug_assert!(!support.is_empty());
        Monomial { support }
    }

    pub fn degree(&self) -> usize {
        self.support.len()
    }

    pub fn support(&self) -> &VertexSet {
        &self.support
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.support.to_vec()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices().iter().map(|v| format!("x{v}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.support.serialize(serializer)
    }
}

/// Finitely generated squarefree monomial ideal with a fixed ambient
/// variable count. Generators are kept sorted and form a minimal generating
/// set (pairwise incomparable under divisibility).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    ambient_n: usize,
    generators: Vec<Monomial>,
    unit: bool,
}

impl MonomialIdeal {
    /// Ideal generated by the given monomials.
    ///
    /// # Errors
    /// Labels outside the ambient range, duplicate generators, or a generator
    /// dividing another (the set must be minimal).
    pub fn new(ambient_n: usize, generators: Vec<Monomial>) -> Result<Self> {
        let mut gens = generators;
        for g in &gens {
            if g.support().n() != ambient_n {
                return Err(Error::parameter(format!(
                    "generator over {} variables in ring with {ambient_n}",
                    g.support().n()
                )));
            }
        }
        gens.sort_by(|a, b| a.vertices().cmp(&b.vertices()));
        for i in 0..gens.len() {
            for j in 0..gens.len() {
                if i != j && gens[j].support().intersection(gens[i].support()) == *gens[i].support()
                {
                    return Err(Error::parameter(format!(
                        "generating set not minimal: {:?} divides {:?}",
                        gens[i], gens[j]
                    )));
                }
            }
        }
        Ok(MonomialIdeal {
            ambient_n,
            generators: gens,
            unit: false,
        })
    }

    /// The whole ring, used as the cover ideal of an edgeless graph.
    pub fn unit(ambient_n: usize) -> Self {
        MonomialIdeal {
            ambient_n,
            generators: Vec::new(),
            unit: true,
        }
    }

    /// The zero ideal.
    pub fn zero(ambient_n: usize) -> Self {
        MonomialIdeal {
            ambient_n,
            generators: Vec::new(),
            unit: false,
        }
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    pub fn is_zero(&self) -> bool {
        !self.unit && self.generators.is_empty()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.generators.iter().map(Monomial::degree).min()
    }
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    ambient_n: usize,
    generators: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    unit: bool,
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        IdealJson {
            ambient_n: self.ambient_n,
            generators: self.generators.iter().map(Monomial::vertices).collect(),
            unit: self.unit,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = IdealJson::deserialize(deserializer)?;
        if raw.unit {
            if !raw.generators.is_empty() {
                return Err(D::Error::custom("unit ideal cannot list generators"));
            }
            return Ok(MonomialIdeal::unit(raw.ambient_n));
        }
        let gens = raw
            .generators
            .iter()
            .map(|vs| Monomial::new(raw.ambient_n, vs))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        MonomialIdeal::new(raw.ambient_n, gens).map_err(D::Error::custom)
    }
}

/// Edge ideal: `(x_u x_v : uv an edge)`. The zero ideal for an edgeless
/// graph.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let gens = g
        .edges()
        .into_iter()
        .map(|(u, v)| Monomial::new(g.n(), &[u, v]).expect("edge endpoints are valid"))
        .collect();
    MonomialIdeal::new(g.n(), gens).expect("edge generators are distinct quadratics")
}

/// Cover ideal: one generator per minimal vertex cover, computed as the
/// complements of the maximal independent sets. Unit for an edgeless graph.
///
/// # Errors
/// Propagates the enumeration resource limit (more than
/// [`DEFAULT_SET_LIMIT`] maximal independent sets).
pub fn cover_ideal(g: &Graph) -> Result<MonomialIdeal> {
    if g.edge_count() == 0 {
        return Ok(MonomialIdeal::unit(g.n()));
    }
    let gens = maximal_independent_sets(g, DEFAULT_SET_LIMIT)?
        .into_iter()
        .map(|s| Monomial::from_support(s.complement()))
        .collect();
    Ok(MonomialIdeal::new(g.n(), gens).expect("complements of maximal sets are incomparable"))
}

/// Krull dimension of the quotient by the edge ideal; equals the
/// independence number of the graph.
pub fn krull_dimension(g: &Graph) -> usize {
    independence_number(g)
}

/// Height of the edge ideal: `n` minus the independence number.
pub fn ideal_height(g: &Graph) -> usize {
    g.n() - independence_number(g)
}

/// Upper bound on the Castelnuovo–Mumford regularity of the quotient by the
/// edge ideal. Only the bound (the independence number) is computed, not the
/// invariant itself.
pub fn reg_upper_bound(g: &Graph) -> usize {
    independence_number(g)
}

/// Upper bound on the v-number of the edge ideal; same bound as
/// [`reg_upper_bound`], and likewise not the exact invariant.
pub fn v_upper_bound(g: &Graph) -> usize {
    independence_number(g)
}

/// Probability that sampling G(n, p) produces exactly the edge set encoded by
/// the degree-2 monomials `b`: `p^|B| (1-p)^(C(n,2) - |B|)`.
///
/// # Errors
/// Non-quadratic generators, vertices outside `0..n`, or `p` outside `[0, 1]`
/// are parameter errors. Repeated monomials collapse (set semantics).
pub fn ideal_probability(n: usize, p: f64, b: &[Monomial]) -> Result<f64> {
    if !p.is_finite() || !(0.0..=1.0).contains(&p) {
        return Err(Error::parameter(format!(
            "edge probability must lie in [0, 1], got {p}"
        )));
    }
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for m in b {
        if m.degree() != 2 {
            return Err(Error::parameter(format!(
                "expected degree-2 generators, got {:?} of degree {}",
                m,
                m.degree()
            )));
        }
        let vs = m.vertices();
        if vs[1] >= n {
            return Err(Error::parameter(format!(
                "generator {m:?} out of range for n={n}"
            )));
        }
        edges.insert((vs[0], vs[1]));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let k = edges.len();
    Ok(p.powi(k as i32) * (1.0 - p).powi((pairs - k) as i32))
}
