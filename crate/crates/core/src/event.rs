//! Named graph events shared by the exact enumerator, the Monte Carlo
//! estimator, and the command line. Every event is a deterministic predicate
//! on a graph; the text names (`dim_ge:3`, `has_Et_induced:4`, ...) are the
//! stable external interface.

use crate::error::{Error, Result};
use crate::graph::{
    count_induced, has_independent_set, has_two_triangles_induced, Graph, PatternGraph,
};
use crate::normality::{cover_ideal_normality, find_hochster, CoverNormality};
use serde::{Serialize, Serializer};
use std::fmt;

/// Graph events with closed-form or enumerable probabilities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EventSpec {
    /// Some cycle exists.
    HasCycle,
    /// The graph is 2-colorable.
    Bipartite,
    /// Some six vertices induce two untouching triangles.
    HasTInduced,
    /// Some `t` vertices induce no edge at all.
    HasEtInduced(usize),
    /// Two untouching induced odd cycles exist.
    Hochster,
    /// The edge ideal is normal (no untouching odd cycle pair).
    EdgeIdealNormal,
    /// The cover ideal is decidedly normal (bipartite, or independence
    /// number at most 2 with a clean complement). Undecided verdicts count
    /// as false.
    CoverNormal,
    /// Independence number at most 2 and the cover ideal is not normal.
    CoverNotNormalBeta2,
    /// Krull dimension of the quotient by the edge ideal is at least `t`.
    DimGe(usize),
    /// Krull dimension exactly `t`.
    DimEq(usize),
    /// Holds on every graph; smoke-test plumbing for estimators and the
    /// oracle's normalization checks.
    AlwaysTrue,
}

impl EventSpec {
    /// Evaluates the event on a concrete graph.
    pub fn eval(&self, g: &Graph) -> bool {
        match self {
            EventSpec::HasCycle => g.has_cycle(),
            EventSpec::Bipartite => g.is_bipartite(),
            EventSpec::HasTInduced => has_two_triangles_induced(g),
            EventSpec::HasEtInduced(t) => {
                count_induced(g, &PatternGraph::Empty(*t)).map_or(false, |c| c > 0)
            }
            EventSpec::Hochster => find_hochster(g).is_some(),
            EventSpec::EdgeIdealNormal => find_hochster(g).is_none(),
            EventSpec::CoverNormal => cover_ideal_normality(g) == CoverNormality::Normal,
            EventSpec::CoverNotNormalBeta2 => {
                cover_ideal_normality(g) == CoverNormality::NotNormal
            }
            EventSpec::DimGe(t) => has_independent_set(g, *t),
            EventSpec::DimEq(t) => {
                has_independent_set(g, *t) && !has_independent_set(g, *t + 1)
            }
            EventSpec::AlwaysTrue => true,
        }
    }

    /// Every registered event family, with `t` filling the parameterized
    /// ones. `always_true` is addressable by name but kept out of the
    /// registry; it carries no information about the model.
    pub fn registry(t: usize) -> Vec<EventSpec> {
        vec![
            EventSpec::HasCycle,
            EventSpec::Bipartite,
            EventSpec::HasTInduced,
            EventSpec::HasEtInduced(t),
            EventSpec::Hochster,
            EventSpec::EdgeIdealNormal,
            EventSpec::CoverNormal,
            EventSpec::CoverNotNormalBeta2,
            EventSpec::DimGe(t),
            EventSpec::DimEq(t),
        ]
    }

    /// Help text listing the accepted names.
    pub const NAME_SUMMARY: &'static str = "has_cycle, bipartite, has_T_induced, \
        has_Et_induced:<t>, hochster, edge_ideal_normal, cover_normal, \
        cover_not_normal_and_beta_le_2, dim_ge:<t>, dim_eq:<t>, always_true";

    /// Validates parameters that the type system cannot (for events built
    /// directly rather than parsed).
    pub fn validate(&self) -> Result<()> {
        match self {
            EventSpec::HasEtInduced(t) if *t < 2 => Err(Error::parameter(format!(
                "has_Et_induced needs t >= 2, got {t}"
            ))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for EventSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EventSpec::HasCycle => write!(f, "has_cycle"),
            EventSpec::Bipartite => write!(f, "bipartite"),
            EventSpec::HasTInduced => write!(f, "has_T_induced"),
            EventSpec::HasEtInduced(t) => write!(f, "has_Et_induced:{t}"),
            EventSpec::Hochster => write!(f, "hochster"),
            EventSpec::EdgeIdealNormal => write!(f, "edge_ideal_normal"),
            EventSpec::CoverNormal => write!(f, "cover_normal"),
            EventSpec::CoverNotNormalBeta2 => write!(f, "cover_not_normal_and_beta_le_2"),
            EventSpec::DimGe(t) => write!(f, "dim_ge:{t}"),
            EventSpec::DimEq(t) => write!(f, "dim_eq:{t}"),
            EventSpec::AlwaysTrue => write!(f, "always_true"),
        }
    }
}

impl Serialize for EventSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl std::str::FromStr for EventSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let parse_t = |what: &str| -> Result<usize> {
            let raw = arg.ok_or_else(|| {
                Error::parse(format!("event {what} needs a parameter, e.g. {what}:3"))
            })?;
            let t: usize = raw
                .parse()
                .map_err(|_| Error::parse(format!("bad parameter {raw:?} for event {what}")))?;
            Ok(t)
        };
        let no_arg = |ev: EventSpec| -> Result<EventSpec> {
            if arg.is_some() {
                return Err(Error::parse(format!("event {name} takes no parameter")));
            }
            Ok(ev)
        };
        match name {
            "has_cycle" => no_arg(EventSpec::HasCycle),
            "bipartite" => no_arg(EventSpec::Bipartite),
            "has_T_induced" => no_arg(EventSpec::HasTInduced),
            "hochster" => no_arg(EventSpec::Hochster),
            "edge_ideal_normal" => no_arg(EventSpec::EdgeIdealNormal),
            "cover_normal" => no_arg(EventSpec::CoverNormal),
            "cover_not_normal_and_beta_le_2" => no_arg(EventSpec::CoverNotNormalBeta2),
            "always_true" => no_arg(EventSpec::AlwaysTrue),
            "has_Et_induced" => {
                let t = parse_t("has_Et_induced")?;
                if t < 2 {
                    return Err(Error::parse(format!(
                        "has_Et_induced needs t >= 2, got {t}"
                    )));
                }
                Ok(EventSpec::HasEtInduced(t))
            }
            "dim_ge" => Ok(EventSpec::DimGe(parse_t("dim_ge")?)),
            "dim_eq" => Ok(EventSpec::DimEq(parse_t("dim_eq")?)),
            _ => Err(Error::parse(format!(
                "unknown event {name:?}; expected one of: {}",
                EventSpec::NAME_SUMMARY
            ))),
        }
    }
}
