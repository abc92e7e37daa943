//! Random monomial ideals from Erdős–Rényi random graphs.
//!
//! The crate ties together five layers:
//!
//! * [`graph`]: bitset graphs, seeded G(n, p) sampling, independence-number
//!   machinery, induced pattern counting;
//! * [`ideal`]: edge ideals, cover ideals, and the combinatorial invariants
//!   (Krull dimension, height, degree bounds) they inherit from the graph;
//! * [`normality`]: exact normality decisions through searches for pairs of
//!   untouching induced odd cycles;
//! * [`moments`] and [`oracle`]: closed-form expectation/variance bounds on
//!   induced pattern counts, next to an exhaustive small-n enumerator that
//!   produces exact probability polynomials for cross-checking them;
//! * [`montecarlo`] and [`verify`]: seeded parallel estimation with Wilson
//!   intervals, and the self-contained verification suite that replays the
//!   headline claims at desk scale.
//!
//! Everything that consumes randomness is counter-based: results are
//! bit-identical for a given seed regardless of worker count or platform.

pub(crate) mod bits;
pub mod error;
pub mod event;
pub mod graph;
pub mod ideal;
pub mod moments;
pub mod montecarlo;
pub mod normality;
pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
pub use event::EventSpec;
pub use graph::{
    count_induced, has_independent_set, has_two_triangles_induced, independence_number,
    maximal_independent_sets, sample_er, Graph, PatternGraph, SampleSpec, VertexSet,
};
pub use ideal::{
    cover_ideal, edge_ideal, ideal_height, ideal_probability, krull_dimension, reg_upper_bound,
    v_upper_bound, Monomial, MonomialIdeal,
};
pub use moments::{MomentReport, Schedule, ScheduleKind};
pub use montecarlo::{estimate, sweep, wilson_interval, Estimate, SweepRecord};
pub use normality::{
    cover_ideal_normality, edge_ideal_normal, find_hochster, find_hochster_naive,
    induced_odd_cycles, CoverNormality, HochsterWitness,
};
pub use oracle::{
    count_labeled_copies, enumerate_event, enumerate_expectation, enumerate_pattern_moment,
    graphs_isomorphic, ProbPolynomial,
};
pub use verify::{CheckOutcome, CheckStatus, VerifyConfig};

/// Runs `f` inside a dedicated rayon pool of `jobs` threads; `jobs = 0` keeps
/// the ambient pool. Every parallel routine in the crate reduces with
/// order-independent sums, so the choice only affects speed.
pub fn with_worker_count<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs == 0 {
        f()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("failed to build thread pool")
            .install(f)
    }
}
