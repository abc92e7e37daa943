//! Seeded Monte Carlo estimation of event probabilities, with Wilson score
//! intervals and schedule sweeps across graph sizes.
//!
//! Trials are independent ChaCha streams indexed by trial number, and the
//! only cross-trial reduction is an integer hit count, so estimates are
//! bit-identical for any worker count or chunking. Sweep records carry a
//! wall-clock column, which is the one field that legitimately varies
//! between runs.

use crate::error::{Error, Result};
use crate::event::EventSpec;
use crate::graph::{sample_er, SampleSpec};
use crate::moments::Schedule;
use rayon::prelude::*;
use serde::Serialize;
use statrs::distribution::{ContinuousCDF, Normal};
use std::time::Instant;

/// Binomial estimate with a Wilson score interval.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Estimate {
    pub hits: u64,
    pub trials: u64,
    pub p_hat: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
    pub confidence: f64,
}

/// Wilson score interval for `hits` successes in `trials` draws.
///
/// The score interval stays inside `[0, 1]` and behaves sanely at the
/// extremes (zero hits pin the lower bound to exactly 0), which the Wald
/// interval does not.
///
/// # Errors
/// `trials = 0`, `hits > trials`, or confidence outside `(0, 1)`.
pub fn wilson_interval(hits: u64, trials: u64, confidence: f64) -> Result<(f64, f64)> {
    if trials == 0 {
        return Err(Error::parameter("need at least one trial".to_string()));
    }
    if hits > trials {
        return Err(Error::parameter(format!(
            "hits {hits} exceed trials {trials}"
        )));
    }
    if !confidence.is_finite() || !(0.0..1.0).contains(&confidence) || confidence == 0.0 {
        return Err(Error::parameter(format!(
            "confidence must lie strictly inside (0, 1), got {confidence}"
        )));
    }
    let normal = Normal::new(0.0, 1.0).expect("standard normal");
    let z = normal.inverse_cdf(0.5 + confidence / 2.0);
    let n = trials as f64;
    let p = hits as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let radius = (z / denom) * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    Ok(((center - radius).max(0.0), (center + radius).min(1.0)))
}

/// Estimates `P(event)` under G(n, p) from `trials` seeded samples.
///
/// # Errors
/// Parameter errors from the sampler (`p` outside `[0, 1]`), zero trials, or
/// a bad confidence level.
pub fn estimate(
    n: usize,
    p: f64,
    event: &EventSpec,
    trials: u64,
    seed: u64,
    confidence: f64,
) -> Result<Estimate> {
    event.validate()?;
    if trials == 0 {
        return Err(Error::parameter("need at least one trial".to_string()));
    }
    // surface bad parameters before spawning work
    SampleSpec::new(n, p, seed, 0).validate()?;
    wilson_interval(0, trials, confidence)?;
    let hits: u64 = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let g = sample_er(&SampleSpec::new(n, p, seed, trial)).expect("validated p");
            u64::from(event.eval(&g))
        })
        .sum();
    let (ci_lo, ci_hi) = wilson_interval(hits, trials, confidence)?;
    Ok(Estimate {
        hits,
        trials,
        p_hat: hits as f64 / trials as f64,
        ci_lo,
        ci_hi,
        confidence,
    })
}

/// One sweep point: an estimate at the probability a schedule assigns to a
/// graph size.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRecord {
    pub n: usize,
    pub schedule: Schedule,
    pub p: f64,
    pub q: f64,
    pub clamped: bool,
    pub event: EventSpec,
    pub estimate: Estimate,
    pub seconds: f64,
}

impl SweepRecord {
    pub fn csv_header() -> &'static str {
        "n,schedule_kind,c,alpha,p,q,event,trials,hits,p_hat,ci_lo,ci_hi,seconds"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.schedule.kind,
            self.schedule.c,
            self.schedule.alpha,
            self.p,
            self.q,
            self.event,
            self.estimate.trials,
            self.estimate.hits,
            self.estimate.p_hat,
            self.estimate.ci_lo,
            self.estimate.ci_hi,
            self.seconds
        )
    }
}

/// Runs [`estimate`] at every `n`, with `p` set by the schedule (clamped
/// values are flagged on the record). Records keep the order of `ns`.
pub fn sweep(
    event: &EventSpec,
    schedule: &Schedule,
    ns: &[usize],
    trials: u64,
    seed: u64,
    confidence: f64,
) -> Result<Vec<SweepRecord>> {
    let mut out = Vec::with_capacity(ns.len());
    for &n in ns {
        let point = schedule.eval(n)?;
        let start = Instant::now();
        let est = estimate(n, point.p, event, trials, seed, confidence)?;
        out.push(SweepRecord {
            n,
            schedule: *schedule,
            p: point.p,
            q: point.q,
            clamped: point.clamped,
            event: *event,
            estimate: est,
            seconds: start.elapsed().as_secs_f64(),
        });
    }
    Ok(out)
}
