//! Closed-form moment formulas and probability bounds for induced pattern
//! counts in G(n, p), in both fast `f64` and exact rational arithmetic.
//!
//! Throughout, `q = 1 - p` and `Y` counts induced copies of a pattern. For
//! the two-triangles pattern on six vertices the expectation is evaluated
//! with the constant `C(6,3) = 20` in front of `C(n,6) p^6 q^9`; exhaustive
//! enumeration gives 10 = 6!/72 for the labeled-copy count (72 being the
//! automorphism count of the pattern), and the verification suite reports
//! both values side by side instead of silently replacing the constant. The
//! Chebyshev lower bound for the same pattern keeps the matching `400` in
//! its denominator.
//!
//! The empty-pattern variance bound sums `j` from 2 to `t`, which makes the
//! bound usable directly in the Chebyshev lower bound on `P(Y > 0)`.

use crate::error::{Error, Result};
use crate::graph::PatternGraph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::fmt;

fn check_probability(p: f64) -> Result<()> {
    if !p.is_finite() || !(0.0..=1.0).contains(&p) {
        return Err(Error::parameter(format!(
            "probability must lie in [0, 1], got {p}"
        )));
    }
    Ok(())
}

fn check_open_interval(p: f64) -> Result<()> {
    check_probability(p)?;
    if p == 0.0 || p == 1.0 {
        return Err(Error::parameter(format!(
            "probability must lie strictly inside (0, 1), got {p}"
        )));
    }
    Ok(())
}

fn check_two_triangles_n(n: usize) -> Result<()> {
    if n < 6 {
        return Err(Error::parameter(format!(
            "two-triangles formulas need n >= 6, got {n}"
        )));
    }
    Ok(())
}

fn check_empty_pattern(n: usize, t: usize) -> Result<()> {
    if t < 2 {
        return Err(Error::parameter(format!(
            "empty pattern needs t >= 2, got {t}"
        )));
    }
    if n < t {
        return Err(Error::parameter(format!(
            "empty-pattern formulas need n >= t, got n={n}, t={t}"
        )));
    }
    Ok(())
}

fn choose2(k: usize) -> i64 {
    (k * k.saturating_sub(1) / 2) as i64
}

/// Exact binomial coefficient as a float (computed in big integers first).
fn binomial_f64(n: usize, k: usize) -> f64 {
    exact::big_binomial(n, k).to_f64().expect("binomial fits f64 range")
}

/// `E[Y] = C(n,6) * 20 * p^6 q^9` for the two-triangles pattern.
pub fn expectation_two_triangles(n: usize, p: f64) -> Result<f64> {
    check_two_triangles_n(n)?;
    check_probability(p)?;
    let q = 1.0 - p;
    Ok(binomial_f64(n, 6) * 20.0 * p.powi(6) * q.powi(9))
}

/// Eight-term upper bound on `Var[Y]` for the two-triangles pattern.
pub fn variance_bound_two_triangles(n: usize, p: f64) -> Result<f64> {
    check_two_triangles_n(n)?;
    check_probability(p)?;
    let q = 1.0 - p;
    let nf = n as f64;
    let term = |a: i32, b: i32, c: i32| nf.powi(a) * p.powi(b) * q.powi(c);
    Ok(term(10, 11, 18)
        + term(10, 12, 17)
        + term(9, 11, 16)
        + term(9, 9, 18)
        + term(8, 10, 14)
        + term(8, 9, 15)
        + term(7, 8, 12)
        + term(6, 6, 9))
}

/// Chebyshev lower bound on `P(Y > 0)` for the two-triangles pattern,
/// clamped to `[0, 1]`.
///
/// # Errors
/// `p` must lie strictly inside `(0, 1)`.
pub fn chebyshev_lower_bound_two_triangles(n: usize, p: f64) -> Result<f64> {
    check_two_triangles_n(n)?;
    check_open_interval(p)?;
    let q = 1.0 - p;
    let denom = 400.0 * binomial_f64(n, 6).powi(2) * p.powi(12) * q.powi(18);
    let lb = 1.0 - variance_bound_two_triangles(n, p)? / denom;
    Ok(lb.clamp(0.0, 1.0))
}

/// `E[Y] = C(n,t) q^C(t,2)` for the edgeless pattern on `t` vertices.
pub fn expectation_empty_pattern(n: usize, t: usize, p: f64) -> Result<f64> {
    check_empty_pattern(n, t)?;
    check_probability(p)?;
    let q = 1.0 - p;
    Ok(binomial_f64(n, t) * q.powi(choose2(t) as i32))
}

/// Upper bound `n^2t q^2C(t,2) * sum_{j=2}^t n^-j q^-C(j,2)` on `Var[Y]` for
/// the edgeless pattern.
///
/// # Errors
/// `p = 1` makes the negative `q` powers meaningless.
pub fn variance_bound_empty_pattern(n: usize, t: usize, p: f64) -> Result<f64> {
    check_empty_pattern(n, t)?;
    check_probability(p)?;
    if p == 1.0 {
        return Err(Error::parameter(
            "variance bound for the empty pattern needs p < 1".to_string(),
        ));
    }
    let q = 1.0 - p;
    let nf = n as f64;
    let mut total = 0.0;
    for j in 2..=t {
        total += nf.powi((2 * t - j) as i32) * q.powi((2 * choose2(t) - choose2(j)) as i32);
    }
    Ok(total)
}

/// Chebyshev lower bound on `P(Y > 0)` for the edgeless pattern, clamped to
/// `[0, 1]`.
///
/// # Errors
/// `p = 1` is a parameter error.
pub fn chebyshev_lower_bound_empty_pattern(n: usize, t: usize, p: f64) -> Result<f64> {
    check_empty_pattern(n, t)?;
    check_probability(p)?;
    if p == 1.0 {
        return Err(Error::parameter(
            "Chebyshev bound for the empty pattern needs p < 1".to_string(),
        ));
    }
    let q = 1.0 - p;
    let nf = n as f64;
    let binom = binomial_f64(n, t);
    let mut sum = 0.0;
    for j in 2..=t {
        sum += nf.powi((2 * t - j) as i32) * q.powi(-(choose2(j) as i32));
    }
    Ok((1.0 - sum / binom.powi(2)).clamp(0.0, 1.0))
}

/// Markov upper bound `(np)^3 / (1 - np)` on the probability that G(n, p)
/// contains any cycle; valid only for `np < 1`.
///
/// # Errors
/// `np >= 1` is outside the domain of the geometric-series bound.
pub fn markov_upper_bound_cycles(n: usize, p: f64) -> Result<f64> {
    check_probability(p)?;
    let np = n as f64 * p;
    if np >= 1.0 {
        return Err(Error::parameter(format!(
            "cycle bound needs n*p < 1, got {np}"
        )));
    }
    Ok(np.powi(3) / (1.0 - np))
}

/// Markov upper bound on `P(Y > 0)` for the edgeless pattern: the
/// expectation itself.
pub fn markov_upper_bound_empty_pattern(n: usize, t: usize, p: f64) -> Result<f64> {
    expectation_empty_pattern(n, t, p)
}

/// Exact-rational counterparts of the module's formulas, for oracle
/// comparisons that must be free of rounding.
pub mod exact {
    use super::*;

    /// Binomial coefficient in arbitrary precision.
    pub fn big_binomial(n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        num_integer::binomial(BigInt::from(n), BigInt::from(k))
    }

    /// `x^e` for rational `x`, with negative exponents by inversion.
    pub(crate) fn rpow(x: &BigRational, e: i64) -> BigRational {
        if e == 0 {
            return BigRational::one();
        }
        let mag = x.pow(e.unsigned_abs() as u32 as i32);
        if e < 0 {
            mag.recip()
        } else {
            mag
        }
    }

    fn check_unit(p: &BigRational) -> Result<()> {
        if p.is_negative() || *p > BigRational::one() {
            return Err(Error::parameter(format!(
                "probability must lie in [0, 1], got {p}"
            )));
        }
        Ok(())
    }

    pub fn expectation_two_triangles(n: usize, p: &BigRational) -> Result<BigRational> {
        check_two_triangles_n(n)?;
        check_unit(p)?;
        let q = BigRational::one() - p;
        Ok(BigRational::from(big_binomial(n, 6))
            * BigRational::from(BigInt::from(20))
            * rpow(p, 6)
            * rpow(&q, 9))
    }

    pub fn variance_bound_two_triangles(n: usize, p: &BigRational) -> Result<BigRational> {
        check_two_triangles_n(n)?;
        check_unit(p)?;
        let q = BigRational::one() - p;
        let nb = BigRational::from(BigInt::from(n));
        let term = |a: i64, b: i64, c: i64| rpow(&nb, a) * rpow(p, b) * rpow(&q, c);
        Ok(term(10, 11, 18)
            + term(10, 12, 17)
            + term(9, 11, 16)
            + term(9, 9, 18)
            + term(8, 10, 14)
            + term(8, 9, 15)
            + term(7, 8, 12)
            + term(6, 6, 9))
    }

    pub fn chebyshev_lower_bound_two_triangles(
        n: usize,
        p: &BigRational,
    ) -> Result<BigRational> {
        check_two_triangles_n(n)?;
        check_unit(p)?;
        if p.is_zero() || p.is_one() {
            return Err(Error::parameter(
                "Chebyshev bound needs p strictly inside (0, 1)".to_string(),
            ));
        }
        let q = BigRational::one() - p;
        let binom = BigRational::from(big_binomial(n, 6));
        let denom = BigRational::from(BigInt::from(400))
            * rpow(&binom, 2)
            * rpow(p, 12)
            * rpow(&q, 18);
        let lb = BigRational::one() - variance_bound_two_triangles(n, p)? / denom;
        Ok(clamp_unit(lb))
    }

    pub fn expectation_empty_pattern(n: usize, t: usize, p: &BigRational) -> Result<BigRational> {
        check_empty_pattern(n, t)?;
        check_unit(p)?;
        let q = BigRational::one() - p;
        Ok(BigRational::from(big_binomial(n, t)) * rpow(&q, choose2(t)))
    }

    pub fn variance_bound_empty_pattern(
        n: usize,
        t: usize,
        p: &BigRational,
    ) -> Result<BigRational> {
        check_empty_pattern(n, t)?;
        check_unit(p)?;
        if p.is_one() {
            return Err(Error::parameter(
                "variance bound for the empty pattern needs p < 1".to_string(),
            ));
        }
        let q = BigRational::one() - p;
        let nb = BigRational::from(BigInt::from(n));
        let mut total = BigRational::zero();
        for j in 2..=t {
            total += rpow(&nb, (2 * t - j) as i64) * rpow(&q, 2 * choose2(t) - choose2(j));
        }
        Ok(total)
    }

    pub fn chebyshev_lower_bound_empty_pattern(
        n: usize,
        t: usize,
        p: &BigRational,
    ) -> Result<BigRational> {
        check_empty_pattern(n, t)?;
        check_unit(p)?;
        if p.is_one() {
            return Err(Error::parameter(
                "Chebyshev bound for the empty pattern needs p < 1".to_string(),
            ));
        }
        let q = BigRational::one() - p;
        let nb = BigRational::from(BigInt::from(n));
        let binom = BigRational::from(big_binomial(n, t));
        let mut sum = BigRational::zero();
        for j in 2..=t {
            sum += rpow(&nb, (2 * t - j) as i64) * rpow(&q, -choose2(j));
        }
        Ok(clamp_unit(BigRational::one() - sum / rpow(&binom, 2)))
    }

    pub fn markov_upper_bound_cycles(n: usize, p: &BigRational) -> Result<BigRational> {
        check_unit(p)?;
        let np = BigRational::from(BigInt::from(n)) * p;
        if np >= BigRational::one() {
            return Err(Error::parameter(format!(
                "cycle bound needs n*p < 1, got {np}"
            )));
        }
        Ok(rpow(&np, 3) / (BigRational::one() - np))
    }

    pub fn markov_upper_bound_empty_pattern(
        n: usize,
        t: usize,
        p: &BigRational,
    ) -> Result<BigRational> {
        expectation_empty_pattern(n, t, p)
    }

    fn clamp_unit(x: BigRational) -> BigRational {
        if x.is_negative() {
            BigRational::zero()
        } else if x > BigRational::one() {
            BigRational::one()
        } else {
            x
        }
    }
}

/// Which of `p` or `q = 1 - p` a schedule controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScheduleKind {
    P,
    Q,
}

impl fmt::Display for ScheduleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScheduleKind::P => write!(f, "p"),
            ScheduleKind::Q => write!(f, "q"),
        }
    }
}

/// Power-law probability schedule `c * n^(-alpha)` applied to `p` or to `q`.
/// Text form: `p=0.3`, `q=1*n^-0.5`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Schedule {
    pub kind: ScheduleKind,
    pub c: f64,
    pub alpha: f64,
}

/// Result of evaluating a schedule at one `n`. `clamped` records that the
/// raw power law left `[0, 1]` and was cut back.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SchedulePoint {
    pub p: f64,
    pub q: f64,
    pub clamped: bool,
}

impl Schedule {
    pub fn new(kind: ScheduleKind, c: f64, alpha: f64) -> Result<Self> {
        if !c.is_finite() || c < 0.0 {
            return Err(Error::parameter(format!(
                "schedule coefficient must be a nonnegative number, got {c}"
            )));
        }
        if !alpha.is_finite() {
            return Err(Error::parameter(format!("schedule exponent must be finite, got {alpha}")));
        }
        Ok(Schedule { kind, c, alpha })
    }

    /// Evaluates the schedule at `n >= 1`, clamping out-of-range values.
    pub fn eval(&self, n: usize) -> Result<SchedulePoint> {
        if n == 0 {
            return Err(Error::parameter("schedule needs n >= 1".to_string()));
        }
        let raw = self.c * (n as f64).powf(-self.alpha);
        let clamped = !(0.0..=1.0).contains(&raw);
        let value = raw.clamp(0.0, 1.0);
        let (p, q) = match self.kind {
            ScheduleKind::P => (value, 1.0 - value),
            ScheduleKind::Q => (1.0 - value, value),
        };
        Ok(SchedulePoint { p, q, clamped })
    }
}

impl fmt::Display for Schedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alpha == 0.0 {
            write!(f, "{}={}", self.kind, self.c)
        } else {
            write!(f, "{}={}*n^{}", self.kind, self.c, -self.alpha)
        }
    }
}

impl std::str::FromStr for Schedule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(format!("bad schedule {s:?}: expected p=<c> or q=<c>*n^<e>"));
        let (kind_str, rhs) = s.split_once('=').ok_or_else(bad)?;
        let kind = match kind_str.trim() {
            "p" => ScheduleKind::P,
            "q" => ScheduleKind::Q,
            _ => return Err(bad()),
        };
        let rhs = rhs.trim();
        let (c_str, alpha) = match rhs.split_once("*n^") {
            Some((c_str, e_str)) => {
                let e: f64 = e_str.trim().parse().map_err(|_| bad())?;
                (c_str, -e)
            }
            None => (rhs, 0.0),
        };
        let c: f64 = c_str.trim().parse().map_err(|_| bad())?;
        Schedule::new(kind, c, alpha).map_err(|e| Error::parse(format!("bad schedule {s:?}: {e}")))
    }
}

/// One row of closed-form values for a pattern at `(n, p)`.
#[derive(Clone, Debug, Serialize)]
pub struct MomentReport {
    pub n: usize,
    pub p: f64,
    pub q: f64,
    pub pattern: PatternGraph,
    pub expectation: f64,
    pub variance_bound: f64,
    pub chebyshev_lb: f64,
    pub markov_ub: f64,
}

impl MomentReport {
    /// Evaluates every formula applicable to `pattern` at `(n, p)`. The
    /// Markov column for the two-triangles pattern is the plain first-moment
    /// bound (its expectation).
    pub fn compute(pattern: &PatternGraph, n: usize, p: f64) -> Result<Self> {
        pattern.validate()?;
        let (expectation, variance_bound, chebyshev_lb, markov_ub) = match pattern {
            PatternGraph::TwoTriangles => {
                let e = expectation_two_triangles(n, p)?;
                (
                    e,
                    variance_bound_two_triangles(n, p)?,
                    chebyshev_lower_bound_two_triangles(n, p)?,
                    e,
                )
            }
            PatternGraph::Empty(t) => (
                expectation_empty_pattern(n, *t, p)?,
                variance_bound_empty_pattern(n, *t, p)?,
                chebyshev_lower_bound_empty_pattern(n, *t, p)?,
                markov_upper_bound_empty_pattern(n, *t, p)?,
            ),
        };
        Ok(MomentReport {
            n,
            p,
            q: 1.0 - p,
            pattern: *pattern,
            expectation,
            variance_bound,
            chebyshev_lb,
            markov_ub,
        })
    }

    pub fn csv_header() -> &'static str {
        "n,p,q,t,expectation,variance_bound,chebyshev_lb,markov_ub"
    }

    pub fn csv_row(&self) -> String {
        let t = match self.pattern {
            PatternGraph::TwoTriangles => String::new(),
            PatternGraph::Empty(t) => t.to_string(),
        };
        format!(
            "{},{},{},{},{},{},{},{}",
            self.n,
            self.p,
            self.q,
            t,
            self.expectation,
            self.variance_bound,
            self.chebyshev_lb,
            self.markov_ub
        )
    }
}
