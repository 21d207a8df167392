//! Sums over primes: density of `f(p)`, the mimicry distance, the mean-value
//! criterion, and the partial-summation identity for `sum f(n)/n`.
//!
//! Every verdict produced here is a finite-range heuristic. None of them
//! decides boundedness or the existence of a mean value.

use crate::accum::NeumaierSum;
use crate::error::{Error, Result};
use crate::function::FunctionSpec;
use crate::sieve::{SieveTable, ValueTable};
use crate::sums::{check_checkpoints, geometric_checkpoints};

#[derive(Clone, Debug, PartialEq)]
pub struct PrimeSumSeries {
    pub checkpoints: Vec<usize>,
    /// `pi(x)`.
    pub prime_counts: Vec<usize>,
    /// `sum_{p <= x} f(p)`, exact.
    pub sum_fp: Vec<i64>,
    /// `sum_{p <= x} f(p)/p`.
    pub sum_fp_over_p: Vec<f64>,
    /// `sum_{p <= x} (1 - f(p))/p`.
    pub sum_one_minus_fp_over_p: Vec<f64>,
    /// `sum_{p <= x} 1/p`.
    pub sum_reciprocal: Vec<f64>,
    /// `log log x`, NaN for `x < 3`.
    pub loglog_x: Vec<f64>,
}

pub fn prime_sum_series(
    spec: &FunctionSpec,
    table: &SieveTable,
    checkpoints: &[usize],
) -> Result<PrimeSumSeries> {
    check_checkpoints(checkpoints, table.limit())?;
    let k = checkpoints.len();
    let mut out = PrimeSumSeries {
        checkpoints: checkpoints.to_vec(),
        prime_counts: Vec::with_capacity(k),
        sum_fp: Vec::with_capacity(k),
        sum_fp_over_p: Vec::with_capacity(k),
        sum_one_minus_fp_over_p: Vec::with_capacity(k),
        sum_reciprocal: Vec::with_capacity(k),
        loglog_x: Vec::with_capacity(k),
    };
    let primes = table.primes();
    let mut idx = 0;
    let mut sum_fp = 0i64;
    let mut fp_over_p = NeumaierSum::new();
    let mut one_minus = NeumaierSum::new();
    let mut recip = NeumaierSum::new();
    for &x in checkpoints {
        while idx < primes.len() && primes[idx] as usize <= x {
            let p = primes[idx] as u64;
            let fp = spec.prime_value(p).value();
            let inv = 1.0 / p as f64;
            sum_fp += fp as i64;
            fp_over_p.add(fp as f64 * inv);
            if fp < 0 {
                one_minus.add(2.0 * inv);
            }
            recip.add(inv);
            idx += 1;
        }
        out.prime_counts.push(idx);
        out.sum_fp.push(sum_fp);
        out.sum_fp_over_p.push(fp_over_p.value());
        out.sum_one_minus_fp_over_p.push(one_minus.value());
        out.sum_reciprocal.push(recip.value());
        out.loglog_x.push(if x >= 3 { (x as f64).ln().ln() } else { f64::NAN });
    }
    Ok(out)
}

/// `log_j x`: the logarithm iterated `j` times.
pub fn iterated_log(x: f64, j: u32) -> f64 {
    (0..j).fold(x, |acc, _| acc.ln())
}

/// Model `x / (log x * log_2 x * ... * log_k x)`; `k = 0` gives `x`.
pub fn density_model(x: f64, k: u32) -> f64 {
    (1..=k).fold(x, |acc, j| acc / iterated_log(x, j))
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensityFit {
    /// `sum_{p <= x} f(p) / pi(x)` at the last checkpoint.
    pub c_hat: f64,
    pub depth: u32,
    /// `(x, sum_{p <= x} f(p) / model_k(x))` at every checkpoint where all
    /// iterated logs up to depth `k` exceed 1.
    pub residual_curve: Vec<(usize, f64)>,
}

pub fn density_fit(series: &PrimeSumSeries, depth: u32) -> Result<DensityFit> {
    let last = *series
        .checkpoints
        .last()
        .ok_or_else(|| Error::Checkpoints("empty checkpoint list".into()))?;
    if last < 100 {
        return Err(Error::Parameter(format!("largest checkpoint {last} is below 100")));
    }
    let defined = |x: usize| depth == 0 || iterated_log(x as f64, depth) > 1.0;
    if !defined(last) {
        return Err(Error::Parameter(format!(
            "log_{depth} x does not exceed 1 at x = {last}"
        )));
    }
    let pi = *series.prime_counts.last().unwrap();
    let c_hat = *series.sum_fp.last().unwrap() as f64 / pi as f64;
    let residual_curve = series
        .checkpoints
        .iter()
        .zip(&series.sum_fp)
        .filter(|(&x, _)| x >= 2 && defined(x))
        .map(|(&x, &s)| (x, s as f64 / density_model(x as f64, depth)))
        .collect();
    Ok(DensityFit {
        c_hat,
        depth,
        residual_curve,
    })
}

/// `sum_{p <= x} (1 - f(p) g(p)) / p`.
pub fn mimicry_distance(a: &FunctionSpec, b: &FunctionSpec, table: &SieveTable, x: usize) -> Result<f64> {
    table.check_range("x", x)?;
    let mut acc = NeumaierSum::new();
    for &p in table.primes_up_to(x) {
        let p = p as u64;
        if a.prime_value(p) != b.prime_value(p) {
            acc.add(2.0 / p as f64);
        }
    }
    Ok(acc.value())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeanVerdict {
    /// The criterion sum tracks the divergent `2 sum 1/p` growth.
    ZeroMeanByCriterion,
    /// Criterion sum stays small; the Wirsing product is the estimate.
    PositiveMeanCandidate,
    /// Some local Euler factor vanishes, forcing a zero mean value.
    VanishingEulerFactor,
}

impl MeanVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            MeanVerdict::ZeroMeanByCriterion => "zero-mean-by-criterion",
            MeanVerdict::PositiveMeanCandidate => "positive-mean-candidate",
            MeanVerdict::VanishingEulerFactor => "vanishing-euler-factor",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MeanValueReport {
    /// `prod_{p <= P} (1 - 1/p)(1 + sum_{k <= K} f(p^k)/p^k)`.
    pub wirsing_product: f64,
    /// `sum_{p <= P} (1 - f(p))/p`.
    pub criterion_sum: f64,
    /// Smallest `|local factor|` and the prime attaining it.
    pub min_local_factor: (u64, f64),
    pub verdict: MeanVerdict,
}

pub const VANISHING_FACTOR_TOLERANCE: f64 = 1e-12;

/// Divergence threshold for the criterion sum at `x`: 90% of the growth
/// `2 (log log x - log log 100)` that `2 sum 1/p` shows past 100.
pub fn criterion_threshold(x: usize) -> f64 {
    0.9 * 2.0 * ((x as f64).ln().ln() - 100f64.ln().ln())
}

pub fn mean_value_report(
    spec: &FunctionSpec,
    table: &SieveTable,
    prime_cutoff: usize,
    power_cutoff: u32,
) -> Result<MeanValueReport> {
    table.check_range("P", prime_cutoff)?;
    if power_cutoff < 2 {
        return Err(Error::Parameter("power cutoff K must be at least 2".into()));
    }
    let mut log_product = NeumaierSum::new();
    let mut min_local = (0u64, f64::INFINITY);
    let mut sign_negative = false;
    let mut zero_factor = false;
    for &p in table.primes_up_to(prime_cutoff) {
        let p = p as u64;
        let fp = spec.prime_value(p);
        let inv = 1.0 / p as f64;
        // Inner sum in increasing k; terms shrink geometrically.
        let mut inner = NeumaierSum::new();
        inner.add(1.0);
        let mut pk = 1.0;
        for k in 1..=power_cutoff {
            pk *= inv;
            if pk == 0.0 {
                break;
            }
            inner.add(spec.power_value_with(p, k, fp).value() as f64 * pk);
        }
        let local = (1.0 - inv) * inner.value();
        if local.abs() < min_local.1.abs() {
            min_local = (p, local);
        }
        if local == 0.0 {
            zero_factor = true;
        } else {
            sign_negative ^= local < 0.0;
            log_product.add(local.abs().ln());
        }
    }
    let wirsing_product = if zero_factor {
        0.0
    } else {
        let mag = log_product.value().exp();
        if sign_negative {
            -mag
        } else {
            mag
        }
    };

    // Criterion along a geometric grid from 1000 to P.
    let mut verdict = MeanVerdict::PositiveMeanCandidate;
    let mut criterion_sum = 0.0;
    if prime_cutoff >= 2 {
        let grid = if prime_cutoff >= 1000 {
            geometric_checkpoints(1000, prime_cutoff, 1.25)?
        } else {
            vec![prime_cutoff]
        };
        let series = prime_sum_series(spec, table, &grid)?;
        criterion_sum = *series.sum_one_minus_fp_over_p.last().unwrap();
        let tracks_divergence = prime_cutoff >= 1000
            && grid
                .iter()
                .zip(&series.sum_one_minus_fp_over_p)
                .all(|(&x, &c)| c > criterion_threshold(x));
        if tracks_divergence {
            verdict = MeanVerdict::ZeroMeanByCriterion;
        }
    }
    if min_local.1.abs() < VANISHING_FACTOR_TOLERANCE {
        verdict = MeanVerdict::VanishingEulerFactor;
    }
    Ok(MeanValueReport {
        wirsing_product,
        criterion_sum,
        min_local_factor: min_local,
        verdict,
    })
}

/// `|sum_{n <= x} f(n)/n - (S(x)/x + int_1^x S(t) t^-2 dt)|`, the integral
/// evaluated exactly on the step function `S`.
pub fn abel_identity_check(values: &ValueTable, x: f64) -> Result<f64> {
    if !(x >= 1.0) {
        return Err(Error::Parameter(format!("x must be at least 1, got {x}")));
    }
    let m = x.floor() as usize;
    values.check_range("x", m)?;

    let mut direct = NeumaierSum::new();
    for n in 1..=m {
        direct.add(values.f(n) as f64 / n as f64);
    }

    let mut s = 0i64;
    let mut integral = NeumaierSum::new();
    for n in 1..m {
        s += values.f(n) as i64;
        // int_n^{n+1} S(n) t^-2 dt
        integral.add(s as f64 / (n as f64 * (n + 1) as f64));
    }
    s += values.f(m) as i64;
    integral.add(s as f64 * (1.0 / m as f64 - 1.0 / x));
    integral.add(s as f64 / x);

    Ok((direct.value() - integral.value()).abs())
}
