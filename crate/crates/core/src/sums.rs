//! Partial sums, homogeneous-progression discrepancy, and growth fits.

use crate::error::{Error, Result};
use crate::sieve::ValueTable;

/// Geometric checkpoint grid from `start` to `end` inclusive; consecutive
/// points are at least one apart, and `end` is always the last point.
pub fn geometric_checkpoints(start: usize, end: usize, ratio: f64) -> Result<Vec<usize>> {
    if !(ratio > 1.0) || !ratio.is_finite() {
        return Err(Error::Checkpoints(format!("geometric ratio must exceed 1, got {ratio}")));
    }
    if start == 0 || start > end {
        return Err(Error::Checkpoints(format!("bad range {start}..={end}")));
    }
    let mut out = Vec::new();
    let mut x = start as f64;
    while x.round() < end as f64 {
        let xi = x.round() as usize;
        if out.last() != Some(&xi) {
            out.push(xi);
        }
        x *= ratio;
    }
    if out.last() != Some(&end) {
        out.push(end);
    }
    Ok(out)
}

pub(crate) fn check_checkpoints(checkpoints: &[usize], limit: usize) -> Result<()> {
    if checkpoints.is_empty() {
        return Err(Error::Checkpoints("empty checkpoint list".into()));
    }
    if checkpoints[0] == 0 {
        return Err(Error::Checkpoints("checkpoints must be positive".into()));
    }
    if checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Checkpoints("checkpoints must be strictly increasing".into()));
    }
    let last = *checkpoints.last().unwrap();
    if last > limit {
        return Err(Error::OutOfRange {
            what: "checkpoint",
            value: last as u64,
            limit: limit as u64,
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct SumSeries {
    pub checkpoints: Vec<usize>,
    pub sums: Vec<i64>,
    /// `max_{y <= x} |S(y)|` over every integer `y`, not only checkpoints.
    pub running_max_abs: Vec<i64>,
    pub means: Vec<f64>,
}

impl SumSeries {
    fn accumulate(checkpoints: &[usize], term: impl Fn(usize) -> i64) -> SumSeries {
        let mut sums = Vec::with_capacity(checkpoints.len());
        let mut running_max_abs = Vec::with_capacity(checkpoints.len());
        let mut s = 0i64;
        let mut max_abs = 0i64;
        let mut n = 0usize;
        for &x in checkpoints {
            while n < x {
                n += 1;
                s += term(n);
                max_abs = max_abs.max(s.abs());
            }
            sums.push(s);
            running_max_abs.push(max_abs);
        }
        let means = checkpoints
            .iter()
            .zip(&sums)
            .map(|(&x, &s)| s as f64 / x as f64)
            .collect();
        SumSeries {
            checkpoints: checkpoints.to_vec(),
            sums,
            running_max_abs,
            means,
        }
    }
}

/// `S(x) = sum_{n <= x} f(n)` at each checkpoint.
pub fn partial_sum_series(values: &ValueTable, checkpoints: &[usize]) -> Result<SumSeries> {
    check_checkpoints(checkpoints, values.limit())?;
    Ok(SumSeries::accumulate(checkpoints, |n| values.f(n) as i64))
}

/// `sum_{n <= x} mu(n) f(n)` at each checkpoint.
pub fn twisted_series(values: &ValueTable, checkpoints: &[usize]) -> Result<SumSeries> {
    check_checkpoints(checkpoints, values.limit())?;
    Ok(SumSeries::accumulate(checkpoints, |n| {
        (values.mu(n) * values.f(n)) as i64
    }))
}

/// `sum_{n <= x} c^Omega(n)`, with `0^0 = 1`.
pub fn omega_weighted_sum(c: f64, values: &ValueTable, x: usize) -> Result<f64> {
    if !(-1.0..=1.0).contains(&c) {
        return Err(Error::Parameter(format!("|c| must be at most 1, got {c}")));
    }
    values.check_range("x", x)?;
    // Histogram of Omega, then one power per multiplicity.
    let mut counts = [0u64; 64];
    for n in 1..=x {
        counts[values.omega(n) as usize] += 1;
    }
    let mut acc = crate::accum::NeumaierSum::new();
    for (k, &count) in counts.iter().enumerate() {
        if count > 0 {
            acc.add(count as f64 * c.powi(k as i32));
        }
    }
    Ok(acc.value())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HapMax {
    pub d: usize,
    pub n: usize,
    /// `|sum_{k <= n} f(k d)|`.
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HapReport {
    pub limit: usize,
    pub max_difference: usize,
    pub best: HapMax,
    pub per_d_max: Vec<HapMax>,
}

/// Exhaustive `max_{d <= D, n d <= N} |sum_{k <= n} f(k d)|`.
///
/// Ties keep the smallest `d`, then the smallest `n`.
pub fn hap_discrepancy(values: &ValueTable, limit: usize, max_difference: usize) -> Result<HapReport> {
    if max_difference == 0 {
        return Err(Error::Parameter("maximum difference D must be at least 1".into()));
    }
    values.check_range("N", limit)?;
    let mut per_d_max = Vec::with_capacity(max_difference);
    for d in 1..=max_difference {
        let mut s = 0i64;
        let mut best = HapMax { d, n: 0, value: 0 };
        for n in 1..=limit / d {
            s += values.f(n * d) as i64;
            if s.abs() > best.value {
                best = HapMax { d, n, value: s.abs() };
            }
        }
        per_d_max.push(best);
    }
    let best = per_d_max
        .iter()
        .copied()
        .fold(per_d_max[0], |acc, m| if m.value > acc.value { m } else { acc });
    Ok(HapReport {
        limit,
        max_difference,
        best,
        per_d_max,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthFit {
    /// OLS slope of `log|S(x)|` against `log x`.
    pub slope: f64,
    pub intercept: f64,
    pub points_used: usize,
    /// Running maximum unchanged over the last half of the checkpoints; the
    /// slope is unreliable when set.
    pub bounded: bool,
}

pub fn growth_fit(series: &SumSeries) -> Result<GrowthFit> {
    let cps = &series.checkpoints;
    if cps.len() < 8 {
        return Err(Error::NoFit(format!("need at least 8 checkpoints, got {}", cps.len())));
    }
    if (*cps.last().unwrap() as f64) < 100.0 * cps[0] as f64 {
        return Err(Error::NoFit("checkpoints must span at least two decades".into()));
    }
    let points: Vec<(f64, f64)> = cps
        .iter()
        .zip(&series.sums)
        .filter(|(_, &s)| s != 0)
        .map(|(&x, &s)| ((x as f64).ln(), (s.abs() as f64).ln()))
        .collect();
    if points.is_empty() {
        return Err(Error::NoFit("all partial sums are zero".into()));
    }
    let m = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / m;
    let my = points.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = if sxx > 0.0 { sxy / sxx } else { 0.0 };

    let half = series.running_max_abs.len() / 2;
    let tail = &series.running_max_abs[half..];
    let bounded = tail.iter().all(|&v| v == tail[0]);

    Ok(GrowthFit {
        slope,
        intercept: my - slope * mx,
        points_used: points.len(),
        bounded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::FunctionSpec;
    use crate::sieve::{batch_values, build_sieve};

    fn table(spec: &FunctionSpec, n: usize) -> ValueTable {
        batch_values(spec, &build_sieve(n as u64).unwrap(), n).unwrap()
    }

    #[test]
    fn checkpoint_grid() {
        let cps = geometric_checkpoints(10, 1000, 1.25).unwrap();
        assert_eq!(cps[0], 10);
        assert_eq!(*cps.last().unwrap(), 1000);
        assert!(cps.windows(2).all(|w| w[0] < w[1]));
        assert!(geometric_checkpoints(10, 100, 1.0).is_err());
        assert_eq!(geometric_checkpoints(5, 5, 2.0).unwrap(), vec![5]);
    }

    #[test]
    fn partial_sum_examples() {
        let g = table(&FunctionSpec::counterexample_g(), 100);
        let s = partial_sum_series(&g, &[7, 10]).unwrap();
        assert_eq!(s.sums, vec![1, 0]);
        let one = table(&FunctionSpec::one(), 100);
        assert_eq!(partial_sum_series(&one, &[100]).unwrap().sums, vec![100]);
        assert_eq!(partial_sum_series(&one, &[100]).unwrap().means, vec![1.0]);
        let lam = table(&FunctionSpec::liouville(), 100);
        let naive: i64 = (1..=9).map(|n| FunctionSpec::liouville().value_at(n).unwrap().value() as i64).sum();
        assert_eq!(naive, -1);
        assert_eq!(partial_sum_series(&lam, &[9]).unwrap().sums, vec![naive]);
    }

    #[test]
    fn checkpoint_errors() {
        let one = table(&FunctionSpec::one(), 100);
        assert!(partial_sum_series(&one, &[]).is_err());
        assert!(partial_sum_series(&one, &[10, 5]).is_err());
        assert!(partial_sum_series(&one, &[101]).is_err());
        assert!(twisted_series(&one, &[0, 5]).is_err());
    }

    #[test]
    fn hap_examples() {
        let g = table(&FunctionSpec::counterexample_g(), 100);
        let r = hap_discrepancy(&g, 100, 2).unwrap();
        assert_eq!(r.best, HapMax { d: 2, n: 50, value: 50 });
        let one = table(&FunctionSpec::one(), 10);
        assert_eq!(hap_discrepancy(&one, 10, 3).unwrap().best, HapMax { d: 1, n: 10, value: 10 });
        assert!(hap_discrepancy(&one, 10, 0).is_err());
    }

    #[test]
    fn hap_liouville_matches_double_loop() {
        let lam = table(&FunctionSpec::liouville(), 10);
        let f = |n: u64| FunctionSpec::liouville().value_at(n).unwrap().value() as i64;
        let mut oracle = (0i64, 0u64, 0u64);
        for d in 1..=3u64 {
            for n in 1..=10 / d {
                let s: i64 = (1..=n).map(|k| f(k * d)).sum();
                if s.abs() > oracle.0 {
                    oracle = (s.abs(), d, n);
                }
            }
        }
        assert_eq!(oracle, (2, 1, 8));
        let r = hap_discrepancy(&lam, 10, 3).unwrap();
        assert_eq!((r.best.value, r.best.d as u64, r.best.n as u64), oracle);
    }

    #[test]
    fn twisted_examples() {
        let one = table(&FunctionSpec::one(), 100);
        let direct: i64 = (1..=10).map(|n| one.mu(n) as i64).sum();
        assert_eq!(direct, -1);
        assert_eq!(twisted_series(&one, &[10]).unwrap().sums, vec![direct]);
        let lam = table(&FunctionSpec::liouville(), 100);
        let squarefree = |x: u64| {
            (1..=x)
                .filter(|&n| (2..=10u64).all(|d| n % (d * d) != 0))
                .count() as i64
        };
        assert_eq!(twisted_series(&lam, &[10, 100]).unwrap().sums, vec![7, squarefree(100)]);
        assert_eq!(squarefree(100), 61);
    }

    #[test]
    fn omega_weighted_examples() {
        let one = table(&FunctionSpec::one(), 10);
        assert_eq!(omega_weighted_sum(1.0, &one, 10).unwrap(), 10.0);
        // Omega(1..=10) = 0,1,1,2,1,2,1,3,2,2
        let hand = 1.0 + 0.5 + 0.5 + 0.25 + 0.5 + 0.25 + 0.5 + 0.125 + 0.25 + 0.25;
        assert_eq!(omega_weighted_sum(0.5, &one, 10).unwrap(), hand);
        assert_eq!(hand, 4.125);
        assert!(hand >= 0.5 * 4.0);
        assert_eq!(omega_weighted_sum(0.0, &one, 10).unwrap(), 1.0);
        assert!(omega_weighted_sum(1.5, &one, 10).is_err());
    }

    #[test]
    fn growth_fit_examples() {
        let n = 1_000_000;
        let cps = geometric_checkpoints(10, n, 1.25).unwrap();
        let one = table(&FunctionSpec::one(), n);
        let fit = growth_fit(&partial_sum_series(&one, &cps).unwrap()).unwrap();
        assert!((fit.slope - 1.0).abs() < 0.01);
        assert!(!fit.bounded);

        let g = table(&FunctionSpec::counterexample_g(), n);
        let fit = growth_fit(&partial_sum_series(&g, &cps).unwrap()).unwrap();
        assert!(fit.bounded);

        let short = partial_sum_series(&one, &[10, 20, 30]).unwrap();
        assert!(growth_fit(&short).is_err());
        let narrow = partial_sum_series(&one, &(100..110).collect::<Vec<_>>()).unwrap();
        assert!(growth_fit(&narrow).is_err());
    }

    #[test]
    fn growth_fit_rejects_all_zero_sums() {
        let series = SumSeries {
            checkpoints: geometric_checkpoints(10, 10_000, 2.0).unwrap(),
            sums: vec![0; 11],
            running_max_abs: vec![1; 11],
            means: vec![0.0; 11],
        };
        assert_eq!(series.checkpoints.len(), 11);
        assert!(matches!(growth_fit(&series), Err(Error::NoFit(_))));
    }
}
