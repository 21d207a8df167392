//! Real-axis Dirichlet series: `zeta`, the prime zeta function, truncated
//! Dirichlet sums and Euler products with explicit tail bounds, the
//! correction product `Pi(sigma)` relating a multiplicative function to its
//! completely multiplicative part, and the abscissa `sigma_0(f)` above which
//! every local factor of `Pi` is positive.

use std::f64::consts::LN_2;

use crate::accum::NeumaierSum;
use crate::error::{Error, Result};
use crate::function::{FunctionSpec, Sign};
use crate::sieve::{SieveTable, ValueTable};

const EPS: f64 = f64::EPSILON;

/// Upper bound for `pi(x)` valid for all `x > 1` (Rosser–Schoenfeld).
const PI_UPPER_CONST: f64 = 1.25506;

/// A truncated value together with a bound on the truncation error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Approximation {
    pub value: f64,
    /// Number of terms, primes or cutoff used.
    pub truncation: u64,
    pub tail_bound: f64,
    /// Set when no finite bound could be derived; `tail_bound` is then infinite.
    pub flagged: bool,
}

impl Approximation {
    fn bounded(value: f64, truncation: u64, tail_bound: f64) -> Self {
        let flagged = !tail_bound.is_finite();
        Approximation {
            value,
            truncation,
            tail_bound: if flagged { f64::INFINITY } else { tail_bound },
            flagged,
        }
    }

    /// True if `x` lies within the tail bound of the value.
    pub fn contains(&self, x: f64) -> bool {
        (self.value - x).abs() <= self.tail_bound
    }

    pub fn relative_bound(&self) -> f64 {
        self.tail_bound / self.value.abs()
    }
}

// ---------------------------------------------------------------------------
// zeta

const ETA_TERMS: usize = 50;

/// `zeta(s)` for real `s >= 1/2`, `s != 1`, via the alternating series
/// `eta(s) = (1 - 2^{1-s}) zeta(s)` with Borwein's Chebyshev-weighted
/// acceleration. The truncation error is at most
/// `3 (3 + sqrt 8)^{-n} / |1 - 2^{1-s}|`.
pub fn zeta_real(s: f64) -> Result<Approximation> {
    if s == 1.0 {
        return Err(Error::Parameter("zeta has a pole at s = 1".into()));
    }
    if !(s >= 0.5) || !s.is_finite() {
        return Err(Error::Parameter(format!("zeta_real supports real s >= 1/2, got {s}")));
    }
    let n = ETA_TERMS;
    // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), built from term ratios.
    let mut d = Vec::with_capacity(n + 1);
    let mut term = 1.0f64;
    let mut acc = term;
    d.push(acc);
    for i in 1..=n {
        let i_f = i as f64;
        let n_f = n as f64;
        term *= 4.0 * (n_f + i_f - 1.0) * (n_f - i_f + 1.0) / ((2.0 * i_f) * (2.0 * i_f - 1.0));
        acc += term;
        d.push(acc);
    }
    let dn = d[n];
    let mut sum = NeumaierSum::new();
    let mut abs_sum = 0.0;
    for (k, &dk) in d.iter().enumerate().take(n) {
        let t = (dk - dn) / dn * (k as f64 + 1.0).powf(-s);
        let t = if k % 2 == 0 { t } else { -t };
        abs_sum += t.abs();
        sum.add(t);
    }
    let eta = -sum.value();
    let factor = 1.0 - 2f64.powf(1.0 - s);
    let value = eta / factor;
    let truncation = 3.0 / (3.0 + 8f64.sqrt()).powi(n as i32) / factor.abs();
    let rounding = 64.0 * EPS * (abs_sum + value.abs() * factor.abs()) / factor.abs();
    Ok(Approximation::bounded(value, n as u64, truncation + rounding))
}

// ---------------------------------------------------------------------------
// prime zeta

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimeZetaMethod {
    /// `sum_{p <= P} p^{-s}` plus an integral tail bound.
    Direct,
    /// `sum_n mu(n)/n log zeta(n s)`, truncated once `n s > 40`.
    MobiusLogZeta,
}

/// Bound on `sum_{p > cutoff} p^{-s}` for `s > 1`.
pub fn prime_tail_bound(s: f64, cutoff: usize) -> f64 {
    let x = cutoff.max(2) as f64;
    let integers = x.powf(1.0 - s) / (s - 1.0);
    let via_pi = PI_UPPER_CONST * s * x.powf(1.0 - s) / ((s - 1.0) * x.ln());
    integers.min(via_pi)
}

pub fn prime_zeta(
    s: f64,
    method: PrimeZetaMethod,
    table: Option<&SieveTable>,
    cutoff: usize,
) -> Result<Approximation> {
    match method {
        PrimeZetaMethod::Direct => {
            let table = table.ok_or_else(|| Error::Parameter("direct prime zeta needs a sieve".into()))?;
            prime_zeta_direct(s, table, cutoff)
        }
        PrimeZetaMethod::MobiusLogZeta => prime_zeta_mobius(s),
    }
}

pub fn prime_zeta_direct(s: f64, table: &SieveTable, cutoff: usize) -> Result<Approximation> {
    if !(s > 1.0) {
        return Err(Error::Parameter(format!("direct prime zeta needs s > 1, got {s}")));
    }
    table.check_range("P", cutoff)?;
    let primes = table.primes_up_to(cutoff);
    let sum: NeumaierSum = primes.iter().map(|&p| (p as f64).powf(-s)).collect();
    let value = sum.value();
    let bound = prime_tail_bound(s, cutoff) + 4.0 * EPS * value;
    Ok(Approximation::bounded(value, cutoff as u64, bound))
}

/// `mu(n)` by trial division, for the short Möbius series.
fn mobius_small(mut n: usize) -> i32 {
    let mut result = 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if n > 1 {
        -result
    } else {
        result
    }
}

/// `P(s) = sum_{n>=1} mu(n)/n log zeta(n s)` for `s > 1`.
pub fn prime_zeta_mobius(s: f64) -> Result<Approximation> {
    // log zeta(s) is complex on (1/2, 1), so the series only applies for s > 1.
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::Parameter(format!(
            "Möbius log-zeta prime zeta needs real s > 1, got {s}"
        )));
    }
    let last = ((40.0 / s).floor() as usize).max(1);
    let mut sum = NeumaierSum::new();
    let mut bound = 0.0;
    for n in 1..=last {
        let mu = mobius_small(n);
        if mu == 0 {
            continue;
        }
        let z = zeta_real(n as f64 * s)?;
        // zeta >= 1 on this range, so |d log zeta| <= d zeta.
        sum.add(mu as f64 / n as f64 * (z.value - 1.0).ln_1p());
        bound += z.tail_bound / n as f64 + 2.0 * EPS;
    }
    // log zeta(u) <= zeta(u) - 1 <= 2^{-u} (1 + 2/(u-1)).
    let u = (last + 1) as f64 * s;
    let tail = (1.0 + 2.0 / (u - 1.0)) / (last + 1) as f64 * 2f64.powf(-u) / (1.0 - 2f64.powf(-s));
    Ok(Approximation::bounded(sum.value(), last as u64, bound + tail))
}

// ---------------------------------------------------------------------------
// Dirichlet sums and Euler products

/// `sum_{n <= N} f(n) n^{-sigma}` with tail bound `N^{1-sigma}/(sigma-1)`.
pub fn dirichlet_direct(values: &ValueTable, sigma: f64, cutoff: usize) -> Result<Approximation> {
    if !(sigma > 1.0) {
        return Err(Error::Parameter(format!("direct Dirichlet sum needs sigma > 1, got {sigma}")));
    }
    values.check_range("N", cutoff)?;
    if cutoff == 0 {
        return Err(Error::ZeroArgument(0));
    }
    let mut sum = NeumaierSum::new();
    let mut abs = 0.0;
    for n in 1..=cutoff {
        let t = (n as f64).powf(-sigma);
        abs += t;
        sum.add(values.f(n) as f64 * t);
    }
    let tail = (cutoff as f64).powf(1.0 - sigma) / (sigma - 1.0);
    Ok(Approximation::bounded(sum.value(), cutoff as u64, tail + 4.0 * EPS * abs))
}

/// `-sum_{p <= P} log(1 - f(p) p^{-sigma})` and the prime count used.
fn log_euler_sum(spec: &FunctionSpec, table: &SieveTable, sigma: f64, cutoff: usize) -> (f64, usize) {
    let primes = table.primes_up_to(cutoff);
    let sum: NeumaierSum = primes
        .iter()
        .map(|&p| {
            let x = spec.prime_value(p as u64).value() as f64 * (p as f64).powf(-sigma);
            -(-x).ln_1p()
        })
        .collect();
    (sum.value(), primes.len())
}

fn check_sigma_above_one(sigma: f64, what: &str) -> Result<()> {
    if !(sigma > 1.0) || !sigma.is_finite() {
        return Err(Error::Parameter(format!("{what} needs real sigma > 1, got {sigma}")));
    }
    Ok(())
}

/// `prod_{p <= P} (1 - f(p) p^{-sigma})^{-1}`; only the prime values of
/// `spec` enter, so this is the series of its completely multiplicative part.
pub fn euler_product(spec: &FunctionSpec, table: &SieveTable, sigma: f64, cutoff: usize) -> Result<Approximation> {
    check_sigma_above_one(sigma, "Euler product")?;
    table.check_range("P", cutoff)?;
    let (log_sum, count) = log_euler_sum(spec, table, sigma, cutoff);
    let value = log_sum.exp();
    // |log(1 - x)| <= 2|x| for |x| <= 1/2, and every p > P has p^{-sigma} < 1/2.
    let rel = (2.0 * prime_tail_bound(sigma, cutoff)).exp_m1();
    let rounding = 4.0 * EPS * (count as f64).sqrt().max(1.0) * value;
    Ok(Approximation::bounded(value, cutoff as u64, value * rel + rounding))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogDecomposition {
    pub sigma: f64,
    /// `sum_{p <= P} f(p) p^{-sigma}`.
    pub prime_sum: f64,
    /// `log F(sigma) - prime_sum`.
    pub remainder: f64,
    pub log_f: f64,
    /// `sum_{p <= P} sum_{k >= 2} p^{-k sigma} / k`, which dominates `|remainder|`.
    pub remainder_bound: f64,
}

pub fn log_f_decomposition(
    spec: &FunctionSpec,
    table: &SieveTable,
    sigma: f64,
    cutoff: usize,
) -> Result<LogDecomposition> {
    let product = euler_product(spec, table, sigma, cutoff)?;
    let log_f = product.value.ln();
    let primes = table.primes_up_to(cutoff);
    let mut prime_sum = NeumaierSum::new();
    let mut bound = NeumaierSum::new();
    for &p in primes {
        let x = (p as f64).powf(-sigma);
        prime_sum.add(spec.prime_value(p as u64).value() as f64 * x);
        bound.add(-(-x).ln_1p() - x);
    }
    let prime_sum = prime_sum.value();
    Ok(LogDecomposition {
        sigma,
        prime_sum,
        remainder: log_f - prime_sum,
        log_f,
        remainder_bound: bound.value(),
    })
}

// ---------------------------------------------------------------------------
// sigma_0 and Pi(sigma)

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SigmaZeroReport {
    /// `min{k >= 3 : f(2^{k-1}) f(2) = -1}`, absent when `f(2^k) = 1` for all `k`.
    pub k0: Option<u32>,
    /// Root in `(0, 1)` of [`dyadic_lower_bound`] for `k0`.
    pub alpha: Option<f64>,
    /// Final bisection bracket around `alpha`.
    pub bracket: Option<(f64, f64)>,
    /// `max{alpha, log 2 / log 3}`.
    pub sigma0: f64,
}

/// `log 2 / log 3`, where `1 - 2/(3^sigma (3^sigma - 1))` changes sign.
pub fn odd_prime_threshold() -> f64 {
    LN_2 / 3f64.ln()
}

/// `1 - 2/(2^sigma (2^sigma - 1)) + 2 * 2^{-k0 sigma}`, a lower bound for
/// the local factor of `Pi` at 2; increasing in `sigma > 0`.
pub fn dyadic_lower_bound(sigma: f64, k0: u32) -> f64 {
    let t = 2f64.powf(sigma);
    1.0 - 2.0 / (t * (t - 1.0)) + 2.0 * 2f64.powf(-(k0 as f64) * sigma)
}

/// Sign pattern `f(2^k)` for `k = 1..=len`.
fn dyadic_values(spec: &FunctionSpec, len: u32) -> Vec<Sign> {
    let f2 = spec.prime_value(2);
    (1..=len).map(|k| spec.power_value_with(2, k, f2)).collect()
}

pub fn sigma_zero(spec: &FunctionSpec) -> Result<SigmaZeroReport> {
    // Past the last override the default rule repeats with period <= 2, so
    // two extra exponents decide every question about the dyadic pattern.
    let len = spec.max_override_exponent(2).max(1) + 3;
    let dyadic = dyadic_values(spec, len);
    if dyadic.iter().all(|&v| v == Sign::Minus) {
        return Err(Error::HypothesisViolated);
    }
    let f2 = dyadic[0];
    let k0 = (3..=len + 1).find(|&k| dyadic[(k - 2) as usize] * f2 == Sign::Minus);
    let threshold = odd_prime_threshold();
    let Some(k0) = k0 else {
        return Ok(SigmaZeroReport {
            k0: None,
            alpha: None,
            bracket: None,
            sigma0: threshold,
        });
    };

    // h(0+) = -inf and h(1) = 2^{1-k0} > 0.
    let (mut lo, mut hi) = (1e-9, 1.0);
    debug_assert!(dyadic_lower_bound(lo, k0) < 0.0 && dyadic_lower_bound(hi, k0) > 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if dyadic_lower_bound(mid, k0) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let alpha = 0.5 * (lo + hi);
    Ok(SigmaZeroReport {
        k0: Some(k0),
        alpha: Some(alpha),
        bracket: Some((lo, hi)),
        sigma0: alpha.max(threshold),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct PiSigma {
    pub approx: Approximation,
    /// Smallest retained local factor and its prime.
    pub min_local_factor: (u64, f64),
}

/// Local factor of `Pi` at `p`, truncated after `k = K`, and the bound on
/// the dropped terms.
pub fn pi_local_factor(spec: &FunctionSpec, p: u64, sigma: f64, power_cutoff: u32) -> (f64, f64) {
    let fp = spec.prime_value(p);
    let x = (p as f64).powf(-sigma);
    let mut sum = NeumaierSum::new();
    sum.add(1.0);
    let mut xk = x;
    let mut prev = fp;
    for k in 2..=power_cutoff {
        xk *= x;
        if xk == 0.0 {
            break;
        }
        let cur = spec.power_value_with(p, k, fp);
        let num = cur.value() as i32 - (prev * fp).value() as i32;
        if num != 0 {
            sum.add(num as f64 * xk);
        }
        prev = cur;
    }
    let dropped = 2.0 * x.powi(power_cutoff as i32 + 1) / (1.0 - x);
    (sum.value(), dropped)
}

/// `Pi(sigma) = prod_p (1 + sum_{k>=2} (f(p^k) - f(p^{k-1}) f(p)) p^{-k sigma})`
/// truncated to `p <= P`, `k <= K`.
///
/// Requires `sigma > sigma_0(f)`. For the all-minus dyadic pattern, where
/// `sigma_0` is undefined, the product identity still holds for `sigma > 1`
/// and is admitted there.
pub fn pi_sigma(
    spec: &FunctionSpec,
    table: &SieveTable,
    sigma: f64,
    prime_cutoff: usize,
    power_cutoff: u32,
) -> Result<PiSigma> {
    if power_cutoff < 2 {
        return Err(Error::Parameter("power cutoff K must be at least 2".into()));
    }
    if !sigma.is_finite() {
        return Err(Error::Parameter(format!("sigma must be finite, got {sigma}")));
    }
    table.check_range("P", prime_cutoff)?;
    match sigma_zero(spec) {
        Ok(report) if sigma <= report.sigma0 => {
            return Err(Error::Parameter(format!(
                "sigma = {sigma} must exceed sigma_0 = {}",
                report.sigma0
            )))
        }
        Ok(_) => {}
        Err(Error::HypothesisViolated) if sigma <= 1.0 => return Err(Error::HypothesisViolated),
        Err(Error::HypothesisViolated) => {}
        Err(e) => return Err(e),
    }

    let mut log_sum = NeumaierSum::new();
    let mut inner_rel = 0.0;
    let mut min_local = (0u64, f64::INFINITY);
    let primes = table.primes_up_to(prime_cutoff);
    for &p in primes {
        let p = p as u64;
        let (local, dropped) = pi_local_factor(spec, p, sigma, power_cutoff);
        if local < min_local.1 {
            min_local = (p, local);
        }
        if !(local > 0.0) {
            return Err(Error::Parameter(format!(
                "local factor at p = {p} is {local}, not positive"
            )));
        }
        if local != 1.0 {
            log_sum.add(local.ln());
        }
        inner_rel += if dropped < local { dropped / (local - dropped) } else { f64::INFINITY };
    }
    let value = log_sum.value().exp();

    // Primes past the cutoff: |u_p| <= 2 p^{-2 sigma} / (1 - p^{-sigma}).
    let x = (prime_cutoff + 1) as f64;
    let head = 2.0 * x.powf(-2.0 * sigma) / (1.0 - x.powf(-sigma));
    let outer = if 2.0 * sigma > 1.0 && head <= 0.5 {
        let integral = (prime_cutoff.max(1) as f64).powf(1.0 - 2.0 * sigma) / (2.0 * sigma - 1.0);
        2.0 * (2.0 / (1.0 - x.powf(-sigma))) * integral
    } else {
        f64::INFINITY
    };
    let rel = (outer + inner_rel).exp_m1();
    let rounding = 4.0 * EPS * (primes.len() as f64).sqrt().max(1.0) * value;
    Ok(PiSigma {
        approx: Approximation::bounded(value, prime_cutoff as u64, value * rel + rounding),
        min_local_factor: min_local,
    })
}

// ---------------------------------------------------------------------------
// factorization probe

#[derive(Clone, Debug, PartialEq)]
pub struct FactorizationProbe {
    pub s: f64,
    pub c: f64,
    /// `F(s)` from the Euler product.
    pub f_value: Approximation,
    pub zeta_s: Approximation,
    pub zeta_2s: Approximation,
    pub prime_zeta_2s: Approximation,
    /// `exp[-sum_{p <= P} (c - f(p)) p^{-s}]`.
    pub exp_term: f64,
    /// Extracted residual `D(s)`.
    pub d_value: f64,
    /// The right-hand side rebuilt from `d_value` and the components.
    pub reconstruction: f64,
    /// Bound on the uncertainty of `F` and `D` composed from every component.
    pub composed_bound: f64,
}

impl FactorizationProbe {
    pub fn reconstruction_error(&self) -> f64 {
        (self.reconstruction - self.f_value.value).abs()
    }
}

/// Splits `F(s)` as
/// `(zeta(2s)/zeta(s))^{|c|} e^{P(2s)/2} D(s) zeta(2s)^{-|c|/2} exp[-sum (c - f(p)) p^{-s}]`
/// and extracts `D(s)`.
pub fn factorization_probe(
    spec: &FunctionSpec,
    table: &SieveTable,
    c: f64,
    s: f64,
    cutoff: usize,
) -> Result<FactorizationProbe> {
    if !(-1.0..0.0).contains(&c) {
        return Err(Error::Parameter(format!("c must lie in [-1, 0), got {c}")));
    }
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::Parameter(format!("factorization probe supports real s > 1, got {s}")));
    }
    if !spec.is_completely_multiplicative() {
        return Err(Error::InvalidSpec(
            "factorization probe needs a completely multiplicative function".into(),
        ));
    }
    let f_value = euler_product(spec, table, s, cutoff)?;
    let zeta_s = zeta_real(s)?;
    let zeta_2s = zeta_real(2.0 * s)?;
    let prime_zeta_2s = prime_zeta_mobius(2.0 * s)?;

    let exp_sum: NeumaierSum = table
        .primes_up_to(cutoff)
        .iter()
        .map(|&p| (c - spec.prime_value(p as u64).value() as f64) * (p as f64).powf(-s))
        .collect();
    let exp_sum = exp_sum.value();
    let exp_term = (-exp_sum).exp();

    let a = c.abs();
    let d_value = f_value.value
        * (zeta_s.value / zeta_2s.value).powf(a)
        * zeta_2s.value.powf(a / 2.0)
        * (-prime_zeta_2s.value / 2.0).exp()
        * exp_sum.exp();
    let reconstruction = (zeta_2s.value / zeta_s.value).powf(a)
        * (prime_zeta_2s.value / 2.0).exp()
        * d_value
        * zeta_2s.value.powf(-a / 2.0)
        * exp_term;

    let rel = f_value.relative_bound()
        + a * zeta_s.relative_bound()
        + 1.5 * a * zeta_2s.relative_bound()
        + 0.5 * prime_zeta_2s.tail_bound
        + 32.0 * EPS;
    Ok(FactorizationProbe {
        s,
        c,
        f_value,
        zeta_s,
        zeta_2s,
        prime_zeta_2s,
        exp_term,
        d_value,
        reconstruction,
        composed_bound: f_value.value.abs().max(d_value.abs()) * rel,
    })
}
