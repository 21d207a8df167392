//! Linear sieve, factorization, and batch evaluation of `f`, `mu` and `Omega`.
//!
//! Memory is about 7 bytes per integer (4 for the smallest prime factor, one
//! each for `f`, `mu`, `Omega`). The limit is a runtime parameter capped by
//! the `MDL_MEMORY_LIMIT_MB` environment variable (default 4096 MB, which
//! admits limits a little above `5 * 10^8`).

use crate::error::{Error, Result};
use crate::function::FunctionSpec;

pub const MEMORY_ENV: &str = "MDL_MEMORY_LIMIT_MB";
const DEFAULT_BUDGET_MB: u64 = 4096;
const BYTES_PER_ENTRY: u64 = 7;

/// Memory budget for sieve construction, in MB.
pub fn memory_budget_mb() -> u64 {
    std::env::var(MEMORY_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET_MB)
}

#[derive(Clone, Debug)]
pub struct SieveTable {
    limit: usize,
    spf: Vec<u32>,
    primes: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn product(&self) -> u64 {
        self.pairs.iter().map(|&(p, k)| p.pow(k)).product()
    }
}

pub fn build_sieve(limit: u64) -> Result<SieveTable> {
    SieveTable::build_with_budget(limit, memory_budget_mb())
}

impl SieveTable {
    pub fn build_with_budget(limit: u64, budget_mb: u64) -> Result<SieveTable> {
        if limit < 2 {
            return Err(Error::OutOfRange {
                what: "sieve limit",
                value: limit,
                limit: 2,
            });
        }
        let needed_mb = (limit.saturating_mul(BYTES_PER_ENTRY) >> 20) + 1;
        if limit > u32::MAX as u64 || needed_mb > budget_mb {
            return Err(Error::ResourceLimit {
                requested: limit,
                needed_mb,
                budget_mb,
            });
        }
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        let mut primes: Vec<u32> = Vec::with_capacity(estimate_prime_count(n));
        for i in 2..=n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            let si = spf[i];
            for &p in &primes {
                let ip = i * p as usize;
                if p > si || ip > n {
                    break;
                }
                spf[ip] = p;
            }
        }
        Ok(SieveTable {
            limit: n,
            spf,
            primes,
        })
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    /// Primes `<= x`.
    pub fn primes_up_to(&self, x: usize) -> &[u32] {
        &self.primes[..self.prime_count(x)]
    }

    /// `pi(x)`; `x` may exceed the limit only if the caller accepts a
    /// truncated count, so it is clamped to the limit.
    pub fn prime_count(&self, x: usize) -> usize {
        let x = x.min(self.limit);
        self.primes.partition_point(|&p| p as usize <= x)
    }

    #[inline]
    pub fn smallest_prime_factor(&self, n: usize) -> u32 {
        self.spf[n]
    }

    pub fn is_prime(&self, n: usize) -> bool {
        n >= 2 && n <= self.limit && self.spf[n] as usize == n
    }

    pub fn factorize(&self, n: u64) -> Result<Factorization> {
        if n == 0 || n > self.limit as u64 {
            return Err(Error::OutOfRange {
                what: "n",
                value: n,
                limit: self.limit as u64,
            });
        }
        let mut pairs = Vec::new();
        let mut m = n as usize;
        while m > 1 {
            let p = self.spf[m] as usize;
            let mut k = 0;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            pairs.push((p as u64, k));
        }
        Ok(Factorization { pairs })
    }

    pub(crate) fn check_range(&self, what: &'static str, x: usize) -> Result<()> {
        if x > self.limit {
            return Err(Error::OutOfRange {
                what,
                value: x as u64,
                limit: self.limit as u64,
            });
        }
        Ok(())
    }
}

fn estimate_prime_count(n: usize) -> usize {
    if n < 17 {
        return 8;
    }
    let x = n as f64;
    (1.26 * x / x.ln()) as usize
}

/// `f(n)`, `mu(n)` and `Omega(n)` for `1 <= n <= limit`. Index 0 is unused.
#[derive(Clone, Debug)]
pub struct ValueTable {
    limit: usize,
    f: Vec<i8>,
    mu: Vec<i8>,
    omega: Vec<u8>,
    spec: FunctionSpec,
}

pub fn batch_values(spec: &FunctionSpec, table: &SieveTable, limit: usize) -> Result<ValueTable> {
    table.check_range("value table limit", limit)?;
    if limit == 0 {
        return Err(Error::ZeroArgument(0));
    }
    let mut f = vec![0i8; limit + 1];
    let mut mu = vec![0i8; limit + 1];
    let mut omega = vec![0u8; limit + 1];
    f[1] = 1;
    mu[1] = 1;
    for n in 2..=limit {
        let p = table.spf[n] as usize;
        let mut rest = n / p;
        let mut k = 1u32;
        while rest % p == 0 {
            rest /= p;
            k += 1;
        }
        omega[n] = omega[n / p].saturating_add(1);
        mu[n] = if k >= 2 { 0 } else { -mu[rest] };
        f[n] = if rest == 1 {
            if k == 1 {
                spec.prime_value(p as u64).value()
            } else {
                let fp = crate::function::Sign::from_i8(f[p]);
                spec.power_value_with(p as u64, k, fp).value()
            }
        } else {
            // n = rest * p^k with p^k < n already filled in.
            f[rest] * f[n / rest]
        };
    }
    Ok(ValueTable {
        limit,
        f,
        mu,
        omega,
        spec: spec.clone(),
    })
}

impl ValueTable {
    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn spec(&self) -> &FunctionSpec {
        &self.spec
    }

    #[inline]
    pub fn f(&self, n: usize) -> i8 {
        self.f[n]
    }

    #[inline]
    pub fn mu(&self, n: usize) -> i8 {
        self.mu[n]
    }

    #[inline]
    pub fn omega(&self, n: usize) -> u8 {
        self.omega[n]
    }

    pub fn is_prime(&self, n: usize) -> bool {
        self.omega[n] == 1
    }

    /// `f(1..=limit)`.
    pub fn f_values(&self) -> &[i8] {
        &self.f[1..]
    }

    pub fn mu_values(&self) -> &[i8] {
        &self.mu[1..]
    }

    pub fn omega_values(&self) -> &[u8] {
        &self.omega[1..]
    }

    pub(crate) fn check_range(&self, what: &'static str, x: usize) -> Result<()> {
        if x > self.limit {
            return Err(Error::OutOfRange {
                what,
                value: x as u64,
                limit: self.limit as u64,
            });
        }
        Ok(())
    }
}
