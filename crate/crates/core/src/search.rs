//! Depth-first search for completely multiplicative ±1 functions whose
//! partial sums stay small on `1..=N`.
//!
//! Only prime values are decision variables; every composite value is forced
//! by complete multiplicativity. Once the primes below `q` are assigned, the
//! sums `S(1), ..., S(q - 1)` are fixed, which is what the pruning uses.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::function::{FunctionSpec, Sign};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub limit: usize,
    /// Smallest `max_{n <= N} |S(n)|` found.
    pub best_discrepancy: i64,
    /// `(p, f(p))` for every prime `p <= N`, ascending.
    pub witness: Vec<(u64, Sign)>,
    pub nodes_explored: u64,
    /// The whole space was covered within budget, so the result is optimal.
    pub exhaustive: bool,
}

impl SearchResult {
    /// The witness as a completely multiplicative spec (`f(p) = +1` past `N`).
    pub fn witness_spec(&self) -> FunctionSpec {
        let pv: BTreeMap<u64, Sign> = self.witness.iter().copied().collect();
        FunctionSpec::completely_multiplicative(pv, Sign::Plus).expect("witness keys are primes")
    }
}

struct Searcher {
    limit: usize,
    primes: Vec<usize>,
    spf: Vec<usize>,
    /// f(n) for n assigned so far; 0 = unknown.
    values: Vec<i8>,
    assignment: Vec<i8>,
    best: Option<(i64, Vec<i8>)>,
    nodes: u64,
    budget: u64,
    out_of_budget: bool,
}

impl Searcher {
    /// Fills `f(n)` for `n` in `[from, to)`, all of whose prime factors are
    /// assigned, and returns the running max of `|S|` from `start_sum`.
    fn fill_segment(&mut self, from: usize, to: usize, mut sum: i64, mut max_abs: i64) -> (i64, i64) {
        for n in from..to {
            let p = self.spf[n];
            let v = if p == n {
                self.values[n]
            } else {
                self.values[p] * self.values[n / p]
            };
            self.values[n] = v;
            sum += v as i64;
            max_abs = max_abs.max(sum.abs());
        }
        (sum, max_abs)
    }

    fn bound(&self) -> i64 {
        self.best.as_ref().map_or(i64::MAX, |b| b.0)
    }

    /// `idx` is the index of the next prime to assign; `S` and its running
    /// max are known on `1..primes[idx]`.
    fn descend(&mut self, idx: usize, sum: i64, max_abs: i64) {
        if self.out_of_budget {
            return;
        }
        if idx == self.primes.len() {
            if max_abs < self.bound() {
                self.best = Some((max_abs, self.assignment.clone()));
            }
            return;
        }
        let p = self.primes[idx];
        let next = self.primes.get(idx + 1).copied().unwrap_or(self.limit + 1);
        for choice in [1i8, -1] {
            if self.nodes >= self.budget {
                self.out_of_budget = true;
                return;
            }
            self.nodes += 1;
            self.values[p] = choice;
            self.assignment[idx] = choice;
            let (s, m) = self.fill_segment(p, next, sum, max_abs);
            if m < self.bound() {
                self.descend(idx + 1, s, m);
            }
            if self.out_of_budget {
                return;
            }
        }
    }
}

pub fn min_discrepancy_search(limit: usize, budget: u64) -> Result<SearchResult> {
    if limit < 2 {
        return Err(Error::Parameter(format!("search range must be at least 2, got {limit}")));
    }
    if budget == 0 {
        return Err(Error::Parameter("node budget must be at least 1".into()));
    }
    let mut spf = vec![0usize; limit + 1];
    let mut primes = Vec::new();
    for n in 2..=limit {
        if spf[n] == 0 {
            primes.push(n);
            for m in (n..=limit).step_by(n) {
                if spf[m] == 0 {
                    spf[m] = n;
                }
            }
        }
    }
    let mut values = vec![0i8; limit + 1];
    values[1] = 1;
    let mut s = Searcher {
        limit,
        assignment: vec![0; primes.len()],
        primes,
        spf,
        values,
        best: None,
        nodes: 0,
        budget,
        out_of_budget: false,
    };
    // S(1) = 1.
    s.descend(0, 1, 1);
    let (best, assignment) = s.best.clone().ok_or(Error::BudgetExhausted(budget))?;
    Ok(SearchResult {
        limit,
        best_discrepancy: best,
        witness: s
            .primes
            .iter()
            .zip(&assignment)
            .map(|(&p, &v)| (p as u64, Sign::from_i8(v)))
            .collect(),
        nodes_explored: s.nodes,
        exhaustive: !s.out_of_budget,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sieve::{batch_values, build_sieve};
    use crate::sums::partial_sum_series;

    /// Enumerates all 2^pi(N) assignments in the search's own order
    /// (+1 before -1, primes ascending) and keeps the first minimum.
    fn brute_force(limit: usize) -> (i64, Vec<(u64, Sign)>) {
        let primes: Vec<u64> = (2..=limit as u64).filter(|&n| crate::function::is_prime(n)).collect();
        let k = primes.len();
        let mut best: Option<(i64, Vec<(u64, Sign)>)> = None;
        for mask in 0u64..(1 << k) {
            // Bit (k-1-i) set means prime i takes -1, so masks count in lexicographic order.
            let assignment: Vec<(u64, Sign)> = primes
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, if mask >> (k - 1 - i) & 1 == 1 { Sign::Minus } else { Sign::Plus }))
                .collect();
            let spec = FunctionSpec::completely_multiplicative(assignment.iter().copied().collect(), Sign::Plus)
                .unwrap();
            let mut s = 0i64;
            let mut m = 0i64;
            for n in 1..=limit as u64 {
                s += spec.value_at(n).unwrap().value() as i64;
                m = m.max(s.abs());
            }
            if best.as_ref().map_or(true, |b| m < b.0) {
                best = Some((m, assignment));
            }
        }
        best.unwrap()
    }

    #[test]
    fn small_examples() {
        let r = min_discrepancy_search(2, 1000).unwrap();
        assert_eq!(r.best_discrepancy, 1);
        assert_eq!(r.witness, vec![(2, Sign::Minus)]);

        let r = min_discrepancy_search(9, 1000).unwrap();
        assert_eq!(r.best_discrepancy, 1);
        assert_eq!(
            r.witness,
            vec![(2, Sign::Minus), (3, Sign::Minus), (5, Sign::Minus), (7, Sign::Plus)]
        );
        assert!(r.exhaustive);

        let r = min_discrepancy_search(10, 1000).unwrap();
        assert_eq!(r.best_discrepancy, 2);
        assert!(min_discrepancy_search(1, 10).is_err());
        assert!(min_discrepancy_search(10, 0).is_err());
    }

    #[test]
    fn matches_brute_force_up_to_20() {
        for n in 2..=20 {
            let r = min_discrepancy_search(n, 1 << 20).unwrap();
            let (best, witness) = brute_force(n);
            assert!(r.exhaustive);
            assert_eq!(r.best_discrepancy, best, "N = {n}");
            assert_eq!(r.witness, witness, "N = {n}");
        }
    }

    #[test]
    fn witness_reproduces_discrepancy() {
        let t = build_sieve(200).unwrap();
        let mut prev = 0;
        for n in [2usize, 9, 10, 30, 60, 100] {
            let r = min_discrepancy_search(n, 10_000_000).unwrap();
            assert!(r.exhaustive);
            let v = batch_values(&r.witness_spec(), &t, n).unwrap();
            let s = partial_sum_series(&v, &[n]).unwrap();
            assert_eq!(s.running_max_abs[0], r.best_discrepancy);
            assert!(r.best_discrepancy >= prev);
            prev = r.best_discrepancy;
        }
    }

    #[test]
    fn tiny_budget() {
        assert_eq!(min_discrepancy_search(30, 3), Err(Error::BudgetExhausted(3)));
        let r = min_discrepancy_search(30, 12).unwrap();
        assert!(!r.exhaustive);
        assert_eq!(r.nodes_explored, 12);
    }
}
