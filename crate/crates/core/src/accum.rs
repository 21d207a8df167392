use std::ops::AddAssign;

/// Kahan–Babuška (Neumaier) compensated accumulator.
///
/// Terms must be added in a fixed order for results to be bit-reproducible.
#[derive(Clone, Copy, Debug, Default)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl AddAssign<f64> for NeumaierSum {
    fn add_assign(&mut self, rhs: f64) {
        self.add(rhs);
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = NeumaierSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_terms() {
        let acc: NeumaierSum = [1.0, 1e100, 1.0, -1e100].into_iter().collect();
        assert_eq!(acc.value(), 2.0);
    }

    #[test]
    fn harmonic_sum_beats_naive() {
        // sum_{n<=10^6} 1/n reversed order in f64 is accurate to ~1e-15.
        let exact: f64 = (1..=1_000_000u32).rev().map(|n| 1.0 / n as f64).sum();
        let acc: NeumaierSum = (1..=1_000_000u32).map(|n| 1.0 / n as f64).collect();
        assert!((acc.value() - exact).abs() < 1e-13);
    }
}
