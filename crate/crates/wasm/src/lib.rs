//! Browser bindings. Each export returns a flat `Float64Array` that the page
//! in `www/` plots on a canvas.
//!
//! The computations live in [`demo`] as plain Rust so they can be tested on
//! the host; the `#[wasm_bindgen]` wrappers only convert errors.

use wasm_bindgen::prelude::*;

pub mod demo {
    use multdisc::dirichlet::{dyadic_lower_bound, odd_prime_threshold, sigma_zero};
    use multdisc::sums::{geometric_checkpoints, hap_discrepancy, partial_sum_series, twisted_series};
    use multdisc::{batch_values, build_sieve, make_builtin, parse_function_spec, FunctionSpec};

    /// Upper limit for in-browser sieves.
    pub const MAX_LIMIT: usize = 5_000_000;

    pub fn load(source: &str) -> Result<FunctionSpec, String> {
        let s = source.trim();
        let spec = if s.starts_with('{') {
            parse_function_spec(s)
        } else {
            make_builtin(s)
        };
        spec.map_err(|e| e.to_string())
    }

    fn check_limit(limit: usize) -> Result<(), String> {
        if !(10..=MAX_LIMIT).contains(&limit) {
            return Err(format!("limit must be between 10 and {MAX_LIMIT}"));
        }
        Ok(())
    }

    /// `(x, S(x), sum_{n<=x} mu(n) f(n))` triples on a geometric grid.
    pub fn partial_sums(source: &str, limit: usize, ratio: f64) -> Result<Vec<f64>, String> {
        check_limit(limit)?;
        let spec = load(source)?;
        let sieve = build_sieve(limit as u64).map_err(|e| e.to_string())?;
        let values = batch_values(&spec, &sieve, limit).map_err(|e| e.to_string())?;
        let cps = geometric_checkpoints(1, limit, ratio).map_err(|e| e.to_string())?;
        let plain = partial_sum_series(&values, &cps).map_err(|e| e.to_string())?;
        let twisted = twisted_series(&values, &cps).map_err(|e| e.to_string())?;
        let mut out = Vec::with_capacity(3 * cps.len());
        for i in 0..cps.len() {
            out.extend([cps[i] as f64, plain.sums[i] as f64, twisted.sums[i] as f64]);
        }
        Ok(out)
    }

    /// `(d, n, max |sum_{k<=n} f(kd)|)` for `d = 1..=max_diff`.
    pub fn hap_profile(source: &str, limit: usize, max_diff: usize) -> Result<Vec<f64>, String> {
        check_limit(limit)?;
        let spec = load(source)?;
        let sieve = build_sieve(limit as u64).map_err(|e| e.to_string())?;
        let values = batch_values(&spec, &sieve, limit).map_err(|e| e.to_string())?;
        let report = hap_discrepancy(&values, limit, max_diff).map_err(|e| e.to_string())?;
        Ok(report
            .per_d_max
            .iter()
            .flat_map(|m| [m.d as f64, m.n as f64, m.value as f64])
            .collect())
    }

    /// `[k0, alpha, sigma0]`, NaN where absent.
    pub fn sigma_zero_summary(source: &str) -> Result<Vec<f64>, String> {
        let spec = load(source)?;
        let r = sigma_zero(&spec).map_err(|e| e.to_string())?;
        Ok(vec![
            r.k0.map_or(f64::NAN, f64::from),
            r.alpha.unwrap_or(f64::NAN),
            r.sigma0,
        ])
    }

    /// `(sigma, h(sigma), 1 - 2/(3^sigma (3^sigma - 1)))` on `(lo, 1]`.
    pub fn dyadic_curve(k0: u32, lo: f64, samples: usize) -> Result<Vec<f64>, String> {
        if k0 < 3 {
            return Err("k0 is at least 3".into());
        }
        if !(lo > 0.0 && lo < 1.0) || samples < 2 {
            return Err("need 0 < lo < 1 and at least two samples".into());
        }
        let mut out = Vec::with_capacity(3 * samples);
        for i in 0..samples {
            let s = lo + (1.0 - lo) * i as f64 / (samples - 1) as f64;
            let t = 3f64.powf(s);
            out.extend([s, dyadic_lower_bound(s, k0), 1.0 - 2.0 / (t * (t - 1.0))]);
        }
        Ok(out)
    }

    pub fn odd_threshold() -> f64 {
        odd_prime_threshold()
    }
}

fn js(r: Result<Vec<f64>, String>) -> Result<Vec<f64>, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn partial_sums(function: &str, limit: usize, ratio: f64) -> Result<Vec<f64>, JsError> {
    js(demo::partial_sums(function, limit, ratio))
}

#[wasm_bindgen]
pub fn hap_profile(function: &str, limit: usize, max_diff: usize) -> Result<Vec<f64>, JsError> {
    js(demo::hap_profile(function, limit, max_diff))
}

#[wasm_bindgen]
pub fn sigma_zero_summary(function: &str) -> Result<Vec<f64>, JsError> {
    js(demo::sigma_zero_summary(function))
}

#[wasm_bindgen]
pub fn dyadic_curve(k0: u32, lo: f64, samples: usize) -> Result<Vec<f64>, JsError> {
    js(demo::dyadic_curve(k0, lo, samples))
}

#[wasm_bindgen]
pub fn odd_threshold() -> f64 {
    demo::odd_threshold()
}

#[cfg(test)]
mod tests {
    use super::demo::*;

    #[test]
    fn partial_sums_of_g_alternate() {
        let v = partial_sums("counterexample-g", 1000, 1.5).unwrap();
        for t in v.chunks(3) {
            assert_eq!(t[1], (t[0] as u64 % 2) as f64);
        }
        assert_eq!(v[v.len() - 3], 1000.0);
        assert!(partial_sums("counterexample-g", 5, 1.5).is_err());
        assert!(partial_sums("nope", 100, 1.5).is_err());
    }

    #[test]
    fn hap_profile_of_g() {
        let v = hap_profile("counterexample-g", 100, 2).unwrap();
        assert_eq!(v, vec![1.0, 1.0, 1.0, 2.0, 50.0, 50.0]);
    }

    #[test]
    fn sigma_zero_from_json() {
        let v = sigma_zero_summary(r#"{"kind":"completely-multiplicative","prime-values":{"2":-1}}"#).unwrap();
        assert_eq!(v[0], 3.0);
        assert!(v[1] > 0.86 && v[1] < 0.87);
        assert!(sigma_zero_summary("counterexample-g").unwrap_err().contains("hypothesis"));
        let one = sigma_zero_summary("one").unwrap();
        assert!(one[0].is_nan() && (one[2] - odd_threshold()).abs() < 1e-15);
    }

    #[test]
    fn dyadic_curve_crosses_zero_once() {
        let v = dyadic_curve(3, 0.5, 101).unwrap();
        let signs: Vec<bool> = v.chunks(3).map(|t| t[1] > 0.0).collect();
        assert_eq!(signs.windows(2).filter(|w| w[0] != w[1]).count(), 1);
        assert!(dyadic_curve(2, 0.5, 10).is_err());
    }
}
