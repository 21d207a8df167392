pub mod table;

use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use multdisc::dirichlet::{
    dirichlet_direct, euler_product, factorization_probe, log_f_decomposition, pi_sigma, sigma_zero,
};
use multdisc::primes::{density_fit, mean_value_report, prime_sum_series};
use multdisc::search::min_discrepancy_search;
use multdisc::sums::{geometric_checkpoints, growth_fit, hap_discrepancy, partial_sum_series, twisted_series};
use multdisc::{batch_values, build_sieve, parse_function_spec, FunctionSpec};

use table::Table;

#[derive(Debug, Parser)]
#[command(name = "multdisc", version, about = "Experiments on ±1 multiplicative functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write CSV here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Clone)]
pub struct FunctionArg {
    /// Builtin name (one, liouville, counterexample-g) or path to a JSON spec.
    #[arg(long, short = 'f', default_value = "liouville")]
    pub function: String,
}

#[derive(Debug, Args, Clone)]
pub struct RangeArgs {
    #[arg(long, short = 'n', default_value_t = 1_000_000)]
    pub limit: u64,

    /// `geometric:<ratio>` (from 10 to the limit) or `list:<x1>,<x2>,...`.
    #[arg(long, default_value = "geometric:1.25")]
    pub checkpoints: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Partial sums S(x) (or the mu-twisted sums) at checkpoints.
    Sums {
        #[command(flatten)]
        function: FunctionArg,
        #[command(flatten)]
        range: RangeArgs,
        /// Sum mu(n) f(n) instead of f(n).
        #[arg(long)]
        twisted: bool,
    },
    /// Per-difference maxima of |sum_{k<=n} f(kd)|.
    Hap {
        #[command(flatten)]
        function: FunctionArg,
        #[arg(long, short = 'n', default_value_t = 100_000)]
        limit: u64,
        #[arg(long, short = 'd', default_value_t = 10)]
        max_diff: usize,
    },
    /// Prime sums, density ratios and the mean-value criterion.
    Primes {
        #[command(flatten)]
        function: FunctionArg,
        #[command(flatten)]
        range: RangeArgs,
        /// Iterated-log depth k of the density model.
        #[arg(long, default_value_t = 1)]
        depth: u32,
        #[arg(long, default_value_t = 60)]
        powers: u32,
    },
    /// Direct Dirichlet sum, Euler product and log decomposition at each sigma.
    Dirichlet {
        #[command(flatten)]
        function: FunctionArg,
        #[arg(long, default_value = "1.5,2,3")]
        sigma: String,
        #[arg(long, short = 'n', default_value_t = 1_000_000)]
        cutoff: u64,
    },
    /// Correction product Pi(sigma) and the reconstruction F = Pi * F_c.
    Pisigma {
        #[command(flatten)]
        function: FunctionArg,
        #[arg(long, default_value = "2")]
        sigma: String,
        #[arg(long, short = 'n', default_value_t = 1_000_000)]
        cutoff: u64,
        #[arg(long, default_value_t = 60)]
        powers: u32,
    },
    /// k0, alpha(k0) and sigma_0(f).
    Sigma0 {
        #[command(flatten)]
        function: FunctionArg,
    },
    /// Extract D(s) from the prime-zeta factorization of F(s).
    Probe {
        #[command(flatten)]
        function: FunctionArg,
        #[arg(long, allow_hyphen_values = true, default_value_t = -1.0)]
        c: f64,
        #[arg(long, default_value = "2")]
        s: String,
        #[arg(long, short = 'n', default_value_t = 1_000_000)]
        cutoff: u64,
    },
    /// Random prime model: c-hat and growth slope per seed.
    RandomStudy {
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.5)]
        c: f64,
        #[arg(long, default_value = "1,2,3,4,5")]
        seeds: String,
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Minimal discrepancy of completely multiplicative functions for N = 2..=limit.
    Search {
        #[arg(long, short = 'n', default_value_t = 30)]
        limit: usize,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
    /// Check S_g(x) = 1 for odd x and 0 for even x, for all x <= limit.
    VerifyG {
        #[arg(long, short = 'n', default_value_t = 10_000_000)]
        limit: u64,
    },
}

/// Result of one command: an optional CSV table, summary lines for stderr,
/// and whether the command's check succeeded.
#[derive(Debug)]
pub struct Outcome {
    pub table: Option<Table>,
    pub summary: Vec<String>,
    pub success: bool,
}

impl Outcome {
    fn table(table: Table, summary: Vec<String>) -> Self {
        Outcome {
            table: Some(table),
            summary,
            success: true,
        }
    }
}

pub fn load_function(source: &str) -> Result<FunctionSpec> {
    let path = Path::new(source);
    if source.ends_with(".json") || path.exists() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading spec file {source}"))?;
        Ok(parse_function_spec(&text)?)
    } else {
        Ok(multdisc::make_builtin(source)?)
    }
}

pub fn parse_checkpoints(policy: &str, limit: usize) -> Result<Vec<usize>> {
    if limit < 2 {
        bail!("limit must be at least 2, got {limit}");
    }
    if let Some(ratio) = policy.strip_prefix("geometric:") {
        let ratio: f64 = ratio.parse().with_context(|| format!("bad geometric ratio '{ratio}'"))?;
        Ok(geometric_checkpoints(10.min(limit), limit, ratio)?)
    } else if let Some(list) = policy.strip_prefix("list:") {
        list.split(',')
            .map(|x| x.trim().parse::<usize>().with_context(|| format!("bad checkpoint '{x}'")))
            .collect()
    } else {
        bail!("checkpoint policy must be geometric:<ratio> or list:<x,...>, got '{policy}'")
    }
}

fn parse_reals(list: &str) -> Result<Vec<f64>> {
    list.split(',')
        .map(|x| x.trim().parse::<f64>().with_context(|| format!("bad number '{x}'")))
        .collect()
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Sums { function, range, twisted } => {
            let spec = load_function(&function.function)?;
            let limit = range.limit as usize;
            let cps = parse_checkpoints(&range.checkpoints, limit)?;
            let sieve = build_sieve(range.limit)?;
            let values = batch_values(&spec, &sieve, limit)?;
            let series = if *twisted {
                twisted_series(&values, &cps)?
            } else {
                partial_sum_series(&values, &cps)?
            };
            let mut t = Table::new(&["x", "S", "abs-max", "mean"]);
            for i in 0..series.checkpoints.len() {
                t.push(vec![
                    series.checkpoints[i].into(),
                    series.sums[i].into(),
                    series.running_max_abs[i].into(),
                    series.means[i].into(),
                ]);
            }
            let mut summary = vec![format!(
                "{}{}: S({limit}) = {}, max |S| = {}",
                if *twisted { "mu * " } else { "" },
                spec.label(),
                series.sums.last().unwrap(),
                series.running_max_abs.last().unwrap()
            )];
            match growth_fit(&series) {
                Ok(fit) => summary.push(format!(
                    "growth slope {:.4} over {} points{} (heuristic)",
                    fit.slope,
                    fit.points_used,
                    if fit.bounded { ", running max flat: looks bounded" } else { "" }
                )),
                Err(e) => summary.push(format!("growth fit unavailable: {e}")),
            }
            Ok(Outcome::table(t, summary))
        }
        Command::Hap { function, limit, max_diff } => {
            let spec = load_function(&function.function)?;
            let sieve = build_sieve(*limit)?;
            let values = batch_values(&spec, &sieve, *limit as usize)?;
            let report = hap_discrepancy(&values, *limit as usize, *max_diff)?;
            let mut t = Table::new(&["d", "n", "abs-sum"]);
            for m in &report.per_d_max {
                t.push(vec![m.d.into(), m.n.into(), m.value.into()]);
            }
            let b = report.best;
            Ok(Outcome::table(
                t,
                vec![format!(
                    "{}: best |sum_(k<=n) f(kd)| = {} at d = {}, n = {} (N = {limit}, D = {max_diff})",
                    spec.label(),
                    b.value,
                    b.d,
                    b.n
                )],
            ))
        }
        Command::Primes { function, range, depth, powers } => {
            let spec = load_function(&function.function)?;
            let limit = range.limit as usize;
            let cps = parse_checkpoints(&range.checkpoints, limit)?;
            let sieve = build_sieve(range.limit)?;
            let series = prime_sum_series(&spec, &sieve, &cps)?;
            let fit = density_fit(&series, *depth)?;
            let mut t = Table::new(&[
                "x",
                "pi",
                "sum-fp",
                "sum-fp-over-p",
                "sum-one-minus-fp-over-p",
                "sum-reciprocal",
                "loglog-x",
                "density-ratio",
            ]);
            for i in 0..cps.len() {
                let ratio = fit
                    .residual_curve
                    .iter()
                    .find(|(x, _)| *x == cps[i])
                    .map(|&(_, r)| r);
                t.push(vec![
                    cps[i].into(),
                    series.prime_counts[i].into(),
                    series.sum_fp[i].into(),
                    series.sum_fp_over_p[i].into(),
                    series.sum_one_minus_fp_over_p[i].into(),
                    series.sum_reciprocal[i].into(),
                    series.loglog_x[i].into(),
                    ratio.into(),
                ]);
            }
            let mv = mean_value_report(&spec, &sieve, limit, *powers)?;
            Ok(Outcome::table(
                t,
                vec![
                    format!("{}: c-hat = {:.6} (depth {depth})", spec.label(), fit.c_hat),
                    format!(
                        "mean value (heuristic): {}; Wirsing product {:.12}; criterion sum {:.6}; smallest local factor {:.3e} at p = {}",
                        mv.verdict.as_str(),
                        mv.wirsing_product,
                        mv.criterion_sum,
                        mv.min_local_factor.1,
                        mv.min_local_factor.0
                    ),
                ],
            ))
        }
        Command::Dirichlet { function, sigma, cutoff } => {
            let spec = load_function(&function.function)?;
            let sigmas = parse_reals(sigma)?;
            let sieve = build_sieve(*cutoff)?;
            let values = batch_values(&spec, &sieve, *cutoff as usize)?;
            let n = *cutoff as usize;
            let mut t = Table::new(&[
                "sigma",
                "direct",
                "direct-tail",
                "euler-fc",
                "euler-fc-tail",
                "prime-sum",
                "remainder",
                "log-f",
            ]);
            for &s in &sigmas {
                let d = dirichlet_direct(&values, s, n)?;
                let e = euler_product(&spec, &sieve, s, n)?;
                let l = log_f_decomposition(&spec, &sieve, s, n)?;
                t.push(vec![
                    s.into(),
                    d.value.into(),
                    d.tail_bound.into(),
                    e.value.into(),
                    e.tail_bound.into(),
                    l.prime_sum.into(),
                    l.remainder.into(),
                    l.log_f.into(),
                ]);
            }
            Ok(Outcome::table(t, vec![format!("{}: {} sigma values", spec.label(), sigmas.len())]))
        }
        Command::Pisigma { function, sigma, cutoff, powers } => {
            let spec = load_function(&function.function)?;
            let sigmas = parse_reals(sigma)?;
            let sieve = build_sieve(*cutoff)?;
            let n = *cutoff as usize;
            let fc = spec.completely_multiplicative_part();
            let needs_direct = sigmas.iter().any(|&s| s > 1.0);
            let values = if needs_direct { Some(batch_values(&spec, &sieve, n)?) } else { None };
            let mut t = Table::new(&[
                "sigma",
                "pi-sigma",
                "pi-tail",
                "euler-fc",
                "product",
                "direct",
                "direct-tail",
            ]);
            for &s in &sigmas {
                let pi = pi_sigma(&spec, &sieve, s, n, *powers)?;
                let (e, d) = if s > 1.0 {
                    let e = euler_product(&fc, &sieve, s, n)?;
                    let d = dirichlet_direct(values.as_ref().unwrap(), s, n)?;
                    (Some(e), Some(d))
                } else {
                    (None, None)
                };
                t.push(vec![
                    s.into(),
                    pi.approx.value.into(),
                    pi.approx.tail_bound.into(),
                    e.map(|e| e.value).into(),
                    e.map(|e| e.value * pi.approx.value).into(),
                    d.map(|d| d.value).into(),
                    d.map(|d| d.tail_bound).into(),
                ]);
            }
            Ok(Outcome::table(t, vec![format!("{}: Pi(sigma) at {} points", spec.label(), sigmas.len())]))
        }
        Command::Sigma0 { function } => {
            let spec = load_function(&function.function)?;
            let r = sigma_zero(&spec)?;
            let mut t = Table::new(&["k0", "alpha", "sigma0"]);
            t.push(vec![r.k0.into(), r.alpha.into(), r.sigma0.into()]);
            Ok(Outcome::table(
                t,
                vec![format!(
                    "{}: k0 = {}, sigma0 = {:.12}",
                    spec.label(),
                    r.k0.map_or("none".to_string(), |k| k.to_string()),
                    r.sigma0
                )],
            ))
        }
        Command::Probe { function, c, s, cutoff } => {
            let spec = load_function(&function.function)?;
            let ss = parse_reals(s)?;
            let sieve = build_sieve(*cutoff)?;
            let mut t = Table::new(&[
                "s",
                "c",
                "f",
                "zeta-s",
                "zeta-2s",
                "prime-zeta-2s",
                "exp-term",
                "d-value",
                "reconstruction",
                "composed-bound",
            ]);
            for &s in &ss {
                let p = factorization_probe(&spec, &sieve, *c, s, *cutoff as usize)?;
                t.push(vec![
                    p.s.into(),
                    p.c.into(),
                    p.f_value.value.into(),
                    p.zeta_s.value.into(),
                    p.zeta_2s.value.into(),
                    p.prime_zeta_2s.value.into(),
                    p.exp_term.into(),
                    p.d_value.into(),
                    p.reconstruction.into(),
                    p.composed_bound.into(),
                ]);
            }
            Ok(Outcome::table(
                t,
                vec![format!("{}: d-value is the extracted residual of the factorization", spec.label())],
            ))
        }
        Command::RandomStudy { c, seeds, range } => {
            let seeds: Vec<u64> = seeds
                .split(',')
                .map(|x| x.trim().parse::<u64>().with_context(|| format!("bad seed '{x}'")))
                .collect::<Result<_>>()?;
            let limit = range.limit as usize;
            let cps = parse_checkpoints(&range.checkpoints, limit)?;
            let sieve = build_sieve(range.limit)?;
            let mut t = Table::new(&["seed", "c", "c-hat", "pi", "S", "abs-max", "slope", "bounded"]);
            for &seed in &seeds {
                let spec = FunctionSpec::random(*c, seed)?;
                let ps = prime_sum_series(&spec, &sieve, &[limit])?;
                let fit = density_fit(&ps, 0)?;
                let values = batch_values(&spec, &sieve, limit)?;
                let series = partial_sum_series(&values, &cps)?;
                let g = growth_fit(&series).ok();
                t.push(vec![
                    seed.into(),
                    (*c).into(),
                    fit.c_hat.into(),
                    ps.prime_counts[0].into(),
                    (*series.sums.last().unwrap()).into(),
                    (*series.running_max_abs.last().unwrap()).into(),
                    g.as_ref().map(|g| g.slope).into(),
                    g.as_ref().map(|g| g.bounded).into(),
                ]);
            }
            Ok(Outcome::table(t, vec![format!("random model c = {c}: {} seeds to {limit}", seeds.len())]))
        }
        Command::Search { limit, budget } => {
            let mut t = Table::new(&["N", "best-discrepancy", "nodes", "exhaustive", "witness"]);
            for n in 2..=*limit {
                let r = min_discrepancy_search(n, *budget)?;
                let witness = r
                    .witness
                    .iter()
                    .map(|(p, s)| format!("{p}:{s}"))
                    .collect::<Vec<_>>()
                    .join(";");
                t.push(vec![
                    n.into(),
                    r.best_discrepancy.into(),
                    r.nodes_explored.into(),
                    r.exhaustive.into(),
                    witness.into(),
                ]);
            }
            Ok(Outcome::table(t, vec![format!("searched N = 2..={limit}")]))
        }
        Command::VerifyG { limit } => {
            let sieve = build_sieve(*limit)?;
            let values = batch_values(&FunctionSpec::counterexample_g(), &sieve, *limit as usize)?;
            match verify_g(&values) {
                Ok(()) => Ok(Outcome {
                    table: None,
                    summary: vec![format!("S_g(x) = x mod 2 for every x <= {limit}")],
                    success: true,
                }),
                Err(e) => Ok(Outcome {
                    table: None,
                    summary: vec![format!("verification failed: {e}")],
                    success: false,
                }),
            }
        }
    }
}

/// `S_g(x)` is 1 for odd `x` and 0 for even `x` on the whole table.
pub fn verify_g(values: &multdisc::ValueTable) -> Result<()> {
    let mut s = 0i64;
    for x in 1..=values.limit() {
        s += values.f(x) as i64;
        if s != (x % 2) as i64 {
            return Err(anyhow!("S({x}) = {s}"));
        }
    }
    Ok(())
}
