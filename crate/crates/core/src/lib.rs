//! Numerical workbench for multiplicative functions `f: N -> {-1, +1}`.
//!
//! The crate is organised bottom-up:
//!
//! - [`function`]: declarative specs and a trial-division evaluator
//! - [`sieve`]: linear sieve and batch tables of `f`, `mu`, `Omega`
//! - [`sums`]: partial sums, homogeneous-progression discrepancy, growth fits
//! - [`primes`]: prime sums, density fits, mean-value criterion
//! - [`dirichlet`]: `zeta`, prime zeta, Euler products, `Pi(sigma)`, `sigma_0`
//! - [`search`]: backtracking search for low-discrepancy assignments

pub mod accum;
pub mod dirichlet;
pub mod error;
pub mod function;
pub mod primes;
pub mod search;
pub mod sieve;
pub mod sums;

pub use error::{Error, Result};
pub use function::{make_builtin, parse_function_spec, Builtin, FunctionSpec, PowerRule, Sign, SpecKind};
pub use sieve::{batch_values, build_sieve, Factorization, SieveTable, ValueTable};
