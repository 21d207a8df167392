//! Declarative ±1 multiplicative functions and their pointwise evaluation.
//!
//! A [`FunctionSpec`] fixes a function `f: N -> {-1,+1}` with `f(1) = 1` by
//! its values on prime powers. [`FunctionSpec::value_at`] factors its argument
//! by trial division; it is deliberately slow and serves as the reference the
//! sieve engine is tested against.

use std::collections::BTreeMap;
use std::fmt;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A value in `{-1, +1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    #[inline]
    pub fn value(self) -> i8 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }

    pub fn from_int(v: i64) -> Option<Sign> {
        match v {
            -1 => Some(Sign::Minus),
            1 => Some(Sign::Plus),
            _ => None,
        }
    }

    #[inline]
    pub fn from_i8(v: i8) -> Sign {
        if v < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn pow(self, k: u32) -> Sign {
        if self == Sign::Minus && k % 2 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecKind {
    Builtin,
    CompletelyMultiplicative,
    Multiplicative,
    RandomPrimeDensity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Builtin {
    /// `f(n) = 1`.
    One,
    /// `f(n) = (-1)^Omega(n)`.
    Liouville,
    /// `f(2^k) = -1` for `k >= 1` and `f(p^k) = 1` for odd `p`; period 2.
    CounterexampleG,
}

impl Builtin {
    pub fn name(self) -> &'static str {
        match self {
            Builtin::One => "one",
            Builtin::Liouville => "liouville",
            Builtin::CounterexampleG => "counterexample-g",
        }
    }
}

impl std::str::FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "one" => Ok(Builtin::One),
            "liouville" => Ok(Builtin::Liouville),
            "counterexample-g" | "g" => Ok(Builtin::CounterexampleG),
            other => Err(Error::UnknownBuiltin(other.to_string())),
        }
    }
}

/// How `f(p^k)`, `k >= 2`, is derived when no override is declared.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PowerRule {
    /// `f(p^k) = f(p)^k`.
    #[default]
    PowerOfPrimeValue,
    /// `f(p^k) = 1` for `k >= 2`.
    ConstantOneAboveFirst,
    /// `f(p^k) = f(p)`.
    RepeatPrimeValue,
}

/// Parameters of the random prime model: `f(p) = +1` with probability `(1+c)/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomModel {
    pub c: f64,
    pub seed: u64,
}

impl RandomModel {
    /// Draws `f(p)` from a ChaCha stream keyed by `(seed, p)`, so the value
    /// of one prime never depends on which other primes were evaluated.
    pub fn prime_value(&self, p: u64) -> Sign {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(p);
        let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        if u < (1.0 + self.c) / 2.0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FunctionSpec {
    kind: SpecKind,
    builtin: Option<Builtin>,
    prime_values: BTreeMap<u64, Sign>,
    default_prime_value: Sign,
    power_overrides: BTreeMap<(u64, u32), Sign>,
    power_rule: PowerRule,
    random: Option<RandomModel>,
}

pub fn make_builtin(name: &str) -> Result<FunctionSpec> {
    Ok(FunctionSpec::builtin(name.parse()?))
}

pub fn parse_function_spec(text: &str) -> Result<FunctionSpec> {
    let raw: RawSpec =
        serde_json::from_str(text).map_err(|e| Error::MalformedSpec(e.to_string()))?;
    raw.validate()
}

impl FunctionSpec {
    pub fn builtin(b: Builtin) -> Self {
        FunctionSpec {
            kind: SpecKind::Builtin,
            builtin: Some(b),
            prime_values: BTreeMap::new(),
            default_prime_value: Sign::Plus,
            power_overrides: BTreeMap::new(),
            power_rule: PowerRule::PowerOfPrimeValue,
            random: None,
        }
    }

    pub fn one() -> Self {
        Self::builtin(Builtin::One)
    }

    pub fn liouville() -> Self {
        Self::builtin(Builtin::Liouville)
    }

    pub fn counterexample_g() -> Self {
        Self::builtin(Builtin::CounterexampleG)
    }

    pub fn completely_multiplicative(
        prime_values: BTreeMap<u64, Sign>,
        default_prime_value: Sign,
    ) -> Result<Self> {
        check_prime_keys(&prime_values)?;
        Ok(FunctionSpec {
            kind: SpecKind::CompletelyMultiplicative,
            builtin: None,
            prime_values,
            default_prime_value,
            power_overrides: BTreeMap::new(),
            power_rule: PowerRule::PowerOfPrimeValue,
            random: None,
        })
    }

    pub fn multiplicative(
        prime_values: BTreeMap<u64, Sign>,
        default_prime_value: Sign,
        power_overrides: BTreeMap<(u64, u32), Sign>,
        power_rule: PowerRule,
    ) -> Result<Self> {
        check_prime_keys(&prime_values)?;
        for &(p, k) in power_overrides.keys() {
            if !is_prime(p) {
                return Err(Error::InvalidSpec(format!("override key {p}^{k}: {p} is not prime")));
            }
            if k < 2 {
                return Err(Error::InvalidSpec(format!(
                    "override key {p}^{k}: exponent must be >= 2 (use prime-values for k = 1)"
                )));
            }
        }
        Ok(FunctionSpec {
            kind: SpecKind::Multiplicative,
            builtin: None,
            prime_values,
            default_prime_value,
            power_overrides,
            power_rule,
            random: None,
        })
    }

    pub fn random(c: f64, seed: u64) -> Result<Self> {
        Self::random_with_rule(c, seed, PowerRule::PowerOfPrimeValue)
    }

    pub fn random_with_rule(c: f64, seed: u64, power_rule: PowerRule) -> Result<Self> {
        if !(-1.0..=1.0).contains(&c) {
            return Err(Error::InvalidSpec(format!("c = {c} is outside [-1, 1]")));
        }
        Ok(FunctionSpec {
            kind: SpecKind::RandomPrimeDensity,
            builtin: None,
            prime_values: BTreeMap::new(),
            default_prime_value: Sign::Plus,
            power_overrides: BTreeMap::new(),
            power_rule,
            random: Some(RandomModel { c, seed }),
        })
    }

    pub fn kind(&self) -> SpecKind {
        self.kind
    }

    pub fn builtin_name(&self) -> Option<Builtin> {
        self.builtin
    }

    pub fn random_model(&self) -> Option<RandomModel> {
        self.random
    }

    pub fn power_rule(&self) -> PowerRule {
        self.power_rule
    }

    pub fn label(&self) -> String {
        match (self.kind, self.builtin, self.random) {
            (SpecKind::Builtin, Some(b), _) => b.name().to_string(),
            (SpecKind::RandomPrimeDensity, _, Some(r)) => format!("random(c={}, seed={})", r.c, r.seed),
            (SpecKind::CompletelyMultiplicative, ..) => "completely-multiplicative".to_string(),
            _ => "multiplicative".to_string(),
        }
    }

    /// True when `f(p^k) = f(p)^k` holds by construction.
    pub fn is_completely_multiplicative(&self) -> bool {
        match self.kind {
            SpecKind::Builtin => self.builtin != Some(Builtin::CounterexampleG),
            SpecKind::CompletelyMultiplicative => true,
            SpecKind::RandomPrimeDensity | SpecKind::Multiplicative => {
                self.power_rule == PowerRule::PowerOfPrimeValue && self.power_overrides.is_empty()
            }
        }
    }

    /// The completely multiplicative function agreeing with `self` on primes.
    pub fn completely_multiplicative_part(&self) -> FunctionSpec {
        match self.kind {
            SpecKind::Builtin => match self.builtin {
                Some(Builtin::CounterexampleG) => {
                    let mut pv = BTreeMap::new();
                    pv.insert(2, Sign::Minus);
                    FunctionSpec::completely_multiplicative(pv, Sign::Plus)
                        .expect("2 is prime")
                }
                _ => self.clone(),
            },
            SpecKind::CompletelyMultiplicative => self.clone(),
            SpecKind::Multiplicative => FunctionSpec {
                kind: SpecKind::CompletelyMultiplicative,
                power_overrides: BTreeMap::new(),
                power_rule: PowerRule::PowerOfPrimeValue,
                ..self.clone()
            },
            SpecKind::RandomPrimeDensity => FunctionSpec {
                power_overrides: BTreeMap::new(),
                power_rule: PowerRule::PowerOfPrimeValue,
                ..self.clone()
            },
        }
    }

    /// `f(p)` for a prime `p`. The argument is not checked for primality.
    pub fn prime_value(&self, p: u64) -> Sign {
        match self.kind {
            SpecKind::Builtin => match self.builtin {
                Some(Builtin::One) | None => Sign::Plus,
                Some(Builtin::Liouville) => Sign::Minus,
                Some(Builtin::CounterexampleG) => {
                    if p == 2 {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    }
                }
            },
            SpecKind::RandomPrimeDensity => self
                .random
                .expect("random kind always carries its model")
                .prime_value(p),
            _ => *self.prime_values.get(&p).unwrap_or(&self.default_prime_value),
        }
    }

    /// `f(p^k)` given the already known `f(p)`; `k >= 1`.
    pub fn power_value_with(&self, p: u64, k: u32, fp: Sign) -> Sign {
        if k == 1 {
            return fp;
        }
        if let Some(b) = self.builtin {
            return match b {
                Builtin::One => Sign::Plus,
                Builtin::Liouville => Sign::Minus.pow(k),
                Builtin::CounterexampleG => {
                    if p == 2 {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    }
                }
            };
        }
        if let Some(&v) = self.power_overrides.get(&(p, k)) {
            return v;
        }
        match self.power_rule {
            PowerRule::PowerOfPrimeValue => fp.pow(k),
            PowerRule::ConstantOneAboveFirst => Sign::Plus,
            PowerRule::RepeatPrimeValue => fp,
        }
    }

    pub fn power_value(&self, p: u64, k: u32) -> Sign {
        self.power_value_with(p, k, self.prime_value(p))
    }

    /// Largest exponent with an explicit override at `p` (0 when none).
    pub fn max_override_exponent(&self, p: u64) -> u32 {
        self.power_overrides
            .range((p, 0)..=(p, u32::MAX))
            .map(|(&(_, k), _)| k)
            .max()
            .unwrap_or(0)
    }

    /// Pointwise evaluation by trial division.
    pub fn value_at(&self, n: u64) -> Result<Sign> {
        if n == 0 {
            return Err(Error::ZeroArgument(n));
        }
        let mut m = n;
        let mut acc = Sign::Plus;
        let mut d = 2u64;
        while d * d <= m {
            if m % d == 0 {
                let mut k = 0;
                while m % d == 0 {
                    m /= d;
                    k += 1;
                }
                acc = acc * self.power_value(d, k);
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if m > 1 {
            acc = acc * self.prime_value(m);
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> String {
        let raw = RawSpec::from(self);
        serde_json::to_string(&raw).expect("spec serialization cannot fail")
    }
}

fn check_prime_keys(prime_values: &BTreeMap<u64, Sign>) -> Result<()> {
    for &p in prime_values.keys() {
        if !is_prime(p) {
            return Err(Error::InvalidSpec(format!("prime-values key {p} is not prime")));
        }
    }
    Ok(())
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// On-disk JSON form. Field names are the public schema.
#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct RawSpec {
    kind: Option<SpecKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    builtin: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    prime_values: Option<BTreeMap<String, i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    default_prime_value: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    prime_power_overrides: Option<BTreeMap<String, i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    power_default_rule: Option<PowerRule>,
    #[serde(skip_serializing_if = "Option::is_none")]
    c: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

fn sign_of(key: &str, v: i64) -> Result<Sign> {
    Sign::from_int(v).ok_or_else(|| Error::ValueOutOfRange {
        key: key.to_string(),
        value: v.to_string(),
    })
}

fn parse_prime_key(key: &str) -> Result<u64> {
    key.trim()
        .parse::<u64>()
        .map_err(|_| Error::InvalidSpec(format!("prime key '{key}' is not an integer")))
}

fn parse_power_key(key: &str) -> Result<(u64, u32)> {
    let (p, k) = key
        .split_once('^')
        .ok_or_else(|| Error::InvalidSpec(format!("override key '{key}' must look like \"p^k\"")))?;
    let p = parse_prime_key(p)?;
    let k = k
        .trim()
        .parse::<u32>()
        .map_err(|_| Error::InvalidSpec(format!("override key '{key}' has a bad exponent")))?;
    Ok((p, k))
}

impl RawSpec {
    fn validate(self) -> Result<FunctionSpec> {
        let kind = self
            .kind
            .ok_or_else(|| Error::InvalidSpec("missing field 'kind'".into()))?;

        if kind != SpecKind::RandomPrimeDensity && (self.c.is_some() || self.seed.is_some()) {
            return Err(Error::InvalidSpec("'c' and 'seed' are only allowed for random-prime-density".into()));
        }
        if kind != SpecKind::Builtin && self.builtin.is_some() {
            return Err(Error::InvalidSpec("'builtin' is only allowed for kind builtin".into()));
        }
        if kind != SpecKind::Multiplicative && self.prime_power_overrides.is_some() {
            return Err(Error::InvalidSpec(
                "'prime-power-overrides' is only allowed for kind multiplicative".into(),
            ));
        }

        let mut prime_values = BTreeMap::new();
        for (key, v) in self.prime_values.iter().flatten() {
            let sign = sign_of(key, *v)?;
            prime_values.insert(parse_prime_key(key)?, sign);
        }
        let default_prime_value = match self.default_prime_value {
            Some(v) => sign_of("default-prime-value", v)?,
            None => Sign::Plus,
        };

        match kind {
            SpecKind::Builtin => {
                if self.prime_values.is_some()
                    || self.default_prime_value.is_some()
                    || self.power_default_rule.is_some()
                {
                    return Err(Error::InvalidSpec("builtin specs take no value tables".into()));
                }
                let name = self
                    .builtin
                    .ok_or_else(|| Error::InvalidSpec("kind builtin requires 'builtin'".into()))?;
                make_builtin(&name)
            }
            SpecKind::CompletelyMultiplicative => {
                if matches!(self.power_default_rule, Some(r) if r != PowerRule::PowerOfPrimeValue) {
                    return Err(Error::InvalidSpec(
                        "completely-multiplicative specs require power-of-prime-value".into(),
                    ));
                }
                FunctionSpec::completely_multiplicative(prime_values, default_prime_value)
            }
            SpecKind::Multiplicative => {
                let mut overrides = BTreeMap::new();
                for (key, v) in self.prime_power_overrides.iter().flatten() {
                    let sign = sign_of(key, *v)?;
                    overrides.insert(parse_power_key(key)?, sign);
                }
                FunctionSpec::multiplicative(
                    prime_values,
                    default_prime_value,
                    overrides,
                    self.power_default_rule.unwrap_or_default(),
                )
            }
            SpecKind::RandomPrimeDensity => {
                if self.prime_values.is_some() || self.default_prime_value.is_some() {
                    return Err(Error::InvalidSpec("random specs take no prime table".into()));
                }
                let c = self
                    .c
                    .ok_or_else(|| Error::InvalidSpec("random-prime-density requires 'c'".into()))?;
                let seed = self
                    .seed
                    .ok_or_else(|| Error::InvalidSpec("random-prime-density requires 'seed'".into()))?;
                FunctionSpec::random_with_rule(c, seed, self.power_default_rule.unwrap_or_default())
            }
        }
    }
}

impl From<&FunctionSpec> for RawSpec {
    fn from(spec: &FunctionSpec) -> Self {
        let mut raw = RawSpec {
            kind: Some(spec.kind),
            ..Default::default()
        };
        match spec.kind {
            SpecKind::Builtin => raw.builtin = spec.builtin.map(|b| b.name().to_string()),
            SpecKind::RandomPrimeDensity => {
                let r = spec.random.expect("random kind carries its model");
                raw.c = Some(r.c);
                raw.seed = Some(r.seed);
                raw.power_default_rule = Some(spec.power_rule);
            }
            SpecKind::CompletelyMultiplicative | SpecKind::Multiplicative => {
                raw.prime_values = Some(
                    spec.prime_values
                        .iter()
                        .map(|(p, s)| (p.to_string(), s.value() as i64))
                        .collect(),
                );
                raw.default_prime_value = Some(spec.default_prime_value.value() as i64);
                if spec.kind == SpecKind::Multiplicative {
                    raw.prime_power_overrides = Some(
                        spec.power_overrides
                            .iter()
                            .map(|((p, k), s)| (format!("{p}^{k}"), s.value() as i64))
                            .collect(),
                    );
                    raw.power_default_rule = Some(spec.power_rule);
                }
            }
        }
        raw
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g() -> FunctionSpec {
        FunctionSpec::counterexample_g()
    }

    #[test]
    fn parses_builtin_g() {
        let spec = parse_function_spec(r#"{"kind":"builtin","builtin":"counterexample-g"}"#).unwrap();
        assert_eq!(spec, g());
    }

    #[test]
    fn parses_completely_multiplicative_table() {
        let spec = parse_function_spec(
            r#"{"kind":"completely-multiplicative","prime-values":{"2":-1},"default-prime-value":1}"#,
        )
        .unwrap();
        assert_eq!(spec.prime_value(2), Sign::Minus);
        assert_eq!(spec.prime_value(3), Sign::Plus);
        assert_eq!(spec.value_at(8).unwrap(), Sign::Minus);
    }

    #[test]
    fn rejects_value_outside_signs() {
        let err = parse_function_spec(r#"{"kind":"completely-multiplicative","prime-values":{"2":2}}"#)
            .unwrap_err();
        assert!(matches!(err, Error::ValueOutOfRange { .. }));
        assert!(err.to_string().contains("value outside {-1,+1}"));
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!(parse_function_spec("{not json"), Err(Error::MalformedSpec(_))));
        assert!(matches!(
            parse_function_spec(r#"{"kind":"builtin","builtin":"mobius"}"#),
            Err(Error::UnknownBuiltin(_))
        ));
        assert!(matches!(
            parse_function_spec(r#"{"kind":"random-prime-density","c":0.5}"#),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            parse_function_spec(r#"{"kind":"random-prime-density","c":1.5,"seed":1}"#),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            parse_function_spec(r#"{"kind":"builtin","builtin":"one","colour":"red"}"#),
            Err(Error::MalformedSpec(_))
        ));
        assert!(parse_function_spec(r#"{"kind":"completely-multiplicative","seed":3}"#).is_err());
        assert!(parse_function_spec(r#"{"kind":"completely-multiplicative","prime-values":{"4":1}}"#).is_err());
        assert!(parse_function_spec(
            r#"{"kind":"multiplicative","prime-power-overrides":{"2^1":1}}"#
        )
        .is_err());
    }

    #[test]
    fn builtins_match_definitions() {
        assert_eq!(make_builtin("counterexample-g").unwrap().value_at(2).unwrap(), Sign::Minus);
        for n in [1, 2, 17, 360, 1001] {
            assert_eq!(make_builtin("one").unwrap().value_at(n).unwrap(), Sign::Plus);
        }
        assert_eq!(make_builtin("liouville").unwrap().value_at(4).unwrap(), Sign::Plus);
        assert!(matches!(make_builtin("zeta"), Err(Error::UnknownBuiltin(_))));
    }

    #[test]
    fn value_at_examples() {
        assert_eq!(g().value_at(12).unwrap(), Sign::Minus);
        assert_eq!(FunctionSpec::liouville().value_at(12).unwrap(), Sign::Minus);
        assert_eq!(g().value_at(7).unwrap(), Sign::Plus);
        assert_eq!(g().value_at(1).unwrap(), Sign::Plus);
        assert!(matches!(g().value_at(0), Err(Error::ZeroArgument(0))));
    }

    #[test]
    fn g_parity_law() {
        let g = g();
        for n in 1..=100_000u64 {
            assert_eq!(g.value_at(2 * n).unwrap(), Sign::Minus);
            assert_eq!(g.value_at(2 * n - 1).unwrap(), Sign::Plus);
        }
    }

    #[test]
    fn power_rules() {
        let mut pv = BTreeMap::new();
        pv.insert(3, Sign::Minus);
        let mut ov = BTreeMap::new();
        ov.insert((3, 4), Sign::Minus);
        let spec = FunctionSpec::multiplicative(pv.clone(), Sign::Plus, ov, PowerRule::ConstantOneAboveFirst)
            .unwrap();
        assert_eq!(spec.power_value(3, 1), Sign::Minus);
        assert_eq!(spec.power_value(3, 2), Sign::Plus);
        assert_eq!(spec.power_value(3, 4), Sign::Minus);
        assert_eq!(spec.max_override_exponent(3), 4);
        assert_eq!(spec.max_override_exponent(5), 0);

        let rep = FunctionSpec::multiplicative(pv, Sign::Plus, BTreeMap::new(), PowerRule::RepeatPrimeValue)
            .unwrap();
        assert_eq!(rep.power_value(3, 5), Sign::Minus);
        assert_eq!(rep.power_value(3, 6), Sign::Minus);
    }

    #[test]
    fn random_model_is_deterministic_and_extreme_cases_are_constant() {
        let a = FunctionSpec::random(0.3, 99).unwrap();
        let b = FunctionSpec::random(0.3, 99).unwrap();
        for n in 1..=100_000 {
            assert_eq!(a.value_at(n).unwrap(), b.value_at(n).unwrap());
        }
        let plus = FunctionSpec::random(1.0, 5).unwrap();
        let minus = FunctionSpec::random(-1.0, 5).unwrap();
        for p in [2, 3, 5, 7, 11, 101, 7919] {
            assert_eq!(plus.prime_value(p), Sign::Plus);
            assert_eq!(minus.prime_value(p), Sign::Minus);
        }
    }

    #[test]
    fn completely_multiplicative_part_of_g() {
        let fc = g().completely_multiplicative_part();
        assert!(fc.is_completely_multiplicative());
        assert_eq!(fc.value_at(4).unwrap(), Sign::Plus);
        assert_eq!(fc.value_at(6).unwrap(), Sign::Minus);
        assert!(!g().is_completely_multiplicative());
    }

    #[test]
    fn json_round_trip() {
        let mut pv = BTreeMap::new();
        pv.insert(2, Sign::Minus);
        pv.insert(7, Sign::Minus);
        let mut ov = BTreeMap::new();
        ov.insert((2, 3), Sign::Plus);
        let specs = [
            g(),
            FunctionSpec::random(-0.25, 7).unwrap(),
            FunctionSpec::completely_multiplicative(pv.clone(), Sign::Minus).unwrap(),
            FunctionSpec::multiplicative(pv, Sign::Plus, ov, PowerRule::RepeatPrimeValue).unwrap(),
        ];
        for spec in specs {
            let back = parse_function_spec(&spec.to_json()).unwrap();
            assert_eq!(back, spec);
        }
    }
}
