use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{stream_of, uniform, DOMAIN_PARAMETER};
use crate::error::{Error, Result};
use crate::simplex::Simplex;
use crate::vertex::Vertex;

/// JSON description of a probability system, tagged by `kind`.
///
/// ```json
/// {"kind":"constant","p":0.5}
/// {"kind":"per-size","sizes":[0.5,0.5,1.0],"default":0.5}
/// {"kind":"seeded-range","seed":7,"low":0.3,"high":0.7}
/// {"kind":"table","default":0.5,"entries":[{"simplex":["1","2"],"p":0.9}]}
/// ```
///
/// For `per-size`, `sizes[i]` applies to simplexes with `i + 1` vertices and
/// `default` to larger ones.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ProbabilitySpec {
    Constant { p: f64 },
    PerSize { sizes: Vec<f64>, default: f64 },
    SeededRange { seed: u64, low: f64, high: f64 },
    Table { default: f64, entries: Vec<TableEntry> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub simplex: Vec<String>,
    pub p: f64,
}

#[derive(Debug, Clone, PartialEq)]
enum Rule {
    Constant(f64),
    PerSize(Vec<f64>, f64),
    SeededRange { seed: u64, low: f64, high: f64 },
    Table(BTreeMap<Simplex, f64>, f64),
}

/// A rule `σ ↦ p_σ ∈ [0, 1]` with declared bounds `p_minus <= p_σ <= p_plus`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilitySystem {
    rule: Rule,
    spec: ProbabilitySpec,
}

fn check_probability(p: f64, what: &str) -> Result<f64> {
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(Error::InvalidInput(format!("{what} must lie in [0, 1], got {p}")))
    }
}

impl ProbabilitySystem {
    pub fn constant(p: f64) -> Result<Self> {
        Self::from_spec(ProbabilitySpec::Constant { p })
    }

    /// The default system: every simplex present with probability one half.
    pub fn half() -> Self {
        Self::constant(0.5).expect("valid")
    }

    pub fn per_size(sizes: Vec<f64>, default: f64) -> Result<Self> {
        Self::from_spec(ProbabilitySpec::PerSize { sizes, default })
    }

    /// Each simplex gets an independent uniform value in `[low, high]`, fixed by `seed`.
    pub fn seeded_range(seed: u64, low: f64, high: f64) -> Result<Self> {
        Self::from_spec(ProbabilitySpec::SeededRange { seed, low, high })
    }

    pub fn table(entries: BTreeMap<Simplex, f64>, default: f64) -> Result<Self> {
        let entries = entries
            .into_iter()
            .map(|(s, p)| TableEntry { simplex: s.vertices().iter().map(ToString::to_string).collect(), p })
            .collect();
        Self::from_spec(ProbabilitySpec::Table { default, entries })
    }

    pub fn from_spec(spec: ProbabilitySpec) -> Result<Self> {
        let rule = match &spec {
            ProbabilitySpec::Constant { p } => Rule::Constant(check_probability(*p, "p")?),
            ProbabilitySpec::PerSize { sizes, default } => {
                for p in sizes {
                    check_probability(*p, "per-size entry")?;
                }
                Rule::PerSize(sizes.clone(), check_probability(*default, "default")?)
            }
            ProbabilitySpec::SeededRange { seed, low, high } => {
                check_probability(*low, "low")?;
                check_probability(*high, "high")?;
                if low > high {
                    return Err(Error::InvalidInput(format!("empty range [{low}, {high}]")));
                }
                Rule::SeededRange { seed: *seed, low: *low, high: *high }
            }
            ProbabilitySpec::Table { default, entries } => {
                let mut map = BTreeMap::new();
                for e in entries {
                    let labels = e.simplex.iter().map(|s| s.parse()).collect::<Result<Vec<Vertex>>>()?;
                    map.insert(Simplex::new(labels)?, check_probability(e.p, "table entry")?);
                }
                Rule::Table(map, check_probability(*default, "default")?)
            }
        };
        Ok(ProbabilitySystem { rule, spec })
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        Self::from_spec(serde_json::from_str(text)?)
    }

    pub fn spec(&self) -> &ProbabilitySpec {
        &self.spec
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.spec).expect("specs serialize")
    }

    pub fn p(&self, sigma: &Simplex) -> f64 {
        match &self.rule {
            Rule::Constant(p) => *p,
            Rule::PerSize(sizes, default) => sizes.get(sigma.len() - 1).copied().unwrap_or(*default),
            Rule::SeededRange { seed, low, high } => {
                let u = uniform(*seed, stream_of(DOMAIN_PARAMETER, sigma.vertices()));
                low + (high - low) * u
            }
            Rule::Table(map, default) => map.get(sigma).copied().unwrap_or(*default),
        }
    }

    pub fn q(&self, sigma: &Simplex) -> f64 {
        1.0 - self.p(sigma)
    }

    /// `p_σ` as an exact rational (the exact value of the float).
    pub fn p_exact(&self, sigma: &Simplex) -> BigRational {
        BigRational::from_float(self.p(sigma)).expect("probabilities are finite")
    }

    pub fn q_exact(&self, sigma: &Simplex) -> BigRational {
        BigRational::from_integer(BigInt::from(1)) - self.p_exact(sigma)
    }

    pub fn p_minus(&self) -> f64 {
        self.bounds().0
    }

    pub fn p_plus(&self) -> f64 {
        self.bounds().1
    }

    fn bounds(&self) -> (f64, f64) {
        let fold = |vals: &mut dyn Iterator<Item = f64>| {
            vals.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| (lo.min(p), hi.max(p)))
        };
        match &self.rule {
            Rule::Constant(p) => (*p, *p),
            Rule::PerSize(sizes, default) => fold(&mut sizes.iter().copied().chain([*default])),
            Rule::SeededRange { low, high, .. } => (*low, *high),
            Rule::Table(map, default) => fold(&mut map.values().copied().chain([*default])),
        }
    }

    /// All parameters lie in a closed interval inside `(0, 1)`.
    pub fn is_medial(&self) -> bool {
        let (lo, hi) = self.bounds();
        lo > 0.0 && hi < 1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_round_trip() {
        for text in [
            r#"{"kind":"constant","p":0.5}"#,
            r#"{"kind":"per-size","sizes":[0.5,0.5,1.0],"default":0.5}"#,
            r#"{"kind":"seeded-range","seed":7,"low":0.3,"high":0.7}"#,
            r#"{"kind":"table","default":0.5,"entries":[{"simplex":["1","2"],"p":0.9}]}"#,
        ] {
            let sys = ProbabilitySystem::from_json_str(text).unwrap();
            assert_eq!(serde_json::to_string(sys.spec()).unwrap(), text);
        }
        assert!(ProbabilitySystem::from_json_str(r#"{"kind":"constant","p":1.5}"#).is_err());
        assert!(ProbabilitySystem::from_json_str(r#"{"kind":"gaussian"}"#).is_err());
    }

    #[test]
    fn values_and_bounds() {
        let s = ProbabilitySystem::per_size(vec![0.5, 0.5, 1.0], 0.5).unwrap();
        assert_eq!(s.p(&Simplex::of(&[1, 2, 3])), 1.0);
        assert_eq!(s.p(&Simplex::of(&[1, 2, 3, 4])), 0.5);
        assert!(!s.is_medial());
        let r = ProbabilitySystem::seeded_range(3, 0.3, 0.7).unwrap();
        let p = r.p(&Simplex::of(&[2, 5]));
        assert!((0.3..=0.7).contains(&p));
        assert_eq!(p, r.p(&Simplex::of(&[2, 5])));
        assert_ne!(p, r.p(&Simplex::of(&[2, 6])));
        assert!(r.is_medial());
        let mut table = BTreeMap::new();
        table.insert(Simplex::of(&[1, 2]), 0.9);
        let t = ProbabilitySystem::table(table, 0.25).unwrap();
        assert_eq!((t.p(&Simplex::of(&[1, 2])), t.p(&Simplex::of(&[1]))), (0.9, 0.25));
        assert_eq!((t.p_minus(), t.p_plus()), (0.25, 0.9));
    }
}
