//! Shift-by-four comparison of Ext groups over random pairs.
//!
//! Sample `k` uses seeds `base + 2k` for `M` and `base + 2k + 1` for `N`.
//! Degrees are compared by the invariant factors of both pruned levels.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homalg::{ext_degrees, ResolutionOptions};
use crate::mackey::{prune, CpMackeyFunctor};
use crate::randgen::{random_mackey_functor, RandomSpec};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelInvariants {
    #[serde(with = "super::document::int_list")]
    pub fixed: Vec<BigInt>,
    #[serde(with = "super::document::int_list")]
    pub underlying: Vec<BigInt>,
}

impl LevelInvariants {
    pub fn of(m: &CpMackeyFunctor) -> Self {
        let (fixed, underlying) = prune(m).functor.level_invariants();
        LevelInvariants { fixed, underlying }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DegreeRecord {
    pub degree: usize,
    pub invariants: LevelInvariants,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ShiftMatch {
    pub degree: usize,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SampleRecord {
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed_a: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed_b: Option<u64>,
    pub ext_invariants: Vec<DegreeRecord>,
    /// One entry per degree `n` with `n + 4` still in range.
    pub matches_at_shift4: Vec<ShiftMatch>,
}

impl SampleRecord {
    pub fn all_match(&self) -> bool {
        self.matches_at_shift4.iter().all(|m| m.matches)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PeriodicityReport {
    pub schema: u32,
    pub prime: u64,
    pub sample_count: usize,
    pub degree_range: [usize; 2],
    pub base_seed: u64,
    pub per_sample: Vec<SampleRecord>,
    /// The user-supplied pair, when one was given.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fixture: Option<SampleRecord>,
    /// Fraction of random `(sample, degree)` pairs whose shift-by-four invariants agree.
    pub summary: f64,
}

impl PeriodicityReport {
    pub fn summary_line(&self) -> String {
        let pairs: usize = self
            .per_sample
            .iter()
            .map(|s| s.matches_at_shift4.len())
            .sum();
        let hits: usize = self
            .per_sample
            .iter()
            .flat_map(|s| &s.matches_at_shift4)
            .filter(|m| m.matches)
            .count();
        let mut line = format!(
            "p={} samples={} degrees {}..={}: {hits}/{pairs} degree pairs match at shift 4 ({:.3})",
            self.prime, self.sample_count, self.degree_range[0], self.degree_range[1], self.summary
        );
        if let Some(f) = &self.fixture {
            line.push_str(&format!(
                "; fixture {}",
                if f.all_match() { "matches" } else { "differs" }
            ));
        }
        line
    }
}

#[derive(Clone, Debug)]
pub struct PeriodicityConfig {
    pub prime: u64,
    pub samples: usize,
    pub from: usize,
    pub to: usize,
    pub seed: u64,
    pub fixture: Option<(CpMackeyFunctor, CpMackeyFunctor)>,
}

/// Ext invariants over `from..=to` and the shift-by-four flags.
pub fn sample_record(
    index: usize,
    m: &CpMackeyFunctor,
    n: &CpMackeyFunctor,
    from: usize,
    to: usize,
) -> Result<SampleRecord> {
    let degrees: Vec<usize> = (from..=to).collect();
    let ext = ext_degrees(&degrees, m, n, ResolutionOptions::default())?;
    let ext_invariants: Vec<DegreeRecord> = degrees
        .iter()
        .zip(&ext)
        .map(|(&degree, e)| DegreeRecord {
            degree,
            invariants: LevelInvariants::of(e),
        })
        .collect();
    let matches_at_shift4 = (0..ext_invariants.len().saturating_sub(4))
        .map(|k| ShiftMatch {
            degree: ext_invariants[k].degree,
            matches: ext_invariants[k].invariants == ext_invariants[k + 4].invariants,
        })
        .collect();
    Ok(SampleRecord {
        index,
        seed_a: None,
        seed_b: None,
        ext_invariants,
        matches_at_shift4,
    })
}

pub fn run_periodicity(cfg: &PeriodicityConfig) -> Result<PeriodicityReport> {
    if cfg.to < cfg.from + 4 {
        return Err(Error::Dimension(format!(
            "degree range {}..={} is shorter than one shift of 4",
            cfg.from, cfg.to
        )));
    }
    if cfg.samples == 0 {
        return Err(Error::Dimension("at least one sample is required".into()));
    }
    let mut per_sample: Vec<SampleRecord> = (0..cfg.samples)
        .into_par_iter()
        .map(|k| {
            let seed_a = cfg.seed.wrapping_add(2 * k as u64);
            let seed_b = seed_a.wrapping_add(1);
            let m = random_mackey_functor(&RandomSpec::new(cfg.prime, seed_a))?;
            let n = random_mackey_functor(&RandomSpec::new(cfg.prime, seed_b))?;
            let mut rec = sample_record(k, &m, &n, cfg.from, cfg.to)?;
            rec.seed_a = Some(seed_a);
            rec.seed_b = Some(seed_b);
            Ok(rec)
        })
        .collect::<Result<_>>()?;
    per_sample.sort_by_key(|r| r.index);
    let fixture = cfg
        .fixture
        .as_ref()
        .map(|(m, n)| sample_record(0, m, n, cfg.from, cfg.to))
        .transpose()?;
    let pairs: usize = per_sample.iter().map(|s| s.matches_at_shift4.len()).sum();
    let hits = per_sample
        .iter()
        .flat_map(|s| &s.matches_at_shift4)
        .filter(|m| m.matches)
        .count();
    Ok(PeriodicityReport {
        schema: REPORT_SCHEMA_VERSION,
        prime: cfg.prime,
        sample_count: cfg.samples,
        degree_range: [cfg.from, cfg.to],
        base_seed: cfg.seed,
        per_sample,
        fixture,
        summary: if pairs == 0 {
            0.0
        } else {
            hits as f64 / pairs as f64
        },
    })
}
