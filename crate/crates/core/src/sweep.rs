//! Cross-checking closed forms against the oracle over enumerated specs.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codespec::{enumerate_specs, CodeSpec, DerivedParams, EnumOptions, UnitJson};
use crate::error::{Error, Result};
use crate::formulas::{hamming_distance, lee_bounds_sandwich, lee_distance, DistanceKind, DistanceResult};
use crate::gf2m::{find_tob, FieldCtx, TraceOrthogonalBasis};
use crate::oracle::{build_span, min_weights_with_budget, smallest_params_oracle, MAX_ENUM_K};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Match,
    WithinBounds,
    Mismatch,
    NotCovered,
    OracleSkipped,
}

impl Verdict {
    pub const ALL: [Verdict; 5] = [
        Verdict::Match,
        Verdict::WithinBounds,
        Verdict::Mismatch,
        Verdict::NotCovered,
        Verdict::OracleSkipped,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "MATCH",
            Verdict::WithinBounds => "WITHIN_BOUNDS",
            Verdict::Mismatch => "MISMATCH",
            Verdict::NotCovered => "NOT_COVERED",
            Verdict::OracleSkipped => "ORACLE_SKIPPED",
        }
    }

    /// Compares a formula outcome with the oracle's minimum Lee weight.
    pub fn judge(formula: &DistanceResult, oracle: Option<u32>) -> Self {
        let Some(d) = oracle else {
            return Verdict::OracleSkipped;
        };
        match (formula.kind, formula.admits(u64::from(d))) {
            (DistanceKind::NotCovered, _) => Verdict::NotCovered,
            (DistanceKind::Exact, Some(true)) => Verdict::Match,
            (DistanceKind::Bounds, Some(true)) => Verdict::WithinBounds,
            _ => Verdict::Mismatch,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleValues {
    pub d_lee: u32,
    pub d_hamming: u32,
    pub k: u32,
}

/// Everything computed for one spec.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub spec: CodeSpec,
    pub params: DerivedParams,
    pub formula: DistanceResult,
    pub hamming: DistanceResult,
    pub sandwich: DistanceResult,
    pub oracle: Option<OracleValues>,
    pub oracle_params: Option<DerivedParams>,
    pub oracle_error: Option<String>,
    pub verdict: Verdict,
    pub ms: u64,
}

impl SweepRow {
    /// Closed-form `L, U, V, W, L1` equal the definitional ones.
    pub fn params_agree(&self) -> Option<bool> {
        self.oracle_params.map(|p| p == self.params)
    }

    /// The Hamming reduction equals the oracle's minimum Hamming weight.
    pub fn hamming_agrees(&self) -> Option<bool> {
        let o = self.oracle?;
        Some(self.hamming.value == Some(u64::from(o.d_hamming)))
    }

    /// `d_H <= d_L <= 2 d_H(<(x+1)^e>)` on the oracle's value.
    pub fn sandwich_holds(&self) -> Option<bool> {
        let o = self.oracle?;
        self.sandwich.admits(u64::from(o.d_lee))
    }

    /// Full JSON view: the spec, both sides, and the checks.
    pub fn to_json_value(&self, timing: bool) -> serde_json::Value {
        serde_json::json!({
            "spec": self.spec.to_json_value(),
            "params": self.params,
            "formula": self.formula,
            "hamming": self.hamming,
            "sandwich": self.sandwich,
            "oracle": self.oracle,
            "oracle_params": self.oracle_params,
            "oracle_error": self.oracle_error,
            "verdict": self.verdict,
            "runtime_ms": timing.then_some(self.ms),
        })
    }

    pub fn record(&self, timing: bool) -> SweepRecord {
        let j = self.spec.to_json_value();
        let unit = |key: &str| {
            j.units.get(key).map(|u| match u {
                UnitJson::Zero(s) => s.clone(),
                UnitJson::Coeffs(c) => c.join(";"),
            })
        };
        let f = &self.formula;
        SweepRecord {
            type_tag: j.type_tag,
            sigma: j.sigma,
            m: j.m,
            ideal: j.params.ideal.clone(),
            l: j.params.l,
            t: j.params.t,
            mu: j.params.mu,
            alpha: j.params.alpha,
            beta: j.params.beta,
            omega: j.params.omega,
            t1: j.params.t1,
            t2: j.params.t2,
            t3: j.params.t3,
            z: unit("z"),
            z1: unit("z1"),
            z2: unit("z2"),
            z3: unit("z3"),
            cap_l: self.params.l,
            cap_u: self.params.u,
            cap_v: self.params.v,
            cap_w: self.params.w,
            cap_l1: self.params.l1,
            formula_kind: match f.kind {
                DistanceKind::Exact => "exact",
                DistanceKind::Bounds => "bounds",
                DistanceKind::NotCovered => "not_covered",
            }
            .to_string(),
            formula_value: f.value,
            lo: f.lo,
            hi: f.hi,
            source: f.source.clone(),
            oracle_dlee: self.oracle.map(|o| o.d_lee),
            oracle_dham: self.oracle.map(|o| o.d_hamming),
            verdict: self.verdict.as_str().to_string(),
            ms: timing.then_some(self.ms),
        }
    }
}

/// The fixed output columns of a sweep, shared by CSV and JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    #[serde(rename = "type")]
    pub type_tag: u8,
    pub sigma: u32,
    pub m: u32,
    pub ideal: Option<String>,
    pub l: Option<u32>,
    pub t: Option<u32>,
    pub mu: Option<u32>,
    pub alpha: Option<u32>,
    pub beta: Option<u32>,
    pub omega: Option<u32>,
    pub t1: Option<u32>,
    pub t2: Option<u32>,
    pub t3: Option<u32>,
    pub z: Option<String>,
    pub z1: Option<String>,
    pub z2: Option<String>,
    pub z3: Option<String>,
    #[serde(rename = "L")]
    pub cap_l: Option<u32>,
    #[serde(rename = "U")]
    pub cap_u: Option<u32>,
    #[serde(rename = "V")]
    pub cap_v: Option<u32>,
    #[serde(rename = "W")]
    pub cap_w: Option<u32>,
    #[serde(rename = "L1")]
    pub cap_l1: Option<u32>,
    pub formula_kind: String,
    pub formula_value: Option<u64>,
    pub lo: Option<u64>,
    pub hi: Option<u64>,
    pub source: String,
    pub oracle_dlee: Option<u32>,
    pub oracle_dham: Option<u32>,
    pub verdict: String,
    pub ms: Option<u64>,
}

pub const CSV_COLUMNS: &[&str] = &[
    "type", "sigma", "m", "ideal", "l", "t", "mu", "alpha", "beta", "omega", "t1", "t2", "t3", "z",
    "z1", "z2", "z3", "L", "U", "V", "W", "L1", "formula_kind", "formula_value", "lo", "hi",
    "source", "oracle_dlee", "oracle_dham", "verdict", "ms",
];

/// Formula, oracle and verdict for one spec. Oracle failures (capacity)
/// are kept on the row rather than aborting.
pub fn evaluate(spec: &CodeSpec, tob: &TraceOrthogonalBasis, budget: u32) -> Result<SweepRow> {
    let start = Instant::now();
    let params = spec.validated()?;
    let formula = lee_distance(spec)?;
    let hamming = hamming_distance(spec)?;
    let sandwich = lee_bounds_sandwich(spec)?;
    let oracle = build_span(spec, tob)
        .and_then(|s| min_weights_with_budget(&s, budget))
        .map(|r| OracleValues {
            d_lee: r.d_lee,
            d_hamming: r.d_hamming,
            k: r.k,
        });
    let (oracle, oracle_error) = match oracle {
        Ok(o) => (Some(o), None),
        Err(Error::Capacity(msg)) => (None, Some(msg)),
        Err(e) => return Err(e),
    };
    let oracle_params = match smallest_params_oracle(spec, tob) {
        Ok(p) => Some(p),
        Err(Error::Capacity(_)) => None,
        Err(e) => return Err(e),
    };
    let verdict = Verdict::judge(&formula, oracle.map(|o| o.d_lee));
    Ok(SweepRow {
        spec: spec.clone(),
        params,
        formula,
        hamming,
        sandwich,
        oracle,
        oracle_params,
        oracle_error,
        verdict,
        ms: start.elapsed().as_millis() as u64,
    })
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub sigma: u32,
    pub m: u32,
    pub types: Vec<u8>,
    pub enumeration: EnumOptions,
    pub budget: u32,
}

impl SweepConfig {
    pub fn new(sigma: u32, m: u32, types: &[u8]) -> Self {
        Self {
            sigma,
            m,
            types: types.to_vec(),
            enumeration: EnumOptions::default(),
            budget: MAX_ENUM_K,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub rows: u64,
    pub verdicts: BTreeMap<String, u64>,
    /// Verdict counts keyed by the formula source (theorem clause).
    pub by_source: BTreeMap<String, BTreeMap<String, u64>>,
    pub params_mismatches: u64,
    pub hamming_mismatches: u64,
    pub sandwich_violations: u64,
}

impl SweepSummary {
    pub fn count(&self, v: Verdict) -> u64 {
        self.verdicts.get(v.as_str()).copied().unwrap_or(0)
    }
}

#[derive(Debug, Clone)]
pub struct Sweep {
    pub config: SweepConfig,
    pub rows: Vec<SweepRow>,
}

pub fn run_sweep(config: &SweepConfig) -> Result<Sweep> {
    let ctx = FieldCtx::new(config.m)?;
    let tob = find_tob(ctx)?;
    if let Some(bad) = config.types.iter().find(|t| !(1..=8).contains(*t)) {
        return Err(Error::Usage(format!("type must be in 1..=8, got {bad}")));
    }
    let specs = enumerate_specs(config.sigma, ctx, &config.types, &config.enumeration);
    let rows = specs
        .par_iter()
        .map(|s| evaluate(s, &tob, config.budget))
        .collect::<Result<Vec<_>>>()?;
    Ok(Sweep {
        config: config.clone(),
        rows,
    })
}

impl Sweep {
    pub fn summary(&self) -> SweepSummary {
        let mut s = SweepSummary::default();
        for v in Verdict::ALL {
            s.verdicts.insert(v.as_str().to_string(), 0);
        }
        for r in &self.rows {
            s.rows += 1;
            *s.verdicts.entry(r.verdict.as_str().to_string()).or_default() += 1;
            *s.by_source
                .entry(r.formula.source.clone())
                .or_default()
                .entry(r.verdict.as_str().to_string())
                .or_default() += 1;
            s.params_mismatches += u64::from(r.params_agree() == Some(false));
            s.hamming_mismatches += u64::from(r.hamming_agrees() == Some(false));
            s.sandwich_violations += u64::from(r.sandwich_holds() == Some(false));
        }
        s
    }

    pub fn records(&self, timing: bool) -> Vec<SweepRecord> {
        self.rows.iter().map(|r| r.record(timing)).collect()
    }

    pub fn to_csv(&self, timing: bool) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in self.records(timing) {
            w.serialize(r).map_err(|e| Error::Internal(format!("csv: {e}")))?;
        }
        if self.rows.is_empty() {
            w.write_record(CSV_COLUMNS)
                .map_err(|e| Error::Internal(format!("csv: {e}")))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Internal(format!("csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
    }

    pub fn to_json(&self, timing: bool) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            rows: Vec<SweepRecord>,
            summary: &'a SweepSummary,
        }
        let summary = self.summary();
        serde_json::to_string_pretty(&Out {
            rows: self.records(timing),
            summary: &summary,
        })
        .expect("sweep serializes")
    }
}

pub fn records_from_csv(text: &str) -> Result<Vec<SweepRecord>> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .map(|r| r.map_err(|e| Error::Parse(format!("csv: {e}"))))
        .collect()
}

pub fn records_from_json(text: &str) -> Result<Vec<SweepRecord>> {
    #[derive(Deserialize)]
    struct In {
        rows: Vec<SweepRecord>,
    }
    let v: In = serde_json::from_str(text).map_err(|e| Error::Parse(format!("sweep JSON: {e}")))?;
    Ok(v.rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn judge_table() {
        let e = DistanceResult::exact(4, "x", None);
        let b = DistanceResult::bounds(2, 4, "x", None);
        let n = DistanceResult::not_covered("x");
        assert_eq!(Verdict::judge(&e, Some(4)), Verdict::Match);
        assert_eq!(Verdict::judge(&e, Some(3)), Verdict::Mismatch);
        assert_eq!(Verdict::judge(&b, Some(3)), Verdict::WithinBounds);
        assert_eq!(Verdict::judge(&b, Some(5)), Verdict::Mismatch);
        assert_eq!(Verdict::judge(&n, Some(5)), Verdict::NotCovered);
        assert_eq!(Verdict::judge(&e, None), Verdict::OracleSkipped);
    }

    #[test]
    fn type1_sweep() {
        let s = run_sweep(&SweepConfig::new(2, 1, &[1])).unwrap();
        assert_eq!(s.rows.len(), 2);
        assert!(s.rows.iter().all(|r| r.verdict == Verdict::Match));
    }

    #[test]
    fn type2_sweep_sigma3() {
        let s = run_sweep(&SweepConfig::new(3, 1, &[2])).unwrap();
        assert_eq!(s.rows.len(), 8);
        let last = &s.rows[7];
        assert_eq!(last.oracle.unwrap().d_lee, 16);
        assert_eq!(last.verdict, Verdict::Match);
        assert_eq!(s.summary().count(Verdict::Match), 8);
    }

    #[test]
    fn csv_json_equivalence_and_determinism() {
        let cfg = SweepConfig::new(2, 1, &[1, 2, 3, 4]);
        let a = run_sweep(&cfg).unwrap();
        let b = run_sweep(&cfg).unwrap();
        let csv = a.to_csv(false).unwrap();
        assert_eq!(csv, b.to_csv(false).unwrap());
        assert_eq!(a.to_json(false), b.to_json(false));
        let header = csv.lines().next().unwrap();
        assert_eq!(header, CSV_COLUMNS.join(","));
        assert_eq!(records_from_csv(&csv).unwrap(), records_from_json(&a.to_json(false)).unwrap());
        assert_eq!(records_from_csv(&csv).unwrap(), a.records(false));
    }

    #[test]
    fn bad_type_is_usage_error() {
        assert!(matches!(
            run_sweep(&SweepConfig::new(2, 1, &[9])),
            Err(Error::Usage(_))
        ));
    }
}
