//! Machine-readable output records: JSON for single evaluations, CSV rows for
//! sweeps. Key names and column order are fixed strings; outputs are
//! deterministic for fixed inputs (timestamps are opt-in and default to null).

use serde::Serialize;

use crate::asymptotics::{Regime, RegimeClass, RegimeThresholds};
use crate::params::GraphParams;
use crate::simulate::{ConnectivityEstimate, Method};
use crate::walk::WalkDpResult;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParamsOut {
    pub n: usize,
    pub m: usize,
    pub p: f64,
    pub c: f64,
}

impl From<&GraphParams> for ParamsOut {
    fn from(gp: &GraphParams) -> Self {
        Self {
            n: gp.n(),
            m: gp.m(),
            p: gp.p(),
            c: gp.c(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MethodResult {
    pub method: Method,
    pub value: f64,
    pub stderr: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl From<&ConnectivityEstimate> for MethodResult {
    fn from(est: &ConnectivityEstimate) -> Self {
        Self {
            method: est.method,
            value: est.estimate,
            stderr: est.stderr,
            samples: est.samples,
            seed: est.seed,
        }
    }
}

/// One evaluation run: parameters, per-method results, and the maximum
/// pairwise absolute difference among the exact routes present.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunRecord {
    pub params: ParamsOut,
    pub results: Vec<MethodResult>,
    pub agreement: Option<f64>,
    pub timestamp: Option<u64>,
    pub seed: Option<u64>,
}

impl RunRecord {
    pub fn new(gp: &GraphParams, estimates: &[ConnectivityEstimate]) -> Self {
        let exact: Vec<f64> = estimates
            .iter()
            .filter(|e| {
                matches!(
                    e.method,
                    Method::Brute | Method::ExplorationDp | Method::WalkDp
                )
            })
            .map(|e| e.estimate)
            .collect();
        let agreement = if exact.len() >= 2 {
            let mut max_gap = 0.0f64;
            for i in 0..exact.len() {
                for j in i + 1..exact.len() {
                    max_gap = max_gap.max((exact[i] - exact[j]).abs());
                }
            }
            Some(max_gap)
        } else {
            None
        };
        Self {
            params: gp.into(),
            results: estimates.iter().map(MethodResult::from).collect(),
            agreement,
            timestamp: None,
            seed: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WalkRecord {
    pub params: ParamsOut,
    pub conditional: f64,
    pub prefactor: f64,
    #[serde(rename = "endpointA")]
    pub endpoint_a: f64,
    #[serde(rename = "endpointB")]
    pub endpoint_b: f64,
    pub total: f64,
}

impl WalkRecord {
    pub fn new(gp: &GraphParams, res: &WalkDpResult) -> Self {
        Self {
            params: gp.into(),
            conditional: res.conditional,
            prefactor: res.prefactor,
            endpoint_a: res.endpoint_a,
            endpoint_b: res.endpoint_b,
            total: res.total,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymRecord {
    pub params: ParamsOut,
    pub regime: Regime,
    pub value: f64,
    #[serde(rename = "prefactorCore")]
    pub prefactor_core: f64,
    pub correction: f64,
    #[serde(rename = "alphaN", skip_serializing_if = "Option::is_none")]
    pub alpha_n: Option<f64>,
    #[serde(rename = "betaM", skip_serializing_if = "Option::is_none")]
    pub beta_m: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intermediate: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassifyRecord {
    pub params: ParamsOut,
    #[serde(rename = "aspectRatio")]
    pub aspect_ratio: f64,
    pub regime: RegimeClass,
    pub thresholds: ThresholdsOut,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThresholdsOut {
    #[serde(rename = "denseCoeff")]
    pub dense_coeff: f64,
    #[serde(rename = "r2Lo")]
    pub r2_lo: f64,
    #[serde(rename = "r3Ratio")]
    pub r3_ratio: f64,
    pub tiny: f64,
}

impl From<&RegimeThresholds> for ThresholdsOut {
    fn from(t: &RegimeThresholds) -> Self {
        Self {
            dense_coeff: t.dense_coeff,
            r2_lo: t.r2_lo,
            r3_ratio: t.r3_ratio,
            tiny: t.tiny,
        }
    }
}

/// Fixed sweep CSV header.
pub const SWEEP_HEADER: &str = "n,m,p,c,method,value,stderr,seconds,error";

/// One sweep row; capacity/domain failures land in `error` instead of
/// aborting the sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub n: usize,
    pub m: usize,
    pub p: f64,
    pub c: f64,
    pub method: String,
    pub value: Option<f64>,
    pub stderr: Option<f64>,
    pub seconds: f64,
    pub error: Option<String>,
}

impl SweepRow {
    pub fn csv_line(&self) -> String {
        let fmt_opt = |v: &Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{:.6},{}",
            self.n,
            self.m,
            self.p,
            self.c,
            self.method,
            fmt_opt(&self.value),
            fmt_opt(&self.stderr),
            self.seconds,
            self.error.as_deref().unwrap_or_default()
        )
    }
}

/// Pretty JSON with a trailing newline — the single serialization used by the
/// CLI so outputs are byte-stable.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable record");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn run_record_agreement_over_exact_methods_only() {
        let gp = GraphParams::new(2, 2, 0.5).unwrap();
        let estimates = vec![
            ConnectivityEstimate::exact(Method::Brute, 0.3125),
            ConnectivityEstimate::exact(Method::ExplorationDp, 0.3125 + 1e-13),
            ConnectivityEstimate {
                estimate: 0.4,
                stderr: 0.1,
                samples: Some(10),
                seed: Some(1),
                method: Method::MonteCarlo,
            },
        ];
        let record = RunRecord::new(&gp, &estimates);
        let agreement = record.agreement.unwrap();
        assert!((agreement - 1e-13).abs() < 1e-14);

        let single = RunRecord::new(&gp, &estimates[..1]);
        assert_eq!(single.agreement, None);
    }

    #[test]
    fn json_keys_are_stable() {
        let gp = GraphParams::new(2, 2, 0.5).unwrap();
        let record = RunRecord::new(&gp, &[ConnectivityEstimate::exact(Method::Brute, 0.3125)]);
        let json = to_json(&record);
        let expected = r#"{
  "params": {
    "n": 2,
    "m": 2,
    "p": 0.5,
    "c": 2.0
  },
  "results": [
    {
      "method": "brute",
      "value": 0.3125,
      "stderr": 0.0
    }
  ],
  "agreement": null,
  "timestamp": null,
  "seed": null
}
"#;
        assert_eq!(json, expected);
    }

    #[test]
    fn sweep_row_formats() {
        let row = SweepRow {
            n: 3,
            m: 4,
            p: 0.25,
            c: 1.75,
            method: "brute".into(),
            value: Some(0.125),
            stderr: None,
            seconds: 0.0123456,
            error: None,
        };
        assert_eq!(row.csv_line(), "3,4,0.25,1.75,brute,0.125,,0.012346,");
        let failed = SweepRow {
            value: None,
            error: Some("capacity".into()),
            ..row
        };
        assert_eq!(failed.csv_line(), "3,4,0.25,1.75,brute,,,0.012346,capacity");
    }
}
