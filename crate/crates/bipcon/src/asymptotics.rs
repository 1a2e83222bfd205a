//! The four asymptotic regimes of the connectivity probability and a
//! finite-n regime classifier.
//!
//! Each regime formula factors into a core prefactor and a regime-specific
//! correction. The formulas are limit statements; the evaluators compute them
//! pointwise at any finite triple and the classifier applies documented,
//! overridable finite-n thresholds — gaps between regimes report `uncovered`
//! rather than snapping to a neighbor.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::GraphParams;
use crate::pmf::one_minus_pow;

/// The four regimes of c = p·(n+m).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    /// c → ∞.
    #[serde(rename = "R1-dense")]
    R1Dense,
    /// c → constant in (0, ∞).
    #[serde(rename = "R2-constant-c")]
    R2ConstantC,
    /// c = o(1) with c·√n/ln n → ∞.
    #[serde(rename = "R3-small-c")]
    R3SmallC,
    /// c = o(1/n).
    #[serde(rename = "R4-tiny-c")]
    R4TinyC,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::R1Dense => "R1-dense",
            Regime::R2ConstantC => "R2-constant-c",
            Regime::R3SmallC => "R3-small-c",
            Regime::R4TinyC => "R4-tiny-c",
        }
    }
}

/// Classification outcome: one of the four regimes or the explicit statement
/// that the theorem's hypotheses do not cover the triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RegimeClass {
    #[serde(rename = "R1-dense")]
    R1Dense,
    #[serde(rename = "R2-constant-c")]
    R2ConstantC,
    #[serde(rename = "R3-small-c")]
    R3SmallC,
    #[serde(rename = "R4-tiny-c")]
    R4TinyC,
    #[serde(rename = "uncovered")]
    Uncovered,
}

impl From<Regime> for RegimeClass {
    fn from(r: Regime) -> Self {
        match r {
            Regime::R1Dense => RegimeClass::R1Dense,
            Regime::R2ConstantC => RegimeClass::R2ConstantC,
            Regime::R3SmallC => RegimeClass::R3SmallC,
            Regime::R4TinyC => RegimeClass::R4TinyC,
        }
    }
}

impl RegimeClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegimeClass::R1Dense => "R1-dense",
            RegimeClass::R2ConstantC => "R2-constant-c",
            RegimeClass::R3SmallC => "R3-small-c",
            RegimeClass::R4TinyC => "R4-tiny-c",
            RegimeClass::Uncovered => "uncovered",
        }
    }
}

/// A regime formula evaluated at one parameter triple.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RegimeResult {
    pub regime: Regime,
    /// The regime's approximation of the connectivity probability.
    pub value: f64,
    /// (1−(1−p)^n)^m (1−(1−p)^m)^n for R1–R3; exponent n−1 on the second
    /// factor for R4.
    pub prefactor_core: f64,
    /// The regime multiplier: 1, 1−α_nβ_m, c/2, or 1/n.
    pub correction: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_n: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_m: Option<f64>,
    /// R4 only: the (1/n)·core intermediate form; `value` is the spanning-tree
    /// product n^{m−1} m^{n−1} p^{n+m−1}.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intermediate: Option<f64>,
}

fn core(gp: &GraphParams, second_exponent: usize) -> f64 {
    let x = one_minus_pow(gp.p(), gp.n() as f64);
    let y = one_minus_pow(gp.p(), gp.m() as f64);
    if x == 0.0 || (y == 0.0 && second_exponent > 0) {
        return 0.0;
    }
    let ln_y = if second_exponent == 0 {
        0.0
    } else {
        second_exponent as f64 * y.ln()
    };
    (gp.m() as f64 * x.ln() + ln_y).exp()
}

/// Evaluates the selected regime formula at `gp`, with c inferred as p·(n+m).
pub fn asym_estimate(gp: &GraphParams, regime: Regime) -> Result<RegimeResult> {
    asym_estimate_with_c(gp, regime, gp.c())
}

/// Same, with the constant c of the R2/R3 displays supplied by the caller
/// (the regimes fix c only in the limit; at finite n the choice is the
/// caller's).
pub fn asym_estimate_with_c(gp: &GraphParams, regime: Regime, c: f64) -> Result<RegimeResult> {
    if gp.is_degenerate() {
        return Err(Error::DegenerateP(gp.p()));
    }
    let (n, m) = (gp.n() as f64, gp.m() as f64);
    match regime {
        Regime::R1Dense => {
            let core = core(gp, gp.n());
            Ok(RegimeResult {
                regime,
                value: core,
                prefactor_core: core,
                correction: 1.0,
                alpha_n: None,
                beta_m: None,
                intermediate: None,
            })
        }
        Regime::R2ConstantC => {
            let t_n = c * n / (n + m);
            let t_m = c * m / (n + m);
            let alpha_n = (m * c / (n + m)) * (-t_n).exp() / (-(-t_n).exp_m1());
            let beta_m = (n * c / (n + m)) * (-t_m).exp() / (-(-t_m).exp_m1());
            let core = core(gp, gp.n());
            let correction = 1.0 - alpha_n * beta_m;
            Ok(RegimeResult {
                regime,
                value: correction * core,
                prefactor_core: core,
                correction,
                alpha_n: Some(alpha_n),
                beta_m: Some(beta_m),
                intermediate: None,
            })
        }
        Regime::R3SmallC => {
            let core = core(gp, gp.n());
            let correction = c / 2.0;
            Ok(RegimeResult {
                regime,
                value: correction * core,
                prefactor_core: core,
                correction,
                alpha_n: None,
                beta_m: None,
                intermediate: None,
            })
        }
        Regime::R4TinyC => {
            let core = core(gp, gp.n() - 1);
            let correction = 1.0 / n;
            // Spanning-tree product n^{m−1} m^{n−1} p^{n+m−1}, in log space.
            let value =
                ((m - 1.0) * n.ln() + (n - 1.0) * m.ln() + (n + m - 1.0) * gp.p().ln()).exp();
            Ok(RegimeResult {
                regime,
                value,
                prefactor_core: core,
                correction,
                alpha_n: None,
                beta_m: None,
                intermediate: Some(correction * core),
            })
        }
    }
}

/// Finite-n classification thresholds; the theorem constrains limits only, so
/// these are heuristics — documented, overridable configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegimeThresholds {
    /// R1 when c ≥ dense_coeff·ln(n+m).
    pub dense_coeff: f64,
    /// R2 band lower edge: c ∈ [r2_lo, dense threshold).
    pub r2_lo: f64,
    /// R3 requires c·√n/ln n ≥ r3_ratio.
    pub r3_ratio: f64,
    /// R4 when c ≤ tiny/n.
    pub tiny: f64,
}

impl Default for RegimeThresholds {
    fn default() -> Self {
        Self {
            dense_coeff: 3.0,
            r2_lo: 0.1,
            r3_ratio: 5.0,
            tiny: 0.1,
        }
    }
}

/// Classifies c = p·(n+m) with the default thresholds.
///
/// `aspect_ratio` is the caller's asserted limit ratio m/n; the theorem holds
/// for every fixed positive ratio, so at finite n the value cannot change the
/// outcome and only c and n are consulted (defaults to m/n when absent).
pub fn classify_regime(gp: &GraphParams, aspect_ratio: Option<f64>) -> RegimeClass {
    classify_regime_with(gp, aspect_ratio, &RegimeThresholds::default())
}

pub fn classify_regime_with(
    gp: &GraphParams,
    _aspect_ratio: Option<f64>,
    thresholds: &RegimeThresholds,
) -> RegimeClass {
    let c = gp.c();
    let n = gp.n() as f64;
    let sum = (gp.n() + gp.m()) as f64;
    if c >= thresholds.dense_coeff * sum.ln() {
        RegimeClass::R1Dense
    } else if c >= thresholds.r2_lo {
        RegimeClass::R2ConstantC
    } else if c <= thresholds.tiny / n {
        RegimeClass::R4TinyC
    } else if c * n.sqrt() / n.ln() >= thresholds.r3_ratio {
        RegimeClass::R3SmallC
    } else {
        RegimeClass::Uncovered
    }
}
