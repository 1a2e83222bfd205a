//! Model parameters and the closed-form intensity/expectation curves.
//!
//! Vectors are documented 1-indexed to match the usual walk notation
//! (α_1..α_n, μ_1..μ_n) and stored 0-indexed: entry `i` holds the value for
//! step `i + 1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pmf::one_minus_pow;

/// The parameter triple (n, m, p) of the random bipartite graph G(n,m,p),
/// with the derived regime parameter c = p·(n+m).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GraphParams {
    n: usize,
    m: usize,
    p: f64,
}

impl GraphParams {
    pub fn new(n: usize, m: usize, p: f64) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidParams(format!(
                "part sizes must be positive, got n = {n}, m = {m}"
            )));
        }
        if !p.is_finite() || !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParams(format!(
                "edge probability must lie in [0, 1], got {p}"
            )));
        }
        Ok(Self { n, m, p })
    }

    /// Builds from the regime parameter c = p·(n+m).
    pub fn from_c(n: usize, m: usize, c: f64) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidParams(format!(
                "part sizes must be positive, got n = {n}, m = {m}"
            )));
        }
        Self::new(n, m, c / (n + m) as f64)
    }

    /// Left part size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Right part size.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Edge probability.
    pub fn p(&self) -> f64 {
        self.p
    }

    /// Regime parameter c = p·(n+m), always recomputed.
    pub fn c(&self) -> f64 {
        self.p * (self.n + self.m) as f64
    }

    /// True when p ∈ {0, 1}, where the geometric-intensity formulas are
    /// singular and the connectivity probability is known in closed form.
    pub fn is_degenerate(&self) -> bool {
        self.p == 0.0 || self.p == 1.0
    }
}

/// Closed-form connectivity probability at the degenerate edge probabilities:
/// 0 at p = 0 (n + m ≥ 2 vertices, no edges) and 1 at p = 1 (complete K_{n,m}).
/// Returns None for p ∈ (0, 1).
pub fn degenerate_connectivity(gp: &GraphParams) -> Option<f64> {
    if gp.p() == 0.0 {
        Some(0.0)
    } else if gp.p() == 1.0 {
        Some(1.0)
    } else {
        None
    }
}

/// Poisson intensities of the two walks: alpha[i−1] = α_i for the left walk
/// and beta[j−1] = β_j for the right walk, both geometric in their index.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkParams {
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
}

/// α_i = m·p·(1−p)^{i−1}/(1−(1−p)^n) and β_j = n·p·(1−p)^{j−1}/(1−(1−p)^m).
///
/// The geometric sums telescope, so Σα_i = m and Σβ_j = n exactly.
pub fn walk_params(gp: &GraphParams) -> Result<WalkParams> {
    if gp.is_degenerate() {
        return Err(Error::DegenerateP(gp.p()));
    }
    let (n, m, p) = (gp.n(), gp.m(), gp.p());
    let q = 1.0 - p;
    let mut alpha = Vec::with_capacity(n);
    let mut a = m as f64 * p / one_minus_pow(p, n as f64);
    for _ in 0..n {
        alpha.push(a);
        a *= q;
    }
    let mut beta = Vec::with_capacity(m);
    let mut b = n as f64 * p / one_minus_pow(p, m as f64);
    for _ in 0..m {
        beta.push(b);
        b *= q;
    }
    Ok(WalkParams { alpha, beta })
}

/// The closed-form expectation curves of the walk processes:
/// mu[k−1] = E A_k, eta[k−1] = E B_k, and es[k−1] = E B_{A_k}
/// = n(1−e^{−μ_k p})/(1−(1−p)^m).
#[derive(Debug, Clone, PartialEq)]
pub struct ExpectationCurves {
    pub mu: Vec<f64>,
    pub eta: Vec<f64>,
    pub es: Vec<f64>,
}

pub fn expectation_curves(gp: &GraphParams) -> Result<ExpectationCurves> {
    if gp.is_degenerate() {
        return Err(Error::DegenerateP(gp.p()));
    }
    let (n, m, p) = (gp.n(), gp.m(), gp.p());
    let denom_n = one_minus_pow(p, n as f64);
    let denom_m = one_minus_pow(p, m as f64);
    let mu: Vec<f64> = (1..=n)
        .map(|k| m as f64 * one_minus_pow(p, k as f64) / denom_n)
        .collect();
    let eta: Vec<f64> = (1..=m)
        .map(|k| n as f64 * one_minus_pow(p, k as f64) / denom_m)
        .collect();
    let es: Vec<f64> = mu
        .iter()
        .map(|&mu_k| n as f64 * (-(-mu_k * p).exp_m1()) / denom_m)
        .collect();
    Ok(ExpectationCurves { mu, eta, es })
}
