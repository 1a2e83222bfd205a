//! Log-space probability mass functions.
//!
//! Every pmf here is evaluated as a log-space sum with a single final
//! exponentiation, so products of hundreds of factors (as they appear in the
//! lattice dynamic programs) stay inside f64 range for rates and counts up to
//! 10^4 and beyond.

use std::sync::OnceLock;

use crate::error::{Error, Result};

const LN_FACT_TABLE_LEN: usize = 10_001;

/// ln(2π)/2, the constant term of the Stirling series.
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

fn ln_factorial_table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = vec![0.0; LN_FACT_TABLE_LEN];
        // Kahan-compensated running sum of ln i keeps the absolute error of
        // each entry near machine epsilon instead of k·eps.
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        for (k, entry) in table.iter_mut().enumerate().skip(1) {
            let term = (k as f64).ln() - comp;
            let next = sum + term;
            comp = (next - sum) - term;
            sum = next;
            *entry = sum;
        }
        table
    })
}

/// Natural log of k!, exact to ~1 ulp over the tabulated range and via the
/// Stirling series with three correction terms above it.
pub fn ln_factorial(k: u64) -> f64 {
    if (k as usize) < LN_FACT_TABLE_LEN {
        return ln_factorial_table()[k as usize];
    }
    let x = k as f64;
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    (x + 0.5) * x.ln() - x
        + HALF_LN_TWO_PI
        + inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 / 1260.0))
}

/// ln P(Poisson(lambda) = k). Assumes `lambda` is finite and nonnegative.
pub fn ln_poisson_pmf(k: u64, lambda: f64) -> f64 {
    if lambda == 0.0 {
        return if k == 0 { 0.0 } else { f64::NEG_INFINITY };
    }
    k as f64 * lambda.ln() - lambda - ln_factorial(k)
}

/// P(Poisson(lambda) = k) = e^{−λ} λ^k / k!.
///
/// Returns exactly 1 for k = 0, λ = 0 (empty product convention). Negative
/// or non-finite rates are a domain error; negative counts are unrepresentable
/// in the unsigned argument by construction.
pub fn poisson_pmf(k: u64, lambda: f64) -> Result<f64> {
    if !lambda.is_finite() || lambda < 0.0 {
        return Err(Error::Domain(format!(
            "Poisson rate must be finite and nonnegative, got {lambda}"
        )));
    }
    Ok(ln_poisson_pmf(k, lambda).exp())
}

/// ln C(n, k); −∞ when k > n.
pub fn ln_choose(n: u64, k: u64) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k)
}

/// (1−p)^e evaluated as exp(e·ln(1−p)); exact at p = 0 and p = 1.
pub fn pow_one_minus(p: f64, e: f64) -> f64 {
    if e == 0.0 {
        return 1.0;
    }
    (e * (-p).ln_1p()).exp()
}

/// 1 − (1−p)^e evaluated as −expm1(e·ln(1−p)), accurate for small p·e.
pub fn one_minus_pow(p: f64, e: f64) -> f64 {
    if p >= 1.0 {
        return 1.0;
    }
    -(e * (-p).ln_1p()).exp_m1()
}

/// Fills `row` with the full Binomial(trials, p) pmf, `row[k] = C(trials,k) p^k (1−p)^{trials−k}`.
///
/// The row is seeded at its mode from a single log-space evaluation and
/// extended by ratio recurrences in both directions, so no entry underflows
/// spuriously even when the endpoint masses are below f64 range.
pub fn binomial_row(trials: u64, p: f64, row: &mut Vec<f64>) {
    let len = trials as usize + 1;
    row.clear();
    row.resize(len, 0.0);
    if p <= 0.0 {
        row[0] = 1.0;
        return;
    }
    if p >= 1.0 {
        row[len - 1] = 1.0;
        return;
    }
    let mode = (((trials + 1) as f64) * p).floor().min(trials as f64) as usize;
    let ln_q = (-p).ln_1p();
    let ln_mode = ln_choose(trials, mode as u64)
        + mode as f64 * p.ln()
        + (trials - mode as u64) as f64 * ln_q;
    row[mode] = ln_mode.exp();
    let ratio = p / (1.0 - p);
    for k in mode..len - 1 {
        // w_{k+1} = w_k · (n−k)/(k+1) · p/(1−p)
        row[k + 1] = row[k] * ((trials - k as u64) as f64) / ((k + 1) as f64) * ratio;
    }
    for k in (0..mode).rev() {
        row[k] = row[k + 1] * ((k + 1) as f64) / ((trials - k as u64) as f64) / ratio;
    }
}

/// Fills `row` with Poisson(lambda) pmf values for k = 0..len−1, seeded at the
/// mode like `binomial_row`.
pub fn poisson_row(lambda: f64, len: usize, row: &mut Vec<f64>) {
    row.clear();
    row.resize(len, 0.0);
    if len == 0 {
        return;
    }
    if lambda == 0.0 {
        row[0] = 1.0;
        return;
    }
    let mode = lambda.floor().min((len - 1) as f64) as usize;
    row[mode] = ln_poisson_pmf(mode as u64, lambda).exp();
    for k in mode..len - 1 {
        row[k + 1] = row[k] * lambda / ((k + 1) as f64);
    }
    for k in (0..mode).rev() {
        row[k] = row[k + 1] * ((k + 1) as f64) / lambda;
    }
}
