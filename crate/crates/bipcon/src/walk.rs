//! The Poisson random-walk representation of the connectivity probability.
//!
//! The deficit process S_k = B_{A_k} − k, built from two independent
//! inhomogeneous Poisson walks A and B, stays nonnegative on 0 < k < n with a
//! conditional probability that, times an explicit prefactor, equals the
//! connectivity probability. The conditional probability is computed by the
//! same (k, a, b) lattice sweep as the exploration DP, with Poisson step
//! kernels instead of binomials: absorbing the jump a → a+x advances B by a
//! single Poisson draw with the summed intensity β_{a+1}+…+β_{a+x}.

use serde::Serialize;

use crate::error::Result;
use crate::explore::dp_budget_check;
use crate::params::{walk_params, GraphParams};
use crate::pmf::{one_minus_pow, poisson_pmf, poisson_row};

const REL_FLOOR: f64 = 1e-60;
const ABS_FLOOR: f64 = 1e-300;

/// Decomposition of the walk representation at one parameter triple.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WalkDpResult {
    /// P(S_k ≥ 0, 0 < k < n | A_n = m, B_m = n−1).
    pub conditional: f64,
    /// (1−(1−p)^n)^m · (1−(1−p)^m)^{n−1}.
    pub prefactor: f64,
    /// P(A_n = m) = e^{−m} m^m / m! (sum of the α intensities is m).
    pub endpoint_a: f64,
    /// P(B_m = n−1) = e^{−n} n^{n−1} / (n−1)!.
    pub endpoint_b: f64,
    /// prefactor · conditional — the connectivity probability.
    pub total: f64,
}

/// The unconditional factor (1−(1−p)^n)^m (1−(1−p)^m)^{n−1}.
pub fn prefactor(gp: &GraphParams) -> f64 {
    let x = one_minus_pow(gp.p(), gp.n() as f64);
    let y = one_minus_pow(gp.p(), gp.m() as f64);
    if x == 0.0 || (y == 0.0 && gp.n() > 1) {
        return 0.0;
    }
    let ln_y = if gp.n() == 1 {
        0.0
    } else {
        (gp.n() - 1) as f64 * y.ln()
    };
    (gp.m() as f64 * x.ln() + ln_y).exp()
}

struct WalkDp {
    n: usize,
    m: usize,
    bdim: usize,
    alpha: Vec<f64>,
    /// beta_prefix[j] = β_1 + … + β_j.
    beta_prefix: Vec<f64>,
}

impl WalkDp {
    fn new(gp: &GraphParams, bdim: usize) -> Result<Self> {
        dp_budget_check(gp.n(), gp.m())?;
        let wp = walk_params(gp)?;
        let mut beta_prefix = Vec::with_capacity(gp.m() + 1);
        beta_prefix.push(0.0);
        for &b in &wp.beta {
            beta_prefix.push(beta_prefix.last().unwrap() + b);
        }
        Ok(Self {
            n: gp.n(),
            m: gp.m(),
            bdim,
            alpha: wp.alpha,
            beta_prefix,
        })
    }

    fn run(&self, with_barrier: bool) -> Vec<f64> {
        let (n, m, bdim) = (self.n, self.m, self.bdim);
        let mut dp = vec![0.0f64; (m + 1) * bdim];
        dp[0] = 1.0;
        let mut next = vec![0.0f64; (m + 1) * bdim];
        let mut arow = Vec::new();
        let mut yrow = Vec::new();
        for k in 0..n {
            poisson_row(self.alpha[k], m + 1, &mut arow);
            let stage_max = dp.iter().cloned().fold(0.0, f64::max);
            let floor = (stage_max * REL_FLOOR).max(ABS_FLOOR);
            next.iter_mut().for_each(|w| *w = 0.0);
            for a in 0..=m {
                let col = &dp[a * bdim..(a + 1) * bdim];
                let col_max = col.iter().cloned().fold(0.0, f64::max);
                if col_max < floor {
                    continue;
                }
                let mut x_past_peak = false;
                let mut x_prev = 0.0f64;
                for (x, &wx) in arow.iter().enumerate().take(m - a + 1) {
                    if wx < x_prev {
                        x_past_peak = true;
                    }
                    x_prev = wx;
                    if col_max * wx < floor {
                        if x_past_peak {
                            break;
                        }
                        continue;
                    }
                    if x == 0 {
                        for (b, &w0) in col.iter().enumerate() {
                            if w0 >= floor {
                                next[a * bdim + b] += w0 * wx;
                            }
                        }
                        continue;
                    }
                    let sigma = self.beta_prefix[a + x] - self.beta_prefix[a];
                    poisson_row(sigma, bdim, &mut yrow);
                    let base = (a + x) * bdim;
                    for (b, &w0) in col.iter().enumerate() {
                        let w1 = w0 * wx;
                        if w1 < floor {
                            continue;
                        }
                        let mut y_past_peak = false;
                        let mut y_prev = 0.0f64;
                        for (y, &wy) in yrow[..bdim - b].iter().enumerate() {
                            if wy < y_prev {
                                y_past_peak = true;
                            }
                            y_prev = wy;
                            let w2 = w1 * wy;
                            if w2 < floor {
                                if y_past_peak {
                                    break;
                                }
                                continue;
                            }
                            next[base + b + y] += w2;
                        }
                    }
                }
            }
            if with_barrier && k + 1 < n {
                for a in 0..=m {
                    for b in 0..(k + 1).min(bdim) {
                        next[a * bdim + b] = 0.0;
                    }
                }
            }
            std::mem::swap(&mut dp, &mut next);
        }
        dp
    }
}

/// P(S_k ≥ 0 for 0 < k < n | A_n = m, B_m = n−1).
///
/// The joint barrier mass comes from the lattice DP (support truncated at the
/// conditioning caps a ≤ m, b ≤ n−1, which is exact under the terminal
/// constraints); the division uses the analytic Poisson endpoint masses.
pub fn conditional_nonneg_prob(gp: &GraphParams) -> Result<f64> {
    let walk = WalkDp::new(gp, gp.n())?;
    let dp = walk.run(true);
    let joint = dp[gp.m() * gp.n() + (gp.n() - 1)];
    let endpoint_a = poisson_pmf(gp.m() as u64, gp.m() as f64)?;
    let endpoint_b = poisson_pmf((gp.n() - 1) as u64, gp.n() as f64)?;
    Ok(joint / (endpoint_a * endpoint_b))
}

/// Full walk-representation evaluation: conditional factor, prefactor,
/// analytic endpoints, and their product (the connectivity probability).
pub fn connectivity_via_walk(gp: &GraphParams) -> Result<WalkDpResult> {
    let conditional = conditional_nonneg_prob(gp)?;
    let pre = prefactor(gp);
    Ok(WalkDpResult {
        conditional,
        prefactor: pre,
        endpoint_a: poisson_pmf(gp.m() as u64, gp.m() as f64)?,
        endpoint_b: poisson_pmf((gp.n() - 1) as u64, gp.n() as f64)?,
        total: pre * conditional,
    })
}

/// Diagnostic for the endpoint closed forms: runs the DP without the barrier
/// and with the b-axis extended well past n−1, and returns
/// `(Σ_b dp[m][b], dp[m][n−1] / Σ_b dp[m][b])` — numerically P(A_n = m) and
/// P(B_m = n−1 | A_n = m), to be compared against the Poisson closed forms.
pub fn unconditioned_terminals(gp: &GraphParams) -> Result<(f64, f64)> {
    let n = gp.n();
    // Poisson(n) tail above n + 12√n + 30 is far below every tolerance here.
    let bdim = n + (12.0 * (n as f64).sqrt()).ceil() as usize + 30;
    let walk = WalkDp::new(gp, bdim)?;
    let dp = walk.run(false);
    let mass_a: f64 = dp[gp.m() * bdim..(gp.m() + 1) * bdim].iter().sum();
    let cond_b = dp[gp.m() * bdim + (n - 1)] / mass_a;
    Ok((mass_a, cond_b))
}
