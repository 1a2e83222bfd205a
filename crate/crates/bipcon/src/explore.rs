//! The sequential exploration process and the exact trajectory-sum DP.
//!
//! `explore` runs the deterministic activation/processing schedule on a
//! concrete graph (right-part vertices processed with priority, FIFO by
//! activation time). `exact_connectivity_dp` sums the binomial trajectory
//! weights over the admissible set by a lattice dynamic program over states
//! (k, a, b): k left vertices processed, a right vertices activated, b left
//! vertices activated by processed right vertices (the root excluded).

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::params::{degenerate_connectivity, GraphParams};
use crate::pmf::{binomial_row, one_minus_pow};

/// DP budget shared with the walk representation: n·m·max(n,m) states/work
/// units, about n = m = 200 in the square case.
pub(crate) const DP_BUDGET: u64 = 8_000_000;

/// Per-stage relative pruning floor. Contributions below stage_max·1e−60 are
/// dropped; the discarded mass stays under 1e−50 of the total, far inside
/// every tolerance this crate asserts.
const REL_FLOOR: f64 = 1e-60;
const ABS_FLOOR: f64 = 1e-300;

pub(crate) fn dp_budget_check(n: usize, m: usize) -> Result<()> {
    let cost = n as u64 * m as u64 * n.max(m) as u64;
    if cost > DP_BUDGET {
        return Err(Error::Capacity(format!(
            "DP budget n·m·max(n,m) ≤ {DP_BUDGET} exceeded: {n}·{m}·{} = {cost}",
            n.max(m)
        )));
    }
    Ok(())
}

/// Observed counts and derived prefix processes of one exploration run.
///
/// `s_r[k]` = S^R_k = r_1+…+r_k with `s_r[0] = 0` (length n+1), `s_l`
/// likewise over l (length m+1), and `s_star[k−1]` = S*_k = S^L_{S^R_k} − k
/// for k = 1..=n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplorationTrace {
    pub r: Vec<u32>,
    pub l: Vec<u32>,
    pub s_r: Vec<u32>,
    pub s_l: Vec<u32>,
    pub s_star: Vec<i64>,
}

impl ExplorationTrace {
    pub fn from_counts(r: Vec<u32>, l: Vec<u32>) -> Self {
        let n = r.len();
        let m = l.len();
        let mut s_r = Vec::with_capacity(n + 1);
        s_r.push(0u32);
        for &x in &r {
            s_r.push(s_r.last().unwrap() + x);
        }
        let mut s_l = Vec::with_capacity(m + 1);
        s_l.push(0u32);
        for &y in &l {
            s_l.push(s_l.last().unwrap() + y);
        }
        let s_star = (1..=n)
            .map(|k| s_l[s_r[k] as usize] as i64 - k as i64)
            .collect();
        Self {
            r,
            l,
            s_r,
            s_l,
            s_star,
        }
    }

    /// Membership in the admissible trajectory set: all m right vertices
    /// activated, all n−1 non-root left vertices activated, and the barrier
    /// S*_k ≥ 0 holds at every left step 0 < k < n.
    pub fn in_trajectory_set(&self) -> bool {
        let n = self.r.len();
        let m = self.l.len();
        self.s_r[n] as usize == m
            && self.s_l[m] as usize == n - 1
            && self.s_star[..n - 1].iter().all(|&s| s >= 0)
    }
}

/// Runs the exploration from left vertex 0. Right-part vertices are processed
/// before left-part ones, each side FIFO by activation time (ties broken by
/// ascending index). `r[i]` counts the right vertices newly activated when the
/// (i+1)-th processed left vertex is processed, `l[j]` likewise for left
/// vertices; vertices never reached leave trailing zeros.
pub fn explore(g: &BipartiteGraph) -> ExplorationTrace {
    let (n, m) = (g.n(), g.m());
    let mut r = vec![0u32; n];
    let mut l = vec![0u32; m];
    let mut left_seen = vec![false; n];
    let mut right_seen = vec![false; m];
    let mut left_queue: VecDeque<usize> = VecDeque::new();
    let mut right_queue: VecDeque<usize> = VecDeque::new();
    left_seen[0] = true;
    left_queue.push_back(0);
    let mut processed_left = 0usize;
    let mut processed_right = 0usize;
    loop {
        if let Some(j) = right_queue.pop_front() {
            let mut newly = 0u32;
            for i in g.left_neighbors(j) {
                if !left_seen[i] {
                    left_seen[i] = true;
                    left_queue.push_back(i);
                    newly += 1;
                }
            }
            l[processed_right] = newly;
            processed_right += 1;
        } else if let Some(i) = left_queue.pop_front() {
            let mut newly = 0u32;
            for j in g.right_neighbors(i) {
                if !right_seen[j] {
                    right_seen[j] = true;
                    right_queue.push_back(j);
                    newly += 1;
                }
            }
            r[processed_left] = newly;
            processed_left += 1;
        } else {
            break;
        }
    }
    ExplorationTrace::from_counts(r, l)
}

struct ExploreDp {
    n: usize,
    m: usize,
    bdim: usize,
    /// left_rows[u][x] = Binomial(u, p) pmf: the law of newly activated right
    /// vertices when u are still inactive.
    left_rows: Vec<Vec<f64>>,
    /// thin_rows[x−1][v][y] = Binomial(v, 1−(1−p)^x) pmf: the law of left
    /// vertices activated while absorbing x freshly activated right vertices,
    /// v inactive non-root left vertices remaining. The x right vertices act
    /// as independent thinnings, so their composition is a single binomial.
    thin_rows: Vec<Vec<Vec<f64>>>,
}

impl ExploreDp {
    fn new(gp: &GraphParams) -> Result<Self> {
        let (n, m, p) = (gp.n(), gp.m(), gp.p());
        dp_budget_check(n, m)?;
        let mut left_rows = Vec::with_capacity(m + 1);
        let mut row = Vec::new();
        for u in 0..=m {
            binomial_row(u as u64, p, &mut row);
            left_rows.push(row.clone());
        }
        let mut thin_rows = Vec::with_capacity(m);
        for x in 1..=m {
            let q_x = one_minus_pow(p, x as f64);
            let mut per_v = Vec::with_capacity(n);
            for v in 0..n {
                binomial_row(v as u64, q_x, &mut row);
                per_v.push(row.clone());
            }
            thin_rows.push(per_v);
        }
        Ok(Self {
            n,
            m,
            bdim: n,
            left_rows,
            thin_rows,
        })
    }

    /// One full sweep; the barrier is applied after stages 1..n−1 unless
    /// disabled. Returns the final cell grid.
    fn run(&self, with_barrier: bool) -> Vec<f64> {
        let (n, m, bdim) = (self.n, self.m, self.bdim);
        let mut dp = vec![0.0f64; (m + 1) * bdim];
        dp[0] = 1.0;
        let mut next = vec![0.0f64; (m + 1) * bdim];
        for k in 0..n {
            let stage_max = dp.iter().cloned().fold(0.0, f64::max);
            let floor = (stage_max * REL_FLOOR).max(ABS_FLOOR);
            next.iter_mut().for_each(|w| *w = 0.0);
            for a in 0..=m {
                let lrow = &self.left_rows[m - a];
                for b in 0..bdim {
                    let w0 = dp[a * bdim + b];
                    if w0 < floor {
                        continue;
                    }
                    let v = n - 1 - b;
                    let mut x_past_peak = false;
                    let mut x_prev = 0.0f64;
                    for (x, &wx) in lrow.iter().enumerate() {
                        if wx < x_prev {
                            x_past_peak = true;
                        }
                        x_prev = wx;
                        let w1 = w0 * wx;
                        if w1 < floor {
                            if x_past_peak {
                                break;
                            }
                            continue;
                        }
                        if x == 0 {
                            next[a * bdim + b] += w1;
                            continue;
                        }
                        let trow = &self.thin_rows[x - 1][v];
                        let base = (a + x) * bdim + b;
                        let mut past_peak = false;
                        let mut prev = 0.0f64;
                        for (y, &wy) in trow.iter().enumerate() {
                            let w2 = w1 * wy;
                            if wy < prev {
                                past_peak = true;
                            }
                            prev = wy;
                            if w2 < floor {
                                if past_peak {
                                    break;
                                }
                                continue;
                            }
                            next[base + y] += w2;
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

/// Exact connectivity probability of G(n,m,p) by dynamic programming over the
/// trajectory sum. Degenerate p is answered by the closed forms (0 resp. 1).
pub fn exact_connectivity_dp(gp: &GraphParams) -> Result<f64> {
    if let Some(value) = degenerate_connectivity(gp) {
        return Ok(value);
    }
    let dp = ExploreDp::new(gp)?.run(true);
    Ok(dp[gp.m() * gp.n() + (gp.n() - 1)])
}

/// Diagnostic: total DP mass with the barrier and terminal constraints
/// removed. The transition laws are probability distributions, so this must
/// equal 1 up to rounding.
pub fn unconstrained_dp_mass(gp: &GraphParams) -> Result<f64> {
    if gp.is_degenerate() {
        return Err(Error::DegenerateP(gp.p()));
    }
    let dp = ExploreDp::new(gp)?.run(false);
    Ok(dp.iter().sum())
}
