//! Ground-truth connectivity probabilities by exhaustive enumeration.
//!
//! Every one of the 2^{nm} edge subsets of K_{n,m} is visited once, so the
//! profile is exact integer data and the probability is a polynomial in p.
//! The budget n·m ≤ 24 keeps a full enumeration under a minute single-threaded.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::params::GraphParams;

/// Enumeration bound: at most 2^24 subsets.
pub const MAX_BRUTE_EDGES: usize = 24;

/// `counts[e]` = number of connected spanning subgraphs of K_{n,m} with exactly
/// e edges, for e = 0..=n·m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCountProfile {
    pub n: usize,
    pub m: usize,
    pub counts: Vec<u64>,
}

impl EdgeCountProfile {
    /// `Σ_e counts[e] p^e (1−p)^{nm−e}`, the connectivity probability at p.
    pub fn connectivity_at(&self, p: f64) -> f64 {
        let nm = (self.n * self.m) as i32;
        let q = 1.0 - p;
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(e, &c)| c as f64 * p.powi(e as i32) * q.powi(nm - e as i32))
            .sum()
    }
}

/// n^{m−1}·m^{n−1}, the number of spanning trees of K_{n,m}.
pub fn spanning_tree_count(n: u64, m: u64) -> u64 {
    n.pow((m - 1) as u32) * m.pow((n - 1) as u32)
}

fn check_brute_capacity(n: usize, m: usize) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidParams(format!(
            "part sizes must be positive, got n = {n}, m = {m}"
        )));
    }
    if n * m > MAX_BRUTE_EDGES {
        return Err(Error::Capacity(format!(
            "brute enumeration needs n·m ≤ {MAX_BRUTE_EDGES}, got {n}·{m} = {}",
            n * m
        )));
    }
    Ok(())
}

/// Connectivity check on fixed-width row masks, n·m ≤ 24 so everything fits
/// in u32 and stays allocation-free.
fn connected_masks(rows: &[u32], n: usize, m: usize) -> bool {
    let full_left = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let full_right = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let mut left = 1u32;
    let mut right = rows[0];
    loop {
        let mut grew = false;
        for (i, &row) in rows.iter().enumerate().take(n).skip(1) {
            if left >> i & 1 == 0 && row & right != 0 {
                left |= 1 << i;
                right |= row;
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    left == full_left && right == full_right
}

/// Enumerates all 2^{nm} subsets of K_{n,m}; each subset is one integer whose
/// bits decode into the n row masks by fixed-width slicing.
pub fn edge_count_profile(n: usize, m: usize) -> Result<EdgeCountProfile> {
    check_brute_capacity(n, m)?;
    let nm = n * m;
    let mut counts = vec![0u64; nm + 1];
    let row_mask = (1u32 << m) - 1;
    let mut rows = vec![0u32; n];
    for subset in 0u64..1 << nm {
        for (i, row) in rows.iter_mut().enumerate() {
            *row = (subset >> (i * m)) as u32 & row_mask;
        }
        if connected_masks(&rows, n, m) {
            counts[subset.count_ones() as usize] += 1;
        }
    }
    Ok(EdgeCountProfile { n, m, counts })
}

/// Connectivity probability by definition: enumerate every edge subset and
/// weight it by p^e (1−p)^{nm−e}.
pub fn brute_connectivity(gp: &GraphParams) -> Result<f64> {
    let profile = edge_count_profile(gp.n(), gp.m())?;
    Ok(profile.connectivity_at(gp.p()))
}

/// A probability as an exact ratio of nonnegative big integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactProbability {
    pub numerator: BigUint,
    pub denominator: BigUint,
}

impl ExactProbability {
    pub fn to_f64(&self) -> f64 {
        // Shift both sides into comfortable f64 range before dividing.
        let max_bits = self.numerator.bits().max(self.denominator.bits());
        let shift = max_bits.saturating_sub(512);
        let num = (&self.numerator >> shift).to_f64().unwrap_or(f64::INFINITY);
        let den = (&self.denominator >> shift)
            .to_f64()
            .unwrap_or(f64::INFINITY);
        num / den
    }
}

/// Exact-rational oracle: p given as the ratio p_num/p_den, result given as
/// `Σ_e counts[e]·p_num^e·(p_den−p_num)^{nm−e}` over `p_den^{nm}`, bit-exact.
pub fn brute_connectivity_exact(
    n: usize,
    m: usize,
    p_num: u64,
    p_den: u64,
) -> Result<ExactProbability> {
    if p_den == 0 || p_num > p_den {
        return Err(Error::InvalidParams(format!(
            "edge probability ratio must satisfy 0 ≤ p_num ≤ p_den, got {p_num}/{p_den}"
        )));
    }
    let profile = edge_count_profile(n, m)?;
    let nm = (n * m) as u32;
    let num_p = BigUint::from(p_num);
    let num_q = BigUint::from(p_den - p_num);
    let mut numerator = BigUint::ZERO;
    for (e, &c) in profile.counts.iter().enumerate() {
        if c > 0 {
            numerator += BigUint::from(c) * num_p.pow(e as u32) * num_q.pow(nm - e as u32);
        }
    }
    Ok(ExactProbability {
        numerator,
        denominator: BigUint::from(p_den).pow(nm),
    })
}
