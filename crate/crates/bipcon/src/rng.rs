//! Seeded, splittable randomness.
//!
//! All simulation randomness comes from the ChaCha8 counter-based stream
//! cipher RNG: replica r of a run with seed s draws from
//! `ChaCha8Rng::seed_from_u64(s)` switched to stream r. Streams are
//! independent and the mapping (seed, stream) → byte stream is a fixed,
//! documented function, so parallel and serial runs see identical draws.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Threshold between the inversion and transformed-rejection Poisson samplers.
const POISSON_INVERSION_MAX: f64 = 30.0;

/// The RNG for replica `stream` of a run seeded with `seed`.
pub fn replica_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Draws Poisson(lambda).
///
/// Sequential inversion of the CDF below λ = 30; above that, Hörmann's
/// transformed rejection (PTRS), which needs ~1.1 uniforms per draw at any
/// rate. `lambda` must be finite and nonnegative.
pub fn sample_poisson<R: Rng + ?Sized>(rng: &mut R, lambda: f64) -> u64 {
    assert!(
        lambda.is_finite() && lambda >= 0.0,
        "Poisson rate must be finite and nonnegative, got {lambda}"
    );
    if lambda == 0.0 {
        0
    } else if lambda < POISSON_INVERSION_MAX {
        poisson_inversion(rng, lambda)
    } else {
        poisson_ptrs(rng, lambda)
    }
}

fn poisson_inversion<R: Rng + ?Sized>(rng: &mut R, lambda: f64) -> u64 {
    let u: f64 = rng.random();
    let mut k = 0u64;
    let mut pmf = (-lambda).exp();
    let mut cdf = pmf;
    // Hard cap guards against u landing in the last few ulps of the CDF.
    let cap = (lambda + 20.0 * lambda.sqrt() + 100.0) as u64;
    while u > cdf && k < cap {
        k += 1;
        pmf *= lambda / k as f64;
        cdf += pmf;
    }
    k
}

/// Transformed rejection with squeeze (Hörmann 1993), valid for λ ≥ 10.
fn poisson_ptrs<R: Rng + ?Sized>(rng: &mut R, lambda: f64) -> u64 {
    let b = 0.931 + 2.53 * lambda.sqrt();
    let a = -0.059 + 0.02483 * b;
    let inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    let v_r = 0.9277 - 3.6224 / (b - 2.0);
    let ln_lambda = lambda.ln();
    loop {
        let u: f64 = rng.random::<f64>() - 0.5;
        let v: f64 = rng.random();
        let us = 0.5 - u.abs();
        let k = ((2.0 * a / us + b) * u + lambda + 0.43).floor();
        if us >= 0.07 && v <= v_r {
            return k as u64;
        }
        if k < 0.0 || (us < 0.013 && v > us) {
            continue;
        }
        let accept = (v * inv_alpha / (a / (us * us) + b)).ln()
            <= -lambda + k * ln_lambda - crate::pmf::ln_factorial(k as u64);
        if accept {
            return k as u64;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_seed_and_stream_reproduce() {
        let mut r1 = replica_rng(42, 7);
        let mut r2 = replica_rng(42, 7);
        for _ in 0..100 {
            assert_eq!(r1.random::<u64>(), r2.random::<u64>());
        }
    }

    #[test]
    fn distinct_streams_differ() {
        let mut r1 = replica_rng(42, 0);
        let mut r2 = replica_rng(42, 1);
        let same = (0..64)
            .filter(|_| r1.random::<u64>() == r2.random::<u64>())
            .count();
        assert_eq!(same, 0);
    }

    #[test]
    fn poisson_sampler_moments() {
        // Covers both the inversion and the PTRS branch.
        for &lambda in &[0.4, 3.0, 29.5, 30.5, 80.0, 400.0] {
            let mut rng = replica_rng(2024, 0);
            let n = 200_000usize;
            let mut sum = 0.0f64;
            let mut sum_sq = 0.0f64;
            for _ in 0..n {
                let x = sample_poisson(&mut rng, lambda) as f64;
                sum += x;
                sum_sq += x * x;
            }
            let mean = sum / n as f64;
            let var = sum_sq / n as f64 - mean * mean;
            let se_mean = (lambda / n as f64).sqrt();
            assert!(
                (mean - lambda).abs() < 5.0 * se_mean,
                "λ = {lambda}: mean = {mean}"
            );
            // Var = λ; its estimator SE is ≈ λ√(2/n) for Poisson-sized kurtosis.
            let se_var = lambda * (2.0 / n as f64).sqrt() + lambda.sqrt() / n as f64 * 10.0;
            assert!(
                (var - lambda).abs() < 6.0 * se_var + 0.01,
                "λ = {lambda}: var = {var}"
            );
        }
    }

    #[test]
    fn poisson_matches_pmf_at_moderate_rate() {
        // Frequency of a few small counts vs the exact pmf, 4σ bounds.
        let lambda = 3.0;
        let n = 200_000usize;
        let mut rng = replica_rng(7, 3);
        let mut freq = [0u64; 12];
        for _ in 0..n {
            let k = sample_poisson(&mut rng, lambda) as usize;
            if k < freq.len() {
                freq[k] += 1;
            }
        }
        for (k, &count) in freq.iter().enumerate() {
            let p = crate::pmf::poisson_pmf(k as u64, lambda).unwrap();
            let se = (p * (1.0 - p) / n as f64).sqrt();
            let observed = count as f64 / n as f64;
            assert!(
                (observed - p).abs() < 4.0 * se + 1e-9,
                "k = {k}: observed {observed}, expected {p}"
            );
        }
    }

    #[test]
    fn poisson_zero_rate() {
        let mut rng = replica_rng(1, 0);
        assert_eq!(sample_poisson(&mut rng, 0.0), 0);
    }
}
