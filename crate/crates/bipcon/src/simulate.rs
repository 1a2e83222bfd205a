//! Seeded Monte Carlo: graph sampling, connectivity estimation, walk
//! trajectory sampling, and the curve tables behind the S / B / V plots.
//!
//! Determinism contract: every function here is a pure function of its inputs
//! and the (seed, stream) pair; replica r always draws from stream r, so
//! results are independent of worker count and identical across runs.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{is_connected, BipartiteGraph};
use crate::params::{expectation_curves, walk_params, GraphParams};
use crate::rng::{replica_rng, sample_poisson};

use rand::Rng;

/// Which route produced a connectivity value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    #[serde(rename = "monte-carlo")]
    MonteCarlo,
    #[serde(rename = "brute")]
    Brute,
    #[serde(rename = "exploration-dp")]
    ExplorationDp,
    #[serde(rename = "walk-dp")]
    WalkDp,
    #[serde(rename = "asymptotic")]
    Asymptotic,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::MonteCarlo => "monte-carlo",
            Method::Brute => "brute",
            Method::ExplorationDp => "exploration-dp",
            Method::WalkDp => "walk-dp",
            Method::Asymptotic => "asymptotic",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A probability value with provenance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConnectivityEstimate {
    pub estimate: f64,
    /// Binomial standard error √(p̂(1−p̂)/N); zero for exact methods.
    pub stderr: f64,
    pub samples: Option<u64>,
    pub seed: Option<u64>,
    pub method: Method,
}

impl ConnectivityEstimate {
    pub fn exact(method: Method, value: f64) -> Self {
        Self {
            estimate: value,
            stderr: 0.0,
            samples: None,
            seed: None,
            method,
        }
    }
}

/// One G(n,m,p) draw from (seed, stream 0).
pub fn sample_graph(gp: &GraphParams, seed: u64) -> BipartiteGraph {
    sample_graph_replica(gp, seed, 0)
}

/// One G(n,m,p) draw from (seed, stream `replica`): each of the n·m edges is
/// present independently with probability p, visited in row-major order.
pub fn sample_graph_replica(gp: &GraphParams, seed: u64, replica: u64) -> BipartiteGraph {
    let mut rng = replica_rng(seed, replica);
    let mut g = BipartiteGraph::new(gp.n(), gp.m());
    let p = gp.p();
    for i in 0..gp.n() {
        for j in 0..gp.m() {
            if rng.random::<f64>() < p {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Monte Carlo connectivity estimate over `samples` independent graphs,
/// single-threaded.
pub fn mc_connectivity(gp: &GraphParams, samples: u64, seed: u64) -> ConnectivityEstimate {
    mc_connectivity_par(gp, samples, seed, 1)
}

/// Monte Carlo estimate with replicas partitioned across `workers` threads by
/// stream index. The per-replica outcomes do not depend on the partition and
/// the reduction is an integer sum, so any worker count gives bit-identical
/// results.
pub fn mc_connectivity_par(
    gp: &GraphParams,
    samples: u64,
    seed: u64,
    workers: usize,
) -> ConnectivityEstimate {
    assert!(samples >= 1, "need at least one sample");
    let workers = workers.max(1).min(samples as usize);
    let count_range = |lo: u64, hi: u64| -> u64 {
        let mut hits = 0u64;
        for replica in lo..hi {
            if is_connected(&sample_graph_replica(gp, seed, replica)) {
                hits += 1;
            }
        }
        hits
    };
    let hits: u64 = if workers == 1 {
        count_range(0, samples)
    } else {
        let per = samples / workers as u64;
        let rem = samples % workers as u64;
        std::thread::scope(|scope| {
            let mut handles = Vec::with_capacity(workers);
            let mut start = 0u64;
            for w in 0..workers as u64 {
                let len = per + u64::from(w < rem);
                let (lo, hi) = (start, start + len);
                start = hi;
                handles.push(scope.spawn(move || count_range(lo, hi)));
            }
            handles.into_iter().map(|h| h.join().unwrap()).sum()
        })
    };
    let estimate = hits as f64 / samples as f64;
    ConnectivityEstimate {
        estimate,
        stderr: (estimate * (1.0 - estimate) / samples as f64).sqrt(),
        samples: Some(samples),
        seed: Some(seed),
        method: Method::MonteCarlo,
    }
}

/// One sampled trajectory of the walk pair (A, B), the deficit S and the
/// recovery process V^A.
///
/// `a[i]` = A_{i+1}, `b[j]` = B_{j+1} for j < m, `s[k]` = S_{k+1} =
/// B_{A_{k+1}} − (k+1), `v[j]` = V^A_{j+1} = #{i : A_{i+1} ≤ j+1}.
///
/// B is sampled past index m (geometric intensities continued) whenever some
/// A_k exceeds m, so `s` is the true composition B∘A − k without index
/// capping; `b` and `v` keep the m-range the recovery comparison lives on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkSample {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub s: Vec<i64>,
    pub v: Vec<u64>,
}

impl WalkSample {
    fn m(&self) -> usize {
        self.b.len()
    }

    /// Minimum of S_k over the steps 1..=n whose index A_k lies within the
    /// sampled B-range 0..=m (the range the recovery comparison can see);
    /// None when no step does.
    pub fn min_deficit_in_range(&self) -> Option<i64> {
        let m = self.m() as u64;
        self.a
            .iter()
            .zip(&self.s)
            .filter(|(&a_k, _)| a_k <= m)
            .map(|(_, &s_k)| s_k)
            .min()
    }

    /// Minimum of B_k − V^A_k over k = 0..=m. The k = 0 term is
    /// −#{i : A_i = 0}: walk steps that land at index 0 appear on the
    /// recovery side only there (B_0 = 0), and on the deficit side as
    /// S_i = −i < 0.
    pub fn min_recovery_margin(&self) -> i64 {
        let at_zero = -(self.a.iter().take_while(|&&a_i| a_i == 0).count() as i64);
        self.b
            .iter()
            .zip(&self.v)
            .map(|(&bk, &vk)| bk as i64 - vk as i64)
            .fold(at_zero, i64::min)
    }

    /// The nonnegativity equivalence between the deficit and recovery views:
    /// S_k ≥ 0 on every in-range step iff B dominates V^A on 1..=m.
    pub fn recovery_equivalence_holds(&self) -> bool {
        let deficit_ok = self.min_deficit_in_range().is_none_or(|s| s >= 0);
        let recovery_ok = self.min_recovery_margin() >= 0;
        deficit_ok == recovery_ok
    }

    /// B_{A_k} for k = 1..=n, the composition whose mean the closed-form
    /// expectation curve describes.
    pub fn composition(&self) -> Vec<u64> {
        self.s
            .iter()
            .enumerate()
            .map(|(k, &s_k)| (s_k + (k as i64 + 1)) as u64)
            .collect()
    }
}

/// Samples one walk pair from (seed, stream 0).
pub fn sample_walk(gp: &GraphParams, seed: u64) -> Result<WalkSample> {
    sample_walk_replica(gp, seed, 0)
}

/// Samples one walk pair from (seed, stream `replica`): X_i ~ Poisson(α_i)
/// then Y_j ~ Poisson(β_j), drawn in index order.
pub fn sample_walk_replica(gp: &GraphParams, seed: u64, replica: u64) -> Result<WalkSample> {
    let wp = walk_params(gp)?;
    let (n, m) = (gp.n(), gp.m());
    let q = 1.0 - gp.p();
    let mut rng = replica_rng(seed, replica);

    let mut a = Vec::with_capacity(n);
    let mut total = 0u64;
    for &alpha_i in &wp.alpha {
        total += sample_poisson(&mut rng, alpha_i);
        a.push(total);
    }

    // B must extend to max(m, A_n); past index m the geometric decay of the
    // intensities simply continues.
    let top = (a[n - 1] as usize).max(m);
    let mut b_full = Vec::with_capacity(top + 1);
    b_full.push(0u64);
    let mut running = 0u64;
    let mut beta_j = wp.beta[0];
    for j in 0..top {
        if j < m {
            beta_j = wp.beta[j];
        } else {
            beta_j *= q;
        }
        running += sample_poisson(&mut rng, beta_j);
        b_full.push(running);
    }

    let s: Vec<i64> = a
        .iter()
        .enumerate()
        .map(|(k, &a_k)| b_full[a_k as usize] as i64 - (k as i64 + 1))
        .collect();

    // V^A_k = #{i : A_i ≤ k} by a two-pointer sweep over the sorted A.
    let mut v = Vec::with_capacity(m);
    let mut i = 0usize;
    for k in 1..=m as u64 {
        while i < n && a[i] <= k {
            i += 1;
        }
        v.push(i as u64);
    }

    let sample = WalkSample {
        a,
        b: b_full[1..=m].to_vec(),
        s,
        v,
    };
    assert!(
        sample.recovery_equivalence_holds(),
        "deficit/recovery equivalence violated: {sample:?}"
    );
    Ok(sample)
}

/// The data behind the trajectory figures: the closed-form expectation curve,
/// sampled B∘A realizations, and one B/V^A recovery realization.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveData {
    pub gp: GraphParams,
    /// Closed-form E B_{A_k}, k = 1..=n.
    pub es: Vec<f64>,
    /// `realizations[t][k−1]` = B_{A_k} in replica stream t.
    pub realizations: Vec<Vec<u64>>,
    /// The stream-0 walk, used for the B/V table.
    pub first_walk: WalkSample,
}

impl CurveData {
    /// CSV `k,ES,S_r1,...`: the expectation curve and one column per
    /// realization (values are B_{A_k}; subtract k for the deficit).
    pub fn s_table_csv(&self) -> String {
        let mut out = String::from("k,ES");
        for t in 1..=self.realizations.len() {
            out.push_str(&format!(",S_r{t}"));
        }
        out.push('\n');
        for k in 1..=self.gp.n() {
            out.push_str(&format!("{k},{}", self.es[k - 1]));
            for real in &self.realizations {
                out.push_str(&format!(",{}", real[k - 1]));
            }
            out.push('\n');
        }
        out
    }

    /// CSV `k,B,V,ref_line` over k = 1..=m, with the reference line k·n/m.
    pub fn bv_table_csv(&self) -> String {
        let mut out = String::from("k,B,V,ref_line\n");
        let ratio = self.gp.n() as f64 / self.gp.m() as f64;
        for k in 1..=self.gp.m() {
            out.push_str(&format!(
                "{k},{},{},{}\n",
                self.first_walk.b[k - 1],
                self.first_walk.v[k - 1],
                k as f64 * ratio
            ));
        }
        out
    }
}

/// Samples `realizations` walks (streams 0..realizations) and assembles the
/// curve tables. The B/V table always uses stream 0, the same walk as S_r1.
pub fn curve_data(gp: &GraphParams, realizations: u32, seed: u64) -> Result<CurveData> {
    curve_data_par(gp, realizations, seed, 1)
}

/// Same, with realizations partitioned across `workers` threads by stream
/// index and reassembled in stream order — the output is identical for any
/// worker count.
pub fn curve_data_par(
    gp: &GraphParams,
    realizations: u32,
    seed: u64,
    workers: usize,
) -> Result<CurveData> {
    let es = expectation_curves(gp)?.es;
    let total = realizations.max(1) as u64;
    let workers = workers.max(1).min(total as usize);
    let sample_range = |lo: u64, hi: u64| -> Result<Vec<WalkSample>> {
        (lo..hi).map(|t| sample_walk_replica(gp, seed, t)).collect()
    };
    let mut walks: Vec<WalkSample> = if workers == 1 {
        sample_range(0, total)?
    } else {
        let per = total / workers as u64;
        let rem = total % workers as u64;
        let chunks = std::thread::scope(|scope| {
            let mut handles = Vec::with_capacity(workers);
            let mut start = 0u64;
            for w in 0..workers as u64 {
                let len = per + u64::from(w < rem);
                let (lo, hi) = (start, start + len);
                start = hi;
                handles.push(scope.spawn(move || sample_range(lo, hi)));
            }
            handles
                .into_iter()
                .map(|h| h.join().unwrap())
                .collect::<Vec<_>>()
        });
        let mut all = Vec::with_capacity(total as usize);
        for chunk in chunks {
            all.extend(chunk?);
        }
        all
    };
    let first_walk = walks[0].clone();
    walks.truncate(realizations as usize);
    Ok(CurveData {
        gp: *gp,
        es,
        realizations: walks.iter().map(|w| w.composition()).collect(),
        first_walk,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute::brute_connectivity;
    use crate::pmf::pow_one_minus;

    #[test]
    fn degenerate_p_graphs() {
        let empty = sample_graph(&GraphParams::new(4, 5, 0.0).unwrap(), 99);
        assert_eq!(empty.edge_count(), 0);
        let full = sample_graph(&GraphParams::new(4, 5, 1.0).unwrap(), 99);
        assert_eq!(full.edge_count(), 20);
    }

    #[test]
    fn same_seed_same_graph() {
        let gp = GraphParams::new(10, 12, 0.35).unwrap();
        assert_eq!(sample_graph(&gp, 7), sample_graph(&gp, 7));
        assert_ne!(sample_graph(&gp, 7), sample_graph(&gp, 8));
    }

    #[test]
    fn empirical_edge_density() {
        // (5,5,0.5), 10^5 samples: density within 4σ, σ = √(0.25/(25·10^5)).
        let gp = GraphParams::new(5, 5, 0.5).unwrap();
        let samples = 100_000u64;
        let mut edges = 0u64;
        for r in 0..samples {
            edges += sample_graph_replica(&gp, 31, r).edge_count() as u64;
        }
        let density = edges as f64 / (samples as f64 * 25.0);
        let sigma = (0.25 / (25.0 * samples as f64)).sqrt();
        assert!(
            (density - 0.5).abs() < 4.0 * sigma,
            "density {density}, 4σ = {}",
            4.0 * sigma
        );
    }

    #[test]
    fn mc_agrees_with_brute_at_2_2() {
        let gp = GraphParams::new(2, 2, 0.5).unwrap();
        let est = mc_connectivity(&gp, 1_000_000, 5);
        let brute = brute_connectivity(&gp).unwrap();
        assert!((est.estimate - brute).abs() < 4.0 * est.stderr);
        assert!(est.stderr > 0.0);
        assert_eq!(est.samples, Some(1_000_000));
    }

    #[test]
    fn mc_complete_graph_has_zero_stderr() {
        let gp = GraphParams::new(3, 3, 1.0).unwrap();
        let est = mc_connectivity(&gp, 500, 1);
        assert_eq!(est.estimate, 1.0);
        assert_eq!(est.stderr, 0.0);
    }

    #[test]
    fn mc_worker_count_is_invisible() {
        let gp = GraphParams::new(6, 7, 0.3).unwrap();
        let serial = mc_connectivity_par(&gp, 2_001, 11, 1);
        for workers in [2, 3, 8] {
            assert_eq!(serial, mc_connectivity_par(&gp, 2_001, 11, workers));
        }
    }

    #[test]
    fn walk_sample_shapes_and_monotonicity() {
        let gp = GraphParams::new(30, 40, 0.05).unwrap();
        let ws = sample_walk(&gp, 3).unwrap();
        assert_eq!(ws.a.len(), 30);
        assert_eq!(ws.b.len(), 40);
        assert_eq!(ws.s.len(), 30);
        assert_eq!(ws.v.len(), 40);
        assert!(ws.a.windows(2).all(|w| w[0] <= w[1]));
        assert!(ws.b.windows(2).all(|w| w[0] <= w[1]));
        assert!(ws.v.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn walk_single_left_vertex_is_trivially_nonnegative() {
        // n = 1: the 0 < k < n constraint set is empty; only S_1 exists.
        let gp = GraphParams::new(1, 6, 0.4).unwrap();
        for r in 0..50 {
            let ws = sample_walk_replica(&gp, 17, r).unwrap();
            assert!(ws.recovery_equivalence_holds());
        }
    }

    #[test]
    fn recovery_equivalence_over_many_samples() {
        let gp = GraphParams::new(50, 50, 0.06).unwrap();
        for r in 0..1_000 {
            // The constructor asserts the equivalence internally.
            let ws = sample_walk_replica(&gp, 1234, r).unwrap();
            // And both views must agree on the sign.
            assert_eq!(
                ws.min_deficit_in_range().is_none_or(|s| s >= 0),
                ws.min_recovery_margin() >= 0
            );
        }
    }

    #[test]
    fn generating_function_identity_monte_carlo() {
        // E[(1−p)^{A_k}] = e^{−μ_k p}, the identity behind the E S_k curve.
        let gp = GraphParams::new(20, 20, 0.1).unwrap();
        let curves = expectation_curves(&gp).unwrap();
        let samples = 20_000u64;
        for &k in &[1usize, 10, 20] {
            let mut sum = 0.0;
            let mut sum_sq = 0.0;
            for r in 0..samples {
                let ws = sample_walk_replica(&gp, 55, r).unwrap();
                let val = pow_one_minus(gp.p(), ws.a[k - 1] as f64);
                sum += val;
                sum_sq += val * val;
            }
            let mean = sum / samples as f64;
            let expected = (-curves.mu[k - 1] * gp.p()).exp();
            let var = (sum_sq / samples as f64 - mean * mean).max(0.0);
            let se = (var / samples as f64).sqrt();
            assert!(
                (mean - expected).abs() < 4.0 * se + 1e-12,
                "k = {k}: mean {mean}, expected {expected}"
            );
        }
    }

    #[test]
    fn curve_tables_are_deterministic() {
        let gp = GraphParams::new(12, 9, 0.2).unwrap();
        let c1 = curve_data(&gp, 3, 77).unwrap();
        let c2 = curve_data(&gp, 3, 77).unwrap();
        assert_eq!(c1.s_table_csv(), c2.s_table_csv());
        assert_eq!(c1.bv_table_csv(), c2.bv_table_csv());
    }

    #[test]
    fn curve_table_shapes() {
        let gp = GraphParams::new(4, 3, 0.3).unwrap();
        let data = curve_data(&gp, 0, 5).unwrap();
        let s_csv = data.s_table_csv();
        let mut lines = s_csv.lines();
        assert_eq!(lines.next(), Some("k,ES"));
        assert_eq!(lines.count(), 4);
        let bv_csv = data.bv_table_csv();
        assert!(bv_csv.starts_with("k,B,V,ref_line\n"));
        assert_eq!(bv_csv.lines().count(), 4);

        let with_reals = curve_data(&gp, 2, 5).unwrap();
        assert!(with_reals.s_table_csv().starts_with("k,ES,S_r1,S_r2\n"));
        // Realization column 1 is the same walk the bv table shows.
        assert_eq!(
            with_reals.realizations[0],
            with_reals.first_walk.composition()
        );
    }

    #[test]
    fn es_row_at_k_equals_closed_form_endpoint() {
        // At k = n the curve is n(1−e^{−mp})/(1−(1−p)^m).
        let gp = GraphParams::new(7, 5, 0.25).unwrap();
        let data = curve_data(&gp, 0, 1).unwrap();
        let expected = 7.0 * (-(-5.0 * 0.25f64).exp_m1()) / (1.0 - 0.75f64.powi(5));
        assert!((data.es[6] - expected).abs() < 1e-12);
    }
}
