//! # bipcon
//!
//! Connectivity probability of the random binomial bipartite graph G(n,m,p),
//! computed by four mutually validating routes:
//!
//! * **brute force** — exhaustive enumeration of all 2^{nm} edge subsets at
//!   tiny scale ([`brute`]);
//! * **exploration DP** — an exact dynamic program over the trajectories of a
//!   sequential vertex exploration process ([`mod@explore`]);
//! * **walk representation** — the same probability as an explicit prefactor
//!   times the conditional nonnegativity probability of a deficit process
//!   built from two inhomogeneous Poisson walks ([`walk`]);
//! * **Monte Carlo** — seeded, reproducible simulation ([`simulate`]).
//!
//! On top of these, [`asymptotics`] evaluates the four limit-regime formulas
//! for c = p·(n+m) (diverging, constant, slowly vanishing, o(1/n)) and
//! classifies parameter triples.
//!
//! ## Quick start
//!
//! ```
//! use bipcon::{GraphParams, brute_connectivity, exact_connectivity_dp, connectivity_via_walk};
//!
//! let gp = GraphParams::new(2, 2, 0.5)?;
//! let brute = brute_connectivity(&gp)?;            // 5/16 by enumeration
//! let dp = exact_connectivity_dp(&gp)?;            // same value via the trajectory DP
//! let walk = connectivity_via_walk(&gp)?.total;    // same value via the walk representation
//! assert!((brute - 0.3125).abs() < 1e-15);
//! assert!((dp - brute).abs() < 1e-12);
//! assert!((walk - brute).abs() < 1e-10);
//! # Ok::<(), bipcon::Error>(())
//! ```
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --release --example cross_validation      # four routes side by side
//! cargo run --release --example exploration_trace     # the exploration process on concrete graphs
//! cargo run --release --example edge_profile          # connected-subgraph counts, spanning trees
//! cargo run --release --example monte_carlo           # seeded MC vs the exact routes
//! cargo run --release --example walk_realizations     # walk trajectories, deficit/recovery views
//! cargo run --release --example expectation_curves    # closed-form curves vs empirical means
//! cargo run --release --example asymptotic_regimes    # regime formulas approaching the exact value
//! cargo run --release --example regime_classification # threshold-based regime coverage map
//! ```
//!
//! ## Command line
//!
//! The `bipcon` binary exposes the same capabilities as subcommands
//! (`exact`, `mc`, `walk`, `asym`, `classify`, `sweep`, `curves`), emitting
//! JSON for single evaluations and CSV for sweeps and curve tables:
//!
//! ```bash
//! bipcon exact --n 2 --m 2 --p 0.5 --method all
//! bipcon mc --n 30 --m 45 --p 0.25 --samples 100000 --seed 7
//! bipcon sweep --grid-n 25,50,100 --grid-c 3 --method walk-dp,asym-r2
//! bipcon curves --n 50 --m 50 --p 0.06 --realizations 5 --seed 1 --out s_curves.csv
//! ```
//!
//! Randomness always requires an explicit seed, replicas map to fixed RNG
//! streams, and outputs are byte-identical across runs and worker counts.

#![forbid(unsafe_code)]

pub mod asymptotics;
pub mod brute;
pub mod cli;
pub mod error;
pub mod explore;
pub mod graph;
pub mod params;
pub mod pmf;
pub mod report;
pub mod rng;
pub mod simulate;
pub mod walk;

pub use asymptotics::{
    asym_estimate, asym_estimate_with_c, classify_regime, classify_regime_with, Regime,
    RegimeClass, RegimeResult, RegimeThresholds,
};
pub use brute::{
    brute_connectivity, brute_connectivity_exact, edge_count_profile, spanning_tree_count,
    EdgeCountProfile, ExactProbability,
};
pub use error::{Error, Result};
pub use explore::{exact_connectivity_dp, explore, ExplorationTrace};
pub use graph::{is_connected, BipartiteGraph};
pub use params::{
    degenerate_connectivity, expectation_curves, walk_params, ExpectationCurves, GraphParams,
    WalkParams,
};
pub use simulate::{
    curve_data, mc_connectivity, mc_connectivity_par, sample_graph, sample_graph_replica,
    sample_walk, sample_walk_replica, ConnectivityEstimate, CurveData, Method, WalkSample,
};
pub use walk::{conditional_nonneg_prob, connectivity_via_walk, prefactor, WalkDpResult};
