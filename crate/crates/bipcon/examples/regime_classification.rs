//! Threshold-based regime classification across the range of c = p·(n+m),
//! including the gaps the regime theorem leaves uncovered.
//!
//! Run with: cargo run --release --example regime_classification

use bipcon::{classify_regime, classify_regime_with, GraphParams, RegimeThresholds};

fn main() -> Result<(), bipcon::Error> {
    let n = 1000usize;
    println!("classification at n = m = {n}:");
    println!("{:>12} {:>12} {:>18}", "c", "p", "regime");
    for &c in &[
        30.0,
        3.0 * (2.0 * n as f64).ln(), // exactly the dense threshold
        3.0,
        0.5,
        0.1,
        0.05,
        0.01,
        1e-3,
        0.1 / n as f64,
        1e-6,
    ] {
        let gp = GraphParams::from_c(n, n, c)?;
        println!(
            "{c:>12.6} {:>12.6e} {:>18}",
            gp.p(),
            classify_regime(&gp, None).as_str()
        );
    }

    // The small-c regime needs c·√n/ln n to be large; at n = 10^6 the same
    // c = 0.05 that was uncovered above clears the ratio.
    println!("\nthe c = 0.05 band against growing n:");
    for &n in &[1_000usize, 100_000, 10_000_000] {
        let gp = GraphParams::from_c(n, n, 0.05)?;
        let ratio = 0.05 * (n as f64).sqrt() / (n as f64).ln();
        println!(
            "  n = {n:>9}: c·√n/ln n = {ratio:>8.2} → {}",
            classify_regime(&gp, None).as_str()
        );
    }

    // Thresholds are configuration, not law.
    let gp = GraphParams::from_c(1000, 1000, 0.05)?;
    let relaxed = RegimeThresholds {
        r3_ratio: 1.0,
        ..Default::default()
    };
    println!(
        "\nc = 0.05 at n = 1000: default → {}, relaxed r3_ratio → {}",
        classify_regime(&gp, None).as_str(),
        classify_regime_with(&gp, None, &relaxed).as_str()
    );
    Ok(())
}
