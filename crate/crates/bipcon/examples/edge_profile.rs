//! Connected-subgraph counts by exhaustive enumeration: the edge-count
//! profile, the spanning-tree coefficient n^{m−1} m^{n−1}, and the
//! connectivity polynomial it induces.
//!
//! Run with: cargo run --release --example edge_profile

use bipcon::{brute_connectivity_exact, edge_count_profile, spanning_tree_count, GraphParams};

fn main() -> Result<(), bipcon::Error> {
    for &(n, m) in &[(2usize, 2usize), (3, 2), (3, 3), (2, 6)] {
        let profile = edge_count_profile(n, m)?;
        println!("K_{{{n},{m}}}: counts[e] = {:?}", profile.counts);
        println!(
            "  spanning trees: counts[{}] = {} (formula n^{{m-1}} m^{{n-1}} = {})",
            n + m - 1,
            profile.counts[n + m - 1],
            spanning_tree_count(n as u64, m as u64)
        );
        print!("  P(connected) at p = 0.1..0.9:");
        for t in 1..=9 {
            print!(" {:.4}", profile.connectivity_at(t as f64 / 10.0));
        }
        println!("\n");
    }

    // The exact-rational oracle gives bit-exact values for rational p.
    let exact = brute_connectivity_exact(3, 3, 1, 4)?;
    let float = bipcon::brute_connectivity(&GraphParams::new(3, 3, 0.25)?)?;
    println!(
        "P(3,3, p=1/4) = {}/{} = {} (float evaluation {float})",
        exact.numerator,
        exact.denominator,
        exact.to_f64()
    );
    Ok(())
}
