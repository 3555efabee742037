// SPDX-License-Identifier: Apache-2.0

//! Driven qubit (H = σ_x) with dephasing: the generators do not commute and the
//! approximation error grows like t². Prints the sweep and the fitted order.
//!
//! cargo run -p lindproj --example driven_qubit_convergence

use lindproj::analysis::{convergence_order, sweep};
use lindproj::config::presets;

fn main() -> lindproj::Result<()> {
    let grid: Vec<f64> = (0..8).map(|k| 0.4 / 2f64.powi(k)).rev().collect();
    let scenario = presets::load("driven-qubit")?.with_time_grid(grid)?;
    let records = sweep(&scenario)?.into_iter().collect::<lindproj::Result<Vec<_>>>()?;
    println!("{:>10} {:>14} {:>14} {:>14}", "t", "trace dist", "frob gap", "bch indicator");
    for r in &records {
        println!(
            "{:>10.5} {:>14.6e} {:>14.6e} {:>14.6e}",
            r.time, r.trace_distance, r.frobenius_gap, r.bch_indicator
        );
    }
    println!("fitted order: {:.4}", convergence_order(&records)?);
    Ok(())
}
