// SPDX-License-Identifier: Apache-2.0

//! Pure dephasing of |+> under P = |0><0|. With H = 0 the commutable
//! approximation is exact and coherences decay as e^{-λt/2}.
//!
//! cargo run -p lindproj --example dephasing

use lindproj::config::presets;
use lindproj::propagate::{approx_propagate_closed, exact_propagate};

fn main() -> lindproj::Result<()> {
    let scenario = presets::load("qubit-dephasing")?;
    let rate = scenario.family.members()[0].rate;
    println!("{:>6} {:>14} {:>14} {:>14}", "t", "exact rho01", "approx rho01", "0.5 e^-lt/2");
    for &t in scenario.time_grid.iter().step_by(4) {
        let exact = exact_propagate(&scenario, t)?.state;
        let approx = approx_propagate_closed(&scenario, t)?.state;
        println!(
            "{t:>6.2} {:>14.10} {:>14.10} {:>14.10}",
            exact[(0, 1)].re,
            approx[(0, 1)].re,
            0.5 * (-rate * t / 2.0).exp()
        );
    }
    Ok(())
}
