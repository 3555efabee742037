// SPDX-License-Identifier: Apache-2.0

//! Truncated BCH interaction term I(A, B) for the driven qubit. Reinserting it
//! between e^{tA} and e^{tB} leaves a fourth-order residual; dropping it (the
//! commutable approximation) leaves a second-order one.
//!
//! cargo run -p lindproj --example bch_interaction

use lindproj::config::presets;
use lindproj::linalg::{matexp, C64};
use lindproj::propagate::{bch_interaction_term, generators};

fn main() -> lindproj::Result<()> {
    let scenario = presets::load("driven-qubit")?;
    let (a, b) = generators(&scenario);
    println!("{:>6} {:>16} {:>16}", "t", "|e^A e^B - e^L|", "|e^A e^I e^B - e^L|");
    for t in [0.4, 0.2, 0.1, 0.05, 0.025] {
        let (ta, tb) = (a.scale(C64::new(t, 0.0)), b.scale(C64::new(t, 0.0)));
        let full = matexp(&(ta.matrix() + tb.matrix()))?;
        let (ea, eb) = (matexp(ta.matrix())?, matexp(tb.matrix())?);
        let split = &ea * &eb;
        let corrected = &(&ea * &matexp(&bch_interaction_term(&ta, &tb)?)?) * &eb;
        println!("{t:>6.3} {:>16.6e} {:>16.6e}", split.distance(&full), corrected.distance(&full));
    }
    Ok(())
}
