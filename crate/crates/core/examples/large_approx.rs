// SPDX-License-Identifier: Apache-2.0

//! Cost of the two routes as the dimension grows: the exact route
//! exponentiates an n²×n² generator, the closed form works with n×n products.
//!
//! cargo run --release -p lindproj --example large_approx

use std::time::Instant;

use lindproj::propagate::{ClosedFormPropagator, ExactPropagator};
use lindproj::random::random_scenario;
use rand::SeedableRng;

fn main() -> lindproj::Result<()> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(42);
    println!("{:>4} {:>12} {:>12} {:>12}", "n", "exact (ms)", "closed (ms)", "frob gap");
    for n in [2, 4, 8, 12, 16] {
        let scenario = random_scenario(n, 1.0, vec![0.5], &mut rng);
        let start = Instant::now();
        let approx = ClosedFormPropagator::new(&scenario)?.propagate(0.5)?.state;
        let closed_ms = start.elapsed().as_secs_f64() * 1e3;
        let start = Instant::now();
        let exact = ExactPropagator::new(&scenario)?.propagate(0.5)?.state;
        let exact_ms = start.elapsed().as_secs_f64() * 1e3;
        println!("{n:>4} {exact_ms:>12.3} {closed_ms:>12.3} {:>12.3e}", exact.distance(&approx));
    }
    Ok(())
}
