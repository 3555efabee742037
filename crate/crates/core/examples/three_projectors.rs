// SPDX-License-Identifier: Apache-2.0

//! Three orthogonal projectors: the R_j superoperators commute, pairwise
//! products reduce to P_j⊗P_kᵀ + P_k⊗P_jᵀ and triple products vanish, so the
//! product form, its expansion and the closed form coincide.
//!
//! cargo run -p lindproj --example three_projectors

use lindproj::config::presets;
use lindproj::linalg::{commutator, kron};
use lindproj::model::build_r;
use lindproj::propagate::{
    approx_propagate_closed, approx_propagate_expanded, approx_propagate_product,
};

fn main() -> lindproj::Result<()> {
    let scenario = presets::load("three-projector")?;
    let ps: Vec<_> = scenario.family.members().iter().map(|m| m.projector.clone()).collect();
    let rs = ps.iter().map(|p| build_r(p)).collect::<lindproj::Result<Vec<_>>>()?;

    for j in 0..rs.len() {
        for k in j + 1..rs.len() {
            let comm = commutator(rs[j].matrix(), rs[k].matrix())?.frobenius_norm();
            let pair = &kron(&ps[j], &ps[k].transpose()) + &kron(&ps[k], &ps[j].transpose());
            let pair_err = (rs[j].matrix() * rs[k].matrix()).distance(&pair);
            println!("R_{j} R_{k}: commutator {comm:.1e}, pair identity {pair_err:.1e}");
        }
    }
    let triple = &(rs[0].matrix() * rs[1].matrix()) * rs[2].matrix();
    println!("R_0 R_1 R_2: {:.1e}", triple.frobenius_norm());

    println!("{:>5} {:>14} {:>14}", "t", "closed-product", "closed-expanded");
    for &t in &scenario.time_grid {
        let closed = approx_propagate_closed(&scenario, t)?.state;
        let product = approx_propagate_product(&scenario, t)?.state;
        let expanded = approx_propagate_expanded(&scenario, t)?.state;
        println!("{t:>5.2} {:>14.2e} {:>14.2e}", closed.distance(&product), closed.distance(&expanded));
    }
    Ok(())
}
