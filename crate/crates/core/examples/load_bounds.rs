//! Endpoint-charging loads on a bounded-degree instance, against their bounds.

use vertex_ranking::compute_layering;
use vertex_ranking::generators::{generate, GenSpec};
use vertex_ranking::graph::{
    build_g_prime, build_g_star, degeneracy_order, greedy_degeneracy_order_multigraph, orient_acyclic,
};
use vertex_ranking::paths::{
    enumerate_paths, enumerate_restricted_family, gamma_load_bound, gamma_map, in_directed_family,
    rho_load_bound, rho_map, tau_map,
};

fn main() -> anyhow::Result<()> {
    let (n, d, delta) = (200, 2, 8);
    let g = generate(&GenSpec::bounded(n, d, delta, 3))?;
    let h = orient_acyclic(&g, &degeneracy_order(&g))?;
    let layering = compute_layering(&g, d)?;
    let gp = build_g_prime(&g, &layering);
    println!("layers {:?}, G' out-degree {}", layering.layer_sizes(), gp.max_out_degree());
    for ell in 2..=4 {
        let fam = enumerate_paths(&g, ell)?;
        let rho = rho_map(&fam, &h).max_load(n);
        let hat = fam.filter(|p| in_directed_family(p, &gp));
        let gamma = gamma_map(&hat, &gp)?.max_load(n);
        let restricted = enumerate_restricted_family(&g, ell, &layering)?;
        let seq = greedy_degeneracy_order_multigraph(&build_g_star(&g, &restricted)).colouring_sequence();
        let tau = tau_map(&restricted, &seq)?.max_load(n);
        println!(
            "ell = {ell}: {} paths; rho {rho} <= {}; gamma {gamma} <= {} over {} paths; tau {tau} over {} paths",
            fam.len(),
            rho_load_bound(ell, d, delta),
            gamma_load_bound(ell, gp.max_out_degree(), delta),
            hat.len(),
            restricted.len()
        );
    }
    Ok(())
}
