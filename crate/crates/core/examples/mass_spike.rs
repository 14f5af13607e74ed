//! Two single-site mass spikes: numerical lattice free energy against the
//! large-L closed form and the continuum delta-function result.
//!
//! `cargo run --release --example mass_spike`

use casimir_lattice::continuum::continuum_free_energy_spike;
use casimir_lattice::free_energy::{
    free_energy_spike_effective, free_energy_spike_large_l, free_energy_zero_t_1d, spike_strength,
};
use casimir_lattice::scattering::penetration_depth;
use casimir_lattice::{BarrierConfig, LatticeParams, QuadratureSpec, Result, Sites};

pub fn run() -> Result<()> {
    let lat = LatticeParams::with_gamma(1.0)?;
    let q = QuadratureSpec::default();
    let n = Sites(200);
    let l = n.length(&lat);

    println!(
        "{:>8} {:>12} {:>12} {:>12} {:>10}",
        "a mu/vF", "numerical", "large L", "continuum", "M"
    );
    for x in [0.05, 0.1, 0.5, 1.0, 3.0] {
        let mu = x * lat.energy_unit();
        let num = free_energy_zero_t_1d(&BarrierConfig::spikes(mu, mu, n), &lat, &q)?.value;
        let closed = free_energy_spike_large_l(mu, mu, l, &lat)?;
        let cont = continuum_free_energy_spike(lat.a() * mu, l, lat.v_f())?;
        println!(
            "{x:>8} {:>12.4e} {:>12.4e} {:>12.4e} {:>10.6}",
            num,
            closed,
            cont,
            spike_strength(mu, &lat)
        );
    }

    // The lattice result is the continuum one with the mass set by the
    // penetration depth, mu_eff = v_F / xi_mu.
    let mu = 0.7 * lat.energy_unit();
    println!(
        "xi_mu = {:.6} a; via mu_eff {:.10e}, direct {:.10e}",
        penetration_depth(mu, &lat)? / lat.a(),
        free_energy_spike_effective(mu, l, &lat)?,
        free_energy_spike_large_l(mu, mu, l, &lat)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
