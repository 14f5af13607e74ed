//! Free energy and Casimir force between two extended mass barriers in 1D,
//! on the lattice and in the continuum.
//!
//! `cargo run --release --example barrier_1d`

use casimir_lattice::continuum::{continuum_free_energy_1d, large_l_asymptote, MassSign};
use casimir_lattice::free_energy::{casimir_force, free_energy_zero_t_1d};
use casimir_lattice::{BarrierConfig, LatticeParams, QuadratureSpec, Result, Sites};

pub fn run() -> Result<()> {
    // v_F tau / a = 1 and mu_0 tau = 1.
    let lat = LatticeParams::with_gamma(1.0)?;
    let mu = 1.0 / lat.tau();
    let q = QuadratureSpec::default();

    println!(
        "{:>5} {:>12} {:>12} {:>12} {:>12}",
        "L/a", "LF same", "cont", "LF opp", "cont"
    );
    for n in [5, 10, 20, 50, 100] {
        let l = Sites(n).length(&lat);
        let same = free_energy_zero_t_1d(&BarrierConfig::extended(mu, mu, Sites(n)), &lat, &q)?;
        let opp = free_energy_zero_t_1d(&BarrierConfig::extended(mu, -mu, Sites(n)), &lat, &q)?;
        let cs = continuum_free_energy_1d(mu, mu, l, lat.v_f(), &q)?;
        let co = continuum_free_energy_1d(mu, -mu, l, lat.v_f(), &q)?;
        println!(
            "{n:>5} {:>12.6} {:>12.6} {:>12.6} {:>12.6}",
            same.value * l,
            cs * l,
            opp.value * l,
            co * l
        );
    }
    println!(
        "asymptotes: {:.6} (same), {:.6} (opposite)",
        large_l_asymptote(1, MassSign::Same)?.c,
        large_l_asymptote(1, MassSign::Opposite)?.c
    );

    let cfg = BarrierConfig::extended(mu, mu, Sites(40));
    let force = casimir_force(&cfg, &lat, &q)?;
    println!("force at L = 40a, same signs: {force:.3e} (negative = attractive)");
    let force = casimir_force(&BarrierConfig::extended(mu, -mu, Sites(40)), &lat, &q)?;
    println!("force at L = 40a, opposite signs: {force:.3e}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
