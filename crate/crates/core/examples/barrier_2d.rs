//! Mass barriers on a 2D surface: lattice double integral, its continuum
//! counterpart and the zeta(3) asymptotes.
//!
//! `cargo run --release --example barrier_2d`

use casimir_lattice::continuum::{continuum_free_energy_2d, large_l_asymptote, MassSign};
use casimir_lattice::free_energy::free_energy_zero_t_2d;
use casimir_lattice::{BarrierConfig, LatticeParams, QuadratureSpec, Result, Sites};

pub fn run() -> Result<()> {
    let lat = LatticeParams::with_gamma(1.0)?;
    let mu = 1.0 / lat.tau();
    let q = QuadratureSpec::default().with_rel_tol(1e-8);
    let width = 1.0;

    println!(
        "{:>5} {:>12} {:>12} {:>12} {:>12}",
        "L/a", "same", "cont", "opposite", "cont"
    );
    for n in [10, 30, 60, 120] {
        let l = Sites(n).length(&lat);
        let scale = l * l / (lat.v_f() * width);
        let cfg = BarrierConfig::extended(mu, mu, Sites(n)).with_width(width);
        let same = free_energy_zero_t_2d(&cfg, &lat, &q)?.value;
        let opp = free_energy_zero_t_2d(&BarrierConfig { mu_r: -mu, ..cfg }, &lat, &q)?.value;
        let cs = continuum_free_energy_2d(mu, mu, l, width, lat.v_f(), &q)?;
        let co = continuum_free_energy_2d(mu, -mu, l, width, lat.v_f(), &q)?;
        println!(
            "{n:>5} {:>12.6} {:>12.6} {:>12.6} {:>12.6}",
            same * scale,
            cs * scale,
            opp * scale,
            co * scale
        );
    }
    println!(
        "asymptotes: {:.6} (same), {:.6} (opposite)",
        large_l_asymptote(2, MassSign::Same)?.c,
        large_l_asymptote(2, MassSign::Opposite)?.c
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
