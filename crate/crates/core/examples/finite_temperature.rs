//! Matsubara sum at finite temperature approaching the zero-temperature
//! integral as beta grows.
//!
//! `cargo run --release --example finite_temperature`

use casimir_lattice::free_energy::{free_energy_finite_t, free_energy_zero_t_1d, MatsubaraGrid};
use casimir_lattice::{BarrierConfig, LatticeParams, QuadratureSpec, Result, Sites};

pub fn run() -> Result<()> {
    let lat = LatticeParams::with_gamma(1.0)?;
    let cfg = BarrierConfig::extended(1.0, 1.0, Sites(20));
    let zero_t = free_energy_zero_t_1d(&cfg, &lat, &QuadratureSpec::default())?.value;
    println!("T = 0: {zero_t:.10}");

    for slices in [20u32, 100, 1000, 10_000] {
        let beta = f64::from(slices) * lat.tau();
        let grid = MatsubaraGrid::new(beta, lat.tau())?;
        let f = free_energy_finite_t(&cfg, &lat, beta)?.value;
        println!(
            "beta/tau = {slices:>6}: F = {f:.10}  rel. diff {:.2e}  lowest tangent frequency {:.4e}",
            f / zero_t - 1.0,
            grid.tangent_frequency(0)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
