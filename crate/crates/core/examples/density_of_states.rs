//! Separation-dependent density of states between two strong barriers:
//! resonances sit near the box levels (m + 1/2) pi v_F / L.
//!
//! `cargo run --release --example density_of_states`

use std::f64::consts::PI;

use casimir_lattice::free_energy::density_of_states;
use casimir_lattice::{BarrierConfig, LatticeParams, Result, Sites};

pub fn run() -> Result<()> {
    let lat = LatticeParams::with_gamma(1.0)?;
    let n = Sites(20);
    let l = n.length(&lat);
    let cfg = BarrierConfig::extended(50.0, 50.0, n);
    let eta = 1e-3;

    let energies: Vec<f64> = (1..2000).map(|i| i as f64 * 4e-4).collect();
    let rho: Vec<f64> = energies
        .iter()
        .map(|&e| density_of_states(e, eta, &cfg, &lat))
        .collect::<Result<_>>()?;
    let mut m = 0;
    for i in 1..rho.len() - 1 {
        if rho[i] > rho[i - 1] && rho[i] > rho[i + 1] && rho[i] > 10.0 {
            let box_level = (m as f64 + 0.5) * PI * lat.v_f() / l;
            println!("peak at E = {:.4}, box level {:.4}", energies[i], box_level);
            m += 1;
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
