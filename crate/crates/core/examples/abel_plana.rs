//! Infinite-mass boundary condition for tangent fermions: the Abel-Plana
//! zero-point energy and its overestimated 1/L coefficient.
//!
//! `cargo run --release --example abel_plana`

use casimir_lattice::abel_plana::{
    abel_plana_sum, infinite_mass_expansion, infinite_mass_expansion_exact, infinite_mass_summand,
    quantized_levels, zero_point_energy_infinite_mass, AbelPlanaSpec,
};
use casimir_lattice::{LatticeParams, QuadratureSpec, Result, Sites};

pub fn run() -> Result<()> {
    let q = QuadratureSpec::default().with_rel_tol(1e-12);

    // Sum minus integral of x^2 over half-integers in [0, 10].
    let spec = AbelPlanaSpec::new(0.0, 10.0, 0.5, q)?;
    println!(
        "sum - integral of x^2: {:.12}",
        abel_plana_sum(|z| z * z, &spec)?
    );

    let lat = LatticeParams::with_gamma(1.0)?;
    let levels = quantized_levels(Sites(4), &lat)?;
    println!("levels for L = 4a: {levels:.4?}");

    let l = Sites(50);
    let spec = AbelPlanaSpec::new(0.0, 50.0, 0.5, q)?;
    println!(
        "delta F at L = 50a: boundary integrals {:.12}, general formula {:.12}",
        zero_point_energy_infinite_mass(l, &lat, &q)?,
        abel_plana_sum(|z| infinite_mass_summand(z, l, &lat), &spec)?
    );

    for gamma in [1.0, 2.0, 10.0] {
        let lat = LatticeParams::with_gamma(gamma)?;
        let n = Sites((100.0 * gamma) as u32);
        let fit = infinite_mass_expansion(n, &lat, &q)?;
        let exact = infinite_mass_expansion_exact(&lat);
        println!(
            "gamma = {gamma:>4}: offset {:.10} (ln2/tau {:.10}), coefficient {:.8} vs {:.8}, pi/24 = {:.8}",
            fit.offset,
            exact.offset,
            fit.coefficient,
            exact.coefficient,
            std::f64::consts::PI / 24.0
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
