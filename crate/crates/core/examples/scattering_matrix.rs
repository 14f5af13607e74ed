//! Transfer matrices, closed-form amplitudes and the unitary scattering
//! matrix of a finite mass barrier.
//!
//! `cargo run --release --example scattering_matrix`

use casimir_lattice::scattering::{
    penetration_depth, reflection_barrier, reflection_infinite, reflection_spike,
    scattering_matrix, transfer_matrix_step, transmission_barrier, transmission_free,
};
use casimir_lattice::{LatticeParams, Result, Sites};
use num_complex::Complex64;

pub fn run() -> Result<()> {
    let lat = LatticeParams::with_gamma(1.0)?;
    let mu = 0.8;
    let e = Complex64::new(0.3, 0.0);

    let step = transfer_matrix_step(e, mu, 0.0, &lat)?;
    println!("one-site transfer matrix at E = 0.3:\n{}", step.entries);

    for n in [1, 5, 20] {
        let s = scattering_matrix(e, mu, Sites(n), 0.0, &lat)?;
        println!(
            "L_mu = {n:>2}a: |r|^2 + |t|^2 = {:.15}, unitarity defect {:.1e}, r matches closed form: {}",
            s.r.norm_sqr() + s.t.norm_sqr(),
            s.unitarity_defect(),
            (s.r - reflection_barrier(e, mu, Sites(n), 0.0, &lat)?).norm() < 1e-12
        );
    }

    let w = 0.5;
    println!(
        "imaginary energy: r(L_mu = 200a) = {:.12}, r(infinite) = {:.12}",
        reflection_barrier(Complex64::new(0.0, w), mu, Sites(200), 0.0, &lat)?,
        reflection_infinite(w, mu, 0.0, &lat)?
    );
    println!(
        "spike: {:.12} vs one-site barrier {:.12}",
        reflection_spike(e, mu, &lat)?,
        reflection_barrier(e, mu, Sites(1), 0.0, &lat)?
    );
    println!(
        "free transmission over 10 sites: {:.6}, through barrier: {:.6}",
        transmission_free(e, Sites(10), 0.0, &lat)?,
        transmission_barrier(e, mu, Sites(10), 0.0, &lat)?
    );
    println!("penetration depth: {:.6} a", penetration_depth(mu, &lat)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
