//! A staggered potential gaps out doubled lattice fermions but only
//! rescales the separation for tangent fermions.
//!
//! `cargo run --release --example protection`

use casimir_lattice::protection::{
    collapse_point, gap_closed_form, gap_numerical, log_log_slope, FermionKind,
};
use casimir_lattice::{BarrierConfig, LatticeParams, QuadratureSpec, Result, Sites};

pub fn run() -> Result<()> {
    let lat = LatticeParams::with_gamma(1.0)?;
    let q = QuadratureSpec::default();

    println!(
        "{:>16} {:>8} {:>12} {:>12}",
        "fermion", "V0 a/vF", "closed form", "numerical"
    );
    for kind in FermionKind::all(1.0) {
        for v0 in [0.5, 2.0] {
            println!(
                "{:>16} {v0:>8} {:>12.6} {:>12.6}",
                kind.name(),
                gap_closed_form(kind, v0, &lat)?,
                gap_numerical(kind, v0, &lat)?
            );
        }
    }

    let v0 = 1.0;
    let mut ls = Vec::new();
    let mut fs = Vec::new();
    for n in [100, 200, 400] {
        let cfg = BarrierConfig::extended(1.0, 1.0, Sites(n)).with_staggered(v0);
        let p = collapse_point(&cfg, &lat, &q)?;
        println!(
            "L = {n}a, L_eff = {:.1}a: F = {:.6e}, unstaggered at L_eff = {:.6e}",
            p.l_eff, p.staggered, p.reference
        );
        ls.push(p.l);
        fs.push(p.staggered);
    }
    println!("log-log slope of |F| vs L: {:.4}", log_log_slope(&ls, &fs)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
