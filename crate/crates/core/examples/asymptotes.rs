//! Large-separation coefficients c_d in F = c_d v_F / L^d, from the closed
//! form and from the radial integral.
//!
//! `cargo run --release --example asymptotes`

use casimir_lattice::continuum::{large_l_asymptote, large_l_asymptote_numerical, MassSign};
use casimir_lattice::{QuadratureSpec, Result};

pub fn run() -> Result<()> {
    let q = QuadratureSpec::default().with_rel_tol(1e-12);
    println!(
        "{:>2} {:>9} {:>22} {:>22}",
        "d", "signs", "closed form", "radial integral"
    );
    for d in 1..=4 {
        for sign in [MassSign::Same, MassSign::Opposite] {
            println!(
                "{d:>2} {:>9} {:>22.16} {:>22.16}",
                format!("{sign:?}"),
                large_l_asymptote(d, sign)?.c,
                large_l_asymptote_numerical(d, sign, &q)?.c
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
