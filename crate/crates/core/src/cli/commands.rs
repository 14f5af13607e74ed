use std::f64::consts::{LN_2, PI};

use rayon::prelude::*;

use super::config::{Experiment, RunConfig};
use super::table::Table;
use crate::abel_plana::{infinite_mass_expansion_exact, zero_point_energy_infinite_mass};
use crate::continuum::{
    continuum_free_energy_1d, continuum_free_energy_2d, continuum_free_energy_spike_pair,
    large_l_asymptote, MassSign,
};
use crate::error::Result;
use crate::free_energy::{free_energy_spike_large_l, free_energy_zero_t_1d, free_energy_zero_t_2d};
use crate::lattice::{BarrierConfig, Sites};
use crate::protection::{collapse_point, gap_numerical, FermionKind};

/// Evaluate `f` at every sweep point in parallel, keeping the input order.
fn sweep<T: Sync, F>(points: &[T], f: F) -> Result<Vec<Vec<f64>>>
where
    F: Fn(&T) -> Result<Vec<f64>> + Sync,
{
    points.par_iter().map(&f).collect()
}

pub fn run(cfg: &RunConfig) -> Result<Table> {
    cfg.validate()?;
    let mut table = match cfg.experiment {
        Experiment::Barrier1d => cmd_fig_barrier_1d(cfg)?,
        Experiment::Spike => cmd_fig_spike(cfg)?,
        Experiment::Barrier2d => cmd_fig_barrier_2d(cfg)?,
        Experiment::Protection => cmd_protection(cfg)?,
        Experiment::AbelPlana => cmd_abel_plana(cfg)?,
    };
    let mut meta = vec![format!(
        "build={} {}",
        env!("CARGO_PKG_NAME"),
        env!("CASIMIR_GIT_DESCRIBE")
    )];
    meta.extend(cfg.echo());
    meta.append(&mut table.metadata);
    table.metadata = meta;
    Ok(table)
}

/// Asymptote `c v_F / L^d` scaled by `L^d / v_F`; zero without barriers.
fn asymptote(cfg: &RunConfig, d: u32, sign: MassSign) -> Result<f64> {
    if cfg.mu0() == 0.0 {
        Ok(0.0)
    } else {
        Ok(large_l_asymptote(d, sign)?.c)
    }
}

pub fn cmd_fig_barrier_1d(cfg: &RunConfig) -> Result<Table> {
    let lat = cfg.lattice()?;
    let mu = cfg.mu0();
    let same = asymptote(cfg, 1, MassSign::Same)?;
    let opposite = asymptote(cfg, 1, MassSign::Opposite)?;
    let rows = sweep(&cfg.sites.values(), |&n| {
        let l = Sites(n).length(&lat);
        let lat_f = |mu_r: f64| -> Result<f64> {
            let r = free_energy_zero_t_1d(
                &BarrierConfig::extended(mu, mu_r, Sites(n)),
                &lat,
                &cfg.quad,
            )?;
            Ok(r.value * l / lat.v_f())
        };
        let cont_f = |mu_r: f64| -> Result<f64> {
            Ok(continuum_free_energy_1d(mu, mu_r, l, lat.v_f(), &cfg.quad)? * l / lat.v_f())
        };
        Ok(vec![
            f64::from(n),
            lat_f(mu)?,
            lat_f(-mu)?,
            cont_f(mu)?,
            cont_f(-mu)?,
            same,
            opposite,
        ])
    })?;
    let mut t = Table::new(vec![
        "L_over_a",
        "F_lattice_same_sign",
        "F_lattice_opposite_sign",
        "F_continuum_same",
        "F_continuum_opposite",
        "F_asymptote_same",
        "F_asymptote_opposite",
    ]);
    t.metadata.push("units=L*F/(hbar*v_F)".into());
    t.rows = rows;
    Ok(t)
}

pub fn cmd_fig_spike(cfg: &RunConfig) -> Result<Table> {
    let lat = cfg.lattice()?;
    let sign = cfg.mu_sign.value();
    // Both closed forms scale as 1/L; report L F / v_F.
    let l = 1.0;
    let rows = sweep(&cfg.masses.values(), |&x| {
        let mu = x * lat.energy_unit();
        let lattice = free_energy_spike_large_l(mu, sign * mu, l, &lat)? * l / lat.v_f();
        let m = lat.a() * mu;
        let cont = continuum_free_energy_spike_pair(m, sign * m, l, lat.v_f())? * l / lat.v_f();
        Ok(vec![x, lattice, cont])
    })?;
    let mut t = Table::new(vec!["a_mu0_over_vF", "F_lattice", "F_continuum"]);
    t.metadata.push("units=L*F/(hbar*v_F)".into());
    t.rows = rows;
    Ok(t)
}

pub fn cmd_fig_barrier_2d(cfg: &RunConfig) -> Result<Table> {
    let lat = cfg.lattice()?;
    let mu = cfg.mu0();
    let same = asymptote(cfg, 2, MassSign::Same)?;
    let opposite = asymptote(cfg, 2, MassSign::Opposite)?;
    let rows = sweep(&cfg.sites.values(), |&n| {
        let l = Sites(n).length(&lat);
        let scale = l * l / lat.v_f();
        let lat_f = |mu_r: f64| -> Result<f64> {
            let r = free_energy_zero_t_2d(
                &BarrierConfig::extended(mu, mu_r, Sites(n)),
                &lat,
                &cfg.quad,
            )?;
            Ok(r.value * scale)
        };
        let cont_f = |mu_r: f64| -> Result<f64> {
            Ok(continuum_free_energy_2d(mu, mu_r, l, 1.0, lat.v_f(), &cfg.quad)? * scale)
        };
        Ok(vec![
            f64::from(n),
            lat_f(mu)?,
            lat_f(-mu)?,
            cont_f(mu)?,
            cont_f(-mu)?,
            same,
            opposite,
        ])
    })?;
    let mut t = Table::new(vec![
        "L_over_a",
        "F_lattice_same_sign",
        "F_lattice_opposite_sign",
        "F_continuum_same",
        "F_continuum_opposite",
        "F_asymptote_same",
        "F_asymptote_opposite",
    ]);
    t.metadata.push("units=L^2*F/(hbar*v_F*W)".into());
    t.rows = rows;
    Ok(t)
}

pub fn cmd_protection(cfg: &RunConfig) -> Result<Table> {
    let lat = cfg.lattice()?;
    let mu = cfg.mu0();
    let sign = cfg.mu_sign.value();
    let points: Vec<(f64, u32)> = cfg
        .v0
        .iter()
        .flat_map(|&v| cfg.sites.values().into_iter().map(move |n| (v, n)))
        .collect();
    let kinds = FermionKind::all(cfg.wilson_m0);
    let rows = sweep(&points, |&(v0, n)| {
        let barrier = BarrierConfig::extended(mu, sign * mu, Sites(n)).with_staggered(v0);
        let p = collapse_point(&barrier, &lat, &cfg.quad)?;
        let mut row = vec![
            v0,
            f64::from(n),
            p.l_eff / lat.a(),
            p.staggered * p.l_eff / lat.v_f(),
            p.reference * p.l_eff / lat.v_f(),
            p.residual(),
        ];
        for kind in kinds {
            row.push(gap_numerical(kind, v0, &lat)? / lat.energy_unit());
        }
        Ok(row)
    })?;
    let mut t = Table::new(vec![
        "v0_a_over_vF",
        "L_over_a",
        "L_eff_over_a",
        "F_staggered",
        "F_reference",
        "collapse_residual",
        "gap_naive",
        "gap_wilson",
        "gap_kogut_susskind",
        "gap_slac",
        "gap_tangent",
    ]);
    t.metadata
        .push("units=L_eff*F/(hbar*v_F); gaps in hbar*v_F/a".into());
    t.rows = rows;
    Ok(t)
}

pub fn cmd_abel_plana(cfg: &RunConfig) -> Result<Table> {
    let lat = cfg.lattice()?;
    let exact = infinite_mass_expansion_exact(&lat);
    let rows = sweep(&cfg.sites.values(), |&n| {
        let df = zero_point_energy_infinite_mass(Sites(n), &lat, &cfg.quad)?;
        let l = Sites(n).length(&lat);
        let scaled = (df - LN_2 / lat.tau()) * l / lat.v_f();
        Ok(vec![
            f64::from(n),
            df * lat.tau(),
            scaled,
            -exact.coefficient,
            -PI / 24.0,
        ])
    })?;
    let mut t = Table::new(vec![
        "L_over_a",
        "delta_F",
        "L_times_delta_F_minus_offset",
        "coefficient_infinite_mass",
        "coefficient_scattering",
    ]);
    t.metadata.push(
        "units: delta_F in hbar/tau; L_times_delta_F_minus_offset = (delta_F - ln2/tau) L/(hbar v_F)"
            .into(),
    );
    t.rows = rows;
    Ok(t)
}
