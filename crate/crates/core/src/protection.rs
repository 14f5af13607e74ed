//! Staggered potential `V(x) = V_0 cos(pi x / a)` between the barriers and
//! the gap it opens at the Dirac point for different lattice fermions.
//!
//! For tangent fermions the potential only rescales the separation,
//! `L -> L_eff = L / (1 + (V_0 a / 2 v_F)^2)`, and the free energy keeps its
//! power law. Discretizations whose Hamiltonian couples the Dirac point to a
//! second low-energy cone at `k = pi/a` open a gap instead.

use std::f64::consts::PI;

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;

use crate::error::{CasimirError, Result};
use crate::free_energy::{zero_t_1d_unchecked, FreeEnergyResult};
use crate::lattice::{BarrierConfig, BarrierLength, LatticeParams, Sites};
use crate::quadrature::QuadratureSpec;

const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };
const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

pub(crate) fn transmission_staggered_dimless(
    e: Complex64,
    v: f64,
    sites: u32,
) -> Result<Complex64> {
    if !sites.is_multiple_of(2) {
        return Err(CasimirError::Config(format!(
            "staggered transmission needs an even number of sites, got {sites}"
        )));
    }
    let factor = |y: Complex64| -> Result<Complex64> {
        let den = ONE - 0.5 * I * y;
        if den.norm() < crate::constants::SINGULARITY_GUARD {
            return Err(CasimirError::Domain(format!(
                "transmission pole at e = {e}"
            )));
        }
        Ok((ONE + 0.5 * I * y) / den)
    };
    let pair = factor(e - v)? * factor(e + v)?;
    Ok(pair.powu(sites / 2))
}

/// Transmission through `l` sites of alternating potential `+-V_0`.
pub fn transmission_staggered(
    e: Complex64,
    v0: f64,
    l: Sites,
    lat: &LatticeParams,
) -> Result<Complex64> {
    let unit = lat.energy_unit();
    transmission_staggered_dimless(e / unit, v0 / unit, l.0)
}

/// `L_eff = L / (1 + (V_0 a / 2 v_F)^2)`.
pub fn effective_length(l: f64, v0: f64, lat: &LatticeParams) -> f64 {
    let x = 0.5 * v0 / lat.energy_unit();
    l / (1.0 + x * x)
}

/// Zero-temperature free energy between extended barriers with the
/// staggered potential `cfg.v0` in between.
pub fn free_energy_staggered(
    cfg: &BarrierConfig,
    lat: &LatticeParams,
    q: &QuadratureSpec,
) -> Result<FreeEnergyResult> {
    cfg.validate()?;
    if cfg.barrier != BarrierLength::Infinite {
        return Err(CasimirError::Config(
            "staggered free energy is defined for extended barriers".into(),
        ));
    }
    if !cfg.separation.0.is_multiple_of(2) {
        return Err(CasimirError::Config(format!(
            "staggered potential requires an even L/a, got {}",
            cfg.separation.0
        )));
    }
    zero_t_1d_unchecked(cfg, lat, q)
}

/// Staggered free energy next to the `V_0 = 0` curve evaluated at `L_eff`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollapsePoint {
    pub l: f64,
    pub l_eff: f64,
    pub staggered: f64,
    pub reference: f64,
}

impl CollapsePoint {
    /// `F(L, V_0) / F_0(L_eff) - 1`.
    pub fn residual(&self) -> f64 {
        if self.reference == 0.0 {
            0.0
        } else {
            self.staggered / self.reference - 1.0
        }
    }
}

/// Compare `F(L, V_0)` with the unstaggered free energy at `L_eff`.
///
/// `L_eff` is generally not a whole number of sites; the reference linearly
/// interpolates `L F_0(L)`, which is nearly constant, between the
/// neighbouring integers.
pub fn collapse_point(
    cfg: &BarrierConfig,
    lat: &LatticeParams,
    q: &QuadratureSpec,
) -> Result<CollapsePoint> {
    let staggered = free_energy_staggered(cfg, lat, q)?.value;
    let l = cfg.separation.length(lat);
    let l_eff = effective_length(l, cfg.v0, lat);
    let sites = l_eff / lat.a();
    let lo = (sites.floor() as u32).max(1);
    let frac = sites - f64::from(lo);
    let plain = cfg.with_staggered(0.0);
    let lf = |n: u32| -> Result<f64> {
        let r = zero_t_1d_unchecked(&plain.with_separation(Sites(n)), lat, q)?;
        Ok(r.value * Sites(n).length(lat))
    };
    let lf_lo = lf(lo)?;
    let lf_eff = if frac > 0.0 {
        (1.0 - frac) * lf_lo + frac * lf(lo + 1)?
    } else {
        lf_lo
    };
    Ok(CollapsePoint {
        l,
        l_eff,
        staggered,
        reference: lf_eff / l_eff,
    })
}

/// Least-squares slope of `ln|f|` against `ln l`.
pub fn log_log_slope(ls: &[f64], fs: &[f64]) -> Result<f64> {
    if ls.len() != fs.len() || ls.len() < 2 {
        return Err(CasimirError::Domain(
            "need at least two (L, F) pairs".into(),
        ));
    }
    let xs: Vec<f64> = ls.iter().map(|l| l.ln()).collect();
    let ys: Vec<f64> = fs.iter().map(|f| f.abs().ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Ok(sxy / sxx)
}

/// One-dimensional lattice fermion discretizations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FermionKind {
    Naive,
    /// Wilson fermions with Wilson mass `m0` (an energy).
    Wilson {
        m0: f64,
    },
    KogutSusskind,
    Slac,
    Tangent,
}

impl FermionKind {
    pub fn name(&self) -> &'static str {
        match self {
            FermionKind::Naive => "naive",
            FermionKind::Wilson { .. } => "wilson",
            FermionKind::KogutSusskind => "kogut_susskind",
            FermionKind::Slac => "slac",
            FermionKind::Tangent => "tangent",
        }
    }

    /// The five kinds, Wilson with mass `m0`.
    pub fn all(m0: f64) -> [FermionKind; 5] {
        [
            FermionKind::Naive,
            FermionKind::Wilson { m0 },
            FermionKind::KogutSusskind,
            FermionKind::Slac,
            FermionKind::Tangent,
        ]
    }

    /// Bloch Hamiltonian `H(k)`; `None` where it is singular (tangent at the
    /// zone edge).
    pub fn hamiltonian(&self, k: f64, lat: &LatticeParams) -> Option<Matrix2<Complex64>> {
        let unit = lat.energy_unit();
        let ka = k * lat.a();
        let sx = Matrix2::new(0.0, 1.0, 1.0, 0.0).map(|x: f64| Complex64::new(x, 0.0));
        let sy = Matrix2::new(Complex64::new(0.0, 0.0), -I, I, Complex64::new(0.0, 0.0));
        let sz = Matrix2::new(1.0, 0.0, 0.0, -1.0).map(|x: f64| Complex64::new(x, 0.0));
        let re = |x: f64| Complex64::new(x, 0.0);
        match *self {
            FermionKind::Naive => Some(sx * re(unit * ka.sin())),
            FermionKind::Wilson { m0 } => {
                Some(sx * re(unit * ka.sin()) + sz * re(m0 * (1.0 - ka.cos())))
            }
            FermionKind::KogutSusskind => {
                Some(sx * re(unit * ka.sin()) + sy * re(unit * (1.0 - ka.cos())))
            }
            FermionKind::Slac => {
                // -i ln e^{i k a} with the principal logarithm, i.e. k a wrapped to (-pi, pi].
                let wrapped = Complex64::new(0.0, ka).exp().ln();
                Some(sx * (-I * wrapped * unit))
            }
            FermionKind::Tangent => {
                let c = (0.5 * ka).cos();
                if c.abs() < 1e-12 {
                    None
                } else {
                    Some(sx * re(2.0 * unit * (0.5 * ka).tan()))
                }
            }
        }
    }
}

/// Closed-form gap at `k_x = 0` opened by the staggered potential.
pub fn gap_closed_form(kind: FermionKind, v0: f64, lat: &LatticeParams) -> Result<f64> {
    if !(v0 >= 0.0) {
        return Err(CasimirError::Domain(format!("V0 must be >= 0, got {v0}")));
    }
    let unit = lat.energy_unit();
    let lift = |p: f64| (p * p + v0 * v0).sqrt() - p;
    Ok(match kind {
        FermionKind::Naive => v0,
        FermionKind::Wilson { m0 } => lift(2.0 * m0),
        FermionKind::KogutSusskind => lift(2.0 * unit),
        FermionKind::Slac => lift(PI * unit),
        FermionKind::Tangent => 0.0,
    })
}

/// Gap between the two central levels of a sorted spectrum.
fn central_gap(mut levels: Vec<f64>) -> Result<f64> {
    if levels.len() < 2 || !levels.len().is_multiple_of(2) {
        return Err(CasimirError::Numerical(format!(
            "expected an even number of finite levels, got {}",
            levels.len()
        )));
    }
    levels.sort_by(f64::total_cmp);
    let mid = levels.len() / 2;
    Ok(levels[mid] - levels[mid - 1])
}

/// `H_V(0) = [[H(0), V0/2], [V0/2, H(pi/a)]]`.
pub fn staggered_hamiltonian(
    kind: FermionKind,
    v0: f64,
    lat: &LatticeParams,
) -> Option<Matrix4<Complex64>> {
    let h0 = kind.hamiltonian(0.0, lat)?;
    let hpi = kind.hamiltonian(PI / lat.a(), lat)?;
    let mut m = Matrix4::zeros();
    m.fixed_view_mut::<2, 2>(0, 0).copy_from(&h0);
    m.fixed_view_mut::<2, 2>(2, 2).copy_from(&hpi);
    let c = Complex64::new(0.5 * v0, 0.0);
    for i in 0..2 {
        m[(i, i + 2)] = c;
        m[(i + 2, i)] = c;
    }
    Some(m)
}

/// Gap from dense diagonalization of the staggered Hamiltonian at `k_x = 0`.
///
/// The tangent Hamiltonian diverges at `k = pi/a`, so for that kind the
/// spectrum is taken from the local generalized eigenproblem
/// `(D + V P) Phi = E P Phi` (see [`pencil_levels`]), whose finite
/// eigenvalues are the physical levels.
pub fn gap_numerical(kind: FermionKind, v0: f64, lat: &LatticeParams) -> Result<f64> {
    if !(v0 >= 0.0) {
        return Err(CasimirError::Domain(format!("V0 must be >= 0, got {v0}")));
    }
    match staggered_hamiltonian(kind, v0, lat) {
        Some(h) => {
            let eig = h.try_symmetric_eigen(1e-15, 10_000).ok_or_else(|| {
                CasimirError::Numerical("Hermitian eigensolver did not converge".into())
            })?;
            central_gap(eig.eigenvalues.iter().copied().collect())
        }
        None => central_gap(pencil_levels(kind, v0, lat)?),
    }
}

/// Local factors of a discretization, `H(k) = P(k)^{-1} D(k)`.
fn local_factors(
    kind: FermionKind,
    k: f64,
    lat: &LatticeParams,
) -> Option<(Matrix2<Complex64>, Complex64)> {
    match kind {
        FermionKind::Tangent => {
            let phase = Complex64::new(0.0, k * lat.a()).exp();
            let sx = Matrix2::new(0.0, 1.0, 1.0, 0.0).map(|x: f64| Complex64::new(x, 0.0));
            let d = sx * (-I * (phase - ONE) * lat.energy_unit());
            Some((d, 0.5 * (ONE + phase)))
        }
        other => other.hamiltonian(k, lat).map(|h| (h, ONE)),
    }
}

/// Finite levels at `k_x = 0` of the pencil `(D + V P) Phi = E P Phi`, where
/// the staggered potential acts on the physical field `Psi = P Phi` and
/// couples `k = 0` to `k = pi/a` with amplitude `V0/2`.
///
/// Solved by shift-and-invert: eigenvalues `lambda` of `(A - s B)^{-1} B`
/// give `E = s + 1/lambda`, and `lambda = 0` marks an infinite level.
pub fn pencil_levels(kind: FermionKind, v0: f64, lat: &LatticeParams) -> Result<Vec<f64>> {
    let (d0, p0) = local_factors(kind, 0.0, lat)
        .ok_or_else(|| CasimirError::Numerical("singular factor at k = 0".into()))?;
    let (dpi, ppi) = local_factors(kind, PI / lat.a(), lat)
        .ok_or_else(|| CasimirError::Numerical("singular factor at k = pi/a".into()))?;
    let mut a = Matrix4::<Complex64>::zeros();
    let mut b = Matrix4::<Complex64>::zeros();
    a.fixed_view_mut::<2, 2>(0, 0).copy_from(&d0);
    a.fixed_view_mut::<2, 2>(2, 2).copy_from(&dpi);
    for i in 0..2 {
        a[(i, i + 2)] = 0.5 * v0 * ppi;
        a[(i + 2, i)] = 0.5 * v0 * p0;
        b[(i, i)] = p0;
        b[(i + 2, i + 2)] = ppi;
    }
    // Any shift away from the spectrum works; 1/pi avoids rational levels.
    let shift = std::f64::consts::FRAC_1_PI * lat.energy_unit();
    let shifted = a - b * Complex64::new(shift, 0.0);
    let inv = shifted
        .try_inverse()
        .ok_or_else(|| CasimirError::Numerical("shifted pencil is singular".into()))?;
    let c = inv * b;
    let schur = nalgebra::linalg::Schur::try_new(c, 1e-15, 10_000)
        .ok_or_else(|| CasimirError::Numerical("Schur decomposition did not converge".into()))?;
    let (_, t) = schur.unpack();
    let scale = c.norm().max(f64::MIN_POSITIVE);
    let mut levels = Vec::new();
    for i in 0..4 {
        let lambda = t[(i, i)];
        if lambda.norm() > 1e-9 * scale {
            let e = Complex64::new(shift, 0.0) + ONE / lambda;
            if e.im.abs() > 1e-9 * lat.energy_unit().max(e.norm()) {
                return Err(CasimirError::Numerical(format!(
                    "complex level {e} in a Hermitian problem"
                )));
            }
            levels.push(e.re);
        }
    }
    Ok(levels)
}
