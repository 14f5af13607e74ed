//! Casimir free energies and forces on the tangent-fermion lattice.
//!
//! Everything here is built on the round-trip amplitude
//! `Xi(E) = r_L(E) r_R(E) t(E)^2`. At zero temperature the free energy is an
//! integral over `omega in [0, pi]` of `Re ln(1 - Xi(2i tan(omega/2) / tau))`,
//! which is evaluated in the variable `xi = 2 tan(omega/2)` on `[0, inf)`;
//! at finite temperature it is a finite Matsubara sum.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{CasimirError, Result};
use crate::lattice::{BarrierConfig, BarrierLength, LatticeParams, Sites};
use crate::protection::transmission_staggered_dimless;
use crate::quadrature::{integrate_breaks_scaled, Integral, QuadratureSpec};
use crate::scattering::{
    reflection_dimless, reflection_infinite_dimless, transmission_free_dimless, transverse_xi,
};
use crate::special::dilogarithm;

/// A free energy with the error estimate of the quadrature that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreeEnergyResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub nodes_used: usize,
}

impl FreeEnergyResult {
    pub(crate) fn zero() -> Self {
        Self {
            value: 0.0,
            abs_error_estimate: 0.0,
            nodes_used: 0,
        }
    }

    fn scaled(integral: Integral, factor: f64) -> Self {
        Self {
            value: factor * integral.value,
            abs_error_estimate: factor.abs() * integral.abs_error,
            nodes_used: integral.evaluations,
        }
    }
}

/// Fermionic Matsubara frequencies on a lattice with `beta / tau` time slices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatsubaraGrid {
    beta: f64,
    tau: f64,
    slices: u32,
}

impl MatsubaraGrid {
    /// Requires `beta / tau` to be an even integer (at least 4), which keeps
    /// every frequency away from the pole of `tan(omega tau / 2)`.
    pub fn new(beta: f64, tau: f64) -> Result<Self> {
        if !(beta > 0.0 && tau > 0.0 && beta.is_finite()) {
            return Err(CasimirError::Config(format!(
                "beta and tau must be positive, got beta = {beta}, tau = {tau}"
            )));
        }
        let ratio = beta / tau;
        let slices = ratio.round();
        if (ratio - slices).abs() > 1e-9 * ratio.max(1.0) || slices > f64::from(u32::MAX) {
            return Err(CasimirError::Config(format!(
                "beta/tau must be an integer, got {ratio}"
            )));
        }
        let slices = slices as u32;
        if !slices.is_multiple_of(2) || slices < 4 {
            return Err(CasimirError::Config(format!(
                "beta/tau must be an even integer >= 4, got {slices}"
            )));
        }
        Ok(Self { beta, tau, slices })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn slices(&self) -> u32 {
        self.slices
    }

    /// `omega_n = (2n + 1) pi / beta`.
    pub fn frequency(&self, n: u32) -> f64 {
        f64::from(2 * n + 1) * PI / self.beta
    }

    /// `xi_n = (2 / tau) tan(omega_n tau / 2)`.
    pub fn tangent_frequency(&self, n: u32) -> f64 {
        2.0 / self.tau * (0.5 * self.frequency(n) * self.tau).tan()
    }

    /// Indices with `xi_n > 0`, i.e. `n = 0 .. beta/(2 tau) - 1`.
    pub fn upper_half(&self) -> std::ops::Range<u32> {
        0..self.slices / 2
    }
}

fn reflection_for(e: Complex64, m: f64, xi_y: f64, barrier: BarrierLength) -> Result<Complex64> {
    if m == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    match barrier {
        BarrierLength::Infinite if e.re == 0.0 && e.im >= 0.0 => {
            Ok(reflection_infinite_dimless(e.im, m, xi_y))
        }
        BarrierLength::Infinite => reflection_dimless(e, m, xi_y, None),
        BarrierLength::Finite(n) => reflection_dimless(e, m, xi_y, Some(n.0)),
    }
}

/// `Xi` at dimensionless energy `e` (units of `v_F/a`).
pub(crate) fn kernel_dimless(
    e: Complex64,
    xi_y: f64,
    cfg: &BarrierConfig,
    lat: &LatticeParams,
) -> Result<Complex64> {
    let unit = lat.energy_unit();
    let (ml, mr) = (cfg.mu_l / unit, cfg.mu_r / unit);
    if ml == 0.0 || mr == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let rl = reflection_for(e, ml, xi_y, cfg.barrier)?;
    let rr = reflection_for(e, mr, xi_y, cfg.barrier)?;
    let t = if cfg.v0 > 0.0 {
        transmission_staggered_dimless(e, cfg.v0 / unit, cfg.separation.0)?
    } else {
        transmission_free_dimless(e, xi_y, cfg.separation.0)?
    };
    Ok(rl * rr * t * t)
}

/// Round-trip amplitude `Xi(E) = r_L(E) r_R(E) t(E)^2` at transverse momentum `ky`.
pub fn casimir_kernel(
    e: Complex64,
    cfg: &BarrierConfig,
    ky: f64,
    lat: &LatticeParams,
) -> Result<Complex64> {
    cfg.validate()?;
    if cfg.v0 > 0.0 && ky != 0.0 {
        return Err(CasimirError::Config(
            "the staggered potential is implemented for 1D (k_y = 0) only".into(),
        ));
    }
    let xi_y = transverse_xi(ky, lat)?;
    kernel_dimless(e / lat.energy_unit(), xi_y, cfg, lat)
}

/// `Re ln(1 - xi)`, accurate when `|xi|` is small.
pub(crate) fn re_log_one_minus(xi: Complex64) -> f64 {
    if xi.norm() < 0.5 {
        0.5 * (-2.0 * xi.re + xi.norm_sqr()).ln_1p()
    } else {
        (Complex64::new(1.0, 0.0) - xi).norm().ln()
    }
}

/// L-dependent density of states
/// `rho(E) = -(1/pi) Im d/dE ln(1 - Xi(E + i eta))`, in states per unit energy.
pub fn density_of_states(
    e: f64,
    eta: f64,
    cfg: &BarrierConfig,
    lat: &LatticeParams,
) -> Result<f64> {
    cfg.validate()?;
    if !(eta > 0.0) {
        return Err(CasimirError::Domain(format!(
            "broadening must be positive, got {eta}"
        )));
    }
    let unit = lat.energy_unit();
    let z = Complex64::new(e, eta) / unit;
    let h = 1e-5;
    let xi = kernel_dimless(z, 0.0, cfg, lat)?;
    let xi_plus = kernel_dimless(z + h, 0.0, cfg, lat)?;
    let xi_minus = kernel_dimless(z - h, 0.0, cfg, lat)?;
    let dxi = (xi_plus - xi_minus) / (2.0 * h);
    // d/dE ln(1 - Xi) = -Xi' / (1 - Xi); the 1/unit converts to physical energy.
    let dlog = -dxi / (Complex64::new(1.0, 0.0) - xi);
    Ok(-dlog.im / (PI * unit))
}

/// Integrand `Re ln[1 - Xi(2i tan(omega/2) / tau)]` of the zero-temperature
/// free energy as a function of `omega in [0, pi)`.
pub fn zero_t_integrand(omega: f64, cfg: &BarrierConfig, lat: &LatticeParams) -> Result<f64> {
    cfg.validate()?;
    let xi = 2.0 * (0.5 * omega).tan();
    integrand_in_xi(xi, cfg, lat)
}

fn integrand_in_xi(xi: f64, cfg: &BarrierConfig, lat: &LatticeParams) -> Result<f64> {
    let w = xi / lat.gamma();
    let k = kernel_dimless(Complex64::new(0.0, w), 0.0, cfg, lat)?;
    Ok(re_log_one_minus(k))
}

/// Evaluate a fallible integrand inside quadrature, remembering the first error.
struct Fallible<'a, F> {
    f: F,
    err: &'a std::cell::RefCell<Option<CasimirError>>,
}

impl<F: Fn(f64) -> Result<f64>> Fallible<'_, F> {
    fn call(&self, x: f64) -> f64 {
        match (self.f)(x) {
            Ok(v) => v,
            Err(e) => {
                self.err.borrow_mut().get_or_insert(e);
                0.0
            }
        }
    }
}

pub(crate) fn integrate_fallible<F: Fn(f64) -> Result<f64>>(
    f: F,
    breaks: &[f64],
    scale: f64,
    q: &QuadratureSpec,
) -> Result<Integral> {
    let err = std::cell::RefCell::new(None);
    let wrapped = Fallible { f, err: &err };
    let result = integrate_breaks_scaled(|x| wrapped.call(x), breaks, scale, q);
    if let Some(e) = err.into_inner() {
        return Err(e);
    }
    result
}

/// Breakpoints on the `xi` axis: the propagation peak of width `~gamma/L`,
/// the zero of `t` at `xi = 2 gamma`, and the tail.
fn xi_breaks(gamma: f64, sites: u32) -> Vec<f64> {
    let peak = 2.0 * gamma * (4.0 / f64::from(sites)).min(0.5);
    vec![0.0, peak, 2.0 * gamma, f64::INFINITY]
}

/// Zero-temperature free energy including the staggered potential when set.
pub(crate) fn zero_t_1d_unchecked(
    cfg: &BarrierConfig,
    lat: &LatticeParams,
    q: &QuadratureSpec,
) -> Result<FreeEnergyResult> {
    if cfg.mu_l == 0.0 || cfg.mu_r == 0.0 {
        return Ok(FreeEnergyResult::zero());
    }
    let gamma = lat.gamma();
    let integral = integrate_fallible(
        |xi| Ok(4.0 / (4.0 + xi * xi) * integrand_in_xi(xi, cfg, lat)?),
        &xi_breaks(gamma, cfg.separation.0),
        2.0 * gamma,
        q,
    )?;
    Ok(FreeEnergyResult::scaled(integral, -1.0 / (PI * lat.tau())))
}

/// Zero-temperature Casimir free energy of a 1D barrier pair.
pub fn free_energy_zero_t_1d(
    cfg: &BarrierConfig,
    lat: &LatticeParams,
    q: &QuadratureSpec,
) -> Result<FreeEnergyResult> {
    cfg.validate()?;
    if cfg.v0 != 0.0 {
        return Err(CasimirError::Config(
            "use protection::free_energy_staggered for a staggered potential".into(),
        ));
    }
    zero_t_1d_unchecked(cfg, lat, q)
}

/// Finite-temperature free energy as the Matsubara sum
/// `-(2/beta) sum_n Re ln[1 - Xi(i xi_n)]` over `n = 0 .. beta/(2 tau) - 1`.
pub fn free_energy_finite_t(
    cfg: &BarrierConfig,
    lat: &LatticeParams,
    beta: f64,
) -> Result<FreeEnergyResult> {
    cfg.validate()?;
    let grid = MatsubaraGrid::new(beta, lat.tau())?;
    if cfg.mu_l == 0.0 || cfg.mu_r == 0.0 {
        return Ok(FreeEnergyResult::zero());
    }
    let unit = lat.energy_unit();
    let mut sum = 0.0;
    for n in grid.upper_half() {
        let w = grid.tangent_frequency(n) / unit;
        let k = kernel_dimless(Complex64::new(0.0, w), 0.0, cfg, lat)?;
        sum += re_log_one_minus(k);
    }
    Ok(FreeEnergyResult {
        value: -2.0 / beta * sum,
        abs_error_estimate: 0.0,
        nodes_used: grid.upper_half().len(),
    })
}

/// Zero-temperature free energy of extended barriers on a 2D surface of
/// width `cfg.width`: a double integral over `omega` and the transverse
/// momentum, both in tangent variables.
pub fn free_energy_zero_t_2d(
    cfg: &BarrierConfig,
    lat: &LatticeParams,
    q: &QuadratureSpec,
) -> Result<FreeEnergyResult> {
    cfg.validate()?;
    if cfg.barrier != BarrierLength::Infinite {
        return Err(CasimirError::Config(
            "the 2D free energy is implemented for extended barriers".into(),
        ));
    }
    if cfg.v0 != 0.0 {
        return Err(CasimirError::Config(
            "the staggered potential is implemented in 1D only".into(),
        ));
    }
    if cfg.mu_l == 0.0 || cfg.mu_r == 0.0 {
        return Ok(FreeEnergyResult::zero());
    }
    let gamma = lat.gamma();
    let sites = cfg.separation.0;
    let inner_q = QuadratureSpec {
        rel_tol: 0.1 * q.rel_tol,
        abs_tol: 0.1 * q.abs_tol,
        ..*q
    };
    let nodes = std::cell::Cell::new(0usize);
    // Transverse integral at fixed w = xi/gamma over xi_y in [0, inf).
    let inner = |xi: f64| -> Result<f64> {
        let w = xi / gamma;
        let peak = 2.0 * (4.0 / f64::from(sites)).min(0.5);
        let mut breaks = vec![0.0];
        if peak > w {
            breaks.push((peak * peak - w * w).sqrt());
        }
        if w < 2.0 {
            let edge = (4.0 - w * w).sqrt();
            if edge > *breaks.last().unwrap() {
                breaks.push(edge);
            }
        }
        breaks.push(f64::INFINITY);
        let res = integrate_fallible(
            |xi_y| {
                let k = kernel_dimless(Complex64::new(0.0, w), xi_y, cfg, lat)?;
                Ok(4.0 / (4.0 + xi_y * xi_y) * re_log_one_minus(k))
            },
            &breaks,
            2.0,
            &inner_q,
        )?;
        nodes.set(nodes.get() + res.evaluations);
        Ok(4.0 / (4.0 + xi * xi) * res.value)
    };
    let outer = integrate_fallible(inner, &xi_breaks(gamma, sites), 2.0 * gamma, q)?;
    let factor = -cfg.width / (PI * lat.tau()) / (PI * lat.a());
    let mut result = FreeEnergyResult::scaled(outer, factor);
    result.nodes_used = nodes.get();
    Ok(result)
}

/// `M = 4x / (4 + x^2)` with `x = a mu / v_F`: the zero-energy reflection
/// magnitude of a single-site spike, signed like `mu`.
pub fn spike_strength(mu: f64, lat: &LatticeParams) -> f64 {
    let x = mu / lat.energy_unit();
    4.0 * x / (4.0 + x * x)
}

/// Large-separation free energy of two mass spikes,
/// `(v_F / 2 pi L) Li2(-M_L M_R)`.
pub fn free_energy_spike_large_l(mu_l: f64, mu_r: f64, l: f64, lat: &LatticeParams) -> Result<f64> {
    if !(l > 0.0) {
        return Err(CasimirError::Domain(format!(
            "separation must be positive, got {l}"
        )));
    }
    let product = spike_strength(mu_l, lat) * spike_strength(mu_r, lat);
    Ok(lat.v_f() / (2.0 * PI * l) * dilogarithm(-product)?)
}

/// Effective continuum mass `v_F / xi_mu` of a lattice spike of mass `mu`.
pub fn spike_effective_mass(mu: f64, lat: &LatticeParams) -> Result<f64> {
    Ok(lat.v_f() / crate::scattering::penetration_depth(mu, lat)?)
}

/// Identical-spike free energy written through the effective mass,
/// `(v_F / 2 pi L) Li2(-tanh^2(a mu_eff / v_F))`.
pub fn free_energy_spike_effective(mu: f64, l: f64, lat: &LatticeParams) -> Result<f64> {
    if !(l > 0.0) {
        return Err(CasimirError::Domain(format!(
            "separation must be positive, got {l}"
        )));
    }
    let th = (lat.a() * spike_effective_mass(mu, lat)? / lat.v_f()).tanh();
    Ok(lat.v_f() / (2.0 * PI * l) * dilogarithm(-th * th)?)
}

/// Casimir force `-dF/dL` by a symmetric lattice difference.
///
/// The step is one site; with a staggered potential (which needs even
/// separations) it is two sites.
pub fn casimir_force(cfg: &BarrierConfig, lat: &LatticeParams, q: &QuadratureSpec) -> Result<f64> {
    cfg.validate()?;
    let step = if cfg.v0 > 0.0 { 2 } else { 1 };
    let l = cfg.separation.0;
    if l < 2 * step {
        return Err(CasimirError::Config(format!(
            "force needs L >= {} a, got {l} a",
            2 * step
        )));
    }
    let f_plus = zero_t_1d_unchecked(&cfg.with_separation(Sites(l + step)), lat, q)?.value;
    let f_minus = zero_t_1d_unchecked(&cfg.with_separation(Sites(l - step)), lat, q)?.value;
    Ok(-(f_plus - f_minus) / (2.0 * f64::from(step) * lat.a()))
}
