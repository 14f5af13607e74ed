//! Continuum (`a, tau -> 0`) Casimir free energies and the exact
//! large-separation coefficients `F -> c_d v_F / L^d`.

use std::f64::consts::PI;

use crate::error::{CasimirError, Result};
use crate::quadrature::{integrate_breaks_scaled, integrate_to_infinity, QuadratureSpec};
use crate::special::{dilogarithm, gamma_half, zeta};

/// Relative sign of the two boundary masses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MassSign {
    Same,
    Opposite,
}

impl MassSign {
    /// Sign of `mu_l * mu_r`; zero counts as `Same`.
    pub fn of(mu_l: f64, mu_r: f64) -> Self {
        if mu_l * mu_r < 0.0 {
            MassSign::Opposite
        } else {
            MassSign::Same
        }
    }

    pub fn value(self) -> f64 {
        match self {
            MassSign::Same => 1.0,
            MassSign::Opposite => -1.0,
        }
    }
}

/// `F_inf = c v_F / L^d` for infinite masses in `d` dimensions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoteCoefficient {
    pub d: u32,
    pub sign: MassSign,
    pub c: f64,
}

/// Continuum reflection amplitude at imaginary frequency, `-mu / (w + sqrt(mu^2 + w^2))`.
fn reflection(w: f64, mu: f64) -> f64 {
    -mu / (w + mu.hypot(w))
}

fn check_separation(l: f64) -> Result<()> {
    if l > 0.0 && l.is_finite() {
        Ok(())
    } else {
        Err(CasimirError::Domain(format!(
            "separation must be positive, got {l}"
        )))
    }
}

/// `-(1/pi) int_0^inf dw ln[1 + r_L(w) r_R(w) exp(-2 w L / v_F)]`, the 1D
/// continuum free energy between two mass barriers.
pub fn continuum_free_energy_1d(
    mu_l: f64,
    mu_r: f64,
    l: f64,
    v_f: f64,
    q: &QuadratureSpec,
) -> Result<f64> {
    check_separation(l)?;
    if mu_l == 0.0 || mu_r == 0.0 {
        return Ok(0.0);
    }
    // u = w L / v_F
    let ml = mu_l * l / v_f;
    let mr = mu_r * l / v_f;
    let f = |u: f64| (reflection(u, ml) * reflection(u, mr) * (-2.0 * u).exp()).ln_1p();
    let res = integrate_breaks_scaled(f, &[0.0, f64::INFINITY], 1.0, q)?;
    Ok(-v_f / (PI * l) * res.value)
}

/// 2D continuum free energy per transverse width `w`.
///
/// The integrand depends on `omega` and `v_F k_y` only through
/// `rho = sqrt(omega^2 + v_F^2 k_y^2)`, so the double integral collapses to
/// `-(W / 2 pi v_F) int_0^inf rho ln[1 + r_L r_R exp(-2 rho L / v_F)] d rho`.
pub fn continuum_free_energy_2d(
    mu_l: f64,
    mu_r: f64,
    l: f64,
    w: f64,
    v_f: f64,
    q: &QuadratureSpec,
) -> Result<f64> {
    check_separation(l)?;
    if mu_l == 0.0 || mu_r == 0.0 {
        return Ok(0.0);
    }
    let ml = mu_l * l / v_f;
    let mr = mu_r * l / v_f;
    let f = |u: f64| u * (reflection(u, ml) * reflection(u, mr) * (-2.0 * u).exp()).ln_1p();
    let res = integrate_breaks_scaled(f, &[0.0, f64::INFINITY], 1.0, q)?;
    Ok(-w * v_f / (2.0 * PI * l * l) * res.value)
}

/// Two identical delta-function masses `M delta(x)`:
/// `(v_F / 2 pi L) Li2(-tanh^2(M / v_F))`.
pub fn continuum_free_energy_spike(m: f64, l: f64, v_f: f64) -> Result<f64> {
    continuum_free_energy_spike_pair(m, m, l, v_f)
}

/// Delta-function masses of strengths `m_l` and `m_r`:
/// `(v_F / 2 pi L) Li2(-tanh(M_L / v_F) tanh(M_R / v_F))`.
pub fn continuum_free_energy_spike_pair(m_l: f64, m_r: f64, l: f64, v_f: f64) -> Result<f64> {
    check_separation(l)?;
    let product = (m_l / v_f).tanh() * (m_r / v_f).tanh();
    Ok(v_f / (2.0 * PI * l) * dilogarithm(-product)?)
}

/// Closed-form coefficient
/// `zeta(d+1) Gamma(d) / (2^(3d-1) pi^(d/2) Gamma(d/2))` times `1 - 2^d`
/// (equal signs) or `2^d` (opposite signs).
pub fn large_l_asymptote(d: u32, sign: MassSign) -> Result<AsymptoteCoefficient> {
    if !(1..=60).contains(&d) {
        return Err(CasimirError::Domain(format!(
            "dimension must be in 1..=60, got {d}"
        )));
    }
    let two_d = 2f64.powi(d as i32);
    let base = zeta(d + 1)? * gamma_half(2 * d)?
        / (2f64.powi(3 * d as i32 - 1) * PI.powf(0.5 * f64::from(d)) * gamma_half(d)?);
    let c = match sign {
        MassSign::Same => base * (1.0 - two_d),
        MassSign::Opposite => base * two_d,
    };
    Ok(AsymptoteCoefficient { d, sign, c })
}

/// The same coefficient from its radial integral in `d` dimensions,
/// `-(2 pi^(d/2) / ((2 pi)^d Gamma(d/2))) int_0^inf r^(d-1) ln(1 + s e^(-2r)) dr`
/// with `s = +1` for equal and `-1` for opposite signs.
pub fn large_l_asymptote_numerical(
    d: u32,
    sign: MassSign,
    q: &QuadratureSpec,
) -> Result<AsymptoteCoefficient> {
    if d < 1 {
        return Err(CasimirError::Domain("dimension must be at least 1".into()));
    }
    let s = sign.value();
    let p = d as i32 - 1;
    let radial = integrate_to_infinity(|r| r.powi(p) * (s * (-2.0 * r).exp()).ln_1p(), 0.0, q)?;
    let dd = f64::from(d);
    let surface = 2.0 * PI.powf(0.5 * dd) / ((2.0 * PI).powf(dd) * gamma_half(d)?);
    Ok(AsymptoteCoefficient {
        d,
        sign,
        c: -surface * radial.value,
    })
}
