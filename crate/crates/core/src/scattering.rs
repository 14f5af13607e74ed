//! Tangent-fermion scattering amplitudes for mass barriers.
//!
//! The transfer matrix acts on the auxiliary field `Phi`, related to the
//! physical wave function by `Psi_n = (Phi_n + Phi_{n+1}) / 2`. That
//! substitution makes the tangent discretization local, so a barrier of
//! `n` sites is described by the `n`-th power of a single-site matrix.
//!
//! Internally energies are measured in units of `v_F / a`; the transverse
//! momentum enters only through `xi_y = 2 tan(a k_y / 2)`. All square roots
//! use the principal branch.

use nalgebra::Matrix2;
use num_complex::Complex64;

use crate::constants::{BARRIER_EXPONENT_CUTOFF, SINGULARITY_GUARD, SMALL_DELTA};
use crate::error::{CasimirError, Result};
use crate::lattice::{LatticeParams, Sites};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };
const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// `xi_y = 2 tan(a k_y / 2)`, defined inside the Brillouin zone.
pub fn transverse_xi(ky: f64, lat: &LatticeParams) -> Result<f64> {
    let phase = lat.a() * ky;
    if !(phase.abs() < std::f64::consts::PI) {
        return Err(CasimirError::Domain(format!(
            "|a k_y| = {} must lie inside the Brillouin zone (< pi)",
            phase.abs()
        )));
    }
    Ok(2.0 * (0.5 * phase).tan())
}

/// Longitudinal energy `e sqrt(1 - (xi_y/e)^2)` in lattice units.
///
/// At `e = 0` the limit from the positive imaginary axis, `i |xi_y|`, is used.
pub(crate) fn longitudinal_energy(e: Complex64, xi_y: f64) -> Complex64 {
    if xi_y == 0.0 {
        e
    } else if e == Complex64::new(0.0, 0.0) {
        Complex64::new(0.0, xi_y.abs())
    } else {
        let p = xi_y / e;
        e * (ONE - p * p).sqrt()
    }
}

/// `Delta = sqrt(m^2 + xi_y^2 - e^2)` in lattice units.
pub(crate) fn barrier_delta(e: Complex64, m: f64, xi_y: f64) -> Complex64 {
    (Complex64::new(m * m + xi_y * xi_y, 0.0) - e * e).sqrt()
}

/// `ln((2 + Delta)/(2 - Delta))`, the per-site decay exponent inside a barrier.
fn decay_exponent(delta: Complex64) -> Result<Complex64> {
    let den = 2.0 - delta;
    if den.norm() < SINGULARITY_GUARD {
        return Err(CasimirError::SingularBarrier(format!(
            "|2 - Delta| = {:e} at Delta = {delta}",
            den.norm()
        )));
    }
    Ok(((2.0 + delta) / den).ln())
}

/// Single-site transfer matrix of the auxiliary field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferMatrix {
    pub entries: Matrix2<Complex64>,
    pub site_mass: f64,
    pub energy: Complex64,
    pub ky: f64,
}

impl TransferMatrix {
    /// `n`-th power by repeated squaring.
    pub fn pow(&self, n: u32) -> Matrix2<Complex64> {
        matrix_power(&self.entries, n)
    }
}

pub(crate) fn matrix_power(m: &Matrix2<Complex64>, mut n: u32) -> Matrix2<Complex64> {
    let mut result = Matrix2::identity();
    let mut base = *m;
    while n > 0 {
        if n & 1 == 1 {
            result *= base;
        }
        base = base * base;
        n >>= 1;
    }
    result
}

fn transfer_entries(e: Complex64, m: f64, xi_y: f64) -> Result<Matrix2<Complex64>> {
    // U = diag(e - m, e + m) / 2, so sigma_x U = [[0, u+], [u-, 0]].
    let u_minus = 0.5 * (e - m);
    let u_plus = 0.5 * (e + m);
    let h = 0.5 * xi_y;
    let right = Matrix2::new(ONE + h, I * u_plus, I * u_minus, ONE - h);
    let left = Matrix2::new(ONE - h, -I * u_plus, -I * u_minus, ONE + h);
    let det = left.determinant();
    if det.norm() < SINGULARITY_GUARD {
        return Err(CasimirError::SingularFactor { det: det.norm() });
    }
    let inv = Matrix2::new(left[(1, 1)], -left[(0, 1)], -left[(1, 0)], left[(0, 0)]) / det;
    Ok(inv * right)
}

/// Transfer matrix `M_n` from site `n` to `n + 1` at energy `e` for a site
/// of mass `mu` and transverse momentum `ky`.
pub fn transfer_matrix_step(
    e: Complex64,
    mu: f64,
    ky: f64,
    lat: &LatticeParams,
) -> Result<TransferMatrix> {
    let xi_y = transverse_xi(ky, lat)?;
    let unit = lat.energy_unit();
    let entries = transfer_entries(e / unit, mu / unit, xi_y)?;
    Ok(TransferMatrix {
        entries,
        site_mass: mu,
        energy: e,
        ky,
    })
}

pub(crate) fn transmission_free_dimless(e: Complex64, xi_y: f64, sites: u32) -> Result<Complex64> {
    let eps = longitudinal_energy(e, xi_y);
    let den = ONE - 0.5 * I * eps;
    if den.norm() < SINGULARITY_GUARD {
        return Err(CasimirError::Domain(format!(
            "transmission pole at longitudinal energy {eps} (= -2i v_F/a)"
        )));
    }
    let base = (ONE + 0.5 * I * eps) / den;
    Ok(base.powu(sites))
}

/// Transmission amplitude through `l` massless sites.
pub fn transmission_free(
    e: Complex64,
    l: Sites,
    ky: f64,
    lat: &LatticeParams,
) -> Result<Complex64> {
    if l.0 == 0 {
        return Err(CasimirError::Domain(
            "separation must be at least one site".into(),
        ));
    }
    let xi_y = transverse_xi(ky, lat)?;
    transmission_free_dimless(e / lat.energy_unit(), xi_y, l.0)
}

/// `Delta coth(n ln((2+Delta)/(2-Delta)))`, with the infinite-barrier limit
/// `Delta` once the exponent exceeds the cutoff.
fn delta_coth(delta: Complex64, sites: Option<u32>) -> Result<Complex64> {
    let Some(n) = sites else {
        return Ok(delta);
    };
    if delta.norm() < SMALL_DELTA {
        return Ok(Complex64::new(1.0 / f64::from(n), 0.0));
    }
    let ell = decay_exponent(delta)?;
    let n = f64::from(n);
    if ell.re > BARRIER_EXPONENT_CUTOFF / n {
        return Ok(delta);
    }
    let q = (-2.0 * n * ell).exp();
    let den = ONE - q;
    if den.norm() < SINGULARITY_GUARD {
        return Err(CasimirError::SingularBarrier(format!(
            "Q^2 = 1 at Delta = {delta}"
        )));
    }
    Ok(delta * (ONE + q) / den)
}

/// Reflection amplitude in lattice units; `sites = None` is an infinite barrier.
pub(crate) fn reflection_dimless(
    e: Complex64,
    m: f64,
    xi_y: f64,
    sites: Option<u32>,
) -> Result<Complex64> {
    if m == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let eps = longitudinal_energy(e, xi_y);
    let delta = barrier_delta(e, m, xi_y);
    if sites.is_some() && (2.0 - delta).norm() < SINGULARITY_GUARD {
        return Err(CasimirError::SingularBarrier(format!(
            "Delta = 2 at e = {e}"
        )));
    }
    let den = eps + I * delta_coth(delta, sites)?;
    if den.norm() < SINGULARITY_GUARD * m.abs().max(1.0) {
        return Err(CasimirError::SingularBarrier(format!(
            "reflection pole at e = {e}"
        )));
    }
    Ok(m / den)
}

/// Reflection amplitude of a barrier of `l_mu` sites with mass `mu`.
///
/// Exactly zero for `mu = 0`. For long barriers the hyperbolic ratio is
/// evaluated through `exp(-2 n ln(...))` so no intermediate overflows, and
/// once the exponent passes [`BARRIER_EXPONENT_CUTOFF`] the infinite-barrier
/// limit is returned.
pub fn reflection_barrier(
    e: Complex64,
    mu: f64,
    l_mu: Sites,
    ky: f64,
    lat: &LatticeParams,
) -> Result<Complex64> {
    if l_mu.0 == 0 {
        return Err(CasimirError::Domain(
            "barrier must span at least one site".into(),
        ));
    }
    let xi_y = transverse_xi(ky, lat)?;
    let unit = lat.energy_unit();
    reflection_dimless(e / unit, mu / unit, xi_y, Some(l_mu.0))
}

/// Transmission amplitude through a barrier of `l_mu` sites with mass `mu`.
pub fn transmission_barrier(
    e: Complex64,
    mu: f64,
    l_mu: Sites,
    ky: f64,
    lat: &LatticeParams,
) -> Result<Complex64> {
    if l_mu.0 == 0 {
        return Err(CasimirError::Domain(
            "barrier must span at least one site".into(),
        ));
    }
    let xi_y = transverse_xi(ky, lat)?;
    let unit = lat.energy_unit();
    let (e, m) = (e / unit, mu / unit);
    if m == 0.0 {
        return transmission_free_dimless(e, xi_y, l_mu.0);
    }
    let eps = longitudinal_energy(e, xi_y);
    let delta = barrier_delta(e, m, xi_y);
    let n = f64::from(l_mu.0);
    // 1/t = cosh(n ell) - i (eps/Delta) sinh(n ell)
    if delta.norm() < SMALL_DELTA {
        return Ok(ONE / (ONE - I * eps * n));
    }
    let x = n * decay_exponent(delta)?;
    let ratio_sinh = eps / delta;
    let q = (-2.0 * x).exp();
    let den = 0.5 * (ONE + q) - 0.5 * I * ratio_sinh * (ONE - q);
    if den.norm() < SINGULARITY_GUARD {
        return Err(CasimirError::SingularBarrier(format!(
            "transmission pole at e = {e}"
        )));
    }
    Ok((-x).exp() / den)
}

/// Reflection amplitude `r(i omega)` of an infinitely long barrier.
pub fn reflection_infinite(omega: f64, mu: f64, ky: f64, lat: &LatticeParams) -> Result<Complex64> {
    if mu == 0.0 {
        return Err(CasimirError::DivisionByZero(
            "infinite-barrier reflection needs a nonzero mass".into(),
        ));
    }
    if !(omega >= 0.0) {
        return Err(CasimirError::Domain(format!(
            "imaginary frequency must be >= 0, got {omega}"
        )));
    }
    let xi_y = transverse_xi(ky, lat)?;
    let unit = lat.energy_unit();
    Ok(reflection_infinite_dimless(omega / unit, mu / unit, xi_y))
}

/// `r(i w) = -i m / (s + sqrt(m^2 + s^2))`, `s = sqrt(w^2 + xi_y^2)`; this is
/// the cancellation-free form of `i (s - sqrt(m^2 + s^2)) / m`.
pub(crate) fn reflection_infinite_dimless(w: f64, m: f64, xi_y: f64) -> Complex64 {
    let s = w.hypot(xi_y);
    Complex64::new(0.0, -m / (s + m.hypot(s)))
}

/// Reflection amplitude of a single-site barrier ("mass spike").
pub fn reflection_spike(e: Complex64, mu: f64, lat: &LatticeParams) -> Result<Complex64> {
    let unit = lat.energy_unit();
    reflection_spike_dimless(e / unit, mu / unit)
}

pub(crate) fn reflection_spike_dimless(e: Complex64, m: f64) -> Result<Complex64> {
    let shifted = e + 2.0 * I;
    let den = shifted * shifted - m * m;
    if den.norm() < SINGULARITY_GUARD {
        return Err(CasimirError::SingularBarrier(format!(
            "spike reflection pole at e = {e}"
        )));
    }
    Ok(4.0 * I * m / den)
}

/// Zero-energy penetration depth `a / ln|(2 + Delta_0)/(2 - Delta_0)|`,
/// `Delta_0 = a|mu|/v_F`. Infinite for a massless barrier.
pub fn penetration_depth(mu: f64, lat: &LatticeParams) -> Result<f64> {
    let d0 = (mu / lat.energy_unit()).abs();
    if (2.0 - d0).abs() < SINGULARITY_GUARD {
        return Err(CasimirError::SingularBarrier(
            "Delta_0 = 2: perfect single-site reflector, zero penetration depth".into(),
        ));
    }
    Ok(lat.a() / ((2.0 + d0) / (2.0 - d0)).abs().ln())
}

/// Scattering matrix `[[r, t], [t', r']]` in the basis of right- and
/// left-moving eigenstates of the massless transfer matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringMatrix {
    pub r: Complex64,
    pub r_prime: Complex64,
    pub t: Complex64,
    pub t_prime: Complex64,
}

impl ScatteringMatrix {
    pub fn as_matrix(&self) -> Matrix2<Complex64> {
        Matrix2::new(self.r, self.t, self.t_prime, self.r_prime)
    }

    /// Largest entry of `S^dagger S - 1`.
    pub fn unitarity_defect(&self) -> f64 {
        let s = self.as_matrix();
        let d = s.adjoint() * s - Matrix2::identity();
        d.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Scattering matrix of a barrier from the matrix power of the single-site
/// transfer matrix, transformed to the propagating basis.
pub fn scattering_matrix(
    e: Complex64,
    mu: f64,
    l_mu: Sites,
    ky: f64,
    lat: &LatticeParams,
) -> Result<ScatteringMatrix> {
    if l_mu.0 == 0 {
        return Err(CasimirError::Domain(
            "barrier must span at least one site".into(),
        ));
    }
    let xi_y = transverse_xi(ky, lat)?;
    let unit = lat.energy_unit();
    let e = e / unit;
    if e == Complex64::new(0.0, 0.0) && xi_y != 0.0 {
        return Err(CasimirError::Domain(
            "propagating basis undefined at E = 0 with k_y != 0".into(),
        ));
    }
    let p = if xi_y == 0.0 {
        Complex64::new(0.0, 0.0)
    } else {
        xi_y / e
    };
    let c = (ONE - p * p).sqrt();
    let norm = std::f64::consts::FRAC_1_SQRT_2;
    // Columns are chi_+ and chi_-.
    let omega = Matrix2::new(c - I * p, ONE, ONE, -c + I * p) * Complex64::new(norm, 0.0);
    let omega_inv = omega
        .try_inverse()
        .ok_or_else(|| CasimirError::SingularBarrier("propagating basis is degenerate".into()))?;
    let step = omega_inv * transfer_entries(e, mu / unit, xi_y)? * omega;
    let m = matrix_power(&step, l_mu.0);
    let m22 = m[(1, 1)];
    if m22.norm() < SINGULARITY_GUARD {
        return Err(CasimirError::SingularFactor { det: m22.norm() });
    }
    let (m12, m21) = (m[(0, 1)], m[(1, 0)]);
    // m11 - m12 m21 / m22 = det(m) / m22; the determinant of the power is
    // taken from the single step to avoid cancelling two huge products.
    Ok(ScatteringMatrix {
        r: -m21 / m22,
        t: ONE / m22,
        t_prime: step.determinant().powu(l_mu.0) / m22,
        r_prime: m12 / m22,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn unit_lattice() -> LatticeParams {
        LatticeParams::new(1.0, 1.0, 1.0).unwrap()
    }

    /// Eigenvalues of a 2x2 matrix from its characteristic polynomial.
    fn eig2(m: &Matrix2<Complex64>) -> [Complex64; 2] {
        let tr = m.trace();
        let det = m.determinant();
        let disc = (tr * tr - 4.0 * det).sqrt();
        [(tr + disc) / 2.0, (tr - disc) / 2.0]
    }

    #[test]
    fn step_identity_at_zero() {
        let m = transfer_matrix_step(c(0.0, 0.0), 0.0, 0.0, &unit_lattice()).unwrap();
        assert!((m.entries - Matrix2::identity()).norm() < 1e-15);
    }

    #[test]
    fn step_eigenvalues_in_mass_region() {
        let lat = LatticeParams::new(0.5, 1.0, 2.0).unwrap();
        let mu0 = 1.3;
        let d0 = lat.a() * mu0 / lat.v_f();
        let m = transfer_matrix_step(c(0.0, 0.0), mu0, 0.0, &lat).unwrap();
        let mut got = eig2(&m.entries).map(|z| z.re);
        got.sort_by(f64::total_cmp);
        let mut want = [(2.0 - d0) / (2.0 + d0), (2.0 + d0) / (2.0 - d0)];
        want.sort_by(f64::total_cmp);
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < 1e-13, "{g} vs {w}");
        }
    }

    #[test]
    fn step_singular_factor() {
        // det(1 - i sigma_x U) = 1 + u^2 vanishes at e = 2i.
        let r = transfer_matrix_step(c(0.0, 2.0), 0.0, 0.0, &unit_lattice());
        assert!(matches!(r, Err(CasimirError::SingularFactor { .. })));
    }

    #[test]
    fn step_rejects_zone_edge() {
        let r = transfer_matrix_step(c(0.1, 0.0), 0.0, std::f64::consts::PI, &unit_lattice());
        assert!(matches!(r, Err(CasimirError::Domain(_))));
    }

    #[test]
    fn matrix_power_gives_free_transmission() {
        let lat = unit_lattice();
        for e in [c(0.3, 0.0), c(0.1, 0.4), c(-1.2, 0.05)] {
            let m = transfer_matrix_step(e, 0.0, 0.0, &lat).unwrap().pow(17);
            let right = nalgebra::Vector2::new(ONE, ONE);
            let out = m * right;
            let t = transmission_free(e, Sites(17), 0.0, &lat).unwrap();
            assert!((out[0] - t).norm() < 1e-12 && (out[1] - t).norm() < 1e-12);
        }
    }

    #[test]
    fn free_transmission_examples() {
        let lat = unit_lattice();
        assert_eq!(
            transmission_free(c(0.0, 0.0), Sites(9), 0.0, &lat).unwrap(),
            ONE
        );
        let t = transmission_free(c(0.0, 2.0), Sites(1), 0.0, &lat).unwrap();
        assert!(t.norm() < 1e-15);
        let t = transmission_free(c(2.0, 0.0), Sites(2), 0.0, &lat).unwrap();
        assert!((t - c(-1.0, 0.0)).norm() < 1e-15);
        assert!(transmission_free(c(0.0, -2.0), Sites(1), 0.0, &lat).is_err());
    }

    #[test]
    fn massless_barrier_is_transparent() {
        let lat = unit_lattice();
        let r = reflection_barrier(c(0.4, 0.1), 0.0, Sites(5), 0.0, &lat).unwrap();
        assert_eq!(r, c(0.0, 0.0));
    }

    #[test]
    fn long_barrier_zero_energy_reflection() {
        let lat = unit_lattice();
        for mu in [0.3, -0.7, 1.5] {
            let r = reflection_barrier(c(0.0, 0.0), mu, Sites(5000), 0.0, &lat).unwrap();
            assert!((r - c(0.0, -mu.signum())).norm() < 1e-12);
            let r_inf = reflection_infinite(0.0, mu, 0.0, &lat).unwrap();
            assert!((r - r_inf).norm() < 1e-12);
        }
    }

    #[test]
    fn infinite_barrier_large_frequency() {
        let lat = unit_lattice();
        let mu = 0.8;
        let w = 1e6;
        let r = reflection_infinite(w, mu, 0.0, &lat).unwrap();
        let lead = c(0.0, -mu / (2.0 * w));
        assert!((r - lead).norm() < 1e-6 * lead.norm());
    }

    #[test]
    fn infinite_barrier_matches_long_finite_barrier() {
        let lat = unit_lattice();
        for (mu, ky) in [(1.0, 0.0), (-0.4, 0.0), (0.6, 0.7)] {
            let r_inf = reflection_infinite(0.5, mu, ky, &lat).unwrap();
            let r200 = reflection_barrier(c(0.0, 0.5), mu, Sites(200), ky, &lat).unwrap();
            assert!((r_inf - r200).norm() < 1e-10);
        }
        assert!(matches!(
            reflection_infinite(0.5, 0.0, 0.0, &lat),
            Err(CasimirError::DivisionByZero(_))
        ));
    }

    #[test]
    fn infinite_barrier_transverse_zero_frequency() {
        let lat = unit_lattice();
        let ky: f64 = 0.3;
        let xi = 2.0 * (0.5 * ky).tan();
        let r0 = reflection_infinite(0.0, 1.0, ky, &lat).unwrap();
        let r_small = reflection_infinite(1e-9, 1.0, ky, &lat).unwrap();
        assert!((r0 - r_small).norm() < 1e-8);
        let want = c(0.0, xi - (1.0 + xi * xi).sqrt());
        assert!((r0 - want).norm() < 1e-15);
    }

    #[test]
    fn spike_examples() {
        let lat = unit_lattice();
        assert_eq!(
            reflection_spike(c(0.0, 0.0), 0.0, &lat).unwrap(),
            c(0.0, 0.0)
        );
        let r = reflection_spike(c(0.0, 0.0), 2.0, &lat).unwrap();
        assert!((r - c(0.0, -1.0)).norm() < 1e-15);
        for x in [0.1, 0.5, 1.0, 2.0, 3.0, 10.0] {
            let r = reflection_spike(c(0.0, 0.0), x, &lat).unwrap();
            let want = 4.0 * x / (4.0 + x * x);
            assert!((r.norm() - want).abs() < 1e-15);
            assert!(r.norm() <= 1.0 + 1e-15);
        }
    }

    #[test]
    fn one_site_barrier_equals_spike() {
        let lat = LatticeParams::new(0.7, 1.3, 1.1).unwrap();
        for i in 0..10 {
            for j in 0..10 {
                let e = c(-2.0 + 0.45 * f64::from(i), 0.05 + 0.3 * f64::from(j));
                let mu = 0.9 - 0.2 * f64::from(i);
                if mu == 0.0 {
                    continue;
                }
                let a = reflection_barrier(e, mu, Sites(1), 0.0, &lat).unwrap();
                let b = reflection_spike(e, mu, &lat).unwrap();
                assert!((a - b).norm() < 1e-12, "e = {e}, mu = {mu}");
            }
        }
    }

    #[test]
    fn penetration_depth_values() {
        let lat = unit_lattice();
        let d = penetration_depth(0.1, &lat).unwrap();
        assert!((d - 1.0 / (2.1f64 / 1.9).ln()).abs() < 1e-13);
        assert!((d - 9.9916).abs() < 1e-3);
        let big = 1e4;
        let inv = 1.0 / penetration_depth(big, &lat).unwrap();
        assert!((inv * big / 4.0 - 1.0).abs() < 1e-6);
        let near = penetration_depth(2.0 - 1e-12, &lat).unwrap();
        assert!(near < 0.05);
        assert!(matches!(
            penetration_depth(2.0, &lat),
            Err(CasimirError::SingularBarrier(_))
        ));
    }

    #[test]
    fn scattering_matrix_massless() {
        let lat = unit_lattice();
        let e = c(0.37, 0.0);
        let s = scattering_matrix(e, 0.0, Sites(6), 0.0, &lat).unwrap();
        assert!(s.r.norm() < 1e-15);
        let t = transmission_free(e, Sites(6), 0.0, &lat).unwrap();
        assert!((s.t - t).norm() < 1e-14);
    }

    #[test]
    fn scattering_matrix_matches_closed_forms() {
        let lat = LatticeParams::new(1.0, 0.8, 1.0).unwrap();
        for (e, mu, n, ky) in [
            (c(0.2, 0.0), 0.5, 3, 0.0),
            (c(0.9, 0.0), 0.5, 10, 0.0),
            (c(0.0, 0.3), -1.2, 7, 0.0),
            (c(0.25, 0.1), 0.8, 64, 0.0),
            (c(0.6, 0.0), 0.4, 12, 0.3),
            (c(0.1, 0.5), 1.1, 20, -0.4),
        ] {
            let s = scattering_matrix(e, mu, Sites(n), ky, &lat).unwrap();
            let r = reflection_barrier(e, mu, Sites(n), ky, &lat).unwrap();
            let t = transmission_barrier(e, mu, Sites(n), ky, &lat).unwrap();
            assert!((s.r - r).norm() < 1e-10, "r: {} vs {r}", s.r);
            assert!((s.r_prime - r).norm() < 1e-10, "r': {} vs {r}", s.r_prime);
            assert!((s.t - t).norm() < 1e-10, "t: {} vs {t}", s.t);
            assert!((s.t_prime - t).norm() < 1e-10, "t': {} vs {t}", s.t_prime);
        }
    }

    #[test]
    fn scattering_unitary_on_real_axis() {
        let lat = unit_lattice();
        for (e, mu, n) in [(0.3, 0.5, 4), (0.3, 0.1, 40), (1.5, 0.9, 9), (-0.7, 2.5, 3)] {
            let s = scattering_matrix(c(e, 0.0), mu, Sites(n), 0.0, &lat).unwrap();
            assert!(
                s.unitarity_defect() < 1e-12,
                "defect {}",
                s.unitarity_defect()
            );
        }
    }

    #[test]
    fn scattering_basis_undefined_at_zero_energy_with_ky() {
        let lat = unit_lattice();
        let r = scattering_matrix(c(0.0, 0.0), 1.0, Sites(3), 0.2, &lat);
        assert!(matches!(r, Err(CasimirError::Domain(_))));
    }

    #[test]
    fn overflow_safe_long_barrier() {
        let lat = unit_lattice();
        let r = reflection_barrier(c(0.0, 0.2), 3.0, Sites(1_000_000), 0.0, &lat).unwrap();
        let r_inf = reflection_infinite(0.2, 3.0, 0.0, &lat).unwrap();
        assert!((r - r_inf).norm() < 1e-15);
        let t = transmission_barrier(c(0.0, 0.2), 3.0, Sites(1_000_000), 0.0, &lat).unwrap();
        assert!(t.norm() < 1e-300 || t.norm() == 0.0);
    }
}
