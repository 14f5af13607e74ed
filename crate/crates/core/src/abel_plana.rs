//! Zero-point energy of tangent fermions confined by an infinite-mass
//! boundary condition, regularized with the Abel-Plana formula.
//!
//! With that boundary condition the spurious modes near the edge of the
//! Brillouin zone are confined too, and the `1/L` term comes out as
//! `pi (gamma^2 + 1) / (24 gamma^2)` instead of `pi / 24`.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use crate::error::{CasimirError, Result};
use crate::lattice::{LatticeParams, Sites};
use crate::quadrature::{integrate_breaks, QuadratureSpec};

/// Summation window and offset for `sum f(n + nu) - int_A^B f(x) dx`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AbelPlanaSpec {
    pub a_end: f64,
    pub b_end: f64,
    pub nu: f64,
    pub quad: QuadratureSpec,
}

impl AbelPlanaSpec {
    pub fn new(a_end: f64, b_end: f64, nu: f64, quad: QuadratureSpec) -> Result<Self> {
        if !(a_end < b_end) || !a_end.is_finite() || !b_end.is_finite() || !nu.is_finite() {
            return Err(CasimirError::Domain(format!(
                "need finite A < B, got A = {a_end}, B = {b_end}"
            )));
        }
        quad.validate()?;
        Ok(Self {
            a_end,
            b_end,
            nu,
            quad,
        })
    }

    /// Indices `n` with `A <= n + nu <= B`.
    pub fn indices(&self) -> std::ops::RangeInclusive<i64> {
        let lo = (self.a_end - self.nu).ceil() as i64;
        let hi = (self.b_end - self.nu).floor() as i64;
        lo..=hi
    }
}

/// Energies `E_m = (2 v_F / a) tan((m + 1/2) pi a / 2L)` for
/// `m = -L/a .. L/a - 1`, in increasing order.
pub fn quantized_levels(l: Sites, lat: &LatticeParams) -> Result<Vec<f64>> {
    if l.0 == 0 {
        return Err(CasimirError::Domain(
            "separation must be at least one site".into(),
        ));
    }
    let n = i64::from(l.0);
    let prefactor = 2.0 * lat.energy_unit();
    Ok((-n..n)
        .map(|m| prefactor * ((m as f64 + 0.5) * PI / (2.0 * n as f64)).tan())
        .collect())
}

fn is_integer(x: f64) -> bool {
    (x - x.round()).abs() < 1e-12
}

/// `Delta(X, nu) = f(X)/2` when `X - nu` is an integer.
fn endpoint_term<F: Fn(Complex64) -> Complex64>(f: &F, x: f64, nu: f64) -> f64 {
    if is_integer(x - nu) {
        0.5 * f(Complex64::new(x, 0.0)).re
    } else {
        0.0
    }
}

/// `Q(X, nu) = (1/i) int_0^inf dy [ f(X+iy) / (e^{2pi y - i theta} - 1)
///  - f(X-iy) / (e^{2pi y + i theta} - 1) ]` with `theta = 2 pi (X - nu)`.
fn boundary_integral<F: Fn(Complex64) -> Complex64>(
    f: &F,
    x: f64,
    nu: f64,
    q: &QuadratureSpec,
) -> Result<f64> {
    let theta = 2.0 * PI * (x - nu);
    let integrand = |y: f64| {
        let up =
            f(Complex64::new(x, y)) / (Complex64::from_polar((2.0 * PI * y).exp(), -theta) - 1.0);
        let down =
            f(Complex64::new(x, -y)) / (Complex64::from_polar((2.0 * PI * y).exp(), theta) - 1.0);
        // (1/i) z = -i z, whose real part is Im z.
        (up - down).im
    };
    // The kernel is ~ e^{-2 pi y}: stop where it drops below the absolute tolerance.
    let cutoff = (1.0 / q.abs_tol).ln() / (2.0 * PI) + 1.0;
    let tail = |y: f64| {
        (f(Complex64::new(x, y)).norm() + f(Complex64::new(x, -y)).norm()) * (-2.0 * PI * y).exp()
    };
    let (t1, t2) = (tail(cutoff), tail(2.0 * cutoff));
    if !t1.is_finite() || !t2.is_finite() || (t2 >= t1 && t1 > 0.0) {
        return Err(CasimirError::NonConvergence(format!(
            "f grows at least as fast as e^(2 pi y) near X = {x}"
        )));
    }
    Ok(integrate_breaks(integrand, &[0.0, 1.0, cutoff], q)?.value)
}

/// `sum_n f(n + nu) - int_A^B f(x) dx` through the boundary terms
/// `Delta(A) + Delta(B) - Q(A) + Q(B)`.
///
/// `f` must be real on the real axis and analytic in the half-strips
/// `Re z = A, B`.
pub fn abel_plana_sum<F: Fn(Complex64) -> Complex64>(f: F, spec: &AbelPlanaSpec) -> Result<f64> {
    spec.quad.validate()?;
    let (a, b, nu) = (spec.a_end, spec.b_end, spec.nu);
    let delta = endpoint_term(&f, a, nu) + endpoint_term(&f, b, nu);
    let qa = boundary_integral(&f, a, nu, &spec.quad)?;
    let qb = boundary_integral(&f, b, nu, &spec.quad)?;
    Ok(delta - qa + qb)
}

/// The summand `f(x) = -(2/tau) ln(1 + gamma tan(x pi a / 2L))` of the
/// infinite-mass free energy, continued to complex `x` (in units of `a`).
pub fn infinite_mass_summand(x: Complex64, l: Sites, lat: &LatticeParams) -> Complex64 {
    let n = f64::from(l.0);
    let g = lat.gamma();
    let inner = if x.re > 0.5 * n {
        // tan(pi/2 + v) = -1 / tan(v) stays finite next to x = L/a.
        1.0 - g / ((x - n) * PI / (2.0 * n)).tan()
    } else {
        1.0 + g * (x * PI / (2.0 * n)).tan()
    };
    -2.0 / lat.tau() * inner.ln()
}

/// Regularized zero-point energy `delta F` for two infinite-mass
/// boundaries a distance `l` apart, from the two `arctan` boundary integrals.
pub fn zero_point_energy_infinite_mass(
    l: Sites,
    lat: &LatticeParams,
    q: &QuadratureSpec,
) -> Result<f64> {
    if l.0 < 8 {
        return Err(CasimirError::Domain(format!(
            "need L >= 8 a, got {} a",
            l.0
        )));
    }
    q.validate()?;
    let g = lat.gamma();
    let s = PI / (2.0 * f64::from(l.0));
    let cutoff = (1.0 / q.abs_tol).ln() / (2.0 * PI) + 1.0;
    let kernel = |y: f64| 1.0 / ((2.0 * PI * y).exp() + 1.0);
    let tanh_part = integrate_breaks(
        |y| (g * (s * y).tanh()).atan() * kernel(y),
        &[0.0, 1.0, cutoff],
        q,
    )?;
    // arctan(g coth u) = pi/2 - arctan(tanh(u) / g), finite at u = 0.
    let coth_part = integrate_breaks(
        |y| (0.5 * PI - ((s * y).tanh() / g).atan()) * kernel(y),
        &[0.0, 1.0, cutoff],
        q,
    )?;
    Ok(4.0 / lat.tau() * (coth_part.value - tanh_part.value))
}

/// `delta F = offset - coefficient v_F / L + O(L^-3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InfiniteMassExpansion {
    pub offset: f64,
    pub coefficient: f64,
}

/// Offset and `1/L` coefficient of `delta F` by Richardson extrapolation
/// from `L`, `2L` and `4L`. The expansion contains odd powers of `1/L` only.
pub fn infinite_mass_expansion(
    l: Sites,
    lat: &LatticeParams,
    q: &QuadratureSpec,
) -> Result<InfiniteMassExpansion> {
    let n = l.0;
    let f1 = zero_point_energy_infinite_mass(Sites(n), lat, q)?;
    let f2 = zero_point_energy_infinite_mass(Sites(2 * n), lat, q)?;
    let f4 = zero_point_energy_infinite_mass(Sites(4 * n), lat, q)?;
    // Remove the L^-3 term, then solve for offset and 1/L term.
    let g1 = (8.0 * f2 - f1) / 7.0;
    let g2 = (8.0 * f4 - f2) / 7.0;
    let offset = 2.0 * g2 - g1;
    // g(L) = offset - (3/7) c v_F / L after the first elimination.
    let length = Sites(2 * n).length(lat);
    let coefficient = (offset - g2) * length / lat.v_f() * 7.0 / 3.0;
    Ok(InfiniteMassExpansion {
        offset,
        coefficient,
    })
}

/// Limits of the expansion: offset `ln 2 / tau`, coefficient
/// `pi (gamma^2 + 1) / (24 gamma^2)`.
pub fn infinite_mass_expansion_exact(lat: &LatticeParams) -> InfiniteMassExpansion {
    let g2 = lat.gamma().powi(2);
    InfiniteMassExpansion {
        offset: LN_2 / lat.tau(),
        coefficient: PI * (g2 + 1.0) / (24.0 * g2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QuadratureSpec {
        QuadratureSpec::default().with_rel_tol(1e-12)
    }

    fn brute<F: Fn(f64) -> f64>(f: F, spec: &AbelPlanaSpec) -> f64 {
        let sum: f64 = spec.indices().map(|n| f(n as f64 + spec.nu)).sum();
        let int = integrate_breaks(&f, &[spec.a_end, spec.b_end], &spec.quad)
            .unwrap()
            .value;
        sum - int
    }

    #[test]
    fn polynomial_oracles() {
        let spec = AbelPlanaSpec::new(0.0, 10.0, 0.5, q()).unwrap();
        let lin = abel_plana_sum(|z| z, &spec).unwrap();
        assert!(lin.abs() < 1e-12);
        let sq = abel_plana_sum(|z| z * z, &spec).unwrap();
        assert!((sq + 10.0 / 12.0).abs() < 1e-12, "{sq}");
        let c = abel_plana_sum(|_| Complex64::new(3.0, 0.0), &spec).unwrap();
        assert!(c.abs() < 1e-12);
    }

    #[test]
    fn matches_brute_force_for_other_windows() {
        // Integer offsets bring in the endpoint terms.
        for (a, b, nu) in [
            (0.0, 7.0, 0.0),
            (0.3, 5.8, 0.5),
            (-2.0, 3.0, 0.25),
            (1.0, 4.0, 0.0),
        ] {
            let spec = AbelPlanaSpec::new(a, b, nu, q()).unwrap();
            let ap = abel_plana_sum(|z| z * z * z - 2.0 * z, &spec).unwrap();
            let bf = brute(|x| x * x * x - 2.0 * x, &spec);
            assert!((ap - bf).abs() < 1e-9, "[{a},{b}] nu={nu}: {ap} vs {bf}");
            let ap = abel_plana_sum(|z| (z * 0.3).atan(), &spec).unwrap();
            let bf = brute(|x| (x * 0.3).atan(), &spec);
            assert!((ap - bf).abs() < 1e-9, "[{a},{b}] nu={nu}: {ap} vs {bf}");
        }
    }

    #[test]
    fn rejects_fast_growth() {
        let spec = AbelPlanaSpec::new(0.0, 1.0, 0.5, q()).unwrap();
        let err = abel_plana_sum(|z| (z * Complex64::new(0.0, -7.0)).exp(), &spec).unwrap_err();
        assert!(matches!(err, CasimirError::NonConvergence(_)));
        assert!(AbelPlanaSpec::new(1.0, 1.0, 0.5, q()).is_err());
    }

    #[test]
    fn levels() {
        let lat = LatticeParams::with_gamma(2.0).unwrap();
        let e = quantized_levels(Sites(6), &lat).unwrap();
        assert_eq!(e.len(), 12);
        for i in 0..6 {
            assert!((e[i] + e[11 - i]).abs() < 1e-12);
        }
        assert!(e.windows(2).all(|w| w[0] < w[1]));
        // Near-continuum: a -> 0 at fixed L, v_F.
        let fine = LatticeParams::new(1e-3, 1.0, 1.0).unwrap();
        let n = 2000u32;
        let l = Sites(n).length(&fine);
        let e = quantized_levels(Sites(n), &fine).unwrap();
        let m0 = n as usize;
        for m in 0..5 {
            let cont = (m as f64 + 0.5) * PI / l;
            assert!((e[m0 + m] / cont - 1.0).abs() < 1e-4);
        }
    }

    #[test]
    fn boundary_integrals_match_direct_sum() {
        let lat = LatticeParams::with_gamma(1.0).unwrap();
        let l = Sites(50);
        let spec = AbelPlanaSpec::new(0.0, 50.0, 0.5, q()).unwrap();
        let ap = abel_plana_sum(|z| infinite_mass_summand(z, l, &lat), &spec).unwrap();
        let direct = zero_point_energy_infinite_mass(l, &lat, &q()).unwrap();
        let bf = brute(
            |x| infinite_mass_summand(Complex64::new(x, 0.0), l, &lat).re,
            &spec,
        );
        assert!((ap - direct).abs() < 1e-8, "{ap} vs {direct}");
        assert!((bf - direct).abs() < 1e-8, "{bf} vs {direct}");
    }

    #[test]
    fn expansion_converges() {
        for g in [1.0, 3.0] {
            let lat = LatticeParams::with_gamma(g).unwrap();
            let ex = infinite_mass_expansion(Sites(100), &lat, &q()).unwrap();
            let exact = infinite_mass_expansion_exact(&lat);
            assert!((ex.offset - exact.offset).abs() < 1e-8 / lat.tau(), "g={g}");
            assert!(
                (ex.coefficient / exact.coefficient - 1.0).abs() < 1e-6,
                "g={g}"
            );
        }
    }

    #[test]
    fn near_continuum_coefficient() {
        // The expansion parameter is gamma a / L, so large gamma needs large L.
        let lat = LatticeParams::with_gamma(100.0).unwrap();
        let l = Sites(2000);
        let df = zero_point_energy_infinite_mass(l, &lat, &q()).unwrap();
        let coefficient = (LN_2 / lat.tau() - df) * l.length(&lat) / lat.v_f();
        assert!(
            (coefficient / (PI / 24.0) - 1.0).abs() < 0.01,
            "{coefficient}"
        );
    }
}
