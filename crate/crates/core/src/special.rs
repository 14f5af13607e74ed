//! Real dilogarithm, Riemann zeta at integer arguments, and the gamma
//! function at integer and half-integer arguments.

use std::f64::consts::PI;

use crate::error::{CasimirError, Result};

const PI2_6: f64 = PI * PI / 6.0;

/// Bernoulli numbers B_2, B_4, ..., B_22.
const BERNOULLI_EVEN: [f64; 11] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
];

/// Li2 on [0, 1/2] from the Bernoulli series in u = -ln(1 - x).
fn dilog_series(x: f64) -> f64 {
    let u = -(-x).ln_1p();
    let u2 = u * u;
    // sum_{k>=1} B_{2k} u^{2k+1} / (2k+1)!
    let mut term_pow = u;
    let mut fact = 1.0;
    let mut tail = 0.0;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
        let n = 2 * k as u32 + 2;
        fact *= f64::from(n) * f64::from(n + 1);
        term_pow *= u2;
        tail += b * term_pow / fact;
    }
    u - 0.25 * u2 + tail
}

/// Real dilogarithm `Li2(x) = -int_0^x ln(1-t)/t dt` for `x <= 1`.
pub fn dilogarithm(x: f64) -> Result<f64> {
    if x.is_nan() || x > 1.0 {
        return Err(CasimirError::Domain(format!(
            "dilogarithm is real only for x <= 1, got {x}"
        )));
    }
    Ok(dilog_unchecked(x))
}

fn dilog_unchecked(x: f64) -> f64 {
    if x == 1.0 {
        PI2_6
    } else if x > 0.5 {
        PI2_6 - x.ln() * (-x).ln_1p() - dilog_series(1.0 - x)
    } else if x >= 0.0 {
        dilog_series(x)
    } else if x >= -1.0 {
        // Landen: x/(x-1) lies in (0, 1/2].
        let l = (-x).ln_1p();
        -dilog_series(x / (x - 1.0)) - 0.5 * l * l
    } else if x.is_infinite() {
        f64::NEG_INFINITY
    } else {
        let l = (-x).ln();
        -PI2_6 - 0.5 * l * l - dilog_unchecked(1.0 / x)
    }
}

const ZETA3: f64 = 1.202_056_903_159_594_3;

/// Riemann zeta function at an integer argument `s >= 2`.
pub fn zeta(s: u32) -> Result<f64> {
    match s {
        0 | 1 => Err(CasimirError::Domain(format!(
            "zeta is implemented for integer s >= 2, got {s}"
        ))),
        2 => Ok(PI2_6),
        3 => Ok(ZETA3),
        4 => Ok(PI.powi(4) / 90.0),
        _ => Ok(zeta_borwein(s)),
    }
}

/// Borwein's accelerated alternating series for the Dirichlet eta function.
fn zeta_borwein(s: u32) -> f64 {
    const N: usize = 32;
    let mut d = [0.0f64; N + 1];
    let n = N as f64;
    let mut term = 1.0 / n;
    let mut acc = term;
    d[0] = acc;
    for (i, di) in d.iter_mut().enumerate().skip(1) {
        let i = i as f64;
        term *= (n + i - 1.0) * 4.0 * (n - i + 1.0) / ((2.0 * i) * (2.0 * i - 1.0));
        acc += term;
        *di = acc;
    }
    let dn = d[N] * n;
    let mut sum = 0.0;
    for k in (0..N).rev() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * (d[k] * n - dn) / ((k + 1) as f64).powi(s as i32);
    }
    let eta = -sum / dn;
    eta / (1.0 - 2f64.powi(1 - s as i32))
}

/// Gamma function at `x = half_units / 2` (integers and half-integers).
pub fn gamma_half(half_units: u32) -> Result<f64> {
    if half_units == 0 {
        return Err(CasimirError::Domain("gamma has a pole at 0".into()));
    }
    let (mut x, mut value) = if half_units.is_multiple_of(2) {
        (1.0, 1.0)
    } else {
        (0.5, PI.sqrt())
    };
    let target = f64::from(half_units) / 2.0;
    while x < target {
        value *= x;
        x += 1.0;
    }
    Ok(value)
}
