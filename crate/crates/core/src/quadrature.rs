//! Globally adaptive 21-point Gauss-Kronrod quadrature on finite and
//! semi-infinite intervals.
//!
//! All panels of one call share a single error budget: the panel with the
//! largest error estimate is bisected until the total estimate satisfies
//! `max(abs_tol, rel_tol * |I|)`. Panel order is fully deterministic.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{CasimirError, Result};

/// Kronrod abscissae on [0, 1]; odd indices are the 10-point Gauss nodes.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_632_914_893,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Tolerances and subdivision budget of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_subdivisions: 2000,
        }
    }
}

impl QuadratureSpec {
    pub fn new(rel_tol: f64, abs_tol: f64, max_subdivisions: usize) -> Result<Self> {
        let spec = Self {
            rel_tol,
            abs_tol,
            max_subdivisions,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_rel_tol(self, rel_tol: f64) -> Self {
        Self { rel_tol, ..self }
    }

    pub fn with_abs_tol(self, abs_tol: f64) -> Self {
        Self { abs_tol, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(CasimirError::Config(format!(
                "rel_tol must be positive, got {}",
                self.rel_tol
            )));
        }
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(CasimirError::Config(format!(
                "abs_tol must be positive, got {}",
                self.abs_tol
            )));
        }
        if self.max_subdivisions < 1 {
            return Err(CasimirError::Config("max_subdivisions must be >= 1".into()));
        }
        Ok(())
    }
}

/// Value of a definite integral with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub abs_error: f64,
    pub evaluations: usize,
}

/// One 21-point rule on [a, b]: (kronrod value, error estimate).
fn gk21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[10];
    let mut gauss = 0.0;
    let mut res_abs = kronrod.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        fv1[j] = f1;
        fv2[j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut err = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    (kronrod * half, err)
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    segment: usize,
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.segment.cmp(&self.segment))
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// A piece of the integration range, possibly unbounded above.
#[derive(Debug, Clone, Copy)]
enum Segment {
    Finite(f64, f64),
    /// `[start, inf)` mapped by `x = start + scale * t / (1 - t)`, t in [0, 1).
    Upper {
        start: f64,
        scale: f64,
    },
}

impl Segment {
    fn param_range(&self) -> (f64, f64) {
        match *self {
            Segment::Finite(a, b) => (a, b),
            Segment::Upper { .. } => (0.0, 1.0),
        }
    }

    fn eval<F: Fn(f64) -> f64>(&self, f: &F, t: f64) -> f64 {
        match *self {
            Segment::Finite(..) => f(t),
            Segment::Upper { start, scale } => {
                let s = 1.0 - t;
                if s <= 0.0 {
                    return 0.0;
                }
                let x = start + scale * t / s;
                if !x.is_finite() {
                    return 0.0;
                }
                let v = f(x) * scale / (s * s);
                if v.is_finite() {
                    v
                } else {
                    0.0
                }
            }
        }
    }
}

fn integrate_segments<F: Fn(f64) -> f64>(
    f: &F,
    segments: &[Segment],
    spec: &QuadratureSpec,
) -> Result<Integral> {
    spec.validate()?;
    let mut heap = BinaryHeap::new();
    let mut evaluations = 0;
    let mut total = 0.0;
    let mut total_err = 0.0;
    for (i, seg) in segments.iter().enumerate() {
        let (a, b) = seg.param_range();
        if a == b {
            continue;
        }
        let g = |t: f64| seg.eval(f, t);
        let (value, error) = gk21(&g, a, b);
        evaluations += 21;
        total += value;
        total_err += error;
        heap.push(Panel {
            segment: i,
            a,
            b,
            value,
            error,
        });
    }
    let mut subdivisions = 0;
    loop {
        let tol = spec.abs_tol.max(spec.rel_tol * total.abs());
        if total_err <= tol {
            break;
        }
        if subdivisions >= spec.max_subdivisions {
            return Err(CasimirError::QuadratureFailure {
                abs_error: total_err,
                subdivisions,
            });
        }
        let Some(worst) = heap.pop() else { break };
        let seg = &segments[worst.segment];
        let g = |t: f64| seg.eval(f, t);
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Panel can no longer be split in floating point.
            return Err(CasimirError::QuadratureFailure {
                abs_error: total_err,
                subdivisions,
            });
        }
        let (v1, e1) = gk21(&g, worst.a, mid);
        let (v2, e2) = gk21(&g, mid, worst.b);
        evaluations += 42;
        subdivisions += 1;
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.error;
        heap.push(Panel {
            segment: worst.segment,
            a: worst.a,
            b: mid,
            value: v1,
            error: e1,
        });
        heap.push(Panel {
            segment: worst.segment,
            a: mid,
            b: worst.b,
            value: v2,
            error: e2,
        });
    }
    // Re-sum in a fixed order to remove drift from the running updates.
    let mut panels: Vec<Panel> = heap.into_vec();
    panels.sort_by(|p, q| p.segment.cmp(&q.segment).then(p.a.total_cmp(&q.a)));
    let value = panels.iter().map(|p| p.value).sum();
    let abs_error = panels.iter().map(|p| p.error).sum();
    Ok(Integral {
        value,
        abs_error,
        evaluations,
    })
}

/// Integrate `f` over the finite interval `[a, b]`.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<Integral> {
    integrate_breaks(f, &[a, b], spec)
}

/// Integrate `f` over consecutive intervals between sorted `breaks`.
/// A last break of `f64::INFINITY` makes the final piece semi-infinite.
pub fn integrate_breaks<F: Fn(f64) -> f64>(
    f: F,
    breaks: &[f64],
    spec: &QuadratureSpec,
) -> Result<Integral> {
    integrate_breaks_scaled(f, breaks, 1.0, spec)
}

/// As [`integrate_breaks`], with `scale` setting the length over which the
/// semi-infinite tail is compressed.
pub fn integrate_breaks_scaled<F: Fn(f64) -> f64>(
    f: F,
    breaks: &[f64],
    scale: f64,
    spec: &QuadratureSpec,
) -> Result<Integral> {
    if breaks.len() < 2 {
        return Err(CasimirError::Domain("need at least two breakpoints".into()));
    }
    if breaks.windows(2).any(|w| !(w[0] <= w[1])) || breaks[0].is_infinite() {
        return Err(CasimirError::Domain(format!(
            "breakpoints must be increasing from a finite start: {breaks:?}"
        )));
    }
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(CasimirError::Domain(format!(
            "tail scale must be positive, got {scale}"
        )));
    }
    let segments: Vec<Segment> = breaks
        .windows(2)
        .map(|w| {
            if w[1].is_infinite() {
                Segment::Upper { start: w[0], scale }
            } else {
                Segment::Finite(w[0], w[1])
            }
        })
        .collect();
    integrate_segments(&f, &segments, spec)
}

/// Integrate `f` over `[a, inf)`.
pub fn integrate_to_infinity<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    spec: &QuadratureSpec,
) -> Result<Integral> {
    integrate_breaks(f, &[a, f64::INFINITY], spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn kronrod_exact_for_degree_31() {
        // A single 21-point Kronrod panel integrates x^k exactly up to k = 31.
        for k in [0, 1, 5, 10, 19, 30, 31] {
            let (v, _) = gk21(&|x: f64| x.powi(k), 0.0, 1.0);
            let exact = 1.0 / f64::from(k + 1);
            assert!((v - exact).abs() < 1e-15, "k = {k}: {v} vs {exact}");
        }
    }

    #[test]
    fn gauss_weights_sum_to_one() {
        let s: f64 = 2.0 * WG.iter().sum::<f64>();
        assert!((s - 2.0).abs() < 1e-15);
        let k: f64 = WGK[10] + 2.0 * WGK[..10].iter().sum::<f64>();
        assert!((k - 2.0).abs() < 1e-15);
    }

    #[test]
    fn adaptive_handles_peaks() {
        let spec = QuadratureSpec::default();
        let r = integrate(|x| 1.0 / (1e-4 + x * x), -1.0, 1.0, &spec).unwrap();
        let exact = 2.0 * (1.0 / 1e-2) * (1.0f64 / 1e-2).atan();
        assert!((r.value - exact).abs() < 1e-8 * exact);
    }

    #[test]
    fn semi_infinite() {
        let spec = QuadratureSpec::default();
        let r = integrate_to_infinity(|x| (-x).exp(), 0.0, &spec).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
        let r = integrate_to_infinity(|x| 1.0 / (1.0 + x * x), 0.0, &spec).unwrap();
        assert!((r.value - PI / 2.0).abs() < 1e-12);
        let r =
            integrate_breaks_scaled(|x| (-1000.0 * x).exp(), &[0.0, f64::INFINITY], 1e-3, &spec)
                .unwrap();
        assert!((r.value - 1e-3).abs() < 1e-14);
    }

    #[test]
    fn log_endpoint_singularity() {
        let spec = QuadratureSpec::default();
        let r = integrate(|x: f64| x.ln(), 0.0, 1.0, &spec).unwrap();
        assert!((r.value + 1.0).abs() < 1e-10);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let spec = QuadratureSpec::new(1e-14, 1e-300, 3).unwrap();
        let r = integrate(|x: f64| (1.0 / x).sin(), 1e-6, 1.0, &spec);
        assert!(matches!(r, Err(CasimirError::QuadratureFailure { .. })));
    }

    #[test]
    fn spec_validation() {
        assert!(QuadratureSpec::new(0.0, 1e-14, 10).is_err());
        assert!(QuadratureSpec::new(1e-10, -1.0, 10).is_err());
        assert!(QuadratureSpec::new(1e-10, 1e-14, 0).is_err());
    }

    #[test]
    fn deterministic() {
        let spec = QuadratureSpec::default();
        let f = |x: f64| (x * 13.0).sin().abs() * (-x).exp();
        let a = integrate_to_infinity(f, 0.0, &spec).unwrap();
        let b = integrate_to_infinity(f, 0.0, &spec).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
    }
}
