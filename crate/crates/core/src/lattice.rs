//! Space-time lattice parameters and the barrier geometry.

use crate::error::{CasimirError, Result};

/// Number of lattice sites; lengths on the lattice are integer multiples of `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sites(pub u32);

impl Sites {
    pub fn get(self) -> u32 {
        self.0
    }

    /// Physical length `n * a`.
    pub fn length(self, lat: &LatticeParams) -> f64 {
        f64::from(self.0) * lat.a()
    }
}

/// Lattice constants of the tangent-fermion discretization (hbar = 1).
///
/// Energies are handled internally in units of `v_F / a`, imaginary-time
/// frequencies in units of `1 / tau`. The dimensionless ratio
/// `gamma = v_F tau / a` is always derived, never stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeParams {
    a: f64,
    tau: f64,
    v_f: f64,
}

impl LatticeParams {
    pub fn new(a: f64, tau: f64, v_f: f64) -> Result<Self> {
        for (name, v) in [("a", a), ("tau", tau), ("v_f", v_f)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(CasimirError::Domain(format!(
                    "lattice parameter {name} must be finite and positive, got {v}"
                )));
            }
        }
        Ok(Self { a, tau, v_f })
    }

    /// Lattice with `a = v_F = 1` and `tau = gamma`.
    pub fn with_gamma(gamma: f64) -> Result<Self> {
        Self::new(1.0, gamma, 1.0)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn v_f(&self) -> f64 {
        self.v_f
    }

    pub fn gamma(&self) -> f64 {
        self.v_f * self.tau / self.a
    }

    /// Energy unit `v_F / a`.
    pub fn energy_unit(&self) -> f64 {
        self.v_f / self.a
    }
}

/// Extent of a mass barrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BarrierLength {
    Finite(Sites),
    Infinite,
}

/// Pair of mass barriers enclosing a massless region, optionally with a
/// staggered potential in between and a transverse width for 2D surfaces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BarrierConfig {
    pub mu_l: f64,
    pub mu_r: f64,
    pub barrier: BarrierLength,
    pub separation: Sites,
    /// Staggered potential amplitude `V_0`.
    pub v0: f64,
    /// Transverse width `W` (2D only; free energies are proportional to it).
    pub width: f64,
}

impl BarrierConfig {
    /// Infinite barriers of masses `mu_l`, `mu_r` separated by `separation` sites.
    pub fn extended(mu_l: f64, mu_r: f64, separation: Sites) -> Self {
        Self {
            mu_l,
            mu_r,
            barrier: BarrierLength::Infinite,
            separation,
            v0: 0.0,
            width: 1.0,
        }
    }

    /// Barriers of finite length `barrier` sites.
    pub fn finite(mu_l: f64, mu_r: f64, barrier: Sites, separation: Sites) -> Self {
        Self {
            barrier: BarrierLength::Finite(barrier),
            ..Self::extended(mu_l, mu_r, separation)
        }
    }

    /// Single-site barriers ("mass spikes").
    pub fn spikes(mu_l: f64, mu_r: f64, separation: Sites) -> Self {
        Self::finite(mu_l, mu_r, Sites(1), separation)
    }

    pub fn with_separation(self, separation: Sites) -> Self {
        Self { separation, ..self }
    }

    pub fn with_staggered(self, v0: f64) -> Self {
        Self { v0, ..self }
    }

    pub fn with_width(self, width: f64) -> Self {
        Self { width, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.mu_l.is_finite() && self.mu_r.is_finite()) {
            return Err(CasimirError::Config("barrier masses must be finite".into()));
        }
        if self.separation.0 == 0 {
            return Err(CasimirError::Config(
                "separation must be at least one lattice site".into(),
            ));
        }
        if self.barrier == BarrierLength::Finite(Sites(0)) {
            return Err(CasimirError::Config(
                "finite barrier must span at least one site".into(),
            ));
        }
        if !(self.v0.is_finite() && self.v0 >= 0.0) {
            return Err(CasimirError::Config(format!(
                "staggered amplitude must be >= 0, got {}",
                self.v0
            )));
        }
        if self.v0 > 0.0 && !self.separation.0.is_multiple_of(2) {
            return Err(CasimirError::Config(format!(
                "staggered potential requires an even separation, got L/a = {}",
                self.separation.0
            )));
        }
        if !(self.width.is_finite() && self.width > 0.0) {
            return Err(CasimirError::Config(
                "transverse width must be positive".into(),
            ));
        }
        Ok(())
    }

    /// Sign of `mu_l * mu_r` (0 when either barrier is massless).
    pub fn mass_sign(&self) -> f64 {
        let p = self.mu_l * self.mu_r;
        if p > 0.0 {
            1.0
        } else if p < 0.0 {
            -1.0
        } else {
            0.0
        }
    }
}
