use std::path::{Path, PathBuf};

use ini::Ini;

use crate::continuum::MassSign;
use crate::error::{CasimirError, Result};
use crate::lattice::LatticeParams;
use crate::quadrature::QuadratureSpec;

/// Which table to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Experiment {
    Barrier1d,
    Spike,
    Barrier2d,
    Protection,
    AbelPlana,
}

impl Experiment {
    pub fn id(self) -> &'static str {
        match self {
            Experiment::Barrier1d => "fig-barrier-1d",
            Experiment::Spike => "fig-spike",
            Experiment::Barrier2d => "fig-barrier-2d",
            Experiment::Protection => "protection",
            Experiment::AbelPlana => "abel-plana",
        }
    }
}

/// Inclusive arithmetic range of separations in units of `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SiteRange {
    pub min: u32,
    pub max: u32,
    pub step: u32,
}

impl SiteRange {
    pub fn values(&self) -> Vec<u32> {
        if self.min > self.max {
            return Vec::new();
        }
        (self.min..=self.max).step_by(self.step as usize).collect()
    }
}

/// Inclusive range of `a mu_0 / v_F` values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassRange {
    pub min: f64,
    pub max: f64,
    pub step: f64,
}

impl MassRange {
    pub fn values(&self) -> Vec<f64> {
        if self.min > self.max {
            return Vec::new();
        }
        let count = ((self.max - self.min) / self.step + 1e-9).floor() as usize + 1;
        (0..count)
            .map(|i| self.min + i as f64 * self.step)
            .collect()
    }
}

/// Fully resolved parameters of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub experiment: Experiment,
    pub gamma: f64,
    pub mu0_tau: f64,
    pub mu_sign: MassSign,
    pub sites: SiteRange,
    pub masses: MassRange,
    pub v0: Vec<f64>,
    pub wilson_m0: f64,
    pub quad: QuadratureSpec,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    /// Figure-caption parameters: `gamma = 1`, `mu_0 tau = 1`.
    pub fn defaults(experiment: Experiment) -> Self {
        let sites = match experiment {
            Experiment::Barrier1d => SiteRange {
                min: 5,
                max: 100,
                step: 5,
            },
            Experiment::Spike => SiteRange {
                min: 1000,
                max: 1000,
                step: 1,
            },
            Experiment::Barrier2d => SiteRange {
                min: 5,
                max: 60,
                step: 5,
            },
            Experiment::Protection => SiteRange {
                min: 100,
                max: 400,
                step: 100,
            },
            Experiment::AbelPlana => SiteRange {
                min: 10,
                max: 200,
                step: 10,
            },
        };
        let quad = match experiment {
            Experiment::Barrier2d => QuadratureSpec::default().with_rel_tol(1e-8),
            _ => QuadratureSpec::default(),
        };
        Self {
            experiment,
            gamma: 1.0,
            mu0_tau: 1.0,
            mu_sign: MassSign::Same,
            sites,
            masses: MassRange {
                min: 0.0,
                max: 10.0,
                step: 0.1,
            },
            v0: vec![0.0, 0.1, 0.5, 1.0, 2.0],
            wilson_m0: 1.0,
            quad,
            out: None,
        }
    }

    /// Lattice with `a = v_F = 1` and `tau = gamma`.
    pub fn lattice(&self) -> Result<LatticeParams> {
        LatticeParams::with_gamma(self.gamma)
    }

    /// Barrier mass `mu_0` in units of `v_F / a`.
    pub fn mu0(&self) -> f64 {
        self.mu0_tau / self.gamma
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(CasimirError::Config(msg));
        if !(self.gamma > 0.0 && self.gamma.is_finite()) {
            return bad(format!("gamma must be positive, got {}", self.gamma));
        }
        if !(self.mu0_tau >= 0.0 && self.mu0_tau.is_finite()) {
            return bad(format!(
                "mu0-tau must be non-negative, got {}",
                self.mu0_tau
            ));
        }
        if self.sites.min == 0 || self.sites.step == 0 {
            return bad("l-min and l-step must be at least 1".into());
        }
        if !(self.masses.step > 0.0) || !(self.masses.min >= 0.0) || !self.masses.max.is_finite() {
            return bad("mass sweep needs mu-min >= 0 and mu-step > 0".into());
        }
        if self.v0.iter().any(|v| !(*v >= 0.0 && v.is_finite())) {
            return bad(format!("v0 values must be non-negative, got {:?}", self.v0));
        }
        if !(self.wilson_m0 > 0.0) {
            return bad(format!(
                "wilson-m0 must be positive, got {}",
                self.wilson_m0
            ));
        }
        self.quad.validate()?;
        match self.experiment {
            Experiment::Protection => {
                if let Some(l) = self.sites.values().iter().find(|l| *l % 2 != 0) {
                    return bad(format!("the staggered potential needs even L/a, got {l}"));
                }
            }
            Experiment::AbelPlana if self.sites.min < 8 && !self.sites.values().is_empty() => {
                return bad("abel-plana needs L >= 8 a".into());
            }
            _ => {}
        }
        Ok(())
    }

    /// Apply `key = value` pairs from an INI file.
    pub fn apply_ini(&mut self, path: &Path) -> Result<()> {
        let ini = Ini::load_from_file(path).map_err(|e| {
            CasimirError::Config(format!("cannot read config {}: {e}", path.display()))
        })?;
        for (section, props) in ini.iter() {
            let section = section.unwrap_or("");
            for (key, value) in props.iter() {
                self.set(section, key, value.trim())?;
            }
        }
        Ok(())
    }

    fn set(&mut self, section: &str, key: &str, value: &str) -> Result<()> {
        match (section, key) {
            ("lattice", "gamma") => self.gamma = parse(key, value)?,
            ("lattice", "mu0_tau") => self.mu0_tau = parse(key, value)?,
            ("barrier", "mu_sign") => self.mu_sign = parse_sign(value)?,
            ("barrier", "wilson_m0") => self.wilson_m0 = parse(key, value)?,
            ("sweep", "l_min") => self.sites.min = parse(key, value)?,
            ("sweep", "l_max") => self.sites.max = parse(key, value)?,
            ("sweep", "l_step") => self.sites.step = parse(key, value)?,
            ("sweep", "mu_min") => self.masses.min = parse(key, value)?,
            ("sweep", "mu_max") => self.masses.max = parse(key, value)?,
            ("sweep", "mu_step") => self.masses.step = parse(key, value)?,
            ("sweep", "v0") => self.v0 = parse_list(value)?,
            ("quadrature", "rel_tol") => self.quad.rel_tol = parse(key, value)?,
            ("quadrature", "abs_tol") => self.quad.abs_tol = parse(key, value)?,
            ("quadrature", "max_subdivisions") => self.quad.max_subdivisions = parse(key, value)?,
            ("output", "path") => self.out = Some(PathBuf::from(value)),
            ("run", "experiment") => {
                if value != self.experiment.id() {
                    return Err(CasimirError::Config(format!(
                        "config is for experiment {value}, not {}",
                        self.experiment.id()
                    )));
                }
            }
            _ => {
                return Err(CasimirError::Config(format!(
                    "unknown config key [{section}] {key}"
                )))
            }
        }
        Ok(())
    }

    /// `key=value` lines echoed into the CSV header.
    pub fn echo(&self) -> Vec<String> {
        let v0: Vec<String> = self.v0.iter().map(|v| v.to_string()).collect();
        vec![
            format!("experiment={}", self.experiment.id()),
            format!("gamma={}", self.gamma),
            format!("mu0_tau={}", self.mu0_tau),
            format!(
                "mu_sign={}",
                match self.mu_sign {
                    MassSign::Same => "same",
                    MassSign::Opposite => "opposite",
                }
            ),
            format!(
                "l_min={} l_max={} l_step={}",
                self.sites.min, self.sites.max, self.sites.step
            ),
            format!(
                "mu_min={} mu_max={} mu_step={}",
                self.masses.min, self.masses.max, self.masses.step
            ),
            format!("v0={}", v0.join(";")),
            format!("wilson_m0={}", self.wilson_m0),
            format!(
                "quad_rel_tol={:e} quad_abs_tol={:e} quad_max_subdivisions={}",
                self.quad.rel_tol, self.quad.abs_tol, self.quad.max_subdivisions
            ),
        ]
    }
}

fn parse<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| CasimirError::Config(format!("invalid value for {key}: {value:?}")))
}

pub(crate) fn parse_sign(value: &str) -> Result<MassSign> {
    match value {
        "same" => Ok(MassSign::Same),
        "opposite" => Ok(MassSign::Opposite),
        _ => Err(CasimirError::Config(format!(
            "mu-sign must be same or opposite, got {value:?}"
        ))),
    }
}

pub(crate) fn parse_list(value: &str) -> Result<Vec<f64>> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse("v0", s))
        .collect()
}
