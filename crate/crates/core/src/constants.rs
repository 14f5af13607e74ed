//! Numerical thresholds shared by the library and its tests.

/// Magnitude below which a determinant or denominator is treated as zero.
pub const SINGULARITY_GUARD: f64 = 1e-14;

/// Agreement required between algebraically identical routes.
pub const IDENTITY_TOL: f64 = 1e-12;

/// Largest real part of `(L_mu/a) * ln((2+Delta)/(2-Delta))` for which the
/// finite-barrier formula is used; beyond it the infinite-barrier limit is
/// returned.
pub const BARRIER_EXPONENT_CUTOFF: f64 = 300.0;

/// Below this |Delta| the ratio `Delta * coth(n ln((2+Delta)/(2-Delta)))`
/// is replaced by its limit `1/n`.
pub const SMALL_DELTA: f64 = 1e-9;

/// Default broadening (in units of v_F/a) used for the density of states.
pub const DEFAULT_DOS_BROADENING: f64 = 1e-3;
