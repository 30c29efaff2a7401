//! Discretized functions and the functionals the inequalities are built from.
//!
//! Two representations are provided:
//!
//! * [`GridField`]: complex samples on a periodic box `[−L, L)^d`, `d ≤ 3`,
//!   with the fractional Laplacian applied spectrally.
//! * [`RadialProfile`]: a radial function of `|x|` in any ambient dimension,
//!   integrated with a double-exponential rule whose `r^{n−1}` factor lives
//!   in log space.
//!
//! Both implement [`Field`], which is what the margin evaluators consume.

mod grid;
mod io;
mod radial;
mod spectral;

pub use grid::{build_grid, GridField, BOUNDARY_SHELL, TRUNCATION_THRESHOLD};
pub use radial::{build_radial, RadialProfile, DEFAULT_NODE_COUNT};
pub use spectral::FreqMultiplier;

use crate::error::Result;

/// How a field was discretized; carried into every margin report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Discretization {
    Grid {
        dim: usize,
        points_per_axis: usize,
        half_width: f64,
        /// Fraction of L² mass in the outer boundary shell.
        shell_fraction: f64,
    },
    Radial {
        ambient_dim: usize,
        nodes: usize,
        /// Set for power-law tails, which get the looser tolerance.
        slow_decay: bool,
    },
    /// Closed-form scalar check, no field involved.
    Analytic,
}

/// Relative tolerance for well-resolved, rapidly decaying fields.
pub const SPECTRAL_TOLERANCE: f64 = 1e-6;
/// Relative tolerance for extremizers with power-law tails.
pub const SLOW_DECAY_TOLERANCE: f64 = 1e-4;

impl Discretization {
    pub fn resolution(&self) -> usize {
        match *self {
            Discretization::Grid {
                points_per_axis, ..
            } => points_per_axis,
            Discretization::Radial { nodes, .. } => nodes,
            Discretization::Analytic => 0,
        }
    }

    pub fn truncated(&self) -> bool {
        match *self {
            Discretization::Grid { shell_fraction, .. } => shell_fraction > TRUNCATION_THRESHOLD,
            _ => false,
        }
    }

    /// Relative discretization tolerance, as a multiple of |rhs|.
    pub fn tolerance(&self) -> f64 {
        match *self {
            Discretization::Grid { .. } if self.truncated() => SLOW_DECAY_TOLERANCE,
            Discretization::Radial {
                slow_decay: true, ..
            } => SLOW_DECAY_TOLERANCE,
            _ => SPECTRAL_TOLERANCE,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Discretization::Grid { .. } => "grid",
            Discretization::Radial { .. } => "radial",
            Discretization::Analytic => "analytic",
        }
    }
}

/// Common functional calculus over grid and radial representations.
pub trait Field {
    /// Dimension of the underlying Euclidean space.
    fn dimension(&self) -> usize;

    /// ∫|f|^p, the p-th power of the L^p norm.
    fn lp_pow(&self, p: f64) -> Result<f64>;

    /// ‖f‖_{L^p}.
    fn lp_norm(&self, p: f64) -> Result<f64> {
        Ok(self.lp_pow(p)?.powf(1.0 / p))
    }

    /// ∫|f|^q log(|f|^q / ‖f‖_q^q) with 0·log 0 = 0.
    fn entropy_q(&self, q: f64) -> Result<f64>;

    /// ∫|f|² log(|f|² / ‖f‖₂²).
    fn entropy(&self) -> Result<f64> {
        self.entropy_q(2.0)
    }

    /// ‖∇f‖₂².
    fn gradient_norm_sq(&self) -> Result<f64>;

    fn discretization(&self) -> Discretization;
}

/// Either representation, for code that picks one at runtime.
#[derive(Debug, Clone)]
pub enum SampledField {
    Grid(GridField),
    Radial(RadialProfile),
}

impl SampledField {
    pub fn as_grid(&self) -> Option<&GridField> {
        match self {
            SampledField::Grid(g) => Some(g),
            SampledField::Radial(_) => None,
        }
    }

    pub fn as_radial(&self) -> Option<&RadialProfile> {
        match self {
            SampledField::Radial(r) => Some(r),
            SampledField::Grid(_) => None,
        }
    }

    pub fn scaled(&self, factor: f64) -> SampledField {
        match self {
            SampledField::Grid(g) => SampledField::Grid(g.scaled(factor)),
            SampledField::Radial(r) => SampledField::Radial(r.scaled(factor)),
        }
    }
}

impl From<GridField> for SampledField {
    fn from(g: GridField) -> Self {
        SampledField::Grid(g)
    }
}

impl From<RadialProfile> for SampledField {
    fn from(r: RadialProfile) -> Self {
        SampledField::Radial(r)
    }
}

macro_rules! delegate {
    ($self:ident, $f:ident => $e:expr) => {
        match $self {
            SampledField::Grid($f) => $e,
            SampledField::Radial($f) => $e,
        }
    };
}

impl Field for SampledField {
    fn dimension(&self) -> usize {
        delegate!(self, f => f.dimension())
    }

    fn lp_pow(&self, p: f64) -> Result<f64> {
        delegate!(self, f => f.lp_pow(p))
    }

    fn lp_norm(&self, p: f64) -> Result<f64> {
        delegate!(self, f => f.lp_norm(p))
    }

    fn entropy_q(&self, q: f64) -> Result<f64> {
        delegate!(self, f => f.entropy_q(q))
    }

    fn gradient_norm_sq(&self) -> Result<f64> {
        delegate!(self, f => f.gradient_norm_sq())
    }

    fn discretization(&self) -> Discretization {
        delegate!(self, f => f.discretization())
    }
}

fn check_exponent(p: f64) -> Result<()> {
    if p.is_finite() && p >= 1.0 {
        Ok(())
    } else {
        Err(crate::Error::Domain(format!(
            "norm exponent must be >= 1, got p={p}"
        )))
    }
}

fn check_entropy_exponent(q: f64) -> Result<()> {
    if q.is_finite() && q > 1.0 {
        Ok(())
    } else {
        Err(crate::Error::Domain(format!(
            "entropy exponent must be > 1, got q={q}"
        )))
    }
}
