//! Extremizer families and seeded random test fields.
//!
//! All families are returned unnormalized; the margin reports are compared
//! through scale-invariant relative margins.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constants::gns_exponents;
use crate::error::{Error, Result};
use crate::fields::{build_grid, build_radial, GridField, RadialProfile, SampledField};

/// Where a family gets sampled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Representation {
    Grid {
        half_width: f64,
        points_per_axis: usize,
    },
    Radial {
        nodes: usize,
    },
}

/// Closed-form moments of exp(−π|x|²/(2a²)) in ℝⁿ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianOracle {
    pub n: usize,
    pub a: f64,
    /// ‖f‖₂² = aⁿ
    pub l2sq: f64,
    /// ‖∇f‖₂² = nπa^{n−2}/2
    pub gradsq: f64,
    /// ∫|f|² log(|f|²/‖f‖₂²) = −aⁿ(n/2 + n log a)
    pub ent: f64,
}

impl GaussianOracle {
    pub fn new(n: usize, a: f64) -> Self {
        let nf = n as f64;
        let an = a.powf(nf);
        GaussianOracle {
            n,
            a,
            l2sq: an,
            gradsq: nf * PI * a.powf(nf - 2.0) / 2.0,
            ent: -an * (nf / 2.0 + nf * a.ln()),
        }
    }

    /// ∫|f|^p = (2a²/p)^{n/2}.
    pub fn lp_pow(&self, p: f64) -> f64 {
        (2.0 * self.a * self.a / p).powf(self.n as f64 / 2.0)
    }

    /// Both sides of the Lieb–Loss inequality evaluated at scale `scale`.
    pub fn lieb_loss_sides(&self, scale: f64) -> (f64, f64) {
        let lhs = self.ent + self.n as f64 * (1.0 + scale.ln()) * self.l2sq;
        let rhs = scale * scale / PI * self.gradsq;
        (lhs, rhs)
    }
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be positive, got {v}")))
    }
}

/// exp(−π|x|²/(2a²)) and its analytic oracle.
pub fn gaussian(n: usize, a: f64, repr: Representation) -> Result<(SampledField, GaussianOracle)> {
    check_positive("a", a)?;
    let k = PI / (2.0 * a * a);
    let field = match repr {
        Representation::Grid {
            half_width,
            points_per_axis,
        } => build_grid(
            move |x: &[f64]| (-k * x.iter().map(|v| v * v).sum::<f64>()).exp(),
            n,
            half_width,
            points_per_axis,
        )?
        .into(),
        Representation::Radial { nodes } => {
            let df = move |r: f64| -2.0 * k * r * (-k * r * r).exp();
            build_radial(move |r| (-k * r * r).exp(), Some(&df), n, nodes)?.into()
        }
    };
    Ok((field, GaussianOracle::new(n, a)))
}

/// (c² + |x|²)^{−(n−2s)/2}, centered at the origin.
pub fn aubin_talenti(n: usize, s: f64, c: f64, repr: Representation) -> Result<SampledField> {
    aubin_talenti_centered(n, s, c, &[], repr)
}

/// (c² + |x − center|²)^{−(n−2s)/2}. The center is only honored on grids;
/// missing coordinates are zero.
pub fn aubin_talenti_centered(
    n: usize,
    s: f64,
    c: f64,
    center: &[f64],
    repr: Representation,
) -> Result<SampledField> {
    if !(s > 0.0 && s < n as f64 / 2.0) {
        return Err(Error::Domain(format!(
            "order s must satisfy 0 < s < n/2, got s={s} with n={n}"
        )));
    }
    if !(c.is_finite() && c != 0.0) {
        return Err(Error::Domain("scale c must be nonzero".into()));
    }
    let expo = (n as f64 - 2.0 * s) / 2.0;
    let c2 = c * c;
    match repr {
        Representation::Grid {
            half_width,
            points_per_axis,
        } => {
            let center: Vec<f64> = (0..n)
                .map(|i| center.get(i).copied().unwrap_or(0.0))
                .collect();
            let g = build_grid(
                move |x: &[f64]| {
                    let r2: f64 = x.iter().zip(&center).map(|(a, b)| (a - b) * (a - b)).sum();
                    (c2 + r2).powf(-expo)
                },
                n,
                half_width,
                points_per_axis,
            )?;
            Ok(g.into())
        }
        Representation::Radial { nodes } => {
            let df = move |r: f64| -2.0 * expo * r * (c2 + r * r).powf(-expo - 1.0);
            let p = build_radial(move |r| (c2 + r * r).powf(-expo), Some(&df), n, nodes)?;
            Ok(p.with_slow_decay(true).into())
        }
    }
}

/// (1 + c·r^{p/(p−1)})^{−(p−1)/(q−p)}, the equality case of the
/// Gagliardo–Nirenberg–Sobolev inequality.
pub fn gns_extremal(n: usize, p: f64, q: f64, c: f64, nodes: usize) -> Result<RadialProfile> {
    let g = gns_exponents(n, p, q)?;
    if !(c.is_finite() && c > 0.0) {
        return Err(Error::Domain(format!(
            "scale c must be positive, got c={c}"
        )));
    }
    let beta = p / (p - 1.0);
    let expo = (p - 1.0) / (q - p);
    // f ~ r^{−decay} at infinity, f′ ~ r^{−decay−1}
    let decay = p / (q - p);
    let nf = n as f64;
    for (name, power, tail) in [
        ("L^r norm", g.r, decay),
        ("L^q norm", q, decay),
        ("gradient L^p norm", p, decay + 1.0),
    ] {
        if power * tail <= nf {
            return Err(Error::Integrability(format!(
                "{name} diverges: tail exponent {} <= n = {n}",
                power * tail
            )));
        }
    }
    let df = move |r: f64| {
        if r == 0.0 {
            return 0.0;
        }
        -expo * c * beta * r.powf(beta - 1.0) * (1.0 + c * r.powf(beta)).powf(-expo - 1.0)
    };
    let profile = build_radial(
        move |r| (1.0 + c * r.powf(beta)).powf(-expo),
        Some(&df),
        n,
        nodes,
    )?;
    Ok(profile.with_slow_decay(true))
}

fn check_corpus(d: usize, count: usize) -> Result<()> {
    if !(1..=3).contains(&d) {
        return Err(Error::Domain(format!(
            "grid dimension must be 1, 2 or 3, got d={d}"
        )));
    }
    if count < 1 {
        return Err(Error::Domain("mixture needs at least one component".into()));
    }
    Ok(())
}

/// Seeded mixture of `count` Gaussians exp(−|x−c|²/(2w²)) on `[−L, L)^d`.
///
/// Centers lie in `[−L/4, L/4]^d`, widths in `[L/32, L/8]`, amplitudes in the
/// unit disk. The stream is ChaCha8 seeded through `seed_from_u64`, which is
/// platform independent.
pub fn random_mixture(
    seed: u64,
    d: usize,
    count: usize,
    half_width: f64,
    points_per_axis: usize,
) -> Result<GridField> {
    check_corpus(d, count)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = half_width / 4.0;
    let components: Vec<(Vec<f64>, f64, Complex64)> = (0..count)
        .map(|_| {
            let center: Vec<f64> = (0..d).map(|_| rng.random_range(-q..=q)).collect();
            let width = rng.random_range(half_width / 32.0..=half_width / 8.0);
            let radius = rng.random::<f64>().sqrt();
            let phase = rng.random_range(0.0..2.0 * PI);
            (center, width, Complex64::from_polar(radius, phase))
        })
        .collect();
    build_grid(
        move |x: &[f64]| {
            components
                .iter()
                .map(|(c, w, amp)| {
                    let r2: f64 = x.iter().zip(c).map(|(a, b)| (a - b) * (a - b)).sum();
                    amp * (-r2 / (2.0 * w * w)).exp()
                })
                .sum::<Complex64>()
        },
        d,
        half_width,
        points_per_axis,
    )
}

/// Seeded smooth radial profile Σ c_k exp(−r²/(2w_k²)) in ℝⁿ with c₀ = 1,
/// the remaining c_k in [−1/2, 1/2] and widths in [0.3, 2].
pub fn random_radial(seed: u64, n: usize, count: usize, nodes: usize) -> Result<RadialProfile> {
    if count < 1 {
        return Err(Error::Domain("mixture needs at least one component".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let terms: Vec<(f64, f64)> = (0..count)
        .map(|k| {
            let amp = if k == 0 {
                1.0
            } else {
                rng.random_range(-0.5..=0.5)
            };
            let width: f64 = rng.random_range(0.3..=2.0);
            (amp, 1.0 / (2.0 * width * width))
        })
        .collect();
    let value_terms = terms.clone();
    let df = move |r: f64| {
        terms
            .iter()
            .map(|(c, k)| -2.0 * k * r * c * (-k * r * r).exp())
            .sum::<f64>()
    };
    build_radial(
        move |r| {
            value_terms
                .iter()
                .map(|(c, k)| c * (-k * r * r).exp())
                .sum()
        },
        Some(&df),
        n,
        nodes,
    )
}
