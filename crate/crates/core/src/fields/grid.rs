use std::sync::OnceLock;

use num_complex::Complex64;

use super::spectral::{self, FreqMultiplier};
use super::{check_entropy_exponent, check_exponent, Discretization, Field};
use crate::error::{Error, Result};

/// Outer fraction of each half-axis counted as the boundary shell.
pub const BOUNDARY_SHELL: f64 = 1.0 / 8.0;
/// Admissible fraction of L² mass inside the boundary shell.
pub const TRUNCATION_THRESHOLD: f64 = 1e-10;

/// A function sampled on the periodic box `[−L, L)^d` at `N` points per axis,
/// stored row-major (last axis fastest).
#[derive(Debug, Clone)]
pub struct GridField {
    dim: usize,
    half_width: f64,
    points_per_axis: usize,
    samples: Vec<Complex64>,
    shell_fraction: f64,
    power_spectrum: OnceLock<Vec<f64>>,
}

fn check_layout(dim: usize, half_width: f64, n: usize) -> Result<()> {
    if !(1..=3).contains(&dim) {
        return Err(Error::Domain(format!(
            "grid dimension must be 1, 2 or 3, got d={dim}"
        )));
    }
    if !(half_width.is_finite() && half_width > 0.0) {
        return Err(Error::Domain(format!(
            "half width must be positive, got L={half_width}"
        )));
    }
    if n < 16 || !n.is_power_of_two() {
        return Err(Error::Domain(format!(
            "points per axis must be a power of two >= 16, got N={n}"
        )));
    }
    Ok(())
}

/// Samples `f` at `x = −L + h·(i₁, …, i_d)` with `h = 2L/N`.
pub fn build_grid<F, V>(
    f: F,
    dim: usize,
    half_width: f64,
    points_per_axis: usize,
) -> Result<GridField>
where
    F: Fn(&[f64]) -> V,
    V: Into<Complex64>,
{
    check_layout(dim, half_width, points_per_axis)?;
    let total = points_per_axis.pow(dim as u32);
    let h = 2.0 * half_width / points_per_axis as f64;
    let mut samples = Vec::with_capacity(total);
    let mut x = vec![0.0; dim];
    for flat in 0..total {
        let mut rem = flat;
        for axis in (0..dim).rev() {
            x[axis] = -half_width + h * (rem % points_per_axis) as f64;
            rem /= points_per_axis;
        }
        samples.push(f(&x).into());
    }
    GridField::from_samples(dim, half_width, points_per_axis, samples)
}

impl GridField {
    pub fn from_samples(
        dim: usize,
        half_width: f64,
        points_per_axis: usize,
        samples: Vec<Complex64>,
    ) -> Result<Self> {
        check_layout(dim, half_width, points_per_axis)?;
        let total = points_per_axis.pow(dim as u32);
        if samples.len() != total {
            return Err(Error::Domain(format!(
                "expected {total} samples for N={points_per_axis}, d={dim}; got {}",
                samples.len()
            )));
        }
        if let Some(i) = samples
            .iter()
            .position(|z| !(z.re.is_finite() && z.im.is_finite()))
        {
            return Err(Error::NonFinite(format!("grid index {i}")));
        }
        let mut field = GridField {
            dim,
            half_width,
            points_per_axis,
            samples,
            shell_fraction: 0.0,
            power_spectrum: OnceLock::new(),
        };
        field.shell_fraction = field.compute_shell_fraction();
        Ok(field)
    }

    fn compute_shell_fraction(&self) -> f64 {
        let n = self.points_per_axis;
        let h = self.spacing();
        let edge = self.half_width * (1.0 - BOUNDARY_SHELL);
        let in_shell: Vec<bool> = (0..n)
            .map(|i| (-self.half_width + h * i as f64).abs() >= edge)
            .collect();
        let mut total = 0.0;
        let mut shell = 0.0;
        for (flat, z) in self.samples.iter().enumerate() {
            let m = z.norm_sqr();
            total += m;
            let mut rem = flat;
            let mut outer = false;
            for _ in 0..self.dim {
                outer |= in_shell[rem % n];
                rem /= n;
            }
            if outer {
                shell += m;
            }
        }
        if total > 0.0 {
            shell / total
        } else {
            0.0
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn points_per_axis(&self) -> usize {
        self.points_per_axis
    }

    /// h = 2L/N
    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / self.points_per_axis as f64
    }

    pub fn cell_volume(&self) -> f64 {
        self.spacing().powi(self.dim as i32)
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn shell_fraction(&self) -> f64 {
        self.shell_fraction
    }

    /// Boundary-shell mass exceeds [`TRUNCATION_THRESHOLD`].
    pub fn is_truncated(&self) -> bool {
        self.shell_fraction > TRUNCATION_THRESHOLD
    }

    pub fn scaled(&self, factor: impl Into<Complex64>) -> GridField {
        let factor = factor.into();
        GridField {
            samples: self.samples.iter().map(|z| z * factor).collect(),
            power_spectrum: OnceLock::new(),
            ..self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.samples.iter().all(|z| z.re == 0.0 && z.im == 0.0)
    }

    /// Continuous Fourier transform f̂(ξ_k) = ∫e^{−2πixξ}f(x)dx on the lattice
    /// ξ_k ∈ (1/2L)·{−N/2, …, N/2−1}^d, in FFT (wrap-around) order.
    pub fn spectrum(&self) -> Vec<Complex64> {
        spectral::forward(self)
    }

    /// Rebuilds a field from a spectrum laid out as in [`GridField::spectrum`].
    pub fn from_spectrum(
        dim: usize,
        half_width: f64,
        points_per_axis: usize,
        spectrum: Vec<Complex64>,
    ) -> Result<GridField> {
        check_layout(dim, half_width, points_per_axis)?;
        let samples = spectral::inverse(dim, half_width, points_per_axis, spectrum);
        GridField::from_samples(dim, half_width, points_per_axis, samples)
    }

    pub(crate) fn power_spectrum(&self) -> &[f64] {
        self.power_spectrum
            .get_or_init(|| self.spectrum().iter().map(|z| z.norm_sqr()).collect())
    }

    /// (1/(2L)^d) Σ|f̂_k|², the spectral side of discrete Plancherel.
    pub fn plancherel_norm_sq(&self) -> f64 {
        let scale = (2.0 * self.half_width).powi(self.dim as i32);
        self.power_spectrum().iter().sum::<f64>() / scale
    }

    /// ‖(−Δ)^{s/2} f‖₂² ≈ ∫(2π|ξ|)^{2s}|f̂(ξ)|² dξ.
    pub fn frac_half_norm_sq(&self, s: f64) -> Result<f64> {
        let symbol = FreqMultiplier::new(self.dim, self.half_width, self.points_per_axis, 2.0 * s)?;
        let scale = (2.0 * self.half_width).powi(self.dim as i32);
        let sum: f64 = symbol
            .values()
            .iter()
            .zip(self.power_spectrum())
            .map(|(m, p)| m * p)
            .sum();
        Ok(sum / scale)
    }

    /// Applies a Fourier multiplier built on this field's lattice.
    pub fn apply_multiplier(&self, multiplier: &FreqMultiplier) -> Result<GridField> {
        if !multiplier.matches(self.dim, self.half_width, self.points_per_axis) {
            return Err(Error::Domain(
                "multiplier lattice does not match the field grid".into(),
            ));
        }
        let spectrum = self
            .spectrum()
            .into_iter()
            .zip(multiplier.values())
            .map(|(z, m)| z * m)
            .collect();
        GridField::from_spectrum(self.dim, self.half_width, self.points_per_axis, spectrum)
    }

    /// (−Δ)^{s/2} f, i.e. multiplication of f̂ by (2π|ξ|)^s.
    pub fn fractional_laplacian(&self, s: f64) -> Result<GridField> {
        let m = FreqMultiplier::new(self.dim, self.half_width, self.points_per_axis, s)?;
        self.apply_multiplier(&m)
    }

    fn sum_abs_pow(&self, p: f64) -> f64 {
        let h = self.cell_volume();
        if p == 2.0 {
            return h * self.samples.iter().map(|z| z.norm_sqr()).sum::<f64>();
        }
        h * self.samples.iter().map(|z| z.norm().powf(p)).sum::<f64>()
    }
}

impl Field for GridField {
    fn dimension(&self) -> usize {
        self.dim
    }

    fn lp_pow(&self, p: f64) -> Result<f64> {
        check_exponent(p)?;
        Ok(self.sum_abs_pow(p))
    }

    fn entropy_q(&self, q: f64) -> Result<f64> {
        check_entropy_exponent(q)?;
        let mass = self.sum_abs_pow(q);
        if mass <= 0.0 {
            return Err(Error::ZeroField);
        }
        let log_mass = mass.ln();
        let h = self.cell_volume();
        let sum: f64 = self
            .samples
            .iter()
            .map(|z| z.norm())
            .filter(|&m| m > 0.0)
            .map(|m| {
                let lm = q * m.ln();
                lm.exp() * (lm - log_mass)
            })
            .sum();
        Ok(h * sum)
    }

    fn gradient_norm_sq(&self) -> Result<f64> {
        self.frac_half_norm_sq(1.0)
    }

    fn discretization(&self) -> Discretization {
        Discretization::Grid {
            dim: self.dim,
            points_per_axis: self.points_per_axis,
            half_width: self.half_width,
            shell_fraction: self.shell_fraction,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn gauss1(n: usize) -> GridField {
        build_grid(|x: &[f64]| (-PI * x[0] * x[0]).exp(), 1, 8.0, n).unwrap()
    }

    #[test]
    fn zero_function_gives_zero_field() {
        let f = build_grid(|_: &[f64]| 0.0, 2, 4.0, 16).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.lp_norm(3.0).unwrap(), 0.0);
        assert_eq!(f.frac_half_norm_sq(0.7).unwrap(), 0.0);
        assert!(matches!(f.entropy(), Err(Error::ZeroField)));
        assert!(!f.is_truncated());
    }

    #[test]
    fn layout_validation() {
        let one = |_: &[f64]| 1.0;
        assert!(build_grid(one, 4, 8.0, 16).unwrap_err().is_domain());
        assert!(build_grid(one, 1, 8.0, 24).is_err());
        assert!(build_grid(one, 1, 8.0, 8).is_err());
        assert!(build_grid(one, 1, -1.0, 16).is_err());
        let nan = build_grid(|_: &[f64]| f64::NAN, 1, 8.0, 16);
        assert!(matches!(nan, Err(Error::NonFinite(_))));
    }

    #[test]
    fn row_major_sampling() {
        let f = build_grid(|x: &[f64]| x[0] + 100.0 * x[1], 2, 8.0, 16).unwrap();
        // flat index 1 is (i₀=0, i₁=1): x = (−8, −7)
        assert_eq!(f.samples()[1].re, -8.0 - 700.0);
        assert_eq!(f.samples()[16].re, -7.0 - 800.0);
    }

    #[test]
    fn gaussian_norms_and_shell() {
        let f = gauss1(256);
        // tail beyond |x| = 7 of e^{−2πx²} is below erfc(7√(2π)) ~ 1e−135
        assert!(f.shell_fraction() < 1e-100);
        assert!((f.lp_norm(2.0).unwrap() - 2f64.powf(-0.25)).abs() < 1e-14);
        // ∫e^{−πpx²} = p^{−1/2}
        assert!((f.lp_pow(3.0).unwrap() - 3f64.powf(-0.5)).abs() < 1e-14);
        assert!(f.lp_norm(0.5).is_err());
    }

    #[test]
    fn slowly_decaying_field_is_flagged() {
        let f = build_grid(|x: &[f64]| 1.0 / (1.0 + x[0] * x[0]), 1, 8.0, 64).unwrap();
        assert!(f.is_truncated());
        assert!(f.discretization().truncated());
    }

    #[test]
    fn entropy_of_gaussians() {
        // e^{−πx²/(2a²)} in 1-d: Ent = −a(1/2 + ln a)
        for a in [1.0f64, 0.7, 1.6] {
            let f = build_grid(
                |x: &[f64]| (-PI * x[0] * x[0] / (2.0 * a * a)).exp(),
                1,
                8.0,
                256,
            )
            .unwrap();
            let expect = -a * (0.5 + a.ln());
            assert!((f.entropy().unwrap() - expect).abs() < 1e-12, "a={a}");
        }
        // e^{−πx²}, q=4: −1/4 − ½ ln ½
        let f = gauss1(256);
        let expect = -0.25 + 0.5 * 2f64.ln();
        assert!((f.entropy_q(4.0).unwrap() - expect).abs() < 1e-13);
        let finer = gauss1(512).entropy_q(4.0).unwrap();
        assert!((finer - f.entropy_q(4.0).unwrap()).abs() < 1e-8);
    }

    #[test]
    fn entropy_scaling_and_q2_identity() {
        let f = build_grid(
            |x: &[f64]| Complex64::new((-x[0] * x[0]).exp(), 0.3 * (-(x[0] - 1.0).powi(2)).exp()),
            1,
            8.0,
            128,
        )
        .unwrap();
        assert_eq!(f.entropy().unwrap(), f.entropy_q(2.0).unwrap());
        let e = f.entropy().unwrap();
        let e2 = f.scaled(2.0).entropy().unwrap();
        assert!((e2 - 4.0 * e).abs() < 1e-12 * e.abs());
        let eq = f.entropy_q(3.0).unwrap();
        let eq3 = f.scaled(-3.0).entropy_q(3.0).unwrap();
        assert!((eq3 - 27.0 * eq).abs() < 1e-12 * eq.abs());
        assert!(f.entropy_q(1.0).is_err());
    }

    #[test]
    fn gradient_of_gaussian() {
        // ‖∇e^{−πx²}‖² = ∫4π²x²e^{−2πx²} = π·2^{−1/2}
        let f = gauss1(256);
        let g = f.frac_half_norm_sq(1.0).unwrap();
        assert!((g - PI * 2f64.powf(-0.5)).abs() < 1e-12);
        assert!(f.frac_half_norm_sq(0.0).is_err());
    }

    #[test]
    fn plancherel() {
        let f = build_grid(
            |x: &[f64]| {
                Complex64::new(
                    (-x[0] * x[0] - 2.0 * x[1] * x[1]).exp(),
                    x[0] * (-x[1] * x[1] - x[0] * x[0]).exp(),
                )
            },
            2,
            6.0,
            64,
        )
        .unwrap();
        let direct = f.lp_pow(2.0).unwrap();
        assert!((f.plancherel_norm_sq() - direct).abs() < 1e-12 * direct);
    }

    #[test]
    fn spectrum_round_trip() {
        let f = gauss1(64);
        let back = GridField::from_spectrum(1, 8.0, 64, f.spectrum()).unwrap();
        for (a, b) in f.samples().iter().zip(back.samples()) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn spectrum_matches_continuous_transform() {
        // FT of e^{−πx²} is e^{−πξ²}
        let f = gauss1(128);
        let spec = f.spectrum();
        for (k, z) in spec.iter().enumerate().take(20) {
            let xi = k as f64 / 16.0;
            assert!(
                (z - Complex64::new((-PI * xi * xi).exp(), 0.0)).norm() < 1e-13,
                "k={k}"
            );
        }
    }
}
