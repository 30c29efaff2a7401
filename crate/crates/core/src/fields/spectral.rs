use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use super::GridField;
use crate::error::{Error, Result};

/// In-place unnormalized d-dimensional DFT over a row-major cube of side `n`.
fn fft_nd(data: &mut [Complex64], dim: usize, n: usize, inverse: bool) {
    let mut planner = FftPlanner::<f64>::new();
    let plan: std::sync::Arc<dyn Fft<f64>> = if inverse {
        planner.plan_fft_inverse(n)
    } else {
        planner.plan_fft_forward(n)
    };
    let total = data.len();
    let mut lane = vec![Complex64::new(0.0, 0.0); n];
    let mut scratch = vec![Complex64::new(0.0, 0.0); plan.get_inplace_scratch_len()];
    for axis in 0..dim {
        let stride = n.pow((dim - 1 - axis) as u32);
        if stride == 1 {
            for chunk in data.chunks_exact_mut(n) {
                plan.process_with_scratch(chunk, &mut scratch);
            }
            continue;
        }
        let block = stride * n;
        for base in (0..total).step_by(block) {
            for offset in 0..stride {
                let start = base + offset;
                for (j, v) in lane.iter_mut().enumerate() {
                    *v = data[start + j * stride];
                }
                plan.process_with_scratch(&mut lane, &mut scratch);
                for (j, v) in lane.iter().enumerate() {
                    data[start + j * stride] = *v;
                }
            }
        }
    }
}

/// Parity of the multi-index; the grid starts at −L so each frequency picks
/// up the phase e^{iπm} = (−1)^m.
fn index_parity(flat: usize, dim: usize, n: usize) -> bool {
    let mut rem = flat;
    let mut odd = false;
    for _ in 0..dim {
        odd ^= (rem % n) % 2 == 1;
        rem /= n;
    }
    odd
}

pub(super) fn forward(field: &GridField) -> Vec<Complex64> {
    let (dim, n) = (field.dim(), field.points_per_axis());
    let mut data = field.samples().to_vec();
    fft_nd(&mut data, dim, n, false);
    let h = field.cell_volume();
    for (k, z) in data.iter_mut().enumerate() {
        *z *= if index_parity(k, dim, n) { -h } else { h };
    }
    data
}

pub(super) fn inverse(
    dim: usize,
    half_width: f64,
    n: usize,
    mut data: Vec<Complex64>,
) -> Vec<Complex64> {
    let scale = 1.0 / (2.0 * half_width).powi(dim as i32);
    for (k, z) in data.iter_mut().enumerate() {
        *z *= if index_parity(k, dim, n) {
            -scale
        } else {
            scale
        };
    }
    fft_nd(&mut data, dim, n, true);
    data
}

/// Signed integer frequency index in {−N/2, …, N/2−1} for FFT position `k`.
fn signed_index(k: usize, n: usize) -> i64 {
    if k < n / 2 {
        k as i64
    } else {
        k as i64 - n as i64
    }
}

/// The symbol (2π|ξ|)^s sampled on a grid's frequency lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct FreqMultiplier {
    order: f64,
    dim: usize,
    half_width: f64,
    points_per_axis: usize,
    values: Vec<f64>,
}

impl FreqMultiplier {
    pub fn new(dim: usize, half_width: f64, points_per_axis: usize, order: f64) -> Result<Self> {
        if !(order.is_finite() && order > 0.0) {
            return Err(Error::Domain(format!(
                "multiplier order must be positive, got s={order}"
            )));
        }
        let n = points_per_axis;
        let total = n.pow(dim as u32);
        // |ξ|² is formed from integer indices so equal radii give identical values
        let base = 2.0 * PI / (2.0 * half_width);
        let values = (0..total)
            .map(|flat| {
                let mut rem = flat;
                let mut m2: i64 = 0;
                for _ in 0..dim {
                    let m = signed_index(rem % n, n);
                    m2 += m * m;
                    rem /= n;
                }
                if m2 == 0 {
                    0.0
                } else {
                    (base * (m2 as f64).sqrt()).powf(order)
                }
            })
            .collect();
        Ok(FreqMultiplier {
            order,
            dim,
            half_width,
            points_per_axis,
            values,
        })
    }

    pub fn for_field(field: &GridField, order: f64) -> Result<Self> {
        Self::new(
            field.dim(),
            field.half_width(),
            field.points_per_axis(),
            order,
        )
    }

    pub fn order(&self) -> f64 {
        self.order
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub(super) fn matches(&self, dim: usize, half_width: f64, points_per_axis: usize) -> bool {
        self.dim == dim && self.half_width == half_width && self.points_per_axis == points_per_axis
    }

    /// Pointwise product; the order of the result is the sum of orders.
    pub fn compose(&self, other: &FreqMultiplier) -> Result<FreqMultiplier> {
        if !other.matches(self.dim, self.half_width, self.points_per_axis) {
            return Err(Error::Domain(
                "cannot compose multipliers on different lattices".into(),
            ));
        }
        Ok(FreqMultiplier {
            order: self.order + other.order,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
            ..self.clone()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_frequency_vanishes_for_every_order() {
        for s in [1e-3, 0.5, 1.0, 2.7] {
            let m = FreqMultiplier::new(2, 4.0, 16, s).unwrap();
            assert_eq!(m.values()[0], 0.0);
        }
        assert!(FreqMultiplier::new(1, 4.0, 16, 0.0).is_err());
    }

    #[test]
    fn radially_symmetric() {
        let n = 16;
        let m = FreqMultiplier::new(2, 3.0, n, 0.73).unwrap();
        // (1, 2), (2, 1), (−1, −2), (−2, 1) share |ξ|
        let at = |a: usize, b: usize| m.values()[a * n + b];
        let v = at(1, 2);
        for other in [at(2, 1), at(n - 1, n - 2), at(n - 2, 1)] {
            assert_eq!(v, other);
        }
    }

    #[test]
    fn nyquist_is_negative_half() {
        assert_eq!(signed_index(8, 16), -8);
        assert_eq!(signed_index(7, 16), 7);
    }

    #[test]
    fn compose_adds_orders() {
        let a = FreqMultiplier::new(3, 2.0, 16, 0.4).unwrap();
        let b = FreqMultiplier::new(3, 2.0, 16, 1.1).unwrap();
        let ab = a.compose(&b).unwrap();
        let direct = FreqMultiplier::new(3, 2.0, 16, 1.5).unwrap();
        assert_eq!(ab.order(), 1.5);
        for (x, y) in ab.values().iter().zip(direct.values()) {
            assert!((x - y).abs() <= 1e-12 * y.abs());
        }
        let other = FreqMultiplier::new(3, 2.5, 16, 1.0).unwrap();
        assert!(a.compose(&other).is_err());
    }
}
