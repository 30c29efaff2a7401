//! Closed-form constants of the fractional and Gagliardo–Nirenberg log-Sobolev
//! inequalities, the large-dimension approximant, and optimal scale formulas.

use std::f64::consts::{E, LN_2, PI};

use crate::error::{Error, Result};
use crate::specialfn::{gamma_ratio_log, ln_gamma, PositiveReal};

/// Parameters (n, s, a) of the fractional log-Sobolev inequality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LsiParams {
    n: usize,
    s: f64,
    a: f64,
}

impl LsiParams {
    pub fn new(n: usize, s: f64, a: f64) -> Result<Self> {
        check_order(n, s)?;
        check_scale(a)?;
        Ok(LsiParams { n, s, a })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn a(&self) -> f64 {
        self.a
    }
}

/// Parameters (n, p, q) of the L^q / W^{1,p} inequality with derived exponents.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GnsParams {
    pub n: usize,
    pub p: f64,
    pub q: f64,
    /// r = p(q−1)/(p−1)
    pub r: f64,
    pub theta: f64,
    /// δ = np − q(n−p)
    pub delta: f64,
}

impl GnsParams {
    /// Upper end of the admissible q-range, p(n−1)/(n−p).
    pub fn q_max(n: usize, p: f64) -> f64 {
        let n = n as f64;
        p * (n - 1.0) / (n - p)
    }

    /// True when q sits at the endpoint where the inequality reduces to Sobolev.
    pub fn is_sobolev_corner(&self) -> bool {
        self.theta == 1.0
    }

    /// Jensen exponent ε with qε + q = r.
    pub fn epsilon(&self) -> f64 {
        (self.q - self.p) / (self.q * (self.p - 1.0))
    }

    /// The factor p(q−1)/(q−p) = (ε+1)/ε multiplying both sides of the log inequality.
    pub fn log_factor(&self) -> f64 {
        self.p * (self.q - 1.0) / (self.q - self.p)
    }
}

fn log_ratio(num: f64, den: f64) -> Result<f64> {
    Ok(gamma_ratio_log(
        PositiveReal::new(num)?,
        PositiveReal::new(den)?,
    ))
}

fn check_order(n: usize, s: f64) -> Result<()> {
    if n < 1 {
        return Err(Error::domain("dimension n must be at least 1"));
    }
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::domain(format!(
            "order s must satisfy s > 0, got s={s}"
        )));
    }
    if s >= n as f64 / 2.0 {
        return Err(Error::domain(format!(
            "order s must satisfy s < n/2, got s={s} with n={n}"
        )));
    }
    Ok(())
}

fn check_scale(a: f64) -> Result<()> {
    if a.is_finite() && a > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "scale a must be positive, got a={a}"
        )))
    }
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("{name} must be positive, got {v}")))
    }
}

/// ln C(n, s).
pub fn sobolev_constant_log(n: usize, s: f64) -> Result<f64> {
    check_order(n, s)?;
    let nf = n as f64;
    let ratio = log_ratio((nf - 2.0 * s) / 2.0, (nf + 2.0 * s) / 2.0)?;
    let power = (2.0 * s / nf) * log_ratio(nf, nf / 2.0)?;
    Ok(ratio - 2.0 * s * LN_2 - s * PI.ln() + power)
}

/// Sharp fractional Sobolev constant
/// C(n,s) = Γ((n−2s)/2) / (2^{2s} π^s Γ((n+2s)/2)) · (Γ(n)/Γ(n/2))^{2s/n}.
pub fn sobolev_constant(n: usize, s: f64) -> Result<f64> {
    sobolev_constant_log(n, s).map(f64::exp)
}

/// Right-hand factor (n e a² / 2s)·C(n,s) of the fractional log-Sobolev inequality.
pub fn lsi_rhs_constant(params: &LsiParams) -> Result<f64> {
    let (n, s, a) = (params.n as f64, params.s, params.a);
    let log = (n * E / (2.0 * s)).ln() + 2.0 * a.ln() + sobolev_constant_log(params.n, s)?;
    Ok(log.exp())
}

/// a²/π, the Lieb–Loss constant.
pub fn lieb_loss_rhs_constant(a: f64) -> Result<f64> {
    check_scale(a)?;
    Ok(a * a / PI)
}

/// Large-n approximant 2^{s−s/n} π^{−s} e^{−s} n^{−s} of C(n,s).
pub fn asymptotic_constant(n: usize, s: f64) -> Result<f64> {
    check_order(n, s)?;
    let nf = n as f64;
    let log = (s - s / nf) * LN_2 - s * PI.ln() - s - s * nf.ln();
    Ok(log.exp())
}

/// C(n,s) divided by its large-n approximant.
pub fn asymptotic_ratio(n: usize, s: f64) -> Result<f64> {
    check_order(n, s)?;
    let nf = n as f64;
    let approx_log = (s - s / nf) * LN_2 - s * PI.ln() - s - s * nf.ln();
    Ok((sobolev_constant_log(n, s)? - approx_log).exp())
}

/// Large-n form of the whole right-hand factor per unit a²:
/// 2^{s−1} e^{1−s} n^{1−s} / (s π^s). Equals 1/π at s = 1.
pub fn asymptotic_lsi_factor(n: usize, s: f64) -> Result<f64> {
    check_order(n, s)?;
    let nf = n as f64;
    let log = (s - 1.0) * LN_2 + (1.0 - s) + (1.0 - s) * nf.ln() - s.ln() - s * PI.ln();
    Ok(log.exp())
}

/// Validates (n, p, q) and derives r, θ and δ.
pub fn gns_exponents(n: usize, p: f64, q: f64) -> Result<GnsParams> {
    let nf = n as f64;
    if !(p.is_finite() && p > 1.0 && p < nf) {
        return Err(Error::domain(format!(
            "p-range: need 1 < p < n, got p={p} with n={n}"
        )));
    }
    let q_max = GnsParams::q_max(n, p);
    if !(q.is_finite() && q > p && q <= q_max) {
        return Err(Error::domain(format!(
            "q-range: need p < q <= p(n-1)/(n-p) = {q_max}, got q={q}"
        )));
    }
    let delta = nf * p - q * (nf - p);
    if delta <= 0.0 {
        return Err(Error::domain(format!(
            "delta = np - q(n-p) must be positive, got {delta}"
        )));
    }
    let r = p * (q - 1.0) / (p - 1.0);
    let theta = if q == q_max {
        1.0
    } else {
        ((q - p) * nf / ((q - 1.0) * (nf * p - (nf - p) * q))).min(1.0)
    };
    Ok(GnsParams {
        n,
        p,
        q,
        r,
        theta,
        delta,
    })
}

/// ln 𝔖(n,p,q).
pub fn gns_constant_log(n: usize, p: f64, q: f64) -> Result<f64> {
    let g = gns_exponents(n, p, q)?;
    let nf = n as f64;
    let theta = g.theta;
    let gamma_part = ln_gamma(q * (p - 1.0) / (q - p))? + ln_gamma(nf / 2.0 + 1.0)?
        - ln_gamma((p - 1.0) / p * g.delta / (q - p))?
        - ln_gamma(nf * (p - 1.0) / p + 1.0)?;
    Ok(theta * ((q - p) / (p * PI.sqrt())).ln()
        + (theta / p) * (p * q / (nf * (q - p))).ln()
        + (g.delta / (p * q)).ln() / g.r
        + (theta / nf) * gamma_part)
}

/// Optimal constant 𝔖(n,p,q) of the Gagliardo–Nirenberg–Sobolev inequality
/// ‖f‖_r ≤ 𝔖 ‖∇f‖_p^θ ‖f‖_q^{1−θ}.
pub fn gns_constant(n: usize, p: f64, q: f64) -> Result<f64> {
    gns_constant_log(n, p, q).map(f64::exp)
}

/// Minimizer over a of the fractional log-Sobolev margin for fixed ‖f‖₂² and
/// ‖(−Δ)^{s/2} f‖₂²: a* = √(l2sq / (e C(n,s) fracsq)).
pub fn optimal_a_theorem1(l2sq: f64, fracsq: f64, n: usize, s: f64) -> Result<f64> {
    check_positive("l2sq", l2sq)?;
    check_positive("fracsq", fracsq)?;
    let c = sobolev_constant_log(n, s)?;
    Ok((0.5 * (l2sq.ln() - 1.0 - c - fracsq.ln())).exp())
}

/// Minimizer over a of the Lieb–Loss margin: a* = √(nπ l2sq / (2 gradsq)).
pub fn optimal_a_lieb_loss(l2sq: f64, gradsq: f64, n: usize) -> Result<f64> {
    check_positive("l2sq", l2sq)?;
    check_positive("gradsq", gradsq)?;
    if n < 1 {
        return Err(Error::domain("dimension n must be at least 1"));
    }
    Ok((n as f64 * PI * l2sq / (2.0 * gradsq)).sqrt())
}
