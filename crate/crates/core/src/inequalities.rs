//! Margin evaluators for the log-Sobolev, Sobolev and Gagliardo–Nirenberg
//! inequalities, and the lemmas used to chain them.
//!
//! Every evaluator returns a [`MarginReport`] with `margin = rhs − lhs`. A
//! report passes when the margin is no worse than its tolerance, which is the
//! discretization's relative tolerance times |rhs|.

use std::f64::consts::E;
use std::fmt;
use std::str::FromStr;

use crate::constants::{
    gns_exponents, lieb_loss_rhs_constant, lsi_rhs_constant, optimal_a_lieb_loss,
    optimal_a_theorem1, sobolev_constant, GnsParams, LsiParams,
};
use crate::error::{Error, Result};
use crate::fields::{Discretization, Field, GridField, RadialProfile};

/// Denominator used for the relative margin when rhs is exactly zero.
pub const RELATIVE_GUARD: f64 = 1e-300;
/// Relative tolerance of closed-form scalar checks.
pub const ANALYTIC_TOLERANCE: f64 = 1e-12;
/// Relative tolerance of the Jensen interpolation step, which holds exactly
/// for any positive quadrature.
pub const INTERPOLATION_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InequalityId {
    LiebLoss,
    Theorem1,
    Sobolev,
    SobolevRadial,
    Gns,
    Theorem2,
    Interpolation,
    LogBound,
}

impl InequalityId {
    pub const ALL: [InequalityId; 8] = [
        InequalityId::LiebLoss,
        InequalityId::Theorem1,
        InequalityId::Sobolev,
        InequalityId::SobolevRadial,
        InequalityId::Gns,
        InequalityId::Theorem2,
        InequalityId::Interpolation,
        InequalityId::LogBound,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            InequalityId::LiebLoss => "lieb-loss",
            InequalityId::Theorem1 => "theorem1",
            InequalityId::Sobolev => "sobolev",
            InequalityId::SobolevRadial => "sobolev-radial",
            InequalityId::Gns => "gns",
            InequalityId::Theorem2 => "theorem2",
            InequalityId::Interpolation => "interpolation",
            InequalityId::LogBound => "logbound",
        }
    }
}

impl fmt::Display for InequalityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InequalityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InequalityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown inequality id '{s}'")))
    }
}

/// One evaluated instance of an inequality.
#[derive(Debug, Clone, PartialEq)]
pub struct MarginReport {
    pub inequality: InequalityId,
    pub params: Vec<(String, f64)>,
    pub lhs: f64,
    pub rhs: f64,
    /// rhs − lhs
    pub margin: f64,
    pub relative_margin: f64,
    pub discretization: Discretization,
    /// Largest tolerated deficit, as an absolute amount.
    pub tolerance: f64,
}

pub const CSV_HEADER: &str =
    "inequality_id,params,lhs,rhs,margin,relative_margin,resolution,truncation_flag";

impl MarginReport {
    pub fn new(
        inequality: InequalityId,
        params: &[(&str, f64)],
        lhs: f64,
        rhs: f64,
        discretization: Discretization,
    ) -> Self {
        let rel_tol = match discretization {
            Discretization::Analytic => ANALYTIC_TOLERANCE,
            d => d.tolerance(),
        };
        let scale = match discretization {
            Discretization::Analytic => rhs.abs().max(1.0),
            _ => rhs.abs(),
        };
        let margin = rhs - lhs;
        let den = if rhs == 0.0 {
            RELATIVE_GUARD
        } else {
            rhs.abs()
        };
        MarginReport {
            inequality,
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            lhs,
            rhs,
            margin,
            relative_margin: margin / den,
            discretization,
            tolerance: rel_tol * scale,
        }
    }

    /// Replaces the tolerance by `relative·|rhs|`.
    pub fn with_relative_tolerance(mut self, relative: f64) -> Self {
        self.tolerance = relative * self.rhs.abs();
        self
    }

    pub fn param(&self, key: &str) -> Option<f64> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
    }

    /// True when margin ≥ −scale·tolerance.
    pub fn passes(&self, scale: f64) -> bool {
        self.margin >= -scale * self.tolerance
    }

    pub fn truncated(&self) -> bool {
        self.discretization.truncated()
    }

    /// One CSV row matching [`CSV_HEADER`]; floats use the shortest
    /// representation that round-trips.
    pub fn to_csv_row(&self) -> String {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v:?}"))
            .collect();
        format!(
            "{},{},{:?},{:?},{:?},{:?},{},{}",
            self.inequality,
            params.join(";"),
            self.lhs,
            self.rhs,
            self.margin,
            self.relative_margin,
            self.discretization.resolution(),
            self.truncated()
        )
    }
}

fn nonzero<F: Field + ?Sized>(field: &F) -> Result<f64> {
    let l2sq = field.lp_pow(2.0)?;
    if l2sq > 0.0 {
        Ok(l2sq)
    } else {
        Err(Error::ZeroField)
    }
}

fn check_scale(a: f64) -> Result<()> {
    if a.is_finite() && a > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "scale a must be positive, got a={a}"
        )))
    }
}

/// The a-independent ingredients of the Lieb–Loss inequality for one field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiebLossTerms {
    pub n: usize,
    pub entropy: f64,
    pub l2sq: f64,
    pub gradsq: f64,
    pub discretization: Discretization,
}

impl LiebLossTerms {
    pub fn of<F: Field + ?Sized>(field: &F) -> Result<Self> {
        let l2sq = nonzero(field)?;
        Ok(LiebLossTerms {
            n: field.dimension(),
            entropy: field.entropy()?,
            l2sq,
            gradsq: field.gradient_norm_sq()?,
            discretization: field.discretization(),
        })
    }

    pub fn report(&self, a: f64) -> Result<MarginReport> {
        let rhs_c = lieb_loss_rhs_constant(a)?;
        let lhs = self.entropy + self.n as f64 * (1.0 + a.ln()) * self.l2sq;
        let rhs = rhs_c * self.gradsq;
        Ok(MarginReport::new(
            InequalityId::LiebLoss,
            &[("n", self.n as f64), ("a", a)],
            lhs,
            rhs,
            self.discretization,
        ))
    }

    pub fn optimal_a(&self) -> Result<f64> {
        optimal_a_lieb_loss(self.l2sq, self.gradsq, self.n)
    }
}

/// Ent(f) + n(1 + log a)‖f‖₂² ≤ (a²/π)‖∇f‖₂².
pub fn lieb_loss_margin<F: Field + ?Sized>(field: &F, a: f64) -> Result<MarginReport> {
    check_scale(a)?;
    LiebLossTerms::of(field)?.report(a)
}

/// The a-independent ingredients of the fractional log-Sobolev inequality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theorem1Terms {
    pub n: usize,
    pub s: f64,
    pub entropy: f64,
    pub l2sq: f64,
    /// ‖(−Δ)^{s/2} f‖₂²
    pub fracsq: f64,
    pub discretization: Discretization,
}

impl Theorem1Terms {
    pub fn of(field: &GridField, s: f64) -> Result<Self> {
        let n = field.dimension();
        LsiParams::new(n, s, 1.0)?;
        let l2sq = nonzero(field)?;
        Ok(Theorem1Terms {
            n,
            s,
            entropy: field.entropy()?,
            l2sq,
            fracsq: field.frac_half_norm_sq(s)?,
            discretization: field.discretization(),
        })
    }

    pub fn report(&self, a: f64) -> Result<MarginReport> {
        let params = LsiParams::new(self.n, self.s, a)?;
        let lhs = self.entropy + self.n as f64 / self.s * (1.0 + a.ln()) * self.l2sq;
        let rhs = lsi_rhs_constant(&params)? * self.fracsq;
        Ok(MarginReport::new(
            InequalityId::Theorem1,
            &[("n", self.n as f64), ("s", self.s), ("a", a)],
            lhs,
            rhs,
            self.discretization,
        ))
    }

    pub fn optimal_a(&self) -> Result<f64> {
        optimal_a_theorem1(self.l2sq, self.fracsq, self.n, self.s)
    }

    /// Intermediate bounds of the proof at scale `a`.
    pub fn chain(&self, field: &GridField, a: f64) -> Result<ProofChain> {
        let params = LsiParams::new(self.n, self.s, a)?;
        let (n, s) = (self.n as f64, self.s);
        let shift = n / s * (1.0 + a.ln()) * self.l2sq;
        let factor = n / (2.0 * s);
        let q = 2.0 * n / (n - 2.0 * s);
        let lq_sq = field.lp_norm(q)?.powi(2);
        let b = E * a * a;
        let interpolation = factor * self.l2sq * (lq_sq / self.l2sq).ln();
        let log_bound = factor * (b * lq_sq - (1.0 + b.ln()) * self.l2sq);
        Ok(ProofChain {
            lhs: self.entropy + shift,
            interpolation: interpolation + shift,
            log_bound: log_bound + shift,
            rhs: lsi_rhs_constant(&params)? * self.fracsq,
        })
    }
}

/// Successive upper bounds for the left-hand side of the fractional
/// log-Sobolev inequality: Jensen, then log x ≤ bx − log b − 1 with b = ea²,
/// then the sharp Sobolev inequality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProofChain {
    pub lhs: f64,
    pub interpolation: f64,
    pub log_bound: f64,
    pub rhs: f64,
}

impl ProofChain {
    /// Each step bounds the previous one within `tol` relative to the final rhs.
    pub fn is_monotone(&self, tol: f64) -> bool {
        let slack = tol * self.rhs.abs();
        self.lhs <= self.interpolation + slack
            && self.interpolation <= self.log_bound + slack
            && self.log_bound <= self.rhs + slack
    }
}

/// Ent(f) + (n/s)(1 + log a)‖f‖₂² ≤ (nea²/2s) C(n,s) ‖(−Δ)^{s/2} f‖₂², with n
/// the grid dimension.
pub fn theorem1_margin(field: &GridField, s: f64, a: f64) -> Result<MarginReport> {
    LsiParams::new(field.dimension(), s, a)?;
    Theorem1Terms::of(field, s)?.report(a)
}

/// The proof chain of the fractional inequality evaluated on `field`.
pub fn theorem1_chain(field: &GridField, s: f64, a: f64) -> Result<ProofChain> {
    LsiParams::new(field.dimension(), s, a)?;
    Theorem1Terms::of(field, s)?.chain(field, a)
}

/// ‖f‖²_{L^{2d/(d−2s)}} ≤ C(d,s) ‖(−Δ)^{s/2} f‖₂².
pub fn sobolev_margin(field: &GridField, s: f64) -> Result<MarginReport> {
    let d = field.dimension();
    let c = sobolev_constant(d, s)?;
    nonzero(field)?;
    let q = 2.0 * d as f64 / (d as f64 - 2.0 * s);
    let lhs = field.lp_norm(q)?.powi(2);
    let rhs = c * field.frac_half_norm_sq(s)?;
    Ok(MarginReport::new(
        InequalityId::Sobolev,
        &[("n", d as f64), ("s", s), ("q", q)],
        lhs,
        rhs,
        field.discretization(),
    ))
}

/// ‖f‖²_{L^{2n/(n−2)}} ≤ C(n,1) ‖∇f‖₂² for a radial profile in any n ≥ 3.
pub fn sobolev_margin_radial_s1(profile: &RadialProfile) -> Result<MarginReport> {
    let n = profile.dimension();
    if n < 3 {
        return Err(Error::Domain(format!(
            "radial Sobolev check needs n >= 3, got n={n}"
        )));
    }
    nonzero(profile)?;
    let q = 2.0 * n as f64 / (n as f64 - 2.0);
    let lhs = profile.lp_norm(q)?.powi(2);
    let rhs = sobolev_constant(n, 1.0)? * profile.gradient_lp_pow(2.0)?;
    Ok(MarginReport::new(
        InequalityId::SobolevRadial,
        &[("n", n as f64), ("q", q)],
        lhs,
        rhs,
        profile.discretization(),
    ))
}

struct GnsNorms {
    params: GnsParams,
    constant: f64,
    lr: f64,
    lq: f64,
    grad: f64,
}

impl GnsNorms {
    fn of(profile: &RadialProfile, p: f64, q: f64) -> Result<Self> {
        let params = gns_exponents(profile.dimension(), p, q)?;
        nonzero(profile)?;
        Ok(GnsNorms {
            constant: crate::constants::gns_constant(params.n, p, q)?,
            lr: profile.lp_norm(params.r)?,
            lq: profile.lp_norm(q)?,
            grad: profile.gradient_lp_norm(p)?,
            params,
        })
    }

    /// 𝔖 ‖∇f‖_p^θ ‖f‖_q^{1−θ}
    fn bound(&self) -> f64 {
        let t = self.params.theta;
        self.constant * self.grad.powf(t) * self.lq.powf(1.0 - t)
    }
}

/// ‖f‖_r ≤ 𝔖(n,p,q) ‖∇f‖_p^θ ‖f‖_q^{1−θ}.
pub fn gns_margin(profile: &RadialProfile, p: f64, q: f64) -> Result<MarginReport> {
    let g = GnsNorms::of(profile, p, q)?;
    Ok(MarginReport::new(
        InequalityId::Gns,
        &[
            ("n", g.params.n as f64),
            ("p", p),
            ("q", q),
            ("r", g.params.r),
            ("theta", g.params.theta),
        ],
        g.lr,
        g.bound(),
        profile.discretization(),
    ))
}

fn theorem2_report(
    profile: &RadialProfile,
    p: f64,
    q: f64,
    a: f64,
    homogeneous: bool,
) -> Result<MarginReport> {
    check_scale(a)?;
    let g = GnsNorms::of(profile, p, q)?;
    let k = g.params.log_factor();
    let lq_pow = g.lq.powf(q);
    let lhs = profile.entropy_q(q)? + (1.0 + a.ln()) * k * lq_pow;
    let bound = if homogeneous {
        g.bound().powf(q)
    } else {
        g.bound()
    };
    let rhs = a * k * bound;
    Ok(MarginReport::new(
        InequalityId::Theorem2,
        &[("n", g.params.n as f64), ("p", p), ("q", q), ("a", a)],
        lhs,
        rhs,
        profile.discretization(),
    ))
}

/// Ent_q(f) + (1 + log a) k ‖f‖_q^q ≤ a k 𝔖 ‖∇f‖_p^θ ‖f‖_q^{1−θ} with
/// k = p(q−1)/(q−p).
///
/// The two sides scale differently under f → λf; the inequality is
/// guaranteed when ‖f‖_r ≤ 1. See [`theorem2_margin_homogeneous`].
pub fn theorem2_margin(profile: &RadialProfile, p: f64, q: f64, a: f64) -> Result<MarginReport> {
    theorem2_report(profile, p, q, a, false)
}

/// Ent_q(f) + (1 + log a) k ‖f‖_q^q ≤ a k (𝔖 ‖∇f‖_p^θ ‖f‖_q^{1−θ})^q, the
/// form obtained by running the Jensen, log-linear and GNS steps with b = a.
/// Both sides are q-homogeneous.
pub fn theorem2_margin_homogeneous(
    profile: &RadialProfile,
    p: f64,
    q: f64,
    a: f64,
) -> Result<MarginReport> {
    theorem2_report(profile, p, q, a, true)
}

/// Ent_q(f) ≤ ((ε+1)/ε) ‖f‖_q^q log(‖f‖_{qε+q}^q / ‖f‖_q^q).
pub fn entropy_interpolation_check<F: Field + ?Sized>(
    field: &F,
    q: f64,
    eps: f64,
) -> Result<MarginReport> {
    if !(eps.is_finite() && eps > 0.0) {
        return Err(Error::Domain(format!(
            "eps must be positive, got eps={eps}"
        )));
    }
    let lhs = field.entropy_q(q)?;
    let lq = field.lp_norm(q)?;
    let lr = field.lp_norm(q * (1.0 + eps))?;
    let lq_pow = lq.powf(q);
    let rhs = (eps + 1.0) / eps * lq_pow * q * (lr / lq).ln();
    let report = MarginReport::new(
        InequalityId::Interpolation,
        &[("q", q), ("eps", eps)],
        lhs,
        rhs,
        field.discretization(),
    );
    // Jensen is exact for positive weights, so only roundoff is tolerated.
    Ok(MarginReport {
        tolerance: INTERPOLATION_TOLERANCE * rhs.abs().max(lq_pow),
        ..report
    })
}

/// log x ≤ bx − log b − 1, tight at x = 1/b.
pub fn log_linear_bound_check(x: f64, b: f64) -> Result<MarginReport> {
    for (name, v) in [("x", x), ("b", b)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(Error::Domain(format!(
                "{name} must be positive, got {name}={v}"
            )));
        }
    }
    let lhs = x.ln();
    let rhs = b * x - b.ln() - 1.0;
    // bx − log(bx) − 1 evaluated directly keeps the tangency point exact.
    let t = b * x;
    let margin = (t - 1.0) - t.ln();
    let mut report = MarginReport::new(
        InequalityId::LogBound,
        &[("x", x), ("b", b)],
        lhs,
        rhs,
        Discretization::Analytic,
    );
    report.margin = margin;
    report.relative_margin = margin
        / if rhs == 0.0 {
            RELATIVE_GUARD
        } else {
            rhs.abs()
        };
    Ok(report)
}

/// Closed-form best a in the Lieb–Loss inequality for this field.
pub fn optimal_a_lieb_loss_for<F: Field + ?Sized>(field: &F) -> Result<f64> {
    LiebLossTerms::of(field)?.optimal_a()
}

/// Closed-form best a in the fractional inequality for this field.
pub fn optimal_a_theorem1_for(field: &GridField, s: f64) -> Result<f64> {
    Theorem1Terms::of(field, s)?.optimal_a()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremals::{gaussian, gns_extremal, random_mixture, random_radial, Representation};
    use crate::fields::build_radial;

    const RADIAL: Representation = Representation::Radial { nodes: 512 };

    #[test]
    fn ids_round_trip() {
        for id in InequalityId::ALL {
            assert_eq!(id.as_str().parse::<InequalityId>().unwrap(), id);
        }
        assert!("nope".parse::<InequalityId>().is_err());
    }

    #[test]
    fn report_arithmetic() {
        let r = MarginReport::new(
            InequalityId::Gns,
            &[("p", 2.0)],
            1.0,
            3.0,
            Discretization::Analytic,
        );
        assert_eq!(r.margin, 2.0);
        assert_eq!(r.relative_margin, 2.0 / 3.0);
        let z = MarginReport::new(
            InequalityId::Gns,
            &[],
            -1e-310,
            0.0,
            Discretization::Analytic,
        );
        assert_eq!(z.relative_margin, 1e-310 / RELATIVE_GUARD);
        assert_eq!(
            r.to_csv_row(),
            "gns,p=2.0,1.0,3.0,2.0,0.6666666666666666,0,false"
        );
        assert_eq!(
            CSV_HEADER.split(',').count(),
            r.to_csv_row().split(',').count()
        );
    }

    #[test]
    fn lieb_loss_gaussian_equality_and_mismatch() {
        for n in [1usize, 3, 5] {
            let (f, _) = gaussian(n, 1.5, RADIAL).unwrap();
            let r = lieb_loss_margin(&f, 1.5).unwrap();
            assert!(r.relative_margin.abs() < 1e-8, "{r:?}");
            let off = lieb_loss_margin(&f, 1.2).unwrap();
            assert!(off.margin > 0.0 && off.margin > 1e3 * off.tolerance);
        }
        let (f, _) = gaussian(2, 1.0, RADIAL).unwrap();
        assert!(matches!(
            lieb_loss_margin(&f.scaled(0.0), 1.0),
            Err(Error::ZeroField)
        ));
        assert!(lieb_loss_margin(&f, -1.0).unwrap_err().is_domain());
    }

    #[test]
    fn lieb_loss_doubles_to_quadruple() {
        let f = random_mixture(3, 2, 4, 8.0, 64).unwrap();
        let a = lieb_loss_margin(&f, 0.9).unwrap();
        let b = lieb_loss_margin(&f.scaled(2.0), 0.9).unwrap();
        assert!((b.margin - 4.0 * a.margin).abs() <= 1e-10 * b.margin.abs());
    }

    #[test]
    fn theorem1_domain() {
        let f = random_mixture(1, 1, 2, 8.0, 64).unwrap();
        assert!(theorem1_margin(&f, 0.7, 1.0).unwrap_err().is_domain());
        assert!(theorem1_margin(&f, 0.3, 1.0).is_ok());
        assert!(sobolev_margin(&f, 0.5).unwrap_err().is_domain());
    }

    #[test]
    fn two_homogeneous_margins_are_scale_invariant() {
        let f = random_mixture(11, 2, 3, 8.0, 64).unwrap();
        let base = [
            theorem1_margin(&f, 0.5, 1.0).unwrap(),
            sobolev_margin(&f, 0.5).unwrap(),
            lieb_loss_margin(&f, 1.0).unwrap(),
        ];
        for lambda in [0.1, 3.0, 100.0] {
            let g = f.scaled(lambda);
            let scaled = [
                theorem1_margin(&g, 0.5, 1.0).unwrap(),
                sobolev_margin(&g, 0.5).unwrap(),
                lieb_loss_margin(&g, 1.0).unwrap(),
            ];
            for (x, y) in base.iter().zip(&scaled) {
                assert!(
                    (x.relative_margin - y.relative_margin).abs() < 1e-10,
                    "{x:?} {y:?}"
                );
            }
        }
    }

    #[test]
    fn optimal_a_is_stationary() {
        let f = random_mixture(5, 2, 3, 8.0, 64).unwrap();
        let t = Theorem1Terms::of(&f, 0.5).unwrap();
        let a = t.optimal_a().unwrap();
        let at = t.report(a).unwrap().margin;
        assert!(at <= t.report(a * 1.1).unwrap().margin);
        assert!(at <= t.report(a / 1.1).unwrap().margin);
        let (g, _) = gaussian(3, 2.0, RADIAL).unwrap();
        assert!((optimal_a_lieb_loss_for(&g).unwrap() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn proof_chain_is_monotone() {
        let f = random_mixture(2, 2, 3, 8.0, 128).unwrap();
        for a in [0.5, 1.0, 2.0] {
            let c = theorem1_chain(&f, 0.5, a).unwrap();
            assert!(c.is_monotone(1e-9), "{c:?}");
        }
    }

    #[test]
    fn sobolev_radial_cases() {
        let ext = build_radial(
            |r| (1.0 + r * r).powf(-0.5),
            Some(&|r: f64| -r * (1.0 + r * r).powf(-1.5)),
            3,
            512,
        )
        .unwrap()
        .with_slow_decay(true);
        let r = sobolev_margin_radial_s1(&ext).unwrap();
        assert!(r.relative_margin.abs() < 1e-4, "{r:?}");
        for n in [3usize, 50] {
            let (g, _) = gaussian(n, 1.0, RADIAL).unwrap();
            let r = sobolev_margin_radial_s1(g.as_radial().unwrap()).unwrap();
            assert!(r.margin > 0.0 && r.lhs.is_finite() && r.rhs.is_finite());
        }
        let (g, _) = gaussian(2, 1.0, RADIAL).unwrap();
        assert!(sobolev_margin_radial_s1(g.as_radial().unwrap())
            .unwrap_err()
            .is_domain());
    }

    #[test]
    fn gns_cases() {
        let ext = gns_extremal(3, 2.0, 3.0, 1.0, 512).unwrap();
        let r = gns_margin(&ext, 2.0, 3.0).unwrap();
        assert!(r.relative_margin.abs() < 1e-4, "{r:?}");
        let (g, _) = gaussian(3, 1.0, RADIAL).unwrap();
        let g = g.as_radial().unwrap();
        let base = gns_margin(g, 2.0, 3.0).unwrap();
        assert!(base.margin > 0.0);
        let scaled = gns_margin(&g.scaled(7.0), 2.0, 3.0).unwrap();
        assert!((base.relative_margin - scaled.relative_margin).abs() < 1e-12);
        assert!(gns_margin(g, 2.0, 5.0).unwrap_err().is_domain());
    }

    #[test]
    fn theorem2_cases() {
        let ext = gns_extremal(3, 2.0, 3.0, 1.0, 512).unwrap();
        for a in [0.25, 0.5, 1.0, 2.0, 4.0] {
            assert!(theorem2_margin(&ext, 2.0, 3.0, a).unwrap().margin >= 0.0);
            assert!(
                theorem2_margin_homogeneous(&ext, 2.0, 3.0, a)
                    .unwrap()
                    .margin
                    >= 0.0
            );
        }
        let f = random_radial(4, 3, 3, 512).unwrap();
        let base = theorem2_margin_homogeneous(&f, 2.0, 3.0, 1.0).unwrap();
        let big = theorem2_margin_homogeneous(&f.scaled(3.0), 2.0, 3.0, 1.0).unwrap();
        assert!((base.relative_margin - big.relative_margin).abs() < 1e-10);
        assert!(matches!(
            theorem2_margin(&f.scaled(0.0), 2.0, 3.0, 1.0),
            Err(Error::ZeroField)
        ));
    }

    #[test]
    fn interpolation_on_indicator_is_tight() {
        use crate::fields::build_grid;
        let f = build_grid(
            |x: &[f64]| {
                if x[0].abs() < 1.0 && x[1].abs() < 2.0 {
                    3.0
                } else {
                    0.0
                }
            },
            2,
            8.0,
            32,
        )
        .unwrap();
        for (q, eps) in [(2.0, 1.0), (3.0, 1.0 / 3.0)] {
            let r = entropy_interpolation_check(&f, q, eps).unwrap();
            assert!(r.margin.abs() <= 1e-10 * r.lhs.abs(), "{r:?}");
        }
    }

    #[test]
    fn log_bound_tangency() {
        for b in [0.1, 1.0, E, 7.3] {
            let r = log_linear_bound_check(1.0 / b, b).unwrap();
            assert!(r.margin.abs() <= 1e-15, "{r:?}");
        }
        let r = log_linear_bound_check(2.0, E).unwrap();
        assert!((r.margin - (2.0 * E - 2.0 - 2f64.ln())).abs() < 1e-15);
        assert!(log_linear_bound_check(0.0, 1.0).unwrap_err().is_domain());
    }
}
