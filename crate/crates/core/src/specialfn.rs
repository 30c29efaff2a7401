//! Log-space special functions.
//!
//! Every gamma-function product in the crate goes through [`log_gamma`] and is
//! exponentiated once at the end, so constants stay finite for dimensions in
//! the hundreds of thousands.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// A strictly positive, finite real.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PositiveReal(f64);

impl PositiveReal {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(PositiveReal(value))
        } else {
            Err(Error::domain(format!(
                "expected a positive finite argument, got {value}"
            )))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for PositiveReal {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        PositiveReal::new(value)
    }
}

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

// (zeta(k) - 1) / k for k = 2, 3, ...
#[allow(clippy::excessive_precision)]
const ZETA_SERIES: [f64; 29] = [
    3.22467033424113203e-01,
    6.73523010531981020e-02,
    2.05808084277845464e-02,
    7.38555102867398568e-03,
    2.89051033074152336e-03,
    1.19275391170326102e-03,
    5.09669524743042450e-04,
    2.23154758453579386e-04,
    9.94575127818085310e-05,
    4.49262367381331420e-05,
    2.05072127756706911e-05,
    9.43948827526839672e-06,
    4.37486678990748817e-06,
    2.03921575380136619e-06,
    9.55141213040741935e-07,
    4.49246919876456619e-07,
    2.12071848055546646e-07,
    1.00432248239680991e-07,
    4.76981016936398040e-08,
    2.27110946089431635e-08,
    1.08386592148969546e-08,
    5.18347504197004664e-09,
    2.48367454380247848e-09,
    1.19214014058609115e-09,
    5.73136724167886225e-10,
    2.75952288512423336e-10,
    1.33047643742444888e-10,
    6.42296456383809960e-11,
    3.10442477473222756e-11,
];

// B_{2k} / (2k (2k - 1)) for k = 1..8
const STIRLING_SERIES: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

const ASYMPTOTIC_THRESHOLD: f64 = 10.0;

/// ln Γ(2 + z) for |z| ≤ 1/2.
///
/// The ln(1 + z) terms of the expansion of ln Γ(1 + z) cancel against the
/// recurrence, leaving a series with an exact zero at z = 0.
fn log_gamma_two_plus(z: f64) -> f64 {
    let mut acc = 0.0;
    for (i, c) in ZETA_SERIES.iter().enumerate().rev() {
        let k = i + 2;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        acc = acc * z + sign * c;
    }
    z * (1.0 - EULER_GAMMA) + acc * z * z
}

// ln 2 split so that k * LN2_HI is exact for |k| < 2^11
#[allow(clippy::excessive_precision)]
const LN2_HI: f64 = 6.931_471_803_691_238_164_90e-1;
#[allow(clippy::excessive_precision)]
const LN2_LO: f64 = 1.908_214_929_270_587_700_02e-10;

/// ln x as an unevaluated sum hi + lo, good to roughly 1e-31 relative.
fn ln_double_double(x: f64) -> (f64, f64) {
    let bits = x.to_bits();
    let mut k = ((bits >> 52) & 0x7ff) as i64 - 1023;
    let mut m = f64::from_bits((bits & 0x000f_ffff_ffff_ffff) | 0x3ff0_0000_0000_0000);
    if m > std::f64::consts::SQRT_2 {
        m *= 0.5;
        k += 1;
    }
    let kf = k as f64;
    let big = kf * LN2_HI;
    let small = (m - 1.0).ln_1p();
    let hi = big + small;
    let err = small - (hi - big);
    (hi, err + kf * LN2_LO)
}

fn log_gamma_asymptotic(x: f64) -> f64 {
    let (hi, lo) = ln_double_double(x);
    let a = x - 0.5;
    let p = a * hi;
    let p_err = a.mul_add(hi, -p);
    (p - x) + (p_err + a * lo + LN_SQRT_2PI + stirling_series_tail(x))
}

fn log_gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        return log_gamma_unchecked(x + 1.0) - x.ln();
    }
    if x <= 1.5 {
        let z = x - 1.0;
        return log_gamma_two_plus(z) - z.ln_1p();
    }
    if x <= 2.5 {
        return log_gamma_two_plus(x - 2.0);
    }
    if x >= ASYMPTOTIC_THRESHOLD {
        return log_gamma_asymptotic(x);
    }
    let mut shifted = x;
    let mut product = 1.0;
    while shifted < ASYMPTOTIC_THRESHOLD {
        product *= shifted;
        shifted += 1.0;
    }
    log_gamma_asymptotic(shifted) - product.ln()
}

/// ln Γ(x) for x > 0.
///
/// Accurate to about 1e-15 relative away from the zeros at 1 and 2, and to
/// about 1e-16 absolute near them.
pub fn log_gamma(x: PositiveReal) -> f64 {
    log_gamma_unchecked(x.get())
}

/// Convenience wrapper validating a raw `f64`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    Ok(log_gamma(PositiveReal::new(x)?))
}

fn stirling_series_tail(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut series = 0.0;
    for c in STIRLING_SERIES.iter().rev() {
        series = series * inv2 + c;
    }
    series * inv
}

/// ln(Γ(num) / Γ(den)).
///
/// For large arguments the leading Stirling terms are differenced
/// analytically, so the result keeps full relative accuracy even when both
/// log-gamma values are of order 10⁶.
pub fn gamma_ratio_log(num: PositiveReal, den: PositiveReal) -> f64 {
    if num == den {
        return 0.0;
    }
    let (x, y) = (num.get(), den.get());
    if x < ASYMPTOTIC_THRESHOLD || y < ASYMPTOTIC_THRESHOLD {
        return log_gamma(num) - log_gamma(den);
    }
    if x < y {
        return -gamma_ratio_log(den, num);
    }
    // (x−½)ln x − (y−½)ln y = (y−½)·ln(x/y) + (x−y)·ln x, with x/y ≥ 1
    let d = x - y;
    (y - 0.5) * (d / y).ln_1p() + d * x.ln() - d + stirling_series_tail(x) - stirling_series_tail(y)
}

/// ln of the Stirling approximant √(2π/x)·(x/e)^x.
///
/// Only meant for reproducing the large-dimension asymptotics; exact constants
/// always use [`log_gamma`].
pub fn stirling_log_gamma(x: PositiveReal) -> f64 {
    let x = x.get();
    0.5 * (2.0 * PI / x).ln() + x * (x.ln() - 1.0)
}

/// ln ω_{n−1} = ln(2π^{n/2} / Γ(n/2)), the surface area of the unit sphere in ℝⁿ.
pub fn sphere_surface_log(n: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::domain("sphere surface requires dimension n >= 1"));
    }
    let half = n as f64 / 2.0;
    Ok(std::f64::consts::LN_2 + half * PI.ln() - log_gamma_unchecked(half))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lg(x: f64) -> f64 {
        ln_gamma(x).unwrap()
    }

    fn ln_factorial(k: u64) -> f64 {
        (2..=k).map(|j| (j as f64).ln()).sum()
    }

    #[test]
    fn small_integer_and_half_integer_values() {
        assert!(lg(1.0).abs() < 1e-15);
        assert!(lg(2.0).abs() < 1e-15);
        assert!((lg(0.5) - 0.5 * PI.ln()).abs() < 1e-15);
        assert!((lg(10.0) - 362_880f64.ln()).abs() < 1e-13);
        assert!((lg(10.0) - 12.801_827_480_081_469).abs() < 1e-13);
    }

    #[test]
    fn factorial_oracle() {
        for k in 1..=170u64 {
            let expect = ln_factorial(k - 1);
            let got = lg(k as f64);
            assert!(
                (got - expect).abs() <= 1e-13 * expect.abs().max(1.0),
                "k={k} got={got} expect={expect}"
            );
        }
    }

    // reference values from a 40-digit evaluation
    #[test]
    fn frozen_high_precision_values() {
        let cases = [
            (1e-3, 6.907178885383853),
            (0.1, 2.252712651734206),
            (0.9, 0.06637623973474296),
            (1.001, -0.0005763935982833696),
            (1.999, -0.00042246180069215375),
            (2.001, 0.0004231067348001636),
            (3.7, 1.4280723266653879),
            (123.456, 469.60554712992945),
            (1e7, 151180949.3694739),
        ];
        for (x, expect) in cases {
            let got = lg(x);
            assert!(
                ((got - expect) / expect).abs() < 1e-12,
                "x={x} got={got:e} expect={expect:e}"
            );
        }
    }

    #[test]
    fn recurrence_holds() {
        let mut x = 0.5;
        while x <= 1e4 {
            let upper = lg(x + 1.0);
            let lhs = upper - lg(x) - x.ln();
            // above ln Γ = 2^16 one ulp already exceeds 1e-11
            let ulp = f64::from_bits(upper.abs().to_bits() + 1) - upper.abs();
            assert!(lhs.abs() <= ulp.max(1e-11), "x={x} defect={lhs:e}");
            x *= 1.0031;
        }
    }

    #[test]
    fn half_integer_closed_form() {
        for k in 0..=20u64 {
            let closed =
                ln_factorial(2 * k) + 0.5 * PI.ln() - (k as f64) * 4f64.ln() - ln_factorial(k);
            let got = lg(k as f64 + 0.5);
            assert!((got - closed).abs() <= 1e-10, "k={k}");
        }
    }

    #[test]
    fn ratio_examples() {
        let p = |x| PositiveReal::new(x).unwrap();
        assert_eq!(gamma_ratio_log(p(3.0), p(3.0)), 0.0);
        assert!((gamma_ratio_log(p(4.0), p(3.0)) - 3f64.ln()).abs() < 1e-14);

        // chain Γ(500.5)/Γ(500) down to Γ(0.5)/Γ(1) via the recurrence
        let mut chain = gamma_ratio_log(p(0.5), p(1.0));
        for j in 0..500 {
            chain += (j as f64 + 0.5).ln() - (j as f64 + 1.0).ln();
        }
        // Γ(x+1)=xΓ(x) shifts numerator to 500.5 and denominator to 501; undo the last denominator step
        chain += 500f64.ln();
        let direct = gamma_ratio_log(p(500.5), p(500.0));
        assert!((direct - chain).abs() < 1e-11, "{direct} vs {chain}");

        // widely separated arguments, both orders
        let (x, y) = (p(209.0870164823808), p(61122.106464670884));
        let expect = -611_571.093_629_940_8;
        assert!(((gamma_ratio_log(x, y) - expect) / expect).abs() < 1e-14);
        assert_eq!(gamma_ratio_log(y, x), -gamma_ratio_log(x, y));
    }

    #[test]
    fn stirling_examples() {
        let p = |x| PositiveReal::new(x).unwrap();
        assert!((stirling_log_gamma(p(1.0)) - (LN_SQRT_2PI - 1.0)).abs() < 1e-15);
        let rel = |x: f64| ((stirling_log_gamma(p(x)) - lg(x)) / lg(x)).abs();
        assert!(rel(100.0) < 1e-3);
        assert!(rel(1e4) < 1e-5);
        let errs: Vec<f64> = [10.0, 1e2, 1e3, 1e4].iter().map(|&x| rel(x)).collect();
        assert!(errs.windows(2).all(|w| w[1] < w[0]), "{errs:?}");
    }

    #[test]
    fn sphere_surface() {
        assert!((sphere_surface_log(2).unwrap() - (2.0 * PI).ln()).abs() < 1e-14);
        assert!((sphere_surface_log(3).unwrap() - (4.0 * PI).ln()).abs() < 1e-14);
        let s100 = sphere_surface_log(100).unwrap();
        let expect = 2f64.ln() + 50.0 * PI.ln() - ln_factorial(49);
        assert!((s100 - expect).abs() < 1e-12);
        assert!(sphere_surface_log(0).is_err());
    }

    #[test]
    fn rejects_bad_arguments() {
        for x in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            assert!(ln_gamma(x).is_err());
        }
    }
}
