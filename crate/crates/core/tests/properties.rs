use proptest::prelude::*;

use fraclog::constants::{
    asymptotic_ratio, gns_exponents, optimal_a_lieb_loss, optimal_a_theorem1, sobolev_constant,
    GnsParams,
};
use fraclog::extremals::{gaussian, random_mixture, random_radial, Representation};
use fraclog::fields::{Field, FreqMultiplier};
use fraclog::inequalities::{
    entropy_interpolation_check, lieb_loss_margin, log_linear_bound_check, sobolev_margin,
    theorem1_chain, theorem1_margin, LiebLossTerms, Theorem1Terms,
};
use fraclog::specialfn::{gamma_ratio_log, log_gamma, PositiveReal};

fn pr(x: f64) -> PositiveReal {
    PositiveReal::new(x).unwrap()
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-300)
}

fn log_spaced(center: f64, count: usize) -> impl Iterator<Item = f64> {
    (0..count).map(move |i| center * 10f64.powf(-1.0 + 2.0 * i as f64 / (count - 1) as f64))
}

proptest! {
    #[test]
    fn log_gamma_recurrence(x in 1e-2f64..1e3) {
        let lhs = log_gamma(pr(x + 1.0)) - log_gamma(pr(x));
        prop_assert!((lhs - x.ln()).abs() <= 1e-11_f64.max(4.0 * f64::EPSILON * log_gamma(pr(x + 1.0)).abs()));
    }

    #[test]
    fn gamma_ratio_is_antisymmetric(x in 1e-2f64..1e5, y in 1e-2f64..1e5) {
        prop_assert_eq!(gamma_ratio_log(pr(x), pr(y)), -gamma_ratio_log(pr(y), pr(x)));
    }

    #[test]
    fn sobolev_constant_stays_finite(log_n in 0.0f64..6.0, frac in 0.01f64..0.99) {
        let n = 10f64.powf(log_n).round().max(1.0) as usize;
        let s = frac * n as f64 / 2.0;
        let c = sobolev_constant(n, s.min(5.0)).unwrap();
        prop_assert!(c > 0.0 && c.is_finite());
    }

    #[test]
    fn asymptotic_ratio_tends_to_one(si in 0usize..3) {
        let s = [0.5, 1.0, 2.0][si];
        let devs: Vec<f64> = [100usize, 1_000, 10_000, 100_000]
            .iter()
            .map(|&n| (asymptotic_ratio(n, s).unwrap() - 1.0).abs())
            .collect();
        prop_assert!(devs.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn theta_in_unit_interval(n in 3usize..40, pf in 0.01f64..0.99, qf in 0.01f64..=1.0) {
        let p = 1.0 + pf * (n as f64 - 1.0);
        let q_max = GnsParams::q_max(n, p);
        let q = if qf == 1.0 { q_max } else { p + qf * (q_max - p) };
        if let Ok(g) = gns_exponents(n, p, q) {
            prop_assert!(g.theta > 0.0 && g.theta <= 1.0);
            prop_assert_eq!(g.theta == 1.0, q == q_max);
        }
    }

    #[test]
    fn optimal_a_beats_log_spaced_scan(l2 in 1e-3f64..1e3, other in 1e-3f64..1e3, n in 1usize..12) {
        let a = optimal_a_lieb_loss(l2, other, n).unwrap();
        let m = |a: f64| other * a * a / std::f64::consts::PI - n as f64 * (1.0 + a.ln()) * l2;
        let best = m(a);
        for t in log_spaced(a, 64) {
            prop_assert!(best <= m(t) + 1e-12 * best.abs());
        }
        if n >= 3 {
            let s = 1.0;
            let a = optimal_a_theorem1(l2, other, n, s).unwrap();
            let c = sobolev_constant(n, s).unwrap();
            let nf = n as f64;
            let m = |a: f64| nf * std::f64::consts::E * a * a / (2.0 * s) * c * other - nf / s * (1.0 + a.ln()) * l2;
            let best = m(a);
            for t in log_spaced(a, 64) {
                prop_assert!(best <= m(t) + 1e-12 * best.abs());
            }
        }
    }

    #[test]
    fn log_linear_bound_is_nonnegative(x in 1e-6f64..1e3, b in 1e-6f64..1e3) {
        prop_assert!(log_linear_bound_check(x, b).unwrap().margin >= 0.0);
    }

    #[test]
    fn gaussian_matches_oracle(n in 1usize..12, a in 0.2f64..5.0) {
        let (f, o) = gaussian(n, a, Representation::Radial { nodes: 512 }).unwrap();
        prop_assert!(close(f.lp_pow(2.0).unwrap(), o.l2sq, 1e-9));
        prop_assert!(close(f.gradient_norm_sq().unwrap(), o.gradsq, 1e-9));
        prop_assert!(close(f.entropy().unwrap(), o.ent, 1e-9));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn mixtures_are_deterministic_and_untruncated(seed in any::<u64>(), d in 1usize..=2, count in 1usize..6) {
        let f = random_mixture(seed, d, count, 8.0, 64).unwrap();
        let again = random_mixture(seed, d, count, 8.0, 64).unwrap();
        prop_assert_eq!(f.samples(), again.samples());
        prop_assert!(!f.is_truncated());
    }

    #[test]
    fn plancherel_and_entropy_scaling(seed in any::<u64>(), re in -5.0f64..5.0, im in -5.0f64..5.0) {
        prop_assume!(re.hypot(im) > 1e-2);
        let f = random_mixture(seed, 2, 3, 8.0, 32).unwrap();
        let direct = f.lp_pow(2.0).unwrap();
        prop_assert!(close(f.plancherel_norm_sq(), direct, 1e-10));
        let lambda = num_complex::Complex64::new(re, im);
        let g = f.scaled(lambda);
        let k = lambda.norm_sqr();
        prop_assert!(close(g.entropy().unwrap(), k * f.entropy().unwrap(), 1e-9));
        prop_assert!(close(g.entropy_q(3.0).unwrap(), k.powf(1.5) * f.entropy_q(3.0).unwrap(), 1e-9));
        prop_assert!(close(f.entropy_q(2.0).unwrap(), f.entropy().unwrap(), 0.0));
    }

    #[test]
    fn multiplier_semigroup(seed in any::<u64>(), s1 in 0.05f64..2.0, s2 in 0.05f64..2.0) {
        let f = random_mixture(seed, 2, 2, 8.0, 32).unwrap();
        let a = FreqMultiplier::for_field(&f, s1).unwrap();
        let b = FreqMultiplier::for_field(&f, s2).unwrap();
        let twice = f.apply_multiplier(&a).unwrap().apply_multiplier(&b).unwrap();
        let once = f.fractional_laplacian(s1 + s2).unwrap();
        let scale = once.samples().iter().map(|z| z.norm()).fold(0.0, f64::max);
        for (x, y) in twice.samples().iter().zip(once.samples()) {
            prop_assert!((x - y).norm() <= 1e-12 * scale);
        }
    }

    #[test]
    fn two_homogeneous_margins_are_scale_invariant(seed in any::<u64>(), li in 0usize..3, s in 0.1f64..0.95) {
        let lambda = [0.1, 3.0, 100.0][li];
        let f = random_mixture(seed, 2, 3, 8.0, 32).unwrap();
        let g = f.scaled(lambda);
        let pairs = [
            (lieb_loss_margin(&f, 1.3).unwrap(), lieb_loss_margin(&g, 1.3).unwrap()),
            (theorem1_margin(&f, s, 0.7).unwrap(), theorem1_margin(&g, s, 0.7).unwrap()),
            (sobolev_margin(&f, s).unwrap(), sobolev_margin(&g, s).unwrap()),
        ];
        for (x, y) in pairs {
            prop_assert!((x.relative_margin - y.relative_margin).abs() <= 1e-10);
        }
    }

    #[test]
    fn theorem1_positive_on_admissible_fields(seed in any::<u64>(), s in 0.05f64..0.99, a in 0.1f64..10.0) {
        let f = random_mixture(seed, 2, 4, 8.0, 64).unwrap();
        let r = theorem1_margin(&f, s, a).unwrap();
        prop_assert!(r.margin >= -1e-6 * r.rhs.abs() || r.truncated());
    }

    #[test]
    fn proof_chain_never_beats_direct_bound(seed in any::<u64>(), s in 0.1f64..0.9, a in 0.2f64..5.0) {
        let f = random_mixture(seed, 2, 3, 8.0, 64).unwrap();
        let c = theorem1_chain(&f, s, a).unwrap();
        prop_assert!(c.is_monotone(1e-9));
        let direct = theorem1_margin(&f, s, a).unwrap();
        prop_assert!(close(c.rhs, direct.rhs, 1e-12) && close(c.lhs, direct.lhs, 1e-12));
    }

    #[test]
    fn interpolation_holds(seed in any::<u64>(), q in 1.1f64..4.0, eps in 0.05f64..5.0) {
        let f = random_mixture(seed, 1, 3, 8.0, 128).unwrap();
        let r = entropy_interpolation_check(&f, q, eps).unwrap();
        prop_assert!(r.margin >= -1e-9 * r.rhs.abs().max(1e-12));
        let g = random_radial(seed, 4, 3, 256).unwrap();
        let r = entropy_interpolation_check(&g, q, eps).unwrap();
        prop_assert!(r.margin >= -1e-9 * r.rhs.abs().max(1e-12));
    }

    #[test]
    fn closed_form_scales_are_local_minima(seed in any::<u64>()) {
        let f = random_mixture(seed, 2, 3, 8.0, 32).unwrap();
        let lieb = LiebLossTerms::of(&f).unwrap();
        let a = lieb.optimal_a().unwrap();
        let m = lieb.report(a).unwrap().margin;
        prop_assert!(m <= lieb.report(a * 1.1).unwrap().margin && m <= lieb.report(a / 1.1).unwrap().margin);
        let frac = Theorem1Terms::of(&f, 0.5).unwrap();
        let a = frac.optimal_a().unwrap();
        let m = frac.report(a).unwrap().margin;
        prop_assert!(m <= frac.report(a * 1.1).unwrap().margin && m <= frac.report(a / 1.1).unwrap().margin);
    }
}
