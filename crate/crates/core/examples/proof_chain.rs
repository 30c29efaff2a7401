// The chain of bounds behind the fractional log-Sobolev inequality: Jensen
// interpolation, then log x ≤ bx − log b − 1, then the sharp Sobolev bound.

use std::f64::consts::E;

use fraclog::extremals::random_mixture;
use fraclog::fields::build_grid;
use fraclog::inequalities::{entropy_interpolation_check, log_linear_bound_check, theorem1_chain};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = random_mixture(3, 2, 4, 8.0, 64)?;
    for a in [0.5, 1.0, 2.0] {
        let c = theorem1_chain(&f, 0.5, a)?;
        println!(
            "a={a}: {:.6} ≤ {:.6} ≤ {:.6} ≤ {:.6}",
            c.lhs, c.interpolation, c.log_bound, c.rhs
        );
    }

    for (x, b) in [(2.0, E), (1.0 / E, E), (0.1, 3.0)] {
        println!(
            "log-linear x={x:.4} b={b:.4}: margin {:.3e}",
            log_linear_bound_check(x, b)?.margin
        );
    }

    // constant modulus on its support makes Jensen an equality
    let box_field = build_grid(
        |x: &[f64]| {
            if x[0].abs() < 1.0 && x[1].abs() < 0.5 {
                2.0
            } else {
                0.0
            }
        },
        2,
        4.0,
        32,
    )?;
    for (q, eps) in [(2.0, 1.0), (3.0, 1.0 / 3.0)] {
        let r = entropy_interpolation_check(&box_field, q, eps)?;
        let s = entropy_interpolation_check(&f, q, eps)?;
        println!(
            "q={q} ε={eps:.4}: indicator margin {:.1e}, mixture margin {:.4}",
            r.margin, s.margin
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
