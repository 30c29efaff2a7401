// Gagliardo–Nirenberg equality on its extremal family and the L^q log
// inequality derived from it.

use fraclog::constants::gns_exponents;
use fraclog::extremals::{gns_extremal, random_radial};
use fraclog::fields::Field;
use fraclog::inequalities::{gns_margin, theorem2_margin, theorem2_margin_homogeneous};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (p, q) in [(2.0, 3.0), (2.0, 4.0), (1.5, 2.0)] {
        let f = gns_extremal(3, p, q, 1.0, 1024)?;
        let r = gns_margin(&f, p, q)?;
        println!(
            "extremal p={p} q={q}: relative margin {:+.3e}",
            r.relative_margin
        );
    }

    let (p, q) = (2.0, 3.0);
    let r_exp = gns_exponents(3, p, q)?.r;
    let f = random_radial(42, 3, 4, 512)?;
    let unit = f.scaled(1.0 / f.lp_norm(r_exp)?);
    for a in [0.25, 1.0, 4.0] {
        let plain = theorem2_margin(&unit, p, q, a)?;
        let homog = theorem2_margin_homogeneous(&f, p, q, a)?;
        println!(
            "a={a}: margin at unit L^{r_exp} norm {:.4}, q-homogeneous form {:.4}",
            plain.margin, homog.relative_margin
        );
    }

    // large amplitudes break the inhomogeneous form but not the homogeneous one
    let big = f.scaled(3.0 / f.lp_norm(r_exp)?);
    println!(
        "amplitude 3: {:+.4} vs {:+.4}",
        theorem2_margin(&big, p, q, 1.0)?.relative_margin,
        theorem2_margin_homogeneous(&big, p, q, 1.0)?.relative_margin
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
