// Equality of the Lieb–Loss inequality on Gaussians, in radial and grid form.

use fraclog::extremals::{gaussian, Representation};
use fraclog::inequalities::lieb_loss_margin;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let radial = Representation::Radial { nodes: 512 };
    for n in [1usize, 3, 10, 200] {
        for a in [0.5, 2.0] {
            let (f, oracle) = gaussian(n, a, radial)?;
            let (lhs, rhs) = oracle.lieb_loss_sides(a);
            let r = lieb_loss_margin(&f, a)?;
            println!(
                "n={n:>3} a={a}: relative margin {:+.2e}  (closed form {lhs:.6e} = {rhs:.6e})",
                r.relative_margin
            );
        }
    }

    let grid = Representation::Grid {
        half_width: 6.0,
        points_per_axis: 64,
    };
    let (f, _) = gaussian(2, 1.0, grid)?;
    for a in [0.8, 1.0, 1.25] {
        let r = lieb_loss_margin(&f, a)?;
        println!("grid 64², width 1, a={a}: margin {:+.3e}", r.margin);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
