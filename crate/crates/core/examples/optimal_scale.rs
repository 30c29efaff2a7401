// Closed-form best scale a for a given field in both log-Sobolev forms.

use fraclog::extremals::{gaussian, random_mixture, Representation};
use fraclog::inequalities::{LiebLossTerms, Theorem1Terms};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (g, _) = gaussian(3, 2.0, Representation::Radial { nodes: 512 })?;
    let t = LiebLossTerms::of(&g)?;
    println!("Gaussian of width 2: a* = {:.12}", t.optimal_a()?);

    let f = random_mixture(9, 2, 4, 8.0, 64)?;
    let lieb = LiebLossTerms::of(&f)?;
    let frac = Theorem1Terms::of(&f, 0.5)?;
    for (name, a_star, margin) in [
        (
            "lieb-loss",
            lieb.optimal_a()?,
            Box::new(|a| lieb.report(a).map(|r| r.margin)) as Box<dyn Fn(f64) -> _>,
        ),
        (
            "theorem1 s=1/2",
            frac.optimal_a()?,
            Box::new(|a| frac.report(a).map(|r| r.margin)),
        ),
    ] {
        println!("{name}: a* = {a_star:.8}");
        for k in -2i32..=2 {
            let a = a_star * 1.25f64.powi(k);
            println!("  a = {a:>10.6}  margin = {:.8}", margin(a)?);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
