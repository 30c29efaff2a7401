// Log-gamma, gamma ratios and Stirling's approximant in log space.

use fraclog::specialfn::{
    gamma_ratio_log, log_gamma, sphere_surface_log, stirling_log_gamma, PositiveReal,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>12} {:>24} {:>24}", "x", "ln Γ(x)", "Stirling error");
    for x in [1e-3, 0.5, 1.0, 10.0, 123.456, 1e7] {
        let px = PositiveReal::new(x)?;
        let lg = log_gamma(px);
        println!(
            "{x:>12} {lg:>24.16e} {:>24.3e}",
            stirling_log_gamma(px) - lg
        );
    }

    // Γ(n/2 − 1)/Γ(n/2 + 1) stays finite long after either factor overflows
    for n in [10.0, 1e3, 1e6] {
        let r = gamma_ratio_log(
            PositiveReal::new(n / 2.0 - 1.0)?,
            PositiveReal::new(n / 2.0 + 1.0)?,
        );
        println!("n = {n:>9}: ln Γ(n/2−1)/Γ(n/2+1) = {r:.12}");
    }

    for n in [1usize, 3, 1000] {
        println!("ln |S^{}| = {:.12}", n - 1, sphere_surface_log(n)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
