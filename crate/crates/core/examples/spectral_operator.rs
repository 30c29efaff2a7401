// The fractional Laplacian as a Fourier multiplier on a periodic grid.

use std::f64::consts::PI;

use fraclog::fields::{build_grid, Field, FreqMultiplier};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = build_grid(|x: &[f64]| (-PI * x[0] * x[0]).exp(), 1, 8.0, 256)?;
    println!("h Σ|f|²       = {:.15}", f.lp_pow(2.0)?);
    println!("Σ|f̂|²/(2L)    = {:.15}", f.plancherel_norm_sq());
    println!(
        "‖f′‖²         = {:.15} (π/√2 = {:.15})",
        f.gradient_norm_sq()?,
        PI / 2f64.sqrt()
    );
    for s in [0.25, 0.5, 1.5] {
        println!("‖(−Δ)^{{{s}/2}} f‖² = {:.12}", f.frac_half_norm_sq(s)?);
    }

    let half = FreqMultiplier::for_field(&f, 1.0)?;
    let twice = f.apply_multiplier(&half)?.apply_multiplier(&half)?;
    let once = f.fractional_laplacian(2.0)?;
    let gap = twice
        .samples()
        .iter()
        .zip(once.samples())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    println!("max |(−Δ)^{{1/2}}(−Δ)^{{1/2}} f − (−Δ) f| = {gap:.2e}");

    let mut buf = Vec::new();
    f.write_to(&mut buf)?;
    let back = fraclog::fields::GridField::read_from(buf.as_slice())?;
    println!(
        "serialized {} bytes, round trip exact: {}",
        buf.len(),
        back.samples() == f.samples()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
