// C(n,s) against its large-dimension approximant. At s = 1 the right-hand
// factor (ne/2)·C(n,1) tends to 1/π, the Lieb–Loss constant.

use std::f64::consts::PI;

use fraclog::constants::{asymptotic_ratio, lsi_rhs_constant, LsiParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>8} {:>14} {:>14} {:>14}", "n", "s=0.5", "s=1", "s=2");
    for n in [10usize, 100, 1_000, 10_000, 100_000, 1_000_000] {
        let cols: Vec<String> = [0.5, 1.0, 2.0]
            .iter()
            .map(|&s| format!("{:>14.6e}", asymptotic_ratio(n, s).unwrap() - 1.0))
            .collect();
        println!("{n:>8} {}", cols.join(" "));
    }
    for n in [100usize, 10_000, 1_000_000] {
        let f = lsi_rhs_constant(&LsiParams::new(n, 1.0, 1.0)?)?;
        println!("n={n:>8}: π·(ne/2)C(n,1) = {:.8}", f * PI);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
