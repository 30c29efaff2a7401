// Sharp Sobolev constants C(n,s) and Gagliardo–Nirenberg constants 𝔖(n,p,q).

use fraclog::constants::{gns_constant, gns_exponents, sobolev_constant};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("C(n,s)");
    for n in [1usize, 2, 3, 4, 10] {
        let row: Vec<String> = [0.25, 0.5, 1.0, 2.0]
            .iter()
            .map(|&s| match sobolev_constant(n, s) {
                Ok(c) => format!("{c:>12.6e}"),
                Err(_) => format!("{:>12}", "-"),
            })
            .collect();
        println!("  n = {n:>2}: {}", row.join(" "));
    }

    println!("𝔖(n,p,q) with its exponents");
    for (n, p, q) in [
        (3usize, 2.0, 3.0),
        (3, 2.0, 4.0),
        (3, 1.5, 2.0),
        (5, 2.0, 2.5),
    ] {
        let g = gns_exponents(n, p, q)?;
        println!(
            "  n={n} p={p} q={q}: r={:.4} θ={:.4} δ={:.4} 𝔖={:.10}",
            g.r,
            g.theta,
            g.delta,
            gns_constant(n, p, q)?
        );
    }

    // the endpoint q reduces to the s = 1 Sobolev inequality
    let n = 6;
    let q = 2.0 * (n as f64 - 1.0) / (n as f64 - 2.0);
    println!(
        "n={n}: 𝔖(n,2,{q})² = {:.15}, C(n,1) = {:.15}",
        gns_constant(n, 2.0, q)?.powi(2),
        sobolev_constant(n, 1.0)?
    );

    if let Err(e) = sobolev_constant(3, 2.0) {
        println!("C(3,2): {e}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
