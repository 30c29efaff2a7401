// Driving the command-line front end in process.

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for args in [
        &["constants", "--n", "3", "--p", "2", "--q", "4"][..],
        &[
            "verify",
            "lieb-loss",
            "--gaussian",
            "--n",
            "3",
            "--a",
            "1.5",
        ],
        &["asymptotics", "--s", "1", "--n", "100,1000"],
        &[
            "sweep",
            "gns",
            "--extremal",
            "--variable",
            "q",
            "--values",
            "2.5,3,3.5,4,5",
        ],
    ] {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = fraclog::cli::run(
            std::iter::once("fraclog").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        println!("$ fraclog {}  -> exit {code}", args.join(" "));
        print!("{}", String::from_utf8(out)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
