//! Driving the command-line front end in-process.

fn main() {
    let commands: [&[&str]; 4] = [
        &["eisenstein", "--k", "2", "--tau", "i"],
        &["coeffs", "--tau", "sqrt(-3)", "--omega-sq", "pin:c0=1/16", "--terms", "3"],
        &["classify", "--tau", "(-1+sqrt(-7))/2"],
        &["isomorphic", "--tau0", "i", "--omega0", "1", "--tau1", "i", "--omega1", "i", "--json"],
    ];
    for args in commands {
        let argv = std::iter::once("rank3").chain(args.iter().copied());
        let code = rank3_frobenius::cli::run(argv, &mut std::io::stdout(), &mut std::io::stderr());
        println!("(exit {code})\n");
    }
}
