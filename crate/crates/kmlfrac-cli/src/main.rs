//! Command-line front end: evaluates the closed forms, reproduces the value
//! tables and figure data as CSV, and runs the verification suites.

use clap::error::ErrorKind;
use clap::Parser;

use kmlfrac::verify;
use kmlfrac_cli::opts::{Cli, Command, SuiteArg, VerifyArgs};
use kmlfrac_cli::{eval, grids};

fn run_verify(args: &VerifyArgs) -> Result<i32, String> {
    let reports = match args.suite {
        SuiteArg::Identities => vec![verify::identities()],
        SuiteArg::Reductions => vec![verify::reductions()],
        SuiteArg::Oracle => vec![verify::oracle(&kmlfrac::QuadConfig::default())],
        SuiteArg::Transforms => vec![verify::transforms(&verify::transform_quad_config())],
        SuiteArg::All => verify::run_all(),
    };
    let mut all_passed = true;
    for rep in &reports {
        println!("{}", rep.summary());
        for line in rep.failures.iter().take(20) {
            println!("    {line}");
        }
        all_passed &= rep.passed();
    }
    Ok(if all_passed { 0 } else { 3 })
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let outcome = match &cli.command {
        Command::Eval(args) => eval::run(args),
        Command::Table(args) => grids::run_table(args),
        Command::Figure(args) => grids::run_figure(args),
        Command::Verify(args) => run_verify(args),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
    }
}
