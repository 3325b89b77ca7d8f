//! Runs a verification suite and prints its table and the start of the JSON
//! report.

use isolated_subgroups::harness::{run_suite, SuiteOptions, SUITES};

fn main() -> isolated_subgroups::Result<()> {
    let suite = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "example-2-6".to_string());
    if !SUITES.contains(&suite.as_str()) {
        eprintln!("suites: {}", SUITES.join(", "));
        std::process::exit(2);
    }
    let report = run_suite(&suite, &SuiteOptions::default())?;
    print!("{}", report.to_table(5));
    println!();
    for line in report.to_json().lines().take(20) {
        println!("{line}");
    }
    Ok(())
}
