//! Running the seeded theorem checks from code.
//!
//! ```bash
//! cargo run -p bicomplex --example verify_theorems
//! ```

use bicomplex::verify::{self, Suite, VerifyConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let report = verify::run(&VerifyConfig {
        suite: Suite::All,
        instances: 25,
        seed: 99,
    });
    for check in &report.checks {
        println!("{:<28} {}/{}", check.check, check.passed, check.instances);
    }
    println!("all passed: {}", report.passed());
    if !report.passed() {
        return Err("counterexample found".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
