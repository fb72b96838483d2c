//! Bicomplex scalars: the idempotent basis, both text forms, and zero divisors.
//!
//! ```bash
//! cargo run -p bicomplex --example scalar_arithmetic
//! ```

use bicomplex::{BicomplexScalar, ScalarClass};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (e1, e2) = (BicomplexScalar::e1(), BicomplexScalar::e2());
    println!("e1 = {}   ({})", e1, e1.to_cartesian_string());
    println!("e2 = {}   ({})", e2, e2.to_cartesian_string());
    println!("e1 + e2 = {}", &e1 + &e2);
    println!("e1 * e2 = {}", &e1 * &e2);

    // cartesian input, idempotent output
    let x: BicomplexScalar = "1 + 2 i1 - 1/2 i2 + 3 i1i2".parse()?;
    let y: BicomplexScalar = "[1+i | 2-3i]".parse()?;
    println!("x = {x}, y = {y}");
    println!("x * y = {}  = {}", &x * &y, (&x * &y).to_cartesian_string());
    println!("x^3 = {}", x.pow(3));

    let inv = x.inverse()?;
    println!("x^-1 = {inv}, x * x^-1 = {}", &x * &inv);

    // 1 + i1i2 = 2 e1 has a vanishing plus component
    let d: BicomplexScalar = "1 + i1i2".parse()?;
    assert_eq!(d.classify(), ScalarClass::ZeroDivisor);
    println!(
        "{} is a zero divisor: {} * e2 = {}",
        d.to_cartesian_string(),
        d,
        &d * &e2
    );
    if let Err(e) = d.inverse() {
        println!("inverse fails: {e}");
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
