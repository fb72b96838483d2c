//! Bicomplex matrices as pairs of complex matrices, and arithmetic that never
//! mixes the two components.
//!
//! ```bash
//! cargo run -p bicomplex --example decomposed_matrices
//! ```

use bicomplex::{BicomplexMatrix, BicomplexScalar, ComplexMatrix};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // A = Z1 + i2 Z2 from two complex matrices
    let z1 = ComplexMatrix::from_int_rows(&[&[1, 2], &[0, 1]]);
    let z2 = ComplexMatrix::from_int_rows(&[&[0, 1], &[1, 0]]);
    let a = BicomplexMatrix::from_cartesian(&z1, &z2)?;
    println!("A =\n{a}");
    println!("A- =\n{}\nA+ =\n{}", a.minus(), a.plus());

    let (back1, back2) = a.to_cartesian();
    assert_eq!((back1, back2), (z1, z2));

    let sq = a.mul(&a)?;
    assert_eq!(sq.minus(), &a.minus().mul(a.minus())?);
    println!("A^2 =\n{sq}");

    let (dm, dp) = a.determinants()?;
    println!("det A- = {dm}, det A+ = {dp}");
    println!("singular: {:?}", a.is_singular()?);

    // scaling by e1 keeps only the minus component
    let kept = a.scalar_mul(&BicomplexScalar::e1());
    println!("e1 A has zero plus component: {}", kept.plus().is_zero());

    // rectangular matrices support arithmetic but not square-only predicates
    let r = BicomplexMatrix::zeros(2, 3);
    println!("2x3 nilpotency: {}", r.nilpotency().unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
