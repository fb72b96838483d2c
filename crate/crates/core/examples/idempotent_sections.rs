//! Building new idempotents from old ones.
//!
//! ```bash
//! cargo run -p bicomplex --example idempotent_sections
//! ```

use bicomplex::{BicomplexMatrix, ComplexMatrix};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = ComplexMatrix::from_int_rows(&[&[1, 1], &[0, 0]]);
    let q = ComplexMatrix::from_int_rows(&[&[0, 0], &[0, 1]]);
    let a = BicomplexMatrix::compose(p.clone(), q.clone())?;
    let b = BicomplexMatrix::compose(q, p)?;

    let cases = [
        ("A", a.clone()),
        ("I - A", a.complement()?),
        ("e1 A + e2 I", a.section_e1()),
        ("e1 I + e2 A", a.section_e2()),
        ("e1 A- + e2 B+", a.mix(&b)?),
        ("e1 (I - A) + e2 I", a.complement_section_e1()?),
        ("e1 I + e2 (I - A)", a.complement_section_e2()?),
    ];
    for (name, m) in &cases {
        println!("{name:<18} idempotent: {}", m.is_idempotent()?);
    }

    // A + B is idempotent when AB = BA = 0
    let e = BicomplexMatrix::compose(
        ComplexMatrix::from_int_rows(&[&[1, 0], &[0, 0]]),
        ComplexMatrix::zeros(2, 2),
    )?;
    let f = BicomplexMatrix::compose(
        ComplexMatrix::from_int_rows(&[&[0, 0], &[0, 1]]),
        ComplexMatrix::zeros(2, 2),
    )?;
    println!("EF = FE = 0: {}", e.mul(&f)?.is_zero() && f.mul(&e)?.is_zero());
    println!("E + F idempotent: {}", e.add(&f)?.is_idempotent()?);

    // complement sections need an idempotent input
    let n = BicomplexMatrix::compose(
        ComplexMatrix::from_int_rows(&[&[0, 1], &[0, 0]]),
        ComplexMatrix::identity(2),
    )?;
    println!("non-idempotent input: {}", n.complement_section_e1().unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
