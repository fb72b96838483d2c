//! Nilpotency of a composite is decided per component; the index is the
//! larger of the two component indices.
//!
//! ```bash
//! cargo run -p bicomplex --example nilpotency_index
//! ```

use bicomplex::{BicomplexMatrix, BicomplexOperator, ComplexMatrix};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // T1(z1, z2, z3) = (z3 + z2, z3, 0) and T2(w1, w2, w3) = (w1, 0, w3)
    let t1 = ComplexMatrix::from_int_rows(&[&[0, 1, 1], &[0, 0, 1], &[0, 0, 0]]);
    let t2 = ComplexMatrix::from_int_rows(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]);
    let t = BicomplexOperator::new(t1.clone(), t2)?;

    println!("T1 index: {:?}", t1.nilpotency_index()?);
    let report = t.nilpotency();
    println!(
        "T nilpotent: {} (minus index {:?}, plus index {:?})",
        report.is_nilpotent, report.minus_index, report.plus_index
    );
    let cube = t.power(3);
    println!("T^3 = e1 0 + e2 T2: {}", cube.t1().is_zero() && cube.t2() == t.t2());
    println!("T singular in both components: {}", t.is_singular().both());

    // two nilpotent components of index 2 and 3
    let n2 = ComplexMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
    let m = BicomplexMatrix::compose(n2, t1)?;
    let report = m.nilpotency()?;
    println!(
        "index(e1 N2 + e2 N3) = {:?} from components {:?}",
        report.index, report.component_indices
    );
    println!(
        "power 2 zero: {}, power 3 zero: {}",
        m.power(2)?.is_zero(),
        m.power(3)?.is_zero()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
