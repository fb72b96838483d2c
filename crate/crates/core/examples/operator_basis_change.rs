//! Operators on bicomplex vectors and their matrices in another basis.
//!
//! ```bash
//! cargo run -p bicomplex --example operator_basis_change
//! ```

use bicomplex::{Basis, BicomplexOperator, BicomplexVector, ComplexMatrix, RationalComplex};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t = BicomplexOperator::new(
        ComplexMatrix::from_int_rows(&[&[0, 1, 1], &[0, 0, 1], &[0, 0, 0]]),
        ComplexMatrix::from_int_rows(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]),
    )?;
    let ones = vec![RationalComplex::one(); 3];
    let v = BicomplexVector::from_components(ones.clone(), ones)?;
    let (minus, plus) = t.apply(&v)?.split();
    let show = |v: &[RationalComplex]| v.iter().map(|z| z.to_string()).collect::<Vec<_>>().join(", ");
    println!("T(v): minus ({}), plus ({})", show(&minus), show(&plus));

    let basis = Basis::new(ComplexMatrix::from_int_rows(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]))?;
    let m = t.matrix_in_basis(&basis)?;
    println!("[T]_B =\n{m}");
    println!(
        "nilpotency: standard {:?}, B {:?}",
        t.nilpotency().minus_index,
        m.nilpotency()?.minus_index
    );
    println!("singularity: standard {:?}, B {:?}", t.is_singular(), m.is_singular()?);

    let s = t.scale(&RationalComplex::from_ints(0, 2));
    println!(
        "(2i T)^3 = 8(-i) T^3: {}",
        s.power(3) == t.power(3).scale(&RationalComplex::from_ints(0, -8))
    );
    println!("T^2 = S^2 for S = T: {}", t.powers_equal(&t, 2)?);

    let singular = ComplexMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
    println!("singular basis: {}", Basis::new(singular).unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
