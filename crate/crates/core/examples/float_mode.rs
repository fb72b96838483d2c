//! Double-precision predicates with a relative tolerance, for lossy input.
//!
//! ```bash
//! cargo run -p bicomplex --example float_mode
//! ```

use bicomplex::generators::{gen_nilpotent, GenKind, GenSpec};
use bicomplex::{BicomplexMatrix, ComplexMatrix, FloatBicomplexMatrix, FloatComplexMatrix, DEFAULT_TOLERANCE};
use num_complex::Complex64;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = gen_nilpotent(&GenSpec::new(1, 5, GenKind::Nilpotent { index: 4 }))?.matrix;
    let b = gen_nilpotent(&GenSpec::new(2, 5, GenKind::Nilpotent { index: 2 }))?.matrix;
    let exact = BicomplexMatrix::compose(a, b)?;
    let float = FloatBicomplexMatrix::from_exact(&exact, DEFAULT_TOLERANCE);
    println!("exact nilpotency: {:?}", exact.nilpotency()?.index);
    println!("float nilpotency: {:?}", float.nilpotency()?.index);
    println!("float determinants: {:?}", float.determinants()?);

    // a projector with rounding noise on the diagonal
    let noisy = |eps: f64| {
        FloatComplexMatrix::new(
            2,
            2,
            vec![
                Complex64::new(1.0 + eps, 0.0),
                Complex64::new(0.5, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        )
    };
    for eps in [0.0, 1e-12, 1e-6] {
        println!(
            "eps = {eps:e}: idempotent at tol 1e-9: {}",
            noisy(eps)?.is_idempotent(DEFAULT_TOLERANCE)?
        );
    }
    let exact_proj = ComplexMatrix::from_int_rows(&[&[1, 1], &[0, 0]]);
    println!("exact projector idempotent: {}", exact_proj.is_idempotent()?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
