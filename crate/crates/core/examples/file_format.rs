//! Writing and reading the JSON matrix format, then analyzing the result.
//!
//! ```bash
//! cargo run -p bicomplex --example file_format
//! ```

use bicomplex::cli::{analyze_matrix, Mode};
use bicomplex::format::{read_document, Encoding, MatrixDocument};
use bicomplex::{BicomplexOperator, ComplexMatrix};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t = BicomplexOperator::new(
        ComplexMatrix::from_int_rows(&[&[0, 1], &[0, 0]]),
        ComplexMatrix::from_int_rows(&[&[1, 0], &[0, 0]]),
    )?;
    let json = MatrixDocument::from_operator(&t, Encoding::Cartesian).to_json();
    println!("{json}");

    let (doc, decoded) = read_document(&json)?;
    let report = analyze_matrix(&decoded.as_bicomplex(), doc.kind, doc.encoding, Mode::Exact, 0.0)?;
    print!("{}", report.to_text());

    let broken = json.replacen("\"u1\": \"0\"", "\"u1\": \"1/0\"", 1);
    println!("corrupted: {}", read_document(&broken).unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
