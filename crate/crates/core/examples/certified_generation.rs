//! Seeded instances that come with a checked certificate.
//!
//! ```bash
//! cargo run -p bicomplex --example certified_generation
//! ```

use bicomplex::generators::{gen_orthogonal_idempotents, generate, GenKind, GenSpec, SplitMix64};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = SplitMix64::new(2024);
    println!("splitmix64(2024) -> {:#018x}", rng.next_u64());

    for kind in [
        GenKind::Nilpotent { index: 3 },
        GenKind::Idempotent { rank: 2 },
        GenKind::Invertible,
        GenKind::Arbitrary,
    ] {
        let g = generate(&GenSpec::new(7, 4, kind))?;
        println!("{kind:?}: certificate {:?}\n{}", g.certificate, g.matrix);
    }

    // the canonical form, without conjugation
    let shift = generate(&GenSpec::new(0, 3, GenKind::Nilpotent { index: 3 }).with_mixing_steps(0))?;
    println!("unmixed index-3 block:\n{}", shift.matrix);

    let same = generate(&GenSpec::new(7, 4, GenKind::Invertible))?;
    assert_eq!(same, generate(&GenSpec::new(7, 4, GenKind::Invertible))?);

    let spec = GenSpec::new(3, 4, GenKind::Idempotent { rank: 2 });
    let (a, b) = gen_orthogonal_idempotents(&spec, 2, 1)?;
    println!("AB = 0: {}, BA = 0: {}", a.mul(&b)?.is_zero(), b.mul(&a)?.is_zero());

    let bad = GenSpec::new(0, 3, GenKind::Nilpotent { index: 4 });
    println!("bad spec: {}", generate(&bad).unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
