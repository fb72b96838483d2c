//! Seeded theorem checks over generated instances.
//!
//! Each check draws its instances from an independent stream of the run
//! seed, so results depend only on `(seed, check, instance)` and not on
//! thread scheduling. A failing instance yields a [`Counterexample`] naming
//! the identity that broke together with a replayable document.

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{rational, RationalComplex};
use crate::error::{Error, Result};
use crate::format::{ComponentCertificates, Decoded, Encoding, MatrixDocument, Metadata};
use crate::generators::{
    derive_seed, gen_arbitrary, gen_idempotent, gen_invertible, gen_nilpotent, gen_orthogonal_idempotents, Certificate,
    GenKind, GenSpec, SplitMix64, DEFAULT_ENTRY_BOUND, RNG_ALGORITHM,
};
use crate::matrix::{BicomplexMatrix, ComplexMatrix};
use crate::operator::{Basis, BicomplexOperator};
use crate::scalar::{BicomplexScalar, ScalarClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    All,
    Scalar,
    Nilpotent,
    Idempotent,
}

impl Suite {
    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "scalar" => Ok(Suite::Scalar),
            "nilpotent" => Ok(Suite::Nilpotent),
            "idempotent" => Ok(Suite::Idempotent),
            _ => Err(Error::parse("suite", format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub instances: usize,
    pub seed: u64,
}

/// A broken identity on one instance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub check: String,
    pub instance: usize,
    pub identity: String,
    #[serde(skip)]
    pub document: Option<Box<MatrixDocument>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub check: String,
    pub instances: usize,
    pub passed: usize,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub seed: u64,
    pub instances: usize,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.counterexamples.is_empty())
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &Counterexample> {
        self.checks.iter().flat_map(|c| c.counterexamples.iter())
    }
}

struct Failure {
    identity: String,
    document: Option<Box<MatrixDocument>>,
}

type Outcome = std::result::Result<(), Failure>;

fn fail(identity: impl Into<String>) -> Failure {
    Failure {
        identity: identity.into(),
        document: None,
    }
}

fn ensure(ok: bool, identity: &str) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(fail(identity))
    }
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(|e| fail(format!("unexpected error: {e}")))
}

fn with_document(out: Outcome, doc: impl FnOnce() -> MatrixDocument) -> Outcome {
    out.map_err(|mut f| {
        f.document = Some(Box::new(doc()));
        f
    })
}

struct Check {
    name: &'static str,
    suite: Suite,
    /// Runs once regardless of the instance count.
    fixed: bool,
    run: fn(&mut SplitMix64, u64) -> Outcome,
}

const CHECKS: &[Check] = &[
    Check {
        name: "idempotent_units",
        suite: Suite::Scalar,
        fixed: true,
        run: idempotent_units,
    },
    Check {
        name: "representation_round_trip",
        suite: Suite::Scalar,
        fixed: false,
        run: representation_round_trip,
    },
    Check {
        name: "product_homomorphism",
        suite: Suite::Scalar,
        fixed: false,
        run: product_homomorphism,
    },
    Check {
        name: "scalar_inverse",
        suite: Suite::Scalar,
        fixed: false,
        run: scalar_inverse,
    },
    Check {
        name: "worked_example",
        suite: Suite::Nilpotent,
        fixed: true,
        run: worked_example,
    },
    Check {
        name: "index_theorem",
        suite: Suite::Nilpotent,
        fixed: false,
        run: index_theorem,
    },
    Check {
        name: "power_decomposition",
        suite: Suite::Nilpotent,
        fixed: false,
        run: power_decomposition,
    },
    Check {
        name: "singular_attribution",
        suite: Suite::Nilpotent,
        fixed: false,
        run: singular_attribution,
    },
    Check {
        name: "basis_invariance_nilpotent",
        suite: Suite::Nilpotent,
        fixed: false,
        run: basis_invariance_nilpotent,
    },
    Check {
        name: "idempotent_battery",
        suite: Suite::Idempotent,
        fixed: false,
        run: idempotent_battery,
    },
    Check {
        name: "orthogonal_sum",
        suite: Suite::Idempotent,
        fixed: false,
        run: orthogonal_sum,
    },
    Check {
        name: "product_criterion",
        suite: Suite::Idempotent,
        fixed: false,
        run: product_criterion,
    },
    Check {
        name: "composite_product",
        suite: Suite::Idempotent,
        fixed: false,
        run: composite_product,
    },
    Check {
        name: "basis_invariance_idempotent",
        suite: Suite::Idempotent,
        fixed: false,
        run: basis_invariance_idempotent,
    },
];

/// Names of the checks a suite runs, in execution order.
pub fn check_names(suite: Suite) -> Vec<&'static str> {
    CHECKS
        .iter()
        .filter(|c| suite.includes(c.suite))
        .map(|c| c.name)
        .collect()
}

pub fn run(config: &VerifyConfig) -> VerifyReport {
    let checks = CHECKS
        .iter()
        .enumerate()
        .filter(|(_, c)| config.suite.includes(c.suite))
        .map(|(id, check)| {
            let count = if check.fixed { 1 } else { config.instances };
            let results: Vec<(usize, Outcome)> = (0..count)
                .into_par_iter()
                .map(|i| {
                    let seed = derive_seed(config.seed, ((id as u64) << 32) | i as u64);
                    let mut rng = SplitMix64::new(seed);
                    (i, (check.run)(&mut rng, seed))
                })
                .collect();
            let counterexamples: Vec<Counterexample> = results
                .into_iter()
                .filter_map(|(i, r)| r.err().map(|f| (i, f)))
                .map(|(instance, f)| Counterexample {
                    check: check.name.to_string(),
                    instance,
                    identity: f.identity,
                    document: f.document,
                })
                .collect();
            CheckOutcome {
                check: check.name.to_string(),
                instances: count,
                passed: count - counterexamples.len(),
                counterexamples,
            }
        })
        .collect();
    VerifyReport {
        suite: config.suite,
        seed: config.seed,
        instances: config.instances,
        checks,
    }
}

fn size(rng: &mut SplitMix64, max: usize) -> usize {
    rng.range_i64(1, max as i64) as usize
}

fn small_rational(rng: &mut SplitMix64) -> crate::complex::Rational {
    let b = DEFAULT_ENTRY_BOUND as i64;
    rational(rng.range_i64(-b, b), rng.range_i64(1, b))
}

fn random_complex(rng: &mut SplitMix64) -> RationalComplex {
    RationalComplex::new(small_rational(rng), small_rational(rng))
}

fn random_scalar(rng: &mut SplitMix64) -> BicomplexScalar {
    // draw zero divisors and zero often enough to exercise every class
    let pick = rng.below(4);
    let part = |rng: &mut SplitMix64, zero: bool| {
        if zero {
            RationalComplex::zero()
        } else {
            random_complex(rng)
        }
    };
    BicomplexScalar::new(part(rng, pick == 1 || pick == 3), part(rng, pick == 2 || pick == 3))
}

fn composite(minus: &ComplexMatrix, plus: &ComplexMatrix) -> std::result::Result<BicomplexMatrix, Failure> {
    lib(BicomplexMatrix::compose(minus.clone(), plus.clone()))
}

fn gen(spec: GenSpec) -> std::result::Result<ComplexMatrix, Failure> {
    let g = match spec.kind {
        GenKind::Nilpotent { .. } => gen_nilpotent(&spec),
        GenKind::Idempotent { .. } => gen_idempotent(&spec),
        GenKind::Invertible => gen_invertible(&spec),
        GenKind::Arbitrary => gen_arbitrary(&spec),
    };
    lib(g).map(|g| g.matrix)
}

/// Document for a generated pair, carrying both certificates for replay.
pub fn instance_document(
    m: &BicomplexMatrix,
    seed: u64,
    kind: &str,
    minus: Certificate,
    plus: Certificate,
) -> MatrixDocument {
    MatrixDocument::from_matrix(m, Encoding::Idempotent).with_metadata(Metadata {
        rng: RNG_ALGORITHM.to_string(),
        seed,
        kind: kind.to_string(),
        n: m.shape().0,
        entry_bound: DEFAULT_ENTRY_BOUND,
        certificate: ComponentCertificates { minus, plus },
    })
}

fn idempotent_units(_: &mut SplitMix64, _: u64) -> Outcome {
    let (e1, e2) = (BicomplexScalar::e1(), BicomplexScalar::e2());
    ensure(&e1 + &e2 == BicomplexScalar::one(), "e1 + e2 = 1")?;
    ensure((&e1 * &e2).is_zero(), "e1 e2 = 0")?;
    for k in 1..=10 {
        ensure(e1.pow(k) == e1, &format!("e1^{k} = e1"))?;
        ensure(e2.pow(k) == e2, &format!("e2^{k} = e2"))?;
    }
    let i1i2 = &BicomplexScalar::i1() * &BicomplexScalar::i2();
    ensure(i1i2.pow(2) == BicomplexScalar::one(), "(i1 i2)^2 = 1")
}

fn representation_round_trip(rng: &mut SplitMix64, _: u64) -> Outcome {
    let quad = [
        small_rational(rng),
        small_rational(rng),
        small_rational(rng),
        small_rational(rng),
    ];
    let s = BicomplexScalar::from_real_quad(quad[0].clone(), quad[1].clone(), quad[2].clone(), quad[3].clone());
    let (z1, z2) = s.to_cartesian_pair();
    ensure(
        z1 == RationalComplex::new(quad[0].clone(), quad[1].clone())
            && z2 == RationalComplex::new(quad[2].clone(), quad[3].clone()),
        "to_cartesian_pair(from_real_quad(u)) = (u1 + u2 i, u3 + u4 i)",
    )?;
    ensure(
        BicomplexScalar::from_cartesian_pair(z1, z2) == s,
        "from_cartesian_pair(to_cartesian_pair(x)) = x",
    )?;
    ensure(s.to_real_quad() == quad, "to_real_quad(from_real_quad(u)) = u")
}

fn product_homomorphism(rng: &mut SplitMix64, _: u64) -> Outcome {
    let (x, y) = (random_scalar(rng), random_scalar(rng));
    // (z1 + i2 z2)(w1 + i2 w2) = (z1 w1 − z2 w2) + i2 (z1 w2 + z2 w1)
    let ((z1, z2), (w1, w2)) = (x.to_cartesian_pair(), y.to_cartesian_pair());
    let expected = BicomplexScalar::from_cartesian_pair(&(&z1 * &w1) - &(&z2 * &w2), &(&z1 * &w2) + &(&z2 * &w1));
    ensure(&x * &y == expected, "idempotent product = cartesian product")?;
    ensure(
        &x + &y == BicomplexScalar::from_cartesian_pair(&z1 + &w1, &z2 + &w2),
        "idempotent sum = cartesian sum",
    )
}

fn scalar_inverse(rng: &mut SplitMix64, _: u64) -> Outcome {
    let x = random_scalar(rng);
    let class = x.classify();
    let one_zero = x.minus.is_zero() != x.plus.is_zero();
    match class {
        ScalarClass::Invertible => {
            let inv = lib(x.inverse())?;
            ensure(&x * &inv == BicomplexScalar::one(), "x x^-1 = 1")
        }
        ScalarClass::ZeroDivisor => {
            ensure(one_zero, "zero divisor has exactly one zero component")?;
            let killer = if x.minus.is_zero() {
                BicomplexScalar::e1()
            } else {
                BicomplexScalar::e2()
            };
            ensure((&x * &killer).is_zero(), "zero divisor annihilated by opposite unit")?;
            ensure(x.inverse().is_err(), "zero divisor has no inverse")
        }
        ScalarClass::Zero => ensure(x.is_zero() && x.inverse().is_err(), "zero has no inverse"),
    }
}

fn example_pair() -> (ComplexMatrix, ComplexMatrix) {
    (
        ComplexMatrix::from_int_rows(&[&[0, 1, 1], &[0, 0, 1], &[0, 0, 0]]),
        ComplexMatrix::from_int_rows(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]),
    )
}

fn worked_example(_: &mut SplitMix64, _: u64) -> Outcome {
    let (t1, t2) = example_pair();
    ensure(t1.pow(3).map(|m| m.is_zero()).unwrap_or(false), "T1^3 = 0")?;
    ensure(!t1.pow(2).map(|m| m.is_zero()).unwrap_or(true), "T1^2 != 0")?;
    ensure(lib(t1.nilpotency_index())? == Some(3), "index(T1) = 3")?;
    ensure(lib(t2.is_idempotent())?, "T2^2 = T2")?;
    ensure(lib(t2.nilpotency_index())?.is_none(), "T2 not nilpotent")?;
    let t = lib(BicomplexOperator::new(t1, t2))?;
    let report = t.nilpotency();
    ensure(
        !report.is_nilpotent && report.index.is_none(),
        "T = e1 T1 + e2 T2 not nilpotent",
    )?;
    ensure(t.is_singular().both(), "T singular in both components")?;
    let p = t.power(3);
    ensure(p.t1().is_zero() && p.t2() == t.t2(), "T^3 = e1 0 + e2 T2")
}

fn index_theorem(rng: &mut SplitMix64, seed: u64) -> Outcome {
    let n = size(rng, 6);
    let (k1, k2) = (size(rng, n), size(rng, n));
    let a = gen(GenSpec::new(derive_seed(seed, 1), n, GenKind::Nilpotent { index: k1 }))?;
    let b = gen(GenSpec::new(derive_seed(seed, 2), n, GenKind::Nilpotent { index: k2 }))?;
    let m = composite(&a, &b)?;
    let check = || -> Outcome {
        let expected = k1.max(k2);
        let report = lib(m.nilpotency())?;
        ensure(report.index == Some(expected), "index(e1 A + e2 B) = max(k1, k2)")?;
        ensure(
            lib(m.power(expected as u32))?.is_zero(),
            "(e1 A + e2 B)^max(k1, k2) = 0",
        )?;
        ensure(
            !lib(m.power(expected as u32 - 1))?.is_zero(),
            "(e1 A + e2 B)^(index - 1) != 0",
        )?;
        ensure(
            report.minus_index == Some(k1) || report.plus_index == Some(k2),
            "some component attains the index",
        )?;
        ensure(
            report.minus_index == Some(expected) || report.plus_index == Some(expected),
            "some component index equals the composite index",
        )?;
        let (dm, dp) = lib(m.determinants())?;
        ensure(dm.is_zero() && dp.is_zero(), "nilpotent => det(A-) = det(A+) = 0")?;
        ensure(lib(m.is_singular())?.both(), "nilpotent => singular in both components")
    };
    with_document(check(), || {
        instance_document(
            &m,
            seed,
            "nilpotent",
            Certificate::NilpotentIndex(k1),
            Certificate::NilpotentIndex(k2),
        )
    })
}

fn power_decomposition(rng: &mut SplitMix64, seed: u64) -> Outcome {
    let n = size(rng, 5);
    let k = rng.range_i64(0, 8) as u32;
    let a = gen(GenSpec::new(derive_seed(seed, 1), n, GenKind::Arbitrary).with_entry_bound(3))?;
    let b = gen(GenSpec::new(derive_seed(seed, 2), n, GenKind::Arbitrary).with_entry_bound(3))?;
    let t = lib(BicomplexOperator::new(a.clone(), b.clone()))?;
    let check = || -> Outcome {
        let p = t.power(k);
        let mut folded = BicomplexOperator::identity(n);
        for _ in 0..k {
            folded = lib(folded.compose(&t))?;
        }
        ensure(p == folded, "T^k = T∘…∘T (k times)")?;
        ensure(
            p.t1() == &lib(a.pow(k))? && p.t2() == &lib(b.pow(k))?,
            "T^k = e1 T1^k + e2 T2^k",
        )?;
        ensure(
            lib(t.to_matrix().power(k))? == p.to_matrix(),
            "matrix power agrees with operator power",
        )
    };
    with_document(check(), || MatrixDocument::from_operator(&t, Encoding::Idempotent))
}

fn singular_attribution(rng: &mut SplitMix64, seed: u64) -> Outcome {
    let n = size(rng, 6);
    let k = size(rng, n);
    let singular = gen(GenSpec::new(derive_seed(seed, 1), n, GenKind::Nilpotent { index: k }))?;
    let invertible = gen(GenSpec::new(derive_seed(seed, 2), n, GenKind::Invertible))?;
    let minus_singular = rng.below(2) == 0;
    let (m, p) = if minus_singular {
        (&singular, &invertible)
    } else {
        (&invertible, &singular)
    };
    let a = composite(m, p)?;
    let check = || -> Outcome {
        let report = lib(a.is_singular())?;
        ensure(report.is_singular(), "one singular component => singular")?;
        ensure(
            report.minus_singular == minus_singular && report.plus_singular == !minus_singular,
            "singularity attributed to the nilpotent component only",
        )
    };
    with_document(check(), || MatrixDocument::from_matrix(&a, Encoding::Idempotent))
}

fn random_operator(rng: &mut SplitMix64, seed: u64, n: usize) -> std::result::Result<BicomplexOperator, Failure> {
    let mut component = |stream: u64| -> std::result::Result<ComplexMatrix, Failure> {
        let kind = match rng.below(3) {
            0 => GenKind::Nilpotent { index: size(rng, n) },
            1 => GenKind::Idempotent {
                rank: rng.range_i64(0, n as i64) as usize,
            },
            _ => GenKind::Invertible,
        };
        gen(GenSpec::new(derive_seed(seed, stream), n, kind))
    };
    let (a, b) = (component(1)?, component(2)?);
    lib(BicomplexOperator::new(a, b))
}

fn basis_invariance(t: &BicomplexOperator, seed: u64) -> Outcome {
    let p = gen(GenSpec::new(derive_seed(seed, 3), t.dim(), GenKind::Invertible))?;
    let basis = lib(Basis::new(p))?;
    let standard = t.to_matrix();
    let changed = lib(t.matrix_in_basis(&basis))?;
    ensure(
        lib(changed.is_idempotent())? == lib(standard.is_idempotent())?,
        "idempotency independent of basis",
    )?;
    let (a, b) = (lib(changed.nilpotency())?, lib(standard.nilpotency())?);
    ensure(a.is_nilpotent == b.is_nilpotent, "nilpotency independent of basis")?;
    ensure(a == b, "component nilpotency indices independent of basis")?;
    ensure(
        lib(changed.is_singular())? == lib(standard.is_singular())?,
        "singularity independent of basis",
    )?;
    ensure(
        lib(t.matrix_in_basis(&Basis::standard(t.dim())))? == standard,
        "standard basis gives e1 T1 + e2 T2",
    )
}

fn basis_invariance_nilpotent(rng: &mut SplitMix64, seed: u64) -> Outcome {
    let n = size(rng, 6);
    let t = random_operator(rng, seed, n)?;
    with_document(basis_invariance(&t, seed), || {
        MatrixDocument::from_operator(&t, Encoding::Idempotent)
    })
}

fn idempotent_pair(
    rng: &mut SplitMix64,
    seed: u64,
    n: usize,
) -> std::result::Result<(BicomplexMatrix, [usize; 2]), Failure> {
    let (r1, r2) = (rng.range_i64(0, n as i64) as usize, rng.range_i64(0, n as i64) as usize);
    let a = gen(GenSpec::new(derive_seed(seed, 1), n, GenKind::Idempotent { rank: r1 }))?;
    let b = gen(GenSpec::new(derive_seed(seed, 2), n, GenKind::Idempotent { rank: r2 }))?;
    Ok((composite(&a, &b)?, [r1, r2]))
}

fn idempotent_battery(rng: &mut SplitMix64, seed: u64) -> Outcome {
    let n = size(rng, 6);
    let (a, ra) = idempotent_pair(rng, seed, n)?;
    let (b, _) = idempotent_pair(rng, derive_seed(seed, 4), n)?;
    let check = || -> Outcome {
        let idem = |m: &BicomplexMatrix, name: &str| -> Outcome {
            ensure(lib(m.is_idempotent())?, &format!("{name} idempotent"))
        };
        idem(&a, "A")?;
        idem(&lib(a.complement())?, "I - A")?;
        idem(&a.section_e1(), "e1 A + e2 I")?;
        idem(&a.section_e2(), "e1 I + e2 A")?;
        idem(&lib(a.mix(&b))?, "e1 A + e2 B")?;
        idem(&lib(a.complement_section_e1())?, "e1 (I - A) + e2 I")?;
        idem(&lib(a.complement_section_e2())?, "e1 I + e2 (I - A)")?;
        ensure(lib(a.mul(&a))? == a, "A A = A")
    };
    with_document(check(), || {
        instance_document(
            &a,
            seed,
            "idempotent",
            Certificate::IdempotentRank(ra[0]),
            Certificate::IdempotentRank(ra[1]),
        )
    })
}

fn orthogonal_sum(rng: &mut SplitMix64, seed: u64) -> Outcome {
    let n = size(rng, 6);
    let mut side = |stream: u64| {
        let r = rng.range_i64(0, n as i64) as usize;
        let s = rng.range_i64(0, (n - r) as i64) as usize;
        lib(gen_orthogonal_idempotents(
            &GenSpec::new(derive_seed(seed, stream), n, GenKind::Idempotent { rank: r }),
            r,
            s,
        ))
    };
    let ((a1, b1), (a2, b2)) = (side(1)?, side(2)?);
    let (a, b) = (composite(&a1, &a2)?, composite(&b1, &b2)?);
    let check = || -> Outcome {
        ensure(lib(a.mul(&b))?.is_zero() && lib(b.mul(&a))?.is_zero(), "AB = BA = 0")?;
        ensure(lib(a.is_idempotent())? && lib(b.is_idempotent())?, "A, B idempotent")?;
        ensure(lib(lib(a.add(&b))?.is_idempotent())?, "AB = BA = 0 => A + B idempotent")
    };
    with_document(check(), || {
        MatrixDocument::from_matrix(&lib(a.add(&b)).unwrap_or_else(|_| a.clone()), Encoding::Idempotent)
    })
}

fn product_criterion(rng: &mut SplitMix64, seed: u64) -> Outcome {
    let n = size(rng, 5);
    let t = random_operator(rng, seed, n)?;
    let m = t.to_matrix();
    let check = || -> Outcome {
        let squared = lib(m.mul(&m))? == m;
        let components = lib(t.t1().is_idempotent())? && lib(t.t2().is_idempotent())?;
        ensure(squared == components, "A^2 = A <=> A-^2 = A- and A+^2 = A+")?;
        ensure(
            lib(m.is_idempotent())? == squared && t.is_idempotent() == squared,
            "predicates agree with A^2 = A",
        )?;
        ensure((lib(t.compose(&t))? == t) == squared, "T∘T = T <=> A^2 = A")
    };
    with_document(check(), || MatrixDocument::from_operator(&t, Encoding::Idempotent))
}

/// `S∘T` idempotent iff `S₁T₁` and `S₂T₂` are, taken literally: the pair
/// is drawn independently and need not commute.
fn composite_product(rng: &mut SplitMix64, seed: u64) -> Outcome {
    let n = size(rng, 5);
    let (s, _) = idempotent_pair(rng, seed, n)?;
    let (t, _) = idempotent_pair(rng, derive_seed(seed, 5), n)?;
    let (s, t) = (
        lib(BicomplexOperator::from_matrix(s))?,
        lib(BicomplexOperator::from_matrix(t))?,
    );
    let check = || -> Outcome {
        let st = lib(s.compose(&t))?;
        let components =
            lib(lib(s.t1().mul(t.t1()))?.is_idempotent())? && lib(lib(s.t2().mul(t.t2()))?.is_idempotent())?;
        ensure(
            st.is_idempotent() == components,
            "S∘T idempotent <=> S1 T1 and S2 T2 idempotent",
        )
    };
    with_document(check(), || MatrixDocument::from_operator(&s, Encoding::Idempotent))
}

fn basis_invariance_idempotent(rng: &mut SplitMix64, seed: u64) -> Outcome {
    let n = size(rng, 6);
    let (m, _) = idempotent_pair(rng, seed, n)?;
    let t = lib(BicomplexOperator::from_matrix(m))?;
    with_document(basis_invariance(&t, seed), || {
        MatrixDocument::from_operator(&t, Encoding::Idempotent)
    })
}

/// Replays the certificates in a document's metadata and the structural
/// identities that hold for every square matrix. Returns the identities that
/// failed, empty if the document is consistent.
pub fn check_document(doc: &MatrixDocument, decoded: &Decoded) -> Vec<String> {
    let m = decoded.as_bicomplex();
    let mut failed = Vec::new();
    let mut ensure = |ok: bool, identity: String| {
        if !ok {
            failed.push(identity)
        }
    };
    if !m.is_square() {
        return failed;
    }
    let (minus, plus) = (m.minus(), m.plus());
    if let Some(meta) = &doc.metadata {
        for (name, comp, cert) in [
            ("A-", minus, meta.certificate.minus),
            ("A+", plus, meta.certificate.plus),
        ] {
            match cert {
                Certificate::NilpotentIndex(k) => {
                    let zero = comp.pow(k as u32).map(|p| p.is_zero()).unwrap_or(false);
                    ensure(zero, format!("{name}^{k} = 0"));
                    if k > 1 {
                        let nonzero = comp.pow(k as u32 - 1).map(|p| !p.is_zero()).unwrap_or(false);
                        ensure(nonzero, format!("{name}^{} != 0", k - 1));
                    }
                }
                Certificate::IdempotentRank(r) => {
                    let sq = comp.mul(comp).map(|p| &p == comp).unwrap_or(false);
                    ensure(sq, format!("{name}^2 = {name}"));
                    let trace = (0..comp.rows()).fold(RationalComplex::zero(), |acc, i| &acc + comp.get(i, i));
                    ensure(
                        trace == RationalComplex::from(r as i64),
                        format!("trace({name}) = rank {r}"),
                    );
                }
                Certificate::UnitDeterminant(s) => {
                    let det = comp.determinant().ok();
                    ensure(
                        det == Some(RationalComplex::from(s as i64)),
                        format!("det({name}) = {s}"),
                    );
                }
                Certificate::None => {}
            }
        }
        if let (Certificate::NilpotentIndex(k1), Certificate::NilpotentIndex(k2)) =
            (meta.certificate.minus, meta.certificate.plus)
        {
            let idx = m.nilpotency().ok().and_then(|r| r.index);
            ensure(
                idx == Some(k1.max(k2)),
                format!("index(e1 A- + e2 A+) = max({k1}, {k2})"),
            );
        }
    }
    let n = m.shape().0;
    let report = m.nilpotency().expect("square");
    let direct = |c: &ComplexMatrix| (1..=n).find(|&k| c.pow(k as u32).map(|p| p.is_zero()).unwrap_or(false));
    ensure(
        report.minus_index == direct(minus) && report.plus_index == direct(plus),
        "component indices = least vanishing powers".into(),
    );
    if let Some(idx) = report.index {
        ensure(
            m.power(idx as u32).map(|p| p.is_zero()).unwrap_or(false),
            "A^index = 0".into(),
        );
        ensure(
            m.is_singular().map(|s| s.both()).unwrap_or(false),
            "nilpotent => singular in both components".into(),
        );
    }
    let squared = m.mul(&m).map(|p| p == m).unwrap_or(false);
    ensure(
        m.is_idempotent().ok() == Some(squared),
        "is_idempotent <=> A^2 = A".into(),
    );
    failed
}
