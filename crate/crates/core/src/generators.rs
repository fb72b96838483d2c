//! Seeded construction of component matrices with certified structure.
//!
//! Structured instances are built as `Q·C·Q⁻¹` where `C` is a canonical
//! form (shift blocks for nilpotents, a 0/1 diagonal for idempotents) and
//! `Q` is a product of elementary row operations: additions of a
//! Gaussian-integer multiple (real and imaginary parts in {-1, 0, 1}) of one
//! row to another, and row swaps. Such `Q` has
//! determinant ±1 and an exact inverse built alongside it. If a draw
//! produces an entry outside `entry_bound` it is redrawn, and after repeated
//! failures the number of operations is halved; zero operations gives `C`
//! itself, which always fits.
//!
//! Every emitted matrix is checked against its certificate before it is
//! returned.
//!
//! The random source is SplitMix64 (`RNG_ALGORITHM`), chosen because it is
//! a fixed, widely documented 64-bit mixer, so corpora are reproducible
//! across implementations.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand_xoshiro::rand_core::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::complex::{Rational, RationalComplex};
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

pub const RNG_ALGORITHM: &str = "splitmix64";

pub const DEFAULT_ENTRY_BOUND: u32 = 10;

const REDRAWS_PER_LEVEL: usize = 8;

/// SplitMix64 (Steele, Lea, Flood 2014) with the bounded draws the
/// generators use. The bounded draws are implemented here rather than via
/// `rand` distributions so the sampling algorithm is pinned.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    inner: rand_xoshiro::SplitMix64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self {
            inner: rand_xoshiro::SplitMix64::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform in `0..n` (`n > 0`), by rejection.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        let zone = u64::MAX - u64::MAX % n;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % n;
            }
        }
    }

    /// Uniform in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        lo + self.below((hi - lo) as u64 + 1) as i64
    }
}

/// Derives an independent sub-seed, e.g. per instance or per component.
pub fn derive_seed(seed: u64, stream: u64) -> u64 {
    let mut rng = SplitMix64::new(seed ^ stream.wrapping_mul(0xD1B5_4A32_D192_ED03));
    rng.next_u64()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GenKind {
    Nilpotent { index: usize },
    Idempotent { rank: usize },
    Invertible,
    Arbitrary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub seed: u64,
    pub n: usize,
    pub kind: GenKind,
    /// Bound on `|numerator|` and denominator of every real and imaginary part.
    pub entry_bound: u32,
    /// Elementary operations composed into the conjugator.
    pub mixing_steps: usize,
}

impl GenSpec {
    pub fn new(seed: u64, n: usize, kind: GenKind) -> Self {
        Self {
            seed,
            n,
            kind,
            entry_bound: DEFAULT_ENTRY_BOUND,
            mixing_steps: n,
        }
    }

    pub fn with_entry_bound(mut self, bound: u32) -> Self {
        self.entry_bound = bound;
        self
    }

    pub fn with_mixing_steps(mut self, steps: usize) -> Self {
        self.mixing_steps = steps;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::BadSpec("n must be at least 1".into()));
        }
        if self.entry_bound == 0 {
            return Err(Error::BadSpec("entry_bound must be positive".into()));
        }
        match self.kind {
            GenKind::Nilpotent { index } if index == 0 || index > self.n => Err(Error::BadSpec(format!(
                "nilpotency index {index} outside 1..={}",
                self.n
            ))),
            GenKind::Idempotent { rank } if rank > self.n => {
                Err(Error::BadSpec(format!("rank {rank} exceeds n = {}", self.n)))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    NilpotentIndex(usize),
    IdempotentRank(usize),
    /// Determinant, always 1 or −1.
    UnitDeterminant(i8),
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub matrix: ComplexMatrix,
    pub certificate: Certificate,
}

/// Unimodular `Q` with its exact inverse.
#[derive(Clone, Debug)]
pub struct Conjugator {
    pub q: ComplexMatrix,
    pub q_inv: ComplexMatrix,
    pub det_sign: i8,
}

impl Conjugator {
    pub fn identity(n: usize) -> Self {
        Self {
            q: ComplexMatrix::identity(n),
            q_inv: ComplexMatrix::identity(n),
            det_sign: 1,
        }
    }

    fn random(rng: &mut SplitMix64, n: usize, steps: usize) -> Self {
        let mut c = Self::identity(n);
        if n < 2 {
            return c;
        }
        for _ in 0..steps {
            let i = rng.below(n as u64) as usize;
            let j = (i + 1 + rng.below(n as u64 - 1) as usize) % n;
            if rng.below(5) == 0 {
                c.swap(i, j);
            } else {
                let mult = loop {
                    let (re, im) = (rng.range_i64(-1, 1), rng.range_i64(-1, 1));
                    if re != 0 || im != 0 {
                        break RationalComplex::from_ints(re, im);
                    }
                };
                c.add_row_multiple(i, j, &mult);
            }
        }
        c
    }

    /// `row_i(Q) += m·row_j(Q)`, `col_j(Q⁻¹) −= m·col_i(Q⁻¹)`.
    fn add_row_multiple(&mut self, i: usize, j: usize, m: &RationalComplex) {
        let n = self.q.rows();
        for col in 0..n {
            let v = self.q.get(i, col) + &(m * self.q.get(j, col));
            self.q.set(i, col, v);
        }
        for row in 0..n {
            let v = self.q_inv.get(row, j) - &(m * self.q_inv.get(row, i));
            self.q_inv.set(row, j, v);
        }
    }

    fn swap(&mut self, i: usize, j: usize) {
        let n = self.q.rows();
        for col in 0..n {
            let a = self.q.get(i, col).clone();
            let b = self.q.get(j, col).clone();
            self.q.set(i, col, b);
            self.q.set(j, col, a);
        }
        for row in 0..n {
            let a = self.q_inv.get(row, i).clone();
            let b = self.q_inv.get(row, j).clone();
            self.q_inv.set(row, i, b);
            self.q_inv.set(row, j, a);
        }
        self.det_sign = -self.det_sign;
    }

    /// `Q·C·Q⁻¹`.
    pub fn apply(&self, c: &ComplexMatrix) -> ComplexMatrix {
        self.q.mul_unchecked(c).mul_unchecked(&self.q_inv)
    }
}

/// True when every real and imaginary part has `|numerator| ≤ bound` and
/// `denominator ≤ bound`.
pub fn within_bound(m: &ComplexMatrix, bound: u32) -> bool {
    let b = BigInt::from(bound);
    let ok = |r: &Rational| r.numer().abs() <= b && *r.denom() <= b;
    m.entries().iter().all(|z| ok(&z.re) && ok(&z.im))
}

/// Draws conjugators until every matrix in `build(Q)` fits the bound,
/// halving the number of operations after repeated misses.
fn bounded_conjugation<T>(
    rng: &mut SplitMix64,
    spec: &GenSpec,
    build: impl Fn(&Conjugator) -> T,
    fits: impl Fn(&T) -> bool,
) -> (T, Conjugator) {
    let mut steps = spec.mixing_steps;
    loop {
        for _ in 0..REDRAWS_PER_LEVEL {
            let c = Conjugator::random(rng, spec.n, steps);
            let out = build(&c);
            if fits(&out) {
                return (out, c);
            }
            if steps == 0 {
                break;
            }
        }
        if steps == 0 {
            let c = Conjugator::identity(spec.n);
            return (build(&c), c);
        }
        steps /= 2;
    }
}

/// Direct sum of upper shift blocks with the given sizes.
pub fn shift_blocks(sizes: &[usize]) -> ComplexMatrix {
    let n: usize = sizes.iter().sum();
    let mut m = ComplexMatrix::zeros(n, n);
    let mut offset = 0;
    for &s in sizes {
        for r in 0..s.saturating_sub(1) {
            m.set(offset + r, offset + r + 1, RationalComplex::one());
        }
        offset += s;
    }
    m
}

/// `diag(0,…,0, 1,…,1, 0,…,0)` with ones on `start..start + count`.
fn unit_diagonal(n: usize, start: usize, count: usize) -> ComplexMatrix {
    let diag: Vec<RationalComplex> = (0..n)
        .map(|i| RationalComplex::from((start <= i && i < start + count) as i64))
        .collect();
    ComplexMatrix::diagonal(&diag)
}

fn rank_via_trace(m: &ComplexMatrix) -> Option<usize> {
    let mut tr = RationalComplex::zero();
    for i in 0..m.rows() {
        tr += m.get(i, i);
    }
    (tr.im.is_zero() && tr.re.is_integer() && !tr.re.is_negative())
        .then(|| tr.re.to_integer().try_into().ok())
        .flatten()
}

fn certify(m: &ComplexMatrix, cert: Certificate) -> Result<()> {
    let ok = match cert {
        Certificate::NilpotentIndex(k) => m.nilpotency_index()? == Some(k),
        // for an idempotent the rank equals the trace
        Certificate::IdempotentRank(r) => m.is_idempotent()? && rank_via_trace(m) == Some(r),
        Certificate::UnitDeterminant(s) => m.determinant()? == RationalComplex::from(s as i64),
        Certificate::None => true,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::BadSpec(format!("certificate {cert:?} failed verification")))
    }
}

/// Nilpotent `n×n` matrix of index exactly `k`.
pub fn gen_nilpotent(spec: &GenSpec) -> Result<Generated> {
    spec.validate()?;
    let GenKind::Nilpotent { index: k } = spec.kind else {
        return Err(Error::BadSpec("gen_nilpotent needs kind Nilpotent".into()));
    };
    let mut rng = SplitMix64::new(spec.seed);
    let mut sizes = vec![k];
    let mut remaining = spec.n - k;
    while remaining > 0 {
        let s = 1 + rng.below(remaining.min(k) as u64) as usize;
        sizes.push(s);
        remaining -= s;
    }
    let canonical = shift_blocks(&sizes);
    let (matrix, _) = bounded_conjugation(
        &mut rng,
        spec,
        |c| c.apply(&canonical),
        |m| within_bound(m, spec.entry_bound),
    );
    let certificate = Certificate::NilpotentIndex(k);
    certify(&matrix, certificate)?;
    Ok(Generated { matrix, certificate })
}

/// Idempotent `n×n` matrix of rank `r`.
pub fn gen_idempotent(spec: &GenSpec) -> Result<Generated> {
    spec.validate()?;
    let GenKind::Idempotent { rank } = spec.kind else {
        return Err(Error::BadSpec("gen_idempotent needs kind Idempotent".into()));
    };
    let mut rng = SplitMix64::new(spec.seed);
    let canonical = unit_diagonal(spec.n, 0, rank);
    let (matrix, _) = bounded_conjugation(
        &mut rng,
        spec,
        |c| c.apply(&canonical),
        |m| within_bound(m, spec.entry_bound),
    );
    let certificate = Certificate::IdempotentRank(rank);
    certify(&matrix, certificate)?;
    Ok(Generated { matrix, certificate })
}

/// Idempotents `A` (rank `r`) and `B` (rank `s`) on complementary ranges, so
/// `AB = BA = 0`. Requires `r + s ≤ n`.
pub fn gen_orthogonal_idempotents(spec: &GenSpec, r: usize, s: usize) -> Result<(ComplexMatrix, ComplexMatrix)> {
    spec.validate()?;
    if r + s > spec.n {
        return Err(Error::BadSpec(format!("ranks {r} + {s} exceed n = {}", spec.n)));
    }
    let mut rng = SplitMix64::new(spec.seed);
    let (da, db) = (unit_diagonal(spec.n, 0, r), unit_diagonal(spec.n, r, s));
    let ((a, b), _) = bounded_conjugation(
        &mut rng,
        spec,
        |c| (c.apply(&da), c.apply(&db)),
        |(a, b)| within_bound(a, spec.entry_bound) && within_bound(b, spec.entry_bound),
    );
    certify(&a, Certificate::IdempotentRank(r))?;
    certify(&b, Certificate::IdempotentRank(s))?;
    Ok((a, b))
}

/// Product of elementary matrices; determinant ±1.
pub fn gen_invertible(spec: &GenSpec) -> Result<Generated> {
    spec.validate()?;
    if spec.kind != GenKind::Invertible {
        return Err(Error::BadSpec("gen_invertible needs kind Invertible".into()));
    }
    let mut rng = SplitMix64::new(spec.seed);
    let (matrix, c) = bounded_conjugation(&mut rng, spec, |c| c.q.clone(), |m| within_bound(m, spec.entry_bound));
    let certificate = Certificate::UnitDeterminant(c.det_sign);
    certify(&matrix, certificate)?;
    Ok(Generated { matrix, certificate })
}

/// Entries with real and imaginary parts `p/q`, `|p| ≤ bound`, `1 ≤ q ≤ bound`.
pub fn gen_arbitrary(spec: &GenSpec) -> Result<Generated> {
    spec.validate()?;
    if spec.kind != GenKind::Arbitrary {
        return Err(Error::BadSpec("gen_arbitrary needs kind Arbitrary".into()));
    }
    let mut rng = SplitMix64::new(spec.seed);
    let b = spec.entry_bound as i64;
    let part = |rng: &mut SplitMix64| {
        let p = rng.range_i64(-b, b);
        let q = rng.range_i64(1, b);
        Rational::new(BigInt::from(p), BigInt::from(q))
    };
    let matrix = ComplexMatrix::from_fn(spec.n, spec.n, |_, _| {
        let re = part(&mut rng);
        let im = part(&mut rng);
        RationalComplex::new(re, im)
    });
    Ok(Generated {
        matrix,
        certificate: Certificate::None,
    })
}

pub fn generate(spec: &GenSpec) -> Result<Generated> {
    match spec.kind {
        GenKind::Nilpotent { .. } => gen_nilpotent(spec),
        GenKind::Idempotent { .. } => gen_idempotent(spec),
        GenKind::Invertible => gen_invertible(spec),
        GenKind::Arbitrary => gen_arbitrary(spec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        // first outputs for seed 0 from the reference implementation
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn canonical_shift_block() {
        let spec = GenSpec::new(1, 3, GenKind::Nilpotent { index: 3 }).with_mixing_steps(0);
        let g = gen_nilpotent(&spec).unwrap();
        assert_eq!(
            g.matrix,
            ComplexMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]])
        );
        assert!(g.matrix.pow(3).unwrap().is_zero());
    }

    #[test]
    fn index_one_is_zero() {
        for seed in 0..5 {
            let g = gen_nilpotent(&GenSpec::new(seed, 3, GenKind::Nilpotent { index: 1 })).unwrap();
            assert!(g.matrix.is_zero());
        }
    }

    #[test]
    fn nilpotent_power_oracle() {
        for seed in 0..40 {
            for n in 1..=5 {
                for k in 1..=n {
                    let g = gen_nilpotent(&GenSpec::new(seed, n, GenKind::Nilpotent { index: k })).unwrap();
                    let m = &g.matrix;
                    // repeated multiplication, independent of pow's squaring
                    let mut p = ComplexMatrix::identity(n);
                    for _ in 0..k - 1 {
                        p = p.mul(m).unwrap();
                    }
                    assert!(!p.is_zero(), "M^(k-1) vanished: seed {seed} n {n} k {k}");
                    assert!(p.mul(m).unwrap().is_zero());
                    assert!(within_bound(m, DEFAULT_ENTRY_BOUND));
                }
            }
        }
    }

    #[test]
    fn idempotent_examples() {
        let g = gen_idempotent(&GenSpec::new(3, 4, GenKind::Idempotent { rank: 4 })).unwrap();
        assert!(g.matrix.is_identity());
        let g = gen_idempotent(&GenSpec::new(3, 4, GenKind::Idempotent { rank: 0 })).unwrap();
        assert!(g.matrix.is_zero());
        for seed in 0..30 {
            let g = gen_idempotent(&GenSpec::new(seed, 5, GenKind::Idempotent { rank: 2 })).unwrap();
            assert_eq!(g.matrix.mul(&g.matrix).unwrap(), g.matrix);
        }
    }

    #[test]
    fn conjugation_mixes_most_draws() {
        let mixed = (0..50)
            .filter(|&seed| {
                let g = gen_idempotent(&GenSpec::new(seed, 4, GenKind::Idempotent { rank: 2 })).unwrap();
                !g.matrix
                    .entries()
                    .iter()
                    .enumerate()
                    .all(|(k, z)| k / 4 == k % 4 || z.is_zero())
            })
            .count();
        assert!(mixed >= 40, "only {mixed}/50 draws left the diagonal");
    }

    #[test]
    fn invertible_examples() {
        let g = gen_invertible(&GenSpec::new(9, 4, GenKind::Invertible).with_mixing_steps(0)).unwrap();
        assert!(g.matrix.is_identity());
        for seed in 0..30 {
            let g = gen_invertible(&GenSpec::new(seed, 5, GenKind::Invertible).with_mixing_steps(10)).unwrap();
            let det = g.matrix.determinant().unwrap();
            assert!(det == RationalComplex::one() || det == -RationalComplex::one());
            assert!(g.matrix.inverse().unwrap().is_some());
        }
    }

    #[test]
    fn orthogonal_pair() {
        for seed in 0..20 {
            let (a, b) =
                gen_orthogonal_idempotents(&GenSpec::new(seed, 5, GenKind::Idempotent { rank: 2 }), 2, 2).unwrap();
            assert!(a.mul(&b).unwrap().is_zero());
            assert!(b.mul(&a).unwrap().is_zero());
            assert!(a.add(&b).unwrap().is_idempotent().unwrap());
        }
        assert!(gen_orthogonal_idempotents(&GenSpec::new(0, 3, GenKind::Idempotent { rank: 2 }), 2, 2).is_err());
    }

    #[test]
    fn determinism() {
        for kind in [
            GenKind::Nilpotent { index: 3 },
            GenKind::Idempotent { rank: 2 },
            GenKind::Invertible,
            GenKind::Arbitrary,
        ] {
            let spec = GenSpec::new(42, 4, kind);
            assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
        }
        let a = generate(&GenSpec::new(1, 4, GenKind::Arbitrary)).unwrap();
        let b = generate(&GenSpec::new(2, 4, GenKind::Arbitrary)).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn bad_specs() {
        let bad = [
            GenSpec::new(0, 3, GenKind::Nilpotent { index: 0 }),
            GenSpec::new(0, 3, GenKind::Nilpotent { index: 4 }),
            GenSpec::new(0, 3, GenKind::Idempotent { rank: 4 }),
            GenSpec::new(0, 0, GenKind::Arbitrary),
            GenSpec::new(0, 3, GenKind::Arbitrary).with_entry_bound(0),
        ];
        for spec in bad {
            assert!(matches!(generate(&spec), Err(Error::BadSpec(_))), "{spec:?}");
        }
        assert!(gen_nilpotent(&GenSpec::new(0, 3, GenKind::Arbitrary)).is_err());
    }

    #[test]
    fn arbitrary_respects_bound() {
        let g = gen_arbitrary(&GenSpec::new(5, 6, GenKind::Arbitrary).with_entry_bound(3)).unwrap();
        assert!(within_bound(&g.matrix, 3));
    }
}
