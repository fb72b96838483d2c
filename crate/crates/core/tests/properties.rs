//! Algebraic invariants on random inputs.

use bicomplex::generators::{gen_idempotent, gen_invertible, gen_nilpotent, GenKind, GenSpec};
use bicomplex::{
    rational, Basis, BicomplexMatrix, BicomplexOperator, BicomplexScalar, BicomplexVector, ComplexMatrix,
    RationalComplex,
};
use proptest::prelude::*;

fn complex() -> impl Strategy<Value = RationalComplex> {
    (-9i64..=9, 1i64..=6, -9i64..=9, 1i64..=6)
        .prop_map(|(a, b, c, d)| RationalComplex::new(rational(a, b), rational(c, d)))
}

fn scalar() -> impl Strategy<Value = BicomplexScalar> {
    (complex(), complex()).prop_map(|(m, p)| BicomplexScalar::new(m, p))
}

fn matrix(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    proptest::collection::vec(complex(), n * n).prop_map(move |v| ComplexMatrix::new(n, n, v).unwrap())
}

fn operator(n: usize) -> impl Strategy<Value = BicomplexOperator> {
    (matrix(n), matrix(n)).prop_map(|(a, b)| BicomplexOperator::new(a, b).unwrap())
}

fn vector(n: usize) -> impl Strategy<Value = BicomplexVector> {
    proptest::collection::vec(scalar(), n).prop_map(BicomplexVector::new)
}

/// `(z1 + i2 z2)(w1 + i2 w2)` in cartesian coordinates.
fn cartesian_mul(x: &BicomplexScalar, y: &BicomplexScalar) -> BicomplexScalar {
    let ((z1, z2), (w1, w2)) = (x.to_cartesian_pair(), y.to_cartesian_pair());
    BicomplexScalar::from_cartesian_pair(&(&z1 * &w1) - &(&z2 * &w2), &(&z1 * &w2) + &(&z2 * &w1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_ring_laws(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &(-&x), BicomplexScalar::zero());
        prop_assert_eq!(&x * &BicomplexScalar::one(), x.clone());
    }

    #[test]
    fn idempotent_product_matches_cartesian(x in scalar(), y in scalar()) {
        prop_assert_eq!(&x * &y, cartesian_mul(&x, &y));
    }

    #[test]
    fn text_forms_round_trip(x in scalar()) {
        prop_assert_eq!(x.to_string().parse::<BicomplexScalar>().unwrap(), x.clone());
        prop_assert_eq!(x.to_cartesian_string().parse::<BicomplexScalar>().unwrap(), x);
    }

    #[test]
    fn matrix_ring_laws(a in matrix(3), b in matrix(3), c in matrix(3), d in matrix(3)) {
        let x = BicomplexMatrix::compose(a.clone(), b.clone()).unwrap();
        let y = BicomplexMatrix::compose(c.clone(), d.clone()).unwrap();
        let z = BicomplexMatrix::compose(b, c).unwrap();
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        prop_assert_eq!(
            x.mul(&y.add(&z).unwrap()).unwrap(),
            x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap()
        );
        let (z1, z2) = x.to_cartesian();
        prop_assert_eq!(BicomplexMatrix::from_cartesian(&z1, &z2).unwrap(), x);
    }

    #[test]
    fn scalar_mul_is_entrywise(a in matrix(2), b in matrix(2), s in scalar()) {
        let x = BicomplexMatrix::compose(a, b).unwrap();
        let scaled = x.scalar_mul(&s);
        for i in 0..2 {
            for j in 0..2 {
                prop_assert_eq!(scaled.entry(i, j), &s * &x.entry(i, j));
            }
        }
    }

    #[test]
    fn apply_respects_composition(s in operator(3), t in operator(3), v in vector(3), w in vector(3)) {
        prop_assert_eq!(
            s.compose(&t).unwrap().apply(&v).unwrap(),
            s.apply(&t.apply(&v).unwrap()).unwrap()
        );
        prop_assert_eq!(
            t.apply(&v.add(&w).unwrap()).unwrap(),
            t.apply(&v).unwrap().add(&t.apply(&w).unwrap()).unwrap()
        );
        let (vm, vp) = v.split();
        let (rm, rp) = t.apply(&v).unwrap().split();
        prop_assert_eq!(rm, t.t1().mul_vec(&vm).unwrap());
        prop_assert_eq!(rp, t.t2().mul_vec(&vp).unwrap());
    }

    #[test]
    fn powers_equal_matches_power(s in operator(2), t in operator(2), k in 1u32..5) {
        prop_assert_eq!(s.powers_equal(&t, k).unwrap(), s.power(k) == t.power(k));
        prop_assert!(t.powers_equal(&t, k).unwrap());
    }

    #[test]
    fn inverse_scalar(x in scalar()) {
        match x.inverse() {
            Ok(inv) => prop_assert_eq!(&x * &inv, BicomplexScalar::one()),
            Err(_) => prop_assert!(x.minus.is_zero() || x.plus.is_zero()),
        }
    }

    #[test]
    fn transfer_theorems_under_basis_change(seed in any::<u64>(), n in 1usize..=5, k in 1usize..=5, r in 0usize..=5) {
        let k = k.min(n);
        let r = r.min(n);
        let nil = gen_nilpotent(&GenSpec::new(seed, n, GenKind::Nilpotent { index: k })).unwrap().matrix;
        let idem = gen_idempotent(&GenSpec::new(seed ^ 1, n, GenKind::Idempotent { rank: r })).unwrap().matrix;
        let p = gen_invertible(&GenSpec::new(seed ^ 2, n, GenKind::Invertible)).unwrap().matrix;
        let basis = Basis::new(p).unwrap();
        let t = BicomplexOperator::new(nil, idem).unwrap();
        let changed = t.matrix_in_basis(&basis).unwrap();
        prop_assert_eq!(changed.nilpotency().unwrap(), t.nilpotency());
        prop_assert_eq!(changed.is_idempotent().unwrap(), t.is_idempotent());
        prop_assert_eq!(changed.is_singular().unwrap(), t.is_singular());
        // T = 0 iff both components vanish
        let report = t.nilpotency();
        prop_assert_eq!(report.minus_index, Some(k));
        prop_assert_eq!(t.is_zero(), t.t1().is_zero() && t.t2().is_zero());
    }
}
