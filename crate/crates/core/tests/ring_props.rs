use num::BigRational;
use proptest::prelude::*;
use zrel_core::ring::{rank_over, ExactMatrix, Fp, FpPoly, Poly, RankMethod, ScalarField};

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    proptest::collection::vec(-6i64..=6, 0..=max_deg + 1).prop_map(|c| Poly::from_ints(&c))
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-50i64..=50, 1i64..=9).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn matrix(n: usize, m: usize, deg: usize) -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec(poly(deg), n * m)
        .prop_map(move |v| ExactMatrix::from_fn(n, m, Poly::zero(), |i, j| v[i * m + j].clone()))
}

/// Matrices of rank at most `r`: products of `n x r` and `r x m` factors.
fn low_rank(n: usize, m: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=n.min(m))
        .prop_flat_map(move |r| (matrix(n, r, 1), matrix(r, m, 1)).prop_map(|(a, b)| a.mul(&b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn eval_is_a_ring_map(a in poly(4), b in poly(4), x in rational()) {
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
    }

    #[test]
    fn fp_reduction_is_a_ring_map(a in poly(4), b in poly(4), x in 0u64..7) {
        let p = 7;
        let xv = Fp::new(x, p);
        let r = |q: &Poly| FpPoly::from_poly(q, p).unwrap().eval(xv);
        prop_assert_eq!(r(&(&a * &b)), r(&a).mul(r(&b)));
        prop_assert_eq!(r(&(&a + &b)), r(&a).add(r(&b)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn det_is_multiplicative(a in matrix(4, 4, 3), b in matrix(4, 4, 3)) {
        prop_assert_eq!(a.mul(&b).det(), &a.det() * &b.det());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn symbolic_rank_bounds_specializations(m in low_rank(5, 4), x in rational()) {
        let generic = rank_over(&m, &ScalarField::rational_function_field(), 0).unwrap();
        prop_assert_eq!(&generic.method, &RankMethod::Symbolic);
        let at_x = rank_over(&m, &ScalarField::rationals_at(x), 0).unwrap();
        prop_assert!(at_x.rank <= generic.rank);
        // entries have degree <= 2 and small coefficients; 10^6 exceeds every root bound
        let big = BigRational::from_integer(1_000_003.into());
        let far = rank_over(&m, &ScalarField::rationals_at(big), 0).unwrap();
        prop_assert_eq!(far.rank, generic.rank);
    }
}

#[test]
fn sampled_rank_agrees_on_large_diagonal() {
    let n = 25;
    let m = ExactMatrix::from_fn(n, n, Poly::zero(), |i, j| {
        if i == j && i % 5 != 0 {
            Poly::from_ints(&[-(i as i64), 1])
        } else {
            Poly::zero()
        }
    });
    let r = rank_over(&m, &ScalarField::rational_function_field(), 3).unwrap();
    assert_eq!(r.rank, 20);
    assert!(matches!(r.method, RankMethod::Sampled { .. }));
    assert!(m.det().is_zero());
}
