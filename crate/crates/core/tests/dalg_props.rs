use num::BigInt;
use proptest::prelude::*;
use zrel_core::dalg::{basis, dim_formula};
use zrel_core::{Algebra, AlgebraElement, Poly, ZStablePartition};

fn bell(n: usize) -> u64 {
    // Bell triangle
    let mut row = vec![1u64];
    for _ in 1..=n {
        let mut next = vec![*row.last().unwrap()];
        for v in &row {
            next.push(next.last().unwrap() + v);
        }
        row = next;
    }
    row[0]
}

#[test]
fn enumeration_matches_formula() {
    for alg in Algebra::ALL {
        for k in 1..=3 {
            let n = basis(alg, k).unwrap().len();
            assert_eq!(dim_formula(alg, k).unwrap(), BigInt::from(n), "{alg} k={k}");
        }
    }
    assert_eq!(basis(Algebra::Z2Rel, 3).unwrap().len(), 6841);
    for k in 1..=3 {
        assert_eq!(
            basis(Algebra::Partition, k).unwrap().len() as u64,
            bell(2 * k)
        );
    }
}

#[test]
fn subalgebras_are_closed() {
    for alg in [Algebra::Signed, Algebra::Partition] {
        let b = basis(alg, 2).unwrap();
        for d1 in &b {
            for d2 in &b {
                let a = AlgebraElement::from_diagram(alg, d1.clone()).unwrap();
                let c = AlgebraElement::from_diagram(alg, d2.clone()).unwrap();
                let p = a.multiply(&c).unwrap();
                assert!(p.is_closed(), "{alg}: {d1} * {d2}");
                assert_eq!(p.terms().len(), 1);
            }
        }
    }
}

#[test]
fn identity_is_neutral() {
    for alg in Algebra::ALL {
        let id = AlgebraElement::identity(alg, 2);
        for d in basis(alg, 2).unwrap() {
            let a = AlgebraElement::from_diagram(alg, d).unwrap();
            assert_eq!(id.multiply(&a).unwrap(), a);
            assert_eq!(a.multiply(&id).unwrap(), a);
        }
    }
}

fn element(alg: Algebra, k: usize) -> impl Strategy<Value = AlgebraElement> {
    let b: Vec<ZStablePartition> = basis(alg, k).unwrap();
    let n = b.len();
    proptest::collection::vec((0..n, proptest::collection::vec(-3i64..=3, 1..=3)), 1..=3).prop_map(
        move |terms| {
            let mut out = AlgebraElement::zero(alg, k);
            for (i, c) in terms {
                let t = AlgebraElement::term(alg, b[i].clone(), Poly::from_ints(&c)).unwrap();
                out = out.add(&t).unwrap();
            }
            out
        },
    )
}

fn algebra() -> impl Strategy<Value = Algebra> {
    prop_oneof![
        Just(Algebra::Z2Rel),
        Just(Algebra::Signed),
        Just(Algebra::Partition)
    ]
}

fn triple() -> impl Strategy<Value = (AlgebraElement, AlgebraElement, AlgebraElement)> {
    algebra().prop_flat_map(|alg| (element(alg, 2), element(alg, 2), element(alg, 2)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn associative((a, b, c) in triple()) {
        prop_assert_eq!(
            a.multiply(&b).unwrap().multiply(&c).unwrap(),
            a.multiply(&b.multiply(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn star_is_a_linear_anti_involution((a, b, _) in triple(), c in proptest::collection::vec(-3i64..=3, 1..=3)) {
        prop_assert_eq!(a.star().star(), a.clone());
        let p = Poly::from_ints(&c);
        prop_assert_eq!(a.add(&b.scale(&p)).unwrap().star(), a.star().add(&b.star().scale(&p)).unwrap());
        prop_assert_eq!(a.multiply(&b).unwrap().star(), b.star().multiply(&a.star()).unwrap());
    }

    #[test]
    fn distributive((a, b, c) in triple()) {
        prop_assert_eq!(
            a.multiply(&b.add(&c).unwrap()).unwrap(),
            a.multiply(&b).unwrap().add(&a.multiply(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn json_roundtrip((a, _, _) in triple()) {
        prop_assert_eq!(AlgebraElement::from_json(&a.to_json()).unwrap(), a);
    }
}
