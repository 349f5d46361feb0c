use proptest::prelude::*;
use zrel_core::dalg::basis;
use zrel_core::gcell::{GroupElem, LayerElement, Perm, WreathElement};
use zrel_core::tabular::{decompose, phi, reconstruct, HalfDiagram, TableDatum};
use zrel_core::zpart::{compose, Sign, Vertex};
use zrel_core::{Algebra, ZStablePartition};

fn diagram(blocks: Vec<Vec<Vertex>>, k: usize) -> ZStablePartition {
    ZStablePartition::canonicalize(blocks, k, 2).unwrap()
}

#[test]
fn decompose_examples() {
    let (top, bottom, g) = decompose(&ZStablePartition::identity(1)).unwrap();
    assert_eq!(top, bottom);
    assert_eq!((top.s1(), top.s2()), (1, 0));
    assert_eq!(g, LayerElement::identity(1, 0));

    let sign = diagram(
        vec![
            vec![Vertex::top(1, Sign::E), Vertex::bottom(1, Sign::G)],
            vec![Vertex::top(1, Sign::G), Vertex::bottom(1, Sign::E)],
        ],
        1,
    );
    let (_, _, g) = decompose(&sign).unwrap();
    assert_eq!(
        g,
        LayerElement::new(WreathElement::sign_at(1, 0), Perm::identity(0))
    );

    let full = diagram(
        vec![vec![
            Vertex::top(1, Sign::E),
            Vertex::top(1, Sign::G),
            Vertex::bottom(1, Sign::E),
            Vertex::bottom(1, Sign::G),
        ]],
        1,
    );
    let (top, bottom, g) = decompose(&full).unwrap();
    assert_eq!((top.s1(), top.s2(), bottom.s2()), (0, 1, 1));
    assert_eq!(g, LayerElement::identity(0, 1));
}

#[test]
fn roundtrip_on_every_basis() {
    for alg in Algebra::ALL {
        for k in 1..=2 {
            for d in basis(alg, k).unwrap() {
                let (t, b, g) = decompose(&d).unwrap();
                assert_eq!(reconstruct(&t, &b, &g).unwrap(), d);
            }
        }
    }
    let (t, _, _) = decompose(&ZStablePartition::identity(1)).unwrap();
    let (_, b, g) = decompose(&ZStablePartition::singletons(1, 2)).unwrap();
    assert!(reconstruct(&t, &b, &g).is_err());
}

#[test]
fn phi_examples() {
    let singles = ZStablePartition::singletons(1, 1);
    let p = HalfDiagram::new(singles, vec![0], vec![]).unwrap();
    assert_eq!(
        phi(&p, &p).unwrap(),
        Some((0, LayerElement::identity(1, 0)))
    );

    let block = ZStablePartition::canonicalize(
        vec![vec![Vertex::top(1, Sign::E), Vertex::top(1, Sign::G)]],
        1,
        1,
    )
    .unwrap();
    let z = HalfDiagram::new(block, vec![], vec![0]).unwrap();
    assert_eq!(
        phi(&z, &z).unwrap(),
        Some((0, LayerElement::identity(0, 1)))
    );

    let singles = ZStablePartition::singletons(2, 1);
    let on1 = HalfDiagram::new(singles.clone(), vec![0], vec![]).unwrap();
    let on2 = HalfDiagram::new(singles, vec![2], vec![]).unwrap();
    assert_eq!(phi(&on1, &on2).unwrap(), None);
}

#[test]
fn phi_is_symmetric_up_to_inversion() {
    for alg in Algebra::ALL {
        for k in 1..=2 {
            let t = TableDatum::new(alg, k).unwrap();
            for data in t.indices() {
                for p in &data.halves {
                    for q in &data.halves {
                        let pq = phi(p, q).unwrap();
                        let qp = phi(q, p).unwrap();
                        assert_eq!(qp, pq.map(|(l, g)| (l, g.inverse())), "{p} / {q}");
                    }
                }
            }
        }
    }
}

fn pair(k: usize) -> impl Strategy<Value = (Algebra, ZStablePartition, ZStablePartition)> {
    prop_oneof![
        Just(Algebra::Z2Rel),
        Just(Algebra::Signed),
        Just(Algebra::Partition)
    ]
    .prop_flat_map(move |alg| {
        let b = basis(alg, k).unwrap();
        let n = b.len();
        (Just(alg), 0..n, 0..n).prop_map(move |(a, i, j)| (a, b[i].clone(), b[j].clone()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn lower_ideals_are_ideals((alg, a, b) in pair(2)) {
        let t = TableDatum::new(alg, 2).unwrap();
        let idx = |d: &ZStablePartition| t.indices()[t.locate(d).unwrap().index].index;
        let (ab, _) = compose(&a, &b).unwrap();
        for side in [idx(&a), idx(&b)] {
            prop_assert!(idx(&ab) == side || idx(&ab).below(&side));
        }
    }
}
