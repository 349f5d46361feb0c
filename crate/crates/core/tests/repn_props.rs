use num::BigRational;
use proptest::prelude::*;
use zrel_core::dalg::basis;
use zrel_core::repn::{irreducible_table, p_restricted, radical_and_irreducible, CellModule};
use zrel_core::ring::{ExactMatrix, XValue};
use zrel_core::{Algebra, AlgebraElement, CellLabel, Poly, ScalarField, TableDatum};

#[test]
fn gram_matrices_are_symmetric() {
    for alg in Algebra::ALL {
        for k in 1..=2 {
            let t = TableDatum::new(alg, k).unwrap();
            for l in t.labels() {
                let g = CellModule::new(&t, &l).unwrap().gram().unwrap();
                assert!(g.is_symmetric(), "{alg} k={k} {l}");
            }
        }
    }
}

#[test]
fn module_sizes_follow_the_label() {
    let t = TableDatum::new(Algebra::Z2Rel, 1).unwrap();
    let dims: Vec<(String, usize)> = t
        .labels()
        .iter()
        .map(|l| (l.to_label_string(), CellModule::new(&t, l).unwrap().dim()))
        .collect();
    assert_eq!(
        dims,
        vec![
            ("0,0,0,0,0,0".to_string(), 2),
            ("1,0,1,0,0,1".to_string(), 1),
            ("2,1,0,0,1,0".to_string(), 1),
            ("2,1,0,1,0,0".to_string(), 1),
        ]
    );
    assert!(t
        .find_label(&CellLabel::parse("2,1,0,1,1,0").unwrap())
        .is_err());
}

#[test]
fn diagonal_of_unmarked_halves() {
    // with nothing marked, Phi(S, S) = x^(number of components of S)
    for alg in Algebra::ALL {
        for k in 1..=2 {
            let t = TableDatum::new(alg, k).unwrap();
            let l = CellLabel::parse("0,0,0,0,0,0").unwrap();
            let w = CellModule::new(&t, &l).unwrap();
            let g = w.gram().unwrap();
            for i in 0..w.dim() {
                let comps = w.half(i).base().num_components();
                assert_eq!(g.entries.get(i, i), &Poly::x_pow(comps as u32));
            }
        }
    }
}

#[test]
fn gram_csv_has_one_line_per_row() {
    let w =
        zrel_core::repn::cell_module(&CellLabel::parse("0,0,0,0,0,0").unwrap(), Algebra::Z2Rel, 2)
            .unwrap();
    let csv = w.gram().unwrap().to_csv();
    assert_eq!(csv.lines().count(), w.dim());
}

#[test]
fn characteristic_p_matches_restriction() {
    for p in [3u64, 5] {
        for x in 1..p {
            let field =
                ScalarField::prime(p, XValue::Value(BigRational::from_integer(x.into()))).unwrap();
            for alg in Algebra::ALL {
                let t = TableDatum::new(alg, 1).unwrap();
                for l in t.labels() {
                    let w = CellModule::new(&t, &l).unwrap();
                    let r = radical_and_irreducible(&w, &field, 0).unwrap();
                    assert_eq!(r.rank > 0, p_restricted(&l, p), "{alg} {l} p={p} x={x}");
                }
            }
        }
    }
    let f = ScalarField::prime(3, XValue::Generic).unwrap();
    let table = irreducible_table(Algebra::Z2Rel, 2, &f, 0).unwrap();
    assert_eq!(table.sum_dim_d_squared, 164);
    assert!(table.rows.iter().all(|r| r.p_restricted == Some(true)));
}

fn matrix_mul(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    a.mul(b)
}

fn case() -> impl Strategy<Value = (Algebra, usize, usize, usize, usize)> {
    (
        prop_oneof![
            Just(Algebra::Z2Rel),
            Just(Algebra::Signed),
            Just(Algebra::Partition)
        ],
        1usize..=2,
    )
        .prop_flat_map(|(alg, k)| {
            let n = basis(alg, k).unwrap().len();
            let labels = TableDatum::new(alg, k).unwrap().labels().len();
            (Just(alg), Just(k), 0..n, 0..n, 0..labels)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn action_is_a_representation((alg, k, i, j, l) in case()) {
        let t = TableDatum::new(alg, k).unwrap();
        let b = basis(alg, k).unwrap();
        let label = &t.labels()[l];
        let w = CellModule::new(&t, label).unwrap();
        let a = AlgebraElement::from_diagram(alg, b[i].clone()).unwrap();
        let c = AlgebraElement::from_diagram(alg, b[j].clone()).unwrap();
        let ma = w.action_matrix(&a).unwrap();
        let mc = w.action_matrix(&c).unwrap();
        prop_assert_eq!(w.action_matrix(&a.multiply(&c).unwrap()).unwrap(), matrix_mul(&ma, &mc));
        // the form is invariant: G A(a*) = A(a)^T G
        let g = w.gram().unwrap().entries;
        let ms = w.action_matrix(&a.star()).unwrap();
        prop_assert_eq!(g.mul(&ms), ma.transpose().mul(&g));
    }
}

#[test]
fn radical_is_a_submodule_where_degenerate() {
    let q = |n: i64| BigRational::from_integer(n.into());
    for alg in Algebra::ALL {
        let t = TableDatum::new(alg, 1).unwrap();
        for l in t.labels() {
            let w = CellModule::new(&t, &l).unwrap();
            for x in [0, 1] {
                assert!(w.radical_is_invariant(&q(x)).unwrap(), "{alg} {l} x={x}");
            }
        }
    }
}
