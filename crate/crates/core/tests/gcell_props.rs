use num::BigRational;
use proptest::prelude::*;
use zrel_core::gcell::{
    murphy_sym, murphy_wreath, standard_tableaux, CellOrder, GroupAlgebraElement, Shape,
};

fn hook_count(shape: &Shape) -> usize {
    let parts = shape.parts();
    let n = shape.size();
    let mut hooks = 1usize;
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = parts[i + 1..].iter().filter(|&&p| p > j).count();
            hooks *= arm + leg + 1;
        }
    }
    (1..=n).product::<usize>() / hooks
}

#[test]
fn tableaux_counts_match_hook_lengths() {
    for n in 0..=6 {
        for s in Shape::all(n) {
            assert_eq!(standard_tableaux(&s).len(), hook_count(&s), "{s}");
        }
    }
}

#[test]
fn star_swaps_tableaux() {
    for n in 0..=3 {
        let b = murphy_sym(n);
        for e in b.entries() {
            assert!(b.check_star(e.cell, e.s, e.t).is_ok());
        }
        let w = murphy_wreath(n);
        for e in w.entries() {
            assert!(w.check_star(e.cell, e.s, e.t).is_ok());
        }
    }
}

#[test]
fn cells_are_triangular() {
    // every m_{s,t} times a group element reduces into its own cell and cells below
    for n in 1..=3 {
        let b = murphy_wreath(n);
        for g in b.group() {
            let h = GroupAlgebraElement::basis(g.clone());
            for e in b.entries() {
                let c = b.coords(&h.mul(&e.element)).unwrap();
                for (f, v) in b.entries().iter().zip(c) {
                    if v != BigRational::from_integer(0.into()) && f.cell != e.cell {
                        assert!(b.cells()[f.cell].label.below(&b.cells()[e.cell].label));
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn murphy_coords_invert(coeffs in proptest::collection::vec(-5i64..=5, 48)) {
        let b = murphy_wreath(3);
        let mut x = GroupAlgebraElement::zero();
        for (g, c) in b.group().iter().zip(&coeffs) {
            x.add_term(g.clone(), BigRational::from_integer((*c).into()));
        }
        let c = b.coords(&x).unwrap();
        prop_assert_eq!(b.from_coords(&c), x);
    }

    #[test]
    fn sym_coords_invert(coeffs in proptest::collection::vec(-5i64..=5, 24)) {
        let b = murphy_sym(4);
        let mut x = GroupAlgebraElement::zero();
        for (g, c) in b.group().iter().zip(&coeffs) {
            x.add_term(g.clone(), BigRational::from_integer((*c).into()));
        }
        let c = b.coords(&x).unwrap();
        prop_assert_eq!(b.from_coords(&c), x);
    }
}
