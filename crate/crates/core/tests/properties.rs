use proptest::prelude::*;

use luminous_core::board::{apply_presses, press, Config, GridDims, PressVector};
use luminous_core::criterion::classify;
use luminous_core::{Gf2Matrix, Gf2Vector};

fn grid_and_bits() -> impl Strategy<Value = (GridDims, Vec<bool>)> {
    (1usize..=7, 1usize..=7).prop_flat_map(|(m, n)| {
        (Just(GridDims::new(m, n).unwrap()), proptest::collection::vec(any::<bool>(), m * n))
    })
}

fn matrix_and_rhs() -> impl Strategy<Value = (Gf2Matrix, Gf2Vector)> {
    (1usize..=20, 1usize..=20).prop_flat_map(|(r, c)| {
        (
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r),
            proptest::collection::vec(any::<bool>(), r),
        )
            .prop_map(|(rows, rhs)| {
                let rows: Vec<Gf2Vector> = rows.iter().map(|r| Gf2Vector::from_bools(r)).collect();
                (Gf2Matrix::from_rows(&rows).unwrap(), Gf2Vector::from_bools(&rhs))
            })
    })
}

proptest! {
    #[test]
    fn press_is_an_involution((d, bits) in grid_and_bits(), j in 0usize..49) {
        let j = j % d.cell_count() + 1;
        let c = Config::from_bits(d, Gf2Vector::from_bools(&bits)).unwrap();
        prop_assert_eq!(press(&press(&c, j).unwrap(), j).unwrap(), c);
    }

    #[test]
    fn presses_commute((d, bits) in grid_and_bits(), j in 0usize..49, k in 0usize..49) {
        let (j, k) = (j % d.cell_count() + 1, k % d.cell_count() + 1);
        let c = Config::from_bits(d, Gf2Vector::from_bools(&bits)).unwrap();
        let jk = press(&press(&c, j).unwrap(), k).unwrap();
        let kj = press(&press(&c, k).unwrap(), j).unwrap();
        prop_assert_eq!(jk, kj);
    }

    #[test]
    fn zero_press_vector_is_identity((d, bits) in grid_and_bits()) {
        let c = Config::from_bits(d, Gf2Vector::from_bools(&bits)).unwrap();
        prop_assert_eq!(apply_presses(&c, &PressVector::zeros(d)).unwrap(), c);
    }

    #[test]
    fn bit_string_round_trip(bits in proptest::collection::vec(any::<bool>(), 0..300)) {
        let v = Gf2Vector::from_bools(&bits);
        prop_assert_eq!(v.to_bit_string().parse::<Gf2Vector>().unwrap(), v);
    }

    #[test]
    fn lex_cmp_agrees_with_string_order(a in proptest::collection::vec(any::<bool>(), 130),
                                        b in proptest::collection::vec(any::<bool>(), 130)) {
        let (va, vb) = (Gf2Vector::from_bools(&a), Gf2Vector::from_bools(&b));
        prop_assert_eq!(va.lex_cmp(&vb), va.to_bit_string().cmp(&vb.to_bit_string()));
    }

    #[test]
    fn rank_nullity_and_solve((a, c) in matrix_and_rhs()) {
        let rank = a.rank();
        let basis = a.null_basis();
        prop_assert_eq!(rank + basis.len(), a.cols());
        prop_assert_eq!(rank, a.transpose().rank());
        for v in &basis {
            prop_assert!(a.mul_vec(v).unwrap().is_zero());
        }
        let aug = a.with_column(&c).unwrap().rank();
        match a.solve(&c).unwrap() {
            Some(x) => {
                prop_assert_eq!(a.mul_vec(&x).unwrap(), c);
                prop_assert_eq!(aug, rank);
            }
            None => prop_assert!(rank < aug),
        }
    }

    #[test]
    fn criterion_is_symmetric(m in 1usize..500, n in 1usize..500) {
        prop_assert_eq!(classify(m, n).unwrap().singular, classify(n, m).unwrap().singular);
    }
}
