//! Eigenvalue formula, exact determinants and the closed-form criterion checked
//! against one another and against independent determinant oracles.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use luminous_core::board::GridDims;
use luminous_core::criterion::classify;
use luminous_core::matrices::{build_a, build_a_int};
use luminous_core::spectral::{
    cos_product_identity, det_bareiss, det_closed_2xn, det_eigenproduct, eigenvalue, eigenvalue_is_zero_exact,
    zero_eigen_indices,
};
use luminous_core::DenseMatrix;

fn a_int(m: usize, n: usize) -> DenseMatrix<BigInt> {
    build_a_int(GridDims::new(m, n).unwrap())
}

/// Laplace expansion along the first row.
fn det_cofactor(rows: &[Vec<i64>]) -> i64 {
    let n = rows.len();
    if n == 1 {
        return rows[0][0];
    }
    (0..n)
        .filter(|&c| rows[0][c] != 0)
        .map(|c| {
            let minor: Vec<Vec<i64>> = rows[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect())
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * rows[0][c] * det_cofactor(&minor)
        })
        .sum()
}

/// Gaussian elimination over the rationals.
fn det_rational(m: &DenseMatrix<BigInt>) -> BigInt {
    let n = m.rows();
    let mut a: Vec<BigRational> = m.as_slice().iter().map(|v| BigRational::from_integer(v.clone())).collect();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i * n + k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            for c in 0..n {
                a.swap(k * n + c, p * n + c);
            }
            det = -det;
        }
        let pivot = a[k * n + k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if a[i * n + k].is_zero() {
                continue;
            }
            let f = &a[i * n + k] / &pivot;
            for c in k..n {
                let delta = &f * &a[k * n + c];
                a[i * n + c] -= delta;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

fn rows_i64(m: usize, n: usize) -> Vec<Vec<i64>> {
    let a = build_a::<i64>(GridDims::new(m, n).unwrap());
    a.as_slice().chunks(a.cols()).map(<[i64]>::to_vec).collect()
}

#[test]
fn small_determinants_by_cofactor_expansion() {
    assert_eq!(det_cofactor(&rows_i64(2, 2)), -3);
    assert_eq!(det_cofactor(&rows_i64(3, 3)), -7);
    for (m, n) in [(1, 1), (1, 4), (2, 2), (2, 3), (2, 4), (3, 3), (2, 5)] {
        let expected = BigInt::from(det_cofactor(&rows_i64(m, n)));
        assert_eq!(det_bareiss(&a_int(m, n)).unwrap(), expected, "{m}x{n}");
    }
}

#[test]
fn bareiss_matches_rational_elimination() {
    for m in 1..=7 {
        for n in m..=7 {
            let a = a_int(m, n);
            assert_eq!(det_bareiss(&a).unwrap(), det_rational(&a), "{m}x{n}");
        }
    }
}

#[test]
fn bareiss_fixed_width_agrees_with_bigint_when_it_fits() {
    for (m, n) in [(2, 2), (3, 3), (3, 4), (4, 4)] {
        let d = GridDims::new(m, n).unwrap();
        let small = det_bareiss(&build_a::<i64>(d)).unwrap();
        assert_eq!(BigInt::from(small), det_bareiss(&build_a_int(d)).unwrap());
    }
}

#[test]
fn eigenproduct_matches_exact_determinant() {
    let cells: Vec<(usize, usize)> = (1..=10).flat_map(|m| (1..=10).map(move |n| (m, n))).collect();
    cells.into_par_iter().for_each(|(m, n)| {
        let exact = det_bareiss(&a_int(m, n)).unwrap();
        let d = det_eigenproduct::<f64>(m, n).unwrap();
        assert_eq!(d.exact_zero, exact.is_zero(), "{m}x{n}");
        if !d.exact_zero {
            let exact = exact.to_f64().unwrap();
            assert!((d.float_value - exact).abs() <= 1e-8 * exact.abs().max(1.0), "{m}x{n}: {} vs {exact}", d.float_value);
        } else {
            assert_eq!(d.float_value, 0.0);
        }
    });
}

#[test]
fn exact_zeros_are_numerically_zero() {
    for m in 1..=30 {
        for n in 1..=30 {
            for idx in zero_eigen_indices(m, n) {
                assert!(eigenvalue_is_zero_exact(m, n, idx.j, idx.k).unwrap());
                let lambda = eigenvalue::<f64>(m, n, idx.j, idx.k).unwrap();
                assert!(lambda.abs() <= 1e-12, "{m}x{n} ({},{}) = {lambda}", idx.j, idx.k);
            }
        }
    }
}

#[test]
fn closed_form_for_two_rows() {
    for n in 1..=16 {
        assert_eq!(det_closed_2xn(n).unwrap(), det_bareiss(&a_int(2, n)).unwrap(), "n = {n}");
    }
}

#[test]
fn cosine_product_identity() {
    for n in 1..=50 {
        let (lhs, rhs) = cos_product_identity::<f64>(n).unwrap();
        assert!((lhs - rhs).abs() <= 1e-9, "n = {n}: {lhs} vs {rhs}");
    }
    for n in 1..=12 {
        let (lhs, rhs) = cos_product_identity::<f32>(n).unwrap();
        assert!((lhs - rhs).abs() <= 1e-5, "f32 n = {n}");
    }
}

#[test]
fn rotation_preserves_determinant() {
    for m in 1..=8 {
        for n in m + 1..=8 {
            assert_eq!(det_bareiss(&a_int(m, n)).unwrap(), det_bareiss(&a_int(n, m)).unwrap(), "{m}x{n}");
        }
    }
}

#[test]
fn criterion_matches_exact_determinant() {
    let cells: Vec<(usize, usize)> = (1..=12).flat_map(|m| (1..=12).map(move |n| (m, n))).collect();
    cells.into_par_iter().for_each(|(m, n)| {
        let det = det_bareiss(&a_int(m, n)).unwrap();
        assert_eq!(classify(m, n).unwrap().singular, det.is_zero(), "{m}x{n}: det = {det}");
    });
}

#[test]
fn criterion_matches_zero_eigenvalues() {
    for m in 1..=20 {
        for n in 1..=20 {
            assert_eq!(classify(m, n).unwrap().singular, !zero_eigen_indices(m, n).is_empty(), "{m}x{n}");
        }
    }
}

#[test]
fn three_by_three_has_no_zero_eigenvalue_and_odd_determinant() {
    assert!(zero_eigen_indices(3, 3).is_empty());
    let det = det_bareiss(&a_int(3, 3)).unwrap();
    assert_eq!(det, BigInt::from(-7));
    assert!(det.abs().bit(0));
}
