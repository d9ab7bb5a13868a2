//! Spectrum and determinant of A(m,n).
//!
//! The eigenvalues of A(m,n) are
//!
//! ```text
//! λ_jk = 1 + 2·[cos(jπ/(m+1)) + cos(kπ/(n+1))],   1 ≤ j ≤ m, 1 ≤ k ≤ n
//! ```
//!
//! and the determinant is their product. Whether some λ_jk vanishes is decided exactly:
//! with α = j/(m+1) and β = k/(n+1) in lowest terms, cos(απ) + cos(βπ) = −1/2 holds only
//! for (α, β) ∈ {(1/2, 2/3), (2/3, 1/2), (2/5, 4/5), (4/5, 2/5)}.

use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, Float, FloatConst, One, Zero};

use crate::board::GridDims;
use crate::error::{Error, Result};
use crate::matrices::{build_a_int, DenseMatrix};

/// Largest matrix order the exact determinant will accept.
pub const BAREISS_MAX_ORDER: usize = 256;

/// The (α, β) pairs at which cos(απ) + cos(βπ) = −1/2.
const ZERO_EIGEN_PAIRS: [((u64, u64), (u64, u64)); 4] = [
    ((1, 2), (2, 3)),
    ((2, 3), (1, 2)),
    ((2, 5), (4, 5)),
    ((4, 5), (2, 5)),
];

/// A 1-based eigenvalue index pair for A(m,n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EigenIndex {
    pub j: usize,
    pub k: usize,
}

impl EigenIndex {
    pub fn new(m: usize, n: usize, j: usize, k: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Domain(format!("grid must be at least 1x1, got {m}x{n}")));
        }
        if j == 0 || j > m || k == 0 || k > n {
            return Err(Error::Domain(format!(
                "eigen index ({j},{k}) outside 1..={m} x 1..={n}"
            )));
        }
        Ok(Self { j, k })
    }
}

/// Determinant of A(m,n) through the eigenvalue product.
#[derive(Debug, Clone, PartialEq)]
pub struct DetResult<F> {
    /// Some eigenvalue is exactly zero.
    pub exact_zero: bool,
    /// Product of the eigenvalues; exactly zero whenever `exact_zero` is set.
    pub float_value: F,
    /// Exact determinant, when it was computed.
    pub exact_value: Option<BigInt>,
}

fn float_of<F: Float>(v: usize) -> F {
    F::from(v).expect("index representable as float")
}

/// λ_jk of A(m,n).
pub fn eigenvalue<F: Float + FloatConst>(m: usize, n: usize, j: usize, k: usize) -> Result<F> {
    EigenIndex::new(m, n, j, k)?;
    let two = F::one() + F::one();
    let alpha = float_of::<F>(j) * F::PI() / float_of::<F>(m + 1);
    let beta = float_of::<F>(k) * F::PI() / float_of::<F>(n + 1);
    Ok(F::one() + two * (alpha.cos() + beta.cos()))
}

/// Whether λ_jk of A(m,n) is exactly zero.
pub fn eigenvalue_is_zero_exact(m: usize, n: usize, j: usize, k: usize) -> Result<bool> {
    EigenIndex::new(m, n, j, k)?;
    Ok(is_zero_pair(m, n, j, k))
}

fn is_zero_pair(m: usize, n: usize, j: usize, k: usize) -> bool {
    let alpha = Ratio::new(j as u64, (m + 1) as u64);
    let beta = Ratio::new(k as u64, (n + 1) as u64);
    ZERO_EIGEN_PAIRS
        .iter()
        .any(|&((an, ad), (bn, bd))| alpha == Ratio::new(an, ad) && beta == Ratio::new(bn, bd))
}

/// Every index pair with an exactly zero eigenvalue, in (j, k) order.
pub fn zero_eigen_indices(m: usize, n: usize) -> Vec<EigenIndex> {
    let mut out = Vec::new();
    for j in 1..=m {
        for k in 1..=n {
            if is_zero_pair(m, n, j, k) {
                out.push(EigenIndex { j, k });
            }
        }
    }
    out
}

/// Product of `values` in balanced pairwise order.
pub fn pairwise_product<F: Float>(values: &[F]) -> F {
    match values.len() {
        0 => F::one(),
        1 => values[0],
        len => {
            let (lo, hi) = values.split_at(len / 2);
            pairwise_product(lo) * pairwise_product(hi)
        }
    }
}

/// det A(m,n) as the product of its eigenvalues.
///
/// An exactly zero eigenvalue short-circuits to 0; floating-point smallness is never
/// used to decide singularity.
pub fn det_eigenproduct<F: Float + FloatConst>(m: usize, n: usize) -> Result<DetResult<F>> {
    if m == 0 || n == 0 {
        return Err(Error::Domain(format!("grid must be at least 1x1, got {m}x{n}")));
    }
    if !zero_eigen_indices(m, n).is_empty() {
        return Ok(DetResult {
            exact_zero: true,
            float_value: F::zero(),
            exact_value: None,
        });
    }
    let mut eigs = Vec::with_capacity(m * n);
    for j in 1..=m {
        for k in 1..=n {
            eigs.push(eigenvalue::<F>(m, n, j, k)?);
        }
    }
    Ok(DetResult {
        exact_zero: false,
        float_value: pairwise_product(&eigs),
        exact_value: None,
    })
}

/// [`det_eigenproduct`] plus the exact determinant when A(m,n) is small enough for
/// [`det_bareiss`].
pub fn det_report(dims: GridDims) -> Result<DetResult<f64>> {
    let mut res = det_eigenproduct::<f64>(dims.rows(), dims.cols())?;
    if dims.cell_count() <= BAREISS_MAX_ORDER {
        res.exact_value = Some(det_bareiss(&build_a_int(dims))?);
    }
    Ok(res)
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Every intermediate value is a minor of the input, and every division is exact. All
/// arithmetic is checked, so fixed-width scalars report [`Error::Overflow`] instead of
/// wrapping; use [`BigInt`] for an unconditional answer.
pub fn det_bareiss<T>(matrix: &DenseMatrix<T>) -> Result<T>
where
    T: Clone + Zero + One + PartialEq + CheckedMul + CheckedSub + CheckedDiv + Neg<Output = T>,
{
    if !matrix.is_square() {
        return Err(Error::Domain(format!(
            "determinant needs a square matrix, got {}x{}",
            matrix.rows(),
            matrix.cols()
        )));
    }
    let n = matrix.rows();
    if n > BAREISS_MAX_ORDER {
        return Err(Error::SizeLimit {
            what: "matrix order",
            actual: n,
            limit: BAREISS_MAX_ORDER,
        });
    }
    if n == 0 {
        return Ok(T::one());
    }

    let overflow = || Error::Overflow("bareiss elimination");
    let mut a: Vec<T> = matrix.as_slice().to_vec();
    let mut negate = false;
    let mut prev = T::one();

    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                return Ok(T::zero());
            };
            for c in 0..n {
                a.swap(k * n + c, p * n + c);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let factor = a[i * n + k].clone();
            let factor_zero = factor.is_zero();
            for j in k + 1..n {
                let kj = &a[k * n + j];
                let ij = &a[i * n + j];
                let scaled_zero = ij.is_zero();
                let cross_zero = factor_zero || kj.is_zero();
                if scaled_zero && cross_zero {
                    continue;
                }
                let mut num = if scaled_zero {
                    T::zero()
                } else {
                    pivot.checked_mul(ij).ok_or_else(overflow)?
                };
                if !cross_zero {
                    let cross = factor.checked_mul(kj).ok_or_else(overflow)?;
                    num = num.checked_sub(&cross).ok_or_else(overflow)?;
                }
                a[i * n + j] = num.checked_div(&prev).ok_or_else(overflow)?;
            }
            a[i * n + k] = T::zero();
        }
        prev = pivot;
    }

    let det = a[n * n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// det A(2,n): zero for odd n, (−1)^{n/2}·(n+1) for even n.
pub fn det_closed_2xn(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if n % 2 == 1 {
        return Ok(BigInt::zero());
    }
    let magnitude = BigInt::from(n + 1);
    Ok(if (n / 2) % 2 == 1 { -magnitude } else { magnitude })
}

/// Both sides of ∏_{k=1}^{n−1} cos(kπ/n) = sin(nπ/2) / 2^{n−1}.
///
/// The left side is a floating product; the right side is exact, taking sin(nπ/2) from
/// n mod 4.
pub fn cos_product_identity<F: Float + FloatConst>(n: usize) -> Result<(F, F)> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    let nf = float_of::<F>(n);
    let cosines: Vec<F> = (1..n).map(|k| (float_of::<F>(k) * F::PI() / nf).cos()).collect();
    let lhs = pairwise_product(&cosines);
    let sine = match n % 4 {
        1 => F::one(),
        3 => -F::one(),
        _ => F::zero(),
    };
    // 2^{1-n} underflows to zero only far beyond any n where the product is nonzero
    let scale = F::from(2.0).expect("2 is representable").powi(1 - n.min(i32::MAX as usize) as i32);
    Ok((lhs, sine * scale))
}
