//! Game-level solving on top of the GF(2) kernel.
//!
//! A configuration `c` is solvable when `A·x = c` has a solution over GF(2). The
//! solutions form the coset `particular ⊕ span(null basis)`, so a solvable board has
//! exactly 2^d press sets where d is the nullity of A(m,n).

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::One;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;

use crate::board::{Config, GridDims, PressVector};
use crate::criterion::{classify, SingularityVerdict};
use crate::error::{mismatch, Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::matrices::{build_a_gf2, build_a_int};
use crate::spectral::{det_bareiss, BAREISS_MAX_ORDER};

/// Largest nullity for which the minimal solution is found by exhaustive search.
pub const DEFAULT_ENUMERATION_CAP: usize = 24;

/// Below this nullity the coset walk runs on the calling thread.
const PARALLEL_MIN_NULLITY: usize = 16;
const PARALLEL_CHUNKS_LOG2: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub dims: GridDims,
    pub solvable: bool,
    pub nullity: usize,
    /// 2^nullity when solvable, else 0.
    pub solution_count: BigUint,
    pub particular: Option<PressVector>,
    pub minimal: Option<PressVector>,
    pub minimal_weight: Option<usize>,
    /// False when `minimal` came from greedy reduction rather than exhaustive search.
    pub certified: bool,
}

/// A(m,n) over GF(2) together with its null-space basis, reusable across boards.
#[derive(Debug, Clone)]
pub struct LightsOut {
    dims: GridDims,
    matrix: Gf2Matrix,
    null_basis: Vec<Gf2Vector>,
}

impl LightsOut {
    pub fn new(dims: GridDims) -> Self {
        let matrix = build_a_gf2(dims);
        let null_basis = matrix.null_basis();
        Self {
            dims,
            matrix,
            null_basis,
        }
    }

    pub fn dims(&self) -> GridDims {
        self.dims
    }

    pub fn matrix(&self) -> &Gf2Matrix {
        &self.matrix
    }

    /// Quiet patterns: press sets that leave every light unchanged.
    pub fn null_basis(&self) -> &[Gf2Vector] {
        &self.null_basis
    }

    pub fn nullity(&self) -> usize {
        self.null_basis.len()
    }

    fn check(&self, config: &Config) -> Result<()> {
        if config.dims() != self.dims {
            return Err(mismatch(format!("config for {}", self.dims), config.dims()));
        }
        Ok(())
    }

    /// The board produced by pressing `x` on a dark grid, i.e. `A·x`.
    pub fn config_for_presses(&self, x: &PressVector) -> Result<Config> {
        if x.dims() != self.dims {
            return Err(mismatch(format!("press vector for {}", self.dims), x.dims()));
        }
        Config::from_bits(self.dims, self.matrix.mul_vec(x.bits())?)
    }

    pub fn is_solvable(&self, config: &Config) -> Result<bool> {
        self.check(config)?;
        Ok(self.matrix.solve(config.bits())?.is_some())
    }

    pub fn solve(&self, config: &Config, enumeration_cap: usize) -> Result<SolveReport> {
        self.check(config)?;
        let nullity = self.nullity();
        let Some(particular) = self.matrix.solve(config.bits())? else {
            return Ok(SolveReport {
                dims: self.dims,
                solvable: false,
                nullity,
                solution_count: BigUint::ZERO,
                particular: None,
                minimal: None,
                minimal_weight: None,
                certified: true,
            });
        };
        let (minimal, certified) = if nullity <= enumeration_cap {
            (min_weight_in_coset(&particular, &self.null_basis), true)
        } else {
            (greedy_reduce(&particular, &self.null_basis), false)
        };
        let weight = minimal.weight();
        Ok(SolveReport {
            dims: self.dims,
            solvable: true,
            nullity,
            solution_count: BigUint::one() << nullity,
            particular: Some(PressVector::from_bits(self.dims, particular)?),
            minimal: Some(PressVector::from_bits(self.dims, minimal)?),
            minimal_weight: Some(weight),
            certified,
        })
    }

    /// Every 0/1 solution in lexicographic bit-string order; empty when unsolvable.
    pub fn all_solutions(&self, config: &Config, max_nullity: usize) -> Result<Vec<PressVector>> {
        self.check(config)?;
        let Some(particular) = self.matrix.solve(config.bits())? else {
            return Ok(Vec::new());
        };
        let d = self.nullity();
        if d > max_nullity {
            return Err(Error::SizeLimit {
                what: "nullity for full enumeration",
                actual: d,
                limit: max_nullity,
            });
        }
        let mut out = Vec::with_capacity(1 << d);
        let mut cur = particular;
        out.push(cur.clone());
        for i in 1u64..(1u64 << d) {
            cur.xor_assign(&self.null_basis[i.trailing_zeros() as usize]);
            out.push(cur.clone());
        }
        out.sort_by(Gf2Vector::lex_cmp);
        out.into_iter().map(|v| PressVector::from_bits(self.dims, v)).collect()
    }

    /// Lowest-numbered button of the minimal solution.
    pub fn hint(&self, config: &Config, enumeration_cap: usize) -> Result<Option<usize>> {
        self.check(config)?;
        if config.is_zero() {
            return Ok(None);
        }
        let report = self.solve(config, enumeration_cap)?;
        Ok(report.minimal.and_then(|x| x.buttons().first().copied()))
    }

    /// A solvable board from a seeded press vector; see [`random_presses`].
    pub fn random_solvable(&self, seed: u64) -> Result<(Config, PressVector)> {
        let x = random_presses(self.dims, seed);
        Ok((self.config_for_presses(&x)?, x))
    }
}

/// Orders candidates by weight, then by bit string.
fn better(candidate: &Gf2Vector, cw: usize, best: &Gf2Vector, bw: usize) -> bool {
    cw < bw || (cw == bw && candidate.lex_cmp(best) == Ordering::Less)
}

/// Walks the Gray-code sequence over `start ⊕ span(basis)` from index `from` to `to`.
fn walk_gray(start: &Gf2Vector, basis: &[Gf2Vector], from: u64, to: u64) -> (Gf2Vector, usize) {
    let mut cur = start.clone();
    let gray = from ^ (from >> 1);
    for (bit, v) in basis.iter().enumerate() {
        if (gray >> bit) & 1 == 1 {
            cur.xor_assign(v);
        }
    }
    let mut best_w = cur.weight();
    let mut best = cur.clone();
    for i in from + 1..to {
        cur.xor_assign(&basis[i.trailing_zeros() as usize]);
        let w = cur.weight();
        if better(&cur, w, &best, best_w) {
            best_w = w;
            best.clone_from(&cur);
        }
    }
    (best, best_w)
}

/// Minimum-weight element of `particular ⊕ span(basis)`, ties going to the
/// lexicographically smallest bit string.
pub fn min_weight_in_coset(particular: &Gf2Vector, basis: &[Gf2Vector]) -> Gf2Vector {
    let d = basis.len();
    assert!(d < 64, "coset of dimension {d} is too large to enumerate");
    let total = 1u64 << d;
    if d < PARALLEL_MIN_NULLITY {
        return walk_gray(particular, basis, 0, total).0;
    }
    let chunks = 1u64 << PARALLEL_CHUNKS_LOG2;
    let len = total / chunks;
    (0..chunks)
        .into_par_iter()
        .map(|c| walk_gray(particular, basis, c * len, (c + 1) * len))
        .collect::<Vec<_>>()
        .into_iter()
        .reduce(|a, b| if better(&b.0, b.1, &a.0, a.1) { b } else { a })
        .expect("at least one chunk")
        .0
}

/// Repeatedly applies the first basis vector that strictly lowers the weight.
pub fn greedy_reduce(particular: &Gf2Vector, basis: &[Gf2Vector]) -> Gf2Vector {
    let mut cur = particular.clone();
    let mut weight = cur.weight();
    loop {
        let step = basis.iter().find_map(|v| {
            let next = cur.xor(v);
            let w = next.weight();
            (w < weight).then_some((next, w))
        });
        match step {
            Some((next, w)) => {
                cur = next;
                weight = w;
            }
            None => return cur,
        }
    }
}

/// Seeded press vector.
///
/// The generator is ChaCha8 seeded with `SeedableRng::seed_from_u64(seed)`. Consecutive
/// `next_u64` outputs fill the vector 64 buttons at a time: bit `b` of the `w`-th output
/// is button `64·w + b + 1`. Bits past the last button are discarded.
pub fn random_presses(dims: GridDims, seed: u64) -> PressVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = dims.cell_count();
    let mut bits = Gf2Vector::zeros(len);
    let mut word = 0u64;
    for i in 0..len {
        if i % 64 == 0 {
            word = rng.next_u64();
        }
        if (word >> (i % 64)) & 1 == 1 {
            bits.set(i, true);
        }
    }
    PressVector::from_bits(dims, bits).expect("length matches dims")
}

pub fn is_solvable(config: &Config) -> Result<bool> {
    LightsOut::new(config.dims()).is_solvable(config)
}

pub fn solve_full(config: &Config) -> Result<SolveReport> {
    solve_full_with_cap(config, DEFAULT_ENUMERATION_CAP)
}

pub fn solve_full_with_cap(config: &Config, enumeration_cap: usize) -> Result<SolveReport> {
    LightsOut::new(config.dims()).solve(config, enumeration_cap)
}

pub fn hint(config: &Config) -> Result<Option<usize>> {
    LightsOut::new(config.dims()).hint(config, DEFAULT_ENUMERATION_CAP)
}

pub fn random_solvable(dims: GridDims, seed: u64) -> Result<(Config, PressVector)> {
    LightsOut::new(dims).random_solvable(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// One grid size in a [`SweepReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub m: usize,
    pub n: usize,
    pub verdict: SingularityVerdict,
    /// Nullity of A(m,n) over GF(2).
    pub nullity: usize,
    /// Parity of the exact integer determinant; `None` above the exact-determinant cap.
    pub det_parity: Option<Parity>,
}

impl SweepRow {
    /// Closed-form verdict says nonsingular, yet A(m,n) is singular mod 2.
    pub fn is_discrepancy(&self) -> bool {
        !self.verdict.singular && self.nullity > 0
    }

    /// Closed-form verdict says singular, yet A(m,n) is invertible mod 2.
    pub fn is_violation(&self) -> bool {
        self.verdict.singular && self.nullity == 0
    }

    /// The exact determinant parity disagrees with the GF(2) rank.
    pub fn parity_mismatch(&self) -> bool {
        match self.det_parity {
            Some(p) => (p == Parity::Odd) != (self.nullity == 0),
            None => false,
        }
    }
}

/// Real singularity (closed form) against GF(2) singularity for every grid up to a size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub max: usize,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn discrepancies(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| r.is_discrepancy())
    }

    pub fn violations(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| r.is_violation())
    }

    pub fn parity_mismatches(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| r.parity_mismatch())
    }

    pub fn row(&self, m: usize, n: usize) -> Option<&SweepRow> {
        self.rows.iter().find(|r| r.m == m && r.n == n)
    }
}

/// Tabulates every grid with 1 ≤ m, n ≤ `max`, in row-major (m, n) order. Grid sizes
/// are evaluated in parallel.
pub fn sweep(max: usize) -> Result<SweepReport> {
    if max == 0 {
        return Err(Error::Domain("sweep bound must be at least 1".into()));
    }
    let cells: Vec<(usize, usize)> = (1..=max).flat_map(|m| (1..=max).map(move |n| (m, n))).collect();
    let rows = cells
        .into_par_iter()
        .map(|(m, n)| sweep_row(m, n, max))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport { max, rows })
}

fn sweep_row(m: usize, n: usize, max_side: usize) -> Result<SweepRow> {
    let dims = GridDims::with_limit(m, n, max_side)?;
    let a = build_a_gf2(dims);
    let nullity = dims.cell_count() - a.rank();
    let det_parity = if dims.cell_count() <= BAREISS_MAX_ORDER {
        let det = det_bareiss(&build_a_int(dims))?;
        Some(if det.bit(0) { Parity::Odd } else { Parity::Even })
    } else {
        None
    };
    Ok(SweepRow {
        m,
        n,
        verdict: classify(m, n)?,
        nullity,
        det_parity,
    })
}
