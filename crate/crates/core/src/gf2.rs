//! Dense linear algebra over GF(2).
//!
//! Vectors and matrix rows are packed 64 bits per word, bit `i` of a row living in
//! word `i / 64` at bit position `i % 64`. Padding bits past the logical length are
//! always zero, so whole-word operations (XOR, popcount, equality) need no masking.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{mismatch, Error, Result};

const WORD_BITS: usize = u64::BITS as usize;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A bit vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Vector {
    len: usize,
    words: Vec<u64>,
}

impl Gf2Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Builds a vector with ones at the given 0-based positions.
    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v = Self::zeros(len);
        for i in ones {
            if i >= len {
                return Err(Error::Domain(format!("bit index {i} out of range for length {len}")));
            }
            v.set(i, true);
        }
        Ok(v)
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// In-place `self ^= other`.
    ///
    /// # Panics
    ///
    /// Panics if the lengths differ.
    #[inline]
    pub fn xor_assign(&mut self, other: &Gf2Vector) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Gf2Vector) -> Gf2Vector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Hamming weight.
    #[inline]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &Gf2Vector) -> bool {
        assert_eq!(self.len, other.len, "dot of vectors with different lengths");
        let parity: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        parity % 2 == 1
    }

    /// 0-based positions of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD_BITS + b)
            })
        })
    }

    /// Compares the two vectors as '0'/'1' strings, position 0 first.
    pub fn lex_cmp(&self, other: &Gf2Vector) -> Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                // lowest differing bit is the earliest string position
                let bit = diff.trailing_zeros();
                return if (a >> bit) & 1 == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        self.len.cmp(&other.len)
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Vector({})", self.to_bit_string())
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

impl FromStr for Gf2Vector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut v = Gf2Vector::zeros(s.chars().count());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => v.set(i, true),
                other => {
                    return Err(Error::Parse(format!(
                        "invalid character {other:?} at position {} (expected '0' or '1')",
                        i + 1
                    )))
                }
            }
        }
        Ok(v)
    }
}

/// A dense, row-major, bit-packed matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from equal-length row vectors.
    pub fn from_rows(rows: &[Gf2Vector]) -> Result<Self> {
        let cols = rows.first().map_or(0, Gf2Vector::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(mismatch(format!("row of length {cols}"), format!("row {i} of length {}", r.len())));
            }
            m.row_words_mut(i).copy_from_slice(r.words());
        }
        Ok(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        (self.data[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        let w = &mut self.data[r * self.stride + c / WORD_BITS];
        let mask = 1u64 << (c % WORD_BITS);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row(&self, r: usize) -> Gf2Vector {
        Gf2Vector {
            len: self.cols,
            words: self.row_words(r).to_vec(),
        }
    }

    pub fn column(&self, c: usize) -> Gf2Vector {
        let mut v = Gf2Vector::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    /// `self · x` over GF(2).
    pub fn mul_vec(&self, x: &Gf2Vector) -> Result<Gf2Vector> {
        if x.len() != self.cols {
            return Err(mismatch(format!("vector of length {}", self.cols), format!("length {}", x.len())));
        }
        let mut out = Gf2Vector::zeros(self.rows);
        for r in 0..self.rows {
            let parity: u32 = self
                .row_words(r)
                .iter()
                .zip(x.words())
                .map(|(a, b)| (a & b).count_ones())
                .sum();
            if parity % 2 == 1 {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    /// Returns `[self | c]`.
    pub fn with_column(&self, c: &Gf2Vector) -> Result<Gf2Matrix> {
        if c.len() != self.rows {
            return Err(mismatch(format!("column of length {}", self.rows), format!("length {}", c.len())));
        }
        let mut out = Gf2Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for col in 0..self.cols {
                if self.get(r, col) {
                    out.set(r, col, true);
                }
            }
            if c.get(r) {
                out.set(r, self.cols, true);
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    /// `rows[dst] ^= rows[src]` on packed words.
    #[inline]
    fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let s = self.stride;
        let (src_row, dst_row) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&lo[src * s..(src + 1) * s], &mut hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&hi[..s], &mut lo[dst * s..(dst + 1) * s])
        };
        for (d, w) in dst_row.iter_mut().zip(src_row) {
            *d ^= w;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        let (lo, hi) = self.data.split_at_mut(a.max(b) * s);
        let lo_start = a.min(b) * s;
        lo[lo_start..lo_start + s].swap_with_slice(&mut hi[..s]);
    }

    /// Reduces a copy of the matrix to reduced row echelon form, pivoting only in the
    /// first `pivot_cols` columns.
    fn reduce(&self, pivot_cols: usize) -> Echelon {
        let mut work = self.clone();
        let mut pivots = Vec::new();
        for col in 0..pivot_cols {
            let r = pivots.len();
            if r == work.rows {
                break;
            }
            let Some(p) = (r..work.rows).find(|&i| work.get(i, col)) else {
                continue;
            };
            work.swap_rows(r, p);
            for i in 0..work.rows {
                if i != r && work.get(i, col) {
                    work.xor_row_into(r, i);
                }
            }
            pivots.push(col);
        }
        Echelon { reduced: work, pivots }
    }

    /// Row rank.
    pub fn rank(&self) -> usize {
        self.reduce(self.cols).pivots.len()
    }

    /// Solves `self · x = c`, returning `None` when the system is inconsistent.
    ///
    /// Free variables are set to zero, so the particular solution is determined by the
    /// pivot order (leftmost column, topmost available row).
    pub fn solve(&self, c: &Gf2Vector) -> Result<Option<Gf2Vector>> {
        let aug = self.with_column(c)?;
        let ech = aug.reduce(self.cols);
        let rank = ech.pivots.len();
        if (rank..self.rows).any(|r| ech.reduced.get(r, self.cols)) {
            return Ok(None);
        }
        let mut x = Gf2Vector::zeros(self.cols);
        for (r, &p) in ech.pivots.iter().enumerate() {
            if ech.reduced.get(r, self.cols) {
                x.set(p, true);
            }
        }
        Ok(Some(x))
    }

    /// A basis of `{x : self · x = 0}`, one vector per free column in ascending order.
    pub fn null_basis(&self) -> Vec<Gf2Vector> {
        let ech = self.reduce(self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = Gf2Vector::zeros(self.cols);
                v.set(f, true);
                for (r, &p) in ech.pivots.iter().enumerate() {
                    if ech.reduced.get(r, f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }
}

struct Echelon {
    reduced: Gf2Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

/// One row per line, entries separated by single spaces.
impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(" ")?;
                }
                f.write_str(if self.get(r, c) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> Gf2Matrix {
        let rows: Vec<Gf2Vector> = rows.iter().map(|s| s.parse().unwrap()).collect();
        Gf2Matrix::from_rows(&rows).unwrap()
    }

    #[test]
    fn identity_rank_and_solve() {
        for k in [1, 5, 64, 65, 130] {
            let id = Gf2Matrix::identity(k);
            assert_eq!(id.rank(), k);
            assert!(id.null_basis().is_empty());
            let c = Gf2Vector::from_indices(k, (0..k).step_by(3)).unwrap();
            assert_eq!(id.solve(&c).unwrap(), Some(c));
        }
    }

    #[test]
    fn zero_matrix() {
        let z = Gf2Matrix::zeros(4, 7);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.null_basis().len(), 7);
        assert_eq!(z.solve(&Gf2Vector::zeros(4)).unwrap(), Some(Gf2Vector::zeros(7)));
        assert_eq!(z.solve(&"0010".parse().unwrap()).unwrap(), None);
    }

    #[test]
    fn rectangular_system() {
        let a = m(&["110", "011"]);
        assert_eq!(a.rank(), 2);
        let basis = a.null_basis();
        assert_eq!(basis, vec!["111".parse::<Gf2Vector>().unwrap()]);
        let x = a.solve(&"10".parse().unwrap()).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap().to_bit_string(), "10");
        // leftmost pivots are columns 0 and 1, column 2 is free and set to zero
        assert_eq!(x.to_bit_string(), "100");
    }

    #[test]
    fn solve_dimension_mismatch() {
        let a = Gf2Matrix::identity(3);
        assert!(matches!(a.solve(&Gf2Vector::zeros(2)), Err(Error::DimensionMismatch { .. })));
        assert!(a.mul_vec(&Gf2Vector::zeros(4)).is_err());
    }

    #[test]
    fn bit_string_parse_rejects_garbage() {
        assert!("0102".parse::<Gf2Vector>().is_err());
        assert_eq!("".parse::<Gf2Vector>().unwrap().len(), 0);
    }

    #[test]
    fn lex_order_is_string_order() {
        let a: Gf2Vector = "0011".parse().unwrap();
        let b: Gf2Vector = "0101".parse().unwrap();
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
        assert_eq!(b.lex_cmp(&a), Ordering::Greater);
        assert_eq!(a.lex_cmp(&a), Ordering::Equal);
        assert_eq!(a.to_bit_string().cmp(&b.to_bit_string()), Ordering::Less);
    }

    #[test]
    fn ones_crosses_word_boundaries() {
        let v = Gf2Vector::from_indices(200, [0, 63, 64, 127, 199]).unwrap();
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 63, 64, 127, 199]);
        assert_eq!(v.weight(), 5);
    }

    #[test]
    fn swap_and_xor_rows_both_directions() {
        let mut a = m(&["100", "010", "001"]);
        a.swap_rows(2, 0);
        assert_eq!(a, m(&["001", "010", "100"]));
        a.xor_row_into(2, 0);
        a.xor_row_into(0, 1);
        assert_eq!(a, m(&["101", "111", "100"]));
    }

    #[test]
    fn transpose_round_trip() {
        let a = m(&["1101", "0110", "1000"]);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.transpose().row(0).to_bit_string(), "101");
        assert_eq!(a.column(1).to_bit_string(), "110");
    }
}
