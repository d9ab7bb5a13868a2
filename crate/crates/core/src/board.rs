//! Grid geometry and press dynamics.
//!
//! Buttons are numbered 1..=m·n in row-major order; every public function takes and
//! returns 1-based button numbers. Storage underneath is 0-based.

use std::fmt;

use crate::error::{mismatch, Error, Result};
use crate::gf2::Gf2Vector;

/// Default cap on either side of the grid.
pub const DEFAULT_MAX_SIDE: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridDims {
    rows: usize,
    cols: usize,
}

impl GridDims {
    /// Validated dimensions under the default side cap.
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        Self::with_limit(rows, cols, DEFAULT_MAX_SIDE)
    }

    pub fn with_limit(rows: usize, cols: usize, max_side: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Domain(format!("grid must be at least 1x1, got {rows}x{cols}")));
        }
        for (what, actual) in [("rows", rows), ("cols", cols)] {
            if actual > max_side {
                return Err(Error::SizeLimit {
                    what,
                    actual,
                    limit: max_side,
                });
            }
        }
        Ok(Self { rows, cols })
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
    pub fn cell_count(&self) -> usize {
        self.rows * self.cols
    }

    /// 1-based (row, col) of button `j`.
    pub fn position(&self, j: usize) -> Result<(usize, usize)> {
        self.check_button(j)?;
        Ok(((j - 1) / self.cols + 1, (j - 1) % self.cols + 1))
    }

    fn check_button(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.cell_count() {
            return Err(Error::Domain(format!(
                "button {j} out of range 1..={} for a {self} grid",
                self.cell_count()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for GridDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// Button number of the cell at 1-based `(row, col)`.
pub fn linear_index(dims: GridDims, row: usize, col: usize) -> Result<usize> {
    if row == 0 || row > dims.rows || col == 0 || col > dims.cols {
        return Err(Error::Domain(format!("cell ({row},{col}) outside a {dims} grid")));
    }
    Ok((row - 1) * dims.cols + col)
}

/// Buttons whose lights flip when button `j` is pressed, ascending.
pub fn toggled_set(dims: GridDims, j: usize) -> Result<Vec<usize>> {
    let (row, col) = dims.position(j)?;
    let n = dims.cols;
    let mut set = Vec::with_capacity(5);
    if row > 1 {
        set.push(j - n);
    }
    if col > 1 {
        set.push(j - 1);
    }
    set.push(j);
    if col < n {
        set.push(j + 1);
    }
    if row < dims.rows {
        set.push(j + n);
    }
    Ok(set)
}

macro_rules! board_bits {
    ($name:ident, $what:literal) => {
        #[derive(Clone, PartialEq, Eq, Hash)]
        pub struct $name {
            dims: GridDims,
            bits: Gf2Vector,
        }

        impl $name {
            pub fn zeros(dims: GridDims) -> Self {
                Self {
                    dims,
                    bits: Gf2Vector::zeros(dims.cell_count()),
                }
            }

            pub fn from_bits(dims: GridDims, bits: Gf2Vector) -> Result<Self> {
                if bits.len() != dims.cell_count() {
                    return Err(mismatch(
                        format!("{} bits for a {dims} grid", dims.cell_count()),
                        format!("{} bits", bits.len()),
                    ));
                }
                Ok(Self { dims, bits })
            }

            /// Parses the row-major '0'/'1' text form.
            pub fn parse(dims: GridDims, text: &str) -> Result<Self> {
                Self::from_bits(dims, text.parse()?)
            }

            /// Sets exactly the given 1-based buttons.
            pub fn from_buttons(dims: GridDims, buttons: &[usize]) -> Result<Self> {
                let mut bits = Gf2Vector::zeros(dims.cell_count());
                for &j in buttons {
                    dims.check_button(j)?;
                    bits.set(j - 1, true);
                }
                Ok(Self { dims, bits })
            }

            #[inline]
            pub fn dims(&self) -> GridDims {
                self.dims
            }

            #[inline]
            pub fn bits(&self) -> &Gf2Vector {
                &self.bits
            }

            pub fn into_bits(self) -> Gf2Vector {
                self.bits
            }

            /// Whether 1-based button `j` is set.
            pub fn is_set(&self, j: usize) -> Result<bool> {
                self.dims.check_button(j)?;
                Ok(self.bits.get(j - 1))
            }

            /// 1-based numbers of the set buttons, ascending.
            pub fn buttons(&self) -> Vec<usize> {
                self.bits.ones().map(|i| i + 1).collect()
            }

            pub fn weight(&self) -> usize {
                self.bits.weight()
            }

            pub fn is_zero(&self) -> bool {
                self.bits.is_zero()
            }

            pub fn to_bit_string(&self) -> String {
                self.bits.to_bit_string()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(&self.bits, f)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, concat!($what, "({} {})"), self.dims, self.bits)
            }
        }
    };
}

board_bits!(Config, "Config");
board_bits!(PressVector, "PressVector");

impl PressVector {
    /// Collapses a sequence of presses to parity: pressing a button twice cancels out.
    pub fn from_press_sequence(dims: GridDims, presses: &[usize]) -> Result<Self> {
        let mut x = Self::zeros(dims);
        for &j in presses {
            dims.check_button(j)?;
            x.bits.flip(j - 1);
        }
        Ok(x)
    }
}

/// Presses button `j` once.
pub fn press(config: &Config, j: usize) -> Result<Config> {
    let mut out = config.clone();
    press_in_place(&mut out, j)?;
    Ok(out)
}

fn press_in_place(config: &mut Config, j: usize) -> Result<()> {
    for t in toggled_set(config.dims, j)? {
        config.bits.flip(t - 1);
    }
    Ok(())
}

/// Presses every button set in `x`, in ascending order.
pub fn apply_presses(config: &Config, x: &PressVector) -> Result<Config> {
    if config.dims != x.dims {
        return Err(mismatch(format!("press vector for {}", config.dims), x.dims));
    }
    let mut out = config.clone();
    for j in x.buttons() {
        press_in_place(&mut out, j)?;
    }
    Ok(out)
}
