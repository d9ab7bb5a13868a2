//! Closed-form singularity test for A(m,n).

use std::fmt;

use crate::error::{Error, Result};

/// One of the three congruence conditions under which A(m,n) is singular.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// m ≡ 2 (mod 3) and n odd.
    C1,
    /// m odd and n ≡ 2 (mod 3).
    C2,
    /// m ≡ 4 (mod 5) and n ≡ 4 (mod 5).
    C3,
}

impl Condition {
    pub const ALL: [Condition; 3] = [Condition::C1, Condition::C2, Condition::C3];

    pub fn name(self) -> &'static str {
        match self {
            Condition::C1 => "C1",
            Condition::C2 => "C2",
            Condition::C3 => "C3",
        }
    }

    pub fn holds(self, m: usize, n: usize) -> bool {
        match self {
            Condition::C1 => m % 3 == 2 && n % 2 == 1,
            Condition::C2 => m % 2 == 1 && n % 3 == 2,
            Condition::C3 => m % 5 == 4 && n % 5 == 4,
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Condition::C1 => "m ≡ 2 (mod 3) and n odd",
            Condition::C2 => "m odd and n ≡ 2 (mod 3)",
            Condition::C3 => "m ≡ 4 (mod 5) and n ≡ 4 (mod 5)",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityVerdict {
    pub singular: bool,
    /// Every condition that fired, in C1, C2, C3 order.
    pub conditions: Vec<Condition>,
}

pub fn classify(m: usize, n: usize) -> Result<SingularityVerdict> {
    if m == 0 || n == 0 {
        return Err(Error::Domain(format!("grid must be at least 1x1, got {m}x{n}")));
    }
    let conditions: Vec<Condition> = Condition::ALL.into_iter().filter(|c| c.holds(m, n)).collect();
    Ok(SingularityVerdict {
        singular: !conditions.is_empty(),
        conditions,
    })
}
