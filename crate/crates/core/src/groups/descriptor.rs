use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Symmetric group on `rank` letters (Coxeter type A_{rank-1}).
    A,
    /// Hyperoctahedral group of signed permutations.
    B,
    /// Signed permutations with an even number of sign changes.
    D,
    /// Dihedral group of order `2m`.
    I2,
    /// Wreath product `Z_r ≀ S_n` with its pseudoreflections.
    G,
}

/// Names one finite reflection group.
///
/// `rank` is the number of letters permuted (so `A` with rank 4 is `S_4`);
/// `color_order` is only meaningful for [`Family::G`] and `m` only for
/// [`Family::I2`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoxeterDescriptor {
    pub family: Family,
    pub rank: usize,
    pub color_order: usize,
    pub m: usize,
}

impl CoxeterDescriptor {
    pub fn symmetric(n: usize) -> Self {
        Self { family: Family::A, rank: n, color_order: 1, m: 0 }
    }

    pub fn hyperoctahedral(n: usize) -> Self {
        Self { family: Family::B, rank: n, color_order: 2, m: 0 }
    }

    pub fn even_signed(n: usize) -> Self {
        Self { family: Family::D, rank: n, color_order: 2, m: 0 }
    }

    pub fn dihedral(m: usize) -> Self {
        Self { family: Family::I2, rank: 2, color_order: 1, m }
    }

    pub fn colored(r: usize, n: usize) -> Self {
        Self { family: Family::G, rank: n, color_order: r, m: 0 }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidDescriptor(format!("{self}: {why}")));
        match self.family {
            Family::A | Family::B if self.rank == 0 => bad("rank must be positive"),
            Family::D if self.rank < 2 => bad("type D needs rank at least 2"),
            Family::I2 if self.m < 2 => bad("dihedral parameter m must be at least 2"),
            Family::G if self.rank == 0 || self.color_order == 0 => {
                bad("rank and color order must be positive")
            }
            _ if self.rank > 12 => bad("rank above 12 is not supported"),
            Family::G if self.color_order > 60 => bad("color order above 60 is not supported"),
            Family::I2 if self.m > 10_000 => bad("dihedral parameter too large"),
            _ => Ok(()),
        }
    }

    /// Dimension of the space the group acts on (number of coordinates).
    pub fn degree(&self) -> usize {
        match self.family {
            Family::I2 => 2,
            _ => self.rank,
        }
    }

    /// Rank of the reflection representation: dimension of the span of roots.
    pub fn coxeter_rank(&self) -> usize {
        match self.family {
            Family::A => self.rank - 1,
            Family::G if self.color_order == 1 => self.rank - 1,
            Family::I2 => 2,
            _ => self.rank,
        }
    }

    /// Exponents `e_i` with `sum_w q^{l_T(w)} = prod (1 + e_i q)`.
    ///
    /// For `G(r,n)` with `r >= 2` these are `r*i - 1`, the codegrees of the
    /// pseudoreflection arrangement.
    pub fn exponents(&self) -> Vec<usize> {
        let n = self.rank;
        match self.family {
            Family::A => (1..n).collect(),
            Family::B => (1..=n).map(|i| 2 * i - 1).collect(),
            Family::D => {
                let mut e: Vec<usize> = (1..n).map(|i| 2 * i - 1).collect();
                e.push(n - 1);
                e.sort_unstable();
                e
            }
            Family::I2 => vec![1, self.m - 1],
            Family::G if self.color_order == 1 => (1..n).collect(),
            Family::G => (1..=n).map(|i| self.color_order * i - 1).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.exponents().iter().map(|e| e + 1).product()
    }
}

impl fmt::Display for CoxeterDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "S{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            Family::I2 => write!(f, "I2({})", self.m),
            Family::G => write!(f, "G({},{})", self.color_order, self.rank),
        }
    }
}

impl FromStr for CoxeterDescriptor {
    type Err = Error;

    /// Accepts `S4`, `A3` (Coxeter type, i.e. `S4`), `B3`, `D4`, `I2(5)` and
    /// `G(3,2)`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let num = |x: &str| x.parse::<usize>().map_err(|_| err("expected a positive integer"));
        let desc = if let Some(rest) = t.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            Self::dihedral(num(rest)?)
        } else if let Some(rest) = t.strip_prefix("G(").and_then(|r| r.strip_suffix(')')) {
            let (r, n) = rest.split_once(',').ok_or_else(|| err("expected G(r,n)"))?;
            Self::colored(num(r)?, num(n)?)
        } else if let Some(rest) = t.strip_prefix('S') {
            Self::symmetric(num(rest)?)
        } else if let Some(rest) = t.strip_prefix('A') {
            Self::symmetric(num(rest)? + 1)
        } else if let Some(rest) = t.strip_prefix('B') {
            Self::hyperoctahedral(num(rest)?)
        } else if let Some(rest) = t.strip_prefix('D') {
            Self::even_signed(num(rest)?)
        } else {
            return Err(err("unknown group family"));
        };
        desc.validate()?;
        Ok(desc)
    }
}
