//! n-bit vectors identified with unsigned integers.
//!
//! Vector `(x1, ..., xn)` maps to `sum xi * 2^(n-i)`, so `x1` is the most
//! significant of the `n` used bits. With `n = 5` the monomial `x4x5` has
//! mask `3` and `x1` has mask `16`.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not};

use serde::{Deserialize, Serialize};

use crate::{Error, Result, MAX_VARS};

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BitMask(pub u64);

impl BitMask {
    pub const ZERO: BitMask = BitMask(0);

    /// Mask with all `n` variable bits set.
    pub fn full(n: u32) -> BitMask {
        debug_assert!(n <= MAX_VARS);
        if n >= 64 {
            BitMask(u64::MAX)
        } else {
            BitMask((1u64 << n) - 1)
        }
    }

    /// Mask of the single variable `x_index` (1-based).
    pub fn variable(n: u32, index: u32) -> Result<BitMask> {
        if index == 0 || index > n {
            return Err(Error::VariableIndex(u64::from(index)));
        }
        Ok(BitMask(1u64 << (n - index)))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Hamming weight.
    #[inline]
    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    /// `self ⪯ other`: the support of `self` is contained in that of `other`.
    #[inline]
    pub fn is_subvector_of(self, other: BitMask) -> bool {
        self.0 & other.0 == self.0
    }

    #[inline]
    pub fn fits(self, n: u32) -> bool {
        self.is_subvector_of(BitMask::full(n))
    }

    pub fn check_fits(self, n: u32) -> Result<BitMask> {
        if self.fits(n) {
            Ok(self)
        } else {
            Err(Error::MaskOutOfRange { mask: self.0, n })
        }
    }

    /// 1-based indices of the variables in the support, ascending.
    pub fn variables(self, n: u32) -> impl Iterator<Item = u32> {
        (1..=n).filter(move |&i| self.0 >> (n - i) & 1 == 1)
    }

    /// All sub-vectors of `self`, including zero and `self`, in decreasing
    /// integer order.
    pub fn subvectors(self) -> Subvectors {
        Subvectors {
            of: self.0,
            next: Some(self.0),
        }
    }
}

/// `a ⪯ b`.
#[inline]
pub fn is_subvector(a: BitMask, b: BitMask) -> bool {
    a.is_subvector_of(b)
}

impl BitAnd for BitMask {
    type Output = BitMask;
    fn bitand(self, rhs: BitMask) -> BitMask {
        BitMask(self.0 & rhs.0)
    }
}

impl BitOr for BitMask {
    type Output = BitMask;
    fn bitor(self, rhs: BitMask) -> BitMask {
        BitMask(self.0 | rhs.0)
    }
}

impl Not for BitMask {
    type Output = BitMask;
    fn not(self) -> BitMask {
        BitMask(!self.0)
    }
}

impl From<u64> for BitMask {
    fn from(v: u64) -> Self {
        BitMask(v)
    }
}

impl fmt::Debug for BitMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMask({})", self.0)
    }
}

impl fmt::Display for BitMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::LowerHex for BitMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

/// Iterator over the sub-vectors of a mask (`s = (s - 1) & mask`).
#[derive(Debug, Clone)]
pub struct Subvectors {
    of: u64,
    next: Option<u64>,
}

impl Iterator for Subvectors {
    type Item = BitMask;

    fn next(&mut self) -> Option<BitMask> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            Some(cur.wrapping_sub(1) & self.of)
        };
        Some(BitMask(cur))
    }
}
