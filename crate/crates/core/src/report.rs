//! Analysis results, shaped for direct JSON serialization.

use serde::{Deserialize, Serialize};

use crate::BitMask;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: u32,
    /// Number of nonzero monomials.
    pub p: usize,
    /// Number of combined coefficients (0 for the exhaustive oracle, which
    /// does not expand them).
    pub k: usize,
    pub weight: i128,
    pub nonlinearity: i128,
    /// `max_w |W_f(w)|`, including `w = 0`.
    pub max_abs_walsh: i128,
    pub witnesses: Vec<Witness>,
    pub nearest: Vec<NearestAffine>,
    pub stats: SearchStats,
}

impl AnalysisReport {
    /// Half of the maximum absolute Walsh value, `2^(n-1) - nonlinearity`.
    pub fn max_abs_half_walsh(&self) -> i128 {
        self.max_abs_walsh / 2
    }
}

/// A distance-tree leaf attaining the maximum, with the linear functions
/// (rows) it stands for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// One character per term in problem order, `1` for a nonzero column.
    pub path: String,
    pub value: i128,
    pub linear_functions: Vec<BitMask>,
    /// Set when the sub-vector expansion was skipped by the enumeration
    /// guard; `linear_functions` is then empty.
    pub truncated: bool,
}

/// An affine function at minimum distance: `l_w` when `complement` is false,
/// `l_w ⊕ 1` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NearestAffine {
    pub w: BitMask,
    pub walsh: i128,
    pub distance: i128,
    pub complement: bool,
}

impl NearestAffine {
    /// Picks the closer of `l_w` and `l_w ⊕ 1` from the sign of `W_f(w)`.
    pub fn from_walsh(n: u32, w: BitMask, walsh: i128) -> NearestAffine {
        let half_n = 1i128 << (n - 1);
        let complement = walsh < 0;
        let distance = if complement {
            half_n + walsh / 2
        } else {
            half_n - walsh / 2
        };
        NearestAffine {
            w,
            walsh,
            distance,
            complement,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub leaves: u64,
    pub pruned: u64,
    pub seconds: f64,
}
