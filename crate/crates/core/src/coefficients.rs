//! Combined coefficients and the distance problem built from them.
//!
//! Over the integers, `a ⊕ b = a + b - 2ab`; expanding the XOR of `p`
//! monomials this way yields one term per nonempty subset of monomials, with
//! factor `(-2)^(k-1)` for a `k`-subset. A product of monomials is nonzero on
//! exactly the super-vectors of the union of their supports, so all subsets
//! with the same union `u` collapse into one integer `C_u`:
//!
//! ```text
//! C_u = sum over { S : OR(S) = u } of (-2)^(|S| - 1)
//! ```
//!
//! [`calc_coef`] computes these incrementally in O(p * k) for `k` distinct
//! unions; [`brute_force_coef`] enumerates all `2^p` subsets and serves as
//! the reference.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::{AnfFunction, BitMask, Error, Result};

/// Largest monomial count accepted by [`brute_force_coef`].
pub const MAX_BRUTE_FORCE_MONOMIALS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CombinedCoefficient {
    pub mask: BitMask,
    pub c: i128,
}

/// Combined coefficients of the monomial list, in the order entries were
/// first created. Zero coefficients are dropped after each monomial.
pub fn calc_coef(monomials: &[BitMask]) -> Result<Vec<CombinedCoefficient>> {
    const WHAT: &str = "combined coefficients";
    let overflow = || Error::Overflow(WHAT);

    let mut list: IndexMap<BitMask, i128> = IndexMap::new();
    let mut staged: IndexMap<BitMask, i128> = IndexMap::new();
    for &mono in monomials {
        if mono.is_zero() {
            return Err(Error::InvalidArgument(
                "monomial masks must be nonzero".into(),
            ));
        }
        staged.clear();
        let mut s: i128 = 1;
        // Products use the values from before this monomial; staged terms
        // merge afterwards.
        for (&mask, c) in list.iter_mut() {
            if mono.is_subvector_of(mask) {
                *c = c.checked_neg().ok_or_else(overflow)?;
            } else if mask.is_subvector_of(mono) {
                s = c
                    .checked_mul(2)
                    .and_then(|d| s.checked_sub(d))
                    .ok_or_else(overflow)?;
            } else {
                let term = c.checked_mul(-2).ok_or_else(overflow)?;
                let slot = staged.entry(mask | mono).or_insert(0);
                *slot = slot.checked_add(term).ok_or_else(overflow)?;
            }
        }
        for (mask, c) in staged.drain(..) {
            let slot = list.entry(mask).or_insert(0);
            *slot = slot.checked_add(c).ok_or_else(overflow)?;
        }
        let slot = list.entry(mono).or_insert(0);
        *slot = slot.checked_add(s).ok_or_else(overflow)?;
        list.retain(|_, c| *c != 0);
    }
    Ok(list
        .into_iter()
        .map(|(mask, c)| CombinedCoefficient { mask, c })
        .collect())
}

/// Reference evaluation over every nonempty subset of monomials. Output is
/// sorted by mask, zero coefficients omitted.
pub fn brute_force_coef(monomials: &[BitMask]) -> Result<Vec<CombinedCoefficient>> {
    let p = monomials.len();
    if p > MAX_BRUTE_FORCE_MONOMIALS {
        return Err(Error::TooManyMonomials {
            p,
            limit: MAX_BRUTE_FORCE_MONOMIALS,
        });
    }
    let mut acc: std::collections::BTreeMap<BitMask, i128> = Default::default();
    for subset in 1u32..(1u32 << p) {
        let union = monomials
            .iter()
            .enumerate()
            .filter(|(bit, _)| subset >> bit & 1 == 1)
            .fold(BitMask::ZERO, |u, (_, &m)| u | m);
        *acc.entry(union).or_insert(0) += (-2i128).pow(subset.count_ones() - 1);
    }
    Ok(acc
        .into_iter()
        .filter(|&(_, c)| c != 0)
        .map(|(mask, c)| CombinedCoefficient { mask, c })
        .collect())
}

/// Order of the terms (and so of the distance-tree levels).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Ordering {
    /// Descending `|beta|`, ties by ascending mask.
    #[default]
    AbsDesc,
    /// Input monomials in input order, then derived unions in creation order.
    Input,
    /// Ascending `|C|`, ties by ascending mask.
    CoefAsc,
}

impl Ordering {
    pub fn name(self) -> &'static str {
        match self {
            Ordering::AbsDesc => "abs-desc",
            Ordering::Input => "input",
            Ordering::CoefAsc => "coef-asc",
        }
    }
}

impl fmt::Display for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Ordering {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "abs-desc" => Ok(Ordering::AbsDesc),
            "input" => Ok(Ordering::Input),
            "coef-asc" => Ok(Ordering::CoefAsc),
            other => Err(Error::InvalidArgument(format!(
                "unknown ordering `{other}`"
            ))),
        }
    }
}

/// One variable `b_i` of the distance function with its column mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub mask: BitMask,
    /// Combined coefficient `C_u`.
    pub c: i128,
    /// Combined distance coefficient `C_u * 2^(n - wt(u))`.
    pub beta: i128,
}

/// The objective `F(b_1..b_k) = sum beta_i b_i` plus the suffix bound tables
/// used for branch-and-bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceProblem {
    n: u32,
    p: usize,
    terms: Vec<Term>,
    weight: i128,
    complemented: bool,
    order: Ordering,
    suffix_max: Vec<i128>,
    suffix_min: Vec<i128>,
}

impl DistanceProblem {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Monomial count of the source function.
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn k(&self) -> usize {
        self.terms.len()
    }

    /// Weight of the source function (complement-adjusted).
    pub fn weight(&self) -> i128 {
        self.weight
    }

    pub fn is_complemented(&self) -> bool {
        self.complemented
    }

    pub fn order(&self) -> Ordering {
        self.order
    }

    /// `max_i`: the largest increase still possible from level `i` on.
    pub fn suffix_max(&self, i: usize) -> i128 {
        self.suffix_max[i]
    }

    /// `min_i`: the largest decrease still possible from level `i` on.
    pub fn suffix_min(&self, i: usize) -> i128 {
        self.suffix_min[i]
    }

    /// `W_f(0) = 2^n - 2 wt(f)`.
    pub fn walsh_at_zero(&self) -> i128 {
        (1i128 << self.n) - 2 * self.weight
    }

    /// Coefficient dump lines: `<mask-hex> <C> <beta>`.
    pub fn dump_coefficients(&self) -> String {
        self.terms
            .iter()
            .map(|t| format!("{:#x} {} {}\n", t.mask.0, t.c, t.beta))
            .collect()
    }
}

const BETA: &str = "combined distance coefficients";

/// `C_u * 2^(n - wt(u))`, checked.
fn scale_beta(c: i128, n: u32, mask: BitMask) -> Result<i128> {
    c.checked_mul(1i128 << (n - mask.weight()))
        .ok_or(Error::Overflow(BETA))
}

/// Phase one: combined coefficients, betas, weight, and term order.
pub fn build_problem(f: &AnfFunction, order: Ordering) -> Result<DistanceProblem> {
    let n = f.n();
    let coefficients = calc_coef(f.monomials())?;
    let overflow = || Error::Overflow(BETA);

    let mut terms = coefficients
        .iter()
        .map(|cc| {
            Ok(Term {
                mask: cc.mask,
                c: cc.c,
                beta: scale_beta(cc.c, n, cc.mask)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    match order {
        Ordering::AbsDesc => {
            terms.sort_by(|a, b| b.beta.abs().cmp(&a.beta.abs()).then(a.mask.cmp(&b.mask)))
        }
        Ordering::CoefAsc => {
            terms.sort_by(|a, b| a.c.abs().cmp(&b.c.abs()).then(a.mask.cmp(&b.mask)))
        }
        Ordering::Input => {
            let rank: HashMap<BitMask, usize> = f
                .monomials()
                .iter()
                .enumerate()
                .map(|(i, &m)| (m, i))
                .collect();
            // stable sort: derived unions keep their creation order
            terms.sort_by_key(|t| rank.get(&t.mask).map_or((1, 0), |&i| (0, i)));
        }
    }

    let sum = terms
        .iter()
        .try_fold(0i128, |acc, t| acc.checked_add(t.beta))
        .ok_or_else(overflow)?;
    let weight = if f.is_complemented() {
        (1i128 << n) - sum
    } else {
        sum
    };

    let k = terms.len();
    let mut suffix_max = vec![0i128; k + 1];
    let mut suffix_min = vec![0i128; k + 1];
    for i in (0..k).rev() {
        let beta = terms[i].beta;
        suffix_max[i] = suffix_max[i + 1]
            .checked_add(beta.max(0))
            .ok_or_else(overflow)?;
        suffix_min[i] = suffix_min[i + 1]
            .checked_add(beta.min(0))
            .ok_or_else(overflow)?;
    }

    Ok(DistanceProblem {
        n,
        p: f.len(),
        terms,
        weight,
        complemented: f.is_complemented(),
        order,
        suffix_max,
        suffix_min,
    })
}

/// Estimated number of combined coefficients for `p` random monomials on `n`
/// variables, each variable present with probability `q`:
///
/// ```text
/// sum_{k=1..p} (1 - (1 - (1-q)^k)^n) * binom(n, k)
/// ```
///
/// Diagnostic only; it does not track measured counts closely.
pub fn expected_coefficient_count(n: u32, p: usize, q: f64) -> f64 {
    (1..=p as u64)
        .map(|k| {
            let miss = (1.0 - q).powi(k as i32);
            (1.0 - (1.0 - miss).powi(n as i32))
                * statrs::function::factorial::binomial(u64::from(n), k)
        })
        .sum()
}
