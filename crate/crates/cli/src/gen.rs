//! Seeded random ANF generation.
//!
//! Stream: ChaCha8 seeded with `seed_from_u64(seed)`. For each candidate
//! monomial, variables `x1..xn` are visited in order and each draws one
//! `u64`; the variable is included when `(draw >> 11) * 2^-53 < q`. Zero and
//! duplicate masks are rejected and redrawn.

use anfnl_core::{AnfFunction, BitMask, Error, Result};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Identifies the generator stream above; bump it if the stream changes.
pub const GENERATOR_VERSION: &str = "chacha8-v1";

pub fn gen(n: u32, p: usize, q: f64, seed: u64) -> Result<AnfFunction> {
    if !(1..=64).contains(&n) {
        return Err(Error::VariableCount(n));
    }
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "inclusion probability must lie in (0, 1), got {q}"
        )));
    }
    if p == 0 {
        return Err(Error::InvalidArgument("p must be at least 1".into()));
    }
    let available = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    if p as u64 > available {
        return Err(Error::InvalidArgument(format!(
            "{p} distinct nonzero monomials requested but only {available} exist for n = {n}"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::HashSet::with_capacity(p);
    let mut monomials = Vec::with_capacity(p);
    while monomials.len() < p {
        let mut mask = 0u64;
        for i in 1..=n {
            if unit_interval(rng.next_u64()) < q {
                mask |= 1u64 << (n - i);
            }
        }
        if mask != 0 && seen.insert(mask) {
            monomials.push(BitMask(mask));
        }
    }
    AnfFunction::new(n, monomials)
}

fn unit_interval(draw: u64) -> f64 {
    (draw >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_a_seed() {
        let a = gen(60, 30, 0.5, 42).unwrap();
        let b = gen(60, 30, 0.5, 42).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, gen(60, 30, 0.5, 43).unwrap());
        assert_eq!(a.len(), 30);
    }

    #[test]
    fn single_variable_has_one_mask() {
        let f = gen(1, 1, 0.5, 7).unwrap();
        assert_eq!(f.monomials(), &[BitMask(1)]);
    }

    #[test]
    fn mean_mask_weight_tracks_q() {
        // 100 seeds x 30 monomials: the mean weight of a mask at q = 1/2 on
        // 60 variables is 30 (slightly above, since zero masks are redrawn).
        let mut total = 0u64;
        let mut count = 0u64;
        for seed in 0..100 {
            let f = gen(60, 30, 0.5, seed).unwrap();
            total += f
                .monomials()
                .iter()
                .map(|m| u64::from(m.weight()))
                .sum::<u64>();
            count += f.len() as u64;
        }
        let mean = total as f64 / count as f64;
        assert!((mean - 30.0).abs() <= 2.0, "mean weight {mean}");
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(gen(3, 8, 0.5, 0).is_err());
        assert!(gen(3, 7, 0.5, 0).is_ok());
        assert!(gen(3, 1, 0.0, 0).is_err());
        assert!(gen(3, 0, 0.5, 0).is_err());
        assert!(gen(65, 1, 0.5, 0).is_err());
    }
}
