//! Exhaustive reference implementations for small variable counts.
//!
//! Everything here materializes `2^n` (or `4^n`) values and exists to check
//! the sparse solver, never to feed it.

use std::io::Write;

use crate::anf::{check_table_size, MAX_TABLE_VARS};
use crate::report::{AnalysisReport, NearestAffine, SearchStats};
use crate::{AnfFunction, BitMask, Error, Result, TruthTable};

/// Largest order for which a linear distance matrix is materialized.
pub const MAX_LDM_ORDER: u32 = 12;

/// `W_f(w) = sum_x (-1)^(f(x) ⊕ <w,x>)` for every `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: u32,
    values: Vec<i64>,
}

impl WalshSpectrum {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, w: BitMask) -> i64 {
        self.values[w.0 as usize]
    }

    pub fn max_abs(&self) -> i64 {
        self.values.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    /// `sum_w W_f(w)^2`, which equals `2^(2n)` for every Boolean function.
    pub fn sum_of_squares(&self) -> i128 {
        self.values
            .iter()
            .map(|&v| i128::from(v) * i128::from(v))
            .sum()
    }
}

/// Fast Walsh transform by the in-place butterfly, O(n 2^n).
pub fn fast_walsh(tt: &TruthTable) -> WalshSpectrum {
    let mut values: Vec<i64> = tt.bits().iter().map(|&b| if b { -1 } else { 1 }).collect();
    let mut half = 1;
    while half < values.len() {
        for block in values.chunks_exact_mut(half * 2) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half *= 2;
    }
    WalshSpectrum { n: tt.n(), values }
}

/// Nonlinearity by a full spectrum scan over all `w`, including `w = 0`.
///
/// Every maximizer is listed in `nearest`; `witnesses` stays empty since no
/// distance tree is built.
pub fn nonlinearity_oracle(f: &AnfFunction) -> Result<AnalysisReport> {
    let n = f.n();
    check_table_size(n, "exhaustive oracle")?;
    let tt = f.truth_table()?;
    let spectrum = fast_walsh(&tt);
    let max_abs = spectrum.max_abs();
    let nearest = spectrum
        .values()
        .iter()
        .enumerate()
        .filter(|(_, v)| v.abs() == max_abs)
        .map(|(w, &v)| NearestAffine::from_walsh(n, BitMask(w as u64), i128::from(v)))
        .collect();
    let max_abs = i128::from(max_abs);
    Ok(AnalysisReport {
        n,
        p: f.len(),
        k: 0,
        weight: i128::from(tt.weight()),
        nonlinearity: (1i128 << (n - 1)) - max_abs / 2,
        max_abs_walsh: max_abs,
        witnesses: Vec::new(),
        nearest,
        stats: SearchStats::default(),
    })
}

/// Closed-form LDM entry: `(-1)^wt(i) * 2^(n - wt(j))` if `i ⪯ j`, else 0.
pub fn ldm_entry(n: u32, i: BitMask, j: BitMask) -> i128 {
    if !i.is_subvector_of(j) {
        return 0;
    }
    let magnitude = 1i128 << (n - j.weight());
    if i.weight().is_multiple_of(2) {
        magnitude
    } else {
        -magnitude
    }
}

/// Dense `2^n × 2^n` linear distance matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearDistanceMatrix {
    n: u32,
    entries: Vec<i64>,
}

impl LinearDistanceMatrix {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of rows (and columns), `2^n`.
    pub fn dim(&self) -> usize {
        1usize << self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim() + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        let dim = self.dim();
        &self.entries[i * dim..(i + 1) * dim]
    }

    /// Builds the matrix entry by entry from [`ldm_entry`].
    pub fn closed_form(n: u32) -> Result<LinearDistanceMatrix> {
        check_order(n)?;
        let dim = 1u64 << n;
        let entries = (0..dim)
            .flat_map(|i| (0..dim).map(move |j| ldm_entry(n, BitMask(i), BitMask(j)) as i64))
            .collect();
        Ok(LinearDistanceMatrix { n, entries })
    }

    /// Kronecker powers of `[[2, 1], [0, -1]]`, starting from `[1]`.
    pub fn recursive(n: u32) -> Result<LinearDistanceMatrix> {
        check_order(n)?;
        const FACTOR: [i64; 4] = [2, 1, 0, -1];
        let mut entries = vec![1i64];
        let mut dim = 1;
        for _ in 0..n {
            entries = kronecker(&FACTOR, 2, &entries, dim);
            dim *= 2;
        }
        Ok(LinearDistanceMatrix { n, entries })
    }

    /// Entry `(i, j)` is the sum of Sylvester–Hadamard row `i` over the
    /// columns `x ⪰ j`.
    pub fn from_hadamard(n: u32) -> Result<LinearDistanceMatrix> {
        check_order(n)?;
        let hadamard = sylvester_hadamard(n);
        let dim = 1usize << n;
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            let mut row = hadamard[i * dim..(i + 1) * dim].to_vec();
            superset_sums(&mut row);
            entries.extend_from_slice(&row);
        }
        Ok(LinearDistanceMatrix { n, entries })
    }

    /// CSV dump: a header `row,0,1,...,2^n-1`, then one line per row
    /// starting with the row index.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), csv::Error> {
        let mut writer = csv::Writer::from_writer(out);
        let dim = self.dim();
        let mut header = vec!["row".to_owned()];
        header.extend((0..dim).map(|j| j.to_string()));
        writer.write_record(&header)?;
        for i in 0..dim {
            let mut record = vec![i.to_string()];
            record.extend(self.row(i).iter().map(|v| v.to_string()));
            writer.write_record(&record)?;
        }
        writer.flush()?;
        Ok(())
    }
}

/// `H_n` as a row-major `±1` matrix.
pub fn sylvester_hadamard(n: u32) -> Vec<i64> {
    const FACTOR: [i64; 4] = [1, 1, 1, -1];
    let mut h = vec![1i64];
    let mut dim = 1;
    for _ in 0..n {
        h = kronecker(&FACTOR, 2, &h, dim);
        dim *= 2;
    }
    h
}

/// Kronecker product of two square row-major matrices.
fn kronecker(a: &[i64], a_dim: usize, b: &[i64], b_dim: usize) -> Vec<i64> {
    let dim = a_dim * b_dim;
    let mut out = vec![0i64; dim * dim];
    for ar in 0..a_dim {
        for ac in 0..a_dim {
            let scale = a[ar * a_dim + ac];
            if scale == 0 {
                continue;
            }
            for br in 0..b_dim {
                let row = ar * b_dim + br;
                for bc in 0..b_dim {
                    out[row * dim + ac * b_dim + bc] = scale * b[br * b_dim + bc];
                }
            }
        }
    }
    out
}

/// `v[j] <- sum_{x ⪰ j} v[x]`.
fn superset_sums(v: &mut [i64]) {
    let mut half = 1;
    while half < v.len() {
        for block in v.chunks_exact_mut(half * 2) {
            let (lo, hi) = block.split_at_mut(half);
            for (l, h) in lo.iter_mut().zip(hi.iter()) {
                *l += *h;
            }
        }
        half *= 2;
    }
}

fn check_order(n: u32) -> Result<()> {
    if n > MAX_LDM_ORDER {
        Err(Error::TooLarge {
            what: "linear distance matrix",
            n,
            limit: MAX_LDM_ORDER,
        })
    } else {
        Ok(())
    }
}

const _: () = assert!(MAX_LDM_ORDER <= MAX_TABLE_VARS);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const EXAMPLE: &str = "x1x5 + x4x5 + x1x2x3 + x1x2x4 + x1x2x3x4x5";

    #[rustfmt::skip]
    const TABLE_II: [[i64; 8]; 8] = [
        [8,  4,  4,  2,  4,  2,  2,  1],
        [0, -4,  0, -2,  0, -2,  0, -1],
        [0,  0, -4, -2,  0,  0, -2, -1],
        [0,  0,  0,  2,  0,  0,  0,  1],
        [0,  0,  0,  0, -4, -2, -2, -1],
        [0,  0,  0,  0,  0,  2,  0,  1],
        [0,  0,  0,  0,  0,  0,  2,  1],
        [0,  0,  0,  0,  0,  0,  0, -1],
    ];

    fn example() -> AnfFunction {
        AnfFunction::parse(EXAMPLE, Some(5)).unwrap()
    }

    fn spectrum_of(text: &str, n: u32) -> WalshSpectrum {
        fast_walsh(
            &AnfFunction::parse(text, Some(n))
                .unwrap()
                .truth_table()
                .unwrap(),
        )
    }

    #[test]
    fn walsh_of_worked_example() {
        let s = fast_walsh(&example().truth_table().unwrap());
        assert_eq!(s.get(BitMask(0)), 10);
        assert_eq!(s.get(BitMask(1)), 14);
        assert_eq!(s.get(BitMask(3)), -6);
        assert_eq!(s.get(BitMask(18)), 10);
        assert_eq!(s.get(BitMask(19)), -10);
    }

    #[test]
    fn walsh_of_trivial_functions() {
        let zero = fast_walsh(&AnfFunction::zero(3).unwrap().truth_table().unwrap());
        assert_eq!(zero.values(), &[8, 0, 0, 0, 0, 0, 0, 0]);

        let x5 = spectrum_of("x5", 5);
        for w in 0..32u64 {
            assert_eq!(x5.get(BitMask(w)), if w == 1 { 32 } else { 0 });
        }
    }

    #[test]
    fn oracle_nonlinearity_examples() {
        let r = nonlinearity_oracle(&example()).unwrap();
        assert_eq!(r.nonlinearity, 9);
        assert_eq!(r.weight, 11);
        assert_eq!(r.nearest.len(), 1);
        let best = r.nearest[0];
        assert_eq!(
            (best.w, best.walsh, best.distance, best.complement),
            (BitMask(1), 14, 9, false)
        );

        for affine in ["x1 + x3", "1 + x2", "x4", "1"] {
            let f = AnfFunction::parse(affine, Some(4)).unwrap();
            assert_eq!(nonlinearity_oracle(&f).unwrap().nonlinearity, 0, "{affine}");
        }
    }

    #[test]
    fn oracle_matches_direct_distance_count_for_x1x2() {
        // all 8 affine functions of two variables, counted point by point
        let f = AnfFunction::parse("x1x2", Some(2)).unwrap();
        let tt = f.truth_table().unwrap();
        let direct = (0..4u64)
            .flat_map(|w| [false, true].map(|c| tt.distance_to_affine(BitMask(w), c)))
            .min()
            .unwrap();
        assert_eq!(direct, 1);
        assert_eq!(nonlinearity_oracle(&f).unwrap().nonlinearity, 1);
    }

    #[test]
    fn walsh_agrees_with_distance_counting() {
        // W_f(w) = 2^n - 2 d(f, l_w)
        let f = example();
        let tt = f.truth_table().unwrap();
        let s = fast_walsh(&tt);
        for w in 0..32u64 {
            let d = tt.distance_to_affine(BitMask(w), false) as i64;
            assert_eq!(s.get(BitMask(w)), 32 - 2 * d);
        }
    }

    #[test]
    fn ldm_entry_examples() {
        assert_eq!(ldm_entry(3, BitMask(1), BitMask(3)), -2);
        assert_eq!(ldm_entry(3, BitMask(0), BitMask(0)), 8);
        assert_eq!(ldm_entry(3, BitMask(5), BitMask(2)), 0);
        assert_eq!(ldm_entry(64, BitMask(0), BitMask(0)), 1i128 << 64);
    }

    #[test]
    fn all_constructions_reproduce_table_ii() {
        for m in [
            LinearDistanceMatrix::closed_form(3).unwrap(),
            LinearDistanceMatrix::recursive(3).unwrap(),
            LinearDistanceMatrix::from_hadamard(3).unwrap(),
        ] {
            for (i, row) in TABLE_II.iter().enumerate() {
                assert_eq!(m.row(i), row);
            }
        }
    }

    #[test]
    fn small_order_constructions() {
        assert_eq!(LinearDistanceMatrix::recursive(0).unwrap().entries, vec![1]);
        assert_eq!(
            LinearDistanceMatrix::recursive(1).unwrap().entries,
            vec![2, 1, 0, -1]
        );
        for n in [0, 4, 7] {
            let h = LinearDistanceMatrix::from_hadamard(n).unwrap();
            assert_eq!(h.get(0, 0), 1i64 << n);
        }
        // H_3 row l1 at the columns {3, 7} ⪰ 3 is (-, -)
        let h3 = sylvester_hadamard(3);
        assert_eq!((h3[8 + 3], h3[8 + 7]), (-1, -1));
        assert_eq!(
            LinearDistanceMatrix::from_hadamard(3).unwrap().get(1, 3),
            -2
        );
    }

    #[test]
    fn constructions_agree_up_to_order_8() {
        for n in 0..=8 {
            let closed = LinearDistanceMatrix::closed_form(n).unwrap();
            assert_eq!(
                LinearDistanceMatrix::recursive(n).unwrap(),
                closed,
                "n = {n}"
            );
            assert_eq!(
                LinearDistanceMatrix::from_hadamard(n).unwrap(),
                closed,
                "n = {n}"
            );
        }
    }

    #[test]
    fn order_guard() {
        assert!(matches!(
            LinearDistanceMatrix::recursive(13),
            Err(Error::TooLarge { limit: 12, .. })
        ));
    }

    #[test]
    fn structural_properties_hold() {
        for n in 1..=8u32 {
            let m = LinearDistanceMatrix::recursive(n).unwrap();
            let dim = m.dim();
            let full = (1u64 << n) - 1;
            for j in 0..dim {
                let jm = BitMask(j as u64);
                let mag = 1i64 << (n - jm.weight());
                for i in 0..dim {
                    let im = BitMask(i as u64);
                    let v = m.get(i, j);
                    // column value set
                    assert!(v == 0 || v == mag || v == -mag);
                    // nonzero exactly on sub-vectors of j (column) / super-vectors of i (row)
                    assert_eq!(v != 0, im.is_subvector_of(jm));
                    // zero exactly where the row has a bit outside supp(j)
                    assert_eq!(v == 0, (im.0 & (full & !jm.0)) != 0);
                    // row sign by parity of wt(i)
                    if v != 0 {
                        assert_eq!(v > 0, im.weight().is_multiple_of(2));
                    }
                }
            }
            for j1 in 0..dim {
                for j2 in 0..dim {
                    let (a, b) = (BitMask(j1 as u64), BitMask(j2 as u64));
                    for i in 0..dim {
                        if a.is_subvector_of(b) && m.get(i, j1) != 0 {
                            assert_ne!(m.get(i, j2), 0);
                        }
                        if i != 0 && a.0 & b.0 == 0 {
                            assert!(m.get(i, j1) == 0 || m.get(i, j2) == 0);
                        }
                    }
                }
            }
            // the first column has one nonzero entry, the last has none
            assert_eq!((0..dim).filter(|&i| m.get(i, 0) != 0).count(), 1);
            assert!((0..dim).all(|i| m.get(i, dim - 1) != 0));
        }
    }

    #[test]
    fn csv_dump_has_header_and_rows() {
        let mut buf = Vec::new();
        LinearDistanceMatrix::recursive(1)
            .unwrap()
            .write_csv(&mut buf)
            .unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "row,0,1\n0,2,1\n1,0,-1\n");
    }

    fn arb_function(max_n: u32, max_terms: usize) -> impl Strategy<Value = AnfFunction> {
        (1u32..=max_n).prop_flat_map(move |n| {
            let full = (1u64 << n) - 1;
            proptest::collection::vec(0..=full, 0..max_terms)
                .prop_map(move |masks| AnfFunction::new(n, masks).unwrap())
        })
    }

    proptest! {
        #[test]
        fn spectrum_identities(f in arb_function(12, 24)) {
            let tt = f.truth_table().unwrap();
            let s = fast_walsh(&tt);
            let n = f.n();
            prop_assert_eq!(s.sum_of_squares(), 1i128 << (2 * n));
            prop_assert_eq!(s.get(BitMask(0)), (1i64 << n) - 2 * tt.weight() as i64);
            for &v in s.values() {
                prop_assert!(v % 2 == 0 && v.abs() <= 1i64 << n);
            }
        }

        /// Negating row w of the matrix measures the distance to l_w ⊕ 1.
        #[test]
        fn negated_row_measures_complement(f in arb_function(6, 10)) {
            let n = f.n();
            let m = LinearDistanceMatrix::closed_form(n).unwrap();
            let coeffs = f.coefficient_vector().unwrap();
            let tt = f.truth_table().unwrap();
            let half = 1i64 << (n - 1);
            for w in 1..(1u64 << n) {
                let d = tt.distance_to_affine(BitMask(w), false) as i64;
                let d_c = tt.distance_to_affine(BitMask(w), true) as i64;
                prop_assert_eq!(d_c, (1i64 << n) - d);
                let alpha = row_alpha(&m, w as usize, &coeffs);
                prop_assert_eq!(half + alpha, d);
                prop_assert_eq!(half - alpha, d_c);
            }
        }
    }

    /// Sum of row `w` over the integer weight expansion of the nonzero ANF
    /// coefficients: every product of `k` coefficients contributes
    /// `(-2)^(k-1)` times the entry of the column at the union of their masks.
    fn row_alpha(m: &LinearDistanceMatrix, w: usize, coeffs: &[bool]) -> i64 {
        let support: Vec<usize> = (0..coeffs.len()).filter(|&u| coeffs[u]).collect();
        let p = support.len();
        let mut alpha = 0i64;
        for subset in 1u32..(1 << p) {
            let mut union = 0usize;
            for (bit, &u) in support.iter().enumerate() {
                if subset >> bit & 1 == 1 {
                    union |= u;
                }
            }
            alpha += (-2i64).pow(subset.count_ones() - 1) * m.get(w, union);
        }
        alpha
    }
}
