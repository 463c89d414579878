//! Sparse algebraic normal form, its text formats, pointwise evaluation and
//! the Möbius transform for small variable counts.
//!
//! Two input forms are accepted by [`AnfFunction::parse`]:
//!
//! * human form, e.g. `x1x5 + x4x5 + x1*x2*x3 + 1`. A term is `1`, `0` or a
//!   product of variables `x<i>` (1-based, optionally `*`-separated); terms
//!   are joined with `+` (XOR). Whitespace between tokens is ignored.
//! * mask-list form: a first line `n=<int>` followed by one monomial mask per
//!   line, decimal or `0x` hex. Blank lines and `#` comments are skipped.
//!
//! Masks follow the MSB-first convention of [`crate::mask`].

use std::fmt;
use std::str::FromStr;

use indexmap::IndexSet;

use crate::{BitMask, Error, Result, MAX_VARS};

/// Largest variable count for which a truth table is materialized.
pub const MAX_TABLE_VARS: u32 = 24;

/// A Boolean function as an XOR of distinct nonzero monomials, plus a flag
/// for a stripped constant-1 term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnfFunction {
    n: u32,
    monomials: Vec<BitMask>,
    complemented: bool,
}

impl AnfFunction {
    /// Builds a function from raw monomial masks. Duplicates cancel pairwise
    /// and mask 0 toggles the complement flag. First-appearance order of the
    /// surviving monomials is kept.
    pub fn new<I>(n: u32, monomials: I) -> Result<AnfFunction>
    where
        I: IntoIterator,
        I::Item: Into<BitMask>,
    {
        check_var_count(n)?;
        let mut set: IndexSet<BitMask> = IndexSet::new();
        let mut complemented = false;
        for m in monomials {
            let m = m.into().check_fits(n)?;
            if m.is_zero() {
                complemented = !complemented;
            } else if !set.shift_remove(&m) {
                set.insert(m);
            }
        }
        Ok(AnfFunction {
            n,
            monomials: set.into_iter().collect(),
            complemented,
        })
    }

    /// The constant-zero function on `n` variables.
    pub fn zero(n: u32) -> Result<AnfFunction> {
        Self::new(n, std::iter::empty::<BitMask>())
    }

    pub fn with_complement(mut self, complemented: bool) -> AnfFunction {
        self.complemented = complemented;
        self
    }

    pub fn parse(text: &str, n_override: Option<u32>) -> Result<AnfFunction> {
        if first_content_line(text).is_some_and(|l| l.trim_start().starts_with("n")) {
            parse_mask_list(text, n_override)
        } else {
            parse_human(text, n_override)
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn monomials(&self) -> &[BitMask] {
        &self.monomials
    }

    /// Number of nonzero monomials, `p`.
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// True when a constant-1 term was stripped from the monomial list.
    pub fn is_complemented(&self) -> bool {
        self.complemented
    }

    /// `f(x)` as the XOR of all monomials `u ⪯ x`; O(p) for any `n`.
    pub fn evaluate(&self, x: BitMask) -> bool {
        let active = self
            .monomials
            .iter()
            .filter(|u| u.is_subvector_of(x))
            .count();
        (active & 1 == 1) ^ self.complemented
    }

    /// ANF coefficient vector of length `2^n` (index = monomial mask).
    pub fn coefficient_vector(&self) -> Result<Vec<bool>> {
        check_table_size(self.n, "truth table")?;
        let mut coeffs = vec![false; 1usize << self.n];
        coeffs[0] = self.complemented;
        for m in &self.monomials {
            coeffs[m.0 as usize] = true;
        }
        Ok(coeffs)
    }

    pub fn truth_table(&self) -> Result<TruthTable> {
        let bits = mobius_transform(&self.coefficient_vector()?)?;
        Ok(TruthTable { n: self.n, bits })
    }

    /// Mask-list text form (`n=<n>` header, one decimal mask per line; a
    /// stripped constant is written back as mask 0).
    pub fn to_mask_list(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        if self.complemented {
            out.push_str("0\n");
        }
        for m in &self.monomials {
            out.push_str(&format!("{}\n", m.0));
        }
        out
    }

    fn write_monomial(&self, f: &mut fmt::Formatter<'_>, m: BitMask) -> fmt::Result {
        for v in m.variables(self.n) {
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

impl fmt::Display for AnfFunction {
    /// Human form, variables in ascending index order; the empty function
    /// prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if self.complemented {
            f.write_str("1")?;
            first = false;
        }
        for &m in &self.monomials {
            if !first {
                f.write_str(" + ")?;
            }
            self.write_monomial(f, m)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl FromStr for AnfFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AnfFunction::parse(s, None)
    }
}

/// Output bits of a function, indexed by point mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    n: u32,
    bits: Vec<bool>,
}

impl TruthTable {
    pub fn from_bits(bits: Vec<bool>) -> Result<TruthTable> {
        let n = log2_len(bits.len())?;
        check_table_size(n, "truth table")?;
        Ok(TruthTable { n, bits })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, x: BitMask) -> bool {
        self.bits[x.0 as usize]
    }

    pub fn weight(&self) -> u64 {
        self.bits.iter().filter(|&&b| b).count() as u64
    }

    /// Hamming distance to the affine function `<w, x> ⊕ c`.
    pub fn distance_to_affine(&self, w: BitMask, c: bool) -> u64 {
        self.bits
            .iter()
            .enumerate()
            .filter(|&(x, &b)| b != ((((x as u64) & w.0).count_ones() & 1 == 1) ^ c))
            .count() as u64
    }

    /// Recovers the ANF (inverse Möbius transform).
    pub fn to_anf(&self) -> Result<AnfFunction> {
        let coeffs = mobius_transform(&self.bits)?;
        let n = self.n.max(1);
        AnfFunction::new(
            n,
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c)
                .map(|(u, _)| BitMask(u as u64)),
        )
    }
}

/// Binary Möbius transform over F2. It is an involution: it maps ANF
/// coefficients to the truth table and back.
pub fn mobius_transform(bits: &[bool]) -> Result<Vec<bool>> {
    log2_len(bits.len())?;
    let mut out = bits.to_vec();
    let mut half = 1;
    while half < out.len() {
        for block in out.chunks_exact_mut(half * 2) {
            let (lo, hi) = block.split_at_mut(half);
            for (l, h) in lo.iter().zip(hi.iter_mut()) {
                *h ^= *l;
            }
        }
        half *= 2;
    }
    Ok(out)
}

pub(crate) fn check_var_count(n: u32) -> Result<()> {
    if (1..=MAX_VARS).contains(&n) {
        Ok(())
    } else {
        Err(Error::VariableCount(n))
    }
}

pub(crate) fn check_table_size(n: u32, what: &'static str) -> Result<()> {
    if n > MAX_TABLE_VARS {
        Err(Error::TooLarge {
            what,
            n,
            limit: MAX_TABLE_VARS,
        })
    } else {
        Ok(())
    }
}

fn log2_len(len: usize) -> Result<u32> {
    if len.is_power_of_two() {
        Ok(len.trailing_zeros())
    } else {
        Err(Error::NotPowerOfTwo(len))
    }
}

fn first_content_line(text: &str) -> Option<&str> {
    text.lines()
        .map(strip_comment)
        .find(|l| !l.trim().is_empty())
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(head, _)| head)
}

fn parse_mask_list(text: &str, n_override: Option<u32>) -> Result<AnfFunction> {
    let mut header: Option<u32> = None;
    let mut masks = Vec::new();
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let line_start = offset;
        offset += raw.len();
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if header.is_none() {
            let value = line
                .strip_prefix('n')
                .map(str::trim_start)
                .and_then(|rest| rest.strip_prefix('='))
                .ok_or_else(|| syntax(line_start, "expected `n=<int>` header"))?;
            let n = value
                .trim()
                .parse::<u32>()
                .map_err(|_| syntax(line_start, "invalid variable count in header"))?;
            header = Some(n);
            continue;
        }
        let parsed = match line.strip_prefix("0x").or_else(|| line.strip_prefix("0X")) {
            Some(hex) => u64::from_str_radix(hex, 16),
            None => line.parse::<u64>(),
        };
        let mask = parsed.map_err(|_| syntax(line_start, &format!("invalid mask `{line}`")))?;
        masks.push(BitMask(mask));
    }
    let n = n_override
        .or(header)
        .ok_or_else(|| syntax(0, "missing `n=<int>` header"))?;
    AnfFunction::new(n, masks)
}

fn syntax(pos: usize, msg: &str) -> Error {
    Error::Syntax {
        pos,
        msg: msg.to_owned(),
    }
}

enum Term {
    Const(bool),
    Vars(Vec<u32>),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(syntax(start, "expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| syntax(start, "integer too large"))
    }

    fn term(&mut self) -> Result<Term> {
        let start = self.pos;
        match self.peek() {
            Some(b'0') | Some(b'1') => {
                let v = self.integer()?;
                match v {
                    0 => Ok(Term::Const(false)),
                    1 => Ok(Term::Const(true)),
                    _ => Err(syntax(start, "constant term must be 0 or 1")),
                }
            }
            Some(b'x') => {
                let mut vars = Vec::new();
                loop {
                    match self.peek() {
                        Some(b'x') => {
                            self.pos += 1;
                            let idx = self.integer()?;
                            if idx == 0 || idx > u64::from(MAX_VARS) {
                                return Err(Error::VariableIndex(idx));
                            }
                            vars.push(idx as u32);
                        }
                        Some(b'*') => {
                            self.pos += 1;
                            if self.peek() != Some(b'x') {
                                return Err(syntax(self.pos, "expected a variable after `*`"));
                            }
                        }
                        _ => break,
                    }
                }
                Ok(Term::Vars(vars))
            }
            Some(_) => Err(syntax(self.pos, "expected a term (`1`, `0` or `x<i>`)")),
            None => Err(syntax(self.pos, "unexpected end of input")),
        }
    }
}

fn parse_human(text: &str, n_override: Option<u32>) -> Result<AnfFunction> {
    let mut lexer = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut terms = vec![lexer.term()?];
    loop {
        match lexer.peek() {
            None => break,
            Some(b'+') => {
                lexer.pos += 1;
                terms.push(lexer.term()?);
            }
            Some(_) => return Err(syntax(lexer.pos, "expected `+` or end of input")),
        }
    }

    let max_index = terms
        .iter()
        .filter_map(|t| match t {
            Term::Vars(v) => v.iter().copied().max(),
            Term::Const(_) => None,
        })
        .max();
    let n = match (n_override, max_index) {
        (Some(n), Some(m)) if m > n => return Err(Error::VariableIndex(u64::from(m))),
        (Some(n), _) => n,
        (None, Some(m)) => m,
        (None, None) => 1,
    };
    check_var_count(n)?;

    let masks = terms.into_iter().filter_map(|t| match t {
        Term::Const(false) => None,
        Term::Const(true) => Some(BitMask::ZERO),
        Term::Vars(vars) => Some(
            vars.into_iter()
                .fold(BitMask::ZERO, |acc, v| acc | BitMask(1u64 << (n - v))),
        ),
    });
    AnfFunction::new(n, masks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) const EXAMPLE: &str = "x1x5 + x4x5 + x1x2x3 + x1x2x4 + x1x2x3x4x5";

    fn mask_set(f: &AnfFunction) -> Vec<u64> {
        let mut v: Vec<u64> = f.monomials().iter().map(|m| m.0).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn parses_worked_example() {
        let f = AnfFunction::parse(EXAMPLE, Some(5)).unwrap();
        assert_eq!(mask_set(&f), vec![3, 17, 26, 28, 31]);
        assert_eq!(
            f.monomials().iter().map(|m| m.0).collect::<Vec<_>>(),
            vec![17, 3, 28, 26, 31]
        );
        assert!(!f.is_complemented());
        // n inferred from the largest index
        assert_eq!(AnfFunction::parse(EXAMPLE, None).unwrap(), f);
    }

    #[test]
    fn duplicates_cancel_and_constant_is_stripped() {
        let f = AnfFunction::parse("x1 + x1", None).unwrap();
        assert!(f.is_empty());
        assert!(!f.is_complemented());

        let g = AnfFunction::parse("1 + x2", Some(3)).unwrap();
        assert_eq!(mask_set(&g), vec![2]);
        assert!(g.is_complemented());

        let h = AnfFunction::parse("1 + x1 + 1", Some(2)).unwrap();
        assert!(!h.is_complemented());
    }

    #[test]
    fn star_separators_and_whitespace() {
        let f = AnfFunction::parse(" x1 * x2 +x3\n+ x2x1 ", None).unwrap();
        assert_eq!(mask_set(&f), vec![1]);
        assert_eq!(f.n(), 3);
    }

    #[test]
    fn syntax_errors_report_position() {
        match AnfFunction::parse("x1 + + x2", None) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            AnfFunction::parse("x1 x2 y", None),
            Err(Error::Syntax { pos: 6, .. })
        ));
        assert!(matches!(
            AnfFunction::parse("", None),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            AnfFunction::parse("x1*", None),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            AnfFunction::parse("2", None),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn variable_index_errors() {
        assert_eq!(AnfFunction::parse("x0", None), Err(Error::VariableIndex(0)));
        assert_eq!(
            AnfFunction::parse("x65", None),
            Err(Error::VariableIndex(65))
        );
        assert_eq!(
            AnfFunction::parse("x4", Some(3)),
            Err(Error::VariableIndex(4))
        );
        assert!(AnfFunction::parse("x64", None).is_ok());
    }

    #[test]
    fn mask_list_form() {
        let f = AnfFunction::parse("n=5\n17\n0x3\n# comment\n28\n26\n\n31\n", None).unwrap();
        assert_eq!(f, AnfFunction::parse(EXAMPLE, Some(5)).unwrap());
        assert!(matches!(
            AnfFunction::parse("n=3\n8\n", None),
            Err(Error::MaskOutOfRange { mask: 8, n: 3 })
        ));
        assert!(matches!(
            AnfFunction::parse("n=3\nzz\n", None),
            Err(Error::Syntax { pos: 4, .. })
        ));
        let c = AnfFunction::parse("n = 2\n0\n1", None).unwrap();
        assert!(c.is_complemented());
        assert_eq!(AnfFunction::parse(&c.to_mask_list(), None).unwrap(), c);
    }

    #[test]
    fn formats_human_form() {
        let f = AnfFunction::parse("1 + x3x1 + x2", None).unwrap();
        assert_eq!(f.to_string(), "1 + x1x3 + x2");
        assert_eq!(AnfFunction::zero(4).unwrap().to_string(), "0");
    }

    #[test]
    fn evaluation_examples() {
        let f = AnfFunction::parse(EXAMPLE, Some(5)).unwrap();
        assert!(f.evaluate(BitMask(31)));
        assert!(!f.evaluate(BitMask(0)));
        assert!(!f.evaluate(BitMask(1)));
        // x = 1 cross-checked against the table
        let tt = f.truth_table().unwrap();
        assert!(!tt.get(BitMask(1)));
    }

    #[test]
    fn truth_table_examples() {
        let f = AnfFunction::new(3, [3u64]).unwrap();
        let expected = [false, false, false, true, false, false, false, true];
        assert_eq!(f.truth_table().unwrap().bits(), &expected);

        let empty = AnfFunction::zero(3).unwrap();
        assert!(empty.truth_table().unwrap().bits().iter().all(|&b| !b));

        let linear = AnfFunction::new(3, [1u64, 2, 4]).unwrap();
        let tt = linear.truth_table().unwrap();
        for x in 0..8u64 {
            assert_eq!(tt.get(BitMask(x)), x.count_ones() % 2 == 1);
        }
        assert!(matches!(
            AnfFunction::zero(25).unwrap().truth_table(),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn mobius_examples() {
        let mut unit = vec![false; 8];
        unit[0] = true;
        assert!(mobius_transform(&unit).unwrap().iter().all(|&b| b));

        let mut coeffs = vec![false; 32];
        for m in [3, 17, 26, 28, 31] {
            coeffs[m] = true;
        }
        let table = mobius_transform(&coeffs).unwrap();
        assert_eq!(table.iter().filter(|&&b| b).count(), 11);

        assert_eq!(
            mobius_transform(&[true, false, true]),
            Err(Error::NotPowerOfTwo(3))
        );
    }

    #[test]
    fn mobius_is_involution_on_random_vectors() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..100 {
            let v: Vec<bool> = (0..1024).map(|_| rng.random()).collect();
            let back = mobius_transform(&mobius_transform(&v).unwrap()).unwrap();
            assert_eq!(back, v);
        }
    }

    #[test]
    fn truth_table_round_trips_to_anf() {
        let f = AnfFunction::parse("1 + x1x2 + x3", None).unwrap();
        let g = f.truth_table().unwrap().to_anf().unwrap();
        assert_eq!(mask_set(&g), mask_set(&f));
        assert!(g.is_complemented());
    }

    fn arb_function() -> impl Strategy<Value = AnfFunction> {
        (1u32..=12).prop_flat_map(|n| {
            let full = (1u64 << n) - 1;
            (Just(n), proptest::collection::vec(0..=full, 0..20))
                .prop_map(|(n, masks)| AnfFunction::new(n, masks).unwrap())
        })
    }

    proptest! {
        #[test]
        fn table_matches_pointwise_evaluation(f in arb_function()) {
            let tt = f.truth_table().unwrap();
            for x in 0..(1u64 << f.n()) {
                prop_assert_eq!(tt.get(BitMask(x)), f.evaluate(BitMask(x)));
            }
        }

        #[test]
        fn format_then_parse_round_trips(f in arb_function()) {
            let g = AnfFunction::parse(&f.to_string(), Some(f.n())).unwrap();
            prop_assert_eq!(mask_set(&g), mask_set(&f));
            prop_assert_eq!(g.is_complemented(), f.is_complemented());
        }
    }
}
