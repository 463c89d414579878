//! Phase two: search the distance tree for the largest `|F|`.
//!
//! Level `i` of the tree decides `b_i`, i.e. whether the rows still under
//! consideration have a nonzero entry in column `mask_i` of the linear
//! distance matrix. Row `w` is nonzero in column `u` iff `w ⪯ u`, so a
//! partial path is feasible iff some nonzero `w` is a sub-vector of every
//! column chosen 1 and of none chosen 0. Each leaf is one class of rows
//! sharing the same value `F`, and that value is `±W_f(w)/2`.

use std::fmt;
use std::time::Instant;

use crate::coefficients::{build_problem, DistanceProblem, Ordering};
use crate::oracle::nonlinearity_oracle;
use crate::report::{AnalysisReport, NearestAffine, SearchStats, Witness};
use crate::{AnfFunction, BitMask, Error, Result};

/// Default cap on visited tree nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 1 << 32;

/// Largest `wt(AND(I))` for which a path is expanded into its rows.
pub const MAX_EXPANSION_WEIGHT: u32 = 24;

/// Default variable-count cap for the exhaustive cross-check.
pub const DEFAULT_VERIFY_THRESHOLD: u32 = 20;

/// Can `b = 1` be chosen for column `u`, given columns `c1` already chosen
/// nonzero and `c0` chosen zero?
pub fn branch1(n: u32, c0: &[BitMask], c1: &[BitMask], u: BitMask) -> bool {
    let include = c1.iter().fold(BitMask::full(n), |acc, &m| acc & m);
    let candidate = u & include;
    if candidate.is_zero() {
        return false;
    }
    c0.iter().all(|&i| !(!i & candidate).is_zero())
}

/// Can `b = 0` be chosen for column `u` under the same conditions?
pub fn branch0(n: u32, c0: &[BitMask], c1: &[BitMask], u: BitMask) -> bool {
    let include = c1.iter().fold(BitMask::full(n), |acc, &m| acc & m);
    if (!u & include).is_zero() {
        return false;
    }
    c0.iter().all(|&i| !(!i & include).is_zero())
}

/// A leaf of the distance tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathAssignment {
    pub bits: Vec<bool>,
    pub value: i128,
}

impl PathAssignment {
    /// Column masks chosen nonzero (`I`) and zero (`E`).
    pub fn split_columns(&self, problem: &DistanceProblem) -> (Vec<BitMask>, Vec<BitMask>) {
        let mut include = Vec::new();
        let mut exclude = Vec::new();
        for (&bit, term) in self.bits.iter().zip(problem.terms()) {
            if bit {
                include.push(term.mask);
            } else {
                exclude.push(term.mask);
            }
        }
        (include, exclude)
    }
}

impl fmt::Display for PathAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&bit_string(&self.bits))
    }
}

pub fn bit_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TreeStats {
    pub nodes: u64,
    pub leaves: u64,
    pub pruned: u64,
}

struct Frame {
    depth: usize,
    include: u64,
    excluded: usize,
    partial: i128,
    next: Next,
}

#[derive(Clone, Copy)]
enum Next {
    One,
    Zero,
    Done,
}

/// Depth-first traversal of the distance tree, 1-branch first.
///
/// Every reached leaf is passed to `on_leaf` with its path and value. With
/// `bound = Some(b)` the search keeps `best = max(b, |F| seen so far)` and
/// skips an inner node when everything below it stays strictly inside
/// `(-best, best)`; leaves at `|F| = best` are never skipped. With `None`
/// the whole tree is visited.
pub fn enumerate_tree<F>(
    problem: &DistanceProblem,
    bound: Option<i128>,
    node_budget: u64,
    mut on_leaf: F,
) -> Result<TreeStats>
where
    F: FnMut(&[bool], i128),
{
    let k = problem.k();
    let masks: Vec<u64> = problem.terms().iter().map(|t| t.mask.0).collect();
    let betas: Vec<i128> = problem.terms().iter().map(|t| t.beta).collect();

    let mut stats = TreeStats::default();
    let mut best = bound.unwrap_or(0);
    let mut leaf_best = 0i128;
    let mut path: Vec<bool> = Vec::with_capacity(k);
    let mut zero_columns: Vec<u64> = Vec::new();
    let mut stack: Vec<Frame> = Vec::with_capacity(k + 1);

    // Enters a node: counts it, reports a leaf, or decides to prune. Returns
    // the frame to push when the node has children to explore.
    let mut visit = |frame: Frame, path: &[bool], stats: &mut TreeStats| -> Result<Option<Frame>> {
        stats.nodes += 1;
        if stats.nodes > node_budget {
            return Err(Error::NodeBudget {
                budget: node_budget,
                best: leaf_best.max(best),
            });
        }
        if frame.depth == k {
            stats.leaves += 1;
            let magnitude = frame.partial.abs();
            leaf_best = leaf_best.max(magnitude);
            if bound.is_some() {
                best = best.max(magnitude);
            }
            on_leaf(path, frame.partial);
            return Ok(None);
        }
        if bound.is_some()
            && frame.partial + problem.suffix_max(frame.depth) < best
            && frame.partial + problem.suffix_min(frame.depth) > -best
        {
            stats.pruned += 1;
            return Ok(None);
        }
        Ok(Some(frame))
    };

    let root = Frame {
        depth: 0,
        include: BitMask::full(problem.n()).0,
        excluded: 0,
        partial: 0,
        next: Next::One,
    };
    if let Some(f) = visit(root, &path, &mut stats)? {
        stack.push(f);
    }

    while let Some(top) = stack.last_mut() {
        let depth = top.depth;
        let u = masks[depth];
        match top.next {
            Next::One => {
                top.next = Next::Zero;
                let include = top.include & u;
                // Rows stay feasible while the widest candidate row `include`
                // keeps a bit outside every zero column; when `include` is
                // unchanged the zero columns were already satisfied.
                let feasible = include != 0
                    && (include == top.include
                        || zero_columns[..top.excluded]
                            .iter()
                            .all(|&i| include & !i != 0));
                if feasible {
                    let child = Frame {
                        depth: depth + 1,
                        include,
                        excluded: top.excluded,
                        partial: top.partial + betas[depth],
                        next: Next::One,
                    };
                    path.truncate(depth);
                    path.push(true);
                    if let Some(f) = visit(child, &path, &mut stats)? {
                        stack.push(f);
                    }
                }
            }
            Next::Zero => {
                top.next = Next::Done;
                if top.include & !u != 0 {
                    let child = Frame {
                        depth: depth + 1,
                        include: top.include,
                        excluded: top.excluded + 1,
                        partial: top.partial,
                        next: Next::One,
                    };
                    zero_columns.truncate(top.excluded);
                    zero_columns.push(u);
                    path.truncate(depth);
                    path.push(false);
                    if let Some(f) = visit(child, &path, &mut stats)? {
                        stack.push(f);
                    }
                }
            }
            Next::Done => {
                stack.pop();
            }
        }
    }
    Ok(stats)
}

/// Rows `x ≠ 0` with `x ⪯ AND(include)` and `x ⋠ y` for every `y` in
/// `exclude`, ascending. An empty `include` means all `n` variables.
pub fn path_to_linear_functions(
    n: u32,
    include: &[BitMask],
    exclude: &[BitMask],
) -> Result<Vec<BitMask>> {
    let and = include.iter().fold(BitMask::full(n), |acc, &m| acc & m);
    if and.weight() > MAX_EXPANSION_WEIGHT {
        return Err(Error::EnumerationGuard {
            weight: and.weight(),
            limit: MAX_EXPANSION_WEIGHT,
        });
    }
    let mut rows: Vec<BitMask> = and
        .subvectors()
        .filter(|x| !x.is_zero())
        .filter(|&x| exclude.iter().all(|&y| !(x & !y).is_zero()))
        .collect();
    rows.reverse();
    Ok(rows)
}

/// `W_f(w)` for `w ≠ 0` from the sum of the betas whose columns contain `w`.
///
/// With all matrix entries taken positive, that sum is `W/2` for odd `wt(w)`
/// and `-W/2` for even `wt(w)`.
pub fn walsh_of_row(problem: &DistanceProblem, w: BitMask) -> Result<i128> {
    if w.is_zero() {
        return Err(Error::ZeroRow);
    }
    w.check_fits(problem.n())?;
    let f = problem
        .terms()
        .iter()
        .filter(|t| w.is_subvector_of(t.mask))
        .try_fold(0i128, |acc, t| acc.checked_add(t.beta))
        .ok_or(Error::Overflow("distance function value"))?;
    Ok(walsh_from_leaf(problem, w, f))
}

fn walsh_from_leaf(problem: &DistanceProblem, w: BitMask, value: i128) -> i128 {
    let walsh = if w.weight() % 2 == 1 {
        2 * value
    } else {
        -2 * value
    };
    if problem.is_complemented() {
        -walsh
    } else {
        walsh
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub order: Ordering,
    pub branch_and_bound: bool,
    pub node_budget: u64,
    /// Cross-check against the exhaustive oracle when `n` is at most this.
    pub verify_threshold: Option<u32>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            order: Ordering::default(),
            branch_and_bound: true,
            node_budget: DEFAULT_NODE_BUDGET,
            verify_threshold: None,
        }
    }
}

/// Nonlinearity, weight, maximum Walsh magnitude and nearest affine
/// functions of `f`.
pub fn nonlinearity(f: &AnfFunction, options: &SolveOptions) -> Result<AnalysisReport> {
    let problem = build_problem(f, options.order)?;
    let report = analyze_problem(&problem, options, |_, _| {})?;
    if let Some(threshold) = options.verify_threshold {
        if f.n() <= threshold {
            cross_check(f, &report)?;
        }
    }
    Ok(report)
}

/// Runs the search on an already built problem; `on_leaf` sees every leaf
/// the search reaches.
pub fn analyze_problem<F>(
    problem: &DistanceProblem,
    options: &SolveOptions,
    mut on_leaf: F,
) -> Result<AnalysisReport>
where
    F: FnMut(&[bool], i128),
{
    let start = Instant::now();
    let n = problem.n();
    let half_n = 1i128 << (n - 1);
    // |W_f(0)| / 2, from the weight row
    let weight_half = (half_n - problem.weight()).abs();

    let mut best = weight_half;
    let mut witnesses: Vec<PathAssignment> = Vec::new();
    let bound = options.branch_and_bound.then_some(weight_half);
    let tree = enumerate_tree(problem, bound, options.node_budget, |bits, value| {
        on_leaf(bits, value);
        let magnitude = value.abs();
        if magnitude > best {
            best = magnitude;
            witnesses.clear();
        }
        if magnitude == best {
            witnesses.push(PathAssignment {
                bits: bits.to_vec(),
                value,
            });
        }
    })
    .map_err(|e| match e {
        Error::NodeBudget { budget, best } => Error::NodeBudget {
            budget,
            best: best.max(weight_half),
        },
        other => other,
    })?;

    let mut nearest = Vec::new();
    if weight_half == best {
        nearest.push(NearestAffine::from_walsh(
            n,
            BitMask::ZERO,
            problem.walsh_at_zero(),
        ));
    }
    let witnesses = witnesses
        .into_iter()
        .map(|leaf| {
            let (include, exclude) = leaf.split_columns(problem);
            let (rows, truncated) = match path_to_linear_functions(n, &include, &exclude) {
                Ok(rows) => (rows, false),
                Err(Error::EnumerationGuard { .. }) => (Vec::new(), true),
                Err(e) => return Err(e),
            };
            nearest.extend(rows.iter().map(|&w| {
                NearestAffine::from_walsh(n, w, walsh_from_leaf(problem, w, leaf.value))
            }));
            Ok(Witness {
                path: leaf.to_string(),
                value: leaf.value,
                linear_functions: rows,
                truncated,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    nearest.sort_by_key(|a| a.w);

    Ok(AnalysisReport {
        n,
        p: problem.p(),
        k: problem.k(),
        weight: problem.weight(),
        nonlinearity: half_n - best,
        max_abs_walsh: 2 * best,
        witnesses,
        nearest,
        stats: SearchStats {
            nodes: tree.nodes,
            leaves: tree.leaves,
            pruned: tree.pruned,
            seconds: start.elapsed().as_secs_f64(),
        },
    })
}

/// Compares a solver report with the exhaustive oracle.
pub fn cross_check(f: &AnfFunction, report: &AnalysisReport) -> Result<()> {
    let oracle = nonlinearity_oracle(f)?;
    let mut diffs = Vec::new();
    if oracle.nonlinearity != report.nonlinearity {
        diffs.push(format!(
            "nonlinearity {} vs {}",
            report.nonlinearity, oracle.nonlinearity
        ));
    }
    if oracle.weight != report.weight {
        diffs.push(format!("weight {} vs {}", report.weight, oracle.weight));
    }
    if oracle.max_abs_walsh != report.max_abs_walsh {
        diffs.push(format!(
            "max |W| {} vs {}",
            report.max_abs_walsh, oracle.max_abs_walsh
        ));
    }
    if report.witnesses.iter().all(|w| !w.truncated) && oracle.nearest != report.nearest {
        diffs.push("nearest affine functions differ".to_owned());
    }
    if diffs.is_empty() {
        Ok(())
    } else {
        Err(Error::VerificationMismatch(format!(
            "{f}: {}",
            diffs.join(", ")
        )))
    }
}
