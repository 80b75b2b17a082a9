//! Exact combinatorial solvers: maximum (weighted) independent set,
//! maximal-independent-set enumeration, and chromatic number, with time
//! budgets and re-verified witnesses.

mod coloring;
mod enumerate;
mod mis;

use std::time::Duration;

use num_traits::Zero;

use crate::cyclo::{rat, rat_int, Rational};
use crate::xgraph::{build_graph, ExclusivityGraph};
use crate::{Error, Result};

pub use coloring::{chromatic_number, ColoringResult};
pub use enumerate::enumerate_maximal_independent_sets;

/// Greedy DSATUR coloring; returns (color count, assignment). A cheap
/// upper bound for the sandwich checks.
pub fn greedy_coloring(g: &ExclusivityGraph) -> (usize, Vec<usize>) {
    coloring::greedy_dsatur(g)
}

/// Whether a search closed the gap or ran out of budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Exact,
    LowerBound,
}

/// Outcome of a maximum (weighted) independent set computation. The witness
/// is re-verified independent against the input adjacency before return.
#[derive(Clone, Debug)]
pub struct IndependenceResult {
    pub value: Rational,
    pub witness: Vec<usize>,
    pub status: SolveStatus,
    pub elapsed: Duration,
    pub nodes_explored: u64,
}

impl IndependenceResult {
    pub fn is_exact(&self) -> bool {
        self.status == SolveStatus::Exact
    }
}

/// Witness tie-breaking. The default returns the lexicographically least
/// optimal witness; `Any` keeps the first optimum the search finds (still
/// deterministic for a fixed input).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum WitnessPolicy {
    #[default]
    LexMin,
    Any,
}

/// Knobs for [`max_independent_set_with`].
#[derive(Clone, Debug)]
pub struct MisOptions {
    pub budget: Duration,
    pub witness_policy: WitnessPolicy,
    /// Optional known-independent set used to prime the incumbent.
    pub seed_witness: Option<Vec<usize>>,
}

impl MisOptions {
    pub fn new(budget: Duration) -> Self {
        MisOptions {
            budget,
            witness_policy: WitnessPolicy::default(),
            seed_witness: None,
        }
    }
}

/// Maximum (weighted) independent set by branch and bound: maximum clique
/// on the complement graph with greedy-coloring upper bounds. `weights`
/// default to 1 on every vertex; rational weights are handled exactly.
/// Returns status `Exact` when the search closed within the budget, else
/// `LowerBound` with the best witness found.
pub fn max_independent_set(
    g: &ExclusivityGraph,
    weights: Option<&[Rational]>,
    budget: Duration,
) -> Result<IndependenceResult> {
    max_independent_set_with(g, weights, &MisOptions::new(budget))
}

/// As [`max_independent_set`], with explicit options.
pub fn max_independent_set_with(
    g: &ExclusivityGraph,
    weights: Option<&[Rational]>,
    opts: &MisOptions,
) -> Result<IndependenceResult> {
    if opts.budget.is_zero() {
        return Err(Error::InvalidParameter(
            "search budget must be positive".into(),
        ));
    }
    if let Some(w) = weights {
        if w.len() != g.n() {
            return Err(Error::InvalidParameter(format!(
                "weight vector length {} does not match vertex count {}",
                w.len(),
                g.n()
            )));
        }
        if w.iter().any(|x| x < &Rational::zero()) {
            return Err(Error::InvalidParameter(
                "weights must be nonnegative".into(),
            ));
        }
    }
    if let Some(seed) = &opts.seed_witness {
        if !g.is_independent_set(seed) {
            return Err(Error::InvalidParameter(
                "seed witness is not independent".into(),
            ));
        }
    }
    let outcome = mis::solve(g, weights, opts);

    // re-verify before returning: witness independent, value = weight sum
    if !g.is_independent_set(&outcome.witness) {
        return Err(Error::Internal(
            "solver produced a dependent witness".into(),
        ));
    }
    let recomputed = witness_weight(&outcome.witness, weights);
    if recomputed != outcome.value {
        return Err(Error::Internal(format!(
            "witness weight {} does not match solver value {}",
            recomputed, outcome.value
        )));
    }
    Ok(outcome)
}

fn witness_weight(witness: &[usize], weights: Option<&[Rational]>) -> Rational {
    match weights {
        None => rat_int(witness.len() as i64),
        Some(w) => witness.iter().map(|&v| w[v].clone()).sum(),
    }
}

/// The closed-form independence number claimed for the ray family:
/// k²/3 + k when 3 divides k, and 1 + k² otherwise. Exposed as a
/// conjecture value to compare against the exact solver.
pub fn alpha_formula(k: usize) -> Result<Rational> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "alpha formula requires k >= 2, got {k}"
        )));
    }
    let k = k as i64;
    Ok(if k % 3 == 0 {
        rat(k * k, 3) + rat_int(k)
    } else {
        rat_int(1 + k * k)
    })
}

/// The explicit independent set construction for the ray graph of order k,
/// as canonical-order vertex indices:
///
/// * 3 ∤ k: one class-I vertex plus all k² class-III vertices;
/// * k = 3m: class-II rays (1,−qⁱ,0), (1,0,−qʲ), (0,1,−q^μ) with
///   mod(−i,3m), j, mod(−μ−1,3m) in 0..m−1, plus class-III rays (1,qⁱ,qʲ)
///   with mod(−i,3m), j, mod(i−j−1,3m) all outside 0..m−1.
///
/// The set is re-verified independent against the freshly built graph; a
/// verification failure is an internal error.
pub fn construct_independent_set(k: usize) -> Result<Vec<usize>> {
    let g = build_graph(&crate::rays::generate_set(k)?)?;
    construct_independent_set_on(&g, k)
}

/// As [`construct_independent_set`] but verified against a caller-supplied
/// graph (which must be the ray graph of the same k).
pub fn construct_independent_set_on(g: &ExclusivityGraph, k: usize) -> Result<Vec<usize>> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "construction requires k >= 2, got {k}"
        )));
    }
    let class_two = |family: usize, i: usize| 3 + family * k + i;
    let class_three = |i: usize, j: usize| 3 + 3 * k + i * k + j;
    let mut set = Vec::new();
    if !k.is_multiple_of(3) {
        set.push(0);
        for i in 0..k {
            for j in 0..k {
                set.push(class_three(i, j));
            }
        }
    } else {
        let m = k / 3;
        let in_window = |x: usize| x < m;
        for i in 0..k {
            if in_window((k - i) % k) {
                set.push(class_two(0, i));
            }
        }
        for j in 0..k {
            if in_window(j) {
                set.push(class_two(1, j));
            }
        }
        for mu in 0..k {
            if in_window((2 * k - mu - 1) % k) {
                set.push(class_two(2, mu));
            }
        }
        for i in 0..k {
            for j in 0..k {
                let row = (k - i) % k;
                let diag = (2 * k + i - j - 1) % k;
                if !in_window(row) && !in_window(j) && !in_window(diag) {
                    set.push(class_three(i, j));
                }
            }
        }
    }
    set.sort_unstable();
    if !g.is_independent_set(&set) {
        return Err(Error::Internal(format!(
            "constructed set for k={k} failed independence verification"
        )));
    }
    Ok(set)
}
