//! Maximum weight independent set as maximum weight clique on the
//! complement graph: branch and bound over bitset candidate sets with
//! greedy-coloring upper bounds (one clique vertex per color class).
//!
//! Rational weights are scaled by the common denominator to integers before
//! the search (u64 when the total fits, arbitrary-precision otherwise) and
//! the result is converted back exactly. Budgets are enforced by
//! cooperative deadline checks; on expiry the best incumbent is returned
//! with a lower-bound status.

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{IndependenceResult, MisOptions, SolveStatus, WitnessPolicy};
use crate::cyclo::Rational;
use crate::xgraph::{BitSet, ExclusivityGraph};

pub(crate) trait WeightVal: Clone + Ord + std::fmt::Debug {
    fn zero() -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    /// self − other, defined only when self ≥ other.
    fn sub_ref(&self, other: &Self) -> Self;
    fn pred(&self) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
}

impl WeightVal for u64 {
    fn zero() -> Self {
        0
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn pred(&self) -> Option<Self> {
        self.checked_sub(1)
    }

    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl WeightVal for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn pred(&self) -> Option<Self> {
        Some(self - 1)
    }

    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

struct Search<'a, W: WeightVal> {
    n: usize,
    adj: &'a [BitSet],
    w: &'a [W],
    deadline: Instant,
    timed_out: bool,
    nodes: u64,
    best: W,
    best_set: Vec<usize>,
    /// Terminate the whole search once best reaches this value.
    stop_at: Option<W>,
    frames: Vec<BitSet>,
    classes: Vec<BitSet>,
    cur: Vec<usize>,
}

impl<'a, W: WeightVal> Search<'a, W> {
    fn new(adj: &'a [BitSet], w: &'a [W], deadline: Instant) -> Self {
        let n = adj.len();
        Search {
            n,
            adj,
            w,
            deadline,
            timed_out: false,
            nodes: 0,
            best: W::zero(),
            best_set: Vec::new(),
            stop_at: None,
            frames: (0..=n + 1).map(|_| BitSet::new(n)).collect(),
            classes: Vec::new(),
            cur: Vec::new(),
        }
    }

    fn reached_target(&self) -> bool {
        matches!(&self.stop_at, Some(t) if self.best >= *t)
    }

    fn run(&mut self, root: &BitSet) {
        self.frames[0].copy_from(root);
        let zero = W::zero();
        self.expand(0, &zero);
    }

    fn expand(&mut self, depth: usize, cur_w: &W) {
        self.nodes += 1;
        if Instant::now() >= self.deadline {
            self.timed_out = true;
        }
        if self.timed_out || self.reached_target() {
            return;
        }
        if self.frames[depth].is_empty() {
            if *cur_w > self.best {
                self.best = cur_w.clone();
                self.best_set = self.cur.clone();
            }
            return;
        }

        // greedy coloring of the candidate set; a clique takes at most one
        // vertex per class, so prefix sums of class maxima bound the gain
        let mut num_classes = 0usize;
        for v in self.frames[depth].iter() {
            let mut placed = false;
            for c in 0..num_classes {
                if self.classes[c].is_disjoint(&self.adj[v]) {
                    self.classes[c].insert(v);
                    placed = true;
                    break;
                }
            }
            if !placed {
                if self.classes.len() == num_classes {
                    self.classes.push(BitSet::new(self.n));
                } else {
                    self.classes[num_classes].clear();
                }
                self.classes[num_classes].insert(v);
                num_classes += 1;
            }
        }
        let mut branch: Vec<(usize, W)> = Vec::with_capacity(self.frames[depth].len());
        let mut cum = cur_w.clone();
        for c in 0..num_classes {
            let cmax = self.classes[c]
                .iter()
                .map(|v| &self.w[v])
                .max()
                .expect("class is nonempty");
            cum = cum.add_ref(cmax);
            for v in self.classes[c].iter() {
                branch.push((v, cum.clone()));
            }
        }

        for idx in (0..branch.len()).rev() {
            let (v, ref bound) = branch[idx];
            if *bound <= self.best {
                return;
            }
            self.frames[depth].remove(v);
            let (head, tail) = self.frames.split_at_mut(depth + 1);
            tail[0].copy_from(&head[depth]);
            tail[0].intersect_with(&self.adj[v]);
            self.cur.push(v);
            let child_w = cur_w.add_ref(&self.w[v]);
            self.expand(depth + 1, &child_w);
            self.cur.pop();
            if self.timed_out || self.reached_target() {
                return;
            }
        }
    }
}

/// Min-degree removal order (degeneracy order) of the graph given by
/// adjacency rows; ties broken by smallest index.
fn degeneracy_order(adj: &[BitSet]) -> Vec<usize> {
    let n = adj.len();
    let mut removed = vec![false; n];
    let mut deg: Vec<usize> = adj.iter().map(BitSet::len).collect();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("vertices remain");
        removed[v] = true;
        order.push(v);
        for u in adj[v].iter() {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    order
}

/// Deterministic greedy clique used to prime the incumbent: repeatedly take
/// the candidate maximizing (weight, candidate degree), ties to the
/// smallest index.
fn greedy_clique<W: WeightVal>(adj: &[BitSet], w: &[W]) -> Vec<usize> {
    let n = adj.len();
    let mut cand = BitSet::full(n);
    let mut out = Vec::new();
    while !cand.is_empty() {
        let mut pick = None;
        let mut pick_key: Option<(&W, usize)> = None;
        for v in cand.iter() {
            let key = (&w[v], adj[v].intersection_len(&cand));
            if pick_key.is_none_or(|k| (key.0, key.1) > k) {
                pick = Some(v);
                pick_key = Some(key);
            }
        }
        let v = pick.expect("candidate set is nonempty");
        out.push(v);
        cand.intersect_with(&adj[v]);
    }
    out
}

struct ScaledProblem {
    /// least common multiple of the weight denominators
    lcm: BigInt,
    scaled: Vec<BigInt>,
}

fn scale_weights(weights: Option<&[Rational]>, n: usize) -> ScaledProblem {
    match weights {
        None => ScaledProblem {
            lcm: BigInt::one(),
            scaled: vec![BigInt::one(); n],
        },
        Some(ws) => {
            let mut lcm = BigInt::one();
            for w in ws {
                lcm = lcm.lcm(w.denom());
            }
            let scaled = ws
                .iter()
                .map(|w| w.numer() * (&lcm / w.denom()))
                .collect();
            ScaledProblem { lcm, scaled }
        }
    }
}

struct RunOutput {
    value: BigInt,
    witness_internal: Vec<usize>,
    nodes: u64,
    timed_out: bool,
}

fn run_generic<W: WeightVal>(
    adj: &[BitSet],
    w: &[W],
    seeds: &[Vec<usize>],
    deadline: Instant,
    lex_order: Option<&[usize]>,
) -> RunOutput {
    let n = adj.len();
    let mut search = Search::new(adj, w, deadline);
    for seed in seeds {
        let value = seed
            .iter()
            .fold(W::zero(), |acc, &v| acc.add_ref(&w[v]));
        if value > search.best {
            search.best = value;
            search.best_set = seed.clone();
        }
    }
    let root = BitSet::full(n);
    search.run(&root);
    let mut nodes = search.nodes;
    let timed_out = search.timed_out;
    let value = search.best.clone();
    let mut witness = search.best_set.clone();

    if !timed_out {
        if let Some(order) = lex_order {
            if let Some((lex, extra_nodes)) =
                lex_min_witness(adj, w, &value, order, deadline)
            {
                witness = lex;
                nodes += extra_nodes;
            }
        }
    }

    RunOutput {
        value: value.to_bigint(),
        witness_internal: witness,
        nodes,
        timed_out,
    }
}

/// Greedy lexicographic refinement: walk vertices in the caller's preferred
/// order and keep a vertex iff the optimum stays reachable with it fixed.
/// Returns None if the deadline expires mid-walk (the caller then keeps the
/// search witness).
fn lex_min_witness<W: WeightVal>(
    adj: &[BitSet],
    w: &[W],
    target: &W,
    order: &[usize],
    deadline: Instant,
) -> Option<(Vec<usize>, u64)> {
    let n = adj.len();
    let mut allowed = BitSet::full(n);
    let mut prefix = Vec::new();
    let mut prefix_w = W::zero();
    let mut nodes = 0u64;
    for &u in order {
        // once the target is met, any further vertex makes the sorted
        // witness lexicographically larger
        if prefix_w == *target {
            break;
        }
        if !allowed.contains(u) {
            continue;
        }
        let base = prefix_w.add_ref(&w[u]);
        let candidates = allowed.intersection(&adj[u]);
        let remaining = if base >= *target {
            W::zero()
        } else {
            target.sub_ref(&base)
        };
        let reachable = if remaining == W::zero() {
            true
        } else {
            let mut probe = Search::new(adj, w, deadline);
            probe.best = remaining.pred().expect("remaining is positive");
            probe.stop_at = Some(remaining.clone());
            probe.run(&candidates);
            nodes += probe.nodes;
            if probe.timed_out {
                return None;
            }
            probe.best >= remaining
        };
        if reachable {
            prefix.push(u);
            prefix_w = base;
            allowed.intersect_with(&adj[u]);
        } else {
            allowed.remove(u);
        }
        if Instant::now() >= deadline {
            return None;
        }
    }
    debug_assert!(prefix_w == *target);
    Some((prefix, nodes))
}

pub(super) fn solve(
    g: &ExclusivityGraph,
    weights: Option<&[Rational]>,
    opts: &MisOptions,
) -> IndependenceResult {
    let started = Instant::now();
    let deadline = started + opts.budget;
    let n = g.n();
    if n == 0 {
        return IndependenceResult {
            value: Rational::zero(),
            witness: Vec::new(),
            status: SolveStatus::Exact,
            elapsed: started.elapsed(),
            nodes_explored: 0,
        };
    }

    let h = g.complement();
    // internal order: reversed degeneracy order of the complement
    let mut order = degeneracy_order(
        &(0..n).map(|v| h.neighbors(v).clone()).collect::<Vec<_>>(),
    );
    order.reverse();
    let mut pos = vec![0usize; n];
    for (idx, &v) in order.iter().enumerate() {
        pos[v] = idx;
    }
    let mut adj = vec![BitSet::new(n); n];
    for v in 0..n {
        for u in h.neighbors(v).iter() {
            adj[pos[v]].insert(pos[u]);
        }
    }

    let problem = scale_weights(weights, n);
    let scaled_internal: Vec<BigInt> = order.iter().map(|&v| problem.scaled[v].clone()).collect();

    let mut seeds: Vec<Vec<usize>> = Vec::new();
    if let Some(seed) = &opts.seed_witness {
        seeds.push(seed.iter().map(|&v| pos[v]).collect());
    }

    // vertex order for lexicographic witness refinement, in internal indices
    let lex_order: Vec<usize> = (0..n).map(|orig| pos[orig]).collect();
    let want_lex = opts.witness_policy == WitnessPolicy::LexMin;

    let total: BigInt = scaled_internal.iter().sum();
    let output = if total.to_u64().is_some()
        && scaled_internal.iter().all(|s| s.to_u64().is_some())
    {
        let w: Vec<u64> = scaled_internal
            .iter()
            .map(|s| s.to_u64().expect("checked above"))
            .collect();
        seeds.push(greedy_clique(&adj, &w));
        run_generic(
            &adj,
            &w,
            &seeds,
            deadline,
            want_lex.then_some(lex_order.as_slice()),
        )
    } else {
        debug_assert!(!total.is_negative());
        seeds.push(greedy_clique(&adj, &scaled_internal));
        run_generic(
            &adj,
            &scaled_internal,
            &seeds,
            deadline,
            want_lex.then_some(lex_order.as_slice()),
        )
    };

    let mut witness: Vec<usize> = output.witness_internal.iter().map(|&p| order[p]).collect();
    witness.sort_unstable();
    IndependenceResult {
        value: Rational::new(output.value, problem.lcm),
        witness,
        status: if output.timed_out {
            SolveStatus::LowerBound
        } else {
            SolveStatus::Exact
        },
        elapsed: started.elapsed(),
        nodes_explored: output.nodes,
    }
}
