//! Exact fractional chromatic number via rational linear programming over
//! independent sets, with primal (fractional coloring) and dual (fractional
//! clique) certificates, plus a:b-coloring extraction.
//!
//! The LP is min Σ x_S over maximal independent sets S subject to per-vertex
//! coverage ≥ 1. Small graphs can enumerate the whole column pool; larger
//! ones run column generation where the pricing problem is a max-weight
//! independent set under the current duals. Optimality is certified when no
//! column prices out: the duals are then a feasible fractional clique of the
//! same value.

mod simplex;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::combinat::{enumerate_maximal_independent_sets, max_independent_set};
use crate::cyclo::{rat_int, Rational};
use crate::ser::rational_value;
use crate::xgraph::{BitSet, ExclusivityGraph};
use crate::{Error, Result};

use simplex::CoveringLp;

/// Above this many maximal independent sets, full enumeration is abandoned
/// in favor of column generation.
pub const ENUMERATION_POOL_CAP: usize = 200_000;

const DUAL_VERIFY_BUDGET: Duration = Duration::from_secs(120);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChifMethod {
    Enumerate,
    ColumnGeneration,
}

/// Exactness state: `Bounds` carries the best certified lower bound and the
/// best feasible (primal) upper bound found within budget.
#[derive(Clone, Debug, PartialEq)]
pub enum ChifStatus {
    Exact,
    Bounds { lower: Rational, upper: Rational },
}

/// A fractional coloring with certificates. When exact: the primal weights
/// cover every vertex at least once and sum to the value; the duals are
/// nonnegative, sum to the value, and no independent set has dual weight
/// above 1.
#[derive(Clone, Debug)]
pub struct FractionalColoring {
    pub value: Rational,
    pub primal: Vec<(Vec<usize>, Rational)>,
    pub dual: Vec<Rational>,
    pub status: ChifStatus,
}

impl FractionalColoring {
    pub fn is_exact(&self) -> bool {
        self.status == ChifStatus::Exact
    }
}

/// An a:b-coloring: every vertex receives exactly b colors out of `a`, and
/// adjacent vertices receive disjoint sets.
#[derive(Clone, Debug)]
pub struct AbColoring {
    pub a: usize,
    pub b: usize,
    /// per-vertex sorted color lists, colors in 0..a
    pub assignment: Vec<Vec<usize>>,
}

/// Deterministic greedy cover by maximal independent sets; every vertex is
/// covered by at least one set.
fn greedy_cover(g: &ExclusivityGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut covered = BitSet::new(n);
    let mut pool = Vec::new();
    while covered.len() < n {
        let seed = (0..n).find(|&v| !covered.contains(v)).expect("uncovered");
        let mut set = vec![seed];
        let mut blocked = g.neighbors(seed).clone();
        // prefer uncovered vertices, then extend to maximality
        for pass in 0..2 {
            for v in 0..n {
                if v == seed || blocked.contains(v) || set.contains(&v) {
                    continue;
                }
                if pass == 0 && covered.contains(v) {
                    continue;
                }
                set.push(v);
                blocked.union_with(g.neighbors(v));
            }
        }
        set.sort_unstable();
        for &v in &set {
            covered.insert(v);
        }
        pool.push(set);
    }
    pool
}

/// Extends an independent set to an inclusion-maximal one, ascending order.
fn maximalize(g: &ExclusivityGraph, set: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut out: Vec<usize> = set.to_vec();
    let mut blocked = BitSet::new(n);
    for &v in &out {
        blocked.union_with(g.neighbors(v));
    }
    for v in 0..n {
        if !blocked.contains(v) && !out.contains(&v) {
            out.push(v);
            blocked.union_with(g.neighbors(v));
        }
    }
    out.sort_unstable();
    out
}

/// Greedy pricing: builds an independent set favoring large duals and
/// checks exactly whether its dual weight exceeds 1.
fn greedy_improving_column(g: &ExclusivityGraph, duals: &[Rational]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| duals[b].cmp(&duals[a]).then(a.cmp(&b)));
    let mut set = Vec::new();
    let mut blocked = BitSet::new(n);
    for &v in &order {
        if !blocked.contains(v) {
            set.push(v);
            blocked.union_with(g.neighbors(v));
        }
    }
    let weight: Rational = set.iter().map(|&v| duals[v].clone()).sum();
    if weight > Rational::one() {
        set.sort_unstable();
        Some(set)
    } else {
        None
    }
}

fn clique_lower_bound(g: &ExclusivityGraph, deadline: Instant) -> Rational {
    // any clique size lower-bounds χ_f; use the exact solver on the
    // complement when time permits, else settle for 1
    let now = Instant::now();
    if now >= deadline {
        return rat_int(1);
    }
    let budget = (deadline - now).min(Duration::from_secs(10));
    match max_independent_set(&g.complement(), None, budget) {
        Ok(r) => r.value,
        Err(_) => rat_int(1),
    }
}

/// Exact fractional chromatic number with certificates. `Enumerate` builds
/// the complete maximal-independent-set pool (falling back to column
/// generation above [`ENUMERATION_POOL_CAP`] sets); `ColumnGeneration`
/// grows the pool by exact pricing. On budget expiry the result carries
/// certified bounds instead of a value.
pub fn fractional_chromatic(
    g: &ExclusivityGraph,
    method: ChifMethod,
    budget: Duration,
) -> Result<FractionalColoring> {
    fractional_chromatic_with_cap(g, method, budget, ENUMERATION_POOL_CAP)
}

fn fractional_chromatic_with_cap(
    g: &ExclusivityGraph,
    method: ChifMethod,
    budget: Duration,
    pool_cap: usize,
) -> Result<FractionalColoring> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter(
            "fractional coloring needs at least one vertex".into(),
        ));
    }
    if budget.is_zero() {
        return Err(Error::InvalidParameter(
            "fractional coloring budget must be positive".into(),
        ));
    }
    let deadline = Instant::now() + budget;
    match method {
        ChifMethod::Enumerate => match enumerate_maximal_independent_sets(g, pool_cap) {
            Ok(pool) => solve_with_pool(g, pool, deadline),
            Err(Error::CapacityExceeded(_)) => column_generation(g, deadline),
            Err(e) => Err(e),
        },
        ChifMethod::ColumnGeneration => column_generation(g, deadline),
    }
}

/// Complete-pool solve: optimality needs no pricing because every maximal
/// independent set is a column.
fn solve_with_pool(
    g: &ExclusivityGraph,
    pool: Vec<Vec<usize>>,
    deadline: Instant,
) -> Result<FractionalColoring> {
    let n = g.n();
    let mut lp = CoveringLp::new(n);
    for set in pool {
        lp.add_column(set);
    }
    match lp.solve(deadline)? {
        Some(sol) => Ok(exact_result(&lp, sol)),
        None => {
            let upper: Rational = rat_int(greedy_cover(g).len() as i64);
            Ok(FractionalColoring {
                value: upper.clone(),
                primal: greedy_cover(g)
                    .into_iter()
                    .map(|s| (s, Rational::one()))
                    .collect(),
                dual: vec![Rational::zero(); n],
                status: ChifStatus::Bounds {
                    lower: clique_lower_bound(g, deadline),
                    upper,
                },
            })
        }
    }
}

fn exact_result(lp: &CoveringLp, sol: simplex::LpSolution) -> FractionalColoring {
    let mut primal: Vec<(Vec<usize>, Rational)> = sol
        .primal
        .into_iter()
        .map(|(j, w)| (lp.pool_set(j).to_vec(), w))
        .collect();
    primal.sort();
    FractionalColoring {
        value: sol.value,
        primal,
        dual: sol.duals,
        status: ChifStatus::Exact,
    }
}

type Incumbent = (Rational, Vec<(Vec<usize>, Rational)>, Vec<Rational>);

fn column_generation(g: &ExclusivityGraph, deadline: Instant) -> Result<FractionalColoring> {
    let n = g.n();
    let mut lp = CoveringLp::new(n);
    let initial = greedy_cover(g);
    let fallback_upper = rat_int(initial.len() as i64);
    let fallback_primal: Vec<(Vec<usize>, Rational)> = initial
        .iter()
        .cloned()
        .map(|s| (s, Rational::one()))
        .collect();
    for set in initial {
        lp.add_column(set);
    }
    let mut best: Option<Incumbent> = None;
    let mut certified_lower = rat_int(1);

    while let Some(sol) = lp.solve(deadline)? {
        // the RMP optimum is a feasible fractional cover: an upper bound
        let keep = best.as_ref().is_none_or(|(v, _, _)| sol.value < *v);
        if keep {
            let primal = sol
                .primal
                .iter()
                .map(|(j, w)| (lp.pool_set(*j).to_vec(), w.clone()))
                .collect();
            best = Some((sol.value.clone(), primal, sol.duals.clone()));
        }

        if let Some(col) = greedy_improving_column(g, &sol.duals) {
            lp.add_column(col);
            continue;
        }

        let now = Instant::now();
        if now >= deadline {
            break;
        }
        let pricing = max_independent_set(g, Some(&sol.duals), deadline - now)?;
        if !pricing.is_exact() {
            break;
        }
        if pricing.value <= Rational::one() {
            // no column prices out: THIS solve's duals are globally
            // feasible, so its RMP optimum is the fractional chromatic
            // number (earlier iterations' duals would not do)
            let mut primal: Vec<(Vec<usize>, Rational)> = sol
                .primal
                .iter()
                .map(|(j, w)| (lp.pool_set(*j).to_vec(), w.clone()))
                .collect();
            primal.sort();
            return Ok(FractionalColoring {
                value: sol.value,
                primal,
                dual: sol.duals,
                status: ChifStatus::Exact,
            });
        }
        // Farley bound: χ_f ≥ RMP value / pricing optimum
        let farley = &sol.value / &pricing.value;
        if farley > certified_lower {
            certified_lower = farley;
        }
        lp.add_column(maximalize(g, &pricing.witness));
    }

    let (upper, primal, dual) = match best {
        Some((v, p, d)) => (v, p, d),
        None => (fallback_upper, fallback_primal, vec![Rational::zero(); n]),
    };
    let lower = certified_lower.max(clique_lower_bound(g, deadline));
    Ok(FractionalColoring {
        value: upper.clone(),
        primal,
        dual,
        status: ChifStatus::Bounds { lower, upper },
    })
}

/// Re-verifies an exact result from scratch: primal feasibility, dual
/// feasibility (the duals are checked against a fresh exact max-weight
/// independent-set computation, not the solver's pool), and equality of the
/// two values. Returns false on any failure, including a verification
/// timeout.
pub fn verify_certificates(g: &ExclusivityGraph, fc: &FractionalColoring) -> bool {
    if fc.status != ChifStatus::Exact {
        return false;
    }
    let n = g.n();
    let one = Rational::one();

    let mut coverage = vec![Rational::zero(); n];
    let mut primal_value = Rational::zero();
    for (set, w) in &fc.primal {
        if *w <= Rational::zero() || !g.is_independent_set(set) {
            return false;
        }
        for &v in set {
            if v >= n {
                return false;
            }
            coverage[v] += w;
        }
        primal_value += w;
    }
    if coverage.iter().any(|c| *c < one) || primal_value != fc.value {
        return false;
    }

    if fc.dual.len() != n || fc.dual.iter().any(|y| y.is_negative()) {
        return false;
    }
    let dual_value: Rational = fc.dual.iter().cloned().sum();
    if dual_value != fc.value {
        return false;
    }
    match max_independent_set(g, Some(&fc.dual), DUAL_VERIFY_BUDGET) {
        Ok(r) => r.is_exact() && r.value <= one,
        Err(_) => false,
    }
}

/// Scales the primal weights by their common denominator D, yielding an
/// a:b-coloring with b = D and a = D·χ_f: each set becomes that many
/// distinct colors and vertices covered more than D times keep their D
/// smallest colors. Requires an exact input.
pub fn extract_ab_coloring(
    g: &ExclusivityGraph,
    fc: &FractionalColoring,
) -> Result<AbColoring> {
    if fc.status != ChifStatus::Exact {
        return Err(Error::InvalidState(
            "a:b-coloring extraction needs an exact fractional coloring".into(),
        ));
    }
    let n = g.n();
    let mut d = BigInt::one();
    for (_, w) in &fc.primal {
        d = d.lcm(w.denom());
    }
    let b = d
        .to_usize()
        .ok_or_else(|| Error::Internal("common denominator exceeds usize".into()))?;
    let mut assignment: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut next_color = 0usize;
    for (set, w) in &fc.primal {
        let copies_big = w * Rational::from_integer(d.clone());
        debug_assert!(copies_big.is_integer());
        let copies = copies_big
            .to_integer()
            .to_usize()
            .ok_or_else(|| Error::Internal("scaled weight exceeds usize".into()))?;
        for &v in set {
            for c in next_color..next_color + copies {
                assignment[v].push(c);
            }
        }
        next_color += copies;
    }
    for (v, colors) in assignment.iter_mut().enumerate() {
        colors.sort_unstable();
        colors.truncate(b);
        if colors.len() != b {
            return Err(Error::Internal(format!(
                "vertex {v} is covered fewer than {b} times"
            )));
        }
    }
    let a = next_color;
    debug_assert_eq!(
        Rational::from_integer(BigInt::from(a)),
        &fc.value * Rational::from_integer(d),
    );
    Ok(AbColoring { a, b, assignment })
}

/// Fast sandwich before any LP: lower = max(n/α, clique number) when α is
/// exact (clique number alone otherwise), upper = colors used by a greedy
/// coloring. Guarantees lower ≤ χ_f ≤ upper.
pub fn chif_bounds(g: &ExclusivityGraph) -> Result<(Rational, Rational)> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter(
            "bounds need at least one vertex".into(),
        ));
    }
    let budget = Duration::from_secs(30);
    let deadline = Instant::now() + budget;
    let mut lower = clique_lower_bound(g, deadline);
    let alpha = max_independent_set(g, None, budget)?;
    if alpha.is_exact() {
        let ratio = rat_int(g.n() as i64) / &alpha.value;
        if ratio > lower {
            lower = ratio;
        }
    }
    let (greedy_colors, _) = crate::combinat::greedy_coloring(g);
    Ok((lower, rat_int(greedy_colors as i64)))
}

/// Certificate JSON: value and every weight as exact [num, den] pairs.
pub fn certificate_json(fc: &FractionalColoring) -> Result<Value> {
    let primal: Result<Vec<Value>> = fc
        .primal
        .iter()
        .map(|(set, w)| {
            Ok(json!({
                "set": set,
                "weight": rational_value(w)?,
            }))
        })
        .collect();
    let dual: Result<Vec<Value>> = fc.dual.iter().map(rational_value).collect();
    Ok(json!({
        "value": rational_value(&fc.value)?,
        "primal": primal?,
        "dual": dual?,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat;
    use crate::rays::generate_set;
    use crate::xgraph::build_graph;
    use rand::{Rng, SeedableRng};

    fn minute() -> Duration {
        Duration::from_secs(60)
    }

    fn assert_valid_ab(g: &ExclusivityGraph, ab: &AbColoring, chif: &Rational) {
        assert_eq!(ab.assignment.len(), g.n());
        for colors in &ab.assignment {
            assert_eq!(colors.len(), ab.b);
            assert!(colors.iter().all(|&c| c < ab.a));
        }
        for (u, v) in g.edges() {
            for c in &ab.assignment[u] {
                assert!(!ab.assignment[v].contains(c), "edge ({u},{v}) shares {c}");
            }
        }
        assert_eq!(
            rat(ab.a as i64, ab.b as i64),
            chif.clone(),
            "a/b must witness χ_f"
        );
    }

    #[test]
    fn pentagon_is_five_halves() {
        let g = ExclusivityGraph::pentagon();
        for method in [ChifMethod::Enumerate, ChifMethod::ColumnGeneration] {
            let fc = fractional_chromatic(&g, method, minute()).unwrap();
            assert_eq!(fc.value, rat(5, 2), "{method:?}");
            assert!(fc.is_exact());
            assert!(verify_certificates(&g, &fc));
            let ab = extract_ab_coloring(&g, &fc).unwrap();
            assert_eq!((ab.a, ab.b), (5, 2));
            assert_valid_ab(&g, &ab, &fc.value);
        }
    }

    #[test]
    fn complete_graphs() {
        let g = ExclusivityGraph::complete(4);
        let fc = fractional_chromatic(&g, ChifMethod::Enumerate, minute()).unwrap();
        assert_eq!(fc.value, rat_int(4));
        assert!(verify_certificates(&g, &fc));

        let g = ExclusivityGraph::complete(3);
        let fc = fractional_chromatic(&g, ChifMethod::ColumnGeneration, minute()).unwrap();
        assert_eq!(fc.value, rat_int(3));
        let ab = extract_ab_coloring(&g, &fc).unwrap();
        assert_eq!((ab.a, ab.b), (3, 1));
        assert_valid_ab(&g, &ab, &fc.value);
    }

    #[test]
    fn edgeless_graph_is_one() {
        let g = ExclusivityGraph::edgeless(6);
        let fc = fractional_chromatic(&g, ChifMethod::Enumerate, minute()).unwrap();
        assert_eq!(fc.value, rat_int(1));
        assert!(verify_certificates(&g, &fc));
    }

    #[test]
    fn k2_graph_is_35_over_11() {
        let g = build_graph(&generate_set(2).unwrap()).unwrap();
        let fc = fractional_chromatic(&g, ChifMethod::ColumnGeneration, minute()).unwrap();
        assert_eq!(fc.value, rat(35, 11));
        assert!(fc.is_exact());
        assert!(verify_certificates(&g, &fc));
    }

    #[test]
    fn k3_graph_is_10_over_3() {
        let g = build_graph(&generate_set(3).unwrap()).unwrap();
        let fc = fractional_chromatic(&g, ChifMethod::ColumnGeneration, minute()).unwrap();
        assert_eq!(fc.value, rat(10, 3));
        assert!(verify_certificates(&g, &fc));
        let ab = extract_ab_coloring(&g, &fc).unwrap();
        assert_eq!(rat(ab.a as i64, ab.b as i64), rat(10, 3));
        assert_valid_ab(&g, &ab, &fc.value);
    }

    #[test]
    fn tampered_certificate_fails() {
        let g = ExclusivityGraph::pentagon();
        let mut fc = fractional_chromatic(&g, ChifMethod::Enumerate, minute()).unwrap();
        assert!(verify_certificates(&g, &fc));
        fc.primal[0].1 = rat(1, 3);
        assert!(!verify_certificates(&g, &fc));
    }

    #[test]
    fn handcrafted_pentagon_certificate_verifies() {
        // 5 sets of weight 1/2 each; dual 1/2 per vertex
        let g = ExclusivityGraph::pentagon();
        let fc = FractionalColoring {
            value: rat(5, 2),
            primal: vec![
                (vec![0, 2], rat(1, 2)),
                (vec![0, 3], rat(1, 2)),
                (vec![1, 3], rat(1, 2)),
                (vec![1, 4], rat(1, 2)),
                (vec![2, 4], rat(1, 2)),
            ],
            dual: vec![rat(1, 2); 5],
            status: ChifStatus::Exact,
        };
        assert!(verify_certificates(&g, &fc));
    }

    #[test]
    fn methods_agree_on_random_graphs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xFCC);
        for round in 0..12 {
            let n = 4 + (round % 6);
            let mut g = ExclusivityGraph::edgeless(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.45) {
                        g.add_edge(u, v);
                    }
                }
            }
            let a = fractional_chromatic(&g, ChifMethod::Enumerate, minute()).unwrap();
            let b = fractional_chromatic(&g, ChifMethod::ColumnGeneration, minute()).unwrap();
            assert_eq!(a.value, b.value, "round {round}");
            assert!(verify_certificates(&g, &a));
            assert!(verify_certificates(&g, &b));
            // sandwich: n/α ≤ χ_f ≤ χ
            let (lo, hi) = chif_bounds(&g).unwrap();
            assert!(lo <= a.value && a.value <= hi, "round {round}");
        }
    }

    #[test]
    fn bounds_examples() {
        let (lo, hi) = chif_bounds(&ExclusivityGraph::pentagon()).unwrap();
        assert_eq!(lo, rat(5, 2));
        assert_eq!(hi, rat_int(3));

        let (lo, hi) = chif_bounds(&ExclusivityGraph::complete(5)).unwrap();
        assert_eq!((lo, hi), (rat_int(5), rat_int(5)));

        let g = build_graph(&generate_set(5).unwrap()).unwrap();
        let (lo, _) = chif_bounds(&g).unwrap();
        assert!(lo >= rat_int(3), "class I triangle forces ω ≥ 3");
    }

    #[test]
    fn budget_exhaustion_returns_bounds() {
        let g = build_graph(&generate_set(4).unwrap()).unwrap();
        let fc =
            fractional_chromatic(&g, ChifMethod::ColumnGeneration, Duration::from_nanos(1))
                .unwrap();
        match &fc.status {
            ChifStatus::Bounds { lower, upper } => {
                assert!(lower <= upper);
                assert!(!verify_certificates(&g, &fc));
            }
            ChifStatus::Exact => panic!("1ns budget cannot be exact"),
        }
        assert!(extract_ab_coloring(&g, &fc).is_err());
    }

    #[test]
    fn rejects_empty_graph() {
        let g = ExclusivityGraph::edgeless(0);
        assert!(fractional_chromatic(&g, ChifMethod::Enumerate, minute()).is_err());
    }

    #[test]
    fn enumerate_falls_back_to_column_generation_over_the_cap() {
        // pentagon has 5 maximal independent sets; a cap of 2 forces the
        // fallback path, which must still close exactly
        let g = ExclusivityGraph::pentagon();
        let fc = fractional_chromatic_with_cap(&g, ChifMethod::Enumerate, minute(), 2).unwrap();
        assert_eq!(fc.value, rat(5, 2));
        assert!(fc.is_exact());
        assert!(verify_certificates(&g, &fc));
    }

    #[test]
    fn family_graphs_agree_across_methods() {
        for k in 2..=4usize {
            let g = build_graph(&generate_set(k).unwrap()).unwrap();
            let a = fractional_chromatic(&g, ChifMethod::Enumerate, minute()).unwrap();
            let b = fractional_chromatic(&g, ChifMethod::ColumnGeneration, minute()).unwrap();
            assert!(a.is_exact() && b.is_exact(), "k={k}");
            assert_eq!(a.value, b.value, "k={k}");
            assert!(verify_certificates(&g, &a), "k={k}");
        }
    }

    #[test]
    fn certificate_json_shape() {
        let g = ExclusivityGraph::pentagon();
        let fc = fractional_chromatic(&g, ChifMethod::Enumerate, minute()).unwrap();
        let v = certificate_json(&fc).unwrap();
        assert_eq!(v["value"][0], 5);
        assert_eq!(v["value"][1], 2);
        assert_eq!(v["primal"].as_array().unwrap().len(), fc.primal.len());
        assert_eq!(v["dual"].as_array().unwrap().len(), 5);
    }
}
