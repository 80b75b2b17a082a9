//! Exact chromatic number: iterative feasibility search with
//! saturation-degree (DSATUR) vertex selection, seeded by a greedy DSATUR
//! upper bound and a greedy clique lower bound.

use std::time::{Duration, Instant};

use crate::xgraph::ExclusivityGraph;
use crate::{Error, Result};

/// A proper coloring and its exactness certificate. `value` colors are used
/// by `assignment`; when `exact` is false the true chromatic number lies in
/// `lower_bound..=value`.
#[derive(Clone, Debug)]
pub struct ColoringResult {
    pub value: usize,
    pub assignment: Vec<usize>,
    pub exact: bool,
    pub lower_bound: usize,
}

/// Greedy DSATUR coloring; returns (color count, assignment).
pub(crate) fn greedy_dsatur(g: &ExclusivityGraph) -> (usize, Vec<usize>) {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut used = 0usize;
    for _ in 0..n {
        // most saturated uncolored vertex, ties by degree then index
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (saturation(g, &colors, v), g.degree(v), usize::MAX - v))
            .expect("uncolored vertex remains");
        let mut c = 0;
        while g.neighbors(v).iter().any(|u| colors[u] == c) {
            c += 1;
        }
        colors[v] = c;
        used = used.max(c + 1);
    }
    (used, colors)
}

fn saturation(g: &ExclusivityGraph, colors: &[usize], v: usize) -> usize {
    let mut seen = Vec::new();
    for u in g.neighbors(v).iter() {
        if colors[u] != usize::MAX && !seen.contains(&colors[u]) {
            seen.push(colors[u]);
        }
    }
    seen.len()
}

fn greedy_clique_size(g: &ExclusivityGraph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let start = (0..n).max_by_key(|&v| (g.degree(v), usize::MAX - v)).unwrap();
    let mut clique = vec![start];
    let mut cand = g.neighbors(start).clone();
    while let Some(v) = cand
        .iter()
        .max_by_key(|&v| (cand.intersection_len(g.neighbors(v)), usize::MAX - v))
    {
        clique.push(v);
        cand.intersect_with(g.neighbors(v));
    }
    clique.len()
}

enum Feasibility {
    Colorable(Vec<usize>),
    Infeasible,
    TimedOut,
}

fn try_color(g: &ExclusivityGraph, num_colors: usize, deadline: Instant) -> Feasibility {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut nodes = 0u64;
    match assign(g, num_colors, &mut colors, 0, deadline, &mut nodes) {
        Some(true) => Feasibility::Colorable(colors),
        Some(false) => Feasibility::Infeasible,
        None => Feasibility::TimedOut,
    }
}

fn assign(
    g: &ExclusivityGraph,
    num_colors: usize,
    colors: &mut [usize],
    colored: usize,
    deadline: Instant,
    nodes: &mut u64,
) -> Option<bool> {
    *nodes += 1;
    if *nodes & 0x3FF == 0 && Instant::now() >= deadline {
        return None;
    }
    let n = g.n();
    if colored == n {
        return Some(true);
    }
    let v = (0..n)
        .filter(|&v| colors[v] == usize::MAX)
        .max_by_key(|&v| (saturation(g, colors, v), g.degree(v), usize::MAX - v))
        .expect("uncolored vertex remains");
    let max_used = colors
        .iter()
        .filter(|&&c| c != usize::MAX)
        .max()
        .map_or(0, |&c| c + 1);
    for c in 0..num_colors.min(max_used + 1) {
        if g.neighbors(v).iter().any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        match assign(g, num_colors, colors, colored + 1, deadline, nodes) {
            Some(true) => return Some(true),
            Some(false) => {}
            None => return None,
        }
        colors[v] = usize::MAX;
    }
    Some(false)
}

/// Exact chromatic number within the budget: a χ-coloring plus proven
/// infeasibility of χ−1. On budget expiry the result carries the best
/// bounds and is flagged not exact.
pub fn chromatic_number(g: &ExclusivityGraph, budget: Duration) -> Result<ColoringResult> {
    if budget.is_zero() {
        return Err(Error::InvalidParameter(
            "coloring budget must be positive".into(),
        ));
    }
    let deadline = Instant::now() + budget;
    let n = g.n();
    if n == 0 {
        return Ok(ColoringResult {
            value: 0,
            assignment: Vec::new(),
            exact: true,
            lower_bound: 0,
        });
    }
    let (ub, ub_assignment) = greedy_dsatur(g);
    let lb = greedy_clique_size(g).max(1);
    let mut proven = lb;
    for t in lb..ub {
        match try_color(g, t, deadline) {
            Feasibility::Colorable(assignment) => {
                return Ok(ColoringResult {
                    value: t,
                    assignment,
                    exact: true,
                    lower_bound: t,
                });
            }
            Feasibility::Infeasible => {
                proven = t + 1;
            }
            Feasibility::TimedOut => {
                return Ok(ColoringResult {
                    value: ub,
                    assignment: ub_assignment,
                    exact: false,
                    lower_bound: proven,
                });
            }
        }
    }
    Ok(ColoringResult {
        value: ub,
        assignment: ub_assignment,
        exact: true,
        lower_bound: ub,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_proper(g: &ExclusivityGraph, r: &ColoringResult) {
        assert_eq!(r.assignment.len(), g.n());
        for (u, v) in g.edges() {
            assert_ne!(r.assignment[u], r.assignment[v]);
        }
        let distinct: std::collections::BTreeSet<usize> =
            r.assignment.iter().copied().collect();
        assert!(distinct.len() <= r.value);
    }

    fn minute() -> Duration {
        Duration::from_secs(60)
    }

    #[test]
    fn pentagon_needs_three_colors() {
        let g = ExclusivityGraph::pentagon();
        let r = chromatic_number(&g, minute()).unwrap();
        assert_eq!(r.value, 3);
        assert!(r.exact);
        assert_proper(&g, &r);
    }

    #[test]
    fn triangle_needs_three_colors() {
        let g = ExclusivityGraph::complete(3);
        let r = chromatic_number(&g, minute()).unwrap();
        assert_eq!(r.value, 3);
        assert!(r.exact);
        assert_proper(&g, &r);
    }

    #[test]
    fn edgeless_needs_one_color() {
        let g = ExclusivityGraph::edgeless(7);
        let r = chromatic_number(&g, minute()).unwrap();
        assert_eq!(r.value, 1);
        assert!(r.exact);
        assert_proper(&g, &r);
    }

    #[test]
    fn yu_oh_graph_chromatic_number() {
        // χ ≥ χ_f = 35/11 > 3, so the 13-ray graph needs at least 4 colors
        let g = crate::xgraph::build_graph(&crate::rays::generate_set(2).unwrap()).unwrap();
        let r = chromatic_number(&g, minute()).unwrap();
        assert!(r.exact);
        assert_proper(&g, &r);
        assert!(r.value >= 4);
    }

    #[test]
    fn zero_budget_rejected() {
        let g = ExclusivityGraph::pentagon();
        assert!(chromatic_number(&g, Duration::ZERO).is_err());
    }
}
