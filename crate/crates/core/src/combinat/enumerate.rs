//! Maximal independent set enumeration: Bron–Kerbosch with pivoting on the
//! complement graph (maximal cliques there are exactly the maximal
//! independent sets here).

use crate::xgraph::{BitSet, ExclusivityGraph};
use crate::{Error, Result};

/// Enumerates every inclusion-maximal independent set, each sorted
/// ascending, the list in lexicographic order. Errors with
/// `CapacityExceeded` as soon as more than `cap` sets are found; the
/// caller then falls back to column generation.
pub fn enumerate_maximal_independent_sets(
    g: &ExclusivityGraph,
    cap: usize,
) -> Result<Vec<Vec<usize>>> {
    if cap == 0 {
        return Err(Error::InvalidParameter("cap must be positive".into()));
    }
    let n = g.n();
    let h = g.complement();
    let adj: Vec<BitSet> = (0..n).map(|v| h.neighbors(v).clone()).collect();
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(
        &adj,
        &mut r,
        BitSet::full(n),
        BitSet::new(n),
        cap,
        &mut out,
    )?;
    out.sort();
    Ok(out)
}

fn bron_kerbosch(
    adj: &[BitSet],
    r: &mut Vec<usize>,
    p: BitSet,
    x: BitSet,
    cap: usize,
    out: &mut Vec<Vec<usize>>,
) -> Result<()> {
    if p.is_empty() && x.is_empty() {
        if out.len() >= cap {
            return Err(Error::CapacityExceeded(format!(
                "more than {cap} maximal independent sets"
            )));
        }
        let mut s = r.clone();
        s.sort_unstable();
        out.push(s);
        return Ok(());
    }
    // pivot maximizing |P ∩ N(u)|, ties to the smallest index
    let mut pivot = None;
    let mut pivot_score = 0usize;
    for u in p.iter().chain(x.iter()) {
        let score = p.intersection_len(&adj[u]);
        if pivot.is_none() || score > pivot_score {
            pivot = Some(u);
            pivot_score = score;
        }
    }
    let pivot = pivot.expect("P ∪ X is nonempty");
    let mut todo = p.clone();
    todo.difference_with(&adj[pivot]);
    let mut p = p;
    let mut x = x;
    for v in todo.to_vec() {
        let np = p.intersection(&adj[v]);
        let nx = x.intersection(&adj[v]);
        r.push(v);
        bron_kerbosch(adj, r, np, nx, cap, out)?;
        r.pop();
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}
