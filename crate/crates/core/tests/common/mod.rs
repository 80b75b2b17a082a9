//! Shared oracles for the integration suites: exhaustive brute force over
//! subsets, floating-point orthogonality, and seeded random graphs. These
//! deliberately avoid the library's solver paths.

use num_complex::Complex64;
use rand::Rng;
use sic_core::cyclo::{rat_int, Rational};
use sic_core::rays::RaySet;
use sic_core::xgraph::ExclusivityGraph;

/// Maximum-weight independent set by scanning all 2^n subsets.
pub fn brute_force_mis(g: &ExclusivityGraph, weights: Option<&[Rational]>) -> Rational {
    let n = g.n();
    assert!(n <= 20, "brute force oracle is for small graphs");
    let adj: Vec<u32> = (0..n)
        .map(|v| {
            let mut m = 0u32;
            for u in g.neighbors(v).iter() {
                m |= 1 << u;
            }
            m
        })
        .collect();
    let mut best = rat_int(0);
    for mask in 0u32..(1u32 << n) {
        let mut independent = true;
        for (v, a) in adj.iter().enumerate() {
            if mask & (1 << v) != 0 && a & mask != 0 {
                independent = false;
                break;
            }
        }
        if !independent {
            continue;
        }
        let weight = match weights {
            None => rat_int(mask.count_ones() as i64),
            Some(w) => (0..n)
                .filter(|&v| mask & (1 << v) != 0)
                .map(|v| w[v].clone())
                .sum(),
        };
        if weight > best {
            best = weight;
        }
    }
    best
}

/// Erdős–Rényi graph from the caller's RNG.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> ExclusivityGraph {
    let mut g = ExclusivityGraph::edgeless(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// |⟨u|v⟩| in double precision for two rays of a set.
pub fn numeric_inner_norm(rs: &RaySet, u: usize, v: usize) -> f64 {
    let cu = rs.ray(u).components();
    let cv = rs.ray(v).components();
    let mut ip = Complex64::new(0.0, 0.0);
    for t in 0..3 {
        ip += cu[t].evaluate().conj() * cv[t].evaluate();
    }
    ip.norm()
}
