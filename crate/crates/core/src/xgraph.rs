//! Exclusivity graphs: vertices are rays, edges join exactly-orthogonal
//! pairs. Adjacency is kept as per-vertex bitsets, which the combinatorial
//! solvers consume directly.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::cyclo::inner_product;
use crate::rays::{Ray, RayClass, RaySet};
use crate::{Error, Result};

/// A fixed-capacity set of vertex indices backed by 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitSet {
    nbits: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(nbits: usize) -> Self {
        BitSet {
            nbits,
            words: vec![0; nbits.div_ceil(64)],
        }
    }

    pub fn full(nbits: usize) -> Self {
        let mut s = Self::new(nbits);
        for i in 0..nbits {
            s.insert(i);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.nbits
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Popcount of the intersection, without allocating.
    pub fn intersection_len(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn first(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Copies `src` into self (same capacity).
    pub fn copy_from(&mut self, src: &BitSet) {
        debug_assert_eq!(self.nbits, src.nbits);
        self.words.copy_from_slice(&src.words);
    }

    pub fn iter(&self) -> BitIter<'_> {
        BitIter {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct BitIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * 64 + bit)
    }
}

/// Vertex metadata: ray graphs carry the class/exponent tuple, synthetic
/// test graphs carry a plain name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexLabel {
    Ray {
        class: RayClass,
        family: usize,
        i: usize,
        j: usize,
    },
    Named(String),
}

impl VertexLabel {
    fn from_ray(r: &Ray) -> Self {
        VertexLabel::Ray {
            class: r.class_tag(),
            family: r.family(),
            i: r.exp_i(),
            j: r.exp_j(),
        }
    }

    /// Rendered as "class:family:i:j" with "-" for fields the class does
    /// not use.
    pub fn text(&self) -> String {
        match self {
            VertexLabel::Ray {
                class: RayClass::I,
                family,
                ..
            } => format!("I:{family}:-:-"),
            VertexLabel::Ray {
                class: RayClass::II,
                family,
                i,
                ..
            } => format!("II:{family}:{i}:-"),
            VertexLabel::Ray {
                class: RayClass::III,
                i,
                j,
                ..
            } => format!("III:-:{i}:{j}"),
            VertexLabel::Named(s) => s.clone(),
        }
    }

    pub fn ray_class(&self) -> Option<RayClass> {
        match self {
            VertexLabel::Ray { class, .. } => Some(*class),
            VertexLabel::Named(_) => None,
        }
    }
}

/// An undirected graph with bitset adjacency rows; no self-loops, symmetric
/// by construction. For ray sets, the vertex order is the canonical ray
/// order.
#[derive(Clone, Debug)]
pub struct ExclusivityGraph {
    n: usize,
    rows: Vec<BitSet>,
    labels: Vec<VertexLabel>,
}

impl ExclusivityGraph {
    pub fn edgeless(n: usize) -> Self {
        ExclusivityGraph {
            n,
            rows: vec![BitSet::new(n); n],
            labels: (0..n).map(|i| VertexLabel::Named(format!("v{i}"))).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::edgeless(n);
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u},{v}) invalid for n={n}"
                )));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// The 5-cycle 0–1–2–3–4–0, the worked example for fractional coloring.
    pub fn pentagon() -> Self {
        Self::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::edgeless(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.rows[u].contains(v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    /// Complement graph (no self-loops), labels preserved.
    pub fn complement(&self) -> ExclusivityGraph {
        let mut g = ExclusivityGraph {
            n: self.n,
            rows: vec![BitSet::new(self.n); self.n],
            labels: self.labels.clone(),
        };
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && !self.rows[u].contains(v) {
                    g.rows[u].insert(v);
                }
            }
        }
        g
    }

    /// Edges as sorted (u,v) pairs with u < v.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True iff no two vertices of `set` are adjacent.
    pub fn is_independent_set(&self, set: &[usize]) -> bool {
        for (idx, &u) in set.iter().enumerate() {
            if u >= self.n {
                return false;
            }
            for &v in &set[idx + 1..] {
                if u == v || self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff `set` is independent and no vertex outside can be added.
    pub fn is_maximal_independent_set(&self, set: &[usize]) -> bool {
        if !self.is_independent_set(set) {
            return false;
        }
        let mut members = BitSet::new(self.n);
        for &u in set {
            members.insert(u);
        }
        for v in 0..self.n {
            if !members.contains(v) && self.rows[v].is_disjoint(&members) {
                return false;
            }
        }
        true
    }

    /// DOT export with deterministic vertex and edge order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph exclusivity {\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {} [label=\"{}\"];", v, self.labels[v].text());
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    /// JSON adjacency export with lexicographically sorted edges.
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "edges": self.edges().iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>(),
            "labels": self.labels.iter().map(|l| l.text()).collect::<Vec<_>>(),
        })
    }

    /// Rebuilds a graph from the JSON adjacency export (labels imported as
    /// plain names).
    pub fn from_json(v: &Value) -> Result<Self> {
        let n = v["n"]
            .as_u64()
            .ok_or_else(|| Error::InvalidParameter("missing n".into()))? as usize;
        let edges = v["edges"]
            .as_array()
            .ok_or_else(|| Error::InvalidParameter("missing edges".into()))?;
        let mut g = Self::edgeless(n);
        for e in edges {
            let u = e[0]
                .as_u64()
                .ok_or_else(|| Error::InvalidParameter("edge endpoint not an integer".into()))?
                as usize;
            let w = e[1]
                .as_u64()
                .ok_or_else(|| Error::InvalidParameter("edge endpoint not an integer".into()))?
                as usize;
            if u >= n || w >= n || u == w {
                return Err(Error::InvalidParameter(format!("bad edge ({u},{w})")));
            }
            g.add_edge(u, w);
        }
        if let Some(labels) = v["labels"].as_array() {
            if labels.len() == n {
                g.labels = labels
                    .iter()
                    .map(|l| VertexLabel::Named(l.as_str().unwrap_or_default().to_string()))
                    .collect();
            }
        }
        Ok(g)
    }
}

/// Builds the exclusivity graph of a ray set: edge (u,v) iff the exact
/// Hermitian inner product of the two rays vanishes.
pub fn build_graph(rs: &RaySet) -> Result<ExclusivityGraph> {
    let n = rs.len();
    let mut g = ExclusivityGraph::edgeless(n);
    g.labels = rs.rays().iter().map(VertexLabel::from_ray).collect();
    for u in 0..n {
        for v in (u + 1)..n {
            let ip = inner_product(rs.ray(u).components(), rs.ray(v).components())?;
            if ip.is_zero() {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// All triangles {u,v,w} of mutually adjacent vertices; for exclusivity
/// graphs in dimension 3 each is a complete orthogonal basis.
pub fn orthogonal_bases(g: &ExclusivityGraph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in g.neighbors(u).iter() {
            if v <= u {
                continue;
            }
            let common = g.neighbors(u).intersection(g.neighbors(v));
            for w in common.iter() {
                if w > v {
                    out.push([u, v, w]);
                }
            }
        }
    }
    out
}

/// One pass/fail item of the structural report.
#[derive(Clone, Debug)]
pub struct ItemResult {
    pub pass: bool,
    pub counterexample: Option<Vec<usize>>,
}

impl ItemResult {
    fn passed() -> Self {
        ItemResult {
            pass: true,
            counterexample: None,
        }
    }

    fn failed(vs: Vec<usize>) -> Self {
        ItemResult {
            pass: false,
            counterexample: Some(vs),
        }
    }
}

/// The four structural facts that drive the independence analysis when
/// 3 does not divide k: (a) class I is a triangle, (b) class III is
/// edgeless within itself, (c) there are no class I–III edges, (d) every
/// class-II vertex has at least one class-III neighbor.
#[derive(Clone, Debug)]
pub struct StructuralReport {
    pub class_one_triangle: ItemResult,
    pub class_three_edgeless: ItemResult,
    pub no_one_three_edges: ItemResult,
    pub class_two_has_three_neighbor: ItemResult,
}

impl StructuralReport {
    pub fn all_pass(&self) -> bool {
        self.class_one_triangle.pass
            && self.class_three_edgeless.pass
            && self.no_one_three_edges.pass
            && self.class_two_has_three_neighbor.pass
    }
}

/// Checks the Case-1 structural items on a graph built from a ray set.
/// Errors if the graph does not carry ray labels.
pub fn structural_report(g: &ExclusivityGraph) -> Result<StructuralReport> {
    let classes: Vec<RayClass> = g
        .labels()
        .iter()
        .map(|l| {
            l.ray_class().ok_or_else(|| {
                Error::InvalidParameter("structural report requires a ray-labelled graph".into())
            })
        })
        .collect::<Result<_>>()?;
    let by_class = |c: RayClass| -> Vec<usize> { (0..g.n()).filter(|&v| classes[v] == c).collect() };
    let ones = by_class(RayClass::I);
    let twos = by_class(RayClass::II);
    let threes = by_class(RayClass::III);

    let mut class_one_triangle = ItemResult::passed();
    'one: for (idx, &u) in ones.iter().enumerate() {
        for &v in &ones[idx + 1..] {
            if !g.has_edge(u, v) {
                class_one_triangle = ItemResult::failed(vec![u, v]);
                break 'one;
            }
        }
    }

    let mut class_three_edgeless = ItemResult::passed();
    'three: for (idx, &u) in threes.iter().enumerate() {
        for &v in &threes[idx + 1..] {
            if g.has_edge(u, v) {
                class_three_edgeless = ItemResult::failed(vec![u, v]);
                break 'three;
            }
        }
    }

    let mut no_one_three_edges = ItemResult::passed();
    'mixed: for &u in &ones {
        for &v in &threes {
            if g.has_edge(u, v) {
                no_one_three_edges = ItemResult::failed(vec![u, v]);
                break 'mixed;
            }
        }
    }

    let mut class_two_has_three_neighbor = ItemResult::passed();
    for &u in &twos {
        if !threes.iter().any(|&v| g.has_edge(u, v)) {
            class_two_has_three_neighbor = ItemResult::failed(vec![u]);
            break;
        }
    }

    Ok(StructuralReport {
        class_one_triangle,
        class_three_edgeless,
        no_one_three_edges,
        class_two_has_three_neighbor,
    })
}
