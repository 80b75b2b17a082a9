//! The parameterized family of qutrit rays and exact projector algebra.
//!
//! For a k-th root of unity q, the family consists of three classes:
//! class I is the standard basis, class II the rays (1,−qⁱ,0), (1,0,−qⁱ),
//! (0,1,−qⁱ), and class III the rays (1,qⁱ,qʲ), all with exponents in
//! 0..k−1, which makes n = 3 + 3k + k² rays in total. Projectors are normalized by
//! ⟨v|v⟩ so that every single-ray projector has trace 1.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::cyclo::{inner_product, CycNum, Rational};
use crate::ser::rational_value;
use crate::{Error, Result};

/// The three ray classes of the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RayClass {
    I,
    II,
    III,
}

impl RayClass {
    pub fn as_str(self) -> &'static str {
        match self {
            RayClass::I => "I",
            RayClass::II => "II",
            RayClass::III => "III",
        }
    }
}

/// A projective 3-vector over the k-th cyclotomic field with its class
/// metadata. `family` indexes the basis vector (class I) or the template
/// row (class II); `exp_i`/`exp_j` are the root-of-unity exponents.
#[derive(Clone, Debug)]
pub struct Ray {
    order: usize,
    class_tag: RayClass,
    family: usize,
    exp_i: usize,
    exp_j: usize,
    components: [CycNum; 3],
}

impl Ray {
    /// Class I: the standard basis vector with index `family`.
    pub fn class_one(k: usize, family: usize) -> Ray {
        assert!(family < 3);
        let mut components = [CycNum::zero(k), CycNum::zero(k), CycNum::zero(k)];
        components[family] = CycNum::one(k);
        Ray {
            order: k,
            class_tag: RayClass::I,
            family,
            exp_i: 0,
            exp_j: 0,
            components,
        }
    }

    /// Class II: family 0 is (1,−qⁱ,0), family 1 is (1,0,−qⁱ), family 2 is
    /// (0,1,−qⁱ).
    pub fn class_two(k: usize, family: usize, i: usize) -> Ray {
        assert!(family < 3);
        let one = CycNum::one(k);
        let mq = CycNum::root_power(k, i as i64).neg();
        let zero = CycNum::zero(k);
        let components = match family {
            0 => [one, mq, zero],
            1 => [one, zero, mq],
            _ => [zero, one, mq],
        };
        Ray {
            order: k,
            class_tag: RayClass::II,
            family,
            exp_i: i % k,
            exp_j: 0,
            components,
        }
    }

    /// Class III: (1,qⁱ,qʲ).
    pub fn class_three(k: usize, i: usize, j: usize) -> Ray {
        Ray {
            order: k,
            class_tag: RayClass::III,
            family: 0,
            exp_i: i % k,
            exp_j: j % k,
            components: [
                CycNum::one(k),
                CycNum::root_power(k, i as i64),
                CycNum::root_power(k, j as i64),
            ],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn class_tag(&self) -> RayClass {
        self.class_tag
    }

    pub fn family(&self) -> usize {
        self.family
    }

    pub fn exp_i(&self) -> usize {
        self.exp_i
    }

    pub fn exp_j(&self) -> usize {
        self.exp_j
    }

    pub fn components(&self) -> &[CycNum; 3] {
        &self.components
    }

    /// Vertex label "class:family:i:j" with "-" for fields that are not
    /// meaningful for the class.
    pub fn label(&self) -> String {
        match self.class_tag {
            RayClass::I => format!("I:{}:-:-", self.family),
            RayClass::II => format!("II:{}:{}:-", self.family, self.exp_i),
            RayClass::III => format!("III:-:{}:{}", self.exp_i, self.exp_j),
        }
    }

    /// Exact squared norm ⟨v|v⟩; 1, 2 or 3 by class.
    pub fn norm_squared(&self) -> Rational {
        inner_product(&self.components, &self.components)
            .expect("components share one order")
            .as_rational()
            .expect("norm of a template ray is rational")
    }

    /// JSON export; fields not meaningful for the class are null.
    pub fn to_json(&self) -> Result<Value> {
        let comps: Result<Vec<Value>> = self
            .components
            .iter()
            .map(|c| {
                let mut map = BTreeMap::new();
                for (t, coeff) in c.coeffs().iter().enumerate() {
                    if !num_traits::Zero::is_zero(coeff) {
                        map.insert(t.to_string(), rational_value(coeff)?);
                    }
                }
                Ok(Value::Object(map.into_iter().collect()))
            })
            .collect();
        let (family, i, j) = match self.class_tag {
            RayClass::I => (Some(self.family), None, None),
            RayClass::II => (Some(self.family), Some(self.exp_i), None),
            RayClass::III => (None, Some(self.exp_i), Some(self.exp_j)),
        };
        Ok(json!({
            "k": self.order,
            "class": self.class_tag.as_str(),
            "family": family,
            "i": i,
            "j": j,
            "components": comps?,
        }))
    }
}

/// True iff two 3-vectors span the same ray (all 2×2 minors vanish exactly).
pub fn projectively_equal(u: &[CycNum; 3], v: &[CycNum; 3]) -> Result<bool> {
    for a in 0..3 {
        for b in (a + 1)..3 {
            let m = u[a].mul(&v[b])?.sub(&u[b].mul(&v[a])?)?;
            if !m.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The full ray family for one k, in canonical order: class I, class II by
/// family then exponent, class III row-major in (i,j).
#[derive(Clone, Debug)]
pub struct RaySet {
    order: usize,
    rays: Vec<Ray>,
}

impl RaySet {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn ray(&self, idx: usize) -> &Ray {
        &self.rays[idx]
    }

    /// Per-vertex weights from a class-level triple (w_I, w_II, w_III).
    pub fn class_weights(&self, w: &[Rational; 3]) -> Vec<Rational> {
        self.rays
            .iter()
            .map(|r| match r.class_tag() {
                RayClass::I => w[0].clone(),
                RayClass::II => w[1].clone(),
                RayClass::III => w[2].clone(),
            })
            .collect()
    }

    pub fn to_json(&self) -> Result<Value> {
        let rays: Result<Vec<Value>> = self.rays.iter().map(|r| r.to_json()).collect();
        Ok(json!({
            "k": self.order,
            "n": self.rays.len(),
            "rays": rays?,
        }))
    }
}

/// Generates all n = 3 + 3k + k² rays for the given k in canonical order.
/// k = 1 is rejected: with a single root of unity the class sums are not
/// proportional to the identity and the family degenerates.
pub fn generate_set(k: usize) -> Result<RaySet> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "ray family requires k >= 2, got {k}"
        )));
    }
    let mut rays = Vec::with_capacity(3 + 3 * k + k * k);
    for family in 0..3 {
        rays.push(Ray::class_one(k, family));
    }
    for family in 0..3 {
        for i in 0..k {
            rays.push(Ray::class_two(k, family, i));
        }
    }
    for i in 0..k {
        for j in 0..k {
            rays.push(Ray::class_three(k, i, j));
        }
    }
    Ok(RaySet { order: k, rays })
}

/// A 3×3 matrix over the k-th cyclotomic field; holds rank-1 projectors and
/// their weighted sums.
#[derive(Clone, Debug)]
pub struct ProjectorMatrix {
    order: usize,
    entries: [[CycNum; 3]; 3],
}

impl ProjectorMatrix {
    pub fn zero(k: usize) -> Self {
        let row = || [CycNum::zero(k), CycNum::zero(k), CycNum::zero(k)];
        ProjectorMatrix {
            order: k,
            entries: [row(), row(), row()],
        }
    }

    /// c·Identity.
    pub fn scaled_identity(k: usize, c: &Rational) -> Self {
        let mut m = Self::zero(k);
        for a in 0..3 {
            m.entries[a][a] = CycNum::from_rational(k, c.clone());
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, a: usize, b: usize) -> &CycNum {
        &self.entries[a][b]
    }

    pub fn add(&self, other: &ProjectorMatrix) -> Result<ProjectorMatrix> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        let mut out = ProjectorMatrix::zero(self.order);
        for a in 0..3 {
            for b in 0..3 {
                out.entries[a][b] = self.entries[a][b].add(&other.entries[a][b])?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, r: &Rational) -> ProjectorMatrix {
        let mut out = self.clone();
        for a in 0..3 {
            for b in 0..3 {
                out.entries[a][b] = out.entries[a][b].scale(r);
            }
        }
        out
    }

    pub fn matmul(&self, other: &ProjectorMatrix) -> Result<ProjectorMatrix> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        let mut out = ProjectorMatrix::zero(self.order);
        for a in 0..3 {
            for b in 0..3 {
                let mut acc = CycNum::zero(self.order);
                for t in 0..3 {
                    acc = acc.add(&self.entries[a][t].mul(&other.entries[t][b])?)?;
                }
                out.entries[a][b] = acc;
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> CycNum {
        let mut acc = CycNum::zero(self.order);
        for a in 0..3 {
            acc = acc.add(&self.entries[a][a]).expect("same order");
        }
        acc
    }

    pub fn is_hermitian(&self) -> bool {
        for a in 0..3 {
            for b in 0..3 {
                if self.entries[a][b] != self.entries[b][a].conj() {
                    return false;
                }
            }
        }
        true
    }
}

impl PartialEq for ProjectorMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && (0..3).all(|a| (0..3).all(|b| self.entries[a][b] == other.entries[a][b]))
    }
}

impl Eq for ProjectorMatrix {}

/// The normalized rank-1 projector P = |v⟩⟨v| / ⟨v|v⟩ of a ray.
pub fn projector(r: &Ray) -> ProjectorMatrix {
    let k = r.order();
    let inv = r.norm_squared().recip();
    let mut m = ProjectorMatrix::zero(k);
    for a in 0..3 {
        for b in 0..3 {
            m.entries[a][b] = r.components()[a]
                .mul(&r.components()[b].conj())
                .expect("components share one order")
                .scale(&inv);
        }
    }
    m
}

/// Σ wᵢ·Pᵢ over the whole set, computed exactly. The weight vector must
/// have one entry per ray; uniform weight 1 gives the operator of the
/// unweighted inequality.
pub fn weighted_projector_sum(rs: &RaySet, weights: &[Rational]) -> Result<ProjectorMatrix> {
    if weights.len() != rs.len() {
        return Err(Error::InvalidParameter(format!(
            "weight vector length {} does not match ray count {}",
            weights.len(),
            rs.len()
        )));
    }
    let mut acc = ProjectorMatrix::zero(rs.order());
    for (ray, w) in rs.rays().iter().zip(weights) {
        acc = acc.add(&projector(ray).scale(w))?;
    }
    Ok(acc)
}

/// Some(c) iff m = c·Identity exactly: all off-diagonal entries are zero by
/// the exact cyclotomic test, the diagonals are equal, and the common
/// diagonal value is rational.
pub fn proportional_to_identity(m: &ProjectorMatrix) -> Option<Rational> {
    for a in 0..3 {
        for b in 0..3 {
            if a != b && !m.entry(a, b).is_zero() {
                return None;
            }
        }
    }
    let d0 = m.entry(0, 0);
    if *m.entry(1, 1) != *d0 || *m.entry(2, 2) != *d0 {
        return None;
    }
    d0.as_rational()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::{rat, rat_int};

    #[test]
    fn generate_counts() {
        assert_eq!(generate_set(2).unwrap().len(), 13);
        assert_eq!(generate_set(3).unwrap().len(), 21);
        assert_eq!(generate_set(5).unwrap().len(), 43);
        for k in 2..=12 {
            assert_eq!(generate_set(k).unwrap().len(), 3 + 3 * k + k * k);
        }
        assert!(matches!(generate_set(1), Err(Error::InvalidParameter(_))));
        assert!(matches!(generate_set(0), Err(Error::InvalidParameter(_))));
    }

    /// The thirteen k=2 vectors as integer component triples.
    fn yu_oh_rays() -> Vec<[i64; 3]> {
        vec![
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 1, 0],
            [1, 0, 1],
            [0, 1, 1],
            [1, -1, 0],
            [1, 0, -1],
            [0, 1, -1],
            [1, 1, 1],
            [1, 1, -1],
            [1, -1, 1],
            [1, -1, -1],
        ]
    }

    fn int_vec(k: usize, v: &[i64; 3]) -> [CycNum; 3] {
        [
            CycNum::from_rational(k, rat_int(v[0])),
            CycNum::from_rational(k, rat_int(v[1])),
            CycNum::from_rational(k, rat_int(v[2])),
        ]
    }

    #[test]
    fn k2_equals_yu_oh_list_projectively() {
        let set = generate_set(2).unwrap();
        let reference = yu_oh_rays();
        assert_eq!(set.len(), reference.len());
        // bijection: every reference vector matches exactly one generated ray
        let mut matched = vec![false; set.len()];
        for r in &reference {
            let rv = int_vec(2, r);
            let hits: Vec<usize> = set
                .rays()
                .iter()
                .enumerate()
                .filter(|(_, ray)| projectively_equal(ray.components(), &rv).unwrap())
                .map(|(idx, _)| idx)
                .collect();
            assert_eq!(hits.len(), 1, "reference {r:?} matched {hits:?}");
            assert!(!matched[hits[0]]);
            matched[hits[0]] = true;
        }
        assert!(matched.iter().all(|&m| m));
    }

    #[test]
    fn rays_pairwise_projectively_distinct() {
        for k in [2, 3, 4, 6] {
            let set = generate_set(k).unwrap();
            for a in 0..set.len() {
                for b in (a + 1)..set.len() {
                    assert!(
                        !projectively_equal(set.ray(a).components(), set.ray(b).components())
                            .unwrap(),
                        "rays {a} and {b} coincide at k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn norm_squared_by_class() {
        assert_eq!(Ray::class_one(5, 0).norm_squared(), rat_int(1));
        assert_eq!(Ray::class_two(4, 0, 1).norm_squared(), rat_int(2));
        assert_eq!(Ray::class_three(6, 2, 5).norm_squared(), rat_int(3));
    }

    #[test]
    fn projector_examples() {
        // (1,0,0) → diag(1,0,0)
        let p = projector(&Ray::class_one(2, 0));
        assert_eq!(*p.entry(0, 0), CycNum::one(2));
        assert!(p.entry(1, 1).is_zero() && p.entry(2, 2).is_zero());
        assert!(p.entry(0, 1).is_zero());

        // k=2, (1,1,0) → [[1/2,1/2,0],[1/2,1/2,0],[0,0,0]]
        let p = projector(&Ray::class_two(2, 0, 1));
        let half = CycNum::from_rational(2, rat(1, 2));
        assert_eq!(*p.entry(0, 0), half);
        assert_eq!(*p.entry(0, 1), half);
        assert_eq!(*p.entry(1, 0), half);
        assert_eq!(*p.entry(1, 1), half);
        assert!(p.entry(2, 2).is_zero());

        // k=3, (1,q,q²): entry(0,1) = conj(q)/3 = q²/3
        let p = projector(&Ray::class_three(3, 1, 2));
        let expected = CycNum::root_power(3, 2).scale(&rat(1, 3));
        assert_eq!(*p.entry(0, 1), expected);
        assert!((p.entry(0, 1).evaluate() - expected.evaluate()).norm() < 1e-12);
    }

    #[test]
    fn projectors_are_hermitian_idempotent_trace_one() {
        for k in [2, 3, 5, 6] {
            let set = generate_set(k).unwrap();
            for ray in set.rays().iter().step_by(5) {
                let p = projector(ray);
                assert!(p.is_hermitian());
                assert_eq!(p.matmul(&p).unwrap(), p);
                assert_eq!(p.trace().as_rational(), Some(rat_int(1)));
            }
        }
    }

    #[test]
    fn weighted_sum_examples() {
        // k=2, unit weights → (13/3)·Identity
        let set = generate_set(2).unwrap();
        let sum = weighted_projector_sum(&set, &vec![rat_int(1); 13]).unwrap();
        assert_eq!(proportional_to_identity(&sum), Some(rat(13, 3)));

        // k=4, class weights (5,3,1) → (67/3)·Identity
        let set = generate_set(4).unwrap();
        let w = set.class_weights(&[rat_int(5), rat_int(3), rat_int(1)]);
        let sum = weighted_projector_sum(&set, &w).unwrap();
        assert_eq!(proportional_to_identity(&sum), Some(rat(67, 3)));

        // k=6, unit weights → 19·Identity
        let set = generate_set(6).unwrap();
        let sum = weighted_projector_sum(&set, &vec![rat_int(1); set.len()]).unwrap();
        assert_eq!(proportional_to_identity(&sum), Some(rat_int(19)));

        // length mismatch
        assert!(matches!(
            weighted_projector_sum(&set, &[rat_int(1)]),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn class_sums_match_identities() {
        for k in 2..=12usize {
            let set = generate_set(k).unwrap();
            let mut per_class = [ProjectorMatrix::zero(k),
                ProjectorMatrix::zero(k),
                ProjectorMatrix::zero(k)];
            for ray in set.rays() {
                let idx = match ray.class_tag() {
                    RayClass::I => 0,
                    RayClass::II => 1,
                    RayClass::III => 2,
                };
                per_class[idx] = per_class[idx].add(&projector(ray)).unwrap();
            }
            assert_eq!(
                proportional_to_identity(&per_class[0]),
                Some(rat_int(1)),
                "class I at k={k}"
            );
            assert_eq!(
                proportional_to_identity(&per_class[1]),
                Some(rat_int(k as i64)),
                "class II at k={k}"
            );
            assert_eq!(
                proportional_to_identity(&per_class[2]),
                Some(rat(k as i64 * k as i64, 3)),
                "class III at k={k}"
            );
            let total = per_class[0]
                .add(&per_class[1])
                .unwrap()
                .add(&per_class[2])
                .unwrap();
            let n = 3 + 3 * k + k * k;
            assert_eq!(
                proportional_to_identity(&total),
                Some(rat(n as i64, 3)),
                "total at k={k}"
            );
        }
    }

    #[test]
    fn class_two_family_sum_structure() {
        // each class-II family sums to (k/2)·diag with one vanishing slot
        let k = 3;
        let mut sum = ProjectorMatrix::zero(k);
        for i in 0..k {
            sum = sum.add(&projector(&Ray::class_two(k, 0, i))).unwrap();
        }
        let half_k = CycNum::from_rational(k, rat(3, 2));
        assert_eq!(*sum.entry(0, 0), half_k);
        assert_eq!(*sum.entry(1, 1), half_k);
        assert!(sum.entry(2, 2).is_zero());
        assert!(sum.entry(0, 1).is_zero());
    }

    #[test]
    fn proportional_to_identity_negative_cases() {
        let k = 3;
        let mut m = ProjectorMatrix::scaled_identity(k, &rat_int(1));
        assert_eq!(proportional_to_identity(&m), Some(rat_int(1)));
        m.entries[1][1] = CycNum::from_rational(k, rat_int(2));
        assert_eq!(proportional_to_identity(&m), None);
    }

    #[test]
    fn ray_json_shape() {
        let ray = Ray::class_two(3, 0, 1);
        let v = ray.to_json().unwrap();
        assert_eq!(v["k"], 3);
        assert_eq!(v["class"], "II");
        assert_eq!(v["family"], 0);
        assert_eq!(v["i"], 1);
        assert!(v["j"].is_null());
        // components: 1, −q, 0 as sparse exponent → [num, den] maps
        assert_eq!(v["components"][0]["0"][0], 1);
        assert_eq!(v["components"][1]["1"][0], -1);
        assert_eq!(v["components"][2].as_object().map(|m| m.len()), Some(0));
    }
}
