//! State-independent contextuality verdicts and per-k reports.
//!
//! Two criteria are rendered. The fractional-chromatic criterion is
//! necessary only: χ_f(G) > 3 reports "necessary condition passed", never a
//! standalone SIC proof, while an exact χ_f ≤ 3 refutes SIC. The inequality
//! criterion is sufficient: since Σ Pᵢ = (n/3)·1, an exact independence
//! number α < n/3 means every state violates the noncontextuality
//! inequality, a full SIC certificate.

use std::time::Duration;

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::combinat::{
    alpha_formula, construct_independent_set_on, max_independent_set_with, IndependenceResult,
    MisOptions, SolveStatus,
};
use crate::cyclo::{rat, rat_int, CycNum, Rational};
use crate::fraccolor::{
    certificate_json, fractional_chromatic, ChifMethod, ChifStatus, FractionalColoring,
};
use crate::rays::{
    generate_set, proportional_to_identity, weighted_projector_sum, ProjectorMatrix, RayClass,
    RaySet,
};
use crate::ser::rational_value;
use crate::xgraph::build_graph;
use crate::{Error, Result};

/// Verdict of the fractional-chromatic (necessary) criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhVerdict {
    NotSic,
    NecessaryConditionPassed,
    Inconclusive,
}

impl RhVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            RhVerdict::NotSic => "not-sic",
            RhVerdict::NecessaryConditionPassed => "necessary-condition-passed",
            RhVerdict::Inconclusive => "inconclusive",
        }
    }
}

/// Verdict of the sum-of-projectors inequality criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IneqVerdict {
    Sic,
    Inconclusive,
}

impl IneqVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            IneqVerdict::Sic => "sic",
            IneqVerdict::Inconclusive => "inconclusive",
        }
    }
}

/// χ_f ≤ 3 (exact) refutes SIC for a qutrit; χ_f > 3 passes the necessary
/// condition; anything non-exact is inconclusive.
pub fn rh_criterion(chif_value: &Rational, exact: bool) -> RhVerdict {
    if !exact {
        return RhVerdict::Inconclusive;
    }
    if *chif_value <= rat_int(3) {
        RhVerdict::NotSic
    } else {
        RhVerdict::NecessaryConditionPassed
    }
}

/// Exact α < n/3 certifies SIC (every state violates the inequality);
/// anything else is inconclusive for this criterion.
pub fn inequality_criterion(alpha: &IndependenceResult, n: usize) -> IneqVerdict {
    if alpha.status == SolveStatus::Exact && alpha.value < rat(n as i64, 3) {
        IneqVerdict::Sic
    } else {
        IneqVerdict::Inconclusive
    }
}

/// The quantum value of a weighted operator: an exact scalar when the
/// operator is proportional to the identity (state independent), otherwise
/// the numerically largest eigenvalue (state dependent, not certified).
#[derive(Clone, Debug, PartialEq)]
pub enum QuantumValue {
    Exact(Rational),
    Numeric(f64),
}

/// One weighted noncontextuality inequality, Σ wᵢ⟨Pᵢ⟩ ≤ classical bound.
#[derive(Clone, Debug)]
pub struct WeightedInequality {
    pub classical_bound: Rational,
    pub bound_exact: bool,
    pub quantum: QuantumValue,
    pub violated: bool,
    /// true iff both sides are exact, making the verdict a proof
    pub certified: bool,
    /// quantum / classical when both exact and the bound is positive
    pub violation_ratio: Option<Rational>,
}

fn largest_eigenvalue_numeric(m: &ProjectorMatrix) -> f64 {
    let a: Vec<Vec<Complex64>> = (0..3)
        .map(|r| (0..3).map(|c| m.entry(r, c).evaluate()).collect())
        .collect();
    let mut v = [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.8, 0.13),
        Complex64::new(0.55, -0.21),
    ];
    let norm = |x: &[Complex64; 3]| x.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    let s = norm(&v);
    v.iter_mut().for_each(|c| *c /= s);
    let mut prev = f64::MAX;
    for _ in 0..200_000 {
        let mut w = [Complex64::new(0.0, 0.0); 3];
        for r in 0..3 {
            for c in 0..3 {
                w[r] += a[r][c] * v[c];
            }
        }
        // Rayleigh quotient; real for Hermitian operators
        let lambda: f64 = (0..3).map(|r| (v[r].conj() * w[r]).re).sum();
        let s = norm(&w);
        if s == 0.0 {
            return 0.0;
        }
        for r in 0..3 {
            v[r] = w[r] / s;
        }
        if (lambda - prev).abs() < 1e-12 {
            return lambda;
        }
        prev = lambda;
    }
    prev
}

/// Evaluates Σ wᵢPᵢ ≤ classical-bound: the bound is an exact weighted
/// maximum independent set, the quantum side is the exact identity scalar
/// when available.
pub fn evaluate_weighted_inequality(
    rs: &RaySet,
    weights: &[Rational],
    budget: Duration,
) -> Result<WeightedInequality> {
    if weights.len() != rs.len() {
        return Err(Error::InvalidParameter(format!(
            "weight vector length {} does not match ray count {}",
            weights.len(),
            rs.len()
        )));
    }
    if weights.iter().any(|w| w < &Rational::from_integer(0.into())) {
        return Err(Error::InvalidParameter(
            "weights must be nonnegative".into(),
        ));
    }
    let g = build_graph(rs)?;
    let alpha = max_independent_set_with(&g, Some(weights), &MisOptions::new(budget))?;
    let operator = weighted_projector_sum(rs, weights)?;
    let quantum = match proportional_to_identity(&operator) {
        Some(c) => QuantumValue::Exact(c),
        None => QuantumValue::Numeric(largest_eigenvalue_numeric(&operator)),
    };
    let bound_exact = alpha.status == SolveStatus::Exact;
    let (violated, certified, ratio) = match &quantum {
        QuantumValue::Exact(c) => {
            let ratio = (c > &Rational::from_integer(0.into())
                && alpha.value > Rational::from_integer(0.into()))
            .then(|| c / &alpha.value);
            (c > &alpha.value, bound_exact, ratio)
        }
        QuantumValue::Numeric(x) => {
            let bound_f = alpha.value.numer().to_string().parse::<f64>().unwrap_or(0.0)
                / alpha.value.denom().to_string().parse::<f64>().unwrap_or(1.0);
            (*x > bound_f, false, None)
        }
    };
    Ok(WeightedInequality {
        classical_bound: alpha.value,
        bound_exact,
        quantum,
        violated,
        certified,
        violation_ratio: ratio,
    })
}

/// All (i,j) with 1 + qⁱ + qʲ = 0, decided by the exact zero test over
/// 0..k−1. Nonempty exactly when 3 divides k, where the solutions are
/// (m,2m) and (2m,m) for m = k/3.
pub fn vanishing_triples(k: usize) -> Result<Vec<(usize, usize)>> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "vanishing triples need k >= 2, got {k}"
        )));
    }
    let one = CycNum::one(k);
    let mut out = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let s = one
                .add(&CycNum::root_power(k, i as i64))?
                .add(&CycNum::root_power(k, j as i64))?;
            if s.is_zero() {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

/// For k = 3m, verifies against the built graph that two class-III rays
/// are orthogonal iff their exponent difference is (m,−m) or (−m,m) mod k.
pub fn orthogonality_shift_law(k: usize) -> Result<bool> {
    if k < 2 || !k.is_multiple_of(3) {
        return Err(Error::InvalidParameter(format!(
            "shift law applies only when 3 divides k, got {k}"
        )));
    }
    let m = k / 3;
    let g = build_graph(&generate_set(k)?)?;
    let base = 3 + 3 * k;
    for i1 in 0..k {
        for j1 in 0..k {
            for i2 in 0..k {
                for j2 in 0..k {
                    let u = base + i1 * k + j1;
                    let v = base + i2 * k + j2;
                    if u == v {
                        continue;
                    }
                    let di = (k + i2 - i1) % k;
                    let dj = (k + j2 - j1) % k;
                    let law = (di == m && dj == k - m) || (di == k - m && dj == m);
                    if g.has_edge(u, v) != law {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Time budgets for one analysis run. `chif: None` skips the fractional
/// chromatic number entirely (the inequality criterion still runs).
#[derive(Clone, Debug)]
pub struct Budgets {
    pub alpha: Duration,
    pub chif: Option<Duration>,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            alpha: Duration::from_secs(60),
            chif: Some(Duration::from_secs(300)),
        }
    }
}

/// Everything the artifact can say about one k.
#[derive(Clone, Debug)]
pub struct SicReport {
    pub k: usize,
    pub n: usize,
    pub alpha: IndependenceResult,
    pub alpha_conjecture: Rational,
    pub chif: Option<FractionalColoring>,
    /// scalar c with Σ Pᵢ = c·1 for unit weights (n/3 when it exists)
    pub quantum_value: Option<Rational>,
    pub rh_verdict: RhVerdict,
    pub ineq_verdict: IneqVerdict,
    pub weighted: Option<WeightedInequality>,
    pub notes: Vec<String>,
}

/// Full pipeline for one k: generate → graph → α (seeded by the explicit
/// construction) → χ_f if budgeted → both criteria. The k=4 report also
/// carries the class-weighted (5,3,1) inequality, the instance that
/// settles that case.
pub fn analyze(k: usize, budgets: &Budgets) -> Result<SicReport> {
    let rs = generate_set(k)?;
    let g = build_graph(&rs)?;
    let n = rs.len();
    let mut notes = Vec::new();

    let mut opts = MisOptions::new(budgets.alpha);
    opts.seed_witness = construct_independent_set_on(&g, k).ok();
    let alpha = max_independent_set_with(&g, None, &opts)?;
    if alpha.status != SolveStatus::Exact {
        notes.push(format!(
            "alpha search hit the {:?} budget; value {} is a lower bound",
            budgets.alpha, alpha.value
        ));
    }

    let alpha_conjecture = alpha_formula(k)?;
    if alpha.status == SolveStatus::Exact && alpha.value != alpha_conjecture {
        notes.push(format!(
            "exact alpha {} disagrees with the closed-form value {} at k={k}",
            alpha.value, alpha_conjecture
        ));
    }

    let chif = match budgets.chif {
        None => None,
        Some(budget) => {
            let fc = fractional_chromatic(&g, ChifMethod::ColumnGeneration, budget)?;
            if let ChifStatus::Bounds { lower, upper } = &fc.status {
                notes.push(format!(
                    "fractional chromatic number not closed within budget: in [{lower}, {upper}]"
                ));
            }
            Some(fc)
        }
    };

    let unit = vec![Rational::from_integer(1.into()); n];
    let quantum_value = proportional_to_identity(&weighted_projector_sum(&rs, &unit)?);
    if quantum_value.is_none() {
        notes.push("unit-weight projector sum is not proportional to the identity".into());
    }

    let rh_verdict = match &chif {
        Some(fc) if fc.is_exact() => rh_criterion(&fc.value, true),
        _ => RhVerdict::Inconclusive,
    };
    let ineq_verdict = inequality_criterion(&alpha, n);

    let weighted = if k == 4 {
        let w = rs.class_weights(&[rat_int(5), rat_int(3), rat_int(1)]);
        Some(evaluate_weighted_inequality(&rs, &w, budgets.alpha)?)
    } else {
        None
    };

    Ok(SicReport {
        k,
        n,
        alpha,
        alpha_conjecture,
        chif,
        quantum_value,
        rh_verdict,
        ineq_verdict,
        weighted,
        notes,
    })
}

/// One row of the χ_f table (k = 2..5).
#[derive(Clone, Debug)]
pub struct Table1Row {
    pub k: usize,
    pub n: usize,
    pub chif: FractionalColoring,
}

/// One row of the α table (k = 6..12).
#[derive(Clone, Debug)]
pub struct Table2Row {
    pub k: usize,
    pub n: usize,
    pub alpha: IndependenceResult,
    pub n_over_3: Rational,
}

/// Reproduces both tables: χ_f for k = 2..5 and α with n/3 for k = 6..12.
/// By default k = 10..12 report the verified constructive lower bound;
/// `extended` runs the exact solver on those rows as well. Cells whose
/// computation exceeds the budget carry bounds instead of exact values.
pub fn reproduce_tables(budgets: &Budgets, extended: bool) -> Result<(Vec<Table1Row>, Vec<Table2Row>)> {
    let chif_budget = budgets.chif.unwrap_or(Duration::from_secs(300));
    let mut table1 = Vec::new();
    for k in 2..=5usize {
        let rs = generate_set(k)?;
        let g = build_graph(&rs)?;
        let chif = fractional_chromatic(&g, ChifMethod::ColumnGeneration, chif_budget)?;
        table1.push(Table1Row {
            k,
            n: rs.len(),
            chif,
        });
    }
    let mut table2 = Vec::new();
    for k in 6..=12usize {
        let rs = generate_set(k)?;
        let g = build_graph(&rs)?;
        let n = rs.len();
        let alpha = if k <= 9 || extended {
            let mut opts = MisOptions::new(budgets.alpha);
            opts.seed_witness = construct_independent_set_on(&g, k).ok();
            max_independent_set_with(&g, None, &opts)?
        } else {
            let witness = construct_independent_set_on(&g, k)?;
            IndependenceResult {
                value: rat_int(witness.len() as i64),
                witness,
                status: SolveStatus::LowerBound,
                elapsed: Duration::ZERO,
                nodes_explored: 0,
            }
        };
        table2.push(Table2Row {
            k,
            n,
            alpha,
            n_over_3: rat(n as i64, 3),
        });
    }
    Ok((table1, table2))
}

fn independence_json(r: &IndependenceResult) -> Result<Value> {
    Ok(json!({
        "value": rational_value(&r.value)?,
        "witness": r.witness,
        "status": match r.status {
            SolveStatus::Exact => "exact",
            SolveStatus::LowerBound => "lower-bound",
        },
    }))
}

fn chif_json(fc: &FractionalColoring) -> Result<Value> {
    let status = match &fc.status {
        ChifStatus::Exact => json!("exact"),
        ChifStatus::Bounds { lower, upper } => json!({
            "lower": rational_value(lower)?,
            "upper": rational_value(upper)?,
        }),
    };
    Ok(json!({
        "status": status,
        "certificate": certificate_json(fc)?,
    }))
}

fn weighted_json(w: &WeightedInequality) -> Result<Value> {
    let quantum = match &w.quantum {
        QuantumValue::Exact(c) => json!({ "exact": rational_value(c)? }),
        QuantumValue::Numeric(x) => json!({ "numeric": x, "state_dependent": true }),
    };
    Ok(json!({
        "classical_bound": rational_value(&w.classical_bound)?,
        "bound_status": if w.bound_exact { "exact" } else { "lower-bound" },
        "quantum": quantum,
        "violated": w.violated,
        "certified": w.certified,
        "violation_ratio": match &w.violation_ratio {
            Some(r) => rational_value(r)?,
            None => Value::Null,
        },
    }))
}

/// Stable-schema JSON for a report; every rational rendered as [num, den].
pub fn report_json(report: &SicReport) -> Result<Value> {
    Ok(json!({
        "k": report.k,
        "n": report.n,
        "alpha": independence_json(&report.alpha)?,
        "alpha_conjecture": rational_value(&report.alpha_conjecture)?,
        "chif": match &report.chif {
            Some(fc) => chif_json(fc)?,
            None => Value::Null,
        },
        "quantum_value": match &report.quantum_value {
            Some(c) => rational_value(c)?,
            None => Value::Null,
        },
        "rh_verdict": report.rh_verdict.as_str(),
        "ineq_verdict": report.ineq_verdict.as_str(),
        "weighted": match &report.weighted {
            Some(w) => weighted_json(w)?,
            None => Value::Null,
        },
        "notes": report.notes,
    }))
}

/// The class of a canonical-order vertex index, for report rendering.
pub fn vertex_class(k: usize, v: usize) -> RayClass {
    if v < 3 {
        RayClass::I
    } else if v < 3 + 3 * k {
        RayClass::II
    } else {
        RayClass::III
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(v: Rational) -> IndependenceResult {
        IndependenceResult {
            value: v,
            witness: Vec::new(),
            status: SolveStatus::Exact,
            elapsed: Duration::ZERO,
            nodes_explored: 0,
        }
    }

    #[test]
    fn rh_examples() {
        assert_eq!(
            rh_criterion(&rat(67, 21), true),
            RhVerdict::NecessaryConditionPassed
        );
        assert_eq!(rh_criterion(&rat_int(3), true), RhVerdict::NotSic);
        assert_eq!(
            rh_criterion(&rat(35, 11), true),
            RhVerdict::NecessaryConditionPassed
        );
        assert_eq!(rh_criterion(&rat(7, 2), false), RhVerdict::Inconclusive);
    }

    #[test]
    fn inequality_examples() {
        // k=6: α=18, n=57 → SIC
        assert_eq!(inequality_criterion(&exact(rat_int(18)), 57), IneqVerdict::Sic);
        // k=7: α=50, n=73 → inconclusive
        assert_eq!(
            inequality_criterion(&exact(rat_int(50)), 73),
            IneqVerdict::Inconclusive
        );
        // k=9: α=36, n=111 → SIC
        assert_eq!(inequality_criterion(&exact(rat_int(36)), 111), IneqVerdict::Sic);
        // non-exact lower bound below n/3 cannot certify
        let mut lb = exact(rat_int(18));
        lb.status = SolveStatus::LowerBound;
        assert_eq!(inequality_criterion(&lb, 57), IneqVerdict::Inconclusive);
    }

    #[test]
    fn weighted_inequality_k4() {
        let rs = generate_set(4).unwrap();
        let w = rs.class_weights(&[rat_int(5), rat_int(3), rat_int(1)]);
        let r = evaluate_weighted_inequality(&rs, &w, Duration::from_secs(60)).unwrap();
        assert_eq!(r.classical_bound, rat_int(21));
        assert_eq!(r.quantum, QuantumValue::Exact(rat(67, 3)));
        assert!(r.violated && r.certified);
        assert_eq!(r.violation_ratio, Some(rat(67, 63)));
    }

    #[test]
    fn weighted_inequality_unit_weights() {
        // k=6: bound 18, quantum 19, violated
        let rs = generate_set(6).unwrap();
        let unit = vec![rat_int(1); rs.len()];
        let r = evaluate_weighted_inequality(&rs, &unit, Duration::from_secs(60)).unwrap();
        assert_eq!(r.classical_bound, rat_int(18));
        assert_eq!(r.quantum, QuantumValue::Exact(rat_int(19)));
        assert!(r.violated);

        // k=5: bound 26, quantum 43/3, not violated
        let rs = generate_set(5).unwrap();
        let unit = vec![rat_int(1); rs.len()];
        let r = evaluate_weighted_inequality(&rs, &unit, Duration::from_secs(60)).unwrap();
        assert_eq!(r.classical_bound, rat_int(26));
        assert_eq!(r.quantum, QuantumValue::Exact(rat(43, 3)));
        assert!(!r.violated);
    }

    #[test]
    fn weighted_inequality_rejects_bad_weights() {
        let rs = generate_set(3).unwrap();
        assert!(evaluate_weighted_inequality(&rs, &[rat_int(1)], Duration::from_secs(1)).is_err());
        let negative = vec![rat_int(-1); rs.len()];
        assert!(
            evaluate_weighted_inequality(&rs, &negative, Duration::from_secs(1)).is_err()
        );
    }

    #[test]
    fn state_dependent_operator_falls_back_to_numeric() {
        // weight only the first class-I ray: operator = diag(1,0,0)
        let rs = generate_set(3).unwrap();
        let mut w = vec![rat_int(0); rs.len()];
        w[0] = rat_int(1);
        let r = evaluate_weighted_inequality(&rs, &w, Duration::from_secs(60)).unwrap();
        match r.quantum {
            QuantumValue::Numeric(x) => assert!((x - 1.0).abs() < 1e-9),
            QuantumValue::Exact(_) => panic!("diag(1,0,0) is not ∝ identity"),
        }
        assert!(!r.certified);
    }

    #[test]
    fn vanishing_triples_examples() {
        assert_eq!(vanishing_triples(3).unwrap(), vec![(1, 2), (2, 1)]);
        assert_eq!(vanishing_triples(6).unwrap(), vec![(2, 4), (4, 2)]);
        assert!(vanishing_triples(5).unwrap().is_empty());
        for k in 2..=24usize {
            let triples = vanishing_triples(k).unwrap();
            assert_eq!(!triples.is_empty(), k % 3 == 0, "k={k}");
            if k % 3 == 0 {
                let m = k / 3;
                assert_eq!(triples, vec![(m, 2 * m), (2 * m, m)], "k={k}");
            }
        }
        assert!(vanishing_triples(1).is_err());
    }

    #[test]
    fn shift_law_holds_for_multiples_of_three() {
        assert!(orthogonality_shift_law(6).unwrap());
        assert!(orthogonality_shift_law(9).unwrap());
        assert!(matches!(
            orthogonality_shift_law(5),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn analyze_k6_certifies_sic_by_inequality() {
        let budgets = Budgets {
            alpha: Duration::from_secs(60),
            chif: None,
        };
        let report = analyze(6, &budgets).unwrap();
        assert_eq!(report.n, 57);
        assert_eq!(report.alpha.value, rat_int(18));
        assert_eq!(report.quantum_value, Some(rat_int(19)));
        assert_eq!(report.ineq_verdict, IneqVerdict::Sic);
        assert_eq!(report.rh_verdict, RhVerdict::Inconclusive);
        assert!(report.chif.is_none());
    }

    #[test]
    fn analyze_k3_notes_formula_mismatch() {
        let budgets = Budgets {
            alpha: Duration::from_secs(60),
            chif: Some(Duration::from_secs(120)),
        };
        let report = analyze(3, &budgets).unwrap();
        assert_eq!(report.alpha.value, rat_int(9));
        assert_eq!(report.alpha_conjecture, rat_int(6));
        assert!(report
            .notes
            .iter()
            .any(|n| n.contains("disagrees with the closed-form")));
        // χ_f = 10/3 > 3: necessary condition passed
        assert_eq!(report.rh_verdict, RhVerdict::NecessaryConditionPassed);
        // α = 9 > n/3 = 7: the unit-weight inequality cannot certify k=3
        assert_eq!(report.ineq_verdict, IneqVerdict::Inconclusive);
    }

    #[test]
    fn inequality_verdict_sweep_matches_divisibility() {
        // with exact α, the unit-weight inequality certifies SIC exactly
        // for k ∈ {6, 9, 12} in this range (computed, not assumed)
        let budgets = Budgets {
            alpha: Duration::from_secs(60),
            chif: None,
        };
        for k in 2..=12usize {
            let report = analyze(k, &budgets).unwrap();
            assert_eq!(report.alpha.status, SolveStatus::Exact, "k={k}");
            let expected = if k % 3 == 0 && k >= 6 {
                IneqVerdict::Sic
            } else {
                IneqVerdict::Inconclusive
            };
            assert_eq!(report.ineq_verdict, expected, "k={k}");
            // unit-weight violation ⇔ SIC verdict (internal consistency)
            let rs = generate_set(k).unwrap();
            let unit = vec![rat_int(1); rs.len()];
            let w = evaluate_weighted_inequality(&rs, &unit, Duration::from_secs(60)).unwrap();
            assert_eq!(w.violated, report.ineq_verdict == IneqVerdict::Sic, "k={k}");
            assert_eq!(w.quantum, QuantumValue::Exact(rat(report.n as i64, 3)), "k={k}");
        }
    }

    #[test]
    fn tables_have_expected_rows() {
        let budgets = Budgets {
            alpha: Duration::from_secs(60),
            chif: Some(Duration::from_secs(300)),
        };
        let (table1, table2) = reproduce_tables(&budgets, false).unwrap();
        let t1: Vec<(usize, usize, Rational)> = table1
            .iter()
            .map(|r| (r.k, r.n, r.chif.value.clone()))
            .collect();
        assert_eq!(
            t1,
            vec![
                (2, 13, rat(35, 11)),
                (3, 21, rat(10, 3)),
                (4, 31, rat(67, 21)),
                (5, 43, rat_int(3)),
            ]
        );
        assert!(table1.iter().all(|r| r.chif.is_exact()));

        let t2: Vec<(usize, usize, Rational, Rational)> = table2
            .iter()
            .map(|r| (r.k, r.n, r.alpha.value.clone(), r.n_over_3.clone()))
            .collect();
        assert_eq!(
            t2,
            vec![
                (6, 57, rat_int(18), rat_int(19)),
                (7, 73, rat_int(50), rat(73, 3)),
                (8, 91, rat_int(65), rat(91, 3)),
                (9, 111, rat_int(36), rat_int(37)),
                (10, 133, rat_int(101), rat(133, 3)),
                (11, 157, rat_int(122), rat(157, 3)),
                (12, 183, rat_int(60), rat_int(61)),
            ]
        );
        // default budgets: exact through k=9, verified lower bounds beyond
        for row in &table2 {
            let expected = if row.k <= 9 {
                SolveStatus::Exact
            } else {
                SolveStatus::LowerBound
            };
            assert_eq!(row.alpha.status, expected, "k={}", row.k);
        }
    }

    #[test]
    fn report_json_schema_is_stable() {
        let budgets = Budgets {
            alpha: Duration::from_secs(30),
            chif: Some(Duration::from_secs(60)),
        };
        let report = analyze(2, &budgets).unwrap();
        let v = report_json(&report).unwrap();
        assert_eq!(v["k"], 2);
        assert_eq!(v["n"], 13);
        assert_eq!(v["alpha"]["status"], "exact");
        assert_eq!(v["alpha_conjecture"], json!([5, 1]));
        assert_eq!(v["chif"]["status"], "exact");
        assert_eq!(v["chif"]["certificate"]["value"], json!([35, 11]));
        assert_eq!(v["quantum_value"], json!([13, 3]));
        assert_eq!(v["rh_verdict"], "necessary-condition-passed");
        assert_eq!(v["ineq_verdict"], "inconclusive");
        assert!(v["weighted"].is_null());
    }

    #[test]
    fn vertex_class_boundaries() {
        assert_eq!(vertex_class(4, 0), RayClass::I);
        assert_eq!(vertex_class(4, 3), RayClass::II);
        assert_eq!(vertex_class(4, 14), RayClass::II);
        assert_eq!(vertex_class(4, 15), RayClass::III);
    }
}
