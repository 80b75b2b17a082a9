//! Two-phase revised simplex, exact rational arithmetic throughout, for the
//! set-cover formulation of fractional coloring: minimize Σ_S x_S subject
//! to Σ_{S∋v} x_S ≥ 1 for every vertex v and x ≥ 0.
//!
//! Bland's rule (least-index entering and leaving variable) prevents
//! cycling, so every solve terminates. Columns may be appended between
//! solves; the basis stays feasible, which is what column generation
//! warm-starts on.

use std::time::Instant;

use num_traits::{One, Zero};

use crate::cyclo::Rational;
use crate::{Error, Result};

/// Variable identity. The derived order (pool < surplus < artificial,
/// then by index) is the Bland order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Var {
    Pool(usize),
    Surplus(usize),
    Artificial(usize),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Phase {
    One,
    Two,
}

pub(super) struct LpSolution {
    pub value: Rational,
    /// (pool column index, positive basic value)
    pub primal: Vec<(usize, Rational)>,
    /// one dual multiplier per vertex/row
    pub duals: Vec<Rational>,
}

pub(super) struct CoveringLp {
    m: usize,
    pool: Vec<Vec<usize>>,
    basis: Vec<Var>,
    binv: Vec<Vec<Rational>>,
    xb: Vec<Rational>,
    phase_one_done: bool,
}

impl CoveringLp {
    pub fn new(m: usize) -> Self {
        CoveringLp {
            m,
            pool: Vec::new(),
            basis: (0..m).map(Var::Artificial).collect(),
            binv: identity(m),
            xb: vec![Rational::one(); m],
            phase_one_done: false,
        }
    }

    pub fn add_column(&mut self, set: Vec<usize>) {
        debug_assert!(set.iter().all(|&v| v < self.m));
        self.pool.push(set);
    }

    pub fn pool_set(&self, idx: usize) -> &[usize] {
        &self.pool[idx]
    }

    fn cost(&self, var: Var, phase: Phase) -> Rational {
        match (phase, var) {
            (Phase::One, Var::Artificial(_)) => Rational::one(),
            (Phase::One, _) => Rational::zero(),
            (Phase::Two, Var::Pool(_)) => Rational::one(),
            (Phase::Two, _) => Rational::zero(),
        }
    }

    fn column(&self, var: Var) -> Vec<(usize, Rational)> {
        match var {
            Var::Pool(j) => self.pool[j]
                .iter()
                .map(|&v| (v, Rational::one()))
                .collect(),
            Var::Surplus(v) => vec![(v, -Rational::one())],
            Var::Artificial(r) => vec![(r, Rational::one())],
        }
    }

    fn duals_for(&self, phase: Phase) -> Vec<Rational> {
        let mut y = vec![Rational::zero(); self.m];
        for (i, var) in self.basis.iter().enumerate() {
            let c = self.cost(*var, phase);
            if c.is_zero() {
                continue;
            }
            for (r, yr) in y.iter_mut().enumerate() {
                *yr += &c * &self.binv[i][r];
            }
        }
        y
    }

    fn reduced_cost(&self, var: Var, y: &[Rational], phase: Phase) -> Rational {
        let mut rc = self.cost(var, phase);
        for (r, a) in self.column(var) {
            rc -= &y[r] * &a;
        }
        rc
    }

    /// B⁻¹ · A_var
    fn direction(&self, var: Var) -> Vec<Rational> {
        let mut d = vec![Rational::zero(); self.m];
        for (r, a) in self.column(var) {
            for (di, row) in d.iter_mut().zip(&self.binv) {
                *di += &row[r] * &a;
            }
        }
        d
    }

    fn pivot(&mut self, row: usize, var: Var, d: &[Rational]) {
        let piv = d[row].clone();
        for c in 0..self.m {
            self.binv[row][c] /= &piv;
        }
        self.xb[row] /= &piv;
        for (i, di) in d.iter().enumerate() {
            if i == row || di.is_zero() {
                continue;
            }
            let f = di.clone();
            for c in 0..self.m {
                let delta = &f * &self.binv[row][c];
                self.binv[i][c] -= delta;
            }
            let delta = &f * &self.xb[row];
            self.xb[i] -= delta;
        }
        self.basis[row] = var;
    }

    /// Runs primal simplex for one phase. Returns false if the deadline was
    /// reached before optimality.
    fn optimize(&mut self, phase: Phase, deadline: Instant) -> Result<bool> {
        loop {
            if Instant::now() >= deadline {
                return Ok(false);
            }
            let y = self.duals_for(phase);
            // Bland: least-index improving variable enters
            let mut entering = None;
            for j in 0..self.pool.len() {
                if self.reduced_cost(Var::Pool(j), &y, phase) < Rational::zero() {
                    entering = Some(Var::Pool(j));
                    break;
                }
            }
            if entering.is_none() {
                for v in 0..self.m {
                    if self.reduced_cost(Var::Surplus(v), &y, phase) < Rational::zero() {
                        entering = Some(Var::Surplus(v));
                        break;
                    }
                }
            }
            let Some(var) = entering else {
                return Ok(true);
            };
            let d = self.direction(var);
            // ratio test; ties leave the least basis variable (Bland)
            let mut leave: Option<(usize, Rational)> = None;
            for (i, di) in d.iter().enumerate() {
                if *di <= Rational::zero() {
                    continue;
                }
                let ratio = &self.xb[i] / di;
                match &leave {
                    None => leave = Some((i, ratio)),
                    Some((li, lr)) => {
                        if ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]) {
                            leave = Some((i, ratio));
                        }
                    }
                }
            }
            let Some((row, _)) = leave else {
                return Err(Error::Internal(
                    "covering LP is unbounded, which cannot happen".into(),
                ));
            };
            self.pivot(row, var, &d);
        }
    }

    /// Replaces every basic artificial (necessarily at value zero once
    /// phase 1 succeeded) by a degenerate pivot, so phase-2 iterations can
    /// never push an artificial positive again. The surplus block has full
    /// row rank, so a pivot column always exists.
    fn drive_out_artificials(&mut self) -> Result<()> {
        for row in 0..self.m {
            if !matches!(self.basis[row], Var::Artificial(_)) {
                continue;
            }
            let mut done = false;
            let candidates = (0..self.pool.len())
                .map(Var::Pool)
                .chain((0..self.m).map(Var::Surplus));
            for var in candidates {
                let d = self.direction(var);
                if !d[row].is_zero() {
                    self.pivot(row, var, &d);
                    done = true;
                    break;
                }
            }
            if !done {
                return Err(Error::Internal(
                    "could not pivot artificial variable out of the basis".into(),
                ));
            }
        }
        Ok(())
    }

    /// Solves to optimality (both phases as needed). `Ok(None)` means the
    /// deadline expired first.
    pub fn solve(&mut self, deadline: Instant) -> Result<Option<LpSolution>> {
        if !self.phase_one_done {
            if !self.optimize(Phase::One, deadline)? {
                return Ok(None);
            }
            let infeasibility: Rational = self
                .basis
                .iter()
                .zip(&self.xb)
                .filter(|(v, _)| matches!(v, Var::Artificial(_)))
                .map(|(_, x)| x.clone())
                .sum();
            if !infeasibility.is_zero() {
                return Err(Error::Internal(
                    "covering LP infeasible: the column pool does not cover every vertex".into(),
                ));
            }
            self.drive_out_artificials()?;
            self.phase_one_done = true;
        }
        if !self.optimize(Phase::Two, deadline)? {
            return Ok(None);
        }
        let mut value = Rational::zero();
        let mut primal = Vec::new();
        for (i, var) in self.basis.iter().enumerate() {
            if let Var::Pool(j) = var {
                if self.xb[i] > Rational::zero() {
                    value += &self.xb[i];
                    primal.push((*j, self.xb[i].clone()));
                }
            }
        }
        primal.sort_by_key(|(j, _)| *j);
        Ok(Some(LpSolution {
            value,
            primal,
            duals: self.duals_for(Phase::Two),
        }))
    }
}

fn identity(m: usize) -> Vec<Vec<Rational>> {
    let mut out = vec![vec![Rational::zero(); m]; m];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = Rational::one();
    }
    out
}
