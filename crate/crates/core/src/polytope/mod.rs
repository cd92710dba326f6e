//! Exact-rational linear-inequality engine.
//!
//! Systems are conjunctions of rows `a . x >= b` or `a . x = b` over named
//! variables. Everything is certified: an optimum carries a witness that
//! re-verifies by substitution, an infeasibility carries Farkas multipliers
//! that re-verify by exact arithmetic, and an implication carries the affine
//! combination of rows that produces it. A brute-force vertex enumerator
//! ([`vertex::vertex_optimum`]) serves as an independent oracle next to the
//! simplex, and Fourier-Motzkin elimination ([`eliminate`]) as a third route
//! for projections.

mod simplex;
pub mod vertex;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{dot, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Ge,
    Eq,
}

/// One row `coeffs . x REL rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub relation: Relation,
    pub rhs: Rat,
}

impl Constraint {
    pub fn ge(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        Constraint {
            coeffs,
            relation: Relation::Ge,
            rhs,
        }
    }

    pub fn eq(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        Constraint {
            coeffs,
            relation: Relation::Eq,
            rhs,
        }
    }

    pub fn holds_at(&self, x: &[Rat]) -> bool {
        let lhs = dot(&self.coeffs, x);
        match self.relation {
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinIneqSystem {
    pub variables: Vec<String>,
    pub constraints: Vec<Constraint>,
}

impl LinIneqSystem {
    pub fn new<S: Into<String>>(variables: Vec<S>) -> Self {
        LinIneqSystem {
            variables: variables.into_iter().map(Into::into).collect(),
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn push_ge(&mut self, coeffs: Vec<Rat>, rhs: Rat) {
        self.constraints.push(Constraint::ge(coeffs, rhs));
    }

    pub fn push_eq(&mut self, coeffs: Vec<Rat>, rhs: Rat) {
        self.constraints.push(Constraint::eq(coeffs, rhs));
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.variables
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Unit objective vector for a named variable.
    pub fn unit_objective(&self, name: &str) -> Result<Vec<Rat>> {
        let idx = self.var_index(name)?;
        let mut obj = vec![Rat::zero(); self.num_vars()];
        obj[idx] = Rat::one();
        Ok(obj)
    }

    pub fn check_wellformed(&self) -> Result<()> {
        for (i, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != self.num_vars() {
                return Err(Error::MalformedSystem(format!(
                    "constraint {i} has {} coefficients, system has {} variables",
                    c.coeffs.len(),
                    self.num_vars()
                )));
            }
        }
        Ok(())
    }

    pub fn satisfied_by(&self, x: &[Rat]) -> bool {
        x.len() == self.num_vars() && self.constraints.iter().all(|c| c.holds_at(x))
    }
}

/// Non-negative multipliers (signed on equality rows) whose weighted row sum
/// proves either infeasibility or an implied inequality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FarkasCertificate {
    pub multipliers: Vec<Rat>,
}

impl FarkasCertificate {
    fn combination(&self, sys: &LinIneqSystem) -> Option<(Vec<Rat>, Rat)> {
        if self.multipliers.len() != sys.constraints.len() {
            return None;
        }
        for (mu, c) in self.multipliers.iter().zip(&sys.constraints) {
            if c.relation == Relation::Ge && mu.is_negative() {
                return None;
            }
        }
        let n = sys.num_vars();
        let mut combo = vec![Rat::zero(); n];
        let mut rhs = Rat::zero();
        for (mu, c) in self.multipliers.iter().zip(&sys.constraints) {
            for (acc, a) in combo.iter_mut().zip(&c.coeffs) {
                *acc += &(mu * a);
            }
            rhs += &(mu * &c.rhs);
        }
        Some((combo, rhs))
    }

    /// The multiplier-weighted sum of rows yields `0 . x >= c` with `c > 0`.
    pub fn verifies_infeasibility(&self, sys: &LinIneqSystem) -> bool {
        match self.combination(sys) {
            Some((combo, rhs)) => combo.iter().all(Rat::is_zero) && rhs.is_positive(),
            None => false,
        }
    }

    /// The multiplier-weighted sum of rows yields `g . x >= c` with `c >= h`,
    /// proving the inequality `g . x >= h`.
    pub fn verifies_implication(&self, sys: &LinIneqSystem, ineq: &Constraint) -> bool {
        match self.combination(sys) {
            Some((combo, rhs)) => combo == ineq.coeffs && rhs >= ineq.rhs,
            None => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum LpResult {
    Optimal {
        value: Rat,
        witness: Vec<Rat>,
    },
    Unbounded,
    Infeasible {
        certificate: FarkasCertificate,
    },
}

/// Maximize `objective . x` over the system.
///
/// Deterministic: the simplex uses Bland's rule and the reported witness is
/// the lexicographically smallest optimal point (when the optimal face has
/// lexicographic minima; coordinates on which the face is unbounded keep the
/// solver's basic value). Over an empty constraint set a nonzero objective is
/// unbounded and a zero objective yields `Optimal(0)` at the origin.
pub fn maximize(sys: &LinIneqSystem, objective: &[Rat]) -> Result<LpResult> {
    sys.check_wellformed()?;
    let n = sys.num_vars();
    if objective.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "objective has {} entries, system has {n} variables",
            objective.len()
        )));
    }
    if sys.constraints.is_empty() {
        if objective.iter().all(Rat::is_zero) {
            return Ok(LpResult::Optimal {
                value: Rat::zero(),
                witness: vec![Rat::zero(); n],
            });
        }
        return Ok(LpResult::Unbounded);
    }

    let neg_obj: Vec<Rat> = objective.iter().map(|c| -c).collect();
    match simplex::solve_min(sys, &neg_obj)? {
        simplex::RawOutcome::Infeasible { multipliers } => {
            let certificate = FarkasCertificate { multipliers };
            if !certificate.verifies_infeasibility(sys) {
                return Err(Error::Internal(
                    "simplex produced a non-verifying Farkas certificate".into(),
                ));
            }
            Ok(LpResult::Infeasible { certificate })
        }
        simplex::RawOutcome::Unbounded { .. } => Ok(LpResult::Unbounded),
        simplex::RawOutcome::Optimal { value, witness, .. } => {
            let value = -value;
            let witness = lexicographic_witness(sys, objective, &value, witness)?;
            if !sys.satisfied_by(&witness) || dot(objective, &witness) != value {
                return Err(Error::Internal("optimal witness failed verification".into()));
            }
            Ok(LpResult::Optimal { value, witness })
        }
    }
}

/// Minimize `objective . x`; same contracts as [`maximize`].
pub fn minimize(sys: &LinIneqSystem, objective: &[Rat]) -> Result<LpResult> {
    let neg: Vec<Rat> = objective.iter().map(|c| -c).collect();
    Ok(match maximize(sys, &neg)? {
        LpResult::Optimal { value, witness } => LpResult::Optimal {
            value: -value,
            witness,
        },
        other => other,
    })
}

fn lexicographic_witness(
    sys: &LinIneqSystem,
    objective: &[Rat],
    value: &Rat,
    mut current: Vec<Rat>,
) -> Result<Vec<Rat>> {
    let n = sys.num_vars();
    let mut face = sys.clone();
    face.push_eq(objective.to_vec(), value.clone());
    for j in 0..n {
        let mut cost = vec![Rat::zero(); n];
        cost[j] = Rat::one();
        match simplex::solve_min(&face, &cost)? {
            simplex::RawOutcome::Optimal { value: vj, witness, .. } => {
                current = witness;
                let mut fix = vec![Rat::zero(); n];
                fix[j] = Rat::one();
                face.push_eq(fix, vj);
            }
            simplex::RawOutcome::Unbounded { .. } => {
                // face unbounded below in x_j: pin the solver's basic value
                let mut fix = vec![Rat::zero(); n];
                fix[j] = Rat::one();
                face.push_eq(fix, current[j].clone());
            }
            simplex::RawOutcome::Infeasible { .. } => {
                return Err(Error::Internal("optimal face became infeasible".into()));
            }
        }
    }
    Ok(current)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Implication {
    /// The inequality holds on the feasible set; the certificate combines
    /// rows into `g . x >= c` with `c >= h`.
    Holds { certificate: FarkasCertificate },
    /// The system itself is infeasible, so the inequality holds vacuously;
    /// the certificate proves the infeasibility.
    HoldsVacuously { certificate: FarkasCertificate },
    /// A feasible point violating the inequality.
    Fails { counterexample: Vec<Rat> },
}

impl Implication {
    pub fn holds(&self) -> bool {
        !matches!(self, Implication::Fails { .. })
    }
}

/// Does every feasible point satisfy `ineq`? Only `>=` inequalities can be
/// queried. Equivalent to `min g.x >= h` over the system; the negation is
/// taken as the closed complement, so an inequality that is tight on the
/// feasible set still counts as implied.
pub fn is_implied(sys: &LinIneqSystem, ineq: &Constraint) -> Result<Implication> {
    sys.check_wellformed()?;
    if ineq.coeffs.len() != sys.num_vars() {
        return Err(Error::DimensionMismatch(
            "inequality is over a different variable count".into(),
        ));
    }
    if ineq.relation != Relation::Ge {
        return Err(Error::InvalidInput(
            "is_implied queries a >= inequality".into(),
        ));
    }
    match simplex::solve_min(sys, &ineq.coeffs)? {
        simplex::RawOutcome::Infeasible { multipliers } => {
            let certificate = FarkasCertificate { multipliers };
            if !certificate.verifies_infeasibility(sys) {
                return Err(Error::Internal(
                    "simplex produced a non-verifying Farkas certificate".into(),
                ));
            }
            Ok(Implication::HoldsVacuously { certificate })
        }
        simplex::RawOutcome::Unbounded { point, ray } => {
            // g . ray < 0: march the ray until the inequality is violated.
            let g_point = dot(&ineq.coeffs, &point);
            let g_ray = dot(&ineq.coeffs, &ray);
            if !g_ray.is_negative() {
                return Err(Error::Internal("unbounded ray fails to descend".into()));
            }
            let deficit = &ineq.rhs - &g_point; // want g.x < h  i.e.  t*g_ray < deficit
            let mut t = if deficit.is_positive() {
                Rat::zero()
            } else {
                (&deficit / &g_ray) + Rat::one()
            };
            if t.is_negative() {
                t = Rat::zero();
            }
            let counterexample: Vec<Rat> = point
                .iter()
                .zip(&ray)
                .map(|(p, r)| p + &(&t * r))
                .collect();
            if !sys.satisfied_by(&counterexample) || ineq.holds_at(&counterexample) {
                return Err(Error::Internal("ray counterexample failed verification".into()));
            }
            Ok(Implication::Fails { counterexample })
        }
        simplex::RawOutcome::Optimal {
            value,
            witness,
            dual,
        } => {
            if value >= ineq.rhs {
                let certificate = FarkasCertificate { multipliers: dual };
                if !certificate.verifies_implication(sys, ineq) {
                    return Err(Error::Internal(
                        "simplex produced a non-verifying implication certificate".into(),
                    ));
                }
                Ok(Implication::Holds { certificate })
            } else {
                if !sys.satisfied_by(&witness) {
                    return Err(Error::Internal("counterexample failed verification".into()));
                }
                Ok(Implication::Fails {
                    counterexample: witness,
                })
            }
        }
    }
}

/// Fourier-Motzkin elimination of one variable: the projection of the
/// feasible set onto the remaining variables, exactly.
pub fn eliminate(sys: &LinIneqSystem, var: &str) -> Result<LinIneqSystem> {
    sys.check_wellformed()?;
    let v = sys.var_index(var)?;
    let drop_col = |coeffs: &[Rat]| -> Vec<Rat> {
        coeffs
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != v)
            .map(|(_, c)| c.clone())
            .collect()
    };
    let mut variables = sys.variables.clone();
    variables.remove(v);
    let mut out = LinIneqSystem {
        variables,
        constraints: Vec::new(),
    };

    // An equality row with a nonzero pivot substitutes the variable away.
    if let Some(pivot_idx) = sys
        .constraints
        .iter()
        .position(|c| c.relation == Relation::Eq && !c.coeffs[v].is_zero())
    {
        let pivot = &sys.constraints[pivot_idx];
        let pv = pivot.coeffs[v].clone();
        for (i, c) in sys.constraints.iter().enumerate() {
            if i == pivot_idx {
                continue;
            }
            if c.coeffs[v].is_zero() {
                out.constraints.push(Constraint {
                    coeffs: drop_col(&c.coeffs),
                    relation: c.relation,
                    rhs: c.rhs.clone(),
                });
                continue;
            }
            let f = &c.coeffs[v] / &pv;
            let coeffs: Vec<Rat> = c
                .coeffs
                .iter()
                .zip(&pivot.coeffs)
                .map(|(a, p)| a - &(&f * p))
                .collect();
            let rhs = &c.rhs - &(&f * &pivot.rhs);
            out.constraints.push(Constraint {
                coeffs: drop_col(&coeffs),
                relation: c.relation,
                rhs,
            });
        }
        out.constraints = dedupe(out.constraints);
        return Ok(out);
    }

    let mut lowers = Vec::new(); // coeff on v > 0: v >= (...)
    let mut uppers = Vec::new(); // coeff on v < 0: v <= (...)
    for c in &sys.constraints {
        debug_assert!(c.relation == Relation::Ge || c.coeffs[v].is_zero());
        if c.coeffs[v].is_positive() {
            lowers.push(c);
        } else if c.coeffs[v].is_negative() {
            uppers.push(c);
        } else {
            out.constraints.push(Constraint {
                coeffs: drop_col(&c.coeffs),
                relation: c.relation,
                rhs: c.rhs.clone(),
            });
        }
    }
    for lo in &lowers {
        for up in &uppers {
            // scale so the v-coefficients cancel: (-up_v) * lo + lo_v * up
            let f_lo = -&up.coeffs[v];
            let f_up = lo.coeffs[v].clone();
            let coeffs: Vec<Rat> = lo
                .coeffs
                .iter()
                .zip(&up.coeffs)
                .map(|(a, b)| &(&f_lo * a) + &(&f_up * b))
                .collect();
            let rhs = &(&f_lo * &lo.rhs) + &(&f_up * &up.rhs);
            debug_assert!(coeffs[v].is_zero());
            out.constraints.push(Constraint {
                coeffs: drop_col(&coeffs),
                relation: Relation::Ge,
                rhs,
            });
        }
    }
    out.constraints = dedupe(out.constraints);
    Ok(out)
}

/// Eliminate every variable and decide feasibility from the residual
/// constant rows. Independent of the simplex path.
pub fn fm_feasible(sys: &LinIneqSystem) -> Result<bool> {
    let mut cur = sys.clone();
    while let Some(var) = cur.variables.first().cloned() {
        cur = eliminate(&cur, &var)?;
    }
    Ok(cur.constraints.iter().all(|c| match c.relation {
        Relation::Ge => !c.rhs.is_positive(),
        Relation::Eq => c.rhs.is_zero(),
    }))
}

fn dedupe(constraints: Vec<Constraint>) -> Vec<Constraint> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for c in constraints {
        // drop trivially true rows, keep everything else once (scale-normalized key)
        let trivial = c.coeffs.iter().all(Rat::is_zero)
            && match c.relation {
                Relation::Ge => !c.rhs.is_positive(),
                Relation::Eq => c.rhs.is_zero(),
            };
        if trivial {
            continue;
        }
        let scale = c
            .coeffs
            .iter()
            .find(|x| !x.is_zero())
            .cloned()
            .map(|x| x.abs())
            .unwrap_or_else(Rat::one);
        let key = format!(
            "{:?}|{:?}|{:?}",
            c.coeffs.iter().map(|x| x / &scale).collect::<Vec<_>>(),
            c.relation,
            &c.rhs / &scale
        );
        if seen.insert(key) {
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ri};

    fn sys3() -> LinIneqSystem {
        // the chain system for rank 3 with the boundary row
        let mut s = LinIneqSystem::new(vec!["a1", "a2", "a3"]);
        s.push_ge(vec![ri(2), ri(-1), ri(0)], ri(0));
        s.push_ge(vec![ri(-1), ri(2), ri(-1)], ri(0));
        s.push_ge(vec![ri(0), ri(-1), ri(2)], ri(0));
        s.push_ge(vec![ri(-1), ri(0), ri(-1)], ri(-1));
        s
    }

    #[test]
    fn maximize_chain_rank3() {
        let s = sys3();
        for (var, expect) in [("a1", rat(3, 4)), ("a2", ri(1)), ("a3", rat(3, 4))] {
            let obj = s.unit_objective(var).unwrap();
            match maximize(&s, &obj).unwrap() {
                LpResult::Optimal { value, witness } => {
                    assert_eq!(value, expect, "max {var}");
                    assert!(s.satisfied_by(&witness));
                }
                other => panic!("expected optimal, got {other:?}"),
            }
        }
    }

    #[test]
    fn deterministic_output() {
        let s = sys3();
        let obj = s.unit_objective("a2").unwrap();
        let r1 = maximize(&s, &obj).unwrap();
        let r2 = maximize(&s, &obj).unwrap();
        assert_eq!(r1, r2);
    }

    #[test]
    fn contradictory_pair_certificate() {
        let mut s = LinIneqSystem::new(vec!["x"]);
        s.push_ge(vec![ri(1)], ri(1)); // x >= 1
        s.push_ge(vec![ri(-1)], ri(0)); // -x >= 0
        match maximize(&s, &[ri(1)]).unwrap() {
            LpResult::Infeasible { certificate } => {
                assert!(certificate.verifies_infeasibility(&s));
                // the canonical multipliers here are (1, 1) up to scale
                let m = &certificate.multipliers;
                assert_eq!(&m[0] * &ri(1), m[1].clone());
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn unbounded_and_degenerate() {
        let empty = LinIneqSystem::new(vec!["x", "y"]);
        assert_eq!(
            maximize(&empty, &[ri(1), ri(0)]).unwrap(),
            LpResult::Unbounded
        );
        assert_eq!(
            maximize(&empty, &[ri(0), ri(0)]).unwrap(),
            LpResult::Optimal {
                value: ri(0),
                witness: vec![ri(0), ri(0)]
            }
        );

        let mut s = LinIneqSystem::new(vec!["x"]);
        s.push_ge(vec![ri(1)], ri(0));
        assert_eq!(maximize(&s, &[ri(1)]).unwrap(), LpResult::Unbounded);
    }

    #[test]
    fn implication_with_certificate() {
        let s = sys3();
        // a2 >= (2/3) a3 over the rank-3 system
        let ineq = Constraint::ge(vec![ri(0), ri(1), rat(-2, 3)], ri(0));
        match is_implied(&s, &ineq).unwrap() {
            Implication::Holds { certificate } => {
                assert!(certificate.verifies_implication(&s, &ineq));
            }
            other => panic!("expected holds, got {other:?}"),
        }
        // a1 >= a2 fails; the counterexample must satisfy the system
        let bad = Constraint::ge(vec![ri(1), ri(-1), ri(0)], ri(0));
        match is_implied(&s, &bad).unwrap() {
            Implication::Fails { counterexample } => {
                assert!(s.satisfied_by(&counterexample));
                assert!(counterexample[0] < counterexample[1]);
            }
            other => panic!("expected fails, got {other:?}"),
        }
    }

    #[test]
    fn implication_unbounded_counterexample() {
        let mut s = LinIneqSystem::new(vec!["x", "y"]);
        s.push_ge(vec![ri(1), ri(0)], ri(0)); // x >= 0
        let ineq = Constraint::ge(vec![ri(0), ri(1)], ri(5)); // y >= 5?
        match is_implied(&s, &ineq).unwrap() {
            Implication::Fails { counterexample } => {
                assert!(s.satisfied_by(&counterexample));
                assert!(counterexample[1] < ri(5));
            }
            other => panic!("expected fails, got {other:?}"),
        }
    }

    #[test]
    fn implication_vacuous() {
        let mut s = LinIneqSystem::new(vec!["x"]);
        s.push_ge(vec![ri(1)], ri(1));
        s.push_ge(vec![ri(-1)], ri(0));
        let ineq = Constraint::ge(vec![ri(1)], ri(100));
        match is_implied(&s, &ineq).unwrap() {
            Implication::HoldsVacuously { certificate } => {
                assert!(certificate.verifies_infeasibility(&s));
            }
            other => panic!("expected vacuous, got {other:?}"),
        }
    }

    #[test]
    fn eliminate_triangle() {
        let mut s = LinIneqSystem::new(vec!["x", "y"]);
        s.push_ge(vec![ri(1), ri(0)], ri(0)); // x >= 0
        s.push_ge(vec![ri(-1), ri(1)], ri(0)); // y - x >= 0
        s.push_ge(vec![ri(0), ri(-1)], ri(-1)); // 1 - y >= 0
        let p = eliminate(&s, "x").unwrap();
        assert_eq!(p.variables, vec!["y".to_string()]);
        // projection is { y >= 0, 1 - y >= 0 }
        assert!(p.satisfied_by(&[rat(1, 2)]));
        assert!(!p.satisfied_by(&[ri(-1)]) && !p.satisfied_by(&[ri(2)]));
        match maximize(&p, &[ri(1)]).unwrap() {
            LpResult::Optimal { value, .. } => assert_eq!(value, ri(1)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn eliminate_preserves_optimum() {
        let s = sys3();
        let p = eliminate(&s, "a2").unwrap();
        let obj = p.unit_objective("a1").unwrap();
        match maximize(&p, &obj).unwrap() {
            LpResult::Optimal { value, .. } => assert_eq!(value, rat(3, 4)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn eliminate_missing_var_errors() {
        let s = LinIneqSystem::new(Vec::<String>::new());
        assert!(eliminate(&s, "x").is_err());
    }

    #[test]
    fn eliminate_via_equality_pivot() {
        let mut s = LinIneqSystem::new(vec!["x", "y"]);
        s.push_eq(vec![ri(1), ri(-1)], ri(2)); // x = y + 2
        s.push_ge(vec![ri(1), ri(0)], ri(0)); // x >= 0
        s.push_ge(vec![ri(0), ri(-1)], ri(-3)); // y <= 3
        let p = eliminate(&s, "x").unwrap();
        // projection: y >= -2, y <= 3
        assert!(p.satisfied_by(&[ri(-2)]) && p.satisfied_by(&[ri(3)]));
        assert!(!p.satisfied_by(&[ri(-3)]));
    }

    #[test]
    fn fm_feasibility_matches_simplex() {
        let mut s = sys3();
        assert!(fm_feasible(&s).unwrap());
        s.push_ge(vec![ri(1), ri(0), ri(0)], ri(2)); // a1 >= 2 contradicts a1 <= 3/4
        assert!(!fm_feasible(&s).unwrap());
        assert!(matches!(
            maximize(&s, &[ri(1), ri(0), ri(0)]).unwrap(),
            LpResult::Infeasible { .. }
        ));
    }
}
