//! Scenario systems and lower-bound certification.
//!
//! For each singular point whose table value sits below the first threshold,
//! the hypothetical non-klt configuration is encoded as an exact linear
//! system over the resolution coefficients `a1..am`, an auxiliary reciprocal
//! threshold variable `u`, and (for the rank-4 chain) the multiplicity
//! `delta` of the second-level blow-up:
//!
//! * the base rows of the resolution system;
//! * non-containment bounds `a_i <= 1` from the excluded witness components;
//! * the adjunction rows at the candidate crossing `Q = E_k cap E_{k+1}`,
//!   with `u` standing for the reciprocal threshold;
//! * the closure `u >= 1/target` of "the threshold is at most the target".
//!
//! Minimizing and maximizing `u` then certifies the table row: the system is
//! either infeasible (with a Farkas certificate re-verified by exact
//! arithmetic) or pinned at `u = 1/target` exactly, so no configuration is
//! consistent with a threshold strictly below the target. Fork and branched
//! types instead pin the central coefficient (`mu a3 = 1` forces
//! `a3 = 1/mu`), and short chains close by bounding each variable by 1.

use serde::{Deserialize, Serialize};

use crate::catalog::{
    admissible, base_system, SingularityConfiguration, SurfaceFlags, SystemVariant,
};
use crate::error::{Error, Result};
use crate::polytope::{maximize, minimize, LinIneqSystem, LpResult};
use crate::rational::{rat, ri, Rat};
use crate::resolution::{DynkinKind, DynkinType};

/// How a scenario closes its case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ScenarioKind {
    /// Adjunction at a crossing of consecutive exceptional curves, with
    /// witness-exclusion bounds; `u` is a dedicated variable.
    CornerAdjunction {
        /// `Q = E_k cap E_{k+1}` (1-based `k`).
        q_index: usize,
        /// Pairs `(variable index, upper bound)` excluded-witness rows.
        bounds: Vec<(usize, Rat)>,
        /// Second-level blow-up data present (rank-4 chain).
        aux_blowup: bool,
    },
    /// The central coefficient is pinned by `mu a3 = 1`; `u` is `a3` itself.
    CentralPin,
    /// Per-variable klt bound for chains resolved at the first threshold.
    VariableBound { variable: usize, bound: Rat },
}

/// One case of the non-klt analysis, as an exact linear system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioSystem {
    pub id: String,
    pub config: SingularityConfiguration,
    pub point_index: usize,
    pub point: DynkinType,
    pub provenance: String,
    pub target_mu: Rat,
    pub kind: ScenarioKind,
    pub system: LinIneqSystem,
    /// Name of the variable playing the reciprocal threshold.
    pub u_var: String,
}

impl ScenarioSystem {
    pub fn u_objective(&self) -> Vec<Rat> {
        self.system
            .unit_objective(&self.u_var)
            .expect("u variable present")
    }
}

fn variant_for(config: &SingularityConfiguration) -> SystemVariant {
    if config.points().len() > 1 {
        SystemVariant::ManyPoints
    } else {
        SystemVariant::SinglePoint
    }
}

fn variant_tag(config: &SingularityConfiguration) -> &'static str {
    if config.points().len() > 1 {
        "several singular points (boundary row unchanged)"
    } else {
        "single singular point"
    }
}

/// Extend the base system of `t` with a fresh `u` column (and `delta`).
fn extended_system(t: DynkinType, variant: SystemVariant, with_delta: bool) -> LinIneqSystem {
    let base = base_system(t, variant);
    let m = t.rank();
    let mut vars = base.variables.clone();
    vars.push("u".to_string());
    if with_delta {
        vars.push("delta".to_string());
    }
    let width = vars.len();
    let mut sys = LinIneqSystem::new(vars);
    for c in &base.constraints {
        let mut coeffs = c.coeffs.clone();
        coeffs.resize(width, Rat::zero());
        sys.constraints.push(crate::polytope::Constraint {
            coeffs,
            relation: c.relation,
            rhs: c.rhs.clone(),
        });
    }
    let _ = m;
    sys
}

fn corner_scenario(
    config: &SingularityConfiguration,
    point_index: usize,
    t: DynkinType,
    target: &Rat,
    q_k: usize,
    bounds: &[usize],
    branch_note: &str,
) -> ScenarioSystem {
    let m = t.rank();
    let mut sys = extended_system(t, variant_for(config), false);
    let u = m; // column index of u
    let width = m + 1;
    // witness-exclusion rows a_i <= 1
    for &i in bounds {
        let mut coeffs = vec![Rat::zero(); width];
        coeffs[i - 1] = ri(-1);
        sys.push_ge(coeffs, ri(-1));
    }
    // adjunction at Q = E_k cap E_{k+1}: the a_{k+1}/a_k terms on both sides
    // cancel, leaving 2a_k - a_{k-1} >= u and 2a_{k+1} - a_{k+2} >= u
    let mut left = vec![Rat::zero(); width];
    left[q_k - 1] = ri(2);
    left[q_k - 2] = ri(-1);
    left[u] = ri(-1);
    sys.push_ge(left, ri(0));
    let mut right = vec![Rat::zero(); width];
    right[q_k] = ri(2);
    if q_k + 2 <= m {
        right[q_k + 1] = ri(-1);
    }
    right[u] = ri(-1);
    sys.push_ge(right, ri(0));
    // closure of "threshold <= target"
    let mut urow = vec![Rat::zero(); width];
    urow[u] = ri(1);
    sys.push_ge(urow, target.recip());

    let bound_list = bounds
        .iter()
        .map(|i| format!("a{i}<=1"))
        .collect::<Vec<_>>()
        .join(",");
    ScenarioSystem {
        id: format!("{config}@{point_index}/Q=E{q_k}E{}/{}", q_k + 1, bound_list),
        config: config.clone(),
        point_index,
        point: t,
        provenance: format!(
            "rank-{m} chain point, {}; non-klt candidate at the crossing E{q_k} cap E{}; \
             excluded witness components give {bound_list}{branch_note}",
            variant_tag(config),
            q_k + 1
        ),
        target_mu: target.clone(),
        kind: ScenarioKind::CornerAdjunction {
            q_index: q_k,
            bounds: bounds.iter().map(|&i| (i, ri(1))).collect(),
            aux_blowup: false,
        },
        system: sys,
        u_var: "u".to_string(),
    }
}

fn rank4_scenario(
    config: &SingularityConfiguration,
    point_index: usize,
    target: &Rat,
) -> ScenarioSystem {
    let t = DynkinType::a(4).expect("rank in range");
    let mut sys = extended_system(t, variant_for(config), true);
    let (u, dl, width) = (4, 5, 6);
    let mut row = |entries: &[(usize, Rat)], rhs: Rat| {
        let mut coeffs = vec![Rat::zero(); width];
        for (i, v) in entries {
            coeffs[*i] = v.clone();
        }
        sys.push_ge(coeffs, rhs);
    };
    // first-level adjunction at Q = E2 cap E3
    row(&[(1, ri(2)), (0, ri(-1)), (u, ri(-1))], ri(0)); // 2a2 - a1 >= u
    row(&[(2, ri(2)), (3, ri(-1)), (u, ri(-1))], ri(0)); // 2a3 - a4 >= u
    // second-level data for the blow-up of Q: delta = mult_Q of the mobile part
    row(&[(dl, ri(-1))], ri(-1)); // delta <= 1
    row(&[(1, ri(-1)), (2, ri(-1)), (dl, ri(-1))], ri(-2)); // a2 + a3 + delta <= 2
    row(&[(1, ri(2)), (0, ri(-1)), (2, ri(-1)), (dl, ri(-1))], ri(0)); // strict E2 row
    row(&[(2, ri(2)), (1, ri(-1)), (3, ri(-1)), (dl, ri(-1))], ri(0)); // strict E3 row
    // adjunction on the new exceptional at its crossing with strict E2
    // (the other side is the image under the chain reversal)
    row(&[(dl, ri(1)), (u, ri(-1)), (1, ri(1))], ri(0)); // delta >= u - a2
    // closure of "threshold <= target"
    row(&[(u, ri(1))], target.recip());

    ScenarioSystem {
        id: format!("{config}@{point_index}/Q=E2E3/aux"),
        config: config.clone(),
        point_index,
        point: t,
        provenance: format!(
            "rank-4 chain point, {}; non-klt candidate at E2 cap E3 with the auxiliary \
             blow-up multiplicity delta; excluded bi-anticanonical member through the \
             crossing gives a2+a3+delta<=2; second-level non-klt point taken on the \
             strict E2 side, the E3 side being its image under the chain reversal",
            variant_tag(config)
        ),
        target_mu: target.clone(),
        kind: ScenarioKind::CornerAdjunction {
            q_index: 2,
            bounds: vec![],
            aux_blowup: true,
        },
        system: sys,
        u_var: "u".to_string(),
    }
}

fn central_pin_scenario(
    config: &SingularityConfiguration,
    point_index: usize,
    t: DynkinType,
    target: &Rat,
) -> ScenarioSystem {
    let m = t.rank();
    let mut sys = base_system(t, variant_for(config));
    let mut coeffs = vec![Rat::zero(); m];
    coeffs[2] = ri(1);
    sys.push_ge(coeffs, target.recip()); // a3 >= 1/target
    ScenarioSystem {
        id: format!("{config}@{point_index}/central"),
        config: config.clone(),
        point_index,
        point: t,
        provenance: format!(
            "{t} point: the weakly-exceptional blow-up pins mu*a3 = 1, so a3 = 1/mu; \
             the base rows bound a3 by 1/target from above"
        ),
        target_mu: target.clone(),
        kind: ScenarioKind::CentralPin,
        system: sys,
        u_var: "a3".to_string(),
    }
}

fn variable_bound_scenario(
    config: &SingularityConfiguration,
    point_index: usize,
    t: DynkinType,
    target: &Rat,
    variable: usize,
) -> ScenarioSystem {
    let sys = base_system(t, variant_for(config));
    ScenarioSystem {
        id: format!("{config}@{point_index}/max-a{variable}"),
        config: config.clone(),
        point_index,
        point: t,
        provenance: format!(
            "rank-{} chain point resolved at the first threshold: every coefficient \
             stays at most 1, so the pulled-back pair remains klt along the \
             exceptional locus for thresholds below 1",
            t.rank()
        ),
        target_mu: target.clone(),
        kind: ScenarioKind::VariableBound {
            variable,
            bound: ri(1),
        },
        system: sys,
        u_var: format!("a{variable}"),
    }
}

/// Candidate crossings for a chain of rank `m`: the interior ones, the two
/// end crossings being excluded by the corner parameter family whenever the
/// target is below `(m+1)/(2m-2)`.
fn interior_crossings(m: usize) -> std::ops::RangeInclusive<usize> {
    2..=(m - 2)
}

/// Per-point scenario targets and witness-exclusion branches.
fn chain_branches(
    config: &SingularityConfiguration,
    flags: &SurfaceFlags,
    rank: usize,
) -> Option<(Rat, Vec<Vec<usize>>)> {
    match rank {
        5 => Some((rat(2, 3), vec![vec![3]])),
        6 => Some((rat(2, 3), vec![vec![4, 2], vec![4, 3]])),
        7 => {
            if config.points().len() == 1 && flags.branch_curve_irreducible {
                // completed by the involution image of the degree-3 witness
                Some((rat(3, 5), vec![vec![2, 5], vec![3, 6]]))
            } else {
                Some((rat(1, 2), vec![vec![4]]))
            }
        }
        8 => Some((rat(1, 2), vec![vec![3, 6]])),
        _ => None,
    }
}

/// Build every scenario for the configuration at the given target.
/// Configurations consisting only of rank <= 2 chain points have no
/// coefficient-side content; they return an empty list (see
/// [`CertificationReport::notices`]).
pub fn build_scenarios(
    config: &SingularityConfiguration,
    flags: &SurfaceFlags,
    target_mu: &Rat,
) -> Result<Vec<ScenarioSystem>> {
    if !admissible(config) {
        return Err(Error::Inadmissible(config.to_string()));
    }
    flags.validate(config)?;
    let mut out = Vec::new();
    for (idx, &t) in config.points().iter().enumerate() {
        match t.kind() {
            DynkinKind::A => match t.rank() {
                0..=2 => {}
                3 => {
                    for v in 1..=3 {
                        out.push(variable_bound_scenario(config, idx, t, target_mu, v));
                    }
                }
                4 => out.push(rank4_scenario(config, idx, &rat(4, 5))),
                m => {
                    let (target, branches) =
                        chain_branches(config, flags, m).expect("rank 5..=8");
                    for bounds in &branches {
                        let note = if branches.len() > 1 {
                            "; one branch of the excluded-component disjunction"
                        } else {
                            ""
                        };
                        for k in interior_crossings(m) {
                            out.push(corner_scenario(
                                config, idx, t, &target, k, bounds, note,
                            ));
                        }
                    }
                }
            },
            DynkinKind::D => {
                let target = match t.rank() {
                    8 => rat(1, 3),
                    7 => rat(2, 5),
                    _ => rat(1, 2),
                };
                out.push(central_pin_scenario(config, idx, t, &target));
            }
            DynkinKind::E => {
                let target = match t.rank() {
                    6 => rat(1, 3),
                    7 => rat(1, 4),
                    _ => rat(1, 6),
                };
                out.push(central_pin_scenario(config, idx, t, &target));
            }
        }
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}

/// A scenario together with its two LP outcomes and the verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedScenario {
    pub scenario: ScenarioSystem,
    /// Minimum of the reciprocal-threshold variable over the scenario.
    pub minimum: LpResult,
    /// Maximum of the same variable.
    pub maximum: LpResult,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificationReport {
    pub config: SingularityConfiguration,
    pub scenarios: Vec<CertifiedScenario>,
    pub notices: Vec<String>,
    pub all_passed: bool,
}

/// Certify the table row of a configuration: every scenario must either be
/// infeasible (Farkas certificate, re-verified here) or have its reciprocal
/// threshold pinned at exactly `1/target`.
pub fn certify_lower_bound(
    config: &SingularityConfiguration,
    flags: &SurfaceFlags,
) -> Result<CertificationReport> {
    let row = super::lct_table(config, flags)?;
    let scenarios = build_scenarios(config, flags, &row.value)?;
    let mut notices = Vec::new();
    if config
        .points()
        .iter()
        .all(|t| t.kind() == DynkinKind::A && t.rank() <= 2)
    {
        notices.push(
            "configuration has only rank <= 2 chain points: the threshold is decided by \
             cusp data, not by coefficient systems; nothing to certify"
                .to_string(),
        );
    }
    let mut out = Vec::new();
    for sc in scenarios {
        let certified = certify_scenario(&sc)?;
        out.push(certified);
    }
    let all_passed = out.iter().all(|c| c.passed);
    Ok(CertificationReport {
        config: config.clone(),
        scenarios: out,
        notices,
        all_passed,
    })
}

fn certify_scenario(sc: &ScenarioSystem) -> Result<CertifiedScenario> {
    let obj = sc.u_objective();
    let minimum = minimize(&sc.system, &obj)?;
    let maximum = maximize(&sc.system, &obj)?;
    let passed = match &sc.kind {
        ScenarioKind::VariableBound { bound, .. } => match &maximum {
            LpResult::Optimal { value, .. } => value <= bound,
            _ => false,
        },
        _ => {
            let pinned = sc.target_mu.recip();
            match (&minimum, &maximum) {
                (
                    LpResult::Infeasible { certificate: c1 },
                    LpResult::Infeasible { certificate: c2 },
                ) => {
                    c1.verifies_infeasibility(&sc.system) && c2.verifies_infeasibility(&sc.system)
                }
                (
                    LpResult::Optimal { value: v1, witness: w1 },
                    LpResult::Optimal { value: v2, witness: w2 },
                ) => {
                    *v1 == pinned
                        && *v2 == pinned
                        && sc.system.satisfied_by(w1)
                        && sc.system.satisfied_by(w2)
                }
                _ => false,
            }
        }
    };
    Ok(CertifiedScenario {
        scenario: sc.clone(),
        minimum,
        maximum,
        passed,
    })
}

/// Every admissible configuration (the classified list plus representative
/// small-point configurations), for sweep runs.
pub fn all_admissible_configurations() -> Vec<SingularityConfiguration> {
    let mut out: Vec<SingularityConfiguration> = super::ADMISSIBLE
        .iter()
        .map(|s| s.parse().expect("admissible list parses"))
        .collect();
    for extra in ["A1", "A2", "A2+A1", "A2+A2", "A1+A1"] {
        out.push(extra.parse().expect("small configuration parses"));
    }
    out.sort_by_key(|c| c.to_string());
    out.dedup();
    out
}
