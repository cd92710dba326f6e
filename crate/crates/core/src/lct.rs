//! Log canonical thresholds of weighted simple normal crossing arrangements,
//! and the combinatorial blow-up programs that reduce curve germs to them.
//!
//! A germ is specified by its tree of infinitely-near centers (an Enriques
//! diagram): each step blows up a point lying on at most two previously
//! created exceptional curves and on any number of branches with given
//! multiplicities. Coefficients and discrepancies accumulate by
//!
//! ```text
//! d_new = sum of incident d   +   sum of coeff * multiplicity over branches
//! k_new = 1 + sum of incident k
//! ```
//!
//! and the threshold of the resulting SNC total is `min (1 + k) / d`.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::resolution::{pullback_coefficients, CurveClass, DynkinType};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComponentKind {
    /// A strict transform; implicit discrepancy 0.
    Strict,
    /// An exceptional curve with its discrepancy.
    Exceptional { discrepancy: Rat },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub id: String,
    pub coefficient: Rat,
    #[serde(flatten)]
    pub kind: ComponentKind,
}

impl Component {
    pub fn strict(id: impl Into<String>, coefficient: Rat) -> Self {
        Component {
            id: id.into(),
            coefficient,
            kind: ComponentKind::Strict,
        }
    }

    pub fn exceptional(id: impl Into<String>, coefficient: Rat, discrepancy: Rat) -> Self {
        Component {
            id: id.into(),
            coefficient,
            kind: ComponentKind::Exceptional { discrepancy },
        }
    }

    pub fn discrepancy(&self) -> Rat {
        match &self.kind {
            ComponentKind::Strict => Rat::zero(),
            ComponentKind::Exceptional { discrepancy } => discrepancy.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct WeightedArrangement {
    pub components: Vec<Component>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LctResult {
    Threshold { value: Rat, minimizer: String },
    /// All coefficients vanish: no finite threshold.
    NoThreshold,
}

impl LctResult {
    pub fn value(&self) -> Option<&Rat> {
        match self {
            LctResult::Threshold { value, .. } => Some(value),
            LctResult::NoThreshold => None,
        }
    }
}

/// Threshold of an SNC arrangement: `min (1 + discrepancy) / coefficient`
/// over components with positive coefficient (first minimizer wins ties).
pub fn lct_snc(arr: &WeightedArrangement) -> Result<LctResult> {
    let mut best: Option<(Rat, String)> = None;
    for c in &arr.components {
        if c.coefficient.is_negative() {
            return Err(Error::InvalidInput(format!(
                "component {} has negative coefficient",
                c.id
            )));
        }
        if c.coefficient.is_zero() {
            continue;
        }
        let ratio = &(Rat::one() + c.discrepancy()) / &c.coefficient;
        match &best {
            Some((b, _)) if *b <= ratio => {}
            _ => best = Some((ratio, c.id.clone())),
        }
    }
    Ok(match best {
        Some((value, minimizer)) => LctResult::Threshold { value, minimizer },
        None => LctResult::NoThreshold,
    })
}

/// Contact of a branch with a blow-up center.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchContact {
    pub branch: String,
    pub multiplicity: u32,
}

/// One blow-up: the center lies on the named exceptionals (previous steps
/// `F1, F2, ...` or pre-existing base divisors) and on the listed branches.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupStep {
    #[serde(default)]
    pub exceptionals: Vec<String>,
    #[serde(default)]
    pub branches: Vec<BranchContact>,
}

/// A finite sequence of infinitely-near blow-ups. Step `i` (0-based) creates
/// the exceptional curve `F{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupProgram {
    pub steps: Vec<BlowupStep>,
}

impl BlowupProgram {
    pub fn step(exceptionals: &[&str], branches: &[(&str, u32)]) -> BlowupStep {
        BlowupStep {
            exceptionals: exceptionals.iter().map(|s| s.to_string()).collect(),
            branches: branches
                .iter()
                .map(|(b, m)| BranchContact {
                    branch: b.to_string(),
                    multiplicity: *m,
                })
                .collect(),
        }
    }

    /// Indices of prior steps each step's center lies on (base divisors are
    /// not part of the dependency order).
    pub fn dependencies(&self) -> Vec<Vec<usize>> {
        self.steps
            .iter()
            .map(|s| {
                s.exceptionals
                    .iter()
                    .filter_map(|name| parse_step_name(name))
                    .collect()
            })
            .collect()
    }
}

fn parse_step_name(name: &str) -> Option<usize> {
    name.strip_prefix('F')
        .and_then(|t| t.parse::<usize>().ok())
        .map(|i| i.wrapping_sub(1))
}

/// A node germ: two smooth branches crossing transversally.
pub fn node_germ() -> (Vec<(String, Rat)>, BlowupProgram) {
    let branches = vec![
        ("b1".to_string(), Rat::one()),
        ("b2".to_string(), Rat::one()),
    ];
    let prog = BlowupProgram {
        steps: vec![BlowupProgram::step(&[], &[("b1", 1), ("b2", 1)])],
    };
    (branches, prog)
}

/// An ordinary cusp: multiplicity sequence (2, 1, 1) with the third center on
/// the crossing of the first two exceptionals.
pub fn cusp_germ() -> (Vec<(String, Rat)>, BlowupProgram) {
    let branches = vec![("c".to_string(), Rat::one())];
    let prog = BlowupProgram {
        steps: vec![
            BlowupProgram::step(&[], &[("c", 2)]),
            BlowupProgram::step(&["F1"], &[("c", 1)]),
            BlowupProgram::step(&["F1", "F2"], &[("c", 1)]),
        ],
    };
    (branches, prog)
}

/// A tacnode: two smooth branches with contact of order two.
pub fn tacnode_germ() -> (Vec<(String, Rat)>, BlowupProgram) {
    let branches = vec![
        ("b1".to_string(), Rat::one()),
        ("b2".to_string(), Rat::one()),
    ];
    let prog = BlowupProgram {
        steps: vec![
            BlowupProgram::step(&[], &[("b1", 1), ("b2", 1)]),
            BlowupProgram::step(&["F1"], &[("b1", 1), ("b2", 1)]),
        ],
    };
    (branches, prog)
}

/// Run a program over strict branches only.
pub fn run_program(
    branches: &[(String, Rat)],
    prog: &BlowupProgram,
) -> Result<WeightedArrangement> {
    run_program_with_base(&[], branches, prog)
}

/// Run a program in the presence of base exceptional divisors (discrepancy 0,
/// e.g. the curves of a minimal ADE resolution) carrying given coefficients.
pub fn run_program_with_base(
    base: &[(String, Rat)],
    branches: &[(String, Rat)],
    prog: &BlowupProgram,
) -> Result<WeightedArrangement> {
    validate_program(base, branches, prog)?;
    let coeff_of_branch: HashMap<&str, &Rat> =
        branches.iter().map(|(n, c)| (n.as_str(), c)).collect();
    // name -> (d, k) for base divisors and created exceptionals
    let mut table: HashMap<String, (Rat, Rat)> = base
        .iter()
        .map(|(n, d)| (n.clone(), (d.clone(), Rat::zero())))
        .collect();
    let mut created: Vec<(String, Rat, Rat)> = Vec::new();
    for (i, step) in prog.steps.iter().enumerate() {
        let mut d = Rat::zero();
        let mut k = Rat::one();
        for exc in &step.exceptionals {
            let (ed, ek) = table
                .get(exc)
                .ok_or_else(|| Error::InvalidProgram(format!("unknown exceptional {exc:?}")))?;
            d += ed;
            k += ek;
        }
        for contact in &step.branches {
            let coeff = coeff_of_branch[contact.branch.as_str()];
            d += &(coeff * &Rat::int(contact.multiplicity as i64));
        }
        let name = format!("F{}", i + 1);
        table.insert(name.clone(), (d.clone(), k.clone()));
        created.push((name, d, k));
    }
    let mut components: Vec<Component> = base
        .iter()
        .map(|(n, d)| Component::exceptional(n.clone(), d.clone(), Rat::zero()))
        .collect();
    components.extend(
        branches
            .iter()
            .map(|(n, c)| Component::strict(n.clone(), c.clone())),
    );
    components.extend(
        created
            .into_iter()
            .map(|(n, d, k)| Component::exceptional(n, d, k)),
    );
    Ok(WeightedArrangement { components })
}

fn validate_program(
    base: &[(String, Rat)],
    branches: &[(String, Rat)],
    prog: &BlowupProgram,
) -> Result<()> {
    let branch_names: Vec<&str> = branches.iter().map(|(n, _)| n.as_str()).collect();
    let base_names: Vec<&str> = base.iter().map(|(n, _)| n.as_str()).collect();
    let mut last_contact: HashMap<&str, u32> = HashMap::new();
    let mut prev_mult: HashMap<&str, u32> = HashMap::new();
    for (i, step) in prog.steps.iter().enumerate() {
        if step.exceptionals.len() > 2 {
            return Err(Error::InvalidProgram(format!(
                "step {} has {} incident exceptionals; a surface point lies on at most two",
                i + 1,
                step.exceptionals.len()
            )));
        }
        for exc in &step.exceptionals {
            match parse_step_name(exc) {
                Some(j) if j < i => {}
                Some(j) => {
                    return Err(Error::InvalidProgram(format!(
                        "step {} references F{} before its creation",
                        i + 1,
                        j + 1
                    )));
                }
                None => {
                    if !base_names.contains(&exc.as_str()) {
                        return Err(Error::InvalidProgram(format!(
                            "step {} references unknown divisor {exc:?}",
                            i + 1
                        )));
                    }
                }
            }
        }
        for contact in &step.branches {
            if !branch_names.contains(&contact.branch.as_str()) {
                return Err(Error::InvalidProgram(format!(
                    "step {} touches unknown branch {:?}",
                    i + 1,
                    contact.branch
                )));
            }
            if contact.multiplicity == 0 {
                return Err(Error::InvalidProgram(format!(
                    "step {} lists branch {:?} with multiplicity 0",
                    i + 1,
                    contact.branch
                )));
            }
            if let Some(&prev) = prev_mult.get(contact.branch.as_str()) {
                if contact.multiplicity > prev {
                    return Err(Error::InvalidProgram(format!(
                        "branch {:?} has increasing multiplicity sequence",
                        contact.branch
                    )));
                }
            }
            prev_mult.insert(contact.branch.as_str(), contact.multiplicity);
            last_contact.insert(contact.branch.as_str(), contact.multiplicity);
        }
    }
    // the end state must be SNC: every touched branch ends smooth/transverse
    for (branch, mult) in last_contact {
        if mult > 1 {
            return Err(Error::InvalidProgram(format!(
                "branch {branch:?} still has multiplicity {mult} at its last center; \
                 the final configuration is not simple normal crossing"
            )));
        }
    }
    Ok(())
}

/// Threshold of a weighted germ: run the program, then take the SNC minimum.
pub fn lct_germ(branches: &[(String, Rat)], prog: &BlowupProgram) -> Result<LctResult> {
    lct_snc(&run_program(branches, prog)?)
}

/// Threshold at an ADE point of a combination `sum coeff * L` of curve
/// classes through it. On the minimal resolution all discrepancies vanish,
/// so exceptional `E_i` enters with coefficient the combined pullback
/// coefficient and discrepancy 0. When the total transform has a worse-than-
/// SNC point, the caller supplies the extra blow-ups as a program whose
/// centers may reference `E1..Em` and the class names.
pub fn lct_at_ade_point(
    t: DynkinType,
    strict: &[(CurveClass, Rat)],
    germ: Option<&BlowupProgram>,
) -> Result<LctResult> {
    let m = t.rank();
    let mut combined = vec![Rat::zero(); m];
    for (class, coeff) in strict {
        if coeff.is_negative() {
            return Err(Error::InvalidInput(format!(
                "negative coefficient on {}",
                class.name
            )));
        }
        let n = pullback_coefficients(t, &class.exc_intersections)?;
        for (acc, ni) in combined.iter_mut().zip(&n.coeffs) {
            *acc += &(coeff * ni);
        }
    }
    let base: Vec<(String, Rat)> = (0..m)
        .map(|i| (format!("E{}", i + 1), combined[i].clone()))
        .collect();
    let branches: Vec<(String, Rat)> = strict
        .iter()
        .map(|(class, coeff)| (class.name.clone(), coeff.clone()))
        .collect();
    match germ {
        Some(prog) => lct_snc(&run_program_with_base(&base, &branches, prog)?),
        None => {
            for (class, _) in strict {
                if let Some(pos) = class.exc_intersections.iter().position(|&b| b >= 2) {
                    return Err(Error::NotSnc(format!(
                        "{} meets E{} with multiplicity {}",
                        class.name,
                        pos + 1,
                        class.exc_intersections[pos]
                    )));
                }
            }
            let mut arr = WeightedArrangement::default();
            for (name, d) in base {
                arr.components.push(Component::exceptional(name, d, Rat::zero()));
            }
            for (name, c) in branches {
                arr.components.push(Component::strict(name, c));
            }
            lct_snc(&arr)
        }
    }
}

/// Outcome of the convexity reduction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexityReduction {
    pub alpha: Rat,
    pub reduced: Vec<Rat>,
}

/// Given coefficient vectors of two Q-equivalent effective divisors, strip
/// the largest multiple of the second from the first:
/// `alpha = min { a_i / abar_i : abar_i != 0 }` and
/// `reduced = (a - alpha abar) / (1 - alpha)`.
///
/// When `alpha = 0` (some `a_i = 0 < abar_i`) the input is returned
/// unchanged with `alpha = 0`; callers must branch on this. Identical inputs
/// are rejected.
pub fn convexity_reduce(a: &[Rat], abar: &[Rat]) -> Result<ConvexityReduction> {
    if a.len() != abar.len() {
        return Err(Error::DimensionMismatch(
            "coefficient vectors of different lengths".into(),
        ));
    }
    if a.iter().chain(abar).any(Rat::is_negative) {
        return Err(Error::InvalidInput("coefficient vectors must be effective".into()));
    }
    if a == abar {
        return Err(Error::ConvexityIdentity);
    }
    let alpha = a
        .iter()
        .zip(abar)
        .filter(|(_, ab)| !ab.is_zero())
        .map(|(x, ab)| x / ab)
        .min()
        .ok_or_else(|| Error::InvalidInput("second vector is zero".into()))?;
    if alpha.is_zero() {
        return Ok(ConvexityReduction {
            alpha,
            reduced: a.to_vec(),
        });
    }
    if alpha > Rat::one() {
        return Err(Error::InvalidInput(
            "first vector dominates a multiple > 1 of the second; \
             not a pair of Q-equivalent effective divisors"
                .into(),
        ));
    }
    let denom = Rat::one() - alpha.clone();
    let reduced: Vec<Rat> = a
        .iter()
        .zip(abar)
        .map(|(x, ab)| &(x - &(&alpha * ab)) / &denom)
        .collect();
    debug_assert!(reduced.iter().all(|r| !r.is_negative()));
    Ok(ConvexityReduction { alpha, reduced })
}
