//! JSON command-line interface.
//!
//! Every subcommand reads a JSON payload (already parsed into a
//! [`serde_json::Value`]) and produces `(exit_code, output document)`:
//! exit 0 on success, 1 on a validation error, 2 on a reproduction failure
//! (a certification assertion that did not hold). Rationals are strings
//! `"p/q"` in lowest terms (`"p"` when integral) everywhere.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::catalog::scenarios::{all_admissible_configurations, certify_lower_bound};
use crate::catalog::{lct1_classify, lct_table, CuspStratum, SingularityConfiguration, SurfaceFlags};
use crate::error::Error;
use crate::lct::{cusp_germ, lct_snc, node_germ, run_program, tacnode_germ, BlowupProgram, LctResult};
use crate::local::{
    chain_bound, check_hypotheses, conclusion_disjunction, corner_params, parameter_bullets_hold,
    sampled_derived_failures, simulate_chain, verify_derived_inequalities, TheoremIParams,
    DERIVED_SUITE_SEED,
};
use crate::polytope::{eliminate, is_implied, maximize, minimize, Constraint, LinIneqSystem};
use crate::rational::Rat;
use crate::resolution::{pullback_coefficients, CurveClass, DynkinType};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_REPRODUCTION: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Subcommand {
    Table,
    Certify,
    Lct,
    Pullback,
    Polytope,
    TheoremI,
    Germ,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunRequest {
    pub subcommand: Subcommand,
    pub payload: Value,
}

/// Dispatch a request. Never panics on malformed payloads; those map to
/// exit 1 with an `"error"` document.
pub fn run(req: &RunRequest) -> (i32, Value) {
    let result = match req.subcommand {
        Subcommand::Table => table(&req.payload),
        Subcommand::Certify => certify(&req.payload),
        Subcommand::Lct => lct_cmd(&req.payload),
        Subcommand::Pullback => pullback(&req.payload),
        Subcommand::Polytope => polytope_cmd(&req.payload),
        Subcommand::TheoremI => theorem_i(&req.payload),
        Subcommand::Germ => germ(&req.payload),
    };
    match result {
        Ok((code, doc)) => (code, doc),
        Err(e) => (EXIT_VALIDATION, json!({ "error": e.to_string() })),
    }
}

type CmdResult = Result<(i32, Value), Error>;

fn parse_payload<T: serde::de::DeserializeOwned>(payload: &Value) -> Result<T, Error> {
    serde_json::from_value(payload.clone())
        .map_err(|e| Error::InvalidInput(format!("payload does not match schema: {e}")))
}

#[derive(Debug, Deserialize)]
struct TablePayload {
    config: SingularityConfiguration,
    #[serde(default)]
    r_irreducible: bool,
    #[serde(default)]
    cusp: CuspName,
}

#[derive(Debug, Clone, Copy, Default, Deserialize, Serialize)]
#[serde(rename_all = "lowercase")]
enum CuspName {
    A2,
    A1,
    Smooth,
    #[default]
    None,
}

impl From<CuspName> for CuspStratum {
    fn from(c: CuspName) -> CuspStratum {
        match c {
            CuspName::A2 => CuspStratum::CuspAtA2,
            CuspName::A1 => CuspStratum::CuspAtA1,
            CuspName::Smooth => CuspStratum::CuspAtSmooth,
            CuspName::None => CuspStratum::NoCusp,
        }
    }
}

fn flags_of(r_irreducible: bool, cusp: CuspName) -> SurfaceFlags {
    SurfaceFlags {
        branch_curve_irreducible: r_irreducible,
        cusp_stratum: cusp.into(),
    }
}

fn table(payload: &Value) -> CmdResult {
    let p: TablePayload = parse_payload(payload)?;
    let flags = flags_of(p.r_irreducible, p.cusp);
    let row = lct_table(&p.config, &flags)?;
    let lct1 = lct1_classify(&p.config, &flags)?;
    let witness = match &row.witness {
        None => Value::Null,
        Some(w) => {
            let comps: Vec<Value> = w
                .component_pullbacks()?
                .into_iter()
                .zip(&w.components)
                .map(|((name, pullback), (_, mult))| {
                    json!({ "class": name, "multiplicity": mult, "pullback": pullback })
                })
                .collect();
            json!({
                "name": w.name,
                "level": w.pluri_degree,
                "at_point": w.at_point,
                "components": comps,
                "lct_contribution": w.claimed_lct_contribution,
            })
        }
    };
    let doc = json!({
        "config": row.config.to_string(),
        "lct": row.value,
        "level": row.witness_level,
        "lct1": lct1,
        "witness": row.witness.as_ref().map(|w| w.name.clone()),
        "witness_detail": witness,
    });
    Ok((EXIT_OK, doc))
}

#[derive(Debug, Deserialize)]
struct CertifyPayload {
    #[serde(default)]
    config: Option<SingularityConfiguration>,
    #[serde(default)]
    all: bool,
    #[serde(default)]
    r_irreducible: bool,
    #[serde(default)]
    cusp: CuspName,
}

fn certify(payload: &Value) -> CmdResult {
    let p: CertifyPayload = parse_payload(payload)?;
    let flags = flags_of(p.r_irreducible, p.cusp);
    let configs: Vec<SingularityConfiguration> = if p.all {
        all_admissible_configurations()
    } else {
        vec![p.config.ok_or_else(|| {
            Error::InvalidInput("certify needs a configuration or \"all\": true".into())
        })?]
    };
    let mut docs = Vec::new();
    let mut all_passed = true;
    for config in &configs {
        // a lone rank-7 chain point must be certified for both branch-curve
        // shapes under --all
        let flag_sets: Vec<SurfaceFlags> = if p.all
            && config.points().len() == 1
            && config.has(crate::resolution::DynkinKind::A, 7)
        {
            vec![
                SurfaceFlags {
                    branch_curve_irreducible: false,
                    ..flags
                },
                SurfaceFlags {
                    branch_curve_irreducible: true,
                    ..flags
                },
            ]
        } else {
            vec![flags]
        };
        for f in flag_sets {
            let report = certify_lower_bound(config, &f)?;
            all_passed &= report.all_passed;
            let scenarios: Vec<Value> = report
                .scenarios
                .iter()
                .map(|c| {
                    json!({
                        "id": c.scenario.id,
                        "provenance": c.scenario.provenance,
                        "target_mu": c.scenario.target_mu,
                        "system": c.scenario.system,
                        "minimum": c.minimum,
                        "maximum": c.maximum,
                        "passed": c.passed,
                    })
                })
                .collect();
            docs.push(json!({
                "config": config.to_string(),
                "branch_curve_irreducible": f.branch_curve_irreducible,
                "scenarios": scenarios,
                "notices": report.notices,
                "all_passed": report.all_passed,
            }));
        }
    }
    let code = if all_passed { EXIT_OK } else { EXIT_REPRODUCTION };
    let doc = if p.all {
        json!({ "reports": docs, "all_passed": all_passed })
    } else {
        docs.into_iter().next().expect("one report")
    };
    Ok((code, doc))
}

#[derive(Debug, Deserialize)]
struct LctComponentPayload {
    name: String,
    incidence: Vec<u32>,
    coefficient: Rat,
    #[serde(default = "default_degree")]
    degree: Rat,
    #[serde(default = "default_self")]
    strict_self: Rat,
}

fn default_degree() -> Rat {
    Rat::one()
}

fn default_self() -> Rat {
    Rat::int(-1)
}

#[derive(Debug, Deserialize)]
struct LctPayload {
    #[serde(rename = "type")]
    graph: DynkinType,
    components: Vec<LctComponentPayload>,
    #[serde(default)]
    germ: Option<BlowupProgram>,
}

fn lct_cmd(payload: &Value) -> CmdResult {
    let p: LctPayload = parse_payload(payload)?;
    let strict: Vec<(CurveClass, Rat)> = p
        .components
        .into_iter()
        .map(|c| {
            (
                CurveClass::new(c.name, c.degree, c.strict_self, c.incidence),
                c.coefficient,
            )
        })
        .collect();
    let result = crate::lct::lct_at_ade_point(p.graph, &strict, p.germ.as_ref())?;
    Ok((EXIT_OK, lct_doc(&result)))
}

fn lct_doc(result: &LctResult) -> Value {
    match result {
        LctResult::Threshold { value, minimizer } => {
            json!({ "lct": value, "minimizer": minimizer })
        }
        LctResult::NoThreshold => json!({ "lct": null }),
    }
}

#[derive(Debug, Deserialize)]
struct PullbackPayload {
    #[serde(rename = "type")]
    graph: DynkinType,
    incidence: Vec<u32>,
}

fn pullback(payload: &Value) -> CmdResult {
    let p: PullbackPayload = parse_payload(payload)?;
    let n = pullback_coefficients(p.graph, &p.incidence)?;
    Ok((
        EXIT_OK,
        json!({
            "type": p.graph.to_string(),
            "incidence": p.incidence,
            "coefficients": n.coeffs,
        }),
    ))
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase", tag = "action")]
enum PolytopePayload {
    Maximize {
        system: LinIneqSystem,
        objective: Value,
    },
    Minimize {
        system: LinIneqSystem,
        objective: Value,
    },
    Implied {
        system: LinIneqSystem,
        ineq: Constraint,
    },
    Eliminate {
        system: LinIneqSystem,
        variable: String,
    },
}

fn parse_objective(sys: &LinIneqSystem, v: &Value) -> Result<Vec<Rat>, Error> {
    if let Some(name) = v.as_str() {
        return sys.unit_objective(name);
    }
    let coeffs: Vec<Rat> = serde_json::from_value(v.clone())
        .map_err(|e| Error::InvalidInput(format!("objective must be a variable name or a rational vector: {e}")))?;
    Ok(coeffs)
}

fn polytope_cmd(payload: &Value) -> CmdResult {
    let p: PolytopePayload = parse_payload(payload)?;
    let doc = match p {
        PolytopePayload::Maximize { system, objective } => {
            let obj = parse_objective(&system, &objective)?;
            serde_json::to_value(maximize(&system, &obj)?).expect("serializable")
        }
        PolytopePayload::Minimize { system, objective } => {
            let obj = parse_objective(&system, &objective)?;
            serde_json::to_value(minimize(&system, &obj)?).expect("serializable")
        }
        PolytopePayload::Implied { system, ineq } => {
            serde_json::to_value(is_implied(&system, &ineq)?).expect("serializable")
        }
        PolytopePayload::Eliminate { system, variable } => {
            serde_json::to_value(eliminate(&system, &variable)?).expect("serializable")
        }
    };
    Ok((EXIT_OK, doc))
}

#[derive(Debug, Deserialize)]
struct TheoremIPayload {
    #[serde(flatten)]
    params: Option<TheoremIParams>,
    #[serde(default)]
    corner_rank: Option<i64>,
    #[serde(default)]
    a1: Option<Rat>,
    #[serde(default)]
    a2: Option<Rat>,
    #[serde(default)]
    mult1: Option<Rat>,
    #[serde(default)]
    mult2: Option<Rat>,
    #[serde(default)]
    chain: Option<Vec<Rat>>,
    #[serde(default)]
    suite_samples: Option<usize>,
}

fn theorem_i(payload: &Value) -> CmdResult {
    let p: TheoremIPayload = parse_payload(payload)?;
    if let Some(samples) = p.suite_samples {
        let failures = sampled_derived_failures(DERIVED_SUITE_SEED, samples);
        let ok = failures.is_empty();
        let doc = json!({
            "samples": samples,
            "seed": format!("{DERIVED_SUITE_SEED:#x}"),
            "failures": failures,
            "all_hold": ok,
        });
        return Ok((if ok { EXIT_OK } else { EXIT_REPRODUCTION }, doc));
    }
    let params = match (p.params, p.corner_rank) {
        (_, Some(m)) => corner_params(m)?,
        (Some(params), None) => params,
        (None, None) => {
            return Err(Error::InvalidInput(
                "theorem-i needs parameters, a corner_rank, or suite_samples".into(),
            ))
        }
    };
    let mut doc = serde_json::Map::new();
    doc.insert("params".into(), serde_json::to_value(&params).expect("serializable"));
    doc.insert(
        "parameter_bullets_hold".into(),
        Value::Bool(parameter_bullets_hold(&params)),
    );
    doc.insert(
        "derived".into(),
        serde_json::to_value(verify_derived_inequalities(&params)).expect("serializable"),
    );
    if let (Some(a1), Some(a2)) = (&p.a1, &p.a2) {
        let bullets = crate::local::hypothesis_bullets(&params, a1, a2);
        doc.insert(
            "bullets".into(),
            json!({
                "normalization": bullets[0],
                "slope_bound": bullets[1],
                "weight_balance": bullets[2],
                "overflow_alternative": bullets[3],
            }),
        );
        doc.insert(
            "hypotheses_hold".into(),
            Value::Bool(check_hypotheses(&params, a1, a2)),
        );
        doc.insert(
            "chain_bound".into(),
            serde_json::to_value(chain_bound(&params, a2)?).expect("serializable"),
        );
        if let (Some(m1), Some(m2)) = (&p.mult1, &p.mult2) {
            doc.insert(
                "conclusion_holds".into(),
                Value::Bool(conclusion_disjunction(&params, a1, a2, m1, m2)),
            );
        }
        if let Some(mults) = &p.chain {
            let state = simulate_chain(a1, a2, mults)?;
            doc.insert("chain".into(), serde_json::to_value(state).expect("serializable"));
        }
    }
    Ok((EXIT_OK, Value::Object(doc)))
}

#[derive(Debug, Deserialize)]
struct GermPayload {
    #[serde(default)]
    preset: Option<String>,
    #[serde(default)]
    branches: Option<Vec<GermBranch>>,
    #[serde(default)]
    steps: Option<Vec<crate::lct::BlowupStep>>,
}

#[derive(Debug, Deserialize)]
struct GermBranch {
    id: String,
    coefficient: Rat,
}

fn germ(payload: &Value) -> CmdResult {
    let p: GermPayload = parse_payload(payload)?;
    let (branches, prog) = match p.preset.as_deref() {
        Some("node") => node_germ(),
        Some("cusp") => cusp_germ(),
        Some("tacnode") => tacnode_germ(),
        Some(other) => {
            return Err(Error::InvalidInput(format!(
                "unknown preset {other:?} (node, cusp, tacnode)"
            )))
        }
        None => {
            let branches = p
                .branches
                .ok_or_else(|| Error::InvalidInput("germ needs branches or a preset".into()))?
                .into_iter()
                .map(|b| (b.id, b.coefficient))
                .collect();
            let steps = p
                .steps
                .ok_or_else(|| Error::InvalidInput("germ needs steps or a preset".into()))?;
            (branches, BlowupProgram { steps })
        }
    };
    let arr = run_program(&branches, &prog)?;
    let result = lct_snc(&arr)?;
    let table: Vec<Value> = arr
        .components
        .iter()
        .map(|c| {
            json!({
                "id": c.id,
                "coefficient": c.coefficient,
                "discrepancy": c.discrepancy(),
            })
        })
        .collect();
    let mut doc = lct_doc(&result);
    doc.as_object_mut()
        .expect("object")
        .insert("table".into(), Value::Array(table));
    Ok((EXIT_OK, doc))
}
