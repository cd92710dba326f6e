//! The degree-1 del Pezzo case catalog: admissible singularity
//! configurations, the first-threshold classification, the inequality
//! systems attached to each resolution, witness divisors with their exact
//! coefficient data, and the table of thresholds reproduced row by row.

pub mod scenarios;

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lct::{lct_at_ade_point, BlowupProgram, LctResult};
use crate::polytope::LinIneqSystem;
use crate::rational::{rat, ri, Rat};
use crate::resolution::{
    fundamental_cycle, intersection_matrix, pullback_coefficients, CurveClass, DynkinKind,
    DynkinType,
};

/// A multiset of Dynkin types, kept in canonical order (E before D before A,
/// descending rank within a kind).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SingularityConfiguration {
    points: Vec<DynkinType>,
}

fn canonical_key(t: &DynkinType) -> (u8, i64) {
    let kind = match t.kind() {
        DynkinKind::E => 0,
        DynkinKind::D => 1,
        DynkinKind::A => 2,
    };
    (kind, -(t.rank() as i64))
}

impl SingularityConfiguration {
    pub fn new(mut points: Vec<DynkinType>) -> Self {
        points.sort_by_key(canonical_key);
        SingularityConfiguration { points }
    }

    pub fn points(&self) -> &[DynkinType] {
        &self.points
    }

    pub fn has(&self, kind: DynkinKind, rank: usize) -> bool {
        self.points
            .iter()
            .any(|t| t.kind() == kind && t.rank() == rank)
    }

    pub fn has_kind(&self, kind: DynkinKind) -> bool {
        self.points.iter().any(|t| t.kind() == kind)
    }

    pub fn find(&self, kind: DynkinKind, rank: usize) -> Option<usize> {
        self.points
            .iter()
            .position(|t| t.kind() == kind && t.rank() == rank)
    }

    pub fn total_rank(&self) -> usize {
        self.points.iter().map(|t| t.rank()).sum()
    }
}

impl fmt::Display for SingularityConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.points.is_empty() {
            return write!(f, "smooth");
        }
        let parts: Vec<String> = self.points.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for SingularityConfiguration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s.eq_ignore_ascii_case("smooth") {
            return Ok(SingularityConfiguration::new(Vec::new()));
        }
        let points = s
            .split('+')
            .map(|p| p.trim().parse())
            .collect::<Result<Vec<DynkinType>>>()?;
        Ok(SingularityConfiguration::new(points))
    }
}

impl TryFrom<String> for SingularityConfiguration {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SingularityConfiguration> for String {
    fn from(c: SingularityConfiguration) -> String {
        c.to_string()
    }
}

/// Configurations of a degree-1 sextic with canonical singularities other
/// than the everything-is-a-node-or-cusp case.
const ADMISSIBLE: &[&str] = &[
    "E8",
    "E7",
    "E7+A1",
    "E6",
    "E6+A2",
    "E6+A1",
    "D8",
    "D7",
    "D6",
    "D6+A1+A1",
    "D6+A1",
    "D5",
    "D5+A3",
    "D5+A2",
    "D5+A1+A1",
    "D5+A1",
    "D4",
    "D4+D4",
    "D4+A3",
    "D4+A2",
    "D4+A1+A1+A1+A1",
    "D4+A1+A1+A1",
    "D4+A1+A1",
    "D4+A1",
    "A8",
    "A7",
    "A7+A1",
    "A6",
    "A6+A1",
    "A5",
    "A5+A1",
    "A5+A1+A1",
    "A5+A2",
    "A5+A2+A1",
    "A4",
    "A4+A4",
    "A4+A3",
    "A4+A2+A1",
    "A4+A2",
    "A4+A1+A1",
    "A4+A1",
    "A3",
    "A3+A3",
    "A3+A3+A1+A1",
    "A3+A2",
    "A3+A2+A1",
    "A3+A2+A1+A1",
    "A3+A1+A1+A1+A1",
    "A3+A1+A1+A1",
    "A3+A1+A1",
    "A3+A1",
];

/// True iff the configuration is in the classified list, or consists only of
/// points of rank at most 2 of kind A (with total rank within the lattice
/// bound 8).
pub fn admissible(config: &SingularityConfiguration) -> bool {
    let pure_small = config
        .points()
        .iter()
        .all(|t| t.kind() == DynkinKind::A && t.rank() <= 2);
    if pure_small {
        return config.total_rank() <= 8;
    }
    let key = config.to_string();
    ADMISSIBLE.contains(&key.as_str())
}

/// Which cuspidal stratum the anticanonical pencil realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum CuspStratum {
    CuspAtA2,
    CuspAtA1,
    CuspAtSmooth,
    #[default]
    NoCusp,
}

/// Inputs the coefficient machinery cannot derive from the configuration:
/// whether the branch curve of the anticanonical double cover is irreducible
/// (meaningful only with a rank-7 chain point present), and the cusp stratum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct SurfaceFlags {
    #[serde(default)]
    pub branch_curve_irreducible: bool,
    #[serde(default)]
    pub cusp_stratum: CuspStratum,
}

impl SurfaceFlags {
    pub fn validate(&self, config: &SingularityConfiguration) -> Result<()> {
        match self.cusp_stratum {
            CuspStratum::CuspAtA2 if !config.has(DynkinKind::A, 2) => Err(
                Error::InconsistentFlags("cusp at a rank-2 point, but none is present".into()),
            ),
            CuspStratum::CuspAtA1 if !config.has(DynkinKind::A, 1) => Err(
                Error::InconsistentFlags("cusp at a rank-1 point, but none is present".into()),
            ),
            _ => Ok(()),
        }
    }
}

/// The first-threshold classification ladder.
pub fn lct1_classify(config: &SingularityConfiguration, flags: &SurfaceFlags) -> Result<Rat> {
    if !admissible(config) {
        return Err(Error::Inadmissible(config.to_string()));
    }
    flags.validate(config)?;
    if config.has(DynkinKind::E, 8) {
        return Ok(rat(1, 6));
    }
    if config.has(DynkinKind::E, 7) {
        return Ok(rat(1, 4));
    }
    if config.has(DynkinKind::E, 6) {
        return Ok(rat(1, 3));
    }
    if config.has_kind(DynkinKind::D) {
        return Ok(rat(1, 2));
    }
    Ok(match flags.cusp_stratum {
        CuspStratum::CuspAtA2 => rat(2, 3),
        CuspStratum::CuspAtA1 => rat(3, 4),
        CuspStratum::CuspAtSmooth => rat(5, 6),
        CuspStratum::NoCusp => ri(1),
    })
}

/// Whether the system models a lone singular point (anticanonical member
/// irreducible through it) or one of several. For chain types the two
/// printed systems contain the same rows, so the variant only matters for
/// provenance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SystemVariant {
    SinglePoint,
    ManyPoints,
}

/// The inequality system attached to a resolution: one row per exceptional
/// curve (the intersection of the mobile part with it is non-negative) and
/// the boundary row from the anticanonical member through the point. All
/// rows are derived from the intersection matrix and the fundamental cycle,
/// never transcribed.
pub fn base_system(t: DynkinType, variant: SystemVariant) -> LinIneqSystem {
    let _ = variant;
    let m = t.rank();
    let mat = intersection_matrix(t);
    let vars: Vec<String> = (1..=m).map(|i| format!("a{i}")).collect();
    let mut sys = LinIneqSystem::new(vars);
    for j in 0..m {
        let coeffs: Vec<Rat> = (0..m).map(|i| ri(-mat.entry(j, i))).collect();
        sys.push_ge(coeffs, ri(0));
    }
    // boundary row: 1 - sum b_i a_i >= 0 with b the anticanonical incidence
    let z = fundamental_cycle(t);
    let coeffs: Vec<Rat> = (0..m)
        .map(|j| {
            let b: i64 = (0..m).map(|i| mat.entry(j, i) * z[i]).sum();
            ri(b) // -(-M z)_j
        })
        .collect();
    sys.push_ge(coeffs, ri(-1));
    sys
}

/// A member of a pluri-anticanonical system concentrating the threshold at
/// one singular point, with exact coefficient data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDivisor {
    pub name: String,
    /// The witness lies in the n-th pluri-anticanonical system.
    pub pluri_degree: u32,
    /// Index of the singular point within the configuration.
    pub at_point: usize,
    pub graph: DynkinType,
    pub components: Vec<(CurveClass, Rat)>,
    /// Extra blow-ups needed when the total transform is not SNC.
    pub corner: Option<BlowupProgram>,
    pub claimed_lct_contribution: Rat,
}

impl WitnessDivisor {
    /// Threshold of `W / n` at the point, which must equal the claim.
    pub fn evaluate(&self) -> Result<Rat> {
        let n = ri(self.pluri_degree as i64);
        let scaled: Vec<(CurveClass, Rat)> = self
            .components
            .iter()
            .map(|(c, mult)| (c.clone(), mult / &n))
            .collect();
        match lct_at_ade_point(self.graph, &scaled, self.corner.as_ref())? {
            LctResult::Threshold { value, .. } => Ok(value),
            LctResult::NoThreshold => Err(Error::InvalidInput(format!(
                "witness {} has zero coefficients",
                self.name
            ))),
        }
    }

    /// Per-component pullback coefficient vectors (for reporting).
    pub fn component_pullbacks(&self) -> Result<Vec<(String, Vec<Rat>)>> {
        self.components
            .iter()
            .map(|(c, _)| {
                let n = pullback_coefficients(self.graph, &c.exc_intersections)?;
                Ok((c.name.clone(), n.coeffs))
            })
            .collect()
    }
}

fn line_class(name: &str, m: usize, crossing: usize) -> CurveClass {
    let mut b = vec![0u32; m];
    b[crossing - 1] = 1;
    CurveClass::new(name, ri(1), ri(-1), b)
}

fn witness_rank8_chain(at_point: usize) -> WitnessDivisor {
    let t = DynkinType::a(8).expect("rank in range");
    WitnessDivisor {
        name: "3L3".into(),
        pluri_degree: 3,
        at_point,
        graph: t,
        components: vec![(line_class("L3", 8, 3), ri(3))],
        corner: None,
        claimed_lct_contribution: rat(1, 2),
    }
}

fn witness_rank7_double_line(at_point: usize) -> WitnessDivisor {
    let t = DynkinType::a(7).expect("rank in range");
    WitnessDivisor {
        name: "2L4".into(),
        pluri_degree: 2,
        at_point,
        graph: t,
        components: vec![(line_class("L4", 7, 4), ri(2))],
        corner: None,
        claimed_lct_contribution: rat(1, 2),
    }
}

fn witness_rank7_irreducible(at_point: usize) -> WitnessDivisor {
    let t = DynkinType::a(7).expect("rank in range");
    WitnessDivisor {
        name: "L2+2L3".into(),
        pluri_degree: 3,
        at_point,
        graph: t,
        components: vec![
            (line_class("L2", 7, 2), ri(1)),
            (line_class("L3", 7, 3), ri(2)),
        ],
        corner: None,
        claimed_lct_contribution: rat(3, 5),
    }
}

fn witness_rank6_pair(at_point: usize) -> WitnessDivisor {
    let t = DynkinType::a(6).expect("rank in range");
    WitnessDivisor {
        name: "L3+L4".into(),
        pluri_degree: 2,
        at_point,
        graph: t,
        components: vec![
            (line_class("L3", 6, 3), ri(1)),
            (line_class("L4", 6, 4), ri(1)),
        ],
        corner: None,
        claimed_lct_contribution: rat(2, 3),
    }
}

fn witness_rank5_pair(at_point: usize) -> WitnessDivisor {
    let t = DynkinType::a(5).expect("rank in range");
    WitnessDivisor {
        name: "Z".into(),
        pluri_degree: 2,
        at_point,
        graph: t,
        components: vec![
            (line_class("L3", 5, 3), ri(1)),
            (line_class("L3'", 5, 3), ri(1)),
        ],
        corner: None,
        claimed_lct_contribution: rat(2, 3),
    }
}

fn witness_rank4_cuspidal(at_point: usize) -> WitnessDivisor {
    let t = DynkinType::a(4).expect("rank in range");
    // smooth bi-anticanonical member through the middle corner E2 cap E3
    let z = CurveClass::new("Z", ri(2), ri(0), vec![0, 1, 1, 0]);
    let corner = BlowupProgram {
        steps: vec![BlowupProgram::step(&["E2", "E3"], &[("Z", 1)])],
    };
    WitnessDivisor {
        name: "Z".into(),
        pluri_degree: 2,
        at_point,
        graph: t,
        components: vec![(z, ri(1))],
        corner: Some(corner),
        claimed_lct_contribution: rat(4, 5),
    }
}

fn witness_fork8(at_point: usize) -> WitnessDivisor {
    let t = DynkinType::d(8).expect("rank in range");
    let mut b = vec![0u32; 8];
    b[0] = 1;
    WitnessDivisor {
        name: "2L1".into(),
        pluri_degree: 2,
        at_point,
        graph: t,
        components: vec![(CurveClass::new("L1", ri(1), ri(-1), b), ri(2))],
        corner: None,
        claimed_lct_contribution: rat(1, 3),
    }
}

fn witness_fork7(at_point: usize) -> WitnessDivisor {
    let t = DynkinType::d(7).expect("rank in range");
    let mut b1 = vec![0u32; 7];
    b1[0] = 1;
    let mut b2 = vec![0u32; 7];
    b2[1] = 1;
    WitnessDivisor {
        name: "L1+L2".into(),
        pluri_degree: 2,
        at_point,
        graph: t,
        components: vec![
            (CurveClass::new("L1", ri(1), ri(-1), b1), ri(1)),
            (CurveClass::new("L2", ri(1), ri(-1), b2), ri(1)),
        ],
        corner: None,
        claimed_lct_contribution: rat(2, 5),
    }
}

fn witness_anticanonical(t: DynkinType, at_point: usize, lct1: Rat) -> WitnessDivisor {
    let m = t.rank();
    let z = fundamental_cycle(t);
    let mat = intersection_matrix(t);
    let b: Vec<u32> = (0..m)
        .map(|j| {
            let s: i64 = (0..m).map(|i| mat.entry(j, i) * z[i]).sum();
            (-s) as u32
        })
        .collect();
    WitnessDivisor {
        name: "C".into(),
        pluri_degree: 1,
        at_point,
        graph: t,
        components: vec![(CurveClass::new("C", ri(1), ri(-1), b), ri(1))],
        corner: None,
        claimed_lct_contribution: lct1,
    }
}

/// One row of the threshold table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub config: SingularityConfiguration,
    pub value: Rat,
    /// The pluri-anticanonical level at which the threshold is attained.
    pub witness_level: u32,
    pub witness: Option<WitnessDivisor>,
}

/// The threshold table: the exact value of `lct` for an admissible
/// configuration, the pluri-level realizing it, and the witness divisor where
/// one is pinned by coefficient data.
pub fn lct_table(config: &SingularityConfiguration, flags: &SurfaceFlags) -> Result<TableRow> {
    if !admissible(config) {
        return Err(Error::Inadmissible(config.to_string()));
    }
    flags.validate(config)?;
    let lct1 = lct1_classify(config, flags)?;
    let row = |value: Rat, level: u32, witness: Option<WitnessDivisor>| TableRow {
        config: config.clone(),
        value,
        witness_level: level,
        witness,
    };

    if let Some(i) = config.find(DynkinKind::D, 8) {
        return Ok(row(rat(1, 3), 2, Some(witness_fork8(i))));
    }
    if let Some(i) = config.find(DynkinKind::D, 7) {
        return Ok(row(rat(2, 5), 2, Some(witness_fork7(i))));
    }
    if let Some(i) = config.find(DynkinKind::A, 8) {
        return Ok(row(rat(1, 2), 3, Some(witness_rank8_chain(i))));
    }
    if let Some(i) = config.find(DynkinKind::A, 7) {
        // with a companion point the branch curve is forced reducible
        if config.points().len() == 1 && flags.branch_curve_irreducible {
            return Ok(row(rat(3, 5), 3, Some(witness_rank7_irreducible(i))));
        }
        return Ok(row(rat(1, 2), 2, Some(witness_rank7_double_line(i))));
    }
    if let Some(i) = config.find(DynkinKind::A, 6) {
        return Ok(row(rat(2, 3), 2, Some(witness_rank6_pair(i))));
    }
    if let Some(i) = config.find(DynkinKind::A, 5) {
        return Ok(row(rat(2, 3), 2, Some(witness_rank5_pair(i))));
    }
    if let Some(i) = config.find(DynkinKind::A, 4) {
        let cap = rat(4, 5);
        if lct1 >= cap {
            return Ok(row(cap, 2, Some(witness_rank4_cuspidal(i))));
        }
        // the first threshold wins; its extremal member is cuspidal, not
        // pinned by coefficient data
        return Ok(row(lct1, 2, None));
    }
    // resolved at the first threshold; a fork/branched point pins the witness
    let witness = config
        .points()
        .iter()
        .position(|t| t.kind() != DynkinKind::A)
        .map(|i| witness_anticanonical(config.points()[i], i, lct1.clone()));
    Ok(row(lct1, 1, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{maximize, LpResult};

    fn cfg(s: &str) -> SingularityConfiguration {
        s.parse().unwrap()
    }

    #[test]
    fn config_parse_and_canonical_order() {
        assert_eq!(cfg("A1+A7").to_string(), "A7+A1");
        assert_eq!(cfg("A3+D4").to_string(), "D4+A3");
        assert_eq!(cfg("a2+e6").to_string(), "E6+A2");
        assert_eq!(cfg("A1+A1+A3 + A1").to_string(), "A3+A1+A1+A1");
    }

    #[test]
    fn admissibility() {
        assert!(admissible(&cfg("A4+A4")));
        assert!(!admissible(&cfg("A8+A1")));
        assert!(admissible(&cfg("A1+A1+A2")));
        assert!(admissible(&cfg("A2+A2+A2+A2")));
        assert!(admissible(&cfg("D4+D4")));
        assert!(!admissible(&cfg("D4+D5")));
        assert!(!admissible(&cfg("A6+A2")));
        assert!(!admissible(&cfg("E8+A1")));
        // lattice bound on the everything-small case
        assert!(!admissible(&SingularityConfiguration::new(vec![
            DynkinType::a(2).unwrap();
            5
        ])));
    }

    #[test]
    fn lct1_ladder() {
        let no = SurfaceFlags::default();
        assert_eq!(lct1_classify(&cfg("E8"), &no).unwrap(), rat(1, 6));
        assert_eq!(lct1_classify(&cfg("E7+A1"), &no).unwrap(), rat(1, 4));
        assert_eq!(lct1_classify(&cfg("E6+A2"), &no).unwrap(), rat(1, 3));
        assert_eq!(lct1_classify(&cfg("D5+A3"), &no).unwrap(), rat(1, 2));
        assert_eq!(lct1_classify(&cfg("A3"), &no).unwrap(), ri(1));

        let cusp2 = SurfaceFlags {
            cusp_stratum: CuspStratum::CuspAtA2,
            ..Default::default()
        };
        assert!(lct1_classify(&cfg("A5"), &cusp2).is_err());
        assert_eq!(lct1_classify(&cfg("A5+A2"), &cusp2).unwrap(), rat(2, 3));

        let cusp1 = SurfaceFlags {
            cusp_stratum: CuspStratum::CuspAtA1,
            ..Default::default()
        };
        assert_eq!(lct1_classify(&cfg("A4+A1"), &cusp1).unwrap(), rat(3, 4));
        let smooth = SurfaceFlags {
            cusp_stratum: CuspStratum::CuspAtSmooth,
            ..Default::default()
        };
        assert_eq!(lct1_classify(&cfg("A8"), &smooth).unwrap(), rat(5, 6));
    }

    #[test]
    fn lct1_matches_fundamental_cycle_for_branched_types() {
        let no = SurfaceFlags::default();
        for t in [
            DynkinType::d(4).unwrap(),
            DynkinType::d(6).unwrap(),
            DynkinType::d(8).unwrap(),
            DynkinType::e(6).unwrap(),
            DynkinType::e(7).unwrap(),
            DynkinType::e(8).unwrap(),
        ] {
            let config = SingularityConfiguration::new(vec![t]);
            let max_z = fundamental_cycle(t).into_iter().max().unwrap();
            assert_eq!(
                lct1_classify(&config, &no).unwrap(),
                ri(max_z).recip(),
                "{t}"
            );
        }
    }

    #[test]
    fn base_system_rank3_rows() {
        let s = base_system(DynkinType::a(3).unwrap(), SystemVariant::SinglePoint);
        assert_eq!(s.variables, vec!["a1", "a2", "a3"]);
        assert_eq!(s.constraints.len(), 4);
        assert_eq!(s.constraints[0].coeffs, vec![ri(2), ri(-1), ri(0)]);
        assert_eq!(s.constraints[1].coeffs, vec![ri(-1), ri(2), ri(-1)]);
        assert_eq!(s.constraints[2].coeffs, vec![ri(0), ri(-1), ri(2)]);
        assert_eq!(s.constraints[3].coeffs, vec![ri(-1), ri(0), ri(-1)]);
        assert_eq!(s.constraints[3].rhs, ri(-1));
    }

    #[test]
    fn base_system_fork_and_branched_optima() {
        // fork rank 7: the typo-prone row is derived, and max a3 = 5/2
        let s = base_system(DynkinType::d(7).unwrap(), SystemVariant::SinglePoint);
        assert_eq!(
            s.constraints[2].coeffs,
            vec![ri(-1), ri(-1), ri(2), ri(-1), ri(0), ri(0), ri(0)]
        );
        let obj = s.unit_objective("a3").unwrap();
        match maximize(&s, &obj).unwrap() {
            LpResult::Optimal { value, .. } => assert_eq!(value, rat(5, 2)),
            other => panic!("{other:?}"),
        }
        // branched rank 6: first row is 2a1 - a2, boundary row is 1 - a4,
        // and max a3 = 2
        let s = base_system(DynkinType::e(6).unwrap(), SystemVariant::SinglePoint);
        assert_eq!(
            s.constraints[0].coeffs,
            vec![ri(2), ri(-1), ri(0), ri(0), ri(0), ri(0)]
        );
        assert_eq!(
            s.constraints[6].coeffs,
            vec![ri(0), ri(0), ri(0), ri(-1), ri(0), ri(0)]
        );
        let obj = s.unit_objective("a3").unwrap();
        match maximize(&s, &obj).unwrap() {
            LpResult::Optimal { value, witness } => {
                assert_eq!(value, ri(2));
                assert!(s.satisfied_by(&witness));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn table_rows_match() {
        let no = SurfaceFlags::default();
        let smooth_cusp = SurfaceFlags {
            cusp_stratum: CuspStratum::CuspAtSmooth,
            ..Default::default()
        };
        let irr = SurfaceFlags {
            branch_curve_irreducible: true,
            ..Default::default()
        };
        for (config, flags, value, level) in [
            ("D8", no, rat(1, 3), 2),
            ("D7", no, rat(2, 5), 2),
            ("A8", no, rat(1, 2), 3),
            ("A7", no, rat(1, 2), 2),
            ("A7", irr, rat(3, 5), 3),
            ("A7+A1", irr, rat(1, 2), 2),
            ("A6", no, rat(2, 3), 2),
            ("A6+A1", no, rat(2, 3), 2),
            ("A5+A2+A1", no, rat(2, 3), 2),
            ("A4", smooth_cusp, rat(4, 5), 2),
            ("A4+A3", no, rat(4, 5), 2),
            ("D4", no, rat(1, 2), 1),
            ("E8", no, rat(1, 6), 1),
            ("A3+A1", no, ri(1), 1),
        ] {
            let row = lct_table(&cfg(config), &flags).unwrap();
            assert_eq!(row.value, value, "{config}");
            assert_eq!(row.witness_level, level, "{config}");
        }
    }

    #[test]
    fn rank4_row_capped_by_first_threshold() {
        let cusp2 = SurfaceFlags {
            cusp_stratum: CuspStratum::CuspAtA2,
            ..Default::default()
        };
        let row = lct_table(&cfg("A4+A2"), &cusp2).unwrap();
        assert_eq!(row.value, rat(2, 3));
        assert_eq!(row.witness_level, 2);
        assert!(row.witness.is_none());
    }

    #[test]
    fn witnesses_evaluate_to_their_claims() {
        let no = SurfaceFlags::default();
        let irr = SurfaceFlags {
            branch_curve_irreducible: true,
            ..Default::default()
        };
        for (config, flags) in [
            ("D8", no),
            ("D7", no),
            ("A8", no),
            ("A7", no),
            ("A7", irr),
            ("A7+A1", no),
            ("A6", no),
            ("A5", no),
            ("A4", no),
            ("E8", no),
            ("E7", no),
            ("E6+A1", no),
            ("D6+A1", no),
        ] {
            let row = lct_table(&cfg(config), &flags).unwrap();
            let w = row.witness.expect("witness expected");
            assert_eq!(w.evaluate().unwrap(), w.claimed_lct_contribution, "{config}");
            assert_eq!(w.claimed_lct_contribution, row.value, "{config}");
        }
    }

    #[test]
    fn table_value_below_first_threshold() {
        let no = SurfaceFlags::default();
        for s in ADMISSIBLE {
            let config = cfg(s);
            let row = lct_table(&config, &no).unwrap();
            let l1 = lct1_classify(&config, &no).unwrap();
            assert!(row.value <= l1, "{s}");
        }
    }

    #[test]
    fn rank6_witness_pair_is_involution_symmetric() {
        let row = lct_table(&cfg("A6"), &SurfaceFlags::default()).unwrap();
        let w = row.witness.unwrap();
        let pullbacks = w.component_pullbacks().unwrap();
        let mut l4 = pullbacks[0].1.clone();
        l4.reverse();
        assert_eq!(l4, pullbacks[1].1);
    }
}
