//! The local multiplicity inequality at a simple normal crossing point and
//! its infinitely-near blow-up chain.
//!
//! A parameter tuple bounds the intersection multiplicities of a boundary
//! divisor with the two branches through the point: whenever the pair is not
//! Kawamata log terminal there but is so nearby, at least one of
//!
//! ```text
//! mult1 >= shift1 + gain1 * a1 - a2      mult2 >= shift2 + gain2 * a2 - a1
//! ```
//!
//! holds, provided the four hypothesis bullets below are satisfied. This
//! module checks instances of the hypotheses, verifies the derived
//! consequences that the case analysis relies on, and simulates the chain of
//! blow-ups whose coefficient bookkeeping drives the termination bound.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{rat, ri, Rat};

/// The six non-negative parameters of the local inequality. Serialized field
/// names follow the conventional symbols `A, B, M, N, alpha, beta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremIParams {
    /// `A`: slope of the first multiplicity bound.
    #[serde(rename = "A")]
    pub gain1: Rat,
    /// `B`: slope of the second multiplicity bound.
    #[serde(rename = "B")]
    pub gain2: Rat,
    /// `M`: constant shift of the first bound.
    #[serde(rename = "M")]
    pub shift1: Rat,
    /// `N`: constant shift of the second bound.
    #[serde(rename = "N")]
    pub shift2: Rat,
    /// `alpha`: weight of `a1` in the normalization `alpha a1 + beta a2 <= 1`.
    pub alpha: Rat,
    /// `beta`: weight of `a2`.
    pub beta: Rat,
}

impl TheoremIParams {
    pub fn new(gain1: Rat, gain2: Rat, shift1: Rat, shift2: Rat, alpha: Rat, beta: Rat) -> Result<Self> {
        let p = TheoremIParams {
            gain1,
            gain2,
            shift1,
            shift2,
            alpha,
            beta,
        };
        for (name, v) in [
            ("A", &p.gain1),
            ("B", &p.gain2),
            ("M", &p.shift1),
            ("N", &p.shift2),
            ("alpha", &p.alpha),
            ("beta", &p.beta),
        ] {
            if v.is_negative() {
                return Err(Error::InvalidInput(format!("{name} must be non-negative")));
            }
        }
        Ok(p)
    }
}

/// Bullets 2-4 of the hypothesis list (everything except the
/// `alpha a1 + beta a2 <= 1` normalization).
pub fn parameter_bullets_hold(p: &TheoremIParams) -> bool {
    let one = Rat::one();
    let two = ri(2);
    let (a, b, m, n, al, be) = (
        &p.gain1, &p.gain2, &p.shift1, &p.shift2, &p.alpha, &p.beta,
    );
    let bullet2 = a * &(b - &one) >= one && one >= m.clone().max(n.clone());
    let bullet3 = al * &(a + m - &one) >= &(a * a) * &(&(b + n - &one) * be)
        && al * &(&one - m) + a * be >= *a;
    let bullet4 = &two * m + a * n <= two
        || al * &(b + &one - &(m * b) - n) + be * &(a + &one - &(a * n) - m) >= a * b - one;
    bullet2 && bullet3 && bullet4
}

/// All four hypothesis bullets, including the normalization at `(a1, a2)`.
pub fn check_hypotheses(p: &TheoremIParams, a1: &Rat, a2: &Rat) -> bool {
    hypothesis_bullets(p, a1, a2).iter().all(|b| *b)
}

/// The four bullets individually: normalization at `(a1, a2)`, the slope
/// bound `A(B-1) >= 1 >= max(M, N)` as printed, the weight balance pair, and
/// the overflow alternative.
pub fn hypothesis_bullets(p: &TheoremIParams, a1: &Rat, a2: &Rat) -> [bool; 4] {
    let one = Rat::one();
    let two = ri(2);
    let (a, b, m, n, al, be) = (
        &p.gain1, &p.gain2, &p.shift1, &p.shift2, &p.alpha, &p.beta,
    );
    [
        al * a1 + be * a2 <= one,
        a * &(b - &one) >= one && one >= m.clone().max(n.clone()),
        al * &(a + m - &one) >= &(a * a) * &(&(b + n - &one) * be)
            && al * &(&one - m) + a * be >= *a,
        &two * m + a * n <= two
            || al * &(b + &one - &(m * b) - n) + be * &(a + &one - &(a * n) - m) >= a * b - one,
    ]
}

/// The disjunctive conclusion evaluated at explicit multiplicities.
pub fn conclusion_disjunction(
    p: &TheoremIParams,
    a1: &Rat,
    a2: &Rat,
    mult1: &Rat,
    mult2: &Rat,
) -> bool {
    *mult1 >= &p.shift1 + &(&p.gain1 * a1) - a2 || *mult2 >= &p.shift2 + &(&p.gain2 * a2) - a1
}

/// The rank-parameterized family used at the end corners of an exceptional
/// chain: for `m >= 3`,
/// `(A, B, M, N, alpha, beta) = (2, m/(m-1), 0, 0, (2m-2)/(m+1), 2/(m+1))`.
pub fn corner_params(m: i64) -> Result<TheoremIParams> {
    if m < 3 {
        return Err(Error::InvalidInput(format!(
            "corner parameter family needs m >= 3, got {m}"
        )));
    }
    TheoremIParams::new(
        ri(2),
        rat(m, m - 1),
        Rat::zero(),
        Rat::zero(),
        rat(2 * m - 2, m + 1),
        rat(2, m + 1),
    )
}

/// One derived inequality with its exact evaluation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DerivedCheck {
    pub name: String,
    pub holds: bool,
}

/// Outcome of checking the six derived consequences of the parameter
/// bullets. The precondition (the bullets themselves) is reported distinctly
/// from the conclusions: a tuple violating the bullets asserts nothing, a
/// tuple satisfying them with a failing conclusion falsifies the derivation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DerivedReport {
    pub precondition_ok: bool,
    pub checks: Vec<DerivedCheck>,
    pub all_conclusions_hold: bool,
}

/// Evaluate the six consequences derived from the parameter bullets:
/// `A+M >= 1`; `B > 1`; the bullet-4 right-hand inequality unconditionally;
/// `beta(1-N) + B alpha >= B`; `alpha(2-M)/(A+1) + beta(2-N)/(B+1) >= 1`;
/// `alpha(2-M)B + beta(1-N)(A+1) >= B(A+1)`.
pub fn verify_derived_inequalities(p: &TheoremIParams) -> DerivedReport {
    let precondition_ok = parameter_bullets_hold(p);
    let one = Rat::one();
    let two = ri(2);
    let (a, b, m, n, al, be) = (
        &p.gain1, &p.gain2, &p.shift1, &p.shift2, &p.alpha, &p.beta,
    );
    let checks = vec![
        DerivedCheck {
            name: "A + M >= 1".into(),
            holds: a + m >= one,
        },
        DerivedCheck {
            name: "B > 1".into(),
            holds: *b > one,
        },
        DerivedCheck {
            name: "alpha(B+1-MB-N) + beta(A+1-AN-M) >= AB - 1".into(),
            holds: al * &(b + &one - &(m * b) - n) + be * &(a + &one - &(a * n) - m)
                >= a * b - one.clone(),
        },
        DerivedCheck {
            name: "beta(1-N) + B alpha >= B".into(),
            holds: be * &(&one - n) + b * al >= *b,
        },
        DerivedCheck {
            name: "alpha(2-M)/(A+1) + beta(2-N)/(B+1) >= 1".into(),
            holds: &(al * &(&two - m)) / &(a + &one) + &(be * &(&two - n)) / &(b + &one) >= one,
        },
        DerivedCheck {
            name: "alpha(2-M)B + beta(1-N)(A+1) >= B(A+1)".into(),
            holds: al * &(&two - m) * b + be * &(&one - n) * &(a + &one) >= b * &(a + &one),
        },
    ];
    let all_conclusions_hold = checks.iter().all(|c| c.holds);
    DerivedReport {
        precondition_ok,
        checks,
        all_conclusions_hold,
    }
}

/// Coefficient bookkeeping for the chain of blow-ups over the crossing point:
/// after `i` steps the newest exceptional curve carries
/// `a1 + i a2 - i + m_0 + ... + m_{i-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainState {
    pub a1: Rat,
    pub a2: Rat,
    pub mults: Vec<Rat>,
    /// `coeffs[i-1]` is the coefficient after step `i`, `i = 1..=mults.len()`.
    pub coeffs: Vec<Rat>,
    /// 1-based indices `i` where the klt window `0 <= coeff < 1` fails.
    pub violations: Vec<usize>,
}

impl ChainState {
    pub fn first_violation(&self) -> Option<usize> {
        self.violations.first().copied()
    }
}

/// Evaluate the chain coefficients for given multiplicities.
pub fn simulate_chain(a1: &Rat, a2: &Rat, mults: &[Rat]) -> Result<ChainState> {
    let one = Rat::one();
    for (name, v) in [("a1", a1), ("a2", a2)] {
        if v.is_negative() || *v >= one {
            return Err(Error::InvalidInput(format!("{name} must lie in [0, 1)")));
        }
    }
    if mults.iter().any(Rat::is_negative) {
        return Err(Error::InvalidInput("multiplicities must be non-negative".into()));
    }
    let mut coeffs = Vec::with_capacity(mults.len());
    let mut violations = Vec::new();
    let mut mult_sum = Rat::zero();
    for (idx, m) in mults.iter().enumerate() {
        mult_sum += m;
        let i = ri((idx + 1) as i64);
        let c = a1 + &(a2 * &i) - &i + mult_sum.clone();
        if c.is_negative() || c >= one {
            violations.push(idx + 1);
        }
        coeffs.push(c);
    }
    Ok(ChainState {
        a1: a1.clone(),
        a2: a2.clone(),
        mults: mults.to_vec(),
        coeffs,
        violations,
    })
}

/// The termination bound `(N + B a2) / (1 - a2)` on the chain length.
pub fn chain_bound(p: &TheoremIParams, a2: &Rat) -> Result<Rat> {
    if *a2 >= Rat::one() {
        return Err(Error::InvalidInput("chain bound requires a2 < 1".into()));
    }
    Ok(&(&p.shift2 + &(&p.gain2 * a2)) / &(Rat::one() - a2.clone()))
}

/// Deterministic sampling suite: draw parameter tuples from a rational grid
/// with denominators at most `max_denominator`, keep those satisfying the
/// parameter bullets, and check the derived inequalities on each. Returns the
/// tuples that fail (an empty vector is the expected outcome; any entry
/// falsifies the derivation).
pub fn sampled_derived_failures(seed: u64, samples: usize) -> Vec<TheoremIParams> {
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(seed);
    let mut draw = |lo: i64, hi: i64| -> Rat {
        let den = rng.gen_range(1..=MAX_SAMPLE_DENOMINATOR);
        let num = rng.gen_range(lo * den..=hi * den);
        rat(num, den)
    };
    let mut failures = Vec::new();
    let mut accepted = 0;
    while accepted < samples {
        let p = TheoremIParams {
            gain1: draw(0, 6),
            gain2: draw(0, 6),
            shift1: draw(0, 1),
            shift2: draw(0, 1),
            alpha: draw(0, 6),
            beta: draw(0, 6),
        };
        if !parameter_bullets_hold(&p) {
            continue;
        }
        accepted += 1;
        if !verify_derived_inequalities(&p).all_conclusions_hold {
            failures.push(p);
        }
    }
    failures
}

pub const MAX_SAMPLE_DENOMINATOR: i64 = 12;

/// The documented seed of the sampling suite.
pub const DERIVED_SUITE_SEED: u64 = 0x1d2c_3b4a_5968_7740;
