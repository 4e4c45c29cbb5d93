//! Certified 2-bridge knots of large volume.
//!
//! Given a target norm `N`, a margin `eps` and a table for the Dehn filling
//! factor `beta`, [`construct`] picks the knot of `[2, 2, ..., 2]` (an even
//! number `k` of twos) whose twist number forces
//! `(t - 2) / 2 >= beta(2 pi + eps) * N`. Only the combinatorial facts are
//! checked here. The geometric hypotheses that turn this into a closed genus-2
//! manifold of volume above `N` are carried along as [`DELEGATED_HYPOTHESES`].

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::diagram::{compute_twist_number, is_alternating, is_prime_diagram, synthesize_diagram};
use crate::rational::{cf_to_fraction, cmp_two_pi, Fraction, TwistSequence};
use crate::two_bridge::{normalize, KnotError, TwoBridgeKnot};

/// Hypotheses every certificate relies on but does not check.
pub const DELEGATED_HYPOTHESES: [&str; 4] = [
    "the knot complement X = S^3 - K is hyperbolic",
    "there is a filling slope r whose length on a maximal horoball neighborhood of the cusp exceeds 2*pi",
    "the filled manifold X(r) is hyperbolic",
    "X(r) = V ∪_S W is a genus 2 Heegaard splitting",
];

/// Margin above `2 pi` used when the caller does not choose one.
pub const DEFAULT_EPSILON: &str = "1/1000000";

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error("target norm must be positive, got {0}")]
    NonPositiveNorm(String),
    #[error("epsilon must be positive, got {0}")]
    NonPositiveEpsilon(String),
    #[error("beta table has no sample at length <= 2*pi + {0}")]
    BetaUndefined(String),
    #[error("invalid beta table: {0}")]
    InvalidBetaTable(String),
    #[error("required twist number {0} is too large to build")]
    TooLarge(String),
    #[error("construction check failed: {0}")]
    CheckFailed(String),
}

/// Sampled, non-increasing `beta: (2 pi, inf) -> [1, inf)`, read as a step
/// function: a query takes the value at the largest sampled length not above
/// it. Since `beta` is non-increasing that overestimates it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaTable {
    samples: Vec<(Fraction, Fraction)>,
}

impl BetaTable {
    pub fn new(samples: Vec<(Fraction, Fraction)>) -> Result<Self, ConstructError> {
        let bad = |msg: String| Err(ConstructError::InvalidBetaTable(msg));
        if samples.is_empty() {
            return bad("no samples".to_string());
        }
        for (i, (length, value)) in samples.iter().enumerate() {
            if cmp_two_pi(length) != Ordering::Greater {
                return bad(format!("length {length} is not above 2*pi"));
            }
            if value < &Fraction::one() {
                return bad(format!("value {value} is below 1"));
            }
            if i > 0 {
                let (prev_len, prev_val) = &samples[i - 1];
                if length <= prev_len {
                    return bad(format!("lengths not strictly increasing at {length}"));
                }
                if value > prev_val {
                    return bad(format!("values increase at length {length}"));
                }
            }
        }
        Ok(BetaTable { samples })
    }

    /// `{(6.2831854, 1)}`: the first 7-decimal length above `2 pi`, with
    /// `beta = 1`. Enough for the cusped-volume certificate alone.
    pub fn default_table() -> Self {
        let length = Fraction::new(62_831_854, 10_000_000).unwrap();
        BetaTable::new(vec![(length, Fraction::one())]).unwrap()
    }

    pub fn samples(&self) -> &[(Fraction, Fraction)] {
        &self.samples
    }

    /// Value at the largest sampled length `<= length`.
    pub fn lookup(&self, length: &Fraction) -> Option<&Fraction> {
        self.samples
            .iter()
            .rev()
            .find(|(l, _)| l <= length)
            .map(|(_, v)| v)
    }

    /// Value at the largest sampled length `<= 2 pi + eps`, compared exactly.
    pub fn lookup_above_two_pi(&self, eps: &Fraction) -> Option<&Fraction> {
        self.samples
            .iter()
            .rev()
            .find(|(l, _)| cmp_two_pi(&(l - eps)) != Ordering::Greater)
            .map(|(_, v)| v)
    }
}

/// A combinatorial fact established while building a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckedFact {
    NonTorus,
    OddDeterminant,
    PrimeDiagram,
    AlternatingDiagram,
    TwistNumber(u64),
}

impl fmt::Display for CheckedFact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckedFact::NonTorus => f.write_str("non-torus"),
            CheckedFact::OddDeterminant => f.write_str("p odd"),
            CheckedFact::PrimeDiagram => f.write_str("diagram prime"),
            CheckedFact::AlternatingDiagram => f.write_str("diagram alternating"),
            CheckedFact::TwistNumber(t) => write!(f, "twist number = {t}"),
        }
    }
}

impl core::str::FromStr for CheckedFact {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "non-torus" => CheckedFact::NonTorus,
            "p odd" => CheckedFact::OddDeterminant,
            "diagram prime" => CheckedFact::PrimeDiagram,
            "diagram alternating" => CheckedFact::AlternatingDiagram,
            _ => match s
                .strip_prefix("twist number = ")
                .and_then(|t| t.parse().ok())
            {
                Some(t) => CheckedFact::TwistNumber(t),
                None => return Err(s.to_string()),
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub target_norm: Fraction,
    pub epsilon: Fraction,
    /// `beta(2 pi + eps)` as read from the table.
    pub beta_value: Fraction,
    pub knot: TwoBridgeKnot,
    pub twist_sequence: TwistSequence,
    pub twist_number: u64,
    /// Coefficient of `v3` in the volume lower bound, `(t - 2) / 2`.
    pub lower_bound: Fraction,
    pub checked_facts: Vec<CheckedFact>,
    pub delegated_hypotheses: Vec<String>,
}

impl Certificate {
    /// Advisory floating value of the volume lower bound.
    pub fn lower_bound_volume(&self) -> f64 {
        self.lower_bound.to_f64() * crate::bounds::V3
    }
}

/// Smallest `t` with `(t - 2) / 2 >= beta * N`, i.e. `ceil(2 beta N + 2)`.
pub fn required_twist_number(norm: &Fraction, beta_value: &Fraction) -> BigInt {
    let two = Fraction::from(2i64);
    (&(&(&two * beta_value) * norm) + &two).ceil()
}

pub fn construct(
    norm: &Fraction,
    epsilon: &Fraction,
    beta: &BetaTable,
) -> Result<Certificate, ConstructError> {
    if !norm.is_positive() {
        return Err(ConstructError::NonPositiveNorm(norm.to_string()));
    }
    if !epsilon.is_positive() {
        return Err(ConstructError::NonPositiveEpsilon(epsilon.to_string()));
    }
    let beta_value = beta
        .lookup_above_two_pi(epsilon)
        .ok_or_else(|| ConstructError::BetaUndefined(epsilon.to_string()))?
        .clone();

    let required = required_twist_number(norm, &beta_value);
    let k = if required.is_even() {
        required
    } else {
        required + 1
    };
    let k = k
        .to_usize()
        .ok_or_else(|| ConstructError::TooLarge(k.to_string()))?;
    let twist_sequence = TwistSequence::repeated(2, k).expect("k >= 4");

    let derived = derive(&twist_sequence);
    let knot = derived.knot.clone().expect("[2; k] has p >= 5");
    let checks = [
        (knot.is_torus(), "knot is a torus knot"),
        (!knot.is_knot(), "p is even"),
        (!derived.prime, "diagram is not prime"),
        (!derived.alternating, "diagram is not alternating"),
        (
            derived.twist_number != k as u64,
            "twist number differs from sequence length",
        ),
    ];
    if let Some((_, msg)) = checks.iter().find(|(failed, _)| *failed) {
        return Err(ConstructError::CheckFailed(msg.to_string()));
    }
    let lower_bound = lower_coefficient(derived.twist_number);
    if lower_bound < &beta_value * norm {
        return Err(ConstructError::CheckFailed("bound inequality".to_string()));
    }

    Ok(Certificate {
        target_norm: norm.clone(),
        epsilon: epsilon.clone(),
        beta_value,
        checked_facts: derived.facts(),
        knot,
        twist_sequence,
        twist_number: derived.twist_number,
        lower_bound,
        delegated_hypotheses: DELEGATED_HYPOTHESES.iter().map(|s| s.to_string()).collect(),
    })
}

/// Everything a certificate claims, recomputed from its twist sequence.
struct Derived {
    /// `Err` for `[1]`, whose fraction `1/1` is the unknot.
    knot: Result<TwoBridgeKnot, KnotError>,
    twist_number: u64,
    prime: bool,
    alternating: bool,
}

impl Derived {
    fn facts(&self) -> Vec<CheckedFact> {
        let mut facts = Vec::new();
        if let Ok(knot) = &self.knot {
            if !knot.is_torus() {
                facts.push(CheckedFact::NonTorus);
            }
            if knot.is_knot() {
                facts.push(CheckedFact::OddDeterminant);
            }
        }
        if self.prime {
            facts.push(CheckedFact::PrimeDiagram);
        }
        if self.alternating {
            facts.push(CheckedFact::AlternatingDiagram);
        }
        facts.push(CheckedFact::TwistNumber(self.twist_number));
        facts
    }
}

fn derive(seq: &TwistSequence) -> Derived {
    let knot = normalize(&cf_to_fraction(seq));
    let diagram = synthesize_diagram(seq);
    Derived {
        knot,
        twist_number: compute_twist_number(&diagram).twist_count as u64,
        prime: is_prime_diagram(&diagram),
        alternating: is_alternating(&diagram),
    }
}

fn lower_coefficient(t: u64) -> Fraction {
    Fraction::new(BigInt::from(t) - 2, 2).unwrap()
}

/// Outcome of [`verify_certificate`].
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Verification {
    pub reasons: Vec<String>,
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        self.reasons.is_empty()
    }
}

/// Re-derives every checked fact from the twist sequence alone and compares
/// with what the certificate records.
pub fn verify_certificate(c: &Certificate) -> Verification {
    let mut reasons = Vec::new();
    let mut fail = |r: &str| {
        if !reasons.iter().any(|x: &String| x == r) {
            reasons.push(r.to_string());
        }
    };

    if !c.target_norm.is_positive() || !c.epsilon.is_positive() || c.beta_value < Fraction::one() {
        fail("invalid inputs");
    }

    let derived = derive(&c.twist_sequence);
    match &derived.knot {
        Ok(knot) => {
            if knot.is_torus() {
                fail("torus knot");
            }
            if !knot.is_knot() {
                fail("not a knot");
            }
            if *knot != c.knot {
                fail("knot mismatch");
            }
        }
        Err(_) => fail("not a 2-bridge knot"),
    }
    if !derived.prime {
        fail("diagram not prime");
    }
    if !derived.alternating {
        fail("diagram not alternating");
    }
    if derived.twist_number != c.twist_number {
        fail("twist number");
    }
    let lower = lower_coefficient(derived.twist_number);
    if lower != c.lower_bound || lower < &c.beta_value * &c.target_norm {
        fail("bound inequality");
    }
    if derived.facts() != c.checked_facts {
        fail("checked facts");
    }
    if c.delegated_hypotheses.len() != DELEGATED_HYPOTHESES.len()
        || c.delegated_hypotheses
            .iter()
            .zip(DELEGATED_HYPOTHESES)
            .any(|(a, b)| a != b)
    {
        fail("delegated hypotheses");
    }
    Verification { reasons }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn frac(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    #[test]
    fn required_twist_examples() {
        assert_eq!(
            required_twist_number(&frac("1"), &frac("1")),
            BigInt::from(4)
        );
        assert_eq!(
            required_twist_number(&frac("99"), &frac("1")),
            BigInt::from(200)
        );
        assert_eq!(
            required_twist_number(&frac("10"), &frac("3/2")),
            BigInt::from(32)
        );
        // non-integer products round up
        assert_eq!(
            required_twist_number(&frac("1/3"), &frac("1")),
            BigInt::from(3)
        );
    }

    #[test]
    fn construct_smallest() {
        let c = construct(
            &frac("1"),
            &frac(DEFAULT_EPSILON),
            &BetaTable::default_table(),
        )
        .unwrap();
        assert_eq!(c.twist_sequence.len(), 4);
        assert_eq!(c.knot.fraction().to_string(), "29/12");
        assert_eq!(c.lower_bound, Fraction::one());
        assert!(verify_certificate(&c).is_valid());
    }

    #[test]
    fn construct_bumps_odd_requirement() {
        // beta * N = 197/2 needs t = 199, bumped to 200
        let c = construct(&frac("197/2"), &frac("1/1000"), &BetaTable::default_table()).unwrap();
        assert_eq!(c.twist_number, 200);
    }

    #[test]
    fn rejects_bad_inputs() {
        let table = BetaTable::default_table();
        assert!(matches!(
            construct(&frac("0"), &frac("1"), &table),
            Err(ConstructError::NonPositiveNorm(_))
        ));
        assert!(matches!(
            construct(&frac("1"), &frac("0"), &table),
            Err(ConstructError::NonPositiveEpsilon(_))
        ));
        // 2*pi + 1e-8 lies below the default sample at 6.2831854
        assert!(matches!(
            construct(&frac("1"), &frac("1/100000000"), &table),
            Err(ConstructError::BetaUndefined(_))
        ));
    }

    #[test]
    fn beta_table_validation() {
        let ok = |l: &str, v: &str| (frac(l), frac(v));
        assert!(BetaTable::new(vec![]).is_err());
        assert!(BetaTable::new(vec![ok("6.28", "2")]).is_err());
        assert!(BetaTable::new(vec![ok("7", "1/2")]).is_err());
        assert!(BetaTable::new(vec![ok("7", "2"), ok("7", "1")]).is_err());
        assert!(BetaTable::new(vec![ok("7", "2"), ok("8", "3")]).is_err());
        let t = BetaTable::new(vec![ok("6.3", "4"), ok("7", "2"), ok("10", "3/2")]).unwrap();
        assert_eq!(t.lookup(&frac("6.2")), None);
        assert_eq!(t.lookup(&frac("8")), Some(&frac("2")));
        assert_eq!(t.lookup(&frac("10")), Some(&frac("3/2")));
        // 2*pi + 0.02 = 6.3032 picks the 6.3 sample
        assert_eq!(t.lookup_above_two_pi(&frac("0.02")), Some(&frac("4")));
        assert_eq!(t.lookup_above_two_pi(&frac("0.01")), None);
    }

    #[test]
    fn checked_fact_text_round_trip() {
        for f in [
            CheckedFact::NonTorus,
            CheckedFact::OddDeterminant,
            CheckedFact::PrimeDiagram,
            CheckedFact::AlternatingDiagram,
            CheckedFact::TwistNumber(17),
        ] {
            assert_eq!(f.to_string().parse::<CheckedFact>().unwrap(), f);
        }
        assert!("nope".parse::<CheckedFact>().is_err());
    }
}
