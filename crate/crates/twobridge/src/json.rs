//! JSON documents written by the command-line tool. Fractions and big
//! integers are strings so no consumer has to round them.

use serde::{Deserialize, Serialize};
use thiserror::Error;
use twobridge_core::{
    normalize, Certificate, CheckedFact, Fraction, TwistDecomposition, TwistSequence,
    TwoBridgeKnot, VolumeBounds,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotJson {
    pub p: String,
    pub q: String,
    pub is_torus: bool,
    pub components: u32,
    pub tunnel_number: Option<u32>,
}

impl From<&TwoBridgeKnot> for KnotJson {
    fn from(k: &TwoBridgeKnot) -> Self {
        KnotJson {
            p: k.p().to_string(),
            q: k.q().to_string(),
            is_torus: k.is_torus(),
            components: k.component_count(),
            tunnel_number: k.tunnel_number(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsJson {
    pub t: u64,
    pub lower_coeff: String,
    pub upper_coeff: String,
    pub lower: f64,
    pub upper: f64,
    pub vacuous: bool,
}

impl From<&VolumeBounds> for BoundsJson {
    fn from(b: &VolumeBounds) -> Self {
        BoundsJson {
            t: b.twist_number,
            lower_coeff: b.lower_coeff.to_string(),
            upper_coeff: b.upper_coeff.to_string(),
            lower: b.lower,
            upper: b.upper,
            vacuous: b.is_vacuous(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvertJson {
    pub sequence: String,
    pub fraction: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivJson {
    pub first: KnotJson,
    pub second: KnotJson,
    pub rule: String,
    pub equivalent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub sequence: String,
    pub fraction: String,
    pub crossings: usize,
    pub edges: usize,
    pub faces: usize,
    pub bigons: usize,
    pub components: usize,
    pub twist_number: usize,
    pub alternating: bool,
    pub prime: bool,
    pub pd: Vec<[u64; 4]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistJson {
    pub crossings: usize,
    pub faces: usize,
    pub bigons: usize,
    pub components: usize,
    pub connected: bool,
    pub twist_number: usize,
    pub twists: Vec<Vec<usize>>,
    pub nugatory: Vec<usize>,
    pub self_bigon_crossings: Vec<usize>,
    pub alternating: bool,
    pub prime: bool,
}

impl TwistJson {
    pub fn new(
        d: &twobridge_core::PlanarDiagram,
        t: &TwistDecomposition,
        alternating: bool,
        prime: bool,
    ) -> Self {
        TwistJson {
            crossings: d.crossing_count(),
            faces: d.face_count(),
            bigons: t.bigon_count,
            components: d.component_count(),
            connected: d.is_connected(),
            twist_number: t.twist_count,
            twists: t.twists.clone(),
            nugatory: d.nugatory_crossings(),
            self_bigon_crossings: t.self_bigon_crossings.clone(),
            alternating,
            prime,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub valid: bool,
    pub reasons: Vec<String>,
}

/// A certificate on disk. `twist_sequence` is run-length encoded ("2^200")
/// unless written expanded; both forms are accepted on read.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub target_norm: String,
    pub epsilon: String,
    pub beta_value: String,
    pub knot: KnotJson,
    pub twist_sequence: String,
    pub twist_number: u64,
    pub lower_bound: String,
    pub lower_bound_volume: f64,
    pub checked_facts: Vec<String>,
    pub delegated_hypotheses: Vec<String>,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("certificate field `{field}`: {message}")]
pub struct CertificateFieldError {
    pub field: &'static str,
    pub message: String,
}

impl CertificateJson {
    pub fn new(c: &Certificate, expand: bool) -> Self {
        CertificateJson {
            target_norm: c.target_norm.to_string(),
            epsilon: c.epsilon.to_string(),
            beta_value: c.beta_value.to_string(),
            knot: KnotJson::from(&c.knot),
            twist_sequence: if expand {
                c.twist_sequence.to_string()
            } else {
                c.twist_sequence.to_run_length()
            },
            twist_number: c.twist_number,
            lower_bound: c.lower_bound.to_string(),
            lower_bound_volume: c.lower_bound_volume(),
            checked_facts: c.checked_facts.iter().map(ToString::to_string).collect(),
            delegated_hypotheses: c.delegated_hypotheses.clone(),
        }
    }

    /// Rebuilds the certificate. The knot is normalized from `p/q`; whether
    /// its recorded flags agree is reported by [`CertificateJson::knot_flags_match`].
    pub fn to_certificate(&self) -> Result<Certificate, CertificateFieldError> {
        fn field<T, E: ToString>(
            name: &'static str,
            r: Result<T, E>,
        ) -> Result<T, CertificateFieldError> {
            r.map_err(|e| CertificateFieldError {
                field: name,
                message: e.to_string(),
            })
        }
        let fraction = |name, s: &str| field(name, s.parse::<Fraction>());
        let integer = |name, s: &str| match s.parse::<Fraction>() {
            Ok(f) if f.is_integer() && !s.contains(['/', '.']) => Ok(f),
            _ => Err(CertificateFieldError {
                field: name,
                message: format!("`{s}` is not an integer"),
            }),
        };
        let knot_fraction = field(
            "knot",
            Fraction::new_raw(
                integer("knot.p", &self.knot.p)?.numer().clone(),
                integer("knot.q", &self.knot.q)?.numer().clone(),
            ),
        )?;
        Ok(Certificate {
            target_norm: fraction("target_norm", &self.target_norm)?,
            epsilon: fraction("epsilon", &self.epsilon)?,
            beta_value: fraction("beta_value", &self.beta_value)?,
            knot: field("knot", normalize(&knot_fraction))?,
            twist_sequence: field(
                "twist_sequence",
                self.twist_sequence.parse::<TwistSequence>(),
            )?,
            twist_number: self.twist_number,
            lower_bound: fraction("lower_bound", &self.lower_bound)?,
            checked_facts: self
                .checked_facts
                .iter()
                .map(|s| field("checked_facts", s.parse::<CheckedFact>()))
                .collect::<Result<_, _>>()?,
            delegated_hypotheses: self.delegated_hypotheses.clone(),
        })
    }

    pub fn knot_flags_match(&self, c: &Certificate) -> bool {
        self.knot == KnotJson::from(&c.knot)
    }
}
