//! Exact fractions and the correspondence between twist sequences and
//! rational numbers: `[c1, ..., cn]` maps to `c1 + 1/(c2 + 1/(... + 1/cn))`.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

mod fraction;
mod pi;
mod sequence;

pub use fraction::Fraction;
pub use pi::cmp_two_pi;
pub use sequence::TwistSequence;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FractionError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse fraction `{0}`")]
    Parse(String),
    #[error("fraction {0} is not normalized: need p > q >= 1")]
    NotNormalized(String),
    #[error("continued fraction entry {0} does not fit in 64 bits")]
    EntryOverflow(String),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SequenceError {
    #[error("twist sequence is empty")]
    Empty,
    #[error("twist sequence entry {index} is {value}; entries must be >= 1")]
    NonPositiveEntry { index: usize, value: i64 },
    #[error("cannot parse twist sequence token `{0}`")]
    Parse(String),
}

/// Evaluates `c1 + 1/(c2 + 1/(... + 1/cn))` exactly.
///
/// Uses the convergent recurrence `h_k = c_k h_{k-1} + h_{k-2}`, so the
/// result is already in lowest terms and the cost is linear in the length.
/// Entries are at least 1, so no partial tail can vanish.
pub fn cf_to_fraction(seq: &TwistSequence) -> Fraction {
    let (mut p_prev, mut p) = (BigInt::zero(), BigInt::one());
    let (mut q_prev, mut q) = (BigInt::one(), BigInt::zero());
    for &c in seq.entries() {
        let c = BigInt::from(c);
        let p_next = &c * &p + &p_prev;
        let q_next = &c * &q + &q_prev;
        p_prev = core::mem::replace(&mut p, p_next);
        q_prev = core::mem::replace(&mut q, q_next);
    }
    Fraction::new_raw(p, q).expect("denominator of a positive continued fraction is >= 1")
}

/// Canonical positive continued fraction of `p/q` with `p > q >= 1`, via the
/// Euclidean algorithm. The last entry is at least 2 whenever the expansion
/// has more than one term.
pub fn fraction_to_cf(f: &Fraction) -> Result<TwistSequence, FractionError> {
    let f = f.reduced();
    if f.denom() < &BigInt::one() || f.numer() <= f.denom() {
        return Err(FractionError::NotNormalized(alloc::format!("{f}")));
    }
    let (mut a, mut b) = (f.numer().clone(), f.denom().clone());
    let mut entries = Vec::new();
    while !b.is_zero() {
        let (quot, rem) = a.div_rem(&b);
        let c = quot
            .to_u64()
            .ok_or_else(|| FractionError::EntryOverflow(alloc::format!("{quot}")))?;
        entries.push(c);
        a = b;
        b = rem;
    }
    Ok(TwistSequence::new(entries).expect("Euclidean quotients of p > q >= 1 are positive"))
}
