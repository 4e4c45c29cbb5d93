//! Classification of 2-bridge knots and links `K(p/q)`.

use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Fraction;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum KnotError {
    #[error("p = {0} is too small: a 2-bridge knot needs p >= 2")]
    Degenerate(String),
    #[error("gcd(p, q) != 1 for {0}")]
    NotCoprime(String),
    #[error("torus knot parameters must be >= 2, got ({0}, {1})")]
    TorusParameter(u64, u64),
}

/// `K(p/q)` with `1 <= q < p` and `gcd(p, q) = 1`, plus derived flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoBridgeKnot {
    fraction: Fraction,
    is_torus: bool,
    component_count: u32,
    tunnel_number: Option<u32>,
}

impl TwoBridgeKnot {
    pub fn fraction(&self) -> &Fraction {
        &self.fraction
    }

    pub fn p(&self) -> &BigInt {
        self.fraction.numer()
    }

    pub fn q(&self) -> &BigInt {
        self.fraction.denom()
    }

    pub fn is_torus(&self) -> bool {
        self.is_torus
    }

    /// 1 for a knot (p odd), 2 for a two-component link (p even).
    pub fn component_count(&self) -> u32 {
        self.component_count
    }

    pub fn is_knot(&self) -> bool {
        self.component_count == 1
    }

    /// Always 1 for knots; `None` for two-component links, where we make no claim.
    pub fn tunnel_number(&self) -> Option<u32> {
        self.tunnel_number
    }

    /// The mirror image `K(p/(p - q))`.
    pub fn mirror(&self) -> TwoBridgeKnot {
        let q = self.p() - self.q();
        normalize(&Fraction::new_raw(self.p().clone(), q).unwrap()).unwrap()
    }
}

/// Reduces `q` into `[1, p - 1]` and fills in the flags.
///
/// The input is taken as written: `10/4` is rejected rather than silently
/// reduced, because a common factor means the input never named a 2-bridge
/// knot. A negative fraction `-p/q` is read as `p/(-q)`, the mirror image.
pub fn normalize(f: &Fraction) -> Result<TwoBridgeKnot, KnotError> {
    let (p, q) = if f.is_negative() {
        (&-f.numer(), &-f.denom())
    } else {
        (f.numer(), f.denom())
    };
    if p < &BigInt::from(2) {
        return Err(KnotError::Degenerate(format!("{p}")));
    }
    if !p.gcd(q).is_one() {
        return Err(KnotError::NotCoprime(format!("{f}")));
    }
    let q = q.mod_floor(p);
    let is_torus = q.is_one() || (&q + 1u32) == *p;
    let component_count = if p.is_odd() { 1 } else { 2 };
    Ok(TwoBridgeKnot {
        fraction: Fraction::new_raw(p.clone(), q).unwrap(),
        is_torus,
        component_count,
        tunnel_number: (component_count == 1).then_some(1),
    })
}

/// Which equivalence relation [`equivalent`] applies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EquivalenceRule {
    /// `p = p'` and `p | (q - q')`.
    #[default]
    Literal,
    /// Additionally accepts `q q' = 1 (mod p)`.
    Classical,
}

pub fn equivalent(a: &TwoBridgeKnot, b: &TwoBridgeKnot, rule: EquivalenceRule) -> bool {
    if a.p() != b.p() {
        return false;
    }
    let p = a.p();
    if (a.q() - b.q()).mod_floor(p).is_zero() {
        return true;
    }
    match rule {
        EquivalenceRule::Literal => false,
        EquivalenceRule::Classical => (a.q() * b.q()).mod_floor(p).is_one(),
    }
}

/// `(2, n)`-torus test: `q = +-1 (mod p)`.
pub fn is_torus_knot(k: &TwoBridgeKnot) -> bool {
    let q = k.q().mod_floor(k.p());
    q.is_one() || (q + 1u32) == *k.p()
}

/// Bridge number `min(p, q)` of the `(p, q)`-torus knot.
pub fn torus_bridge_number(p: u64, q: u64) -> Result<u64, KnotError> {
    if p < 2 || q < 2 {
        return Err(KnotError::TorusParameter(p, q));
    }
    if p.gcd(&q) != 1 {
        return Err(KnotError::NotCoprime(format!("({p}, {q})")));
    }
    Ok(p.min(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn knot(p: i64, q: i64) -> TwoBridgeKnot {
        normalize(&Fraction::new_raw(p, q).unwrap()).unwrap()
    }

    #[test]
    fn reduces_q_mod_p() {
        let k = knot(5, 7);
        assert_eq!(k.fraction().to_string(), "5/2");
        assert!(!k.is_torus());
        assert_eq!(knot(5, -3).fraction().to_string(), "5/2");
    }

    #[test]
    fn figure_eight() {
        let k = knot(5, 2);
        assert_eq!(k.fraction().to_string(), "5/2");
        assert!(!k.is_torus());
        assert!(k.is_knot());
        assert_eq!(k.tunnel_number(), Some(1));
    }

    #[test]
    fn trefoil_is_torus() {
        let k = knot(3, 1);
        assert_eq!(k.fraction().to_string(), "3/1");
        assert!(k.is_torus());
        assert!(is_torus_knot(&k));
    }

    #[test]
    fn even_p_is_a_link() {
        let k = knot(12, 5);
        assert_eq!(k.component_count(), 2);
        assert_eq!(k.tunnel_number(), None);
    }

    #[test]
    fn rejects_degenerate_and_common_factor() {
        let f = |p, q| normalize(&Fraction::new_raw(p, q).unwrap());
        assert!(matches!(f(1, 1), Err(KnotError::Degenerate(_))));
        assert!(matches!(f(-1, 2), Err(KnotError::Degenerate(_))));
        assert!(matches!(f(0, 1), Err(KnotError::Degenerate(_))));
        assert_eq!(f(-5, 2).unwrap().fraction().to_string(), "5/3");
        assert!(matches!(f(10, 4), Err(KnotError::NotCoprime(_))));
    }

    #[test]
    fn normalize_is_idempotent() {
        for (p, q) in [(5, 7), (9, 2), (13, -4), (29, 12)] {
            let once = knot(p, q);
            let twice = normalize(once.fraction()).unwrap();
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn equivalence_examples() {
        let lit = EquivalenceRule::Literal;
        assert!(equivalent(&knot(5, 2), &knot(5, 7), lit));
        assert!(!equivalent(&knot(5, 2), &knot(5, 3), lit));
        assert!(!equivalent(&knot(5, 2), &knot(7, 2), lit));
        // 2 * 3 = 6 = 1 (mod 5)
        assert!(equivalent(
            &knot(5, 2),
            &knot(5, 3),
            EquivalenceRule::Classical
        ));
        assert!(!equivalent(
            &knot(7, 2),
            &knot(7, 3),
            EquivalenceRule::Classical
        ));
    }

    #[test]
    fn mirror_of_torus_is_torus() {
        let k = knot(7, 6);
        assert!(is_torus_knot(&k));
        // mirror of 7/6 is 7/1, the (2,7)-torus knot
        assert!(equivalent(
            &k.mirror(),
            &knot(7, 1),
            EquivalenceRule::Literal
        ));
        assert!(!is_torus_knot(&knot(7, 2)));
        for n in 2..40 {
            assert!(is_torus_knot(&knot(n, 1)));
        }
    }

    #[test]
    fn bridge_number() {
        assert_eq!(torus_bridge_number(2, 5), Ok(2));
        assert_eq!(torus_bridge_number(3, 2), Ok(2));
        assert_eq!(torus_bridge_number(7, 3), Ok(3));
        assert!(matches!(
            torus_bridge_number(4, 6),
            Err(KnotError::NotCoprime(_))
        ));
        assert_eq!(
            torus_bridge_number(1, 5),
            Err(KnotError::TorusParameter(1, 5))
        );
    }
}
