//! Two-sided hyperbolic volume bounds from the twist number of a prime
//! alternating diagram:
//!
//! ```text
//! v3 * (t - 2) / 2  <=  vol(S^3 - K)  <  v3 * (16 t - 16)
//! ```
//!
//! Both bounds are kept as exact rational multiples of `v3`; the `f64` values
//! are for display only.

use crate::rational::Fraction;

/// Volume of the regular ideal hyperbolic tetrahedron.
pub const V3: f64 = 1.014_941_606_409_653_6;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum BoundsError {
    #[error("twist number must be >= 1, got {0}")]
    TwistNumber(i64),
    #[error("expected a nonnegative value, got {0}")]
    Negative(f64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct VolumeBounds {
    pub twist_number: u64,
    /// `(t - 2) / 2`.
    pub lower_coeff: Fraction,
    /// `16 t - 16`.
    pub upper_coeff: Fraction,
    pub lower: f64,
    pub upper: f64,
}

impl VolumeBounds {
    /// True when no positive volume fits strictly below the upper bound,
    /// i.e. `t = 1`.
    pub fn is_vacuous(&self) -> bool {
        !self.upper_coeff.is_positive()
    }
}

pub fn lackenby_bounds(t: i64) -> Result<VolumeBounds, BoundsError> {
    if t < 1 {
        return Err(BoundsError::TwistNumber(t));
    }
    let lower_coeff = Fraction::new(t - 2, 2).unwrap();
    let upper_coeff = Fraction::from(16 * t - 16);
    Ok(VolumeBounds {
        twist_number: t as u64,
        lower: lower_coeff.to_f64() * V3,
        upper: upper_coeff.to_f64() * V3,
        lower_coeff,
        upper_coeff,
    })
}

/// `|M| = vol(M) / v3`.
pub fn norm_from_volume(vol: f64) -> Result<f64, BoundsError> {
    if vol.is_nan() || vol < 0.0 {
        return Err(BoundsError::Negative(vol));
    }
    Ok(vol / V3)
}

/// `vol(M) = v3 |M|`.
pub fn volume_from_norm(norm: f64) -> Result<f64, BoundsError> {
    if norm.is_nan() || norm < 0.0 {
        return Err(BoundsError::Negative(norm));
    }
    Ok(norm * V3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_two() {
        let b = lackenby_bounds(2).unwrap();
        assert_eq!(b.lower_coeff, Fraction::zero());
        assert_eq!(b.lower, 0.0);
        assert_eq!(b.upper_coeff, Fraction::from(16i64));
        assert!((b.upper - 16.239).abs() < 1e-3);
        assert!(!b.is_vacuous());
    }

    #[test]
    fn t_one_is_vacuous() {
        let b = lackenby_bounds(1).unwrap();
        assert_eq!(b.lower_coeff, Fraction::new(-1, 2).unwrap());
        assert!((b.lower + V3 / 2.0).abs() < 1e-15);
        assert_eq!(b.upper, 0.0);
        assert!(b.is_vacuous());
    }

    #[test]
    fn t_two_hundred() {
        let b = lackenby_bounds(200).unwrap();
        assert_eq!(b.lower_coeff, Fraction::from(99i64));
        assert!((b.lower - 100.479).abs() < 1e-3);
    }

    #[test]
    fn rejects_non_positive() {
        assert_eq!(lackenby_bounds(0), Err(BoundsError::TwistNumber(0)));
        assert_eq!(lackenby_bounds(-3), Err(BoundsError::TwistNumber(-3)));
        assert!(norm_from_volume(-1.0).is_err());
        assert!(volume_from_norm(f64::NAN).is_err());
    }

    #[test]
    fn conversions() {
        assert_eq!(norm_from_volume(V3).unwrap(), 1.0);
        assert_eq!(volume_from_norm(0.0).unwrap(), 0.0);
        let back = norm_from_volume(volume_from_norm(99.0).unwrap()).unwrap();
        assert!((back - 99.0).abs() <= 99.0 * 1e-12);
    }
}
