use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::One;

use super::Fraction;

/// Partial sums `S_terms` and `S_{terms+1}` of `arctan(1/m)`. The alternating
/// series has decreasing terms, so the true value lies between them.
fn arctan_inv_bounds(m: u32, terms: usize) -> (Fraction, Fraction) {
    let m = BigInt::from(m);
    let m_sq = &m * &m;
    let mut power = m.clone();
    let mut sum = Fraction::zero();
    let mut prev = Fraction::zero();
    for k in 0..=terms {
        prev = sum.clone();
        let term = Fraction::new(BigInt::one(), &power * BigInt::from(2 * k + 1)).unwrap();
        sum = if k % 2 == 0 {
            &sum + &term
        } else {
            &sum - &term
        };
        power *= &m_sq;
    }
    if prev < sum {
        (prev, sum)
    } else {
        (sum, prev)
    }
}

/// Rational enclosure `lo < 2*pi < hi` from Machin's formula
/// `pi = 16 atan(1/5) - 4 atan(1/239)`.
fn two_pi_bounds(terms: usize) -> (Fraction, Fraction) {
    let (a_lo, a_hi) = arctan_inv_bounds(5, terms);
    let (b_lo, b_hi) = arctan_inv_bounds(239, terms);
    let k32 = Fraction::from(32i64);
    let k8 = Fraction::from(8i64);
    let lo = &(&k32 * &a_lo) - &(&k8 * &b_hi);
    let hi = &(&k32 * &a_hi) - &(&k8 * &b_lo);
    (lo, hi)
}

/// Exact comparison of a rational with `2*pi`.
///
/// `2*pi` is irrational, so the answer is never `Equal`; the enclosure is
/// refined until it excludes `x`.
pub fn cmp_two_pi(x: &Fraction) -> Ordering {
    let mut terms = 8;
    loop {
        let (lo, hi) = two_pi_bounds(terms);
        if x < &lo {
            return Ordering::Less;
        }
        if x > &hi {
            return Ordering::Greater;
        }
        terms *= 2;
    }
}
