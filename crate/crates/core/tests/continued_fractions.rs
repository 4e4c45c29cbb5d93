use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use std::collections::HashMap;
use twobridge_core::{cf_to_fraction, fraction_to_cf, Fraction, TwistSequence};

/// Back-to-front evaluation with plain i128 numerator/denominator pairs.
fn eval_i128(entries: &[u64]) -> (i128, i128) {
    let (mut p, mut q) = (*entries.last().unwrap() as i128, 1i128);
    for &c in entries.iter().rev().skip(1) {
        // c + q/p
        let (np, nq) = (c as i128 * p + q, p);
        p = np;
        q = nq;
    }
    let g = p.gcd(&q);
    (p / g, q / g)
}

/// All compositions of `total` into positive parts.
fn compositions(total: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if total == 0 {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        return;
    }
    for c in 1..=total {
        prefix.push(c);
        compositions(total - c, prefix, out);
        prefix.pop();
    }
}

#[test]
fn canonical_sequences_are_unique_up_to_sum_12() {
    let mut seen: HashMap<(i128, i128), Vec<u64>> = HashMap::new();
    let mut count = 0;
    for total in 1..=12 {
        let mut all = Vec::new();
        compositions(total, &mut Vec::new(), &mut all);
        for entries in all {
            let seq = TwistSequence::new(entries.clone()).unwrap();
            if !seq.is_canonical() {
                // non-canonical forms collapse onto their canonical twin
                assert_eq!(cf_to_fraction(&seq), cf_to_fraction(&seq.canonical()));
                continue;
            }
            count += 1;
            let f = cf_to_fraction(&seq);
            let key = eval_i128(&entries);
            assert_eq!(f, Fraction::new(key.0, key.1).unwrap());
            if let Some(prev) = seen.insert(key, entries.clone()) {
                panic!("{prev:?} and {entries:?} both give {f}");
            }
        }
    }
    // 2^(t-2) canonical compositions of each t >= 2, plus [1]
    assert_eq!(count, 2048);
}

#[test]
fn pell_recurrence_for_the_twos_family() {
    // p_{k+1} = 2 p_k + p_{k-1}, with p_2 = 5, p_3 = 12
    let mut prev = BigInt::from(2); // p_1: [2] = 2/1
    let mut cur = BigInt::from(5);
    for k in 2..=30usize {
        let f = cf_to_fraction(&TwistSequence::repeated(2, k).unwrap());
        assert_eq!(f.numer(), &cur, "k = {k}");
        // the denominator is the previous numerator
        assert_eq!(f.denom(), &prev, "k = {k}");
        let next = &cur * 2 + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    assert_eq!(
        cf_to_fraction(&TwistSequence::repeated(2, 5).unwrap()),
        Fraction::new(70, 29).unwrap()
    );
}

#[test]
fn long_sequences_stay_exact() {
    let seq = TwistSequence::repeated(2, 10_000).unwrap();
    let f = cf_to_fraction(&seq);
    assert!(f.numer().bits() > 12_000);
    assert_eq!(fraction_to_cf(&f).unwrap(), seq);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn round_trip_from_fraction(p in 2u64..1_000_000_000_000, q_seed in 1u64..u64::MAX) {
        let q = 1 + q_seed % (p - 1);
        prop_assume!(p.gcd(&q) == 1);
        let f = Fraction::new(p, q).unwrap();
        let seq = fraction_to_cf(&f).unwrap();
        prop_assert!(seq.is_canonical());
        prop_assert_eq!(cf_to_fraction(&seq), f);
    }

    #[test]
    fn round_trip_from_sequence(entries in prop::collection::vec(1u64..50, 1..40)) {
        let seq = TwistSequence::new(entries).unwrap();
        let f = cf_to_fraction(&seq);
        prop_assert!(f.is_reduced());
        if seq.len() == 1 && seq.entries()[0] == 1 {
            // 1/1 is not in the p > q domain
            prop_assert!(fraction_to_cf(&f).is_err());
        } else {
            prop_assert_eq!(fraction_to_cf(&f).unwrap(), seq.canonical());
        }
    }

    #[test]
    fn text_round_trip(entries in prop::collection::vec(1u64..6, 1..30)) {
        let seq = TwistSequence::new(entries).unwrap();
        prop_assert_eq!(seq.to_string().parse::<TwistSequence>().unwrap(), seq.clone());
        prop_assert_eq!(seq.to_run_length().parse::<TwistSequence>().unwrap(), seq);
    }

    #[test]
    fn normalization_idempotent(p in -10_000i64..10_000, q in 1i64..10_000) {
        let f = Fraction::new_raw(p, q).unwrap();
        let once = f.reduced();
        prop_assert_eq!(once.to_string(), once.reduced().to_string());
        prop_assert!(once.is_reduced() || p == 0);
        prop_assert_eq!(once, f);
    }
}
