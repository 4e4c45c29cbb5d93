use num_integer::Integer;
use twobridge_core::{
    cf_to_fraction, equivalent, is_torus_knot, normalize, EquivalenceRule, Fraction, TwistSequence,
    TwoBridgeKnot,
};

fn all_knots(max_p: i64) -> Vec<TwoBridgeKnot> {
    let mut out = Vec::new();
    for p in 2..=max_p {
        for q in 1..p {
            if p.gcd(&q) == 1 {
                out.push(normalize(&Fraction::new_raw(p, q).unwrap()).unwrap());
            }
        }
    }
    out
}

#[test]
fn equivalence_is_an_equivalence_relation_for_p_up_to_50() {
    let knots = all_knots(50);
    for rule in [EquivalenceRule::Literal, EquivalenceRule::Classical] {
        for a in &knots {
            assert!(equivalent(a, a, rule));
            for b in knots.iter().filter(|b| b.p() == a.p()) {
                let ab = equivalent(a, b, rule);
                assert_eq!(ab, equivalent(b, a, rule));
                if !ab {
                    continue;
                }
                for c in knots.iter().filter(|c| c.p() == a.p()) {
                    if equivalent(b, c, rule) {
                        assert!(equivalent(a, c, rule), "{rule:?}: {a:?} {b:?} {c:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn literal_rule_is_identity_on_normalized_knots() {
    let knots = all_knots(30);
    for a in &knots {
        for b in &knots {
            let same = a.fraction().to_string() == b.fraction().to_string();
            assert_eq!(equivalent(a, b, EquivalenceRule::Literal), same);
        }
    }
}

#[test]
fn raw_representatives_of_one_class_agree() {
    for p in 3i64..40 {
        for q in 1..p {
            if p.gcd(&q) != 1 {
                continue;
            }
            let base = normalize(&Fraction::new_raw(p, q).unwrap()).unwrap();
            for shift in [-3i64, -1, 1, 2, 5] {
                let other = normalize(&Fraction::new_raw(p, q + shift * p).unwrap()).unwrap();
                assert!(equivalent(&base, &other, EquivalenceRule::Literal));
                assert_eq!(base, other);
            }
        }
    }
}

#[test]
fn twos_family_is_never_torus() {
    for k in 2..=30 {
        let f = cf_to_fraction(&TwistSequence::repeated(2, k).unwrap());
        let knot = normalize(&f).unwrap();
        assert!(!knot.is_torus(), "k = {k}");
        assert!(!is_torus_knot(&knot));
    }
}

#[test]
fn twos_family_parity() {
    // p sequence 2, 5, 12, 29, 70, 169, ... alternates even/odd
    let (mut prev, mut cur) = (1u128, 2u128);
    for k in 1..=30 {
        let knot = normalize(&cf_to_fraction(&TwistSequence::repeated(2, k).unwrap())).unwrap();
        assert_eq!(cur % 2 == 1, k % 2 == 0, "k = {k}");
        assert_eq!(knot.component_count(), if cur % 2 == 1 { 1 } else { 2 });
        let next = 2 * cur + prev;
        prev = cur;
        cur = next;
    }
}

#[test]
fn torus_flag_matches_integer_or_mirror() {
    for a in all_knots(60) {
        let q = a.q().clone();
        let expected = q == 1.into() || &q + 1 == *a.p();
        assert_eq!(a.is_torus(), expected);
        assert_eq!(is_torus_knot(&a), expected);
    }
    let k = normalize(&"7/6".parse().unwrap()).unwrap();
    assert!(k.is_torus());
}
