//! Property tests against independent oracles.

use proptest::prelude::*;
use ratiomono::fuzz::gen_positive_seq;
use ratiomono::numeric::{binomial, parse_rational, ratio_leq};
use ratiomono::shape::{
    audit_implications, check_log_concave, check_nonneg_nondecreasing, check_ratio_monotone, check_spiral,
    check_unimodal, Property, RatioChain, Status, Witness,
};
use ratiomono::theorem::{edge_inequality_holds, induction_replay, lemma3_gap, s1_rearranged, s1_sum};
use ratiomono::{BigInt, CoeffSeq, Polynomial, Rational, ShiftAlgorithm};

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=30).prop_map(|(n, d)| Rational::ratio(n, d))
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=40, 1i64..=6).prop_map(|(n, d)| Rational::ratio(n, d))
}

fn positive_seq(max_len: usize) -> impl Strategy<Value = CoeffSeq> {
    prop::collection::vec(positive_rational(), 1..=max_len).prop_map(|v| CoeffSeq::new(v).unwrap())
}

fn nondecreasing_seq(max_len: usize) -> impl Strategy<Value = CoeffSeq> {
    prop::collection::vec(0i64..=50, 1..=max_len).prop_map(|mut v| {
        v.sort_unstable();
        CoeffSeq::from_ints(&v)
    })
}

/// Pascal's triangle up to row `n`.
fn pascal(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![BigInt::from(1); i + 1];
        for k in 1..i {
            row[k] = &prev[k - 1] + &prev[k];
        }
        rows.push(row);
    }
    rows
}

#[test]
fn binomial_matches_pascal_triangle() {
    let rows = pascal(120);
    for (n, row) in rows.iter().enumerate() {
        for (k, expected) in row.iter().enumerate() {
            assert_eq!(&binomial(n as u64, k as u64), expected, "C({n},{k})");
            assert_eq!(binomial(n as u64, k as u64), binomial(n as u64, (n - k) as u64));
        }
        assert_eq!(binomial(n as u64, n as u64 + 1), BigInt::from(0));
    }
}

// ---- ratio oracles: plain division on rationals, no cross-multiplication.

fn oracle_ratio_monotone(a: &[Rational]) -> bool {
    let m = a.len() - 1;
    let chain = |pairs: Vec<(usize, usize)>| -> bool {
        let ratios: Vec<Rational> = pairs.iter().map(|&(n, d)| &a[n] / &a[d]).collect();
        ratios.windows(2).all(|w| w[0] <= w[1]) && ratios.last().map_or(true, |r| *r <= Rational::one())
    };
    let a_len = if m == 0 { 0 } else { (m - 1) / 2 + 1 };
    let chain_a = (0..a_len).map(|i| (m - i, i)).collect();
    let chain_b = (1..=m / 2).map(|i| (i - 1, m - i)).collect();
    chain(chain_a) && chain(chain_b)
}

fn oracle_unimodal(a: &[Rational]) -> bool {
    (0..a.len()).any(|r| (0..r).all(|i| a[i] <= a[i + 1]) && (r..a.len() - 1).all(|i| a[i] >= a[i + 1]))
}

fn oracle_spiral(a: &[Rational]) -> bool {
    // a_m <= a_0 <= a_{m-1} <= a_1 <= ...: a_{m-i} <= a_i and a_i <= a_{m-1-i}.
    let m = a.len() - 1;
    (0..=m).all(|i| {
        let first = m - i <= i || a[m - i] <= a[i];
        let second = m < 1 + i || m - 1 - i < i || a[i] <= a[m - 1 - i];
        first && second
    })
}

fn oracle_log_concave(a: &[Rational]) -> bool {
    // consecutive ratios a_{k-1}/a_k nondecreasing
    let ratios: Vec<Rational> = a.windows(2).map(|w| &w[0] / &w[1]).collect();
    ratios.windows(2).all(|w| w[0] <= w[1])
}

fn reproduces(seq: &CoeffSeq, w: &Witness) -> bool {
    match w {
        Witness::NegativeEntry { index, value } => seq[*index] == *value && value.is_negative(),
        Witness::Decrease { index, left, right } => {
            seq[*index] == *left && seq[index + 1] == *right && left > right
        }
        Witness::Valley { descent, ascent, values } => {
            descent < ascent
                && values == &[seq[*descent].clone(), seq[descent + 1].clone(), seq[*ascent].clone(), seq[ascent + 1].clone()]
                && values[0] > values[1]
                && values[2] < values[3]
        }
        Witness::ChainLink { left, right, left_value, right_value } => {
            seq[*left] == *left_value && seq[*right] == *right_value && left_value > right_value
        }
        Witness::NegativeDiscriminant { k, values, discriminant } => {
            let recomputed = &seq[*k] * &seq[*k] - &seq[k + 1] * &seq[k - 1];
            recomputed == *discriminant && discriminant.is_negative() && values[1] == seq[*k]
        }
        Witness::RatioLink { chain: _, left, right } => {
            let left_ok = seq[left.num_index] == left.num && seq[left.den_index] == left.den;
            match right {
                Some(r) => {
                    left_ok
                        && seq[r.num_index] == r.num
                        && seq[r.den_index] == r.den
                        && &left.num / &left.den > &r.num / &r.den
                }
                None => left_ok && left.num > left.den,
            }
        }
        Witness::InternalZero { index } => {
            seq[*index].is_zero()
                && seq.iter().take(*index).any(|a| !a.is_zero())
                && seq.iter().skip(index + 1).any(|a| !a.is_zero())
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn parse_render_round_trip(r in rational()) {
        prop_assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn ratio_leq_is_total_preorder(
        p in (rational(), positive_rational()),
        q in (rational(), positive_rational()),
        s in (rational(), positive_rational()),
    ) {
        let leq = |x: &(Rational, Rational), y: &(Rational, Rational)| ratio_leq(&x.0, &x.1, &y.0, &y.1).unwrap();
        prop_assert!(leq(&p, &p));
        prop_assert!(leq(&p, &q) || leq(&q, &p));
        if leq(&p, &q) && leq(&q, &s) {
            prop_assert!(leq(&p, &s));
        }
        prop_assert_eq!(leq(&p, &q), &p.0 / &p.1 <= &q.0 / &q.1);
    }

    #[test]
    fn pascal_rule(n in 1u64..200, k in 1u64..200) {
        prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    }

    #[test]
    fn checkers_agree_with_oracles(seq in positive_seq(9)) {
        let a = seq.as_slice();
        prop_assert_eq!(check_ratio_monotone(&seq).is_holds(), oracle_ratio_monotone(a));
        prop_assert_eq!(check_unimodal(&seq).is_holds(), oracle_unimodal(a));
        prop_assert_eq!(check_spiral(&seq).is_holds(), oracle_spiral(a));
        prop_assert_eq!(check_log_concave(&seq).is_holds(), oracle_log_concave(a));
    }

    #[test]
    fn witnesses_reproduce(seq in prop::collection::vec(-3i64..=12, 1..=9)) {
        let seq = CoeffSeq::from_ints(&seq);
        for property in Property::ALL {
            let v = property.check(&seq);
            match v.status {
                Status::Fails => {
                    let w = v.witness.as_ref().expect("failure carries a witness");
                    prop_assert!(reproduces(&seq, w), "{property}: {seq} {w:?}");
                }
                Status::NotApplicable => {
                    prop_assert!(seq.first_nonpositive().is_some());
                    prop_assert!(v.detail.contains("index"));
                }
                Status::Holds => prop_assert!(v.witness.is_none()),
            }
        }
    }

    #[test]
    fn scaling_changes_no_verdict(seq in positive_seq(10), lambda in positive_rational()) {
        let scaled = seq.scaled(&lambda);
        for property in Property::ALL {
            prop_assert_eq!(property.check(&seq).status, property.check(&scaled).status);
        }
    }

    #[test]
    fn s1_forms_agree(seq in prop::collection::vec(rational(), 2..=30)) {
        let seq = CoeffSeq::new(seq).unwrap();
        prop_assert_eq!(s1_sum(&seq).unwrap(), s1_rearranged(&seq).unwrap());
    }

    #[test]
    fn s1_nonnegative_on_nondecreasing(seq in nondecreasing_seq(30).prop_filter("m >= 1", |s| s.degree() >= 1)) {
        prop_assert!(!s1_sum(&seq).unwrap().is_negative());
    }

    #[test]
    fn lemma3_gap_nonnegative(seq in prop::collection::vec(1i64..=40, 3..=25)) {
        let mut v = seq;
        v.sort_unstable();
        let rep = lemma3_gap(&CoeffSeq::from_ints(&v)).unwrap();
        prop_assert_eq!(&rep.gap, &(&rep.lhs - &rep.rhs));
        prop_assert!(!rep.gap.is_negative());
    }

    #[test]
    fn edge_inequality_on_nondecreasing(seq in nondecreasing_seq(30).prop_filter("m >= 2, a_m > 0", |s| s.degree() >= 2 && s.last().is_positive())) {
        prop_assert!(edge_inequality_holds(&seq).unwrap());
    }

    #[test]
    fn induction_replay_holds(seq in prop::collection::vec(rational(), 2..=20)) {
        let p = Polynomial::new(CoeffSeq::new(seq).unwrap());
        prop_assert!(induction_replay(&p, ShiftAlgorithm::HornerSynthetic).unwrap());
    }
}

#[test]
fn implication_lattice_over_random_sequences() {
    let mut holds = [0usize; 4];
    for trial in 0..10_000u64 {
        let seq = gen_positive_seq(2024, trial, (trial % 7) as usize, 9);
        for (i, check) in audit_implications(&seq).iter().enumerate() {
            assert!(check.consistent, "{seq}: {check:?}");
            holds[i] += usize::from(check.antecedent == Status::Holds);
        }
    }
    assert!(holds.iter().all(|&n| n > 0), "some implication was never exercised: {holds:?}");
}

#[test]
fn ratio_witness_names_chain_b() {
    // chain A holds (1/4 <= 1); chain B: a_0/a_1 = 4/1 > 1
    let v = check_ratio_monotone(&CoeffSeq::from_ints(&[4, 1, 1]));
    match v.witness {
        Some(Witness::RatioLink { chain: RatioChain::B, right: None, .. }) => {}
        other => panic!("unexpected {other:?}"),
    }
    assert!(check_nonneg_nondecreasing(&CoeffSeq::from_ints(&[4, 1, 1])).is_fails());
}
