mod common;

use arithcorr::arith::{arithmetic_autocorr, distribution, sigma, two_row_value};
use arithcorr::gf2m::FieldContext;
use arithcorr::sequences::m_sequence;
use proptest::prelude::*;

fn periodic_bits() -> impl Strategy<Value = Vec<bool>> {
    prop::collection::vec(any::<bool>(), 2..=64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn shift_invariance(bits in periodic_bits(), t in 0usize..64, tau in 1usize..64) {
        let s = common::seq(&bits);
        let n = s.period();
        let (t, tau) = (t % n, 1 + (tau - 1) % (n - 1));
        let base = arithmetic_autocorr(&s, tau);
        prop_assume!(base.is_ok());
        prop_assert_eq!(arithmetic_autocorr(&s.rotate(t), tau), base);
    }

    #[test]
    fn matches_u128_oracle_and_bound(bits in periodic_bits(), tau in 1usize..64) {
        let s = common::seq(&bits);
        let n = s.period();
        let tau = 1 + (tau - 1) % (n - 1);
        let expected = common::direct_u128(&bits, &common::rotated(&bits, tau));
        match arithmetic_autocorr(&s, tau) {
            Ok(v) => {
                prop_assert_eq!(Some(v), expected);
                prop_assert!(v.abs() <= n as i64 - 2);
            }
            Err(_) => prop_assert_eq!(expected, None),
        }
    }

    #[test]
    fn row_swap_negates(a in periodic_bits(), b_seed in any::<u64>()) {
        let b: Vec<bool> = (0..a.len()).map(|i| (b_seed >> (i % 64)) & 1 == 1).collect();
        let (sa, sb) = (common::seq(&a), common::seq(&b));
        let ab = two_row_value(&sa, &sb).unwrap();
        let ba = two_row_value(&sb, &sa).unwrap();
        prop_assert_eq!(ab.map(|v| -v), ba);
    }

    #[test]
    fn sigma_is_the_binary_value(bits in prop::collection::vec(any::<bool>(), 2..=127)) {
        let expected = bits.iter().enumerate().fold(0u128, |acc, (i, &b)| acc | (b as u128) << i);
        prop_assert_eq!(sigma(&common::seq(&bits)).to_u128(), Some(expected));
    }
}

#[test]
fn magnitude_bound_for_m_sequences() {
    for m in 2..=12 {
        let s = m_sequence(&FieldContext::builtin(m).unwrap());
        let bound = (1i64 << (m - 1)) - 1;
        for tau in 1..s.period() {
            let v = arithmetic_autocorr(&s, tau).unwrap();
            assert!(v.abs() <= bound, "m={m} tau={tau} A={v}");
        }
    }
}

#[test]
fn distribution_total_is_n_minus_one() {
    for m in 2..=10 {
        let s = m_sequence(&FieldContext::builtin(m).unwrap());
        assert_eq!(distribution(&s).unwrap().total(), s.period() as u64 - 1);
    }
}

#[test]
fn m4_distribution() {
    let s = m_sequence(&FieldContext::builtin(4).unwrap());
    assert_eq!(
        distribution(&s).unwrap().to_json(),
        r#"{"-7":1,"-3":2,"-1":4,"1":4,"3":2,"7":1}"#
    );
}

#[test]
fn long_sequences_cross_many_words() {
    // beyond the u128 oracle; rely on shift invariance instead
    let bits: Vec<bool> = (0..1000).map(|i| (i * i + 3 * i) % 7 < 3).collect();
    let s = common::seq(&bits);
    for tau in [1, 63, 64, 65, 500, 999] {
        let v = arithmetic_autocorr(&s, tau).unwrap();
        assert_eq!(arithmetic_autocorr(&s.rotate(137), tau).unwrap(), v);
        assert!(v.abs() <= 998);
    }
}
