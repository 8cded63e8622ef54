mod common;

use arithcorr::arith::two_row_value;
use arithcorr::blocks::{autocorr_via_blocks, block_type_counts, g_of};
use arithcorr::gf2m::FieldContext;
use arithcorr::sequences::m_sequence;
use proptest::prelude::*;

fn pair() -> impl Strategy<Value = (Vec<bool>, Vec<bool>)> {
    (2usize..=64).prop_flat_map(|n| {
        (
            prop::collection::vec(any::<bool>(), n),
            prop::collection::vec(any::<bool>(), n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn blocks_equal_direct_on_arbitrary_pairs((a, b) in pair()) {
        prop_assume!(a != b);
        let (sa, sb) = (common::seq(&a), common::seq(&b));
        let direct = two_row_value(&sa, &sb).unwrap();
        prop_assert_eq!(Some(autocorr_via_blocks(&sa, &sb).unwrap()), direct);
        prop_assert_eq!(direct, common::direct_u128(&a, &b));
    }

    #[test]
    fn blocks_equal_direct_on_shift_pairs(bits in prop::collection::vec(any::<bool>(), 2..=64), tau in 1usize..64) {
        let n = bits.len();
        let tau = 1 + (tau - 1) % (n - 1);
        let shifted = common::rotated(&bits, tau);
        prop_assume!(shifted != bits);
        let (sa, sb) = (common::seq(&bits), common::seq(&shifted));
        prop_assert_eq!(Some(autocorr_via_blocks(&sa, &sb).unwrap()), two_row_value(&sa, &sb).unwrap());
    }

    #[test]
    fn fast_counts_match_window_scan((a, b) in pair()) {
        prop_assume!(a != b);
        let table = block_type_counts(&common::seq(&a), &common::seq(&b)).unwrap();
        prop_assert_eq!(table.nonzero().collect::<Vec<_>>(), common::naive_block_counts(&a, &b));
        let unequal = a.iter().zip(&b).filter(|(x, y)| x != y).count() as u64;
        prop_assert_eq!(table.total(), unequal);
    }

    #[test]
    fn joint_rotation_preserves_value((a, b) in pair(), t in 0usize..64) {
        prop_assume!(a != b);
        let t = t % a.len();
        let (sa, sb) = (common::seq(&a), common::seq(&b));
        let table = block_type_counts(&sa, &sb).unwrap();
        let rotated = block_type_counts(&sa.rotate(t), &sb.rotate(t)).unwrap();
        prop_assert_eq!(&table, &rotated);
        prop_assert_eq!(
            autocorr_via_blocks(&sa, &sb).unwrap(),
            autocorr_via_blocks(&sa.rotate(t), &sb.rotate(t)).unwrap()
        );
    }
}

#[test]
fn m_sequence_runs_are_shorter_than_m_and_sum_rules_hold() {
    for m in 2..=12u32 {
        let s = m_sequence(&FieldContext::builtin(m).unwrap());
        let quarter = 1u64 << (m - 2);
        for tau in 1..s.period() {
            let table = block_type_counts(&s, &s.rotate(tau)).unwrap();
            if let Some(max) = table.max_run() {
                assert!(max < m as usize, "m={m} tau={tau} run {max}");
            }
            let ones: u64 = (0..m as usize).map(|l| table.starting_with(true, l)).sum();
            let zeros: u64 = (0..m as usize).map(|l| table.starting_with(false, l)).sum();
            assert_eq!((ones, zeros), (quarter, quarter), "m={m} tau={tau}");
            assert_eq!(
                s.period() as i64 - 2 * g_of(&table) as i64,
                autocorr_via_blocks(&s, &s.rotate(tau)).unwrap()
            );
        }
    }
}
