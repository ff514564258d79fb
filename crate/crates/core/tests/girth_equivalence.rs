use proptest::prelude::*;
use qcgirth::girth::bfs::girth_bfs_oracle;
use qcgirth::girth::bt::{girth_via_bt, BtForm};
use qcgirth::girth::conditions::{check_conditions_with, ConditionSystem};
use qcgirth::girth::cycles::girth_via_cycle_sums;
use qcgirth::girth::symbolic::Reading;
use qcgirth::girth::Girth;
use qcgirth::ExponentMatrix;

fn bound_matrix(max_rows: usize, max_cols: usize, max_n: usize) -> impl Strategy<Value = ExponentMatrix> {
    (2..=max_rows, 2..=max_cols, 3..=max_n).prop_flat_map(|(r, c, n)| {
        prop::collection::vec(prop::collection::vec(0..n as i64, c), r)
            .prop_map(move |rows| ExponentMatrix::from_rows(&rows).bind(n).unwrap())
    })
}

fn oracle(e: &ExponentMatrix) -> Girth {
    girth_bfs_oracle(&e.to_block().unwrap().expand().unwrap()).girth
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bt_matches_oracle(e in bound_matrix(4, 6, 40)) {
        let h = e.to_block().unwrap();
        let truth = oracle(&e);
        let power = girth_via_bt(&h, 11, BtForm::Power).girth;
        let raw = girth_via_bt(&h, 11, BtForm::Raw).girth;
        prop_assert!(power.agrees(&truth), "power {} vs oracle {}", power, truth);
        prop_assert_eq!(power, raw);
    }

    #[test]
    fn cycle_sums_match_oracle(e in bound_matrix(3, 4, 30)) {
        let truth = oracle(&e);
        let sums = girth_via_cycle_sums(&e, 12).unwrap().girth;
        prop_assert!(sums.agrees(&truth), "sums {} vs oracle {}", sums, truth);
    }

    #[test]
    fn conditions_match_oracle(e in bound_matrix(4, 6, 64)) {
        let truth = oracle(&e);
        for g in [6, 8, 10, 12, 14] {
            if ConditionSystem::for_girth(e.rows(), e.cols(), g).is_err() {
                continue;
            }
            for reading in [Reading::Triangle, Reading::Strict] {
                let pass = check_conditions_with(&e, g, reading).unwrap().passed;
                prop_assert_eq!(pass, truth.at_least(g), "g={} reading={:?} oracle={} e={:?}", g, reading, truth, e);
            }
        }
    }
}

fn three_rows() -> impl Strategy<Value = ExponentMatrix> {
    (3..=5usize, 60..=400usize).prop_flat_map(|(c, n)| {
        prop::collection::vec(prop::collection::vec(0..n as i64, c), 3)
            .prop_map(move |rows| ExponentMatrix::from_rows(&rows).bind(n).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn three_row_high_girth_conditions(e in three_rows()) {
        let truth = oracle(&e);
        for g in [10, 12] {
            for reading in [Reading::Triangle, Reading::Strict] {
                let pass = check_conditions_with(&e, g, reading).unwrap().passed;
                prop_assert_eq!(pass, truth.at_least(g), "g={} reading={:?} oracle={}", g, reading, truth);
            }
        }
    }

    #[test]
    fn two_row_twelve_cycle_conditions(n in 20..200usize, a in 0..200i64, b in 0..200i64) {
        let e = ExponentMatrix::from_rows(&[vec![0, 0], vec![a, b]]).bind(n).unwrap();
        let truth = oracle(&e);
        for reading in [Reading::Triangle, Reading::Strict] {
            let pass = check_conditions_with(&e, 14, reading).unwrap().passed;
            prop_assert_eq!(pass, truth.at_least(14), "reading={:?} oracle={}", reading, truth);
        }
    }
}
