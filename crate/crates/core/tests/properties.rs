mod common;

use common::*;
use proptest::prelude::*;
use qcgirth::circ::CircPoly;
use qcgirth::ExponentMatrix;

fn int_matrix(r: usize, c: usize) -> impl Strategy<Value = Vec<Vec<u64>>> {
    prop::collection::vec(prop::collection::vec(0..4u64, c), r)
}

fn bound(rows: std::ops::RangeInclusive<usize>, cols: std::ops::RangeInclusive<usize>, n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = ExponentMatrix> {
    (rows, cols, n).prop_flat_map(|(r, c, n)| {
        prop::collection::vec(prop::collection::vec(0..n as i64, c), r)
            .prop_map(move |rows| ExponentMatrix::from_rows(&rows).bind(n).unwrap())
    })
}

fn perms(n: usize, m: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(Just((0..m).collect::<Vec<usize>>()).prop_shuffle(), n)
}

fn poly(n: usize) -> impl Strategy<Value = CircPoly> {
    prop::collection::vec(0..3u64, n).prop_map(CircPoly::from_coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn triangle_absorbs_added_term(a in int_matrix(4, 4), b in int_matrix(4, 4)) {
        prop_assert_eq!(check_lemma1(&a, &b), Ok(()));
    }

    #[test]
    fn bt_matches_direct_oracle(e in bound(1..=4, 1..=6, 2..=64)) {
        prop_assert_eq!(check_bt_vs_oracle(&e), Ok(()));
    }

    #[test]
    fn conditions_match_direct_oracle(e in bound(2..=4, 2..=6, 3..=64)) {
        prop_assert_eq!(check_conditions_vs_oracle(&e), Ok(()));
    }

    #[test]
    fn two_row_girth_doubles(n in 1..=4usize, m in 1..=12usize, seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let p: Vec<Vec<usize>> = (0..n).map(|_| random_perm(&mut rng, m)).collect();
        let q: Vec<Vec<usize>> = (0..n).map(|_| random_perm(&mut rng, m)).collect();
        prop_assert_eq!(check_two_row_relation(&p, &q), Ok(()));
    }

    #[test]
    fn two_row_girth_doubles_identity_top(q in perms(3, 9)) {
        let p = vec![(0..9).collect::<Vec<usize>>(); 3];
        prop_assert_eq!(check_two_row_relation(&p, &q), Ok(()));
    }

    #[test]
    fn relation_library_matches_oracle(e in bound(2..=2, 2..=5, 2..=30)) {
        prop_assert_eq!(check_relation_library(&e, 1), Ok(()));
    }

    #[test]
    fn relation_library_on_prelift_views(e in bound(2..=2, 2..=4, 2..=8), n1 in 2..=3usize) {
        let e = ExponentMatrix::from_rows(&e.single_shifts().unwrap()).bind(e.n().unwrap() * n1).unwrap();
        let v = qcgirth::prelift::matrix_prelift(&e, n1).unwrap();
        prop_assert_eq!(check_relation_library(&v.matrix, n1), Ok(()));
    }

    #[test]
    fn all_one_2x3_caps_girth(e in bound(2..=4, 3..=5, 2..=80)) {
        prop_assert_eq!(check_all_one_2x3(&e), Ok(()));
    }

    #[test]
    fn ch_girth_bounded(e in bound(3..=5, 3..=6, 2..=30)) {
        prop_assert_eq!(check_ch_bound(&e), Ok(()));
    }

    #[test]
    fn circulant_algebra(n in 1..=17usize, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut p = || CircPoly::from_coeffs((0..n).map(|_| rng.gen_range(0..3)).collect());
        let (a, b, c) = (p(), p(), p());
        prop_assert_eq!(a.mul_dense(&b), b.mul_dense(&a));
        prop_assert_eq!(a.mul_dense(&b).mul_dense(&c), a.mul_dense(&b.mul_dense(&c)));
        prop_assert_eq!(a.transpose().transpose(), a.clone());
        prop_assert_eq!(a.mul_dense(&b).transpose(), b.transpose().mul_dense(&a.transpose()));
        prop_assert_eq!(a.mul_dense(&b).weight(), a.weight() * b.weight());
        prop_assert_eq!(a.mul_sparse(&b), a.mul_dense(&b));
    }

    #[test]
    fn even_girth_only(e in bound(1..=3, 1..=5, 2..=40), _p in poly(3)) {
        if let Some(g) = oracle_girth(&e) {
            prop_assert!(g % 2 == 0);
        }
        let h = e.to_block().unwrap();
        if let Some(g) = qcgirth::girth::bt::girth_via_bt(&h, 12, qcgirth::girth::bt::BtForm::Power).girth.value() {
            prop_assert!(g % 2 == 0);
        }
    }
}

#[test]
fn oracle_on_known_graphs() {
    // 1 + x + x^3 at N = 7 is the incidence of the Fano plane: girth 6.
    let e = ExponentMatrix::new(vec![vec![qcgirth::Entry::shifts(vec![0, 1, 3])]]).unwrap().bind(7).unwrap();
    assert_eq!(oracle_girth(&e), Some(6));
    assert_eq!(dense_girth(&[vec![1, 1], vec![1, 1]]), Some(4));
    assert_eq!(dense_girth(&[vec![1, 0], vec![1, 1]]), None);
    assert_eq!(dense_girth(&[vec![2]]), Some(2));
}
