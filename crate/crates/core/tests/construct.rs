mod common;

use common::oracle_girth;
use qcgirth::construct::*;
use qcgirth::girth::conditions::check_conditions;
use qcgirth::ExponentMatrix;

fn build(name: &str, n_c: usize, n_v: usize, g: usize, strategy: &str, seed: u64, monotone: bool) -> ConstructionResult {
    let reg = ConstructionRegistry::default();
    let mut sel = selector_by_name(strategy, seed).unwrap();
    construct(reg.get(name).unwrap(), n_c, n_v, g, sel.as_mut(), monotone, DEFAULT_NMIN_CAP).unwrap()
}

/// Oracle girth reaches the target at n_min, and some smaller N falls short.
fn certified(r: &ConstructionResult) {
    let g = r.target_girth;
    assert!(check_conditions(&r.matrix, g).unwrap().passed);
    let n = r.n_min.value().expect("n_min found");
    let at = oracle_girth(&r.matrix.bind(n).unwrap());
    assert!(at.is_none_or(|x| x >= g), "{}: girth {:?} at n_min {}", r.algorithm, at, n);
    for smaller in [n - 1, n / 2, n * 2 / 3] {
        if smaller == 0 {
            continue;
        }
        if let Ok(b) = r.matrix.bind(smaller) {
            let x = oracle_girth(&b);
            assert!(x.is_some_and(|x| x < g), "{}: girth {:?} already at N = {} < n_min {}", r.algorithm, x, smaller, n);
        }
    }
}

#[test]
fn row_algorithms_certified() {
    for (name, n_c, n_v, g) in [
        ("a2-g4", 2, 6, 8),
        ("a2-g8", 2, 6, 12),
        ("a3-g4", 3, 5, 6),
        ("a3-g6", 3, 5, 8),
        ("a3-g8", 3, 5, 10),
        ("a3-g10", 3, 4, 12),
        ("a4-g4", 4, 5, 6),
        ("a4-g6", 4, 5, 8),
        ("inductive", 4, 5, 10),
        ("doubling", 2, 6, 12),
        ("girth10-recursive", 3, 5, 10),
    ] {
        for strategy in SELECTOR_NAMES {
            for monotone in [true, false] {
                certified(&build(name, n_c, n_v, g, strategy, 3, monotone));
            }
        }
    }
}

#[test]
fn random_strategy_is_seeded() {
    let a = build("a3-g8", 3, 6, 10, "random", 11, true);
    let b = build("a3-g8", 3, 6, 10, "random", 11, true);
    assert_eq!(a.matrix, b.matrix);
    assert_eq!(a.n_min, b.n_min);
    let seeds: std::collections::BTreeSet<_> = (0..8).map(|s| build("a3-g8", 3, 6, 10, "random", s, true).matrix.single_shifts()).collect();
    assert!(seeds.len() > 1);
}

#[test]
fn known_two_row_rows() {
    let r = build("a2-g8", 2, 8, 12, "smallest", 0, true);
    assert_eq!(r.matrix.single_shifts().unwrap()[1], vec![0, 1, 3, 7, 12, 20, 30, 44]);
    let r = build("a2-g4", 2, 8, 8, "smallest", 0, true);
    assert_eq!(r.matrix.single_shifts().unwrap()[1], vec![0, 1, 2, 3, 4, 5, 6, 7]);
    assert_eq!(r.n_min.value(), Some(8));
}

#[test]
fn forbidden_sets_respected() {
    let r = build("a3-g10", 3, 6, 12, "smallest", 0, true);
    for s in &r.steps {
        assert!(!s.forbidden.contains(s.value), "({}, {}) = {} is forbidden", s.row, s.col, s.value);
    }
}

#[test]
fn nmin_matches_linear_scan() {
    // smallest N with oracle girth >= g, scanned directly
    let e = ExponentMatrix::from_rows(&[vec![0, 0, 0, 0], vec![0, 1, 3, 7], vec![0, 5, 11, 2]]);
    for g in [6, 8, 10] {
        let want = (1..400).find(|&n| e.bind(n).is_ok_and(|b| oracle_girth(&b).is_none_or(|x| x >= g)));
        assert_eq!(nmin_search(&e, g, 400).unwrap().value(), want, "girth {}", g);
    }
}

#[test]
fn infeasible_targets_reported() {
    let e = ExponentMatrix::from_rows(&[vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 4]]);
    assert!(matches!(nmin_search(&e, 8, 500).unwrap(), Nmin::NoN(_)));
    // every N <= 3 divides the 4-cycle sum 6
    let e = ExponentMatrix::from_rows(&[vec![0, 0], vec![0, 6]]);
    assert!(matches!(nmin_search(&e, 6, 3).unwrap(), Nmin::NotFound(3)));
    assert_eq!(nmin_search(&e, 6, 10).unwrap().value(), Some(4));
}
