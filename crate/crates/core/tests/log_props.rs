mod common;

use common::{d, scrolls};
use scrollcoh::log_bundle::cotangent_pieces;
use scrollcoh::{
    classify_regular_acm_log, log_splitting_type, residue_consistency, sum_cohomology,
    validate_arrangement, Arrangement, Error, Scroll, TwistGrid,
};

fn supported(s: &Scroll) -> Vec<Arrangement> {
    let max_b = if s.e() > 0 { 1 } else { 4 };
    (0..=8)
        .flat_map(|a| (0..=max_b).map(move |b| (a, b)))
        .map(|(a, b)| validate_arrangement(s, a, b).unwrap())
        .filter(Arrangement::is_supported)
        .collect()
}

#[test]
fn c1_and_chi_are_additive() {
    let grid = TwistGrid::new(-4, 4, -6, 6);
    for s in scrolls().chain([Scroll::new(3, 3).unwrap()]) {
        let arrs = supported(&s);
        assert!(!arrs.is_empty());
        for arr in arrs {
            let claimed = log_splitting_type(&arr).unwrap();
            let r = residue_consistency(&arr, &claimed, &grid).unwrap();
            assert!(r.c1_check, "{s} {arr:?}");
            let bad = r.chi_checks.iter().find(|c| !c.pass);
            assert!(bad.is_none(), "{s} {arr:?} {bad:?}");
        }
    }
}

#[test]
fn general_formula_restricts_to_the_one_curve_cases() {
    for (a0, a1) in [(1, 1), (2, 2), (3, 3)] {
        let s = Scroll::new(a0, a1).unwrap();
        for a in 1..=8 {
            let no_curve = log_splitting_type(&validate_arrangement(&s, a, 0).unwrap()).unwrap();
            assert!(no_curve.summands().contains(&d(-2, s.c())));
            assert!(no_curve.summands().contains(&d(0, a - 2)));
            let one = log_splitting_type(&validate_arrangement(&s, a, 1).unwrap()).unwrap();
            assert!(one.summands().contains(&d(-1, s.a0())));
            assert!(one.summands().contains(&d(0, a - 2)));
        }
    }
}

#[test]
fn cotangent_h1_is_picard_rank() {
    for (a0, a1) in [(1, 1), (2, 2), (3, 3)] {
        let s = Scroll::new(a0, a1).unwrap();
        let r = sum_cohomology(&s, &cotangent_pieces(&s), d(0, 0));
        assert_eq!(r.h1, 2);
    }
}

#[test]
fn too_many_curves_when_unbalanced() {
    for s in scrolls().filter(|s| s.e() > 0) {
        assert_eq!(
            validate_arrangement(&s, 5, 2),
            Err(Error::TooManyCurves { e: s.e(), b: 2 })
        );
    }
}

#[test]
fn classification_matches_closed_form() {
    for a0 in [2, 3] {
        let s = Scroll::new(a0, a0).unwrap();
        let c = s.c() as u32;
        let got = classify_regular_acm_log(&s, c + 3, 4).unwrap();
        let expected: Vec<_> = (2..=c + 1).map(|a| (a, 2)).collect();
        assert_eq!(
            got.iter().map(|x| (x.lines, x.curves)).collect::<Vec<_>>(),
            expected
        );
        for x in got {
            assert!(x.splitting.summands().contains(&d(0, 0)));
            assert!(x
                .splitting
                .summands()
                .contains(&d(0, i64::from(x.lines) - 2)));
        }
    }
}
