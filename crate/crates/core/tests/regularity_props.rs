mod common;

use common::{d, full_grid, scrolls, small_sums};
use scrollcoh::{
    gg_region, is_pp_regular, is_regular, line_cohomology, reg, restricted_cohomology,
    sum_cohomology, BundleExpr, DivisorClass, LineBundleSum, Scroll, Verdict,
};

fn regular_sums(s: &Scroll) -> Vec<LineBundleSum> {
    small_sums()
        .into_iter()
        .filter(|b| is_regular(s, &BundleExpr::Sum(b.clone())).verdict.is_true())
        .collect()
}

/// Brute force: scan p upward from far below.
fn reg_brute(s: &Scroll, b: &BundleExpr) -> i64 {
    (-60..60)
        .find(|&p| is_pp_regular(s, b, p, 0).verdict.is_true())
        .expect("regular somewhere in the window")
}

#[test]
fn line_bundle_regular_region() {
    for s in scrolls() {
        for x in full_grid() {
            let closed = x.h >= 0 && x.f >= -x.h * s.a0();
            let v = is_regular(&s, &BundleExpr::line(x)).verdict;
            assert_eq!(
                v,
                if closed {
                    Verdict::True
                } else {
                    Verdict::False
                },
                "{s} {x}"
            );
        }
    }
}

#[test]
fn reg_closed_form_matches_brute_force() {
    for s in scrolls() {
        for x in full_grid() {
            let b = BundleExpr::line(x);
            assert_eq!(reg(&s, &b), Ok(reg_brute(&s, &b)), "{s} {x}");
        }
        for sum in small_sums().into_iter().step_by(5) {
            let b = BundleExpr::Sum(sum);
            assert_eq!(reg(&s, &b), Ok(reg_brute(&s, &b)));
        }
    }
}

#[test]
fn reg_of_generators_is_zero() {
    for s in scrolls() {
        for x in [d(0, 0), d(0, 1), d(1, -1)] {
            assert_eq!(reg(&s, &BundleExpr::line(x)), Ok(0));
        }
    }
}

#[test]
fn regularity_is_stable_under_positive_twists() {
    for s in scrolls() {
        for b in regular_sums(&s) {
            let e = BundleExpr::Sum(b);
            for p in 0..=5 {
                for pp in 0..=5 {
                    assert!(is_pp_regular(&s, &e, p, pp).verdict.is_true());
                }
            }
        }
    }
}

#[test]
fn regular_line_bundles_lie_in_gg_region() {
    for s in scrolls() {
        for x in full_grid() {
            if is_regular(&s, &BundleExpr::line(x)).verdict.is_true() {
                assert!(gg_region(&s, x), "{s} {x}");
            }
        }
    }
}

#[test]
fn regular_sums_have_h2_and_h1_vanishing() {
    for s in scrolls() {
        let c = s.c();
        for b in regular_sums(&s) {
            for a in 0..=4 {
                for k in 0..=4 {
                    assert_eq!(sum_cohomology(&s, &b, d(a - 1, c - 2 + k)).h2, 0);
                }
            }
            for t in -1..=6 {
                assert_eq!(sum_cohomology(&s, &b, d(0, t)).h1, 0, "{s} {b} t={t}");
            }
        }
    }
}

#[test]
fn regular_sums_restricted_to_fibres() {
    for s in scrolls() {
        for b in regular_sums(&s) {
            for a in 0..=3 {
                for k in -4..=4 {
                    let (_, h1) =
                        restricted_cohomology(&s, &b, DivisorClass::F, d(a - 1, k)).unwrap();
                    assert_eq!(h1, 0);
                }
            }
        }
    }
}

#[test]
fn regular_sums_restricted_to_hyperplanes() {
    for s in scrolls() {
        let c = s.c();
        for b in regular_sums(&s) {
            for a in 0..=3 {
                for k in 0..=3 {
                    let h = DivisorClass::H;
                    assert_eq!(
                        restricted_cohomology(&s, &b, h, d(0, c - 1 + k)).unwrap().1,
                        0
                    );
                    assert_eq!(
                        restricted_cohomology(&s, &b, h, d(a + 1, k - 1)).unwrap().1,
                        0
                    );
                }
            }
        }
    }
}

#[test]
fn multiplication_by_fibre_sections_is_onto() {
    for s in scrolls() {
        for b in regular_sums(&s) {
            let h0 = |t| sum_cohomology(&s, &b, d(0, t)).h0 as i64;
            assert_eq!(h0(1), 2 * h0(0) - h0(-1), "{s} {b}");
        }
    }
}

#[test]
fn non_regular_line_bundles_have_a_positive_witness() {
    for s in scrolls() {
        for x in full_grid() {
            let r = is_regular(&s, &BundleExpr::line(x));
            if r.verdict == Verdict::False {
                assert!(r.witnesses.iter().any(|w| w.value.lo > 0));
            }
            if r.verdict == Verdict::True {
                assert!(r
                    .witnesses
                    .iter()
                    .all(|w| w.value.hi == 0 && w.value.is_forced()));
            }
        }
    }
}

#[test]
fn regular_region_sign_convention() {
    // O(aH - bf) regular iff a >= 0 and b <= a*a0
    for s in scrolls() {
        for a in -3..=4 {
            for b in -10..=10 {
                let v = is_regular(&s, &BundleExpr::line(d(a, -b)))
                    .verdict
                    .is_true();
                assert_eq!(v, a >= 0 && b <= a * s.a0());
            }
        }
        // sanity: O itself has h0 = 1
        assert_eq!(line_cohomology(&s, d(0, 0)).h0, 1);
    }
}
