//! `(p, p')`-regularity on a scroll.
//!
//! `F` is `(p, p')`-regular when, with `E = F(pH + p'f)`,
//!
//! ```text
//! h^2(E(-H + (c-2)f)) = h^1(E(-H + (c-1)f)) = h^1(E(-f)) = 0.
//! ```
//!
//! "Regular" means `(0, 0)`-regular, "p-regular" means `(p, 0)`-regular, and
//! `Reg(F)` is the least `p` with `F` p-regular. A line bundle `O(aH + bf)` is
//! regular exactly when `a >= 0` and `b >= -a*a0`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extension::BundleExpr;
use crate::probe::{all_vanish, Probe, Verdict};
use crate::scroll::{DivisorClass, Scroll};

pub const H2_SHIFTED: &str = "h2(E(-H+(c-2)f))";
pub const H1_SHIFTED: &str = "h1(E(-H+(c-1)f))";
pub const H1_MINUS_F: &str = "h1(E(-f))";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub verdict: Verdict,
    pub witnesses: Vec<Probe>,
}

/// The three twists of the definition, as offsets from `pH + p'f`.
pub fn regularity_probes(s: &Scroll) -> [(&'static str, usize, DivisorClass); 3] {
    let c = s.c();
    [
        (H2_SHIFTED, 2, DivisorClass::new(-1, c - 2)),
        (H1_SHIFTED, 1, DivisorClass::new(-1, c - 1)),
        (H1_MINUS_F, 1, DivisorClass::new(0, -1)),
    ]
}

pub fn is_pp_regular(s: &Scroll, b: &BundleExpr, p: i64, pp: i64) -> RegularityReport {
    let base = DivisorClass::new(p, pp);
    let witnesses: Vec<Probe> = regularity_probes(s)
        .into_iter()
        .map(|(name, deg, off)| Probe::evaluate(s, b, name, deg, base + off))
        .collect();
    RegularityReport {
        verdict: all_vanish(&witnesses),
        witnesses,
    }
}

pub fn is_regular(s: &Scroll, b: &BundleExpr) -> RegularityReport {
    is_pp_regular(s, b, 0, 0)
}

/// `Reg(O(aH + bf)) = max(-a, ceil(-b / a0) - a)`.
pub fn reg_line(s: &Scroll, d: DivisorClass) -> i64 {
    let ceil_div = -(d.f.div_euclid(s.a0()));
    (-d.h).max(ceil_div - d.h)
}

/// Search window `[lo, hi]` for `Reg`. For sums this is the exact value; for
/// extensions it is the union of the pieces' windows widened by one.
fn reg_window(s: &Scroll, b: &BundleExpr) -> (i64, i64) {
    match b {
        BundleExpr::Sum(sum) => {
            let r = sum
                .summands()
                .iter()
                .map(|&d| reg_line(s, d))
                .max()
                .expect("Reg of the zero sheaf is -infinity");
            (r, r)
        }
        BundleExpr::Ext { sub, quot } => {
            let (a, b) = (reg_window(s, sub), reg_window(s, quot));
            (a.0.min(b.0) - 1, a.1.max(b.1) + 1)
        }
        BundleExpr::Oplus(v) => {
            let ws: Vec<_> = v.iter().map(|e| reg_window(s, e)).collect();
            (
                ws.iter().map(|w| w.0).min().expect("nonempty") - 1,
                ws.iter().map(|w| w.1).max().expect("nonempty") + 1,
            )
        }
    }
}

/// Least `p` such that `b` is p-regular.
pub fn reg(s: &Scroll, b: &BundleExpr) -> Result<i64> {
    let verdict = |p: i64| is_pp_regular(s, b, p, 0).verdict;
    let (lo, hi) = reg_window(s, b);
    let mut found = None;
    for p in lo..=hi {
        match verdict(p) {
            Verdict::True => {
                found = Some(p);
                break;
            }
            Verdict::False => {}
            Verdict::Indeterminate => return Err(Error::Indeterminate { p }),
        }
    }
    // Every piece is regular at the window top, hence so is b.
    let mut p = found.expect("p-regular at the top of the window");
    if p > lo {
        return Ok(p);
    }
    // Regularity is stable under +H, so walk down to the first failure.
    loop {
        match verdict(p - 1) {
            Verdict::False => return Ok(p),
            Verdict::True => p -= 1,
            Verdict::Indeterminate => return Err(Error::Indeterminate { p: p - 1 }),
        }
        assert!(p > lo - 10_000, "Reg = -infinity for a nonzero bundle");
    }
}

/// Global generation region for `O(D)`: `D.h >= 0` and `D.h*a0 + D.f >= 0`.
pub fn gg_region(s: &Scroll, d: DivisorClass) -> bool {
    d.h >= 0 && d.h * s.a0() + d.f >= 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(h: i64, f: i64) -> DivisorClass {
        DivisorClass::new(h, f)
    }

    #[test]
    fn regular_examples() {
        let s = Scroll::new(1, 2).unwrap();
        assert!(is_regular(&s, &BundleExpr::line(d(0, 0))).verdict.is_true());

        let r = is_regular(&s, &BundleExpr::line(d(0, -1)));
        assert_eq!(r.verdict, Verdict::False);
        let w = r.witnesses.iter().find(|w| w.name == H1_MINUS_F).unwrap();
        assert_eq!(w.value.value(), Some(1));

        assert_eq!(
            is_regular(&s, &BundleExpr::line(d(1, -2))).verdict,
            Verdict::False
        );
    }

    #[test]
    fn reg_examples() {
        for (a0, a1) in [(1, 1), (1, 2), (2, 2), (3, 5)] {
            let s = Scroll::new(a0, a1).unwrap();
            assert_eq!(reg(&s, &BundleExpr::line(d(0, 1))), Ok(0));
            assert_eq!(reg(&s, &BundleExpr::line(d(0, 0))), Ok(0));
            assert_eq!(reg(&s, &BundleExpr::line(d(1, -1))), Ok(0));
        }
        let s12 = Scroll::new(1, 2).unwrap();
        assert_eq!(reg(&s12, &BundleExpr::line(d(0, -1))), Ok(1));
        let s22 = Scroll::new(2, 2).unwrap();
        assert_eq!(reg(&s22, &BundleExpr::line(d(-3, 0))), Ok(3));
    }

    #[test]
    fn reg_of_extension() {
        let s = Scroll::new(1, 2).unwrap();
        let e = BundleExpr::ext(BundleExpr::line(d(1, -1)), BundleExpr::line(d(0, 2)));
        assert_eq!(reg(&s, &e), Ok(0));
    }

    #[test]
    fn gg_examples() {
        let s12 = Scroll::new(1, 2).unwrap();
        assert!(gg_region(&s12, d(1, 0)));
        assert!(!gg_region(&s12, d(1, -2)));
        assert!(gg_region(&Scroll::new(2, 2).unwrap(), d(0, 0)));
    }
}
