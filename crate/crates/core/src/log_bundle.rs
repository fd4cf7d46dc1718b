//! Logarithmic cotangent bundles of arrangements of fibres `L_i in |f|` and
//! rational curves `C_j in |H - a1 f|`.
//!
//! The splitting types computed here are checked numerically against the
//! residue sequence
//!
//! ```text
//! 0 -> Omega^1_X -> Omega^1_X(log D) -> (+) O_{D_i} -> 0
//! ```
//!
//! with `Omega^1_X` filtered by `O(-2f)` and `O(-2H + cf)`. Both `c1` and the
//! Euler characteristic of every twist must be additive.

use serde::Serialize;

use crate::cohomology::{euler_rr, sum_cohomology, LineBundleSum};
use crate::error::{Error, Result};
use crate::extension::BundleExpr;
use crate::regularity::is_regular;
use crate::scroll::{DivisorClass, Scroll};
use crate::splitting::is_acm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Arrangement {
    pub scroll: Scroll,
    /// Number of fibres.
    pub lines: u32,
    /// Number of curves in `|H - a1 f|`.
    pub curves: u32,
}

impl Arrangement {
    /// Whether the arrangement falls under one of the computed splitting
    /// formulas: any counts when `e = 0`; at most one curve and at least
    /// `e + 1` lines when `e > 0`.
    pub fn is_supported(&self) -> bool {
        let e = self.scroll.e();
        e == 0 || (self.curves <= 1 && i64::from(self.lines) > e)
    }

    /// Caveats attached to the computed splitting type.
    pub fn flags(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.is_supported() {
            out.push("unsupported");
        }
        if self.scroll.e() == 0 && self.lines == 0 && self.curves == 1 {
            out.push("formula-only: no inductive argument covers 0 lines and 1 curve");
        }
        out
    }
}

pub fn validate_arrangement(s: &Scroll, a: i64, b: i64) -> Result<Arrangement> {
    if a < 0 || b < 0 {
        return Err(Error::NegativeCount { a, b });
    }
    if s.e() > 0 && b >= 2 {
        return Err(Error::TooManyCurves { e: s.e(), b });
    }
    let count = |n: i64| u32::try_from(n).map_err(|_| Error::NegativeCount { a, b });
    Ok(Arrangement {
        scroll: *s,
        lines: count(a)?,
        curves: count(b)?,
    })
}

/// The split cotangent pieces `O(-2f)` and `O(-2H + cf)`.
pub fn cotangent_pieces(s: &Scroll) -> LineBundleSum {
    LineBundleSum::new(vec![DivisorClass::new(0, -2), DivisorClass::new(-2, s.c())])
}

/// `Omega^1_X(log D)` as a sum of two line bundles.
pub fn log_splitting_type(arr: &Arrangement) -> Result<LineBundleSum> {
    let (a, b) = (i64::from(arr.lines), i64::from(arr.curves));
    if !arr.is_supported() {
        return Err(Error::UnsupportedArrangement { a, b });
    }
    let s = &arr.scroll;
    let lines = DivisorClass::new(0, a - 2);
    let other = if s.e() == 0 {
        DivisorClass::new(b - 2, s.c() - b * s.a1())
    } else if b == 0 {
        DivisorClass::new(-2, s.c())
    } else {
        DivisorClass::new(-1, s.a0())
    };
    Ok(LineBundleSum::new(vec![lines, other]))
}

/// Inclusive rectangle of twists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwistGrid {
    pub h: (i64, i64),
    pub f: (i64, i64),
}

impl TwistGrid {
    pub fn new(hmin: i64, hmax: i64, fmin: i64, fmax: i64) -> Self {
        TwistGrid {
            h: (hmin, hmax),
            f: (fmin, fmax),
        }
    }

    /// Row-major: `h` outer, `f` inner.
    pub fn iter(&self) -> impl Iterator<Item = DivisorClass> + '_ {
        (self.h.0..=self.h.1)
            .flat_map(move |h| (self.f.0..=self.f.1).map(move |f| DivisorClass::new(h, f)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiCheck {
    pub twist: DivisorClass,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LogReport {
    pub claimed: LineBundleSum,
    pub c1_check: bool,
    pub chi_checks: Vec<ChiCheck>,
}

impl LogReport {
    pub fn passes(&self) -> bool {
        self.c1_check && self.chi_checks.iter().all(|c| c.pass)
    }
}

/// Checks `claimed` against the residue sequence. The left side of each
/// `chi` check comes from the cohomology of `claimed`; the right side from
/// Riemann-Roch for the cotangent pieces plus `deg + 1` on each `P^1`
/// component of the arrangement.
pub fn residue_consistency(
    arr: &Arrangement,
    claimed: &LineBundleSum,
    grid: &TwistGrid,
) -> Result<LogReport> {
    if claimed.rank() != 2 {
        return Err(Error::RankMismatch(claimed.rank()));
    }
    let s = &arr.scroll;
    let (a, b) = (i64::from(arr.lines), i64::from(arr.curves));
    let expected_c1 = s.canonical() + a * DivisorClass::F + b * s.directrix();
    let pieces = cotangent_pieces(s);

    let mut chi_checks = Vec::new();
    for t in grid.iter() {
        let lhs = sum_cohomology(s, claimed, t).chi();
        let mut rhs = 0;
        for &p in pieces.summands() {
            rhs += euler_rr(s, p + t)?;
        }
        rhs += a * (s.restriction_degree(t, DivisorClass::F) + 1);
        rhs += b * (s.restriction_degree(t, s.directrix()) + 1);
        chi_checks.push(ChiCheck {
            twist: t,
            lhs,
            rhs,
            pass: lhs == rhs,
        });
    }
    Ok(LogReport {
        claimed: claimed.clone(),
        c1_check: claimed.c1() == expected_c1,
        chi_checks,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LogClass {
    pub lines: u32,
    pub curves: u32,
    pub splitting: LineBundleSum,
}

/// All arrangements with at most `max_a` lines and `max_b` curves whose
/// logarithmic bundle is regular and ACM. Needs `e = 0` and `c > 2`.
pub fn classify_regular_acm_log(s: &Scroll, max_a: u32, max_b: u32) -> Result<Vec<LogClass>> {
    if s.e() != 0 {
        return Err(Error::HypothesisViolated("e = 0 required"));
    }
    if s.c() <= 2 {
        return Err(Error::HypothesisViolated("c > 2 required"));
    }
    let mut out = Vec::new();
    for a in 0..=max_a {
        for b in 0..=max_b {
            let arr = validate_arrangement(s, a.into(), b.into())?;
            let split = log_splitting_type(&arr)?;
            let e = BundleExpr::Sum(split.clone());
            if is_regular(s, &e).verdict.is_true() && is_acm(s, &e).verdict.is_true() {
                out.push(LogClass {
                    lines: a,
                    curves: b,
                    splitting: split,
                });
            }
        }
    }
    Ok(out)
}
