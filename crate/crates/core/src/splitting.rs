//! Splitting criteria, direct-summand detection, ACM and Ulrich tests.
//!
//! Conditions quantified over every integer `t` are decided exactly: for a
//! line bundle `O(aH + bf)` twisted by `tH + yf` the set of `t` with nonzero
//! `h^1` is a union of at most two explicit intervals (see
//! [`h1_support`]). For extensions, the `h^1` of the bundle can only be
//! nonzero where some constituent has nonzero `h^1`, so only those `t` are
//! probed.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::cohomology::{h1_support, LineBundleSum};
use crate::error::{Error, Result};
use crate::extension::{Bounds, BundleExpr};
use crate::probe::{all_vanish, Probe, Verdict};
use crate::regularity::is_regular;
use crate::scroll::{DivisorClass, Scroll};

/// One family `h^1(E(tH + y f)) = 0 for all t`, named by its `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SplitCondition {
    /// `y = c - 1`
    CMinus1,
    /// `y = -1`
    MinusOne,
    /// `y = 0`
    Zero,
    /// `y = a0 - 1`
    A0Minus1,
    /// `y = a1 - 1`
    A1Minus1,
    /// `y = c - 2`
    CMinus2,
}

impl SplitCondition {
    pub fn f_offset(self, s: &Scroll) -> i64 {
        match self {
            SplitCondition::CMinus1 => s.c() - 1,
            SplitCondition::MinusOne => -1,
            SplitCondition::Zero => 0,
            SplitCondition::A0Minus1 => s.a0() - 1,
            SplitCondition::A1Minus1 => s.a1() - 1,
            SplitCondition::CMinus2 => s.c() - 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SplitCondition::CMinus1 => "h1(E(tH+(c-1)f))",
            SplitCondition::MinusOne => "h1(E(tH-f))",
            SplitCondition::Zero => "h1(E(tH))",
            SplitCondition::A0Minus1 => "h1(E(tH+(a0-1)f))",
            SplitCondition::A1Minus1 => "h1(E(tH+(a1-1)f))",
            SplitCondition::CMinus2 => "h1(E(tH+(c-2)f))",
        }
    }
}

impl fmt::Display for SplitCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Conditions for splitting into twists `O(tH)`.
pub const SPLIT_TH: [SplitCondition; 2] = [SplitCondition::CMinus1, SplitCondition::MinusOne];

/// Conditions for splitting into twists of `O`, `O(f)`, `O(H-f)`. The order
/// decides which family is reported when several coincide on a scroll.
pub const SPLIT_ACM3: [SplitCondition; 4] = [
    SplitCondition::Zero,
    SplitCondition::A0Minus1,
    SplitCondition::A1Minus1,
    SplitCondition::CMinus2,
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SplitVerdict {
    Splits(LineBundleSum),
    Fails {
        condition: SplitCondition,
        t: i64,
        value: Bounds,
    },
    /// Unresolved probes; empty when every condition holds but the summands
    /// could not be read off an extension.
    Indeterminate(Vec<Probe>),
}

/// `t` with `h^1(O(d + tH + y f)) != 0`.
pub fn violating_t_line(s: &Scroll, d: DivisorClass, y: i64) -> impl Iterator<Item = i64> {
    h1_support(s, d.f + y)
        .into_iter()
        .flat_map(move |r| (*r.start() - d.h)..=(*r.end() - d.h))
}

/// `t` with `h^1(B(tH + y f)) != 0` for a line-bundle sum.
pub fn violating_t(s: &Scroll, b: &LineBundleSum, y: i64) -> BTreeSet<i64> {
    b.summands()
        .iter()
        .flat_map(|&d| violating_t_line(s, d, y))
        .collect()
}

struct FamilyCheck {
    failure: Option<(i64, Probe)>,
    unresolved: Vec<Probe>,
}

fn check_family(s: &Scroll, b: &BundleExpr, cond: SplitCondition) -> FamilyCheck {
    let y = cond.f_offset(s);
    let mut unresolved = Vec::new();
    for t in violating_t(s, &b.leaves(), y) {
        let p = Probe::evaluate(s, b, cond.name(), 1, DivisorClass::new(t, y));
        match p.vanishing() {
            Verdict::False => {
                return FamilyCheck {
                    failure: Some((t, p)),
                    unresolved,
                }
            }
            Verdict::Indeterminate => unresolved.push(p),
            Verdict::True => {}
        }
    }
    FamilyCheck {
        failure: None,
        unresolved,
    }
}

fn decide_families(s: &Scroll, b: &BundleExpr, conds: &[SplitCondition]) -> SplitVerdict {
    let mut unresolved = Vec::new();
    for &cond in conds {
        let check = check_family(s, b, cond);
        if let Some((t, p)) = check.failure {
            return SplitVerdict::Fails {
                condition: cond,
                t,
                value: p.value,
            };
        }
        unresolved.extend(check.unresolved);
    }
    if !unresolved.is_empty() {
        return SplitVerdict::Indeterminate(unresolved);
    }
    match b.forced_split(s) {
        Some(sum) => SplitVerdict::Splits(sum),
        None => SplitVerdict::Indeterminate(Vec::new()),
    }
}

/// Splitting into `O(t_1 H) + ... + O(t_r H)`.
pub fn decide_split_th(s: &Scroll, b: &BundleExpr) -> SplitVerdict {
    decide_families(s, b, &SPLIT_TH)
}

/// Splitting into twists `tH` of `O`, `O(f)` and `O(H - f)`.
pub fn decide_split_acm3(s: &Scroll, b: &BundleExpr) -> SplitVerdict {
    decide_families(s, b, &SPLIT_ACM3)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SummandVerdict {
    Summand { class: DivisorClass, witness: Probe },
    None,
    Indeterminate(Vec<Probe>),
}

/// For a regular `E`, reads a line-bundle direct summand off the failure of
/// `E(-H)` to be regular:
///
/// * `h^2(E(-2H+(c-2)f)) != 0` gives `O`;
/// * `h^1(E(-2H+(c-1)f)) != 0` with `h^1(E(-H+(a0-1)f)) = h^1(E(-H+(a1-1)f))
///   = h^1(E(-2H+(c-2)f)) = 0` gives `O(f)`;
/// * `h^1(E(-H-f)) != 0` with `h^1(E(-H)) = h^1(E(-2H+(a0-1)f)) =
///   h^1(E(-2H+(a1-1)f)) = 0` gives `O(H-f)`.
///
/// Pairing the second cause with `O(H-f)` and the third with `O(f)` instead
/// is wrong: `E = O(f)` meets the second set of conditions.
pub fn detect_line_summand(s: &Scroll, b: &BundleExpr) -> Result<SummandVerdict> {
    match is_regular(s, b).verdict {
        Verdict::True => {}
        Verdict::False => return Err(Error::NotRegular),
        Verdict::Indeterminate => {
            return Ok(SummandVerdict::Indeterminate(is_regular(s, b).witnesses))
        }
    }
    let (a0, a1, c) = (s.a0(), s.a1(), s.c());
    let h = |h, f| DivisorClass::new(h, f);
    let pr = |name, deg, tw| Probe::evaluate(s, b, name, deg, tw);

    let cases: [(DivisorClass, Probe, Vec<Probe>); 3] = [
        (
            DivisorClass::ZERO,
            pr("h2(E(-2H+(c-2)f))", 2, h(-2, c - 2)),
            vec![],
        ),
        (
            DivisorClass::F,
            pr("h1(E(-2H+(c-1)f))", 1, h(-2, c - 1)),
            vec![
                pr("h1(E(-H+(a0-1)f))", 1, h(-1, a0 - 1)),
                pr("h1(E(-H+(a1-1)f))", 1, h(-1, a1 - 1)),
                pr("h1(E(-2H+(c-2)f))", 1, h(-2, c - 2)),
            ],
        ),
        (
            DivisorClass::new(1, -1),
            pr("h1(E(-H-f))", 1, h(-1, -1)),
            vec![
                pr("h1(E(-H))", 1, h(-1, 0)),
                pr("h1(E(-2H+(a0-1)f))", 1, h(-2, a0 - 1)),
                pr("h1(E(-2H+(a1-1)f))", 1, h(-2, a1 - 1)),
            ],
        ),
    ];

    let mut unresolved = Vec::new();
    for (class, cause, aux) in cases {
        let aux_ok = all_vanish(&aux);
        match (cause.vanishing(), aux_ok) {
            (Verdict::False, Verdict::True) => {
                return Ok(SummandVerdict::Summand {
                    class,
                    witness: cause,
                })
            }
            (Verdict::True, _) | (_, Verdict::False) => {}
            _ => {
                unresolved.push(cause);
                unresolved.extend(aux.into_iter().filter(|p| !p.value.is_zero()));
            }
        }
    }
    if unresolved.is_empty() {
        Ok(SummandVerdict::None)
    } else {
        Ok(SummandVerdict::Indeterminate(unresolved))
    }
}

/// A verdict together with the probes that decide it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub verdict: Verdict,
    pub witnesses: Vec<Probe>,
}

/// `h^1(E(tH)) = 0` for every `t`. On failure the witness is the smallest
/// violating `t`.
pub fn is_acm(s: &Scroll, b: &BundleExpr) -> Decision {
    let check = check_family(s, b, SplitCondition::Zero);
    match check.failure {
        Some((_, p)) => Decision {
            verdict: Verdict::False,
            witnesses: vec![p],
        },
        None if check.unresolved.is_empty() => Decision {
            verdict: Verdict::True,
            witnesses: Vec::new(),
        },
        None => Decision {
            verdict: Verdict::Indeterminate,
            witnesses: check.unresolved,
        },
    }
}

/// `h^i(E(-H)) = h^i(E(-2H)) = 0` for `i = 0, 1, 2`.
pub fn is_ulrich(s: &Scroll, b: &BundleExpr) -> Decision {
    const NAMES: [[&str; 3]; 2] = [
        ["h0(E(-H))", "h1(E(-H))", "h2(E(-H))"],
        ["h0(E(-2H))", "h1(E(-2H))", "h2(E(-2H))"],
    ];
    let witnesses: Vec<Probe> = (0..2)
        .flat_map(|k| {
            (0..3).map(move |i| {
                Probe::evaluate(s, b, NAMES[k][i], i, DivisorClass::new(-(k as i64) - 1, 0))
            })
        })
        .collect();
    Decision {
        verdict: all_vanish(&witnesses),
        witnesses,
    }
}

/// Extension `0 -> O(H-f)^a -> E -> O((c-1)f)^b -> 0`.
pub fn make_ulrich(s: &Scroll, a: usize, b: usize) -> Result<BundleExpr> {
    let sub = LineBundleSum::repeated(DivisorClass::new(1, -1), a);
    let quot = LineBundleSum::repeated(DivisorClass::new(0, s.c() - 1), b);
    Ok(match (a, b) {
        (0, 0) => return Err(Error::EmptyBundle),
        (_, 0) => BundleExpr::Sum(sub),
        (0, _) => BundleExpr::Sum(quot),
        _ => BundleExpr::ext(BundleExpr::Sum(sub), BundleExpr::Sum(quot)),
    })
}
