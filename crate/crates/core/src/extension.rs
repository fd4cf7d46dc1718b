//! Bundles built from line-bundle sums by extensions, and their cohomology
//! as exact-or-interval data.
//!
//! For `0 -> A -> E -> B -> 0` the long exact sequence gives
//!
//! ```text
//! h^i(E) = dim coker(H^{i-1}(B) -> H^i(A)) + dim ker(H^i(B) -> H^{i+1}(A))
//! ```
//!
//! hence `h^i(A) + h^i(B)` as an upper bound and
//! `max(0, h^i(A) - h^{i-1}(B)) + max(0, h^i(B) - h^{i+1}(A))` as a lower
//! bound. The Euler characteristic is additive and always exact; it is used
//! to tighten each degree against the other two. When every
//! `Ext^1(B_j, A_i)` between the line-bundle constituents vanishes the
//! extension is split and cohomology is additive.
//!
//! No choice of extension class is ever made: an `Ext` node stands for every
//! extension of its quotient by its sub, and the intervals cover all of them.

use std::fmt;

use serde::Serialize;

use crate::cohomology::{line_cohomology, sum_cohomology, CohomRecord, LineBundleSum};
use crate::scroll::{DivisorClass, Scroll};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BundleExpr {
    Sum(LineBundleSum),
    /// Any extension `0 -> sub -> E -> quot -> 0`.
    Ext {
        sub: Box<BundleExpr>,
        quot: Box<BundleExpr>,
    },
    /// Direct sum of expressions that are not all line-bundle sums. Build with
    /// [`BundleExpr::direct_sum`] to keep the normal form.
    Oplus(Vec<BundleExpr>),
}

impl BundleExpr {
    pub fn line(d: DivisorClass) -> Self {
        BundleExpr::Sum(LineBundleSum::line(d))
    }

    pub fn sum<I: IntoIterator<Item = DivisorClass>>(it: I) -> Self {
        BundleExpr::Sum(it.into_iter().collect())
    }

    pub fn ext(sub: BundleExpr, quot: BundleExpr) -> Self {
        BundleExpr::Ext {
            sub: Box::new(sub),
            quot: Box::new(quot),
        }
    }

    /// Normalizing direct sum: nested sums are flattened, all line bundles are
    /// merged into one leading `Sum`, remaining terms are sorted.
    pub fn direct_sum(parts: Vec<BundleExpr>) -> Self {
        let mut lines = Vec::new();
        let mut rest = Vec::new();
        let mut stack = parts;
        stack.reverse();
        while let Some(p) = stack.pop() {
            match p {
                BundleExpr::Sum(b) => lines.extend_from_slice(b.summands()),
                BundleExpr::Oplus(v) => stack.extend(v.into_iter().rev()),
                ext => rest.push(ext),
            }
        }
        rest.sort();
        if rest.is_empty() {
            return BundleExpr::Sum(LineBundleSum::new(lines));
        }
        if lines.is_empty() && rest.len() == 1 {
            return rest.pop().unwrap();
        }
        let mut out = Vec::with_capacity(rest.len() + 1);
        if !lines.is_empty() {
            out.push(BundleExpr::Sum(LineBundleSum::new(lines)));
        }
        out.extend(rest);
        BundleExpr::Oplus(out)
    }

    pub fn rank(&self) -> usize {
        match self {
            BundleExpr::Sum(b) => b.rank(),
            BundleExpr::Ext { sub, quot } => sub.rank() + quot.rank(),
            BundleExpr::Oplus(v) => v.iter().map(BundleExpr::rank).sum(),
        }
    }

    /// All line bundles appearing in the expression (the graded pieces of a
    /// filtration of `E`).
    pub fn leaves(&self) -> LineBundleSum {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        LineBundleSum::new(out)
    }

    fn collect_leaves(&self, out: &mut Vec<DivisorClass>) {
        match self {
            BundleExpr::Sum(b) => out.extend_from_slice(b.summands()),
            BundleExpr::Ext { sub, quot } => {
                sub.collect_leaves(out);
                quot.collect_leaves(out);
            }
            BundleExpr::Oplus(v) => v.iter().for_each(|e| e.collect_leaves(out)),
        }
    }

    pub fn as_sum(&self) -> Option<&LineBundleSum> {
        match self {
            BundleExpr::Sum(b) => Some(b),
            _ => None,
        }
    }

    /// The line-bundle sum this expression is isomorphic to for every choice
    /// of extension classes, if all `Ext^1` groups involved vanish.
    pub fn forced_split(&self, s: &Scroll) -> Option<LineBundleSum> {
        match self {
            BundleExpr::Sum(b) => Some(b.clone()),
            BundleExpr::Ext { sub, quot } => {
                if !ext1_vanishes(s, sub, quot) {
                    return None;
                }
                Some(sub.forced_split(s)?.oplus(&quot.forced_split(s)?))
            }
            BundleExpr::Oplus(v) => v.iter().try_fold(LineBundleSum::default(), |acc, e| {
                Some(acc.oplus(&e.forced_split(s)?))
            }),
        }
    }
}

impl From<LineBundleSum> for BundleExpr {
    fn from(b: LineBundleSum) -> Self {
        BundleExpr::Sum(b)
    }
}

fn write_sum(f: &mut fmt::Formatter<'_>, b: &LineBundleSum) -> fmt::Result {
    let s = b.summands();
    let mut i = 0;
    while i < s.len() {
        let n = s[i..].iter().take_while(|&&x| x == s[i]).count();
        if i > 0 {
            f.write_str(" + ")?;
        }
        if n > 1 {
            write!(f, "{}*", n)?;
        }
        write!(f, "O({},{})", s[i].h, s[i].f)?;
        i += n;
    }
    Ok(())
}

/// Prints in the bundle-spec grammar; `parse(to_string())` returns `self`
/// for normalized expressions.
impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BundleExpr::Sum(b) => write_sum(f, b),
            BundleExpr::Ext { sub, quot } => write!(f, "ext({}; {})", sub, quot),
            BundleExpr::Oplus(v) => {
                let mut i = 0;
                while i < v.len() {
                    let n = v[i..].iter().take_while(|&x| *x == v[i]).count();
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    match (&v[i], n) {
                        (e @ BundleExpr::Ext { .. }, n) if n > 1 => write!(f, "{}*{}", n, e)?,
                        (e, _) => {
                            // a Sum member is never repeated after normalization
                            write!(f, "{}", e)?;
                        }
                    }
                    i += n.max(1);
                }
                Ok(())
            }
        }
    }
}

/// Closed interval `[lo, hi]` of possible dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Bounds {
    pub lo: u64,
    pub hi: u64,
}

impl Bounds {
    pub const ZERO: Bounds = Bounds { lo: 0, hi: 0 };

    pub fn exact(v: u64) -> Self {
        Bounds { lo: v, hi: v }
    }

    pub fn new(lo: u64, hi: u64) -> Self {
        debug_assert!(lo <= hi);
        Bounds { lo, hi }
    }

    pub fn is_forced(&self) -> bool {
        self.lo == self.hi
    }

    /// Certainly zero.
    pub fn is_zero(&self) -> bool {
        self.hi == 0
    }

    /// Certainly nonzero.
    pub fn is_nonzero(&self) -> bool {
        self.lo > 0
    }

    pub fn value(&self) -> Option<u64> {
        self.is_forced().then_some(self.lo)
    }

    pub fn contains(&self, v: u64) -> bool {
        self.lo <= v && v <= self.hi
    }
}

impl std::ops::Add for Bounds {
    type Output = Bounds;
    fn add(self, rhs: Self) -> Self {
        Bounds::new(self.lo + rhs.lo, self.hi + rhs.hi)
    }
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_forced() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{},{}]", self.lo, self.hi)
        }
    }
}

/// Per-degree intervals with exact Euler characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct IntervalCohom {
    pub h: [Bounds; 3],
    pub chi: i64,
}

impl IntervalCohom {
    pub fn exact(r: CohomRecord) -> Self {
        IntervalCohom {
            h: r.as_array().map(Bounds::exact),
            chi: r.chi(),
        }
    }

    pub fn is_forced(&self) -> bool {
        self.h.iter().all(Bounds::is_forced)
    }

    pub fn record(&self) -> Option<CohomRecord> {
        Some(CohomRecord::new(
            self.h[0].value()?,
            self.h[1].value()?,
            self.h[2].value()?,
        ))
    }

    pub fn contains(&self, r: &CohomRecord) -> bool {
        (0..3).all(|i| self.h[i].contains(r.get(i))) && self.chi == r.chi()
    }

    /// Narrow each degree using `chi = h0 - h1 + h2` until stable.
    fn tighten(mut self) -> Self {
        let chi = self.chi;
        loop {
            let [b0, b1, b2] = self.h.map(|b| (b.lo as i64, b.hi as i64));
            let n0 = (b0.0.max(chi + b1.0 - b2.1), b0.1.min(chi + b1.1 - b2.0));
            let n1 = (b1.0.max(n0.0 + b2.0 - chi), b1.1.min(n0.1 + b2.1 - chi));
            let n2 = (b2.0.max(chi - n0.1 + n1.0), b2.1.min(chi - n0.0 + n1.1));
            let next = [n0, n1, n2].map(|(lo, hi)| {
                let lo = lo.max(0);
                debug_assert!(lo <= hi, "inconsistent cohomology bounds");
                Bounds::new(lo as u64, hi.max(lo) as u64)
            });
            if next == self.h {
                return self;
            }
            self.h = next;
        }
    }
}

impl std::ops::Add for IntervalCohom {
    type Output = IntervalCohom;
    fn add(self, rhs: Self) -> Self {
        IntervalCohom {
            h: [0, 1, 2].map(|i| self.h[i] + rhs.h[i]),
            chi: self.chi + rhs.chi,
        }
    }
}

/// `Ext^1(quot, sub) = 0` certified through the line-bundle constituents.
fn ext1_vanishes(s: &Scroll, sub: &BundleExpr, quot: &BundleExpr) -> bool {
    let (a, b) = (sub.leaves(), quot.leaves());
    a.summands()
        .iter()
        .all(|&x| b.summands().iter().all(|&y| ext1_dim(s, y, x) == 0))
}

fn les_bounds(sub: IntervalCohom, quot: IntervalCohom) -> IntervalCohom {
    let hi_at = |c: &IntervalCohom, i: isize| {
        if (0..3).contains(&i) {
            c.h[i as usize].hi
        } else {
            0
        }
    };
    let h = [0isize, 1, 2].map(|i| {
        let k = i as usize;
        let from_sub = sub.h[k].lo.saturating_sub(hi_at(&quot, i - 1));
        let from_quot = quot.h[k].lo.saturating_sub(hi_at(&sub, i + 1));
        Bounds::new(from_sub + from_quot, sub.h[k].hi + quot.h[k].hi)
    });
    IntervalCohom {
        h,
        chi: sub.chi + quot.chi,
    }
    .tighten()
}

pub fn extension_cohomology(s: &Scroll, b: &BundleExpr, twist: DivisorClass) -> IntervalCohom {
    match b {
        BundleExpr::Sum(sum) => IntervalCohom::exact(sum_cohomology(s, sum, twist)),
        BundleExpr::Oplus(v) => v
            .iter()
            .map(|e| extension_cohomology(s, e, twist))
            .fold(IntervalCohom::exact(CohomRecord::ZERO), |a, c| a + c),
        BundleExpr::Ext { sub, quot } => {
            let a = extension_cohomology(s, sub, twist);
            let q = extension_cohomology(s, quot, twist);
            if ext1_vanishes(s, sub, quot) {
                a + q
            } else {
                les_bounds(a, q)
            }
        }
    }
}

/// `dim Ext^1(O(from), O(to)) = h^1(O(to - from))`.
pub fn ext1_dim(s: &Scroll, from: DivisorClass, to: DivisorClass) -> u64 {
    line_cohomology(s, to - from).h1
}
