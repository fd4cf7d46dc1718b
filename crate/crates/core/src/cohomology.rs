//! Exact cohomology of line bundles and their direct sums on `S(a0, a1)`.
//!
//! Everything reduces to `P^1`:
//! * `a >= 0`: `H^i(O(aH+bf)) = H^i(P^1, Sym^a E (x) O(b))`, so `h^2 = 0`;
//! * `a = -1`: all cohomology vanishes;
//! * `a <= -2`: `H^i(O(aH+bf)) = H^{2-i}(P^1, Sym^{-a-2} E (x) O(c-b-2))`.
//!
//! [`euler_rr`] is an independent Riemann-Roch route to `chi` that only
//! uses the intersection form.

use std::fmt;
use std::ops::{Add, AddAssign, RangeInclusive};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::p1::{p1_cohomology, sym_decompose, P1Sum};
use crate::scroll::{DivisorClass, Scroll};

/// A direct sum of line bundles `O(D_1) + ... + O(D_r)`, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct LineBundleSum {
    summands: Vec<DivisorClass>,
}

impl LineBundleSum {
    pub fn new(mut summands: Vec<DivisorClass>) -> Self {
        summands.sort_unstable();
        LineBundleSum { summands }
    }

    pub fn line(d: DivisorClass) -> Self {
        LineBundleSum { summands: vec![d] }
    }

    /// `n` copies of `O(d)`.
    pub fn repeated(d: DivisorClass, n: usize) -> Self {
        LineBundleSum {
            summands: vec![d; n],
        }
    }

    pub fn summands(&self) -> &[DivisorClass] {
        &self.summands
    }

    pub fn rank(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn twisted(&self, t: DivisorClass) -> LineBundleSum {
        // translation preserves the sort order
        LineBundleSum {
            summands: self.summands.iter().map(|&d| d + t).collect(),
        }
    }

    pub fn oplus(&self, other: &LineBundleSum) -> LineBundleSum {
        let mut v = self.summands.clone();
        v.extend_from_slice(&other.summands);
        LineBundleSum::new(v)
    }

    /// First Chern class, the sum of the summand classes.
    pub fn c1(&self) -> DivisorClass {
        self.summands
            .iter()
            .fold(DivisorClass::ZERO, |acc, &d| acc + d)
    }
}

impl FromIterator<DivisorClass> for LineBundleSum {
    fn from_iter<I: IntoIterator<Item = DivisorClass>>(iter: I) -> Self {
        LineBundleSum::new(iter.into_iter().collect())
    }
}

impl fmt::Display for LineBundleSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "O{}", d)?;
        }
        Ok(())
    }
}

/// Exact `(h^0, h^1, h^2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct CohomRecord {
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
}

impl CohomRecord {
    pub const ZERO: CohomRecord = CohomRecord {
        h0: 0,
        h1: 0,
        h2: 0,
    };

    pub fn new(h0: u64, h1: u64, h2: u64) -> Self {
        CohomRecord { h0, h1, h2 }
    }

    pub fn chi(&self) -> i64 {
        self.h0 as i64 - self.h1 as i64 + self.h2 as i64
    }

    pub fn get(&self, i: usize) -> u64 {
        match i {
            0 => self.h0,
            1 => self.h1,
            2 => self.h2,
            _ => 0,
        }
    }

    pub fn as_array(&self) -> [u64; 3] {
        [self.h0, self.h1, self.h2]
    }
}

impl Add for CohomRecord {
    type Output = CohomRecord;
    fn add(self, rhs: Self) -> Self {
        CohomRecord::new(self.h0 + rhs.h0, self.h1 + rhs.h1, self.h2 + rhs.h2)
    }
}

impl AddAssign for CohomRecord {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

/// Cohomology on X of a class whose pushforward to P^1 is `p`, where X-degree
/// `i` corresponds to P^1-degree `2 - i` (the `a <= -2` case).
fn swapped(p: &P1Sum) -> CohomRecord {
    let (q0, q1) = p1_cohomology(p);
    CohomRecord::new(0, q1, q0)
}

pub fn line_cohomology(s: &Scroll, d: DivisorClass) -> CohomRecord {
    match d.h {
        a if a >= 0 => {
            let (h0, h1) = p1_cohomology(&sym_decompose(s, a, d.f).expect("a >= 0"));
            CohomRecord::new(h0, h1, 0)
        }
        -1 => CohomRecord::ZERO,
        a => swapped(&sym_decompose(s, -a - 2, s.c() - d.f - 2).expect("a <= -2")),
    }
}

pub fn sum_cohomology(s: &Scroll, b: &LineBundleSum, twist: DivisorClass) -> CohomRecord {
    b.summands().iter().fold(CohomRecord::ZERO, |acc, &d| {
        acc + line_cohomology(s, d + twist)
    })
}

/// `chi(O(D)) = 1 + D.(D-K)/2`.
pub fn euler_rr(s: &Scroll, d: DivisorClass) -> Result<i64> {
    let n = s.intersect(d, d - s.canonical());
    if n % 2 != 0 {
        return Err(Error::OddIntersection(n));
    }
    Ok(1 + n / 2)
}

/// Whether `h^1(O(D)) != 0`, decided from the closed-form region.
pub fn h1_nonvanishing(s: &Scroll, d: DivisorClass) -> bool {
    let (a, b) = (d.h, d.f);
    if a >= 0 {
        a * s.a0() + b <= -2
    } else if a == -1 {
        false
    } else {
        b >= (-a - 2) * s.a0() + s.c()
    }
}

/// The H-coefficients `x` with `h^1(O(xH + yf)) != 0`, as at most two
/// disjoint inclusive ranges in increasing order.
pub fn h1_support(s: &Scroll, y: i64) -> Vec<RangeInclusive<i64>> {
    let mut out = Vec::with_capacity(2);
    // x <= -2: need y >= (-x-2)a0 + c
    if y >= s.c() {
        out.push(-(y - s.c()).div_euclid(s.a0()) - 2..=-2);
    }
    // x >= 0: need x a0 + y <= -2
    if y <= -2 {
        out.push(0..=(-2 - y).div_euclid(s.a0()));
    }
    out
}

/// Cohomology of `(B (x) O(twist))|_C` for a smooth rational curve `C`.
pub fn restricted_cohomology(
    s: &Scroll,
    b: &LineBundleSum,
    curve: DivisorClass,
    twist: DivisorClass,
) -> Result<(u64, u64)> {
    if curve != DivisorClass::F && curve != DivisorClass::H && curve != s.directrix() {
        return Err(Error::UnsupportedCurveClass(curve));
    }
    let degrees: P1Sum = b
        .summands()
        .iter()
        .map(|&d| s.restriction_degree(d + twist, curve))
        .collect();
    Ok(p1_cohomology(&degrees))
}
