//! Picard group arithmetic on a smooth rational normal scroll surface
//! `X = S(a0, a1)`.
//!
//! `Pic(X)` is free of rank two, generated by the hyperplane class `H` and
//! the fibre class `f`, with `H^2 = c`, `H.f = 1`, `f^2 = 0` where
//! `c = a0 + a1`. The canonical class is `K = -2H + (c-2)f`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A divisor class `hH + ff`. Coefficients are unrestricted integers.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
pub struct DivisorClass {
    pub h: i64,
    pub f: i64,
}

impl DivisorClass {
    pub const ZERO: DivisorClass = DivisorClass { h: 0, f: 0 };
    pub const H: DivisorClass = DivisorClass { h: 1, f: 0 };
    pub const F: DivisorClass = DivisorClass { h: 0, f: 1 };

    pub const fn new(h: i64, f: i64) -> Self {
        DivisorClass { h, f }
    }
}

impl From<(i64, i64)> for DivisorClass {
    fn from((h, f): (i64, i64)) -> Self {
        DivisorClass { h, f }
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: Self) -> Self {
        DivisorClass::new(self.h + rhs.h, self.f + rhs.f)
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: Self) -> Self {
        DivisorClass::new(self.h - rhs.h, self.f - rhs.f)
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> Self {
        DivisorClass::new(-self.h, -self.f)
    }
}

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self * rhs.h, self * rhs.f)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.h, self.f)
    }
}

/// The scroll `S(a0, a1)` with `0 < a0 <= a1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Scroll {
    a0: i64,
    a1: i64,
}

impl Scroll {
    pub fn new(a0: i64, a1: i64) -> Result<Self> {
        if a0 <= 0 || a0 > a1 {
            return Err(Error::InvalidScroll { a0, a1 });
        }
        Ok(Scroll { a0, a1 })
    }

    pub fn a0(&self) -> i64 {
        self.a0
    }

    pub fn a1(&self) -> i64 {
        self.a1
    }

    /// Degree of the embedded surface.
    pub fn c(&self) -> i64 {
        self.a0 + self.a1
    }

    pub fn e(&self) -> i64 {
        self.a1 - self.a0
    }

    pub fn canonical(&self) -> DivisorClass {
        DivisorClass::new(-2, self.c() - 2)
    }

    /// The class of the curves `|H - a1 f|`; the unique such curve when `e > 0`.
    pub fn directrix(&self) -> DivisorClass {
        DivisorClass::new(1, -self.a1)
    }

    pub fn intersect(&self, d1: DivisorClass, d2: DivisorClass) -> i64 {
        d1.h * d2.h * self.c() + d1.h * d2.f + d1.f * d2.h
    }

    /// `K - D`, the class with `h^i(D) = h^{2-i}(K - D)`.
    pub fn serre_dual(&self, d: DivisorClass) -> DivisorClass {
        self.canonical() - d
    }

    /// Degree of `O(D)` restricted to a smooth rational curve in `|curve|`.
    pub fn restriction_degree(&self, d: DivisorClass, curve: DivisorClass) -> i64 {
        debug_assert!(curve.h >= 0 && curve != DivisorClass::ZERO);
        self.intersect(d, curve)
    }
}

impl fmt::Display for Scroll {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({},{})", self.a0, self.a1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(h: i64, f: i64) -> DivisorClass {
        DivisorClass::new(h, f)
    }

    #[test]
    fn derived_invariants() {
        let s = Scroll::new(1, 2).unwrap();
        assert_eq!((s.c(), s.e(), s.canonical()), (3, 1, d(-2, 1)));
        let s = Scroll::new(2, 2).unwrap();
        assert_eq!((s.c(), s.e(), s.canonical()), (4, 0, d(-2, 2)));
    }

    #[test]
    fn rejects_bad_scrolls() {
        assert_eq!(
            Scroll::new(0, 1),
            Err(Error::InvalidScroll { a0: 0, a1: 1 })
        );
        assert!(Scroll::new(3, 2).is_err());
        assert!(Scroll::new(-1, 4).is_err());
    }

    #[test]
    fn intersection_examples() {
        let s = Scroll::new(1, 2).unwrap();
        assert_eq!(s.intersect(DivisorClass::H, DivisorClass::H), 3);
        assert_eq!(s.intersect(DivisorClass::F, DivisorClass::F), 0);
        assert_eq!(s.intersect(d(-2, 3), d(0, 2)), -4);
    }

    #[test]
    fn serre_dual_examples() {
        let s = Scroll::new(1, 2).unwrap();
        assert_eq!(s.serre_dual(d(0, 0)), d(-2, 1));
        assert_eq!(s.serre_dual(d(-2, 1)), d(0, 0));
        let s = Scroll::new(2, 2).unwrap();
        assert_eq!(s.serre_dual(d(1, -1)), d(-3, 3));
    }

    #[test]
    fn restriction_degree_examples() {
        let s = Scroll::new(1, 2).unwrap();
        let c = s.c();
        assert_eq!(s.restriction_degree(d(-1, c - 1), DivisorClass::F), -1);
        assert_eq!(s.restriction_degree(d(0, c - 1), DivisorClass::H), c - 1);
        let s = Scroll::new(2, 2).unwrap();
        assert_eq!(s.restriction_degree(d(0, -2), s.directrix()), -2);
    }

    #[test]
    fn grid_identities() {
        for (a0, a1) in [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)] {
            let s = Scroll::new(a0, a1).unwrap();
            let grid: Vec<_> = (-10..=10)
                .flat_map(|h| (-10..=10).map(move |f| d(h, f)))
                .collect();
            for &x in &grid {
                assert_eq!(s.serre_dual(s.serre_dual(x)), x);
                assert_eq!(s.restriction_degree(x, s.directrix()), x.h * a0 + x.f);
            }
            // bilinearity against the generators, symmetry on a coarser grid
            for &x in grid.iter().step_by(7) {
                for &y in grid.iter().step_by(5) {
                    assert_eq!(s.intersect(x, y), s.intersect(y, x));
                    for &z in grid.iter().step_by(31) {
                        assert_eq!(s.intersect(x + y, z), s.intersect(x, z) + s.intersect(y, z));
                        assert_eq!(s.intersect(3 * x, z), 3 * s.intersect(x, z));
                    }
                }
            }
        }
    }
}
