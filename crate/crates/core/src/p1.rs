//! Direct sums of line bundles on P^1 and their cohomology.
//!
//! Pushing `O_X(aH + bf)` down along the ruling `X -> P^1` gives
//! `Sym^a(O(a0) + O(a1)) (x) O(b)`, which splits as a sum of `a + 1` line
//! bundles with degrees `i*a0 + (a-i)*a1 + b`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scroll::Scroll;

/// Multiset of degrees `d_i` of `O_{P^1}(d_i)`, stored sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct P1Sum {
    degrees: Vec<i64>,
}

impl P1Sum {
    pub fn new(mut degrees: Vec<i64>) -> Self {
        degrees.sort_unstable();
        P1Sum { degrees }
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn union(&self, other: &P1Sum) -> P1Sum {
        let mut degrees = self.degrees.clone();
        degrees.extend_from_slice(&other.degrees);
        P1Sum::new(degrees)
    }

    pub fn cohomology(&self) -> (u64, u64) {
        p1_cohomology(self)
    }
}

impl FromIterator<i64> for P1Sum {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        P1Sum::new(iter.into_iter().collect())
    }
}

/// `Sym^a(O(a0) + O(a1)) (x) O(b)` on `P^1`.
pub fn sym_decompose(s: &Scroll, a: i64, b: i64) -> Result<P1Sum> {
    if a < 0 {
        return Err(Error::NegativeSymPower(a));
    }
    Ok((0..=a).map(|i| i * s.a0() + (a - i) * s.a1() + b).collect())
}

/// `h^0` of `O_{P^1}(d)`.
pub fn h0_line(d: i64) -> u64 {
    (d + 1).max(0) as u64
}

/// `h^1` of `O_{P^1}(d)`.
pub fn h1_line(d: i64) -> u64 {
    (-d - 1).max(0) as u64
}

pub fn p1_cohomology(p: &P1Sum) -> (u64, u64) {
    p.degrees
        .iter()
        .fold((0, 0), |(h0, h1), &d| (h0 + h0_line(d), h1 + h1_line(d)))
}
