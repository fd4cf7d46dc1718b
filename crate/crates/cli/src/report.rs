//! JSON and plain-text shapes shared by the subcommands.

use std::fmt::Write as _;

use scrollcoh::{Bounds, DivisorClass, LineBundleSum, Probe, Verdict};
use serde::Serialize;

/// A dimension that is exact or only known to lie in `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Dim {
    Exact(u64),
    Range([u64; 2]),
}

impl From<Bounds> for Dim {
    fn from(b: Bounds) -> Self {
        match b.value() {
            Some(v) => Dim::Exact(v),
            None => Dim::Range([b.lo, b.hi]),
        }
    }
}

impl std::fmt::Display for Dim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Dim::Exact(v) => write!(f, "{v}"),
            Dim::Range([lo, hi]) => write!(f, "{lo}..{hi}"),
        }
    }
}

pub fn pair(d: DivisorClass) -> [i64; 2] {
    [d.h, d.f]
}

pub fn pairs(b: &LineBundleSum) -> Vec<[i64; 2]> {
    b.summands().iter().copied().map(pair).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub name: &'static str,
    pub degree: usize,
    pub twist: [i64; 2],
    pub value: Dim,
}

impl From<&Probe> for Witness {
    fn from(p: &Probe) -> Self {
        Witness {
            name: p.name,
            degree: p.degree,
            twist: pair(p.twist),
            value: p.value.into(),
        }
    }
}

pub fn witnesses(probes: &[Probe]) -> Vec<Witness> {
    probes.iter().map(Witness::from).collect()
}

/// `verdict: X` followed by one indented line per witness.
pub fn verdict_text(verdict: Verdict, ws: &[Witness]) -> String {
    let mut s = format!("verdict: {verdict}\n");
    for w in ws {
        let _ = writeln!(
            s,
            "  {} at ({},{}): h{} = {}",
            w.name, w.twist[0], w.twist[1], w.degree, w.value
        );
    }
    s
}
