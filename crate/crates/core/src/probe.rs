//! Three-valued verdicts and the cohomology probes that back them.

use std::fmt;

use serde::Serialize;

use crate::extension::{extension_cohomology, Bounds, BundleExpr};
use crate::scroll::{DivisorClass, Scroll};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Indeterminate,
}

impl Verdict {
    pub fn is_true(self) -> bool {
        self == Verdict::True
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Indeterminate => "indeterminate",
        }
    }

    /// Conjunction where any certain failure dominates.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::False, _) | (_, Verdict::False) => Verdict::False,
            (Verdict::True, Verdict::True) => Verdict::True,
            _ => Verdict::Indeterminate,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A single cohomology group `h^degree(E (x) O(twist))` of the input bundle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Probe {
    pub name: &'static str,
    pub degree: usize,
    pub twist: DivisorClass,
    pub value: Bounds,
}

impl Probe {
    pub fn evaluate(
        s: &Scroll,
        b: &BundleExpr,
        name: &'static str,
        degree: usize,
        twist: DivisorClass,
    ) -> Probe {
        Probe {
            name,
            degree,
            twist,
            value: extension_cohomology(s, b, twist).h[degree],
        }
    }

    /// `True` when the group certainly vanishes, `False` when it certainly
    /// does not.
    pub fn vanishing(&self) -> Verdict {
        if self.value.is_zero() {
            Verdict::True
        } else if self.value.is_nonzero() {
            Verdict::False
        } else {
            Verdict::Indeterminate
        }
    }
}

impl fmt::Display for Probe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at twist {}: h{} = {}",
            self.name, self.twist, self.degree, self.value
        )
    }
}

/// Verdict that all probes vanish.
pub fn all_vanish<'a, I: IntoIterator<Item = &'a Probe>>(probes: I) -> Verdict {
    probes
        .into_iter()
        .fold(Verdict::True, |v, p| v.and(p.vanishing()))
}
