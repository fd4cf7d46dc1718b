#![allow(dead_code)]

use scrollcoh::{DivisorClass, LineBundleSum, Scroll};

pub const TEST_SCROLLS: [(i64, i64); 5] = [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)];

pub fn scrolls() -> impl Iterator<Item = Scroll> {
    TEST_SCROLLS
        .iter()
        .map(|&(a0, a1)| Scroll::new(a0, a1).unwrap())
}

pub fn d(h: i64, f: i64) -> DivisorClass {
    DivisorClass::new(h, f)
}

/// `|h| <= hmax`, `|f| <= fmax`.
pub fn grid(hmax: i64, fmax: i64) -> Vec<DivisorClass> {
    (-hmax..=hmax)
        .flat_map(|h| (-fmax..=fmax).map(move |f| d(h, f)))
        .collect()
}

/// The standard sweep, `|h| <= 8`, `|f| <= 12`.
pub fn full_grid() -> Vec<DivisorClass> {
    grid(8, 12)
}

/// Line bundles and pairwise sums drawn from a small grid.
pub fn small_sums() -> Vec<LineBundleSum> {
    let g = grid(3, 4);
    let mut out: Vec<LineBundleSum> = g.iter().map(|&x| LineBundleSum::line(x)).collect();
    for (i, &x) in g.iter().enumerate() {
        for &y in g[i..].iter().step_by(3) {
            out.push(LineBundleSum::new(vec![x, y]));
        }
    }
    out
}
