//! Seeded randomized cross-checks of the closed forms against brute force.

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use scrollcoh::splitting::{violating_t, SPLIT_ACM3, SPLIT_TH};
use scrollcoh::{
    decide_split_acm3, decide_split_th, is_pp_regular, is_regular, reg, sum_cohomology, BundleExpr,
    DivisorClass, LineBundleSum, Scroll, SplitVerdict,
};

use crate::parse::parse_bundle_spec;

/// Window of `t` scanned by the brute-force checks.
pub const T_WINDOW: std::ops::RangeInclusive<i64> = -15..=15;

pub fn rng_for(seed: u64, s: &Scroll) -> ChaCha8Rng {
    let salt = (s.a0() as u64) << 32 | s.a1() as u64;
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Half the summands come from `O(tH)`, `O(tH+f)`, `O((t+1)H-f)` so that
/// both splitting verdicts are common.
pub fn random_summand(rng: &mut impl Rng) -> DivisorClass {
    if rng.gen_bool(0.5) {
        let t = rng.gen_range(-4..=4);
        [
            DivisorClass::new(t, 0),
            DivisorClass::new(t, 1),
            DivisorClass::new(t + 1, -1),
        ][rng.gen_range(0..3)]
    } else {
        DivisorClass::new(rng.gen_range(-5..=5), rng.gen_range(-6..=6))
    }
}

pub fn random_sum(rng: &mut impl Rng, max_rank: usize) -> LineBundleSum {
    let n = rng.gen_range(1..=max_rank);
    LineBundleSum::new((0..n).map(|_| random_summand(rng)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub scroll: Scroll,
    pub bundle: LineBundleSum,
    pub check: &'static str,
    pub detail: String,
}

fn brute_violations(s: &Scroll, b: &LineBundleSum, y: i64) -> BTreeSet<i64> {
    T_WINDOW
        .filter(|&t| sum_cohomology(s, b, DivisorClass::new(t, y)).h1 > 0)
        .collect()
}

/// Every check for one sum; empty when all agree.
pub fn check_sum(s: &Scroll, b: &LineBundleSum) -> Vec<Mismatch> {
    let mut out = Vec::new();
    let mut fail = |check, detail: String| {
        out.push(Mismatch {
            scroll: *s,
            bundle: b.clone(),
            check,
            detail,
        })
    };
    let e = BundleExpr::Sum(b.clone());

    let th = decide_split_th(s, &e);
    let th_expected = b.summands().iter().all(|d| d.f == 0);
    if matches!(th, SplitVerdict::Splits(_)) != th_expected {
        fail("split-h", format!("{th:?}"));
    }
    let acm3 = decide_split_acm3(s, &e);
    let acm3_expected = b.summands().iter().all(|d| (-1..=1).contains(&d.f));
    if matches!(acm3, SplitVerdict::Splits(_)) != acm3_expected {
        fail("split-acm", format!("{acm3:?}"));
    }

    for cond in SPLIT_TH.iter().chain(SPLIT_ACM3.iter()) {
        let y = cond.f_offset(s);
        let closed: BTreeSet<i64> = violating_t(s, b, y)
            .into_iter()
            .filter(|t| T_WINDOW.contains(t))
            .collect();
        let brute = brute_violations(s, b, y);
        if closed != brute {
            fail("violating-t", format!("{cond}: {closed:?} vs {brute:?}"));
        }
    }

    let regular = b
        .summands()
        .iter()
        .all(|d| d.h >= 0 && d.f >= -d.h * s.a0());
    if is_regular(s, &e).verdict.is_true() != regular {
        fail("regular", String::new());
    }
    let brute_reg = (-60..60).find(|&p| is_pp_regular(s, &e, p, 0).verdict.is_true());
    if reg(s, &e).ok() != brute_reg {
        fail("reg", format!("{:?} vs {brute_reg:?}", reg(s, &e)));
    }
    out
}

#[derive(Debug, Clone, Default)]
pub struct Summary {
    pub cases: usize,
    pub splits_h: usize,
    pub splits_acm: usize,
    pub mismatches: Vec<Mismatch>,
}

/// `cases` random sums of rank at most `max_rank` on `s`.
pub fn run_scroll(s: &Scroll, seed: u64, cases: usize, max_rank: usize) -> Summary {
    let mut rng = rng_for(seed, s);
    let mut sum = Summary::default();
    for _ in 0..cases {
        let b = random_sum(&mut rng, max_rank);
        sum.cases += 1;
        sum.splits_h += b.summands().iter().all(|d| d.f == 0) as usize;
        sum.splits_acm += b.summands().iter().all(|d| (-1..=1).contains(&d.f)) as usize;
        sum.mismatches.extend(check_sum(s, &b));
    }
    sum
}

fn ws(rng: &mut impl Rng) -> &'static str {
    ["", "", " ", "  "][rng.gen_range(0..4)]
}

fn random_term(rng: &mut impl Rng, depth: u32, text: &mut String) -> usize {
    let mut copies = 1;
    if rng.gen_bool(0.25) {
        copies = rng.gen_range(1..=3);
        text.push_str(&format!("{copies}{}*{}", ws(rng), ws(rng)));
    }
    let rank = if depth > 0 && rng.gen_bool(0.3) {
        text.push_str(&format!("ext{}({}", ws(rng), ws(rng)));
        let a = random_spec_into(rng, depth - 1, text);
        text.push_str(&format!("{};{}", ws(rng), ws(rng)));
        let b = random_spec_into(rng, depth - 1, text);
        text.push_str(&format!("{})", ws(rng)));
        a + b
    } else {
        let (h, f): (i64, i64) = (rng.gen_range(-3..=3), rng.gen_range(-5..=5));
        text.push_str(&format!("O({h},{}{f})", ws(rng)));
        1
    };
    if rng.gen_bool(0.2) {
        let m = rng.gen_range(1..=3);
        text.push_str(&format!("{}^{m}", ws(rng)));
        copies *= m;
    }
    copies * rank
}

fn random_spec_into(rng: &mut impl Rng, depth: u32, text: &mut String) -> usize {
    let terms = rng.gen_range(1..=3);
    let mut rank = 0;
    for i in 0..terms {
        if i > 0 {
            text.push_str(&format!("{}+{}", ws(rng), ws(rng)));
        }
        rank += random_term(rng, depth, text);
    }
    rank
}

/// A random spec string in the grammar and the rank it denotes.
pub fn random_spec(rng: &mut impl Rng, depth: u32) -> (String, usize) {
    let mut text = String::new();
    let rank = random_spec_into(rng, depth, &mut text);
    (text, rank)
}

/// `parse`, print, `parse` again: both parses agree, the printed form is a
/// fixed point and the rank is the one generated.
pub fn check_round_trip(text: &str, rank: usize) -> Result<(), String> {
    let e = parse_bundle_spec(text).map_err(|err| format!("{text:?}: {err}"))?;
    let printed = e.to_string();
    let again = parse_bundle_spec(&printed).map_err(|err| format!("{printed:?}: {err}"))?;
    if again != e {
        return Err(format!("{text:?} -> {printed:?} parses differently"));
    }
    if again.to_string() != printed {
        return Err(format!("{printed:?} is not a fixed point"));
    }
    if e.rank() != rank {
        return Err(format!("{text:?}: rank {} != {rank}", e.rank()));
    }
    Ok(())
}

pub fn run_round_trips(seed: u64, cases: usize) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..cases)
        .filter_map(|_| {
            let (text, rank) = random_spec(&mut rng, 2);
            check_round_trip(&text, rank).err()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_cases() {
        let s = Scroll::new(1, 2).unwrap();
        let a: Vec<_> = (0..5)
            .map({
                let mut r = rng_for(7, &s);
                move |_| random_sum(&mut r, 5)
            })
            .collect();
        let mut r = rng_for(7, &s);
        let b: Vec<_> = (0..5).map(|_| random_sum(&mut r, 5)).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn small_run_is_clean() {
        for (a0, a1) in [(1, 1), (1, 2)] {
            let s = Scroll::new(a0, a1).unwrap();
            let sum = run_scroll(&s, 1, 50, 5);
            assert!(sum.mismatches.is_empty(), "{:?}", sum.mismatches);
            assert!(sum.splits_h > 0 && sum.splits_acm > sum.splits_h);
        }
    }

    #[test]
    fn round_trips() {
        assert_eq!(run_round_trips(3, 200), Vec::<String>::new());
    }
}
