//! Randomized cross-check of the splitting and regularity closed forms.

use std::process::ExitCode;

use clap::Parser;
use scrollcoh::Scroll;
use scrollcoh_cli::harness::{run_round_trips, run_scroll};

#[derive(Parser)]
#[command(name = "scrollcoh-harness", about = "Seeded brute-force cross-checks")]
struct Args {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random bundles per scroll.
    #[arg(long, default_value_t = 1000)]
    cases: usize,
    #[arg(long, default_value_t = 5)]
    max_rank: usize,
    /// Scrolls to test, as A0,A1 pairs.
    #[arg(long = "scroll", value_name = "A0,A1", num_args = 1.., default_values = ["1,1", "1,2", "2,2", "1,3", "2,3"])]
    scrolls: Vec<String>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let mut bad = 0;
    for text in &args.scrolls {
        let s = text
            .split_once(',')
            .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
            .ok_or_else(|| format!("bad scroll {text:?}"))
            .and_then(|(a0, a1)| Scroll::new(a0, a1).map_err(|e| e.to_string()));
        let s = match s {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        };
        let sum = run_scroll(&s, args.seed, args.cases, args.max_rank);
        println!(
            "{s}: {} cases, {} split into O(tH), {} into the three families, {} mismatches",
            sum.cases,
            sum.splits_h,
            sum.splits_acm,
            sum.mismatches.len()
        );
        for m in &sum.mismatches {
            println!("  {} on {}: {}", m.check, m.bundle, m.detail);
        }
        bad += sum.mismatches.len();
    }
    let rt = run_round_trips(args.seed, args.cases);
    println!(
        "spec round trips: {} cases, {} failures",
        args.cases,
        rt.len()
    );
    for r in &rt {
        println!("  {r}");
    }
    bad += rt.len();
    if bad == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
