//! Every claim of the catalog with its time budget, one pass/fail line each.
//! Runs without the libtest harness so the lines are always printed.

use std::time::Instant;

use tord::spaltenstein::DEFAULT_PRIME;
use tord::Engine;
use tord_cli::claims::{catalog, Settings};

/// Claims that fail as computed. The n = 10 pair is the column insertion
/// (a = 7) of a pair related in VCh_9 = DV_9, so any insertion-closed DV
/// contains it; the core `orders` tests freeze that derivation.
const KNOWN_FAILURES: &[usize] = &[6];

fn main() -> std::process::ExitCode {
    let cfg = Settings { include_heavy: true, seed: 2024, prime: DEFAULT_PRIME };
    let mut eng = Engine::new();
    let mut failed = Vec::new();
    for claim in catalog() {
        let t0 = Instant::now();
        let outcome = claim.run(&mut eng, &cfg);
        let took = t0.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > claim.budget => Err(format!("{msg}; took {took:.1?}, budget {:?}", claim.budget)),
            other => other,
        };
        let (tag, msg) = match &outcome {
            Ok(msg) => ("PASS", msg),
            Err(msg) => ("FAIL", msg),
        };
        println!("criterion {:>2} {tag} {} ({took:.2?}): {msg}", claim.id, claim.statement);
        if outcome.is_err() {
            failed.push(claim.id);
        }
    }
    for k in KNOWN_FAILURES {
        if !failed.contains(k) {
            println!("criterion {k:>2} now passes; drop it from KNOWN_FAILURES");
        }
    }
    let unexpected: Vec<usize> = failed.iter().copied().filter(|k| !KNOWN_FAILURES.contains(k)).collect();
    println!("{} of {} criteria pass; known failures {KNOWN_FAILURES:?}", 12 - failed.len(), 12);
    if unexpected.is_empty() {
        std::process::ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {unexpected:?}");
        std::process::ExitCode::FAILURE
    }
}
