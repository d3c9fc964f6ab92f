//! Acceptance criteria, one line of output per criterion.
//!
//! Runs without the test harness: `cargo test -p superhopf --test acceptance`.
//! Criterion 6 is optional and reported without failing the run.

use std::process::ExitCode;
use std::time::Duration;

use superhopf::suites::{self, Report, Suite};
use superhopf::Sym;

const SEED: u64 = 0x5eed;

struct Criterion {
    number: usize,
    title: &'static str,
    suite: Suite,
    max_degree: usize,
    budget: Duration,
    required: bool,
}

const CRITERIA: [Criterion; 7] = [
    Criterion {
        number: 1,
        title: "golden examples",
        suite: Suite::Golden,
        max_degree: 0,
        budget: Duration::from_secs(1),
        required: true,
    },
    Criterion {
        number: 2,
        title: "sQSym Hopf suite",
        suite: Suite::HopfQsym,
        max_degree: 5,
        budget: Duration::from_secs(60),
        required: true,
    },
    Criterion {
        number: 3,
        title: "oracle suite",
        suite: Suite::Oracle,
        max_degree: 4,
        budget: Duration::from_secs(120),
        required: true,
    },
    Criterion {
        number: 4,
        title: "Λ suite",
        suite: Suite::HopfSym,
        max_degree: 5,
        budget: Duration::from_secs(60),
        required: true,
    },
    Criterion {
        number: 5,
        title: "Schur suite",
        suite: Suite::Schur,
        max_degree: 4,
        budget: Duration::from_secs(300),
        required: true,
    },
    Criterion {
        number: 6,
        title: "Cauchy check",
        suite: Suite::Cauchy,
        max_degree: 3,
        budget: Duration::from_secs(300),
        required: false,
    },
    Criterion {
        number: 7,
        title: "duality triangle",
        suite: Suite::Duality,
        max_degree: 5,
        budget: Duration::from_secs(60),
        required: true,
    },
];

fn line(c: &Criterion, r: &Report) -> String {
    let in_time = r.elapsed <= c.budget;
    let status = if r.passed() && in_time { "PASS" } else { "FAIL" };
    let optional = if c.required { "" } else { ", optional" };
    let mut s = format!(
        "{status} criterion {}: {} ({} checks, {:.2?} of {:?}{optional})",
        c.number, c.title, r.checks, r.elapsed, c.budget
    );
    if let Some(f) = &r.failure {
        s.push_str(&format!(": {f}"));
    } else if !in_time {
        s.push_str(": over time budget");
    }
    s
}

fn main() -> ExitCode {
    // One Λ instance, so that later criteria reuse earlier transition tables
    // exactly as a long-running session would.
    let sym = Sym::new();
    let mut failed = 0;
    for c in &CRITERIA {
        let report = suites::run_with(&sym, c.suite, c.max_degree, SEED).expect("within suite limits");
        let text = line(c, &report);
        println!("{text}");
        if c.required && !text.starts_with("PASS") {
            failed += 1;
        }
        if c.suite == Suite::Cauchy {
            // The kernel does equal Σ (-1)^{C(m,2)} s_Λ(x) s*_Λ(y): the sign
            // comes from collecting the θs of ∏ θ_i φ_j ahead of the φs.
            let signed = suites::run_with(&sym, Suite::CauchySigned, c.max_degree, SEED).expect("within suite limits");
            println!("    with the sign (-1)^C(m,2): {signed}");
            if !signed.passed() {
                failed += 1;
            }
        }
    }
    if failed > 0 {
        println!("{failed} required check(s) failed");
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
