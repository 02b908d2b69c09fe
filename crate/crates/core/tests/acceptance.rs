//! Runs the twelve acceptance criteria and prints one line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use cometcount::suite::run_criterion;
use rayon::prelude::*;

fn main() -> ExitCode {
    let start = Instant::now();
    let reports: Vec<_> = (1..=12usize)
        .into_par_iter()
        .map(|id| {
            let t = Instant::now();
            (run_criterion(id), t.elapsed())
        })
        .collect();
    for (r, t) in &reports {
        println!("{r} ({:.1}s)", t.as_secs_f64());
    }
    let failed = reports.iter().filter(|(r, _)| !r.passed).count();
    println!("acceptance: {} passed, {failed} failed in {:.1}s", reports.len() - failed, start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
