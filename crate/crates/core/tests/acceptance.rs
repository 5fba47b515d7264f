//! Runs the full battery once and prints one line per criterion. Built without
//! the libtest harness so the lines are never captured.

use std::process::ExitCode;

use pbw_degen::battery::{run_criterion, Scale, CRITERIA};

fn main() -> ExitCode {
    let scale = Scale::full();
    let mut failed = Vec::new();
    for (id, name) in CRITERIA {
        match run_criterion(id, &scale) {
            Ok(r) => {
                println!("{r}");
                if !r.ok() {
                    failed.push(format!("{id} {name}"));
                }
            }
            Err(e) => {
                println!("[FAIL] {id:>2} {name}: error {e}");
                failed.push(format!("{id} {name}"));
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: {} of {} criteria passed", CRITERIA.len(), CRITERIA.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
