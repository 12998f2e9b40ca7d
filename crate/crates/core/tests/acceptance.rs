//! Runs every acceptance check with the default configuration and prints one
//! line per check. Exits with status 1 if any check fails.

use std::process::ExitCode;

use spectral_torsion::verify::{run_all, VerifyConfig};

fn main() -> ExitCode {
    let config = VerifyConfig::default();
    let records = run_all(&config);
    for (i, r) in records.iter().enumerate() {
        println!("{}. {} ({:.2}s)", i + 1, r.summary(), r.elapsed.as_secs_f64());
    }
    let failed = records.iter().filter(|r| !r.passed).count();
    println!("acceptance: {} passed, {failed} failed", records.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
