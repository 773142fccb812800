//! Runs one gallery entry (default: dual_numbers) and prints its checks.
use hochcyc::gallery::{run_entry, Settings};

fn main() -> hochcyc::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "dual_numbers".into());
    let outcome = run_entry(&name, &Settings::default())?;
    print!("{}", outcome.to_text());
    Ok(())
}
