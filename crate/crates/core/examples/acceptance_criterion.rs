//! Runs one acceptance criterion (default 13) and prints every check.
//!
//! `cargo run --release --example acceptance_criterion -- 9`

use hochcyc::gallery::acceptance::{criteria, run_one};
use hochcyc::gallery::Settings;

fn main() {
    let id: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(13);
    let Some(c) = criteria().into_iter().find(|c| c.id == id) else {
        eprintln!("criteria are numbered 1 to 13");
        std::process::exit(2);
    };
    print!("{}", run_one(&c, &Settings::default()).to_text());
}
