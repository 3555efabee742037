// SPDX-License-Identifier: Apache-2.0

//! Load a scenario (a JSON path or a preset name), run it in compare mode and
//! print the CSV report and summary.
//!
//! cargo run -p lindproj --example run_config -- three-projector
//! cargo run -p lindproj --example run_config -- path/to/scenario.json

use lindproj::config::{parse_config, presets};
use lindproj::run::{run, write_csv, RunMode};

fn main() -> lindproj::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "driven-qubit".to_string());
    let scenario = match presets::text(&arg) {
        Some(text) => parse_config(text)?,
        None => parse_config(&std::fs::read_to_string(&arg)?)?,
    };
    let output = run(&scenario, RunMode::Compare)?;
    write_csv(&output.rows, std::io::stdout().lock())?;
    println!("\n{}", output.summary);
    Ok(())
}
