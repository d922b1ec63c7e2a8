//! The add-instructions subcommand: batch validation of an extension
//! manifest. Validation is all-or-nothing; a manifest with any failing
//! entry is rejected whole, and every failure is reported, not just the
//! first.

use anyhow::anyhow;

use crate::cli::AddInstructionsArgs;
use crate::error::{CliError, CliResult};
use crate::extensions::{read_manifest, registry};

pub fn run(args: &AddInstructionsArgs) -> CliResult {
    let manifest = read_manifest(&args.manifest)?;
    let reports = chainbench::pool::validate_manifest(&manifest, &registry());

    let failures: Vec<String> = reports
        .iter()
        .filter_map(|(id, result)| result.as_ref().err().map(|error| format!("{id}: {error}")))
        .collect();
    if !failures.is_empty() {
        for failure in &failures {
            eprintln!("invalid entry {failure}");
        }
        return Err(CliError::usage(anyhow!(
            "{} of {} manifest entries failed validation; nothing installed",
            failures.len(),
            reports.len()
        )));
    }

    println!(
        "validated {} instructions; pass --pool {} to generate with them",
        reports.len(),
        args.manifest.display()
    );
    Ok(())
}
