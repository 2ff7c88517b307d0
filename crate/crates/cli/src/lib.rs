//! Command-line front end: argument definitions, scan records, the result
//! cache and the command implementations behind the `psmooth` binary.

pub mod args;
pub mod cache;
pub mod commands;
pub mod error;
pub mod record;

pub use error::{exit, CliError, CliResult};
pub use record::{AbsF, ScanRecord};

use args::{Cli, Command};

/// Runs a parsed command line, writing to standard output.
pub fn run(cli: &Cli) -> CliResult<()> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match &cli.command {
        Command::Mult(a) => commands::mult(a, &mut out),
        Command::Locus(a) => commands::locus(a, &mut out),
        Command::Scan(a) => {
            let stats = commands::scan(a)?;
            log::info!(
                "{} elements ({} cached, {} computed), {} records",
                stats.elements,
                stats.cached,
                stats.computed,
                stats.records
            );
            Ok(())
        }
        Command::Zoo(z) => commands::zoo(z, &mut out),
    }
}
