use clap::Parser;
use psmooth::args::Cli;
use psmooth::exit;

fn main() {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .format_timestamp(None)
        .init();
    let code = match psmooth::run(&cli) {
        Ok(()) => exit::OK,
        Err(e) if e.is_broken_pipe() => exit::OK,
        Err(e) => {
            eprintln!("psmooth: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
