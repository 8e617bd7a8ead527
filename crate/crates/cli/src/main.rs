fn main() {
    std::process::exit(bayes_stp_cli::run(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr()));
}
