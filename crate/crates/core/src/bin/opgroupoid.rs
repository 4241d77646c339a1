fn main() {
    let report = opgroupoid::cli::run_command(std::env::args());
    print!("{}", report.render());
    std::process::exit(report.exit_code);
}
