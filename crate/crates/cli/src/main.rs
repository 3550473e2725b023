fn main() {
    std::process::exit(halfguard_cli::run(std::env::args_os()));
}
