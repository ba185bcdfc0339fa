fn main() {
    std::process::exit(lie_entropy_cli::run(std::env::args_os()));
}
