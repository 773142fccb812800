fn main() {
    std::process::exit(hochcyc::cli::run(std::env::args_os()));
}
