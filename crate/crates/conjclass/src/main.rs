fn main() {
    std::process::exit(conjclass::cli::run_from_env());
}
